use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use natpair::verify::{
    check_base_n_perfect, check_base_n_shells, check_bijection, check_proportional, check_shell_numbering,
};
use natpair::{
    floor_root, rs_pair, rs_unpair, Counterexample, CurveSpec, Nat, Outcome, PackPlan, Proportions, TuplerHandle,
    BUILTIN_CURVES,
};
use serde_json::{json, Value};

use crate::args::{
    Command, CurveOp, CurveSource, PackOp, PlanSource, RsOp, ShellKind, TargetArgs, TraceFormat, VerifyCmd,
};

/// Why a command did not produce a result.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(String),
}

impl From<natpair::Error> for Failure {
    fn from(e: natpair::Error) -> Self {
        match e {
            natpair::Error::Usage(msg) => Failure::Usage(msg),
            other => Failure::Domain(other.to_string()),
        }
    }
}

/// What a successful command prints, in both output modes.
pub struct Report {
    pub command: String,
    pub args: Vec<Value>,
    pub result: Value,
    pub plain: String,
    pub witness: Option<Value>,
    /// Counterexamples exit with 3.
    pub counterexample: bool,
}

impl Report {
    fn new(command: &str, args: Vec<Value>, result: Value, plain: String) -> Self {
        Report {
            command: command.to_string(),
            args,
            result,
            plain,
            witness: None,
            counterexample: false,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut obj = json!({
            "command": self.command,
            "args": self.args,
            "result": self.result,
        });
        if let Some(w) = &self.witness {
            obj["witness"] = w.clone();
        }
        obj
    }
}

/// A natural as an exact JSON number.
pub fn num(v: &Nat) -> Value {
    Value::Number(v.to_string().parse().expect("decimal digits form a JSON number"))
}

fn nums(vs: &[Nat]) -> Value {
    Value::Array(vs.iter().map(num).collect())
}

fn spaced(vs: &[Nat]) -> String {
    vs.iter().map(Nat::to_string).collect::<Vec<_>>().join(" ")
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Domain(format!("cannot read {}: {e}", path.display())))
}

fn load_curve(source: &CurveSource) -> Result<CurveSpec, Failure> {
    match (&source.curve, &source.spec) {
        (Some(name), _) => Ok(CurveSpec::builtin(name)?),
        (None, Some(path)) => Ok(CurveSpec::from_json(&read(path)?)?),
        (None, None) => Err(Failure::Usage("one of --curve or --spec is required".into())),
    }
}

fn load_plan(source: &PlanSource) -> Result<PackPlan, Failure> {
    match (&source.widths, &source.plan) {
        (Some(widths), _) => Ok(PackPlan::plan(widths)?),
        (None, Some(path)) => Ok(PackPlan::from_json(&read(path)?)?),
        (None, None) => Err(Failure::Usage("one of --widths or --plan is required".into())),
    }
}

fn proportions(a: Option<u32>, b: Option<u32>, why: &str) -> Result<Proportions, Failure> {
    match (a, b) {
        (Some(a), Some(b)) => Ok(Proportions::new(a, b)?),
        _ => Err(Failure::Usage(format!("{why} needs both --a and --b"))),
    }
}

fn resolve_target(target: &TargetArgs, a: Option<u32>, b: Option<u32>) -> Result<TuplerHandle<Nat>, Failure> {
    let name = match (&target.target, &target.spec) {
        (Some(name), _) => name.as_str(),
        (None, Some(path)) => return Ok(TuplerHandle::curve(CurveSpec::from_json(&read(path)?)?)),
        (None, None) => return Err(Failure::Usage("one of --target or --spec is required".into())),
    };
    if name == "pab" {
        return Ok(TuplerHandle::proportional(proportions(a, b, "target pab")?));
    }
    if let Some(d) = name.strip_prefix("rs").and_then(|d| d.parse::<usize>().ok()) {
        if d == 0 {
            return Err(Failure::Domain("rs needs at least one coordinate".into()));
        }
        return Ok(TuplerHandle::rosenberg_strong(d));
    }
    if let Some((a, b)) = name
        .strip_prefix('p')
        .and_then(|rest| rest.split_once(','))
        .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
    {
        return Ok(TuplerHandle::proportional(Proportions::new(a, b)?));
    }
    if BUILTIN_CURVES.contains(&name) {
        return Ok(TuplerHandle::curve(CurveSpec::builtin(name)?));
    }
    Err(Failure::Domain(format!(
        "unknown target `{name}` (expected rsD, pab, pA,B, a curve name ({}) or --spec FILE)",
        BUILTIN_CURVES.join(", ")
    )))
}

fn verdict(command: &str, t: &TuplerHandle<Nat>, outcome: Outcome<Nat>) -> Report {
    let args = vec![json!(t.label())];
    match outcome {
        Outcome::Pass => Report::new(command, args, json!("pass"), format!("pass: {}", t.label())),
        Outcome::Fail(c) => {
            let mut report = Report::new(command, args, json!("counterexample"), witness_text(t, &c));
            report.witness = Some(json!({
                "predicate": c.predicate.to_string(),
                "inputs": c.inputs.iter().map(|p| nums(p)).collect::<Vec<_>>(),
                "observed": nums(&c.observed),
            }));
            report.counterexample = true;
            report
        }
    }
}

fn witness_text(t: &TuplerHandle<Nat>, c: &Counterexample<Nat>) -> String {
    let mut out = format!("counterexample: {} violates {}", t.label(), c.predicate);
    for p in &c.inputs {
        let _ = write!(out, "\ninput: {}", spaced(p));
    }
    let _ = write!(out, "\nobserved: {}", spaced(&c.observed));
    out
}

fn trace_svg(points: &[Vec<Nat>]) -> Result<String, Failure> {
    let coords: Vec<(u64, u64)> = points
        .iter()
        .map(|p| match p.as_slice() {
            [x, y] => Ok((
                u64::try_from(x).unwrap_or(u64::MAX),
                u64::try_from(y).unwrap_or(u64::MAX),
            )),
            _ => Err(Failure::Domain("svg traces are only drawn for 2-D curves".into())),
        })
        .collect::<Result<_, _>>()?;
    let width = coords.iter().map(|c| c.0).max().unwrap_or(0) + 1;
    let height = coords.iter().map(|c| c.1).max().unwrap_or(0) + 1;
    // SVG's y axis points down; flip so the origin sits bottom-left.
    let pts = coords
        .iter()
        .map(|(x, y)| format!("{x},{}", height - 1 - y))
        .collect::<Vec<_>>()
        .join(" ");
    Ok(format!(
        concat!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-0.5 -0.5 {w} {h}\" width=\"{pw}\" height=\"{ph}\">\n",
            "  <polyline points=\"{pts}\" fill=\"none\" stroke=\"black\" stroke-width=\"0.1\" ",
            "stroke-linejoin=\"round\"/>\n",
            "</svg>"
        ),
        w = width,
        h = height,
        pw = width * 32,
        ph = height * 32,
        pts = pts
    ))
}

pub fn execute(command: Command) -> Result<Report, Failure> {
    match command {
        Command::Pair { a, b, x, y } => {
            let z = Proportions::new(a, b)?.pair(&x, &y)?;
            Ok(Report::new("pair", vec![num(&x), num(&y)], num(&z), z.to_string()))
        }
        Command::Unpair { a, b, z } => {
            let (x, y) = Proportions::new(a, b)?.unpair(&z)?;
            let pt = [x, y];
            Ok(Report::new("unpair", vec![num(&z)], nums(&pt), spaced(&pt)))
        }
        Command::Rs { d, op } => match op {
            RsOp::Pair { values } => {
                if values.len() != d {
                    return Err(Failure::Usage(format!(
                        "--d {d} needs {d} values, got {}",
                        values.len()
                    )));
                }
                let z = rs_pair(&values)?;
                Ok(Report::new(
                    "rs pair",
                    nums(&values).as_array().unwrap().clone(),
                    num(&z),
                    z.to_string(),
                ))
            }
            RsOp::Unpair { z } => {
                let xs = rs_unpair(d, &z)?;
                Ok(Report::new("rs unpair", vec![num(&z)], nums(&xs), spaced(&xs)))
            }
        },
        Command::Curve { op } => curve(op),
        Command::Verify { check } => verify(check),
        Command::Pack { op } => pack(op),
    }
}

fn curve(op: CurveOp) -> Result<Report, Failure> {
    match op {
        CurveOp::Encode { source, coords } => {
            let z = load_curve(&source)?.encode(&coords)?;
            Ok(Report::new(
                "curve encode",
                nums(&coords).as_array().unwrap().clone(),
                num(&z),
                z.to_string(),
            ))
        }
        CurveOp::Decode { source, z } => {
            let xs = load_curve(&source)?.decode(&z)?;
            Ok(Report::new("curve decode", vec![num(&z)], nums(&xs), spaced(&xs)))
        }
        CurveOp::Trace { source, count, format } => {
            let spec = load_curve(&source)?;
            let points: Vec<Vec<Nat>> = spec.trace(count)?;
            let as_json = Value::Array(points.iter().map(|p| nums(p)).collect());
            let args = vec![json!(spec.name()), json!(count)];
            let (result, plain) = match format {
                TraceFormat::Csv => {
                    let lines: Vec<String> = points
                        .iter()
                        .map(|p| p.iter().map(Nat::to_string).collect::<Vec<_>>().join(","))
                        .collect();
                    (as_json, lines.join("\n"))
                }
                TraceFormat::Json => {
                    let text = as_json.to_string();
                    (as_json, text)
                }
                TraceFormat::Svg => {
                    let svg = trace_svg(&points)?;
                    (json!(svg), svg)
                }
            };
            Ok(Report::new("curve trace", args, result, plain))
        }
    }
}

fn verify(check: VerifyCmd) -> Result<Report, Failure> {
    match check {
        VerifyCmd::Perfect {
            target,
            a,
            b,
            n,
            kmax,
            budget,
        } => {
            let t = resolve_target(&target, a, b)?;
            Ok(verdict(
                "verify perfect",
                &t,
                check_base_n_perfect(&t, n, kmax, budget)?,
            ))
        }
        VerifyCmd::Proportional {
            target,
            a,
            b,
            n,
            kmax,
            budget,
        } => {
            let t = resolve_target(&target, Some(a), Some(b))?;
            let p = Proportions::new(a, b)?;
            Ok(verdict(
                "verify proportional",
                &t,
                check_proportional(&t, n, p, kmax, budget)?,
            ))
        }
        VerifyCmd::Shells {
            target,
            s,
            a,
            b,
            n,
            bounds,
        } => {
            let t = resolve_target(&target, a, b)?;
            let bounds: Vec<Nat> = match bounds.as_slice() {
                [side] => vec![Nat::from(*side); t.arity()],
                many => many.iter().map(|&v| Nat::from(v)).collect(),
            };
            let outcome = match s {
                ShellKind::Max => {
                    let max = |xs: &[Nat]| Ok(xs.iter().max().cloned().unwrap_or_default());
                    check_shell_numbering(&t, &max, &bounds)?
                }
                ShellKind::Len => check_base_n_shells(&t, n, &bounds)?,
                ShellKind::Root => {
                    let p = proportions(a, b, "--s root")?;
                    if t.arity() != 2 {
                        return Err(Failure::Usage("--s root applies to pairing functions only".into()));
                    }
                    let root = move |xs: &[Nat]| Ok(floor_root(&xs[0], p.a())?.max(floor_root(&xs[1], p.b())?));
                    check_shell_numbering(&t, &root, &bounds)?
                }
            };
            Ok(verdict("verify shells", &t, outcome))
        }
        VerifyCmd::Bijection { target, a, b, zmax } => {
            let t = resolve_target(&target, a, b)?;
            Ok(verdict("verify bijection", &t, check_bijection(&t, &zmax)?))
        }
    }
}

fn pack(op: PackOp) -> Result<Report, Failure> {
    match op {
        PackOp::Plan { source } => {
            let plan = load_plan(&source)?;
            let doc: Value = serde_json::from_str(&plan.to_json()).expect("plan JSON reparses");
            Ok(Report::new(
                "pack plan",
                vec![json!(plan.widths())],
                doc,
                plan.to_json(),
            ))
        }
        PackOp::Encode { source, values } => {
            let z = load_plan(&source)?.pack(&values)?;
            Ok(Report::new(
                "pack encode",
                nums(&values).as_array().unwrap().clone(),
                num(&z),
                z.to_string(),
            ))
        }
        PackOp::Decode { source, z } => {
            let fields = load_plan(&source)?.unpack(&z)?;
            Ok(Report::new(
                "pack decode",
                vec![num(&z)],
                nums(&fields),
                spaced(&fields),
            ))
        }
    }
}
