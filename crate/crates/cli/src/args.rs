use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use natpair::Nat;
use num_traits::Num;

/// Parses a natural number written in decimal or as `0x`-prefixed hex.
pub fn parse_nat(s: &str) -> Result<Nat, String> {
    let s = s.trim();
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => Nat::from_str_radix(hex, 16),
        None => Nat::from_str_radix(s, 10),
    };
    parsed.map_err(|_| format!("`{s}` is not a natural number (decimal or 0x hex)"))
}

#[derive(Debug, Parser)]
#[command(
    name = "natpair",
    version,
    about = "Pairing functions, space-filling curves and bit-budgeted keys"
)]
pub struct Cli {
    /// Print a single JSON object instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Encode (x, y) with p_{a,b}.
    Pair {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(value_parser = parse_nat)]
        x: Nat,
        #[arg(value_parser = parse_nat)]
        y: Nat,
    },
    /// Decode z into "x y" with p_{a,b}.
    Unpair {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(value_parser = parse_nat)]
        z: Nat,
    },
    /// Rosenberg-Strong d-tupling.
    Rs {
        #[arg(long)]
        d: usize,
        #[command(subcommand)]
        op: RsOp,
    },
    /// Discrete space-filling curves.
    Curve {
        #[command(subcommand)]
        op: CurveOp,
    },
    /// Bounded property checks; exit 3 with a witness on failure.
    Verify {
        #[command(subcommand)]
        check: VerifyCmd,
    },
    /// Pack fixed-width fields into one key.
    Pack {
        #[command(subcommand)]
        op: PackOp,
    },
}

#[derive(Debug, Subcommand)]
pub enum RsOp {
    Pair {
        #[arg(required = true, value_parser = parse_nat)]
        values: Vec<Nat>,
    },
    Unpair {
        #[arg(value_parser = parse_nat)]
        z: Nat,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct CurveSource {
    /// Built-in curve name.
    #[arg(long)]
    pub curve: Option<String>,
    /// JSON curve definition.
    #[arg(long)]
    pub spec: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TraceFormat {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Subcommand)]
pub enum CurveOp {
    Encode {
        #[command(flatten)]
        source: CurveSource,
        #[arg(required = true, value_parser = parse_nat)]
        coords: Vec<Nat>,
    },
    Decode {
        #[command(flatten)]
        source: CurveSource,
        #[arg(value_parser = parse_nat)]
        z: Nat,
    },
    /// Decode 0 .. count in order.
    Trace {
        #[command(flatten)]
        source: CurveSource,
        #[arg(long)]
        count: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: TraceFormat,
    },
}

/// The encoder under test: rsD, pab (uses --a/--b), pA,B, a built-in curve
/// name, or --spec FILE.
#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct TargetArgs {
    #[arg(long)]
    pub target: Option<String>,
    /// JSON curve definition to verify.
    #[arg(long)]
    pub spec: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ShellKind {
    /// max of the coordinates.
    Max,
    /// max of the base-n lengths (uses --n).
    Len,
    /// max(floor(x^(1/a)), floor(y^(1/b))) (uses --a/--b).
    Root,
}

pub const DEFAULT_BUDGET: u64 = 1 << 20;

#[derive(Debug, Subcommand)]
pub enum VerifyCmd {
    /// len_n(f(x)) <= d * max len_n(x_i) over [0, n^kmax)^d.
    Perfect {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long)]
        a: Option<u32>,
        #[arg(long)]
        b: Option<u32>,
        #[arg(long, default_value_t = 2)]
        n: u64,
        #[arg(long)]
        kmax: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Constants of proportionality --a/--b hold for k <= kmax.
    Proportional {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long, default_value_t = 2)]
        n: u64,
        #[arg(long)]
        kmax: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// The shell function orders the codes on the box.
    Shells {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, value_enum, default_value = "max")]
        s: ShellKind,
        #[arg(long)]
        a: Option<u32>,
        #[arg(long)]
        b: Option<u32>,
        #[arg(long, default_value_t = 2)]
        n: u64,
        /// Per-axis bound, one value for every axis or one per axis.
        #[arg(long = "box", value_delimiter = ',', required = true)]
        bounds: Vec<u64>,
    },
    /// forward(backward(z)) = z for z <= zmax.
    Bijection {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long)]
        a: Option<u32>,
        #[arg(long)]
        b: Option<u32>,
        #[arg(long, value_parser = parse_nat)]
        zmax: Nat,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct PlanSource {
    /// Comma-separated field widths in bits.
    #[arg(long, value_delimiter = ',')]
    pub widths: Option<Vec<u64>>,
    /// JSON pack plan.
    #[arg(long)]
    pub plan: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum PackOp {
    /// Print the plan as JSON.
    Plan {
        #[command(flatten)]
        source: PlanSource,
    },
    Encode {
        #[command(flatten)]
        source: PlanSource,
        #[arg(required = true, value_parser = parse_nat)]
        values: Vec<Nat>,
    },
    Decode {
        #[command(flatten)]
        source: PlanSource,
        #[arg(value_parser = parse_nat)]
        z: Nat,
    },
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn grammar_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn numbers_in_decimal_and_hex() {
        assert_eq!(parse_nat("255").unwrap(), Nat::from(255u32));
        assert_eq!(parse_nat("0xff").unwrap(), Nat::from(255u32));
        assert_eq!(parse_nat("0XFF").unwrap(), Nat::from(255u32));
        assert_eq!(parse_nat("0x10000000000000000").unwrap(), Nat::from(1u128 << 64));
        assert!(parse_nat("-1").is_err());
        assert!(parse_nat("0x").is_err());
        assert!(parse_nat("12a").is_err());
    }
}
