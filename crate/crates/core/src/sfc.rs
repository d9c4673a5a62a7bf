//! Discrete space-filling curves defined by permutation tables.
//!
//! A base-`n`, `d`-dimensional curve is fixed by a seed permutation `tau` and
//! one permutation `sigma_i` per output digit, all acting on the `N = n^d`
//! symbols of a single digit cell. A point whose longest coordinate has `m`
//! base-`n` digits is encoded most significant digit first: the digit column
//! `c_j` (coordinate digits packed as `n^{d-1} c_1 + ... + c_d`) goes through
//! the running permutation `P_j`, where `P_{m-1} = sigma_0^{-(m-1)} . tau`
//! and `P_{j-1} = sigma_{z_j} . P_j`. The outputs `z_j` are the base-`N`
//! digits of the code.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::intmath::len_base;
use crate::natural::{add, mul, small, Natural};

/// A bijection on `{0, .., len - 1}`, stored as its bottom row `[p(0), p(1), ..]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(mapping: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; mapping.len()];
        for &v in &mapping {
            match seen.get_mut(v) {
                Some(s) if !*s => *s = true,
                Some(_) => return Err(Error::domain(format!("value {v} appears twice"))),
                None => {
                    return Err(Error::domain(format!(
                        "value {v} is out of range for {} symbols",
                        mapping.len()
                    )))
                }
            }
        }
        Ok(Permutation(mapping))
    }

    pub fn identity(len: usize) -> Self {
        Permutation((0..len).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Permutation(inv)
    }

    /// `self . other`, i.e. `x -> self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::domain(format!(
                "cannot compose permutations on {} and {} symbols",
                self.len(),
                other.len()
            )));
        }
        Ok(Permutation(other.0.iter().map(|&i| self.0[i]).collect()))
    }

    fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut cycles = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.0[i];
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Least `k >= 1` with `self^k = I`.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    /// `self^e`; negative exponents use the inverse. Each cycle is rotated
    /// by `e` modulo its length, so the cost does not depend on `|e|`.
    pub fn pow(&self, e: i128) -> Self {
        let mut out = vec![0; self.len()];
        for cycle in self.cycles() {
            let len = cycle.len() as i128;
            let shift = e.rem_euclid(len) as usize;
            for (i, &v) in cycle.iter().enumerate() {
                out[v] = cycle[(i + shift) % cycle.len()];
            }
        }
        Permutation(out)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.0)
    }
}

/// Names accepted by [`CurveSpec::builtin`].
pub const BUILTIN_CURVES: [&str; 6] = ["peano3", "hilbert2", "zorder2", "gray2", "nonisometric2", "hilbert3"];

/// A validated curve definition plus precomputed inverses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveSpec {
    name: String,
    base: u32,
    dim: u32,
    tau: Permutation,
    sigmas: Vec<Permutation>,
    tau_inv: Permutation,
    sigma_invs: Vec<Permutation>,
}

impl CurveSpec {
    pub fn new(name: impl Into<String>, base: u32, dim: u32, tau: Vec<usize>, sigmas: Vec<Vec<usize>>) -> Result<Self> {
        if base < 2 {
            return Err(Error::field("base", format!("must be at least 2, got {base}")));
        }
        if !(2..=3).contains(&dim) {
            return Err(Error::field("dim", format!("must be 2 or 3, got {dim}")));
        }
        let symbols = (base as usize)
            .checked_pow(dim)
            .ok_or_else(|| Error::field("base", "too many symbols per digit"))?;
        let table = |field: String, row: Vec<usize>| -> Result<Permutation> {
            if row.len() != symbols {
                return Err(Error::field(
                    field,
                    format!("expected {symbols} entries, got {}", row.len()),
                ));
            }
            Permutation::new(row).map_err(|e| Error::field(field, e.to_string()))
        };
        let tau = table("tau".into(), tau)?;
        if tau.apply(0) != 0 {
            return Err(Error::field("tau", "must map 0 to 0"));
        }
        if sigmas.len() != symbols {
            return Err(Error::field(
                "sigmas",
                format!("expected {symbols} permutations, got {}", sigmas.len()),
            ));
        }
        let sigmas = sigmas
            .into_iter()
            .enumerate()
            .map(|(i, row)| table(format!("sigmas[{i}]"), row))
            .collect::<Result<Vec<_>>>()?;
        if sigmas[0].apply(0) != 0 {
            return Err(Error::field("sigmas[0]", "must map 0 to 0"));
        }
        Ok(CurveSpec {
            name: name.into(),
            base,
            dim,
            tau_inv: tau.inverse(),
            sigma_invs: sigmas.iter().map(Permutation::inverse).collect(),
            tau,
            sigmas,
        })
    }

    pub fn builtin(name: &str) -> Result<Self> {
        let i4 = || vec![0, 1, 2, 3];
        let i9 = || (0..9).collect::<Vec<_>>();
        let spec = match name {
            "peano3" => {
                let s17 = || vec![6, 7, 8, 3, 4, 5, 0, 1, 2];
                let s35 = || vec![2, 1, 0, 5, 4, 3, 8, 7, 6];
                CurveSpec::new(
                    name,
                    3,
                    2,
                    vec![0, 1, 2, 5, 4, 3, 6, 7, 8],
                    vec![
                        i9(),
                        s17(),
                        i9(),
                        s35(),
                        vec![8, 7, 6, 5, 4, 3, 2, 1, 0],
                        s35(),
                        i9(),
                        s17(),
                        i9(),
                    ],
                )
            }
            "hilbert2" => CurveSpec::new(
                name,
                2,
                2,
                vec![0, 1, 3, 2],
                vec![vec![0, 3, 2, 1], i4(), i4(), vec![2, 1, 0, 3]],
            ),
            "zorder2" => CurveSpec::new(name, 2, 2, i4(), vec![i4(); 4]),
            "gray2" => CurveSpec::new(
                name,
                2,
                2,
                vec![0, 1, 3, 2],
                vec![i4(), vec![2, 3, 0, 1], vec![2, 3, 0, 1], i4()],
            ),
            "nonisometric2" => CurveSpec::new(
                name,
                2,
                2,
                i4(),
                vec![vec![0, 3, 1, 2], vec![0, 1, 3, 2], vec![1, 0, 2, 3], vec![1, 2, 0, 3]],
            ),
            "hilbert3" => {
                let s12 = || vec![0, 1, 6, 7, 4, 5, 2, 3];
                let s34 = || vec![2, 3, 0, 1, 6, 7, 4, 5];
                let s56 = || vec![4, 5, 2, 3, 0, 1, 6, 7];
                CurveSpec::new(
                    name,
                    2,
                    3,
                    vec![0, 1, 3, 2, 7, 6, 4, 5],
                    vec![
                        vec![0, 7, 4, 3, 2, 5, 6, 1],
                        s12(),
                        s12(),
                        s34(),
                        s34(),
                        s56(),
                        s56(),
                        vec![6, 1, 2, 5, 4, 3, 0, 7],
                    ],
                )
            }
            _ => {
                return Err(Error::UnknownCurve {
                    name: name.to_string(),
                    valid: BUILTIN_CURVES.join(", "),
                })
            }
        };
        Ok(spec.expect("built-in tables are valid"))
    }

    /// Parses and validates a curve document:
    /// `{"name", "base", "dim", "tau": [..], "sigmas": [[..], ..]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Value = serde_json::from_str(text).map_err(|e| Error::field("document", e.to_string()))?;
        let obj = doc
            .as_object()
            .ok_or_else(|| Error::field("document", "expected a JSON object"))?;
        let get = |key: &str| obj.get(key).ok_or_else(|| Error::field(key, "missing"));
        let uint = |key: &str| -> Result<u32> {
            get(key)?
                .as_u64()
                .and_then(|v| u32::try_from(v).ok())
                .ok_or_else(|| Error::field(key, "expected a non-negative integer"))
        };
        let row = |field: String, v: &Value| -> Result<Vec<usize>> {
            v.as_array()
                .ok_or_else(|| Error::field(field.clone(), "expected an array of integers"))?
                .iter()
                .map(|e| {
                    e.as_u64()
                        .and_then(|e| usize::try_from(e).ok())
                        .ok_or_else(|| Error::field(field.clone(), "expected an array of integers"))
                })
                .collect()
        };
        let name = get("name")?
            .as_str()
            .ok_or_else(|| Error::field("name", "expected a string"))?;
        let base = uint("base")?;
        let dim = uint("dim")?;
        let tau = row("tau".into(), get("tau")?)?;
        let sigmas = get("sigmas")?
            .as_array()
            .ok_or_else(|| Error::field("sigmas", "expected an array of arrays"))?
            .iter()
            .enumerate()
            .map(|(i, v)| row(format!("sigmas[{i}]"), v))
            .collect::<Result<Vec<_>>>()?;
        CurveSpec::new(name, base, dim, tau, sigmas)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "base": self.base,
            "dim": self.dim,
            "tau": self.tau.as_slice(),
            "sigmas": self.sigmas.iter().map(Permutation::as_slice).collect::<Vec<_>>(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn tau(&self) -> &Permutation {
        &self.tau
    }

    pub fn sigmas(&self) -> &[Permutation] {
        &self.sigmas
    }

    /// `n^d`, the number of symbols per output digit.
    pub fn symbols(&self) -> usize {
        self.tau.len()
    }

    fn pack_cell(&self, digits: impl Iterator<Item = usize>) -> usize {
        digits.fold(0, |acc, dgt| acc * self.base as usize + dgt)
    }

    pub fn encode<T: Natural>(&self, coords: &[T]) -> Result<T> {
        if coords.len() != self.dim() {
            return Err(Error::domain(format!(
                "curve `{}` takes {} coordinates, got {}",
                self.name,
                self.dim,
                coords.len()
            )));
        }
        let n = T::from_u32(self.base).ok_or(Error::Overflow("curve base"))?;
        let mut m = 0;
        for c in coords {
            m = m.max(len_base(&n, c)?);
        }
        if m == 0 {
            return Ok(T::zero());
        }
        let m_usize = usize::try_from(m).map_err(|_| Error::Overflow("digit count"))?;
        // digits[i][j]: digit j (least significant first) of coordinate i.
        let digits: Vec<Vec<usize>> = coords
            .iter()
            .map(|c| {
                let mut rest = c.clone();
                (0..m_usize)
                    .map(|_| {
                        let (q, r) = rest.div_rem(&n);
                        rest = q;
                        small(&r)
                    })
                    .collect()
            })
            .collect();
        let radix = T::from_usize(self.symbols()).ok_or(Error::Overflow("curve radix"))?;
        let mut running: Vec<usize> = self.sigmas[0].pow(-(i128::from(m) - 1)).compose(&self.tau)?.0;
        let mut code = T::zero();
        for j in (0..m_usize).rev() {
            let cell = self.pack_cell(digits.iter().map(|d| d[j]));
            let out = running[cell];
            let digit = T::from_usize(out).ok_or(Error::Overflow("curve digit"))?;
            code = add(&mul(&code, &radix, "curve encode")?, &digit, "curve encode")?;
            let sigma = &self.sigmas[out];
            for v in running.iter_mut() {
                *v = sigma.apply(*v);
            }
        }
        Ok(code)
    }

    pub fn decode<T: Natural>(&self, z: &T) -> Result<Vec<T>> {
        let radix = T::from_usize(self.symbols()).ok_or(Error::Overflow("curve radix"))?;
        let mut digits = Vec::new();
        let mut rest = z.clone();
        while !rest.is_zero() {
            let (q, r) = rest.div_rem(&radix);
            digits.push(small(&r));
            rest = q;
        }
        let d = self.dim();
        let mut coords = vec![T::zero(); d];
        if digits.is_empty() {
            return Ok(coords);
        }
        let m = digits.len() as i128;
        // running = tau^-1 . sigma_0^(m-1) . sigma_{z_{m-1}}^-1 . ...
        let mut running: Vec<usize> = self.tau_inv.compose(&self.sigmas[0].pow(m - 1))?.0;
        let n = T::from_u32(self.base).ok_or(Error::Overflow("curve base"))?;
        let nb = self.base as usize;
        let mut cell_digits = vec![0usize; d];
        for &zj in digits.iter().rev() {
            let mut cell = running[zj];
            for slot in cell_digits.iter_mut().rev() {
                *slot = cell % nb;
                cell /= nb;
            }
            for (c, &dg) in coords.iter_mut().zip(&cell_digits) {
                let dg = T::from_usize(dg).ok_or(Error::Overflow("curve digit"))?;
                *c = add(&mul(c, &n, "curve decode")?, &dg, "curve decode")?;
            }
            let inv = &self.sigma_invs[zj];
            running = inv.as_slice().iter().map(|&i| running[i]).collect();
        }
        Ok(coords)
    }

    /// Decodes `0 .. count`, the curve's path in visiting order.
    pub fn trace<T: Natural>(&self, count: u64) -> Result<Vec<Vec<T>>> {
        (0..count)
            .map(|z| self.decode(&T::from_u64(z).ok_or(Error::Overflow("trace index"))?))
            .collect()
    }
}

impl fmt::Display for CurveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (base {}, {}-D)", self.name, self.base, self.dim)
    }
}

/// `max_i len_n(coords_i)` with `n` taken from `spec`.
pub fn digit_shell<T: Natural>(spec: &CurveSpec, coords: &[T]) -> Result<u64> {
    let n = T::from_u32(spec.base()).ok_or(Error::Overflow("curve base"))?;
    coords.iter().try_fold(0, |m, c| Ok(m.max(len_base(&n, c)?)))
}

/// Bit-interleaving reference for `zorder2`: x bits land on odd positions.
pub fn morton2(x: u64, y: u64) -> u64 {
    let mut code = 0;
    for bit in 0..32 {
        code |= ((x >> bit) & 1) << (2 * bit + 1);
        code |= ((y >> bit) & 1) << (2 * bit);
    }
    code
}
