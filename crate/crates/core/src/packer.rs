//! Bit-budgeted composite keys built from proportional pairings.
//!
//! Fields of widths `w_1, .., w_m` are folded left:
//! `p_{a_2,b_2}(p_{a_1,b_1}(x_1, x_2), x_3)` and so on. When `W` bits have
//! been accumulated and the next field has `w`, the step uses `(a, b) = (W, w)`
//! divided by their gcd. Proportionality then keeps each partial result
//! within `W + w` bits, so the key never exceeds the sum of the widths.
//!
//! ```
//! use natpair::PackPlan;
//!
//! let plan = PackPlan::plan(&[32, 48, 64]).unwrap();
//! assert_eq!(plan.total_bits(), 144);
//! let key = plan.pack(&[1u128, 2, 3]).unwrap();
//! assert_eq!(plan.unpack(&key).unwrap(), vec![1, 2, 3]);
//! ```

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::natural::Natural;
use crate::proportional::Proportions;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackPlan {
    k: u64,
    widths: Vec<u64>,
    steps: Vec<Proportions>,
    total_bits: u64,
}

fn step_for(acc: u64, w: u64) -> Result<Proportions> {
    let g = acc.gcd(&w);
    let (a, b) = (acc / g, w / g);
    let narrow = |v: u64| u32::try_from(v).map_err(|_| Error::domain("field widths too large to combine"));
    Proportions::new(narrow(a)?, narrow(b)?)
}

impl PackPlan {
    pub fn plan(widths: &[u64]) -> Result<Self> {
        if widths.is_empty() {
            return Err(Error::domain("at least one field width is required"));
        }
        if let Some(i) = widths.iter().position(|&w| w == 0) {
            return Err(Error::domain(format!("field {i} has zero width")));
        }
        let k = widths.iter().fold(0, |g, w| w.gcd(&g));
        let mut steps = Vec::with_capacity(widths.len() - 1);
        let mut acc = widths[0];
        for &w in &widths[1..] {
            steps.push(step_for(acc, w)?);
            acc = acc
                .checked_add(w)
                .ok_or_else(|| Error::domain("total width overflows"))?;
        }
        Ok(PackPlan {
            k,
            widths: widths.to_vec(),
            steps,
            total_bits: acc,
        })
    }

    /// Re-checks every structural invariant; used after deserializing.
    pub fn validate(&self) -> Result<()> {
        if self.widths.is_empty() {
            return Err(Error::field("widths", "must not be empty"));
        }
        if let Some(i) = self.widths.iter().position(|&w| w == 0) {
            return Err(Error::field(format!("widths[{i}]"), "must be positive"));
        }
        if self.k == 0 {
            return Err(Error::field("k", "must be positive"));
        }
        if let Some(i) = self.widths.iter().position(|w| w % self.k != 0) {
            return Err(Error::field(
                format!("widths[{i}]"),
                format!("{} is not a multiple of k = {}", self.widths[i], self.k),
            ));
        }
        if self.steps.len() + 1 != self.widths.len() {
            return Err(Error::field(
                "steps",
                format!("expected {} steps, got {}", self.widths.len() - 1, self.steps.len()),
            ));
        }
        let mut acc = self.widths[0];
        for (i, (&w, step)) in self.widths[1..].iter().zip(&self.steps).enumerate() {
            let expect = step_for(acc / self.k, w / self.k)?;
            if *step != expect {
                return Err(Error::field(
                    format!("steps[{i}]"),
                    format!("expected {expect}, got {step}"),
                ));
            }
            acc = acc
                .checked_add(w)
                .ok_or_else(|| Error::field("widths", "total width overflows"))?;
        }
        if self.total_bits != acc {
            return Err(Error::field(
                "total_bits",
                format!("expected {acc}, got {}", self.total_bits),
            ));
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let plan: PackPlan = serde_json::from_str(text).map_err(|e| Error::field("document", e.to_string()))?;
        plan.validate()?;
        Ok(plan)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plan serializes")
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn widths(&self) -> &[u64] {
        &self.widths
    }

    pub fn steps(&self) -> &[Proportions] {
        &self.steps
    }

    pub fn total_bits(&self) -> u64 {
        self.total_bits
    }

    pub fn pack<T: Natural>(&self, values: &[T]) -> Result<T> {
        if values.len() != self.widths.len() {
            return Err(Error::Usage(format!(
                "plan has {} fields, got {} values",
                self.widths.len(),
                values.len()
            )));
        }
        for (i, (v, &w)) in values.iter().zip(&self.widths).enumerate() {
            if v.bit_len() > w {
                return Err(Error::domain(format!("field {i} value {v} does not fit in {w} bits")));
            }
        }
        let mut acc = values[0].clone();
        for (step, v) in self.steps.iter().zip(&values[1..]) {
            acc = step.pair(&acc, v)?;
        }
        Ok(acc)
    }

    pub fn unpack<T: Natural>(&self, z: &T) -> Result<Vec<T>> {
        let mut fields = Vec::with_capacity(self.widths.len());
        let mut acc = z.clone();
        for (i, step) in self.steps.iter().enumerate().rev() {
            let (rest, v) = step.unpair(&acc)?;
            check_width(i + 1, &v, self.widths[i + 1])?;
            fields.push(v);
            acc = rest;
        }
        check_width(0, &acc, self.widths[0])?;
        fields.push(acc);
        fields.reverse();
        Ok(fields)
    }
}

fn check_width<T: Natural>(i: usize, v: &T, w: u64) -> Result<()> {
    if v.bit_len() > w {
        return Err(Error::Integrity(format!(
            "field {i} decodes to {v}, wider than {w} bits; the key was not packed with this plan"
        )));
    }
    Ok(())
}
