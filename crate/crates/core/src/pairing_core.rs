//! Pairing functions built from a non-decreasing unbounded `g: N -> N`.
//!
//! Given `g`, the pseudo-inverse `g+(y)` is the least `x` with `g(x) >= y`,
//! and the step points `s_0 < s_1 < ...` are the range of `g+`. The pairing
//! function is
//!
//! ```text
//! phi(x, y) = y * g+(y) + x        if y > g(x)
//!           = x * (g(x) + 1) + y   otherwise
//! ```
//!
//! and shell `k` is the rectangle `x < s_{k+1}, y <= g(s_k)`, which `phi`
//! maps onto `0 .. s_{k+1} * (g(s_k) + 1)`.

use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::natural::{add, mul, succ, Natural};

type Eval<T> = dyn Fn(&T) -> T + Send + Sync;

/// Evaluation oracle for a non-decreasing unbounded `g`.
///
/// Neither property can be decided from an oracle. Unboundedness is
/// enforced lazily by the gallop cap; monotonicity can be sampled with
/// [`MonotoneSource::check_monotone`].
pub struct MonotoneSource<T: Natural> {
    eval: Arc<Eval<T>>,
    description: String,
    gallop_cap: Option<T>,
    steps: Mutex<Vec<T>>,
}

/// Shell `k` of a [`MonotoneSource`]: the rectangle `A_k` and its image bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShellDescriptor<T> {
    pub index: u64,
    pub step_lo: T,
    pub step_hi: T,
    pub g_at_step: T,
    /// `step_hi * (g_at_step + 1)`, the number of points in the shell's rectangle.
    pub b_bound: T,
}

impl<T: Natural> MonotoneSource<T> {
    pub fn new(description: impl Into<String>, eval: impl Fn(&T) -> T + Send + Sync + 'static) -> Self {
        // Default cap 2^64; fixed-width types stop at their own overflow instead.
        let gallop_cap = T::from_u128(1u128 << 64);
        MonotoneSource {
            eval: Arc::new(eval),
            description: description.into(),
            gallop_cap,
            steps: Mutex::new(vec![T::zero()]),
        }
    }

    /// Replaces the bound past which `pseudo_inverse` gives up.
    pub fn with_gallop_cap(mut self, cap: T) -> Self {
        self.gallop_cap = Some(cap);
        self
    }

    /// `g(x) = x`; its pairing function is the square-shell `p_{1,1}`.
    pub fn identity() -> Self {
        Self::new("g(x) = x", T::clone)
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn eval(&self, x: &T) -> T {
        (self.eval)(x)
    }

    /// Samples `g(x) <= g(x + 1)` for every `x < bound`.
    pub fn check_monotone(&self, bound: u64) -> Result<()> {
        let mut prev = self.eval(&T::zero());
        for x in 1..=bound {
            let xt = T::from_u64(x).ok_or(Error::Overflow("monotonicity sample"))?;
            let next = self.eval(&xt);
            if next < prev {
                return Err(Error::Contract(format!(
                    "{}: g({}) = {} > g({}) = {}",
                    self.description,
                    x - 1,
                    prev,
                    x,
                    next
                )));
            }
            prev = next;
        }
        Ok(())
    }

    /// `g+(y)`: the least `x` with `g(x) >= y`.
    pub fn pseudo_inverse(&self, y: &T) -> Result<T> {
        if self.eval(&T::zero()) >= *y {
            return Ok(T::zero());
        }
        // Gallop: g(lo) < y, then find hi with g(hi) >= y.
        let mut lo = T::zero();
        let mut hi = T::one();
        while self.eval(&hi) < *y {
            if self.gallop_cap.as_ref().is_some_and(|cap| hi > *cap) {
                return Err(self.unbounded_violation(y));
            }
            lo = hi.clone();
            hi = match hi.checked_add(&hi) {
                Some(h) => h,
                None => return Err(self.unbounded_violation(y)),
            };
        }
        // Invariant: g(lo) < y <= g(hi).
        let two = T::one() + T::one();
        while hi.clone() - lo.clone() > T::one() {
            let mid = lo.clone() + (hi.clone() - lo.clone()) / two.clone();
            if self.eval(&mid) >= *y {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(hi)
    }

    fn unbounded_violation(&self, y: &T) -> Error {
        Error::Contract(format!(
            "{}: no x below the gallop cap has g(x) >= {y}; g looks bounded",
            self.description
        ))
    }

    /// `s_k`, via `s_0 = 0`, `s_{k+1} = g+(g(s_k) + 1)`. Results are memoized.
    pub fn step_point(&self, k: u64) -> Result<T> {
        let k = usize::try_from(k).map_err(|_| Error::Overflow("step index"))?;
        let mut steps = self.steps.lock().unwrap_or_else(|e| e.into_inner());
        while steps.len() <= k {
            let last = steps.last().expect("s_0 is always present");
            let target = succ(&self.eval(last), "g(s_k) + 1")?;
            let next = self.pseudo_inverse(&target)?;
            steps.push(next);
        }
        Ok(steps[k].clone())
    }

    pub fn shell(&self, k: u64) -> Result<ShellDescriptor<T>> {
        let step_lo = self.step_point(k)?;
        let step_hi = self.step_point(k + 1)?;
        let g_at_step = self.eval(&step_lo);
        let b_bound = mul(&step_hi, &succ(&g_at_step, "shell bound")?, "shell bound")?;
        Ok(ShellDescriptor {
            index: k,
            step_lo,
            step_hi,
            g_at_step,
            b_bound,
        })
    }

    pub fn phi(&self, x: &T, y: &T) -> Result<T> {
        let gx = self.eval(x);
        if *y > gx {
            let base = mul(y, &self.pseudo_inverse(y)?, "phi")?;
            add(&base, x, "phi")
        } else {
            let base = mul(x, &succ(&gx, "phi")?, "phi")?;
            add(&base, y, "phi")
        }
    }

    /// Inverse of [`phi`](Self::phi).
    pub fn psi(&self, z: &T) -> Result<(T, T)> {
        let mut k = 0;
        let shell = loop {
            let shell = self.shell(k)?;
            if *z < shell.b_bound {
                break shell;
            }
            k += 1;
        };
        let s_m = shell.step_lo;
        let g_m = succ(&shell.g_at_step, "psi")?;
        // s_0 = 0, so the first branch never divides by zero.
        let upright = match s_m.checked_mul(&g_m) {
            Some(bound) => *z < bound,
            None => true,
        };
        if upright {
            let (q, r) = z.div_rem(&s_m);
            Ok((r, q))
        } else {
            Ok(z.div_rem(&g_m))
        }
    }

    /// Least `k` with `x < s_{k+1}` and `y <= g(s_k)`.
    pub fn shell_index(&self, x: &T, y: &T) -> Result<u64> {
        let mut k = 0;
        loop {
            if *x < self.step_point(k + 1)? && *y <= self.eval(&self.step_point(k)?) {
                return Ok(k);
            }
            k += 1;
        }
    }
}

impl<T: Natural> Clone for MonotoneSource<T> {
    fn clone(&self) -> Self {
        let steps = self.steps.lock().unwrap_or_else(|e| e.into_inner()).clone();
        MonotoneSource {
            eval: Arc::clone(&self.eval),
            description: self.description.clone(),
            gallop_cap: self.gallop_cap.clone(),
            steps: Mutex::new(steps),
        }
    }
}

impl<T: Natural> fmt::Debug for MonotoneSource<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MonotoneSource")
            .field("description", &self.description)
            .field("gallop_cap", &self.gallop_cap)
            .finish_non_exhaustive()
    }
}
