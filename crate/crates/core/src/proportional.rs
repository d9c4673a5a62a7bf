//! The proportional pairing functions `p_{a,b}`.
//!
//! `p_{a,b}` is length-proportional in every base `n >= 2`: if `x` has at
//! most `a*k` digits and `y` at most `b*k` digits, then `p_{a,b}(x, y)` has
//! at most `(a + b) * k` digits. With `r_a = floor(x^(1/a))` and
//! `r_b = floor(y^(1/b))`,
//!
//! ```text
//! p_{a,b}(x, y) = y * r_b^a + x          if r_b > r_a
//!               = x * (r_a + 1)^b + y    otherwise
//! ```
//!
//! which is the generic construction of [`crate::pairing_core`] applied to
//! `g_{a,b}(x) = (r_a + 1)^b - 1`.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intmath::{checked_pow, floor_root, pow};
use crate::natural::{add, mul, sub, succ, Natural};
use crate::pairing_core::MonotoneSource;

/// Constants of proportionality `(a, b)`, both positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawProportions")]
pub struct Proportions {
    a: u32,
    b: u32,
}

#[derive(Deserialize)]
struct RawProportions {
    a: u32,
    b: u32,
}

impl TryFrom<RawProportions> for Proportions {
    type Error = Error;

    fn try_from(raw: RawProportions) -> Result<Self> {
        Proportions::new(raw.a, raw.b)
    }
}

impl fmt::Display for Proportions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

impl Proportions {
    pub fn new(a: u32, b: u32) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::domain(format!(
                "constants of proportionality must be positive, got ({a}, {b})"
            )));
        }
        Ok(Proportions { a, b })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    /// Divides out `gcd(a, b)`.
    ///
    /// `p_{a,b}` and `p_{a/c,b/c}` are different functions, but the reduced
    /// one keeps every proportionality guarantee of the original.
    pub fn reduce(&self) -> Proportions {
        let g = self.a.gcd(&self.b);
        Proportions {
            a: self.a / g,
            b: self.b / g,
        }
    }

    /// `g_{a,b}(x) = (floor(x^(1/a)) + 1)^b - 1`.
    pub fn g<T: Natural>(&self, x: &T) -> Result<T> {
        let r = succ(&floor_root(x, self.a)?, "g_ab")?;
        Ok(pow(&r, self.b)? - T::one())
    }

    /// `g_{a,b}` wrapped as a [`MonotoneSource`], for the generic construction.
    pub fn source<T: Natural>(&self) -> MonotoneSource<T> {
        let p = *self;
        MonotoneSource::new(format!("g_{{{},{}}}", p.a, p.b), move |x: &T| {
            p.g(x).expect("g_ab overflowed the scalar type")
        })
    }

    pub fn pair<T: Natural>(&self, x: &T, y: &T) -> Result<T> {
        let rx = floor_root(x, self.a)?;
        // floor(y^(1/b)) > rx exactly when y >= (rx + 1)^b.
        match checked_pow(&succ(&rx, "pair")?, self.b) {
            Some(scale) if *y < scale => add(&mul(x, &scale, "pair")?, y, "pair"),
            _ => {
                let scale = pow(&floor_root(y, self.b)?, self.a)?;
                add(&mul(y, &scale, "pair")?, x, "pair")
            }
        }
    }

    /// General inverse of [`pair`](Self::pair), with `m = floor(z^(1/(a+b)))`.
    pub fn unpair<T: Natural>(&self, z: &T) -> Result<(T, T)> {
        let m = floor_root(z, self.a + self.b)?;
        // m^a <= z, so this cannot overflow.
        let ma = pow(&m, self.a)?;
        let m1b = checked_pow(&succ(&m, "unpair")?, self.b);
        // Test the branch before dividing: m = 0 makes m^a = 0.
        let low = match m1b.as_ref().and_then(|v| ma.checked_mul(v)) {
            Some(bound) => *z < bound,
            None => true,
        };
        if low {
            let (q, r) = z.div_rem(&ma);
            Ok((r, q))
        } else {
            match m1b {
                Some(d) => Ok(z.div_rem(&d)),
                None => Ok((T::zero(), z.clone())),
            }
        }
    }

    /// Division-light inverse for `a = 1` or `b = 1`; identical to
    /// [`unpair`](Self::unpair) everywhere, and falls through to it otherwise.
    pub fn unpair_fast<T: Natural>(&self, z: &T) -> Result<(T, T)> {
        match (self.a, self.b) {
            (1, 1) => {
                let m = floor_root(z, 2)?;
                let m2 = mul(&m, &m, "unpair")?;
                let mm1 = add(&m2, &m, "unpair")?;
                if *z < mm1 {
                    Ok((sub(z, &m2), m))
                } else {
                    Ok((m, sub(z, &mm1)))
                }
            }
            (1, b) => {
                let m = floor_root(z, 1 + b)?;
                let corner = checked_pow(&succ(&m, "unpair")?, b).and_then(|v| v.checked_mul(&m));
                match corner {
                    Some(c) if *z >= c => Ok((m, sub(z, &c))),
                    _ => {
                        let (q, r) = z.div_rem(&m);
                        Ok((r, q))
                    }
                }
            }
            (a, 1) => {
                let m = floor_root(z, a + 1)?;
                let ma = pow(&m, a)?;
                let m1 = succ(&m, "unpair")?;
                let low = ma.checked_mul(&m1).is_none_or(|bound| *z < bound);
                if low {
                    Ok((sub(z, &mul(&ma, &m, "unpair")?), m))
                } else {
                    Ok(z.div_rem(&m1))
                }
            }
            _ => self.unpair(z),
        }
    }

    /// `max(floor(x^(1/a)), floor(y^(1/b)))`, a shell numbering for `pair`.
    pub fn shell<T: Natural>(&self, x: &T, y: &T) -> Result<T> {
        Ok(floor_root(x, self.a)?.max(floor_root(y, self.b)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;
    use proptest::prelude::*;

    const FAMILY: [(u32, u32); 6] = [(1, 1), (1, 2), (2, 1), (3, 2), (2, 3), (5, 4)];

    fn p(a: u32, b: u32) -> Proportions {
        Proportions::new(a, b).unwrap()
    }

    #[test]
    fn rejects_zero_constants() {
        assert!(Proportions::new(0, 1).is_err());
        assert!(Proportions::new(1, 0).is_err());
        assert!(serde_json::from_str::<Proportions>(r#"{"a":0,"b":2}"#).is_err());
        assert_eq!(
            serde_json::from_str::<Proportions>(r#"{"a":3,"b":2}"#).unwrap(),
            p(3, 2)
        );
    }

    #[test]
    fn g_examples() {
        assert_eq!(p(1, 1).g(&5u64).unwrap(), 5);
        assert_eq!(p(3, 2).g(&8u64).unwrap(), 8);
        assert_eq!(p(3, 2).g(&7u64).unwrap(), 3);
    }

    #[test]
    fn pair_examples() {
        assert_eq!(p(3, 2).pair(&8u64, &4).unwrap(), 76);
        assert_eq!(p(1, 1).pair(&2u64, &1).unwrap(), 7);
        assert_eq!(p(3, 2).pair(&0u64, &0).unwrap(), 0);
        for (a, b) in FAMILY {
            assert_eq!(p(a, b).pair(&1u64, &0).unwrap(), 1 << b);
        }
    }

    #[test]
    fn unpair_examples() {
        assert_eq!(p(3, 2).unpair(&76u64).unwrap(), (8, 4));
        assert_eq!(p(3, 2).unpair(&0u64).unwrap(), (0, 0));
        assert_eq!(p(3, 2).unpair(&2u64).unwrap(), (0, 2));
        assert_eq!(p(1, 1).unpair_fast(&7u64).unwrap(), (2, 1));
        assert_eq!(p(1, 2).unpair_fast(&0u64).unwrap(), (0, 0));
        let z = p(3, 1).pair(&5u64, &2).unwrap();
        assert_eq!(p(3, 1).unpair_fast(&z).unwrap(), (5, 2));
        assert_eq!(p(3, 1).unpair(&z).unwrap(), (5, 2));
    }

    #[test]
    fn shell_and_reduce_examples() {
        assert_eq!(p(3, 2).shell(&8u64, &4).unwrap(), 2);
        assert_eq!(p(1, 1).shell(&0u64, &0).unwrap(), 0);
        assert_eq!(p(1, 1).shell(&3u64, &1).unwrap(), 3);
        assert_eq!(p(2, 4).reduce(), p(1, 2));
        assert_eq!(p(5, 4).reduce(), p(5, 4));
        assert_eq!(p(1, 1).pair(&1u64, &0).unwrap(), 2);
        assert_eq!(p(2, 2).pair(&1u64, &0).unwrap(), 4);
    }

    #[test]
    fn bijective_on_boxes() {
        for (a, b) in FAMILY {
            let pr = p(a, b);
            for x in 0..=200u64 {
                for y in 0..=200u64 {
                    let z = pr.pair(&x, &y).unwrap();
                    assert_eq!(pr.unpair(&z).unwrap(), (x, y), "p_{{{a},{b}}}({x},{y})");
                }
            }
            for z in 0..=40_000u64 {
                let (x, y) = pr.unpair(&z).unwrap();
                assert_eq!(pr.pair(&x, &y).unwrap(), z);
                assert_eq!(pr.unpair_fast(&z).unwrap(), (x, y));
            }
        }
    }

    #[test]
    fn agrees_with_generic_construction() {
        for (a, b) in FAMILY {
            let pr = p(a, b);
            let g = pr.source::<u64>();
            for x in 0..=60u64 {
                for y in 0..=60u64 {
                    assert_eq!(pr.pair(&x, &y).unwrap(), g.phi(&x, &y).unwrap());
                    assert_eq!(pr.shell(&x, &y).unwrap(), g.shell_index(&x, &y).unwrap());
                }
            }
        }
    }

    #[test]
    fn shells_order_the_output() {
        for (a, b) in FAMILY {
            let pr = p(a, b);
            // Group by shell and compare extremes: equivalent to the pairwise test.
            let mut by_shell: std::collections::BTreeMap<u64, (u64, u64)> = Default::default();
            for x in 0..=50u64 {
                for y in 0..=50u64 {
                    let s = pr.shell(&x, &y).unwrap();
                    let z = pr.pair(&x, &y).unwrap();
                    let e = by_shell.entry(s).or_insert((z, z));
                    e.0 = e.0.min(z);
                    e.1 = e.1.max(z);
                }
            }
            let extremes: Vec<_> = by_shell.values().collect();
            for w in extremes.windows(2) {
                assert!(w[0].1 < w[1].0);
            }
        }
        for x in 0..=50u64 {
            for y in 0..=50u64 {
                for u in 0..=50u64 {
                    for v in [0u64, 17, 50] {
                        if x.max(y) < u.max(v) {
                            assert!(p(1, 1).pair(&x, &y).unwrap() < p(1, 1).pair(&u, &v).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn fixed_width_edges() {
        let pr = p(1, 1);
        let top = u64::from(u32::MAX);
        assert_eq!(pr.pair(&top, &top).unwrap(), u64::MAX);
        assert_eq!(pr.unpair(&u64::MAX).unwrap(), (top, top));
        assert_eq!(pr.unpair_fast(&u64::MAX).unwrap(), (top, top));
        assert!(matches!(pr.pair(&(top + 1), &0u64), Err(Error::Overflow(_))));
        for (a, b) in FAMILY {
            let pr = p(a, b);
            for z in [u64::MAX, u64::MAX - 1, 1 << 63] {
                let (x, y) = pr.unpair(&z).unwrap();
                assert_eq!(pr.pair(&x, &y).unwrap(), z);
                assert_eq!(pr.unpair_fast(&z).unwrap(), (x, y));
            }
        }
    }

    proptest! {
        #[test]
        fn big_round_trip(xl in proptest::collection::vec(any::<u32>(), 0..6),
                          yl in proptest::collection::vec(any::<u32>(), 0..6),
                          a in 1u32..8, b in 1u32..8) {
            let pr = p(a, b);
            let (x, y) = (BigUint::new(xl), BigUint::new(yl));
            let z = pr.pair(&x, &y).unwrap();
            prop_assert_eq!(pr.unpair(&z).unwrap(), (x.clone(), y.clone()));
            prop_assert_eq!(pr.unpair_fast(&z).unwrap(), (x, y));
        }

        #[test]
        fn u64_inverse_round_trip(z in any::<u64>(), a in 1u32..8, b in 1u32..8) {
            let pr = p(a, b);
            let (x, y) = pr.unpair(&z).unwrap();
            prop_assert_eq!(pr.pair(&x, &y).unwrap(), z);
        }
    }
}
