//! Pairing and tupling functions on the natural numbers.
//!
//! * [`Proportions`]: the proportional pairings `p_{a,b}`, whose output
//!   length tracks `a` and `b` times a common unit in every base.
//! * [`rs_pair`] / [`rs_unpair`]: Rosenberg-Strong `d`-tupling.
//! * [`MonotoneSource`]: the generic construction `phi_g` / `psi_g` from a
//!   non-decreasing unbounded `g`.
//! * [`CurveSpec`]: discrete space-filling curves given by permutation tables.
//! * [`PackPlan`]: composite keys whose bit length is the sum of the field widths.
//! * [`verify`]: bounded checkers that return concrete counterexamples.
//!
//! Everything is generic over [`Natural`], implemented for `u32`, `u64`,
//! `u128` (overflow is reported, never wrapped) and [`BigUint`].
//!
//! ```
//! use natpair::{Proportions, rs_pair};
//!
//! let p = Proportions::new(3, 2).unwrap();
//! assert_eq!(p.pair(&8u64, &4).unwrap(), 76);
//! assert_eq!(p.unpair(&76u64).unwrap(), (8, 4));
//! assert_eq!(rs_pair(&[2u64, 1]).unwrap(), 7);
//! ```

pub mod error;
pub mod intmath;
pub mod natural;
pub mod packer;
pub mod pairing_core;
pub mod proportional;
pub mod rosenberg_strong;
pub mod sfc;
pub mod verify;

pub use num_bigint::BigUint;

pub use error::{Error, Result};
pub use intmath::{ceil_root, floor_root, len_base};
pub use natural::{nat, Natural};
pub use packer::PackPlan;
pub use pairing_core::{MonotoneSource, ShellDescriptor};
pub use proportional::Proportions;
pub use rosenberg_strong::{cubic_shell, rs_pair, rs_unpair};
pub use sfc::{CurveSpec, Permutation, BUILTIN_CURVES};
pub use verify::{Counterexample, Outcome, Predicate, TuplerHandle};

/// Arbitrary-precision natural number.
pub type Nat = BigUint;
/// A point of `N^d`.
pub type Tuple<T = Nat> = Vec<T>;

pub type NatSource = MonotoneSource<Nat>;
pub type NatHandle = TuplerHandle<Nat>;
pub type NatCounterexample = Counterexample<Nat>;

pub type Source64 = MonotoneSource<u64>;
pub type Handle64 = TuplerHandle<u64>;
pub type Counterexample64 = Counterexample<u64>;
