//! Rosenberg-Strong `d`-tupling, the cubic-shell reference family.
//!
//! `r_1(x) = x` and
//! `r_d(x_1..x_d) = r_{d-1}(x_1..x_{d-1}) + m^d + (m - x_d)((m+1)^{d-1} - m^{d-1})`
//! with `m = max(x_1..x_d)`. Points with a smaller maximum coordinate always
//! receive smaller codes.

use crate::error::{Error, Result};
use crate::intmath::{floor_root, pow};
use crate::natural::{add, mul, saturating_sub, sub, succ, Natural};

fn shell_width<T: Natural>(m: &T, d: u32) -> Result<T> {
    // (m+1)^{d-1} - m^{d-1}
    let hi = pow(&succ(m, "shell width")?, d - 1)?;
    Ok(sub(&hi, &pow(m, d - 1)?))
}

fn dim(d: usize) -> Result<u32> {
    u32::try_from(d).map_err(|_| Error::domain("dimension too large"))
}

/// `r_d(xs)` with `d = xs.len()`.
pub fn rs_pair<T: Natural>(xs: &[T]) -> Result<T> {
    let (first, rest) = xs
        .split_first()
        .ok_or_else(|| Error::domain("tuple must have at least one coordinate"))?;
    let mut code = first.clone();
    let mut m = first.clone();
    for (i, x) in rest.iter().enumerate() {
        let d = dim(i + 2)?;
        if *x > m {
            m = x.clone();
        }
        let offset = mul(&sub(&m, x), &shell_width(&m, d)?, "rs_pair")?;
        code = add(&add(&code, &pow(&m, d)?, "rs_pair")?, &offset, "rs_pair")?;
    }
    Ok(code)
}

/// Inverse of [`rs_pair`] at dimension `d`.
pub fn rs_unpair<T: Natural>(d: usize, z: &T) -> Result<Vec<T>> {
    if d == 0 {
        return Err(Error::domain("dimension must be at least 1"));
    }
    let mut coords = Vec::with_capacity(d);
    let mut rest = z.clone();
    for d in (2..=dim(d)?).rev() {
        let m = floor_root(&rest, d)?;
        let md = pow(&m, d)?;
        let width = shell_width(&m, d)?;
        let past_corner = md
            .checked_add(&pow(&m, d - 1)?)
            .map_or_else(T::zero, |corner| saturating_sub(&rest, &corner));
        let x_d = sub(&m, &(past_corner / width.clone()));
        rest = sub(&sub(&rest, &md), &(sub(&m, &x_d) * width));
        coords.push(x_d);
    }
    coords.push(rest);
    coords.reverse();
    Ok(coords)
}

/// `max(xs)`, the cubic shell of a point.
pub fn cubic_shell<T: Natural>(xs: &[T]) -> T {
    xs.iter().max().cloned().unwrap_or_else(T::zero)
}
