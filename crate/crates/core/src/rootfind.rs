//! Bracketed scalar root-finding: bisection to a tight interval followed by a
//! single Newton polish. Bisection is unconditionally safe on a sign-changing
//! bracket; the Newton step only sharpens the last digits.

use crate::error::{Error, Result};

/// Absolute bisection tolerance on the abscissa.
pub const BISECTION_X_TOL: f64 = 1e-14;

/// Find the root of `f` on `[lo, hi]` given `f(lo)` and `f(hi)` of opposite
/// sign. `df` is the derivative used for the final polish.
pub fn bisect_newton<F, D>(f: F, df: D, lo: f64, hi: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
    D: Fn(f64) -> f64,
{
    let f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::RootNotBracketed { lo, hi, f_lo, f_hi });
    }

    let (mut a, mut b, mut f_a) = (lo, hi, f_lo);
    while b - a > BISECTION_X_TOL {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break; // interval no longer splittable in f64
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_a.signum() {
            a = mid;
            f_a = f_mid;
        } else {
            b = mid;
        }
    }

    let mut x = 0.5 * (a + b);
    let slope = df(x);
    if slope != 0.0 && slope.is_finite() {
        let step = f(x) / slope;
        let polished = x - step;
        if polished > a - (b - a) && polished < b + (b - a) && polished.is_finite() {
            x = polished;
        }
    }
    Ok(x)
}

/// Walk `lo` down geometrically from `start` until `f(lo)` becomes positive,
/// producing the left end of a sign-change bracket for a function that is
/// positive near 0 and negative at `hi`.
pub fn bracket_positive_left<F>(f: F, start: f64, max_halvings: u32) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let mut lo = start;
    for _ in 0..max_halvings {
        let v = f(lo);
        if v > 0.0 {
            return Ok(lo);
        }
        lo *= 0.5;
    }
    Err(Error::RootNotBracketed { lo, hi: start, f_lo: f(lo), f_hi: f(start) })
}
