//! Bracketed bisection.

use crate::error::{Error, Result};

/// Finds a root of `f` on `[lo, hi]` by bisection.
///
/// `f(lo)` and `f(hi)` must differ in sign (or one of them be zero).
/// Stops once the bracket is narrower than `x_tol` or after `max_iter`
/// halvings, returning the midpoint of the final bracket.
pub fn bisect<F>(f: F, mut lo: f64, mut hi: f64, x_tol: f64, max_iter: usize) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !(lo < hi) {
        return Err(Error::InvalidInput(format!(
            "bisection needs lo < hi, got [{lo}, {hi}]"
        )));
    }
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if !(f_lo.is_finite() && f_hi.is_finite()) || f_lo.signum() == f_hi.signum() {
        return Err(Error::Bracket { lo, hi, f_lo, f_hi });
    }

    for _ in 0..max_iter {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= x_tol || mid == lo || mid == hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
