//! Bracketing bisection.

use crate::error::{Error, Result};

/// Shrinks `[lo, hi]` with `pred(lo) == true` and `pred(hi) == false` until
/// `hi - lo <= tol`. Returns the final bracket.
pub fn bisect_predicate<P>(pred: P, mut lo: f64, mut hi: f64, tol: f64) -> Result<(f64, f64)>
where
    P: Fn(f64) -> Result<bool>,
{
    if !(pred(lo)? && !pred(hi)?) {
        return Err(Error::NumericalDomain {
            context: "bisection bracket",
            value: hi - lo,
        });
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if pred(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo, hi))
}

/// Root of `f` in `[lo, hi]` where `f` changes sign, to within `tol` in the argument.
pub fn bisect_root<F>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let positive_at_lo = f(lo)? > 0.0;
    let (a, b) = bisect_predicate(|x| Ok((f(x)? > 0.0) == positive_at_lo), lo, hi, tol)?;
    Ok(0.5 * (a + b))
}
