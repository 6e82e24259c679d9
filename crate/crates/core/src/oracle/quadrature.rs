//! Iterated adaptive Simpson quadrature of reduced-state integrals over a
//! truncated box in `(r, R)`.

use crate::error::{Error, Result};
use crate::reduced::ReducedGaussian;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    /// Half-width of the box, in standard deviations of each axis.
    pub half_width_sd: f64,
    /// Target relative error.
    pub rel_tol: f64,
    /// Cap on interval bisections per one-dimensional integral.
    pub max_subdivisions: usize,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            half_width_sd: 8.0,
            rel_tol: 1e-8,
            max_subdivisions: 200_000,
        }
    }
}

impl QuadratureSpec {
    fn validate(&self) -> Result<()> {
        let ok = |v: f64| v.is_finite() && v > 0.0;
        if !(ok(self.half_width_sd) && ok(self.rel_tol) && self.max_subdivisions > 0) {
            return Err(Error::InvalidParams {
                name: "quadrature",
                reason: format!("fields must be positive and finite: {self:?}"),
            });
        }
        Ok(())
    }
}

/// Adaptive Simpson with Richardson correction. The absolute tolerance is
/// `rel_tol` times a coarse composite estimate of the integral.
pub fn integrate_1d<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<f64> {
    let coarse_panels = 32;
    let h = (b - a) / coarse_panels as f64;
    let mut scale = 0.0;
    for i in 0..=coarse_panels {
        let w = if i == 0 || i == coarse_panels { 1.0 } else { 2.0 };
        scale += w * f(a + i as f64 * h).abs();
    }
    scale *= 0.5 * h;
    if scale == 0.0 {
        return Ok(0.0);
    }
    let tol = spec.rel_tol * scale;

    let mut budget = spec.max_subdivisions;
    let mut total = 0.0;
    // seed with the coarse panels so narrow peaks cannot be missed
    for i in 0..coarse_panels {
        let (lo, hi) = (a + i as f64 * h, a + (i + 1) as f64 * h);
        let mid = 0.5 * (lo + hi);
        let (flo, fmid, fhi) = (f(lo), f(mid), f(hi));
        let whole = simpson(lo, hi, flo, fmid, fhi);
        total += refine(f, lo, hi, flo, fmid, fhi, whole, tol / coarse_panels as f64, &mut budget, 60)
            .ok_or(Error::NonConvergence {
                max_subdivisions: spec.max_subdivisions,
            })?;
    }
    Ok(total)
}

#[inline]
fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn refine<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    budget: &mut usize,
    depth: u32,
) -> Option<f64> {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol {
        return Some(left + right + delta / 15.0);
    }
    if depth == 0 || *budget == 0 {
        return None;
    }
    *budget -= 1;
    let l = refine(f, a, m, fa, flm, fm, left, 0.5 * tol, budget, depth - 1)?;
    let r = refine(f, m, b, fm, frm, fb, right, 0.5 * tol, budget, depth - 1)?;
    Some(l + r)
}

/// `integral dR integral dr g(r, R)` over the truncated box of `state`.
fn integrate_box<G: Fn(f64, f64) -> f64>(state: &ReducedGaussian, spec: &QuadratureSpec, g: G) -> Result<f64> {
    spec.validate()?;
    let (wr, wc) = (state.relative_variance(), state.center_variance());
    if !(wr > 0.0 && wc > 0.0 && wr.is_finite() && wc.is_finite()) {
        return Err(Error::NumericalDomain {
            context: "quadrature box",
            value: wr.min(wc),
        });
    }
    let half_r = spec.half_width_sd * wr.sqrt();
    let half_c = spec.half_width_sd * wc.sqrt();
    let inner_spec = QuadratureSpec {
        rel_tol: 0.1 * spec.rel_tol,
        ..*spec
    };
    let failure = std::cell::Cell::new(None);
    let outer = |big_r: f64| match integrate_1d(&|r| g(r, big_r), -half_r, half_r, &inner_spec) {
        Ok(v) => v,
        Err(e) => {
            failure.set(Some(e));
            0.0
        }
    };
    let value = integrate_1d(&outer, -half_c, half_c, spec)?;
    match failure.into_inner() {
        Some(e) => Err(e),
        None => Ok(value),
    }
}

/// `integral integral |rho_A(x, y)| dx dy`.
pub fn quad_l1_coherence(state: &ReducedGaussian, spec: &QuadratureSpec) -> Result<f64> {
    integrate_box(state, spec, |r, big_r| state.evaluate(r, big_r).norm())
}

/// `integral integral |rho_A(x, z)|^2 dx dz`.
pub fn quad_purity(state: &ReducedGaussian, spec: &QuadratureSpec) -> Result<f64> {
    integrate_box(state, spec, |r, big_r| state.evaluate(r, big_r).norm_sqr())
}

/// `integral dR rho_A(0, R)`.
pub fn quad_trace(state: &ReducedGaussian, spec: &QuadratureSpec) -> Result<f64> {
    spec.validate()?;
    let half = spec.half_width_sd * state.center_variance().sqrt();
    integrate_1d(&|big_r| state.evaluate(0.0, big_r).re, -half, half, spec)
}
