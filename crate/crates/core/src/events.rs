//! Detection of entanglement sudden death, dark periods and coherence
//! crossings by grid scan followed by bisection.

use crate::error::{Error, Result};
use crate::gaussian::log_negativity;
use crate::params::{BathParams, Regime, Squeeze};
use crate::reduced::l1_coherence;
use crate::roots::{bisect_predicate, bisect_root};

/// Default grid spacing in `t`.
pub const SCAN_STEP: f64 = 1e-3;

/// Width of the final bisection bracket in `t`.
pub const REFINE_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct EventReport {
    /// First time after which the negativity stays zero.
    pub death_time: Option<f64>,
    /// `(t_off, t_on)`: negativity is zero in between and positive on both sides.
    pub dark_period: Option<(f64, f64)>,
    /// First time the common-bath coherence crosses the distinct-bath coherence.
    pub crossing_time: Option<f64>,
    /// Negativity zero on the whole scanned range.
    pub never_entangled: bool,
}

/// Uniform grid `0 = t_0 < ... < t_n = t_max` with spacing at most `step`.
fn grid(t_max: f64, step: f64) -> Result<Vec<f64>> {
    if !(step.is_finite() && step > 0.0) {
        return Err(Error::InvalidParams {
            name: "step",
            reason: format!("must be finite and > 0, got {step}"),
        });
    }
    if !(t_max.is_finite() && t_max > 0.0) {
        return Err(Error::InvalidParams {
            name: "t_max",
            reason: format!("must be finite and > 0, got {t_max}"),
        });
    }
    let n = (t_max / step).ceil().max(1.0) as usize;
    Ok((0..=n).map(|i| t_max * i as f64 / n as f64).collect())
}

fn entangled(regime: Regime, s: Squeeze) -> impl Fn(f64) -> Result<bool> {
    move |t| Ok(log_negativity(regime, s, t)? > 0.0)
}

pub fn find_death_time(s: Squeeze, bath: BathParams, t_max: f64) -> Result<EventReport> {
    find_death_time_with_step(s, bath, t_max, SCAN_STEP)
}

/// Sudden-death time in separate baths. Fails with [`Error::NoDeath`] when
/// entanglement survives to `t_max` and with [`Error::UnexpectedRevival`] if
/// it comes back after dying.
pub fn find_death_time_with_step(s: Squeeze, bath: BathParams, t_max: f64, step: f64) -> Result<EventReport> {
    let regime = Regime::Distinct(bath);
    regime.check_time(t_max)?;
    let is_entangled = entangled(regime, s);
    if !is_entangled(0.0)? {
        return Ok(EventReport {
            death_time: Some(0.0),
            never_entangled: true,
            ..EventReport::default()
        });
    }
    let ts = grid(t_max, step)?;
    let Some(k) = first_change(&ts, &is_entangled, true)? else {
        return Err(Error::NoDeath { t_max });
    };
    let (_, death) = bisect_predicate(&is_entangled, ts[k - 1], ts[k], REFINE_TOL)?;
    if let Some(j) = first_change(&ts[k..], &is_entangled, false)? {
        return Err(Error::UnexpectedRevival {
            death,
            revival: ts[k + j],
        });
    }
    Ok(EventReport {
        death_time: Some(death),
        ..EventReport::default()
    })
}

/// Index of the first grid point whose state differs from `from`, scanning
/// from index 1.
fn first_change<P: Fn(f64) -> Result<bool>>(ts: &[f64], pred: &P, from: bool) -> Result<Option<usize>> {
    for (i, &t) in ts.iter().enumerate().skip(1) {
        if pred(t)? != from {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

pub fn find_dark_period(s: Squeeze, bath: BathParams, t_max: f64) -> Result<EventReport> {
    find_dark_period_with_step(s, bath, t_max, SCAN_STEP)
}

/// First dark period in a shared bath. Entanglement that vanishes and never
/// returns before `t_max` is reported as a death time instead.
pub fn find_dark_period_with_step(s: Squeeze, bath: BathParams, t_max: f64, step: f64) -> Result<EventReport> {
    let regime = Regime::Common(bath);
    regime.check_time(t_max)?;
    let is_entangled = entangled(regime, s);
    let is_dark = |t| Ok(!is_entangled(t)?);
    let ts = grid(t_max, step)?;

    let first_on = if is_entangled(ts[0])? {
        Some(0)
    } else {
        first_change(&ts, &is_entangled, false)?
    };
    let Some(first_on) = first_on else {
        return Ok(EventReport {
            never_entangled: true,
            ..EventReport::default()
        });
    };
    let rest = &ts[first_on..];
    let Some(k) = first_change(rest, &is_entangled, true)? else {
        return Ok(EventReport::default());
    };
    let (_, t_off) = bisect_predicate(&is_entangled, rest[k - 1], rest[k], REFINE_TOL)?;
    let after = &rest[k..];
    match first_change(after, &is_dark, true)? {
        Some(j) => {
            let (t_on, _) = bisect_predicate(is_dark, after[j - 1], after[j], REFINE_TOL)?;
            Ok(EventReport {
                dark_period: Some((t_off, t_on)),
                ..EventReport::default()
            })
        }
        None => Ok(EventReport {
            death_time: Some(t_off),
            ..EventReport::default()
        }),
    }
}

/// Difference of the shared-bath and separate-bath l1 coherences.
pub fn coherence_gap(s: Squeeze, bath: BathParams, t: f64) -> Result<f64> {
    Ok(l1_coherence(Regime::Common(bath), s, t)?.c_l1 - l1_coherence(Regime::Distinct(bath), s, t)?.c_l1)
}

/// All sign changes of [`coherence_gap`] on `(0, t_max]`. The curves
/// coincide at `t = 0`, which is not counted.
pub fn find_coherence_crossings(s: Squeeze, bath: BathParams, t_max: f64, step: f64) -> Result<Vec<f64>> {
    Regime::Common(bath).check_time(t_max)?;
    let ts = grid(t_max, step)?;
    let gap = |t| coherence_gap(s, bath, t);
    let mut out = Vec::new();
    let mut prev = (ts[1], gap(ts[1])?);
    for &t in &ts[2..] {
        let g = gap(t)?;
        if g != 0.0 && prev.1 != 0.0 && (g > 0.0) != (prev.1 > 0.0) {
            out.push(bisect_root(gap, prev.0, t, REFINE_TOL)?);
        }
        if g != 0.0 {
            prev = (t, g);
        }
    }
    Ok(out)
}

/// Report carrying the first coherence crossing, if any.
pub fn find_crossing(s: Squeeze, bath: BathParams, t_max: f64) -> Result<EventReport> {
    let crossings = find_coherence_crossings(s, bath, t_max, 1e-2)?;
    Ok(EventReport {
        crossing_time: crossings.first().copied(),
        ..EventReport::default()
    })
}
