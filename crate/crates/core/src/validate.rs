//! Cross-checks of the closed forms against the numerical oracles.

use rayon::prelude::*;

use crate::epr::{epr_measures, EprReport};
use crate::error::Result;
use crate::gaussian::{covariance, deltatilde_detsigma_common, log_negativity, symplectic_analysis};
use crate::oracle::{integrate_moments, max_deviation, quad_l1_coherence, quad_purity, QuadratureSpec};
use crate::params::{BathParams, Regime, Squeeze};
use crate::reduced::{l1_coherence, purity_entropy, reduced_gaussian};

/// Outcome of one check: `passed` iff `error <= tolerance`.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub error: f64,
    pub tolerance: f64,
}

impl Check {
    pub fn new(name: impl Into<String>, error: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            error,
            tolerance,
        }
    }

    pub fn passed(&self) -> bool {
        self.error <= self.tolerance
    }
}

fn both(g: f64, temp: f64) -> [Regime; 2] {
    let b = BathParams::new(g, temp).expect("valid bath");
    [Regime::Distinct(b), Regime::Common(b)]
}

fn sq(s: f64) -> Squeeze {
    Squeeze::new(s).expect("finite squeeze")
}

/// Parameter sets of the moment-dynamics comparison.
pub fn dynamics_cases() -> Vec<(Regime, Squeeze)> {
    let mut v = Vec::new();
    for regime in both(0.1, 10.0) {
        v.push((regime, sq(0.0)));
        v.push((regime, sq(1.15)));
    }
    for regime in both(0.2, 15.0) {
        v.push((regime, sq(0.4)));
    }
    v
}

/// Largest entrywise RK4-versus-closed-form deviation on `[0, t_end]`.
pub fn rk4_deviation(regime: Regime, s: Squeeze, t_end: f64, steps: usize) -> Result<f64> {
    max_deviation(regime, s, &integrate_moments(regime, s, t_end, steps)?)
}

/// Parameter sets of the quadrature comparison.
pub fn quadrature_cases() -> Vec<(Regime, Squeeze)> {
    let mut v = Vec::new();
    for temp in [5.0, 10.0, 15.0] {
        for regime in both(0.1, temp) {
            v.push((regime, sq(0.0)));
            v.push((regime, sq(1.15)));
        }
    }
    v
}

/// Twenty sample times spread over `[0, 10]`.
pub fn quadrature_times() -> Vec<f64> {
    (0..20).map(|i| 10.0 * i as f64 / 19.0).collect()
}

/// Worst relative errors `(coherence, purity)` of the closed forms against
/// quadrature over `times`.
pub fn quadrature_errors(regime: Regime, s: Squeeze, times: &[f64], spec: &QuadratureSpec) -> Result<(f64, f64)> {
    let per_time = times
        .par_iter()
        .map(|&t| {
            let state = reduced_gaussian(regime, s, t)?;
            let c = l1_coherence(regime, s, t)?.c_l1;
            let p = purity_entropy(regime, s, t)?.purity;
            let qc = quad_l1_coherence(&state, spec)?;
            let qp = quad_purity(&state, spec)?;
            Ok(((c - qc).abs() / qc, (p - qp).abs() / qp))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(per_time
        .into_iter()
        .fold((0.0_f64, 0.0_f64), |(a, b), (c, p)| (a.max(c), b.max(p))))
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1e-12)
}

/// Every oracle comparison, in a fixed order.
pub fn run_all() -> Result<Vec<Check>> {
    let mut checks = Vec::new();

    let mut worst = 0.0_f64;
    for (regime, s) in dynamics_cases() {
        worst = worst.max(rk4_deviation(regime, s, 10.0, 10_000)?);
    }
    checks.push(Check::new("rk4 moments vs closed-form covariance (abs)", worst, 1e-6));

    let spec = QuadratureSpec::default();
    let times = quadrature_times();
    let (mut wc, mut wp) = (0.0_f64, 0.0_f64);
    for (regime, s) in quadrature_cases() {
        let (c, p) = quadrature_errors(regime, s, &times, &spec)?;
        wc = wc.max(c);
        wp = wp.max(p);
    }
    checks.push(Check::new("quadrature l1 coherence vs closed form (rel)", wc, 1e-6));
    checks.push(Check::new("quadrature purity vs closed form (rel)", wp, 1e-6));

    let mut worst = 0.0_f64;
    let b = BathParams::new(0.2, 10.0)?;
    for s in [0.0, 0.8, 1.15, 1.5] {
        for i in 0..=50 {
            let t = 0.4 * i as f64;
            let (dt, ds) = deltatilde_detsigma_common(sq(s), &b, t)?;
            let r = symplectic_analysis(&covariance(Regime::Common(b), sq(s), t)?)?;
            worst = worst.max(rel(dt, r.delta_tilde)).max(rel(ds, r.det_sigma));
        }
    }
    checks.push(Check::new("shared-bath invariants, two paths (rel)", worst, 1e-9));

    let mut worst = 0.0_f64;
    for regime in both(0.2, 10.0) {
        for s in [0.0, 0.8, 1.15, 1.5] {
            for i in 0..=100 {
                let t = 0.2 * i as f64;
                let direct = symplectic_analysis(&covariance(regime, sq(s), t)?)?.log_negativity;
                worst = worst.max((log_negativity(regime, sq(s), t)? - direct).abs());
            }
        }
    }
    checks.push(Check::new("negativity, mode blocks vs covariance (abs)", worst, 1e-9));

    let mut worst = 0.0_f64;
    for (g, temp) in [(0.1, 10.0), (0.2, 15.0)] {
        for regime in both(g, temp) {
            for s in [0.0, 0.4, 1.15] {
                for i in 0..50 {
                    let t = 0.2 * i as f64;
                    let a = epr_measures(regime, sq(s), t)?;
                    let c = EprReport::from_covariance(&covariance(regime, sq(s), t)?);
                    worst = worst.max(rel(a.xi, c.xi)).max(rel(a.eta, c.eta));
                }
            }
        }
    }
    checks.push(Check::new("EPR closed forms vs covariance (rel)", worst, 1e-9));

    let mut worst = 0.0_f64;
    for regime in both(1e-6, 1e-8) {
        for s in [0.0, 0.5, 1.15] {
            for i in 0..=50 {
                let t = 0.1 * i as f64;
                let a = covariance(regime, sq(s), t)?.matrix();
                let b = covariance(Regime::Schrodinger, sq(s), t)?.matrix();
                for (x, y) in a.iter().flatten().zip(b.iter().flatten()) {
                    worst = worst.max((x - y).abs());
                }
            }
        }
    }
    checks.push(Check::new("weak-bath limit vs isolated particles (abs)", worst, 1e-3));

    Ok(checks)
}
