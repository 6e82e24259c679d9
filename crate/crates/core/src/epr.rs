//! EPR uncertainty `xi` and the MGVT product `eta` built from the variances
//! of the relative position `x1 - x2` and the total momentum `p1 + p2`.

use crate::error::Result;
use crate::gaussian::CovarianceMatrix4;
use crate::modes::mode_covariance;
use crate::params::{Regime, Squeeze};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EprReport {
    /// Half-sum of the two variances.
    pub xi: f64,
    /// Product of the two variances.
    pub eta: f64,
    /// `xi < 1`. Not used as a separability test.
    pub nonlocal: bool,
    /// `eta < 1`
    pub mgvt_entangled: bool,
    /// `eta < 1/4`
    pub epr_correlated: bool,
}

impl EprReport {
    pub fn new(xi: f64, eta: f64) -> Self {
        Self {
            xi,
            eta,
            nonlocal: xi < 1.0,
            mgvt_entangled: eta < 1.0,
            epr_correlated: eta < 0.25,
        }
    }

    pub fn from_covariance(cov: &CovarianceMatrix4) -> Self {
        let dx = cov.relative_position_variance();
        let dp = cov.total_momentum_variance();
        Self::new(0.5 * (dx + dp), dx * dp)
    }
}

/// Closed-form EPR measures at time `t`, from the relative-position width of
/// the relative mode and the momentum width of the centre-of-mass mode.
pub fn epr_measures(regime: Regime, s: Squeeze, t: f64) -> Result<EprReport> {
    let modes = mode_covariance(regime, s, t)?;
    let dx = modes.relative_position_variance();
    let dp = modes.total_momentum_variance();
    Ok(EprReport::new(0.5 * (dx + dp), dx * dp))
}

/// Time at which the isolated-particle `eta` reaches 1, or `None` for `s <= 0`.
pub fn schrodinger_eta_crossing(s: Squeeze) -> Option<f64> {
    let s = s.value();
    (s > 0.0).then(|| (-(-4.0 * s).exp_m1()).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::covariance;
    use crate::params::BathParams;

    fn sq(s: f64) -> Squeeze {
        Squeeze::new(s).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1e-12)
    }

    #[test]
    fn closed_forms_match_covariance_combinations() {
        let baths = [(0.1, 10.0), (0.2, 15.0), (0.1, 5.0)];
        for (g, temp) in baths {
            let b = BathParams::new(g, temp).unwrap();
            for regime in [Regime::Schrodinger, Regime::Distinct(b), Regime::Common(b)] {
                for &s in &[0.0, 0.4, 1.15] {
                    for i in 0..50 {
                        let t = 0.2 * i as f64 + 1e-3;
                        let got = epr_measures(regime, sq(s), t).unwrap();
                        let want = EprReport::from_covariance(&covariance(regime, sq(s), t).unwrap());
                        assert!(rel(got.xi, want.xi) < 1e-9, "{regime:?} s={s} t={t}");
                        assert!(rel(got.eta, want.eta) < 1e-9, "{regime:?} s={s} t={t}");
                    }
                }
            }
        }
    }

    #[test]
    fn initial_values_are_regime_independent() {
        let b = BathParams::new(0.2, 15.0).unwrap();
        for regime in [Regime::Schrodinger, Regime::Distinct(b), Regime::Common(b)] {
            let r = epr_measures(regime, sq(0.7), 0.0).unwrap();
            assert!(rel(r.xi, (-1.4f64).exp()) < 1e-12);
            assert!(rel(r.eta, (-2.8f64).exp()) < 1e-12);
        }
    }

    #[test]
    fn strong_squeezing_keeps_full_precision() {
        let b = BathParams::new(0.2, 15.0).unwrap();
        for regime in [Regime::Distinct(b), Regime::Common(b)] {
            let r = epr_measures(regime, sq(2.3), 0.0).unwrap();
            assert!(rel(r.eta, (-9.2f64).exp()) < 1e-14, "{regime:?}");
            assert!(rel(r.xi, (-4.6f64).exp()) < 1e-14, "{regime:?}");
        }
    }

    #[test]
    fn flags_use_strict_thresholds() {
        let r = EprReport::new(1.0, 0.25);
        assert!(!r.nonlocal && r.mgvt_entangled && !r.epr_correlated);
    }

    #[test]
    fn eta_crossing() {
        let s = sq(0.3);
        let tc = schrodinger_eta_crossing(s).unwrap();
        let r = epr_measures(Regime::Schrodinger, s, tc).unwrap();
        assert!((r.eta - 1.0).abs() < 1e-14);
        assert!(schrodinger_eta_crossing(sq(0.0)).is_none());
    }
}
