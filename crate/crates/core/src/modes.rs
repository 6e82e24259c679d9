//! Normal-mode form of the two-particle state.
//!
//! In both bath scenarios the centre-of-mass mode `(x1 + x2)/sqrt 2` and the
//! relative mode `(x1 - x2)/sqrt 2` evolve independently, each as a single
//! Brownian particle. Separate baths damp both modes at `2 gamma`; a shared
//! bath damps the centre of mass at `4 gamma` and leaves the relative mode
//! free. Invariants built from the two 2x2 blocks avoid the cancellation of
//! a 4x4 determinant at late times.

use crate::error::{Error, Result};
use crate::gaussian::CovarianceMatrix4;
use crate::params::{Regime, Squeeze};

/// Second moments `(<x^2>, <xp>_sym, <p^2>)` of one mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mode {
    pub xx: f64,
    pub xp: f64,
    pub pp: f64,
    /// `xx pp - xp^2`, exact for a free mode.
    pub det: f64,
}

impl Mode {
    pub fn from_moments(xx: f64, xp: f64, pp: f64) -> Self {
        Self {
            xx,
            xp,
            pp,
            det: xx * pp - xp * xp,
        }
    }

    fn free(xx0: f64, pp0: f64, t: f64) -> Self {
        Self {
            xx: xx0 + pp0 * t * t,
            xp: pp0 * t,
            pp: pp0,
            det: xx0 * pp0,
        }
    }

    /// Damping rate `rate` on the momentum, heated towards temperature `temp`.
    fn brownian(xx0: f64, pp0: f64, rate: f64, temp: f64, t: f64) -> Self {
        let u = rate * t;
        let decay = (-u).exp();
        let g1 = -(-u).exp_m1();
        let g1_r = g1 / rate;
        let xx = xx0 + pp0 * g1_r * g1_r + temp * thermal_spread(u) / (rate * rate);
        let xp = g1_r * (temp * g1 + pp0 * decay);
        let pp = pp0 * decay * decay - temp * (-2.0 * u).exp_m1();
        Self {
            xx,
            xp,
            pp,
            det: xx * pp - xp * xp,
        }
    }
}

/// `2u - 3 + 4e^{-u} - e^{-2u}`, by its Taylor series for small `u`.
fn thermal_spread(u: f64) -> f64 {
    if u >= 1.0 {
        return 2.0 * u - 3.0 + 4.0 * (-u).exp() - (-2.0 * u).exp();
    }
    let mut sum = 0.0;
    let mut power = u * u / 2.0;
    let mut two_k = 4.0;
    for k in 3..60 {
        power *= -u / k as f64;
        two_k *= 2.0;
        let term = (4.0 - two_k) * power;
        sum += term;
        if term.abs() <= 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeCovariance {
    /// Centre-of-mass mode.
    pub plus: Mode,
    /// Relative mode.
    pub minus: Mode,
}

impl ModeCovariance {
    /// `det sigma`
    pub fn det_sigma(&self) -> f64 {
        self.plus.det * self.minus.det
    }

    /// `det A + det B - 2 det C`, the mixed determinant of the two blocks.
    pub fn delta_tilde(&self) -> f64 {
        let (p, m) = (&self.plus, &self.minus);
        p.xx * m.pp + p.pp * m.xx - 2.0 * p.xp * m.xp
    }

    /// `delta_tilde^2 - 4 det sigma`, factored so that it vanishes exactly
    /// when the two blocks are proportional.
    pub fn discriminant(&self) -> f64 {
        let (p, m) = (&self.plus, &self.minus);
        let diag = p.xx * m.pp - p.pp * m.xx;
        diag * diag + 4.0 * (p.xx * m.xp - p.xp * m.xx) * (p.pp * m.xp - p.xp * m.pp)
    }

    /// `Var(x1 - x2)`
    pub fn relative_position_variance(&self) -> f64 {
        2.0 * self.minus.xx
    }

    /// `Var(p1 + p2)`
    pub fn total_momentum_variance(&self) -> f64 {
        2.0 * self.plus.pp
    }

    pub fn to_covariance(&self) -> CovarianceMatrix4 {
        let (p, m) = (&self.plus, &self.minus);
        CovarianceMatrix4::exchange_symmetric(
            0.5 * (p.xx + m.xx),
            0.5 * (p.xp + m.xp),
            0.5 * (p.pp + m.pp),
            0.5 * (p.xx - m.xx),
            0.5 * (p.xp - m.xp),
            0.5 * (p.pp - m.pp),
        )
    }
}

pub fn mode_covariance(regime: Regime, s: Squeeze, t: f64) -> Result<ModeCovariance> {
    regime.check_time(t)?;
    let wide = 0.5 * (2.0 * s.value()).exp();
    let narrow = 0.5 * (-2.0 * s.value()).exp();
    let modes = match regime {
        Regime::Schrodinger => ModeCovariance {
            plus: Mode::free(wide, narrow, t),
            minus: Mode::free(narrow, wide, t),
        },
        Regime::Distinct(b) => {
            let rate = 2.0 * b.gamma();
            ModeCovariance {
                plus: Mode::brownian(wide, narrow, rate, b.temperature(), t),
                minus: Mode::brownian(narrow, wide, rate, b.temperature(), t),
            }
        }
        Regime::Common(b) => ModeCovariance {
            plus: Mode::brownian(wide, narrow, 4.0 * b.gamma(), b.temperature(), t),
            minus: Mode::free(narrow, wide, t),
        },
    };
    let finite = [modes.plus, modes.minus]
        .iter()
        .all(|m| m.xx.is_finite() && m.xp.is_finite() && m.pp.is_finite());
    if !finite {
        return Err(Error::OverflowDomain {
            t,
            t_max: regime.t_max(),
            gamma: regime.bath().map_or(0.0, |b| b.gamma()),
        });
    }
    Ok(modes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::covariance;
    use crate::params::BathParams;

    #[test]
    fn series_meets_direct_form() {
        let direct = |u: f64| 2.0 * u - 3.0 + 4.0 * (-u).exp() - (-2.0 * u).exp();
        for u in [0.5, 0.9, 0.999] {
            assert!((thermal_spread(u) - direct(u)).abs() <= 1e-14 * direct(u), "{u}");
        }
        let u = 1e-4;
        assert!((thermal_spread(u) / (2.0 / 3.0 * u.powi(3)) - 1.0).abs() < 1e-3);
    }

    #[test]
    fn blocks_rebuild_the_covariance() {
        let b = BathParams::new(0.15, 7.0).unwrap();
        for regime in [Regime::Schrodinger, Regime::Distinct(b), Regime::Common(b)] {
            for s in [-0.3, 0.0, 0.9, 1.8] {
                for t in [0.0, 0.01, 0.7, 3.0, 25.0] {
                    let sq = Squeeze::new(s).unwrap();
                    let a = mode_covariance(regime, sq, t).unwrap().to_covariance().matrix();
                    let c = covariance(regime, sq, t).unwrap().matrix();
                    for (x, y) in a.iter().flatten().zip(c.iter().flatten()) {
                        let scale = c.iter().flatten().fold(1.0_f64, |m, v| m.max(v.abs()));
                        assert!((x - y).abs() <= 1e-11 * scale, "{regime:?} s={s} t={t}: {x} vs {y}");
                    }
                }
            }
        }
    }

    #[test]
    fn discriminant_matches_its_definition() {
        let b = BathParams::new(0.2, 10.0).unwrap();
        for regime in [Regime::Distinct(b), Regime::Common(b)] {
            let m = mode_covariance(regime, Squeeze::new(0.8).unwrap(), 1.7).unwrap();
            let direct = m.delta_tilde().powi(2) - 4.0 * m.det_sigma();
            assert!((m.discriminant() - direct).abs() < 1e-12 * m.delta_tilde().powi(2));
        }
        let m = mode_covariance(Regime::Schrodinger, Squeeze::new(0.0).unwrap(), 1.3).unwrap();
        assert_eq!(m.discriminant(), 0.0);
    }

    #[test]
    fn relative_mode_is_pure_in_a_shared_bath() {
        let b = BathParams::new(0.2, 10.0).unwrap();
        let m = mode_covariance(Regime::Common(b), Squeeze::new(1.5).unwrap(), 4000.0).unwrap();
        assert_eq!(m.minus.det, 0.25);
        let by_entries = m.minus.xx * m.minus.pp - m.minus.xp * m.minus.xp;
        assert!((by_entries - 0.25).abs() < 1e-14 * m.minus.xx * m.minus.pp);
    }
}
