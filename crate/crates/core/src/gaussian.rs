//! Two-mode covariance matrices and their symplectic analysis.
//!
//! Phase-space ordering is `(x1, p1, x2, p2)`; mixed moments are symmetrized,
//! `<x p> = tr((x p + p x)/2 rho)`. First moments vanish in every regime.

use crate::error::{Error, Result};
use crate::expoly::{term, ExpPoly};
use crate::modes::{mode_covariance, Mode, ModeCovariance};
use crate::params::{BathParams, Regime, Squeeze};

/// Relative slack under which `2 nu` is treated as exactly 1.
pub const SEPARABILITY_TOL: f64 = 1e-12;

/// Relative slack allowed on a negative discriminant before it is rejected.
const DISCRIMINANT_TOL: f64 = 1e-9;

/// Symmetric 4x4 second-moment matrix over `(x1, p1, x2, p2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CovarianceMatrix4 {
    pub xx11: f64,
    pub xp11: f64,
    pub pp11: f64,
    pub xx12: f64,
    /// `<x1 p2>`
    pub xp12: f64,
    /// `<p1 x2>`
    pub px12: f64,
    pub pp12: f64,
    pub xx22: f64,
    pub xp22: f64,
    pub pp22: f64,
}

impl CovarianceMatrix4 {
    /// Builds a matrix that is symmetric under particle exchange.
    pub fn exchange_symmetric(xx: f64, xp: f64, pp: f64, xx12: f64, xp12: f64, pp12: f64) -> Self {
        Self {
            xx11: xx,
            xp11: xp,
            pp11: pp,
            xx12,
            xp12,
            px12: xp12,
            pp12,
            xx22: xx,
            xp22: xp,
            pp22: pp,
        }
    }

    pub fn from_matrix(m: &[[f64; 4]; 4]) -> Self {
        Self {
            xx11: m[0][0],
            xp11: m[0][1],
            pp11: m[1][1],
            xx12: m[0][2],
            xp12: m[0][3],
            px12: m[1][2],
            pp12: m[1][3],
            xx22: m[2][2],
            xp22: m[2][3],
            pp22: m[3][3],
        }
    }

    pub fn matrix(&self) -> [[f64; 4]; 4] {
        [
            [self.xx11, self.xp11, self.xx12, self.xp12],
            [self.xp11, self.pp11, self.px12, self.pp12],
            [self.xx12, self.px12, self.xx22, self.xp22],
            [self.xp12, self.pp12, self.xp22, self.pp22],
        ]
    }

    pub fn det_a(&self) -> f64 {
        self.xx11 * self.pp11 - self.xp11 * self.xp11
    }

    pub fn det_b(&self) -> f64 {
        self.xx22 * self.pp22 - self.xp22 * self.xp22
    }

    pub fn det_c(&self) -> f64 {
        self.xx12 * self.pp12 - self.xp12 * self.px12
    }

    pub fn det(&self) -> f64 {
        match self.modes() {
            Some(m) => m.det_sigma(),
            None => det4(&self.matrix()),
        }
    }

    /// Centre-of-mass and relative blocks, when exchange symmetry holds exactly.
    pub fn modes(&self) -> Option<ModeCovariance> {
        (self.exchange_asymmetry() == 0.0).then(|| ModeCovariance {
            plus: Mode::from_moments(self.xx11 + self.xx12, self.xp11 + self.xp12, self.pp11 + self.pp12),
            minus: Mode::from_moments(self.xx11 - self.xx12, self.xp11 - self.xp12, self.pp11 - self.pp12),
        })
    }

    /// Largest deviation from particle-exchange symmetry.
    pub fn exchange_asymmetry(&self) -> f64 {
        [
            self.xx11 - self.xx22,
            self.xp11 - self.xp22,
            self.pp11 - self.pp22,
            self.xp12 - self.px12,
        ]
        .iter()
        .fold(0.0_f64, |m, d| m.max(d.abs()))
    }

    /// Variance of the relative position `x1 - x2`.
    pub fn relative_position_variance(&self) -> f64 {
        self.xx11 + self.xx22 - 2.0 * self.xx12
    }

    /// Variance of the total momentum `p1 + p2`.
    pub fn total_momentum_variance(&self) -> f64 {
        self.pp11 + self.pp22 + 2.0 * self.pp12
    }

    /// Smallest symplectic eigenvalue of the matrix itself (not its partial
    /// transpose). Physical states have it at least 1/2.
    pub fn smallest_symplectic_eigenvalue(&self) -> Result<f64> {
        if let Some(m) = self.modes() {
            let det = m.plus.det.min(m.minus.det);
            if det.is_nan() || det <= 0.0 {
                return Err(Error::NumericalDomain {
                    context: "symplectic spectrum",
                    value: det,
                });
            }
            return Ok(det.sqrt());
        }
        let delta = self.det_a() + self.det_b() + 2.0 * self.det_c();
        smaller_symplectic_eigenvalue(delta, self.det(), "symplectic spectrum")
    }
}

fn det4(m: &[[f64; 4]; 4]) -> f64 {
    let s0 = m[0][0] * m[1][1] - m[1][0] * m[0][1];
    let s1 = m[0][0] * m[1][2] - m[1][0] * m[0][2];
    let s2 = m[0][0] * m[1][3] - m[1][0] * m[0][3];
    let s3 = m[0][1] * m[1][2] - m[1][1] * m[0][2];
    let s4 = m[0][1] * m[1][3] - m[1][1] * m[0][3];
    let s5 = m[0][2] * m[1][3] - m[1][2] * m[0][3];
    let c5 = m[2][2] * m[3][3] - m[3][2] * m[2][3];
    let c4 = m[2][1] * m[3][3] - m[3][1] * m[2][3];
    let c3 = m[2][1] * m[3][2] - m[3][1] * m[2][2];
    let c2 = m[2][0] * m[3][3] - m[3][0] * m[2][3];
    let c1 = m[2][0] * m[3][2] - m[3][0] * m[2][2];
    let c0 = m[2][0] * m[3][1] - m[3][0] * m[2][1];
    s0 * c5 - s1 * c4 + s2 * c3 + s3 * c2 - s4 * c1 + s5 * c0
}

/// `nu_-` from a two-mode invariant and `det sigma`, using
/// `nu_-^2 = (delta - sqrt(delta^2 - 4 det)) / 2` in its cancellation-free form.
fn smaller_symplectic_eigenvalue(delta: f64, det: f64, context: &'static str) -> Result<f64> {
    nu_minus_from_discriminant(delta, det, delta * delta - 4.0 * det, context)
}

fn nu_minus_from_discriminant(delta: f64, det: f64, disc: f64, context: &'static str) -> Result<f64> {
    let disc = if disc < 0.0 {
        if disc < -DISCRIMINANT_TOL * delta * delta {
            return Err(Error::NumericalDomain {
                context,
                value: disc,
            });
        }
        0.0
    } else {
        disc
    };
    let denom = delta + disc.sqrt();
    if !(det > 0.0 && denom > 0.0) {
        return Err(Error::NumericalDomain {
            context,
            value: det,
        });
    }
    Ok((2.0 * det / denom).sqrt())
}

/// Closed-form covariance matrix at time `t`.
pub fn covariance(regime: Regime, s: Squeeze, t: f64) -> Result<CovarianceMatrix4> {
    regime.check_time(t)?;
    let s = s.value();
    let cov = match regime {
        Regime::Schrodinger => schrodinger_covariance(s, t),
        Regime::Distinct(bath) => distinct_covariance(s, &bath, t),
        Regime::Common(bath) => common_covariance(s, &bath, t),
    };
    finite_or_overflow(cov, &regime, t)
}

fn finite_or_overflow(cov: CovarianceMatrix4, regime: &Regime, t: f64) -> Result<CovarianceMatrix4> {
    if cov.matrix().iter().flatten().all(|v| v.is_finite()) {
        Ok(cov)
    } else {
        Err(Error::OverflowDomain {
            t,
            t_max: regime.t_max(),
            gamma: regime.bath().map_or(0.0, BathParams::gamma),
        })
    }
}

fn schrodinger_covariance(s: f64, t: f64) -> CovarianceMatrix4 {
    let ch = (2.0 * s).cosh();
    let sh = (2.0 * s).sinh();
    CovarianceMatrix4::exchange_symmetric(
        0.5 * (1.0 + t * t) * ch,
        0.5 * t * ch,
        0.5 * ch,
        0.5 * (1.0 - t * t) * sh,
        -0.5 * t * sh,
        -0.5 * sh,
    )
}

fn distinct_covariance(s: f64, bath: &BathParams, t: f64) -> CovarianceMatrix4 {
    let g = bath.gamma();
    let temp = bath.temperature();
    let u = g * t;
    let g2 = g * g;
    let em2 = (-2.0 * s).exp();
    let ep4 = (4.0 * s).exp();
    let ch = (2.0 * s).cosh();
    let sh = (2.0 * s).sinh();

    // (4g^2 + 1) e^{4u} - 2 e^{2u} + 1, carried with e^{-4u}
    let spread = ExpPoly::new(&[
        term(4.0 * g2, 0, 4.0),
        term(1.0, 0, 4.0),
        term(-2.0, 0, 2.0),
        term(1.0, 0, 0.0),
    ]);
    // -4u + e^{-4u} - 4 e^{-2u} + 3
    let thermal = ExpPoly::new(&[
        term(-4.0, 1, 0.0),
        term(1.0, 0, -4.0),
        term(-4.0, 0, -2.0),
        term(3.0, 0, 0.0),
    ]);
    // (4g^2 - 1) e^{4u} + 2 e^{2u} - 1
    let cross = ExpPoly::new(&[
        term(4.0 * g2, 0, 4.0),
        term(-1.0, 0, 4.0),
        term(2.0, 0, 2.0),
        term(-1.0, 0, 0.0),
    ]);

    let sinh_u = u.sinh();
    let xx = (ep4 + 1.0) * em2 * spread.eval(u, 4.0) / (16.0 * g2) - thermal.eval(u, 0.0) / (4.0 * g2) * temp;
    let xp = ch * (-3.0 * u).exp() * sinh_u / (2.0 * g) + 2.0 * (-2.0 * u).exp() * sinh_u * sinh_u / g * temp;
    let pp = 0.25 * (ep4 + 1.0) * em2 * (-4.0 * u).exp() - (-4.0 * u).exp_m1() * temp;
    let xx12 = (ep4 - 1.0) * em2 * cross.eval(u, 4.0) / (16.0 * g2);
    let xp12 = -sh * (-3.0 * u).exp() * sinh_u / (2.0 * g);
    let pp12 = -0.5 * sh * (-4.0 * u).exp();
    CovarianceMatrix4::exchange_symmetric(xx, xp, pp, xx12, xp12, pp12)
}

fn common_covariance(s: f64, bath: &BathParams, t: f64) -> CovarianceMatrix4 {
    let g = bath.gamma();
    let temp = bath.temperature();
    let u = g * t;
    let g2 = g * g;
    let t2 = t * t;
    let em2 = (-2.0 * s).exp();
    let ep4 = (4.0 * s).exp();

    let spread = ExpPoly::new(&[
        term(16.0 * g2 * (ep4 * (t2 + 1.0) + 1.0), 0, 8.0),
        term(1.0, 0, 8.0),
        term(-2.0, 0, 4.0),
        term(1.0, 0, 0.0),
    ]);
    let spread12 = ExpPoly::new(&[
        term(1.0, 0, 8.0),
        term(-16.0 * g2 * (ep4 * (t2 - 1.0) + 1.0), 0, 8.0),
        term(-2.0, 0, 4.0),
        term(1.0, 0, 0.0),
    ]);
    // -8u + e^{-8u} - 4 e^{-4u} + 3
    let thermal = ExpPoly::new(&[
        term(-8.0, 1, 0.0),
        term(1.0, 0, -8.0),
        term(-4.0, 0, -4.0),
        term(3.0, 0, 0.0),
    ]);
    let drift = ExpPoly::new(&[term(4.0 * ep4, 1, 8.0), term(1.0, 0, 4.0), term(-1.0, 0, 0.0)]);
    let drift12 = ExpPoly::new(&[term(-4.0 * ep4, 1, 8.0), term(1.0, 0, 4.0), term(-1.0, 0, 0.0)]);
    // (e^{4u} - 1)^2
    let rise = ExpPoly::new(&[term(1.0, 0, 4.0), term(-1.0, 0, 0.0)]);
    let rise_sq = &rise * &rise;

    let relax = -(-8.0 * u).exp_m1();
    let thermal_x = thermal.eval(u, 0.0) / (32.0 * g2) * temp;
    let thermal_xp = rise_sq.eval(u, 8.0) / (8.0 * g) * temp;

    let xx = em2 * spread.eval(u, 8.0) / (64.0 * g2) - thermal_x;
    let xp = em2 * drift.eval(u, 8.0) / (16.0 * g) + thermal_xp;
    let pp = 0.25 * em2 * (ep4 + (-8.0 * u).exp()) + 0.5 * relax * temp;
    let xx12 = em2 * spread12.eval(u, 8.0) / (64.0 * g2) - thermal_x;
    let xp12 = em2 * drift12.eval(u, 8.0) / (16.0 * g) + thermal_xp;
    let pp12 = 0.25 * em2 * ((-8.0 * u).exp() - ep4) + 0.5 * relax * temp;
    CovarianceMatrix4::exchange_symmetric(xx, xp, pp, xx12, xp12, pp12)
}

/// Determinant invariants, smallest partially-transposed symplectic
/// eigenvalue and logarithmic negativity of a two-mode Gaussian state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymplecticReport {
    pub det_a: f64,
    pub det_b: f64,
    pub det_c: f64,
    pub det_sigma: f64,
    /// `det A + det B - 2 det C`
    pub delta_tilde: f64,
    pub nu_tilde_minus: f64,
    /// Base-2 logarithmic negativity.
    pub log_negativity: f64,
    pub separable: bool,
}

/// Peres-Simon analysis: partial transposition flips the sign of `det C`.
pub fn symplectic_analysis(cov: &CovarianceMatrix4) -> Result<SymplecticReport> {
    let det_a = cov.det_a();
    let det_b = cov.det_b();
    let det_c = cov.det_c();
    if let Some(m) = cov.modes() {
        let nu = nu_minus_from_discriminant(
            m.delta_tilde(),
            m.det_sigma(),
            m.discriminant(),
            "partially transposed spectrum",
        )?;
        return Ok(report_from_nu(det_a, det_b, det_c, m.det_sigma(), m.delta_tilde(), nu));
    }
    let det_sigma = cov.det();
    let delta_tilde = det_a + det_b - 2.0 * det_c;
    report_from_invariants(det_a, det_b, det_c, det_sigma, delta_tilde)
}

pub(crate) fn report_from_invariants(
    det_a: f64,
    det_b: f64,
    det_c: f64,
    det_sigma: f64,
    delta_tilde: f64,
) -> Result<SymplecticReport> {
    let nu = smaller_symplectic_eigenvalue(delta_tilde, det_sigma, "partially transposed spectrum")?;
    Ok(report_from_nu(det_a, det_b, det_c, det_sigma, delta_tilde, nu))
}

fn report_from_nu(det_a: f64, det_b: f64, det_c: f64, det_sigma: f64, delta_tilde: f64, nu: f64) -> SymplecticReport {
    let (nu_tilde_minus, log_negativity) = negativity_from_nu(nu);
    SymplecticReport {
        det_a,
        det_b,
        det_c,
        det_sigma,
        delta_tilde,
        nu_tilde_minus,
        log_negativity,
        separable: log_negativity == 0.0,
    }
}

/// Snaps `nu` onto 1/2 inside [`SEPARABILITY_TOL`], then returns `(nu, E_N)`.
fn negativity_from_nu(nu: f64) -> (f64, f64) {
    let two_nu = 2.0 * nu;
    if (two_nu - 1.0).abs() <= SEPARABILITY_TOL {
        (0.5, 0.0)
    } else if two_nu > 1.0 {
        (nu, 0.0)
    } else {
        (nu, -two_nu.log2())
    }
}

/// `(delta_tilde, det sigma)` for the common environment from their explicit
/// closed forms, independent of the covariance entries.
pub fn deltatilde_detsigma_common(s: Squeeze, bath: &BathParams, t: f64) -> Result<(f64, f64)> {
    let regime = Regime::Common(*bath);
    regime.check_time(t)?;
    let s = s.value();
    let g = bath.gamma();
    let g2 = g * g;
    let temp = bath.temperature();
    let u = g * t;
    let em2 = (-2.0 * s).exp();
    let em4 = (-4.0 * s).exp();
    let em6 = (-6.0 * s).exp();
    let em8 = (-8.0 * s).exp();
    let decay8 = (-8.0 * u).exp();

    // e^{4u} - 1 - 4u
    let lag = ExpPoly::new(&[term(-4.0, 1, 0.0), term(1.0, 0, 4.0), term(-1.0, 0, 0.0)]);
    let lag_sq = &lag * &lag;
    let f_thermal = ExpPoly::new(&[
        term(-32.0, 2, 0.0),
        term(-16.0, 1, 0.0),
        term(-2.0, 0, 0.0),
        term(32.0, 2, 8.0),
        term(-6.0, 0, 8.0),
        term(32.0, 1, 4.0),
        term(8.0, 0, 4.0),
    ]);
    let f = 16.0 * g2
        + lag_sq.eval(u, 8.0) * em4
        + 16.0 * g2 * decay8 * em8
        + (f_thermal.eval(u, 8.0) * em2 - 32.0 * g2 * (-8.0 * u).exp_m1() * em6) * temp;

    let g_thermal = ExpPoly::new(&[
        term(8.0, 1, 0.0),
        term(-4.0, 0, 4.0),
        term(1.0, 0, 8.0),
        term(3.0, 0, 0.0),
    ]);
    let rise = ExpPoly::new(&[term(1.0, 0, 4.0), term(-1.0, 0, 0.0)]);
    let bend = ExpPoly::new(&[
        term(2.0, 1, 0.0),
        term(2.0, 1, 4.0),
        term(-1.0, 0, 4.0),
        term(1.0, 0, 0.0),
    ]);
    let g_quadratic = &rise * &bend;
    let gc = 8.0 * g2 * decay8 * em2
        + (-16.0 * g2 * (-8.0 * u).exp_m1() + g_thermal.eval(u, 8.0) * em4) * temp
        + 8.0 * g_quadratic.eval(u, 8.0) * em2 * temp * temp;

    let delta_tilde = f / (64.0 * g2 * em4);
    let det_sigma = gc / (128.0 * g2 * em2);
    if !(delta_tilde.is_finite() && det_sigma.is_finite()) {
        return Err(Error::OverflowDomain {
            t,
            t_max: regime.t_max(),
            gamma: g,
        });
    }
    Ok((delta_tilde, det_sigma))
}

/// Logarithmic negativity from the explicit common-environment invariants.
pub fn log_negativity_common(s: Squeeze, bath: &BathParams, t: f64) -> Result<f64> {
    let (delta_tilde, det_sigma) = deltatilde_detsigma_common(s, bath, t)?;
    let nu = smaller_symplectic_eigenvalue(delta_tilde, det_sigma, "partially transposed spectrum")?;
    Ok(negativity_from_nu(nu).1)
}

/// Logarithmic negativity of the closed-form state at time `t`. The
/// invariants come from the normal-mode blocks, which stay accurate where the
/// 4x4 determinant of the covariance entries cancels.
pub fn log_negativity(regime: Regime, s: Squeeze, t: f64) -> Result<f64> {
    let modes = mode_covariance(regime, s, t)?;
    let nu = nu_minus_from_discriminant(
        modes.delta_tilde(),
        modes.det_sigma(),
        modes.discriminant(),
        "partially transposed spectrum",
    )?;
    Ok(negativity_from_nu(nu).1)
}
