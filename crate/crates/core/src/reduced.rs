//! Single-particle reduced states and the local quantities built on them.
//!
//! A reduced state is a Gaussian in the off-diagonal coordinate `r = x - y`
//! and the diagonal coordinate `R = (x + y) / 2`:
//!
//! `rho_A(r, R) = norm * exp((c_RR R^2 + c_Rr R r + c_rr r^2) / denom)`.
//!
//! For the environment regimes the exponent coefficients are stored scaled
//! by a common decaying exponential; only their ratios to `denom` matter.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::expoly::{term, ExpPoly};
use crate::gaussian::covariance;
use crate::params::{BathParams, Regime, Squeeze};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedGaussian {
    pub norm: f64,
    /// Coefficient of `R^2`.
    pub coeff_center: f64,
    /// Coefficient of `R r`; purely imaginary.
    pub coeff_mixed: Complex64,
    /// Coefficient of `r^2`.
    pub coeff_relative: f64,
    pub denom: f64,
}

impl ReducedGaussian {
    /// Builds the state from the single-particle block `(<x^2>, <xp>, <p^2>)`.
    pub fn from_moments(xx: f64, xp: f64, pp: f64) -> Result<Self> {
        let det = xx * pp - xp * xp;
        if !(xx > 0.0 && det > 0.0) {
            return Err(Error::NumericalDomain {
                context: "single-particle block",
                value: det,
            });
        }
        Ok(Self {
            norm: 1.0 / (2.0 * PI * xx).sqrt(),
            coeff_center: -1.0,
            coeff_mixed: Complex64::new(0.0, 2.0 * xp),
            coeff_relative: -det,
            denom: 2.0 * xx,
        })
    }

    /// `rho_A(r, R)`.
    pub fn evaluate(&self, r: f64, big_r: f64) -> Complex64 {
        let exponent = (self.coeff_mixed * (big_r * r)
            + Complex64::from(self.coeff_center * big_r * big_r + self.coeff_relative * r * r))
            / self.denom;
        exponent.exp() * self.norm
    }

    /// Variance of the diagonal Gaussian `rho_A(0, R)`.
    pub fn center_variance(&self) -> f64 {
        -self.denom / (2.0 * self.coeff_center)
    }

    /// Variance parameter of `|rho_A|` along `r`.
    pub fn relative_variance(&self) -> f64 {
        -self.denom / (2.0 * self.coeff_relative)
    }

    /// `integral dR rho_A(0, R)`, analytically.
    pub fn trace(&self) -> f64 {
        self.norm * (PI * self.denom / -self.coeff_center).sqrt()
    }

    /// `-A` where `A` is the unscaled coefficient of `r^2`.
    fn relative_rate(&self) -> f64 {
        -self.coeff_relative / self.denom
    }

    fn is_normalizable(&self) -> bool {
        self.denom > 0.0 && self.coeff_center < 0.0 && self.coeff_relative < 0.0 && self.norm > 0.0
    }
}

/// Closed-form reduced state of either particle at time `t`.
pub fn reduced_gaussian(regime: Regime, s: Squeeze, t: f64) -> Result<ReducedGaussian> {
    regime.check_time(t)?;
    let state = match regime {
        Regime::Schrodinger => {
            let c = covariance(regime, s, t)?;
            ReducedGaussian::from_moments(c.xx11, c.xp11, c.pp11)?
        }
        Regime::Distinct(bath) => distinct_state(s.value(), &bath, t),
        Regime::Common(bath) => common_state(s.value(), &bath, t),
    };
    if !state.is_normalizable() || !state.norm.is_finite() || !state.denom.is_finite() {
        return Err(Error::NumericalDomain {
            context: "reduced state coefficients",
            value: state.coeff_relative / state.denom,
        });
    }
    Ok(state)
}

/// Scale `e^{-4 gamma t}` is divided out of every coefficient.
fn distinct_state(s: f64, bath: &BathParams, t: f64) -> ReducedGaussian {
    let g = bath.gamma();
    let g2 = g * g;
    let temp = bath.temperature();
    let u = g * t;
    let (em2, em4, em6, em8) = ((-2.0 * s).exp(), (-4.0 * s).exp(), (-6.0 * s).exp(), (-8.0 * s).exp());

    let width = ExpPoly::new(&[
        term(4.0 * g2, 0, 4.0),
        term(1.0, 0, 4.0),
        term(-2.0, 0, 2.0),
        term(1.0, 0, 0.0),
    ])
    .eval(u, 4.0);
    let heat = ExpPoly::new(&[
        term(16.0, 1, 4.0),
        term(-12.0, 0, 4.0),
        term(16.0, 0, 2.0),
        term(-4.0, 0, 0.0),
    ])
    .eval(u, 4.0);
    let rise = ExpPoly::new(&[term(1.0, 0, 2.0), term(-1.0, 0, 0.0)]);
    let rise_sq = (&rise * &rise).eval(u, 4.0);

    let linear = ExpPoly::new(&[
        term(4.0 * g2, 0, 0.0),
        term(-4.0 * g2, 0, 4.0),
        term(-4.0, 1, 0.0),
        term(4.0, 0, 2.0),
        term(-1.0, 0, 4.0),
        term(-3.0, 0, 0.0),
    ])
    .eval(u, 4.0);
    let quadratic = ExpPoly::new(&[
        term(16.0, 1, 4.0),
        term(-16.0, 1, 0.0),
        term(-16.0, 0, 4.0),
        term(32.0, 0, 2.0),
        term(-16.0, 0, 0.0),
    ])
    .eval(u, 4.0);

    let decay = (-4.0 * u).exp();
    let coeff_relative = -g2 * (1.0 + 2.0 * em4 + em8) * decay + linear * (em2 + em6) * temp
        - quadratic * em4 * temp * temp;
    ReducedGaussian {
        norm: 2.0 * 2f64.sqrt() * g * (-s).exp() / (PI * (width * (1.0 + em4) + heat * em2 * temp)).sqrt(),
        coeff_center: -16.0 * g2 * em4,
        coeff_mixed: Complex64::new(
            0.0,
            4.0 * g * rise.eval(u, 4.0) * (em2 + em6) + 16.0 * g * rise_sq * em4 * temp,
        ),
        coeff_relative,
        denom: 2.0 * width * (em2 + em6) + 2.0 * heat * em4 * temp,
    }
}

/// Scale `e^{-8 gamma t}` is divided out of every coefficient.
fn common_state(s: f64, bath: &BathParams, t: f64) -> ReducedGaussian {
    let g = bath.gamma();
    let g2 = g * g;
    let temp = bath.temperature();
    let u = g * t;
    let t2 = t * t;
    let (em2, em4, em6, em8) = ((-2.0 * s).exp(), (-4.0 * s).exp(), (-6.0 * s).exp(), (-8.0 * s).exp());
    let decay = (-8.0 * u).exp();

    let width = ExpPoly::new(&[
        term(16.0 * g2, 0, 8.0),
        term(1.0, 0, 8.0),
        term(-2.0, 0, 4.0),
        term(1.0, 0, 0.0),
    ])
    .eval(u, 8.0);
    let heat = ExpPoly::new(&[
        term(16.0, 1, 8.0),
        term(-6.0, 0, 8.0),
        term(8.0, 0, 4.0),
        term(-2.0, 0, 0.0),
    ])
    .eval(u, 8.0);
    let spread = 16.0 * g2 * (t2 + 1.0);
    let rise = ExpPoly::new(&[term(1.0, 0, 4.0), term(-1.0, 0, 0.0)]);

    let quiet = ExpPoly::new(&[
        term(16.0 * g2 * (1.0 + t2), 0, 0.0),
        term(16.0 * g2 + 1.0, 0, 8.0),
        term(8.0, 1, 0.0),
        term(-8.0, 1, 4.0),
        term(-2.0, 0, 4.0),
        term(1.0, 0, 0.0),
    ])
    .eval(u, 8.0);
    let linear_even = ExpPoly::new(&[
        term(-2.0 * (16.0 * g2 * (1.0 + t2) + 1.0), 0, 0.0),
        term(-16.0, 1, 0.0),
        term(32.0 * g2 * (t2 + 1.0) - 6.0, 0, 8.0),
        term(32.0, 1, 4.0),
        term(8.0, 0, 4.0),
    ])
    .eval(u, 8.0);
    let linear_odd = ExpPoly::new(&[
        term(6.0 - 32.0 * g2, 0, 0.0),
        term(16.0, 1, 0.0),
        term(32.0 * g2 + 2.0, 0, 8.0),
        term(-8.0, 0, 4.0),
    ])
    .eval(u, 8.0);
    let bend = ExpPoly::new(&[
        term(2.0, 1, 4.0),
        term(2.0, 1, 0.0),
        term(-1.0, 0, 4.0),
        term(1.0, 0, 0.0),
    ]);
    let quadratic = (&rise * &bend).eval(u, 8.0);

    let purity_radicand = 16.0 * g2
        + quiet * em4
        + 16.0 * g2 * em8 * decay
        + (linear_even * em2 + linear_odd * em6) * temp
        + 16.0 * quadratic * em4 * temp * temp;
    let rise_sq = (&rise * &rise).eval(u, 8.0);

    ReducedGaussian {
        norm: 4.0 * 2f64.sqrt() * g * (-s).exp() / (PI * (spread + width * em4 + heat * em2 * temp)).sqrt(),
        coeff_center: -256.0 * g2 * em4,
        coeff_mixed: Complex64::new(
            0.0,
            128.0 * g * u * em2 + 32.0 * g * rise.eval(u, 8.0) * em6 + 64.0 * g * rise_sq * em4 * temp,
        ),
        coeff_relative: -purity_radicand,
        denom: 8.0 * spread * em2 + 8.0 * width * em6 + 8.0 * heat * em4 * temp,
    }
}

/// Long-time limit of the l1-norm coherence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StationaryCoherence {
    Finite(f64),
    /// Isolated particles keep spreading; coherence grows without bound.
    Unbounded,
}

impl StationaryCoherence {
    pub fn value(self) -> Option<f64> {
        match self {
            StationaryCoherence::Finite(v) => Some(v),
            StationaryCoherence::Unbounded => None,
        }
    }
}

pub fn stationary_coherence(regime: Regime) -> StationaryCoherence {
    match regime {
        Regime::Schrodinger => StationaryCoherence::Unbounded,
        Regime::Distinct(b) => StationaryCoherence::Finite((2.0 * PI / b.temperature()).sqrt()),
        Regime::Common(b) => StationaryCoherence::Finite(2.0 * (PI / b.temperature()).sqrt()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherenceReport {
    /// l1-norm coherence `integral |rho_A(x, y)| dx dy`.
    pub c_l1: f64,
    /// Off-diagonal width `1 / sqrt(-8 A)`, equal to `c_l1 / (2 sqrt(2 pi))`.
    pub coherence_length: f64,
    pub stationary: StationaryCoherence,
}

pub fn l1_coherence(regime: Regime, s: Squeeze, t: f64) -> Result<CoherenceReport> {
    let state = reduced_gaussian(regime, s, t)?;
    let ratio = PI * state.denom / -state.coeff_relative;
    if !(ratio > 0.0 && ratio.is_finite()) {
        return Err(Error::NumericalDomain {
            context: "l1 coherence ratio",
            value: ratio,
        });
    }
    Ok(CoherenceReport {
        c_l1: ratio.sqrt(),
        coherence_length: 1.0 / (8.0 * state.relative_rate()).sqrt(),
        stationary: stationary_coherence(regime),
    })
}

pub fn coherence_length(report: &CoherenceReport) -> f64 {
    report.coherence_length
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyReport {
    pub purity: f64,
    pub linear_entropy: f64,
    /// Coefficient of `gamma t` in the small-time expansion of the entropy.
    pub short_time_slope: f64,
}

pub fn purity_entropy(regime: Regime, s: Squeeze, t: f64) -> Result<EntropyReport> {
    regime.check_time(t)?;
    let purity = match regime {
        Regime::Schrodinger => 1.0 / (2.0 * s.value()).cosh(),
        Regime::Distinct(b) => {
            let state = distinct_state(s.value(), &b, t);
            closed_purity(2.0 * b.gamma(), s.value(), -state.coeff_relative)?
        }
        Regime::Common(b) => {
            let state = common_state(s.value(), &b, t);
            closed_purity(8.0 * b.gamma(), s.value(), -state.coeff_relative)?
        }
    };
    Ok(EntropyReport {
        purity,
        linear_entropy: 1.0 - purity,
        short_time_slope: short_time_slope(regime, s),
    })
}

fn closed_purity(prefactor: f64, s: f64, radicand: f64) -> Result<f64> {
    if !(radicand > 0.0 && radicand.is_finite()) {
        return Err(Error::NumericalDomain {
            context: "purity radicand",
            value: radicand,
        });
    }
    Ok(prefactor * (-2.0 * s).exp() / radicand.sqrt())
}

/// `dS/d(gamma t)` at `t = 0`; zero for isolated particles.
pub fn short_time_slope(regime: Regime, s: Squeeze) -> f64 {
    let s = s.value();
    let sech = 1.0 / (2.0 * s).cosh();
    match regime {
        Regime::Schrodinger => 0.0,
        Regime::Distinct(b) => 2.0 * sech * (2.0 * sech * b.temperature() - 1.0),
        Regime::Common(b) => {
            2.0 * sech * (1.0 - (2.0 * s).tanh()) * (2.0 * (2.0 * s).exp() * b.temperature() - 1.0)
        }
    }
}
