//! Model parameters in dimensionless units.
//!
//! Positions are measured in units of a reference width, momenta in the
//! conjugate unit, and the vacuum quadrature variance is 1/2.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest admissible damping exponent `gamma * t`.
pub const MAX_GAMMA_T: f64 = 1.0e3;

/// Largest admissible time. Free relative-mode moments grow like `t^2`, so the
/// block determinants lose roughly `2 log10(t)` digits to cancellation.
pub const MAX_T: f64 = 1.0e4;

/// Squeezing parameter of the initial two-particle state.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Squeeze(f64);

impl Squeeze {
    pub fn new(s: f64) -> Result<Self> {
        if !s.is_finite() {
            return Err(Error::InvalidParams {
                name: "squeeze",
                reason: format!("must be finite, got {s}"),
            });
        }
        Ok(Self(s))
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }
}

/// Damping rate and temperature of a high-temperature Caldeira-Leggett bath.
///
/// The diffusion coefficient is derived, never stored: `D = 2 gamma T`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BathParams {
    gamma: f64,
    temperature: f64,
}

impl BathParams {
    pub fn new(gamma: f64, temperature: f64) -> Result<Self> {
        if !(gamma.is_finite() && gamma > 0.0) {
            return Err(Error::InvalidParams {
                name: "gamma",
                reason: format!("must be finite and > 0, got {gamma}"),
            });
        }
        if !(temperature.is_finite() && temperature > 0.0) {
            return Err(Error::InvalidParams {
                name: "temperature",
                reason: format!("must be finite and > 0, got {temperature}"),
            });
        }
        Ok(Self { gamma, temperature })
    }

    #[inline]
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    #[inline]
    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    #[inline]
    pub fn diffusion(&self) -> f64 {
        2.0 * self.gamma * self.temperature
    }

    /// Latest time at which closed forms are evaluated for this bath.
    pub fn t_max(&self) -> f64 {
        (MAX_GAMMA_T / self.gamma).min(MAX_T)
    }
}

/// Environment scenario, with the bath attached where one exists.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Regime {
    /// Isolated particles: zero damping and zero temperature.
    Schrodinger,
    /// Each particle couples to its own bath.
    Distinct(BathParams),
    /// Both particles couple to one shared bath.
    Common(BathParams),
}

impl Regime {
    pub fn kind(&self) -> RegimeKind {
        match self {
            Regime::Schrodinger => RegimeKind::Schrodinger,
            Regime::Distinct(_) => RegimeKind::Distinct,
            Regime::Common(_) => RegimeKind::Common,
        }
    }

    pub fn bath(&self) -> Option<&BathParams> {
        match self {
            Regime::Schrodinger => None,
            Regime::Distinct(b) | Regime::Common(b) => Some(b),
        }
    }

    pub fn t_max(&self) -> f64 {
        self.bath().map_or(MAX_T, BathParams::t_max)
    }

    /// Validates `t` against finiteness, sign and the stability bound.
    pub fn check_time(&self, t: f64) -> Result<()> {
        if !t.is_finite() || t < 0.0 {
            return Err(Error::InvalidParams {
                name: "t",
                reason: format!("must be finite and >= 0, got {t}"),
            });
        }
        let t_max = self.t_max();
        if t > t_max {
            return Err(Error::OverflowDomain {
                t,
                t_max,
                gamma: self.bath().map_or(0.0, BathParams::gamma),
            });
        }
        Ok(())
    }
}

/// Parameter-free regime selector, as accepted on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RegimeKind {
    Schrodinger,
    Distinct,
    Common,
}

impl RegimeKind {
    pub const ALL: [RegimeKind; 3] = [
        RegimeKind::Schrodinger,
        RegimeKind::Distinct,
        RegimeKind::Common,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RegimeKind::Schrodinger => "schrodinger",
            RegimeKind::Distinct => "distinct",
            RegimeKind::Common => "common",
        }
    }

    /// Attaches a bath. `bath` is ignored for the Schrodinger regime.
    pub fn with_bath(self, bath: BathParams) -> Regime {
        match self {
            RegimeKind::Schrodinger => Regime::Schrodinger,
            RegimeKind::Distinct => Regime::Distinct(bath),
            RegimeKind::Common => Regime::Common(bath),
        }
    }
}

impl fmt::Display for RegimeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RegimeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "schrodinger" | "sch" => Ok(RegimeKind::Schrodinger),
            "distinct" | "dis" => Ok(RegimeKind::Distinct),
            "common" | "com" => Ok(RegimeKind::Common),
            other => Err(Error::InvalidParams {
                name: "regime",
                reason: format!("unknown regime `{other}`"),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diffusion_is_derived() {
        let b = BathParams::new(0.1, 10.0).unwrap();
        assert_eq!(b.diffusion(), 2.0 * 0.1 * 10.0);
    }

    #[test]
    fn rejects_bad_bath() {
        assert!(BathParams::new(0.0, 1.0).is_err());
        assert!(BathParams::new(0.1, -1.0).is_err());
        assert!(BathParams::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn squeeze_rejects_nan_only() {
        assert!(Squeeze::new(f64::NAN).is_err());
        assert!(Squeeze::new(f64::INFINITY).is_err());
        assert!(Squeeze::new(-0.3).is_ok());
    }

    #[test]
    fn time_bound() {
        let r = Regime::Distinct(BathParams::new(0.2, 10.0).unwrap());
        assert_eq!(r.t_max(), 5000.0);
        assert!(r.check_time(5000.0).is_ok());
        assert!(matches!(
            r.check_time(5000.1),
            Err(Error::OverflowDomain { .. })
        ));
        assert!(r.check_time(-1.0).is_err());
        assert_eq!(Regime::Schrodinger.t_max(), MAX_T);
    }

    #[test]
    fn regime_kind_parses() {
        assert_eq!("Common".parse::<RegimeKind>().unwrap(), RegimeKind::Common);
        assert!("vacuum".parse::<RegimeKind>().is_err());
    }
}
