//! Closed-form dynamics of two free particles, initially in a two-mode
//! squeezed Gaussian state, coupled either to separate or to one shared
//! high-temperature Caldeira-Leggett bath.
//!
//! All quantities are dimensionless with vacuum quadrature variance 1/2.
//!
//! ```
//! use dcl::params::{BathParams, Regime, Squeeze};
//!
//! let bath = BathParams::new(0.2, 10.0)?;
//! let s = Squeeze::new(20f64.ln() / 2.0)?;
//! let e_n = dcl::gaussian::log_negativity(Regime::Common(bath), s, 1.0)?;
//! assert!(e_n > 0.0);
//! # Ok::<(), dcl::error::Error>(())
//! ```

pub mod cli;
pub mod config;
pub mod epr;
pub mod error;
pub mod events;
pub mod figures;
pub mod gaussian;
pub mod modes;
pub mod oracle;
pub mod params;
pub mod reduced;
pub mod roots;
pub mod sweep;
pub mod validate;

pub(crate) mod expoly;

pub use error::{Error, Result};
pub use params::{BathParams, Regime, RegimeKind, Squeeze};
