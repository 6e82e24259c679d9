//! Independent numerical paths used to check the closed forms.

pub mod moments;
pub mod quadrature;
pub mod schrodinger;

pub use moments::{integrate, integrate_moments, max_deviation, Generator, MomentVector, Trajectory};
pub use quadrature::{quad_l1_coherence, quad_purity, quad_trace, QuadratureSpec};
pub use schrodinger::{partial_trace, schrodinger_density, total_trace};
