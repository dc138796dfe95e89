//! Squeeze and Lorentz harmonics.
//!
//! Lorentz boosts act on the `(z, t)` plane as squeeze transformations of the
//! light-cone variables. Harmonic-oscillator wavefunctions boosted this way
//! stay expandable in one fixed orthonormal basis, and the same expansion
//! coefficients describe two-mode squeezed states of light. This crate
//! evaluates those objects and the quantities built on them:
//!
//! * [`special`]: Hermite polynomials, oscillator eigenfunctions, log-space
//!   combinatorics
//! * [`quadrature`]: Gauss–Hermite rules used as the independent oracle
//! * [`kinematics`]: rotations, boosts, light-cone coordinates
//! * [`basis`]: 2D oscillator basis, decomposition, diagonal operators
//! * [`covariant`]: boosted states, their expansion and overlaps
//! * [`density`]: reduced density matrices, purity, entropy, Wigner function
//! * [`two_mode`]: coherent and two-mode squeezed photon states
//! * [`form_factor`]: Breit-frame elastic form factors
//!
//! All quantities are in dimensionless oscillator units.

pub mod basis;
pub mod covariant;
pub mod density;
mod error;
pub mod form_factor;
pub mod kinematics;
pub mod quadrature;
pub mod series;
pub mod special;
pub mod two_mode;

pub use error::{Error, Result};
pub use kinematics::SqueezeParameter;

/// Library version, recorded alongside generated tables.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
