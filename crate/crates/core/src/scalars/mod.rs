//! Exact coefficient fields.

mod cyclo;
mod gaussian;
mod gcd;
mod laurent;
mod scalar;
pub(crate) mod upoly;

pub use cyclo::{cyclo_order, totient, CycloNumber};
pub use gaussian::Gaussian;
pub use laurent::{Exp2, LaurentPoly};
pub use scalar::Scalar;

/// Gaussian extension of the generic field, used by the `i`-twist checks.
pub type GaussianScalar = Gaussian<Scalar>;
