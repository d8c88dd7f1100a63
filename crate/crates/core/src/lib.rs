pub mod algebra;
pub mod central;
pub mod dickson;
pub mod error;
pub mod parser;
pub mod rep_oracle;
pub mod ring;
pub mod sampling;
pub mod scalars;

pub use error::{Error, Result};
pub use ring::{Field, Rational, Ring};
pub use scalars::{CycloNumber, Gaussian, GaussianScalar, LaurentPoly, Scalar};

/// Algebra over the generic parameter field `Q(r^{1/4}, s^{1/4})`.
pub type GenericAlgebra = algebra::Algebra<Scalar>;
pub type GenericElement = algebra::AlgebraElement<Scalar>;
/// Algebra with parameters specialized to roots of unity.
pub type RootOfUnityAlgebra = algebra::Algebra<CycloNumber>;
pub type RootOfUnityElement = algebra::AlgebraElement<CycloNumber>;
/// Algebra with rational parameter values.
pub type RationalAlgebra = algebra::Algebra<Rational>;
pub type RationalElement = algebra::AlgebraElement<Rational>;
