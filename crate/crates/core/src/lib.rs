//! Multiplication of Mirkovic-Vilonen basis elements of `C[N]` for `GL_m`, computed by
//! fusing generalized orbital varieties inside the Mirkovic-Vybornov slice.

pub mod corpus;
pub mod error;
pub mod fusion;
pub mod ideal;
pub mod poly;
pub mod slice;
pub mod tableau;

pub use error::{AlgebraError, FusionError, TableauError};
pub use fusion::{fuse, FusionOptions, Mode};
pub use tableau::Tableau;

/// Exact rational numbers.
pub type Rational = num_rational::BigRational;
/// Polynomials over the rationals.
pub type QPoly = poly::Polynomial<Rational>;
/// Symbolic matrices over the rationals.
pub type QMatrix = poly::SymbolicMatrix<Rational>;
/// Ideals over the rationals.
pub type QIdeal = ideal::Ideal<Rational>;
