//! Exact multivariate polynomials, monomial orders and symbolic matrices.

pub mod matrix;
pub mod monomial;
pub mod order;
pub mod parse;
pub mod polynomial;
pub mod ring;
pub mod scalar;

pub use matrix::{bareiss_determinant, subsets, SymbolicMatrix};
pub use monomial::{Monomial, MAX_VARS};
pub use order::MonomialOrder;
pub use polynomial::Polynomial;
pub use ring::{Ring, RingRef, Var};
pub use scalar::{ExactField, Scalar};
