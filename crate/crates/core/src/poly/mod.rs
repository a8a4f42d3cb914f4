//! Multivariate polynomials over an exact field.

mod monomial;
mod polynomial;
mod ring;
pub mod text;
mod unipoly;

pub use monomial::{Exponent, Monomial, MonomialOrder};
pub use polynomial::{Polynomial, Term};
pub use ring::PolyRing;
pub use unipoly::UniPoly;

pub(crate) use polynomial::merge_add;
pub(crate) use ring::same_ring;
