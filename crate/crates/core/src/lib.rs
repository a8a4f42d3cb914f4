//! Exact computer algebra for Gaussian ideals of generic polynomials.
//!
//! The crate builds the content ideals of generic polynomials over an exact
//! field and checks the identities relating them: the Dedekind–Mertens
//! content formula and its sharpness, reduction numbers, toric and
//! determinantal presentations of the special fiber, primary decompositions
//! of generic contents, and normality of monomial ideals via Newton
//! polyhedra.
//!
//! Layers, bottom up: [`field`] → [`poly`] → [`groebner`] → [`ideals`] →
//! [`monomial`], [`gauss`], [`fiber`] → [`scenario`].

pub mod error;
pub mod fiber;
pub mod field;
pub mod gauss;
pub mod groebner;
pub mod ideals;
pub mod monomial;
pub mod par;
pub mod poly;
pub mod report;
pub mod scenario;

pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use groebner::{Budget, GroebnerBasis, Ideal};
pub use poly::{Monomial, MonomialOrder, PolyRing, Polynomial, UniPoly};
