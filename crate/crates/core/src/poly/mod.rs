//! Multivariate polynomials over a [`Field`](crate::field::Field) with
//! weighted gradings and monomial orders, plus univariate rational
//! functions for Hilbert series.

mod monomial;
mod order;
mod ring;
pub mod text;
pub mod univariate;

pub use monomial::{monomials_of_degree, Monomial};
pub use order::{compare_monomials, MonomialOrder, TermOrder};
pub use ring::{GradedRing, Polynomial, Term};
pub use univariate::{rational_function_normalize, RationalFunction, UniPoly};
