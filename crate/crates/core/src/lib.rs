//! Exact invariant rings of finite groups, their syzygy ideals and minimal
//! free resolutions, with checks of the classical degree bounds.

pub mod error;
pub mod field;
pub mod groebner;
pub mod harness;
pub mod invariants;
pub mod linalg;
pub mod poly;
pub mod resolution;

pub use error::{Budget, Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
