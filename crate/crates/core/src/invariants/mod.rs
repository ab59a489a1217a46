//! Finite groups acting linearly on `V`, their invariants and `τ_G(V)`.

mod generators;
mod group;
mod hilbert;
mod space;

pub use generators::{minimal_generators, DegreeStep, InvariantGeneratorSet};
pub use group::{act, group_closure, root_of_unity, FiniteGroup, GroupElement, GroupSpec, ScalarLiteral, DEFAULT_GROUP_CAP};
pub use hilbert::{tau, HilbertIdealData};
pub use space::{invariant_space_basis, molien_series, reynolds, InvariantSpace};
