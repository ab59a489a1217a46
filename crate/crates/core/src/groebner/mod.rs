//! Gröbner bases of ideals and of submodules of graded free modules.

mod engine;
mod ideal;
mod module;

pub use engine::{module_groebner_basis, reduce};
pub use ideal::{
    buchberger, buchberger_with_budget, eliminate, normal_form, standard_monomials, Elimination, GroebnerBasis,
    StandardMonomials,
};
pub use module::{FreeModule, ModTerm, ModVec, ModuleOrder, SchreyerFrame};
