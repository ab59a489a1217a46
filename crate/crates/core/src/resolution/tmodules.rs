//! Modules over the coordinate ring `T`: the quotient `T/I` by the Hilbert
//! ideal and the syzygies `U` of the generators.

use crate::error::{Budget, Result};
use crate::field::Field;
use crate::groebner::{module_groebner_basis, FreeModule, ModVec};
use crate::invariants::{HilbertIdealData, InvariantGeneratorSet};

use super::syzygy::minimal_subset;

/// `reg(I) = reg(T/I) + 1`, where `reg(T/I)` is the top degree of the
/// finite-length module `T/I`.
pub fn regularity_hilbert_ideal<F: Field>(hd: &HilbertIdealData<F>) -> u32 {
    let top = hd.standard_monomials_by_degree.iter().rposition(|v| !v.is_empty()).unwrap_or(0);
    top as u32 + 1
}

/// Minimal generator degrees (ascending) of
/// `U = { w ∈ ⊕ T(-d_i) : Σ w_i f_i = 0 }`.
///
/// Computed from a position-over-term basis of the module generated by
/// `f_i e_0 + e_i` in `T ⊕ T(-d_1) ⊕ ... ⊕ T(-d_r)`: the elements without
/// an `e_0` part form a basis of `U`.
pub fn first_syzygies_over_t<F: Field>(gens: &InvariantGeneratorSet<F>, budget: &Budget) -> Result<Vec<u32>> {
    let t = &gens.ring;
    let r = gens.r();
    let mut shifts = vec![0];
    shifts.extend(&gens.degrees);
    let ext = FreeModule::pot(t.clone(), shifts);
    let rows: Vec<ModVec<F::Elem>> = gens
        .generators
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let mut coords = vec![t.zero(); r + 1];
            coords[0] = f.clone();
            coords[i + 1] = t.one();
            ext.from_polynomials(&coords)
        })
        .collect();
    let gb = module_groebner_basis(&ext, &rows, budget)?;
    let u_module = FreeModule::pot(t.clone(), gens.degrees.clone());
    let u_basis: Vec<ModVec<F::Elem>> = gb
        .iter()
        .filter(|v| v.terms()[0].comp >= 1)
        .map(|v| u_module.from_terms(v.terms().iter().map(|term| (term.comp - 1, term.mono.clone(), term.coeff.clone()))))
        .collect();
    let chosen = minimal_subset(&u_module, &u_basis, budget)?;
    Ok(chosen.iter().map(|&i| u_module.degree(&u_basis[i]).unwrap()).collect())
}
