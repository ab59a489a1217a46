//! The Hilbert ideal `I = (f_1..f_r)` of `T` and `τ_G(V)`.

use super::generators::InvariantGeneratorSet;
use crate::error::{Budget, Error, Result};
use crate::field::Field;
use crate::groebner::{buchberger_with_budget, GroebnerBasis, StandardMonomials};
use crate::poly::Monomial;

#[derive(Clone, Debug)]
pub struct HilbertIdealData<F: Field> {
    /// Smallest `d` with `T_d ⊆ I`.
    pub tau: u32,
    /// Standard monomials of `T/I`, indexed by degree.
    pub standard_monomials_by_degree: Vec<Vec<Monomial>>,
    pub hilbert_ideal_basis: GroebnerBasis<F>,
}

impl<F: Field> HilbertIdealData<F> {
    pub fn hilbert_function(&self) -> Vec<usize> {
        self.standard_monomials_by_degree.iter().map(Vec::len).collect()
    }

    /// No empty degree is followed by a nonempty one.
    pub fn has_no_gaps(&self) -> bool {
        let hf = self.hilbert_function();
        hf.windows(2).all(|w| w[0] > 0 || w[1] == 0)
    }
}

/// Gröbner basis of `I` in `T` and the degree past the last standard
/// monomial. Asserts `τ <= |G|`.
pub fn tau<F: Field>(
    group_order: usize,
    gens: &InvariantGeneratorSet<F>,
    budget: &Budget,
) -> Result<HilbertIdealData<F>> {
    let gb = buchberger_with_budget(&gens.ring, &gens.generators, budget)?;
    let by_degree = match gb.standard_monomials() {
        StandardMonomials::Finite { by_degree } => by_degree,
        StandardMonomials::InfiniteDimensional => {
            return Err(Error::Internal(
                "Hilbert ideal is not zero-dimensional; the generators cannot generate the invariant ring".into(),
            ))
        }
    };
    let tau = by_degree.len() as u32;
    let data = HilbertIdealData { tau, standard_monomials_by_degree: by_degree, hilbert_ideal_basis: gb };
    if !data.has_no_gaps() {
        return Err(Error::Internal("standard monomials of T/I have a gap".into()));
    }
    if tau as usize > group_order {
        return Err(Error::BoundViolation(format!("τ = {tau} exceeds the Fogarty bound |G| = {group_order}")));
    }
    Ok(data)
}
