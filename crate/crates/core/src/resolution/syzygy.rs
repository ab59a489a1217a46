//! The syzygy ideal `J = ker(S -> R)` and minimal generator degrees of
//! graded submodules.

use std::collections::HashMap;

use crate::error::{Budget, Error, Result};
use crate::field::Field;
use crate::groebner::{buchberger_with_budget, eliminate, FreeModule, GroebnerBasis, ModVec};
use crate::invariants::InvariantGeneratorSet;
use crate::linalg::SparseEchelon;
use crate::poly::{GradedRing, Monomial, MonomialOrder, Polynomial};

#[derive(Clone, Debug)]
pub struct SyzygyIdeal<F: Field> {
    /// `S = K[x_1..x_r]` with `deg x_i = d_i`.
    pub ring: GradedRing<F>,
    pub basis: GroebnerBasis<F>,
    /// Basis elements forming a minimal generating set, ascending degree.
    pub minimal_generators: Vec<Polynomial<F::Elem>>,
    pub minimal_generator_degrees: Vec<u32>,
}

impl<F: Field> SyzygyIdeal<F> {
    /// `β¹`: the largest degree of a minimal relation, 0 when `J = 0`.
    pub fn beta1(&self) -> u32 {
        self.minimal_generator_degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }
}

/// The weighted ring `S` presenting the invariant ring.
pub fn presentation_ring<F: Field>(gens: &InvariantGeneratorSet<F>) -> Result<GradedRing<F>> {
    GradedRing::with_prefix(gens.ring.field().clone(), "x", gens.degrees.clone(), MonomialOrder::WeightedGrevlex)
}

/// `J` by eliminating `y` from `(x_i - f_i(y))`.
pub fn syzygy_ideal<F: Field>(gens: &InvariantGeneratorSet<F>, budget: &Budget) -> Result<SyzygyIdeal<F>> {
    let t = &gens.ring;
    let n = t.nvars();
    let r = gens.r();
    let s = presentation_ring(gens)?;
    let mut names = t.names().to_vec();
    names.extend(s.names().iter().cloned());
    let mut weights = t.weights().to_vec();
    weights.extend(&gens.degrees);
    let big = GradedRing::new(t.field().clone(), names, weights, MonomialOrder::BlockElimination { first_block: n })?;
    let y_map: Vec<usize> = (0..n).collect();
    let ideal: Vec<_> = gens
        .generators
        .iter()
        .enumerate()
        .map(|(i, f)| big.sub(&big.var(n + i), &t.map_variables(f, &big, &y_map)))
        .collect();
    let elim = eliminate(&big, &ideal, n, budget)?;
    debug_assert_eq!(elim.ring.nvars(), r);
    let basis = buchberger_with_budget(&s, &elim.generators, budget)?;
    let module = FreeModule::pot(s.clone(), vec![0]);
    let vecs: Vec<_> = basis.elements().iter().map(|g| module.from_polynomial(g, 0)).collect();
    let chosen = minimal_subset(&module, &vecs, budget)?;
    let minimal_generators: Vec<_> = chosen.iter().map(|&i| basis.elements()[i].clone()).collect();
    let minimal_generator_degrees = minimal_generators.iter().map(|g| s.degree(g).unwrap()).collect();
    Ok(SyzygyIdeal { ring: s, basis, minimal_generators, minimal_generator_degrees })
}

/// Multiset of minimal generator degrees of `J`, from its basis.
pub fn minimal_generator_degrees<F: Field>(j: &SyzygyIdeal<F>, budget: &Budget) -> Result<Vec<u32>> {
    let module = FreeModule::pot(j.ring.clone(), vec![0]);
    let vecs: Vec<_> = j.basis.elements().iter().map(|g| module.from_polynomial(g, 0)).collect();
    let chosen = minimal_subset(&module, &vecs, budget)?;
    Ok(chosen.iter().map(|&i| module.degree(&vecs[i]).unwrap()).collect())
}

/// Indices of a minimal generating subset of the homogeneous elements
/// `elems`, scanning degrees upward. In degree `δ` an element is kept when
/// it is independent of all multiples `m * g` with `deg m > 0`; the number
/// kept is `dim (M / 𝔫M)_δ`.
pub fn minimal_subset<F: Field>(
    module: &FreeModule<F>,
    elems: &[ModVec<F::Elem>],
    budget: &Budget,
) -> Result<Vec<usize>> {
    let ring = module.ring();
    let k = module.field();
    let mut degrees = Vec::with_capacity(elems.len());
    for e in elems {
        if e.is_zero() || !module.is_homogeneous(e) {
            return Err(Error::Internal("minimal generators need nonzero homogeneous elements".into()));
        }
        degrees.push(module.degree(e).unwrap());
    }
    let mut levels: Vec<u32> = degrees.clone();
    levels.sort_unstable();
    levels.dedup();
    let mut chosen = Vec::new();
    let mut monomials_by_degree: HashMap<u32, Vec<Monomial>> = HashMap::new();
    for &delta in &levels {
        budget.check("minimal generators")?;
        let mut index: HashMap<(usize, Monomial), usize> = HashMap::new();
        let mut column = |c: usize, m: &Monomial| {
            let next = index.len();
            *index.entry((c, m.clone())).or_insert(next)
        };
        let mut ech = SparseEchelon::new(k.clone());
        for (g, &dg) in elems.iter().zip(&degrees) {
            if dg >= delta {
                continue;
            }
            let multipliers = monomials_by_degree
                .entry(delta - dg)
                .or_insert_with(|| ring.monomials_of_degree(delta - dg));
            for m in multipliers.iter() {
                let mut v: Vec<(usize, F::Elem)> =
                    g.terms().iter().map(|t| (column(t.comp, &t.mono.mul(m)), t.coeff.clone())).collect();
                v.sort_by_key(|(c, _)| *c);
                ech.insert(v);
            }
        }
        for (i, (g, &dg)) in elems.iter().zip(&degrees).enumerate() {
            if dg != delta {
                continue;
            }
            let mut v: Vec<(usize, F::Elem)> =
                g.terms().iter().map(|t| (column(t.comp, &t.mono), t.coeff.clone())).collect();
            v.sort_by_key(|(c, _)| *c);
            if ech.insert(v) {
                chosen.push(i);
            }
        }
    }
    Ok(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::invariants::{group_closure, minimal_generators, GroupSpec};
    use crate::linalg::{kernel_basis, DenseMatrix};
    use crate::poly::text::render;

    fn gens_of<F: Field>(k: &F, spec: GroupSpec) -> InvariantGeneratorSet<F> {
        let g = group_closure(k, &spec, 1000).unwrap();
        minimal_generators(&g, None, &Budget::unlimited()).unwrap().0
    }

    fn perm(n: usize, gens: &[&[usize]]) -> GroupSpec {
        GroupSpec::Permutation { n, generators: gens.iter().map(|g| g.to_vec()).collect() }
    }

    /// Dimension of `J_δ` as the kernel of `S_δ -> T_δ`, by dense linear algebra.
    fn kernel_dim<F: Field>(gens: &InvariantGeneratorSet<F>, s: &GradedRing<F>, delta: u32) -> usize {
        let t = &gens.ring;
        let src = s.monomials_of_degree(delta);
        let dst = t.monomials_of_degree(delta);
        let images: Vec<_> = src
            .iter()
            .map(|m| s.substitute(&s.term(m.clone(), t.field().one()), &gens.generators, t).unwrap())
            .collect();
        let rows: Vec<Vec<F::Elem>> =
            dst.iter().map(|b| images.iter().map(|p| t.coefficient(p, b)).collect()).collect();
        kernel_basis(t.field(), &DenseMatrix::from_rows(rows, src.len())).cols()
    }

    #[test]
    fn symmetric_group_has_no_relations() {
        let gens = gens_of(&Rationals, perm(3, &[&[1, 0, 2], &[1, 2, 0]]));
        let j = syzygy_ideal(&gens, &Budget::unlimited()).unwrap();
        assert!(j.is_zero());
        assert_eq!(j.beta1(), 0);
        for d in 1..=8 {
            assert_eq!(kernel_dim(&gens, &j.ring, d), 0);
        }
    }

    #[test]
    fn alternating_group_relation() {
        let gens = gens_of(&Rationals, perm(3, &[&[1, 2, 0]]));
        let j = syzygy_ideal(&gens, &Budget::unlimited()).unwrap();
        assert_eq!(j.minimal_generator_degrees, vec![6]);
        assert_eq!(minimal_generator_degrees(&j, &Budget::unlimited()).unwrap(), vec![6]);
        for h in j.basis.elements() {
            assert!(j.ring.substitute(h, &gens.generators, &gens.ring).unwrap().is_zero());
        }
        assert_eq!(kernel_dim(&gens, &j.ring, 6), 1);
        assert_eq!(kernel_dim(&gens, &j.ring, 5), 0);
    }

    #[test]
    fn veronese_relations() {
        let gens = gens_of(&Rationals, GroupSpec::CyclicScalar { m: 2, n: 2 });
        let j = syzygy_ideal(&gens, &Budget::unlimited()).unwrap();
        let shown: Vec<String> = j.minimal_generators.iter().map(|g| render(&j.ring, g)).collect();
        assert_eq!(shown, vec!["x2^2 - x1*x3"]);

        let gens = gens_of(&Rationals, GroupSpec::CyclicScalar { m: 2, n: 3 });
        let j = syzygy_ideal(&gens, &Budget::unlimited()).unwrap();
        assert_eq!(j.minimal_generator_degrees, vec![4; 6]);
        // J_4 is all of the degree-4 kernel since J has nothing lower.
        assert_eq!(kernel_dim(&gens, &j.ring, 4), 6);

        let f7 = PrimeField::new(7).unwrap();
        let gens = gens_of(&f7, GroupSpec::CyclicScalar { m: 3, n: 2 });
        let j = syzygy_ideal(&gens, &Budget::unlimited()).unwrap();
        assert_eq!(j.minimal_generator_degrees, vec![6; 3]);
        assert_eq!(kernel_dim(&gens, &j.ring, 6), 3);
    }
}
