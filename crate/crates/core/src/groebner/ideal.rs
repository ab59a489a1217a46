//! Ideal-level interface: reduced bases, normal forms, elimination and
//! standard monomials.

use std::collections::{BTreeMap, BTreeSet};

use super::engine::{module_groebner_basis, reduce};
use super::module::{FreeModule, ModTerm, ModVec};
use crate::error::{Budget, Error, Result};
use crate::field::Field;
use crate::poly::{GradedRing, Monomial, MonomialOrder, Polynomial};

/// Reduced Gröbner basis of an ideal, sorted by ascending leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    ring: GradedRing<F>,
    elements: Vec<Polynomial<F::Elem>>,
}

fn rank_one<F: Field>(ring: &GradedRing<F>) -> FreeModule<F> {
    FreeModule::pot(ring.clone(), vec![0])
}

fn to_vec<E: Clone>(p: &Polynomial<E>) -> ModVec<E> {
    ModVec { terms: p.terms().iter().map(|t| ModTerm { comp: 0, mono: t.mono.clone(), coeff: t.coeff.clone() }).collect() }
}

fn check_ring<F: Field>(ring: &GradedRing<F>, p: &Polynomial<F::Elem>) -> Result<()> {
    if p.terms().iter().any(|t| t.mono.len() != ring.nvars()) {
        return Err(Error::Input(format!("polynomial does not belong to a ring with {} variables", ring.nvars())));
    }
    Ok(())
}

impl<F: Field> GroebnerBasis<F> {
    pub fn ring(&self) -> &GradedRing<F> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order_kind()
    }

    pub fn elements(&self) -> &[Polynomial<F::Elem>] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial<F::Elem>> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| g.leading_monomial().unwrap().clone()).collect()
    }

    pub fn contains(&self, f: &Polynomial<F::Elem>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn normal_form(&self, f: &Polynomial<F::Elem>) -> Result<Polynomial<F::Elem>> {
        normal_form(f, self)
    }

    /// Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let r = &self.ring;
        let k = r.field();
        for (i, a) in self.elements.iter().enumerate() {
            for b in &self.elements[i + 1..] {
                let (la, lb) = (a.leading_term().unwrap(), b.leading_term().unwrap());
                let l = la.mono.lcm(&lb.mono);
                let left = r.mul_term(a, &l.div(&la.mono).unwrap(), &k.inv(&la.coeff).unwrap());
                let s = r.sub_mul_term(&left, &k.inv(&lb.coeff).unwrap(), &l.div(&lb.mono).unwrap(), b);
                if !normal_form(&s, self).map(|p| p.is_zero()).unwrap_or(false) {
                    return false;
                }
            }
        }
        true
    }

    /// Reducedness: normalized elements, antichain of leading monomials and
    /// no tail term divisible by any leading monomial.
    pub fn is_reduced(&self) -> bool {
        let leads = self.leading_monomials();
        self.elements.iter().all(|g| self.ring.normalize(g) == *g)
            && self.elements.iter().all(|g| {
                g.terms().iter().enumerate().all(|(ti, t)| {
                    leads.iter().all(|l| !l.divides(&t.mono) || (ti == 0 && *l == t.mono))
                })
            })
    }

    pub fn standard_monomials(&self) -> StandardMonomials {
        standard_monomials(self)
    }
}

/// Remainder of `f` modulo the basis.
pub fn normal_form<F: Field>(f: &Polynomial<F::Elem>, gb: &GroebnerBasis<F>) -> Result<Polynomial<F::Elem>> {
    check_ring(&gb.ring, f)?;
    let m = rank_one(&gb.ring);
    let basis: Vec<_> = gb.elements.iter().map(to_vec).collect();
    let nf = reduce(&m, &to_vec(f), &basis);
    Ok(m.component(&nf, 0))
}

/// Reduced Gröbner basis of the ideal generated by `generators` under the
/// ring's order.
pub fn buchberger<F: Field>(ring: &GradedRing<F>, generators: &[Polynomial<F::Elem>]) -> Result<GroebnerBasis<F>> {
    buchberger_with_budget(ring, generators, &Budget::unlimited())
}

pub fn buchberger_with_budget<F: Field>(
    ring: &GradedRing<F>,
    generators: &[Polynomial<F::Elem>],
    budget: &Budget,
) -> Result<GroebnerBasis<F>> {
    for g in generators {
        check_ring(ring, g)?;
    }
    let m = rank_one(ring);
    let gens: Vec<_> = generators.iter().map(|g| to_vec(&ring.reorder(g))).collect();
    let basis = module_groebner_basis(&m, &gens, budget)?;
    Ok(GroebnerBasis { ring: ring.clone(), elements: basis.iter().map(|v| m.component(v, 0)).collect() })
}

/// An elimination ideal, living in the ring of the remaining variables.
#[derive(Clone, Debug)]
pub struct Elimination<F: Field> {
    pub ring: GradedRing<F>,
    pub generators: Vec<Polynomial<F::Elem>>,
}

/// Generators of `(generators) ∩ K[remaining variables]`: the Gröbner basis
/// elements free of the first `eliminate_count` variables. The ring order must
/// eliminate that block; the result ring carries the order used on the
/// remaining block.
pub fn eliminate<F: Field>(
    ring: &GradedRing<F>,
    generators: &[Polynomial<F::Elem>],
    eliminate_count: usize,
    budget: &Budget,
) -> Result<Elimination<F>> {
    let kind = ring.order_kind();
    if !kind.eliminates(eliminate_count) {
        return Err(Error::Input(format!("{kind:?} does not eliminate the first {eliminate_count} variables")));
    }
    let n = ring.nvars();
    let rest_order = match kind {
        MonomialOrder::Lex => MonomialOrder::Lex,
        _ => MonomialOrder::WeightedGrevlex,
    };
    let sub = GradedRing::new(
        ring.field().clone(),
        ring.names()[eliminate_count..].to_vec(),
        ring.weights()[eliminate_count..].to_vec(),
        rest_order,
    )?;
    let gb = buchberger_with_budget(ring, generators, budget)?;
    let generators = gb
        .elements
        .iter()
        .filter(|g| g.terms().iter().all(|t| (0..eliminate_count).all(|i| t.mono.exp(i) == 0)))
        .map(|g| sub.from_terms(g.terms().iter().map(|t| (t.mono.slice(eliminate_count, n), t.coeff.clone()))))
        .collect();
    Ok(Elimination { ring: sub, generators })
}

/// Monomials outside the leading-term ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StandardMonomials {
    /// `by_degree[d]` lists the standard monomials of weighted degree `d`,
    /// descending in the ring order.
    Finite { by_degree: Vec<Vec<Monomial>> },
    /// Some variable has no pure power among the leading monomials.
    InfiniteDimensional,
}

impl StandardMonomials {
    pub fn total(&self) -> Option<usize> {
        match self {
            StandardMonomials::Finite { by_degree } => Some(by_degree.iter().map(Vec::len).sum()),
            StandardMonomials::InfiniteDimensional => None,
        }
    }

    pub fn hilbert_function(&self) -> Option<Vec<usize>> {
        match self {
            StandardMonomials::Finite { by_degree } => Some(by_degree.iter().map(Vec::len).collect()),
            StandardMonomials::InfiniteDimensional => None,
        }
    }

    pub fn top_degree(&self) -> Option<u32> {
        match self {
            StandardMonomials::Finite { by_degree } => by_degree.iter().rposition(|v| !v.is_empty()).map(|d| d as u32),
            StandardMonomials::InfiniteDimensional => None,
        }
    }
}

pub fn standard_monomials<F: Field>(gb: &GroebnerBasis<F>) -> StandardMonomials {
    let r = &gb.ring;
    let n = r.nvars();
    let leads = gb.leading_monomials();
    let pure_power = |i: usize| leads.iter().any(|m| m.exp(i) > 0 && (0..n).all(|j| j == i || m.exp(j) == 0));
    if !(0..n).all(pure_power) {
        return StandardMonomials::InfiniteDimensional;
    }
    let is_standard = |m: &Monomial| !leads.iter().any(|l| l.divides(m));
    let mut by_degree: BTreeMap<u32, BTreeSet<Monomial>> = BTreeMap::new();
    let one = r.one_monomial();
    if is_standard(&one) {
        by_degree.entry(0).or_default().insert(one.clone());
        let mut frontier = vec![one];
        while let Some(m) = frontier.pop() {
            for i in 0..n {
                let mut next = m.clone();
                next.set_exp(i, m.exp(i) + 1);
                if is_standard(&next) {
                    let d = r.weighted_degree(&next);
                    if by_degree.entry(d).or_default().insert(next.clone()) {
                        frontier.push(next);
                    }
                }
            }
        }
    }
    let top = by_degree.keys().next_back().copied();
    let mut out = vec![Vec::new(); top.map_or(0, |t| t as usize + 1)];
    for (d, set) in by_degree {
        let mut v: Vec<Monomial> = set.into_iter().collect();
        v.sort_by(|a, b| r.cmp(b, a));
        out[d as usize] = v;
    }
    StandardMonomials::Finite { by_degree: out }
}
