//! Graded free modules `⊕ R(-shift_i)` over a [`GradedRing`] and their
//! elements, with position-over-term and Schreyer-induced orders.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Arc;

use crate::field::Field;
use crate::poly::{GradedRing, Monomial, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModTerm<E> {
    pub comp: usize,
    pub mono: Monomial,
    pub coeff: E,
}

/// Element of a free module: terms sorted strictly descending under the
/// module order, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModVec<E> {
    pub(crate) terms: Vec<ModTerm<E>>,
}

impl<E> ModVec<E> {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[ModTerm<E>] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&ModTerm<E>> {
        self.terms.first()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Schreyer frame: basis vector `e_j` is ordered through the leading term of
/// its image. `totals[j]` is the product of all leading monomials down to the
/// base ring, `chains[j]` the component indices along the way (ending in `j`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchreyerFrame {
    pub totals: Vec<Monomial>,
    pub chains: Vec<Vec<u32>>,
}

impl SchreyerFrame {
    /// Frame of the rank-one module `R` itself.
    pub fn base(nvars: usize) -> Self {
        Self { totals: vec![Monomial::one(nvars)], chains: vec![Vec::new()] }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleOrder {
    /// Component first (lower index is larger), then the ring order.
    PositionOverTerm,
    /// `m e_j > n e_k` iff `m * total_j > n * total_k`, ties broken by the
    /// component chains with lower indices larger.
    Schreyer(Arc<SchreyerFrame>),
}

#[derive(Clone, Debug)]
pub struct FreeModule<F: Field> {
    ring: GradedRing<F>,
    shifts: Vec<u32>,
    order: ModuleOrder,
}

impl<F: Field> FreeModule<F> {
    pub fn new(ring: GradedRing<F>, shifts: Vec<u32>, order: ModuleOrder) -> Self {
        if let ModuleOrder::Schreyer(frame) = &order {
            assert_eq!(frame.totals.len(), shifts.len(), "frame size does not match rank");
        }
        Self { ring, shifts, order }
    }

    pub fn pot(ring: GradedRing<F>, shifts: Vec<u32>) -> Self {
        Self::new(ring, shifts, ModuleOrder::PositionOverTerm)
    }

    pub fn ring(&self) -> &GradedRing<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn shifts(&self) -> &[u32] {
        &self.shifts
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    #[inline]
    pub fn cmp(&self, ac: usize, am: &Monomial, bc: usize, bm: &Monomial) -> Ordering {
        match &self.order {
            ModuleOrder::PositionOverTerm => bc.cmp(&ac).then_with(|| self.ring.cmp(am, bm)),
            ModuleOrder::Schreyer(frame) => {
                if ac == bc {
                    return self.ring.cmp(am, bm);
                }
                self.ring
                    .order()
                    .cmp_products(am, &frame.totals[ac], bm, &frame.totals[bc])
                    .then_with(|| {
                        let (ca, cb) = (&frame.chains[ac], &frame.chains[bc]);
                        for (x, y) in ca.iter().zip(cb) {
                            if x != y {
                                return y.cmp(x);
                            }
                        }
                        cb.len().cmp(&ca.len())
                    })
            }
        }
    }

    pub fn term_degree(&self, comp: usize, mono: &Monomial) -> u32 {
        self.ring.weighted_degree(mono) + self.shifts[comp]
    }

    /// Degree of the leading term (the degree of a homogeneous element).
    pub fn degree(&self, v: &ModVec<F::Elem>) -> Option<u32> {
        v.lead().map(|t| self.term_degree(t.comp, &t.mono))
    }

    pub fn is_homogeneous(&self, v: &ModVec<F::Elem>) -> bool {
        let mut degs = v.terms.iter().map(|t| self.term_degree(t.comp, &t.mono));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn is_well_formed(&self, v: &ModVec<F::Elem>) -> bool {
        v.terms.iter().all(|t| t.comp < self.rank() && !self.field().is_zero(&t.coeff))
            && v.terms
                .windows(2)
                .all(|w| self.cmp(w[0].comp, &w[0].mono, w[1].comp, &w[1].mono) == Ordering::Greater)
    }

    pub fn from_terms(&self, terms: impl IntoIterator<Item = (usize, Monomial, F::Elem)>) -> ModVec<F::Elem> {
        let k = self.field();
        let mut acc: HashMap<(usize, Monomial), F::Elem> = HashMap::new();
        for (c, m, x) in terms {
            assert!(c < self.rank(), "component out of range");
            match acc.get_mut(&(c, m.clone())) {
                Some(v) => *v = k.add(v, &x),
                None => {
                    acc.insert((c, m), x);
                }
            }
        }
        let mut terms: Vec<ModTerm<F::Elem>> = acc
            .into_iter()
            .filter(|(_, x)| !k.is_zero(x))
            .map(|((comp, mono), coeff)| ModTerm { comp, mono, coeff })
            .collect();
        self.sort_terms(&mut terms);
        ModVec { terms }
    }

    fn sort_terms(&self, terms: &mut [ModTerm<F::Elem>]) {
        terms.sort_by(|a, b| self.cmp(b.comp, &b.mono, a.comp, &a.mono));
    }

    /// Re-sorts terms of a vector of a module with the same rank.
    pub fn reorder(&self, v: &ModVec<F::Elem>) -> ModVec<F::Elem> {
        let mut terms = v.terms.clone();
        self.sort_terms(&mut terms);
        ModVec { terms }
    }

    /// `p * e_comp`.
    pub fn from_polynomial(&self, p: &Polynomial<F::Elem>, comp: usize) -> ModVec<F::Elem> {
        self.from_terms(p.terms().iter().map(|t| (comp, t.mono.clone(), t.coeff.clone())))
    }

    /// Sum of `polys[i] * e_i`.
    pub fn from_polynomials(&self, polys: &[Polynomial<F::Elem>]) -> ModVec<F::Elem> {
        self.from_terms(
            polys
                .iter()
                .enumerate()
                .flat_map(|(i, p)| p.terms().iter().map(move |t| (i, t.mono.clone(), t.coeff.clone()))),
        )
    }

    /// The coordinate of `v` along `e_comp`.
    pub fn component(&self, v: &ModVec<F::Elem>, comp: usize) -> Polynomial<F::Elem> {
        self.ring.from_terms(
            v.terms.iter().filter(|t| t.comp == comp).map(|t| (t.mono.clone(), t.coeff.clone())),
        )
    }

    pub fn add(&self, a: &ModVec<F::Elem>, b: &ModVec<F::Elem>) -> ModVec<F::Elem> {
        let one = self.field().neg(&self.field().one());
        self.sub_mul_term_slice(&a.terms, &one, &self.ring.one_monomial(), b)
    }

    pub fn sub(&self, a: &ModVec<F::Elem>, b: &ModVec<F::Elem>) -> ModVec<F::Elem> {
        self.sub_mul_term_slice(&a.terms, &self.field().one(), &self.ring.one_monomial(), b)
    }

    /// `c * m * v`.
    pub fn mul_term(&self, v: &ModVec<F::Elem>, m: &Monomial, c: &F::Elem) -> ModVec<F::Elem> {
        let k = self.field();
        if k.is_zero(c) {
            return ModVec::zero();
        }
        ModVec {
            terms: v
                .terms
                .iter()
                .map(|t| ModTerm { comp: t.comp, mono: t.mono.mul(m), coeff: k.mul(&t.coeff, c) })
                .collect(),
        }
    }

    /// `p * v` for a ring element `p`.
    pub fn mul_poly(&self, v: &ModVec<F::Elem>, p: &Polynomial<F::Elem>) -> ModVec<F::Elem> {
        let k = self.field();
        self.from_terms(p.terms().iter().flat_map(|pt| {
            v.terms
                .iter()
                .map(move |t| (t.comp, t.mono.mul(&pt.mono), k.mul(&t.coeff, &pt.coeff)))
        }))
    }

    pub fn scale(&self, v: &ModVec<F::Elem>, c: &F::Elem) -> ModVec<F::Elem> {
        self.mul_term(v, &self.ring.one_monomial(), c)
    }

    pub fn make_monic(&self, v: &ModVec<F::Elem>) -> ModVec<F::Elem> {
        match v.lead() {
            None => v.clone(),
            Some(t) if self.field().is_one(&t.coeff) => v.clone(),
            Some(t) => self.scale(v, &self.field().inv(&t.coeff).unwrap()),
        }
    }

    /// Canonical scalar multiple (see [`Field::normalizer`]).
    pub fn normalize(&self, v: &ModVec<F::Elem>) -> ModVec<F::Elem> {
        if v.is_zero() {
            return v.clone();
        }
        let c = self.field().normalizer(v.terms.iter().map(|t| &t.coeff));
        self.scale(v, &c)
    }

    /// `f - c * m * g`.
    pub fn sub_mul_term(
        &self,
        f: &ModVec<F::Elem>,
        c: &F::Elem,
        m: &Monomial,
        g: &ModVec<F::Elem>,
    ) -> ModVec<F::Elem> {
        self.sub_mul_term_slice(&f.terms, c, m, g)
    }

    pub(crate) fn sub_mul_term_slice(
        &self,
        f: &[ModTerm<F::Elem>],
        c: &F::Elem,
        m: &Monomial,
        g: &ModVec<F::Elem>,
    ) -> ModVec<F::Elem> {
        let k = self.field();
        if k.is_zero(c) {
            return ModVec { terms: f.to_vec() };
        }
        let mut out = Vec::with_capacity(f.len() + g.len());
        let mut i = 0;
        for gt in &g.terms {
            let gm = gt.mono.mul(m);
            loop {
                if i < f.len() {
                    match self.cmp(f[i].comp, &f[i].mono, gt.comp, &gm) {
                        Ordering::Greater => {
                            out.push(f[i].clone());
                            i += 1;
                            continue;
                        }
                        Ordering::Equal => {
                            let mut v = f[i].coeff.clone();
                            k.sub_mul_assign(&mut v, c, &gt.coeff);
                            if !k.is_zero(&v) {
                                out.push(ModTerm { comp: gt.comp, mono: gm, coeff: v });
                            }
                            i += 1;
                            break;
                        }
                        Ordering::Less => {}
                    }
                }
                out.push(ModTerm { comp: gt.comp, mono: gm, coeff: k.neg(&k.mul(c, &gt.coeff)) });
                break;
            }
        }
        out.extend_from_slice(&f[i..]);
        ModVec { terms: out }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::poly::text::parse;

    #[test]
    fn pot_prefers_lower_component() {
        let r = GradedRing::standard(Rationals, "y", 2);
        let m = FreeModule::pot(r.clone(), vec![0, 5]);
        let big = Monomial::from_exponents(&[9, 9]);
        let one = Monomial::one(2);
        assert_eq!(m.cmp(0, &one, 1, &big), Ordering::Greater);
        assert_eq!(m.term_degree(1, &one), 5);
    }

    #[test]
    fn schreyer_compares_through_frame() {
        let r = GradedRing::standard(Rationals, "y", 2);
        let frame = SchreyerFrame {
            totals: vec![Monomial::from_exponents(&[2, 0]), Monomial::from_exponents(&[0, 2])],
            chains: vec![vec![0], vec![1]],
        };
        let m = FreeModule::new(r, vec![2, 2], ModuleOrder::Schreyer(Arc::new(frame)));
        let one = Monomial::one(2);
        // y1^2 > y2^2 in grevlex, so e_0 > e_1
        assert_eq!(m.cmp(0, &one, 1, &one), Ordering::Greater);
        // y2^2 * e_0 = y1^2 y2^2 = y1^2 * e_1, tie broken by index
        let a = Monomial::from_exponents(&[0, 2]);
        let b = Monomial::from_exponents(&[2, 0]);
        assert_eq!(m.cmp(0, &a, 1, &b), Ordering::Greater);
    }

    #[test]
    fn vector_arithmetic() {
        let r = GradedRing::standard(Rationals, "y", 2);
        let m = FreeModule::pot(r.clone(), vec![1, 1]);
        let v = m.from_polynomials(&[parse(&r, "y1").unwrap(), parse(&r, "y2").unwrap()]);
        let w = m.from_polynomials(&[parse(&r, "y2").unwrap(), parse(&r, "-y1").unwrap()]);
        let s = m.add(&v, &w);
        assert!(m.is_well_formed(&s));
        assert_eq!(m.component(&s, 0), parse(&r, "y1 + y2").unwrap());
        assert_eq!(m.component(&s, 1), parse(&r, "y2 - y1").unwrap());
        assert!(m.sub(&s, &s).is_zero());
        assert!(m.is_homogeneous(&s));
        assert_eq!(m.degree(&s), Some(2));
    }
}
