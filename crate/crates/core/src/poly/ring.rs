use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Arc;

use super::monomial::{monomials_of_degree, Monomial};
use super::order::{MonomialOrder, TermOrder};
use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term<E> {
    pub mono: Monomial,
    pub coeff: E,
}

/// Sparse polynomial; terms sorted strictly descending under the owning
/// ring's order, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<E> {
    terms: Vec<Term<E>>,
}

impl<E> Polynomial<E> {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[Term<E>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<E>> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term<E>> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coeff(&self) -> Option<&E> {
        self.terms.first().map(|t| &t.coeff)
    }
}

/// A polynomial ring `K[v_1, ..., v_n]` with positive weights `deg(v_i)` and
/// a designated monomial order.
#[derive(Clone, Debug)]
pub struct GradedRing<F: Field> {
    field: F,
    names: Arc<[String]>,
    order: TermOrder,
}

impl<F: Field> GradedRing<F> {
    pub fn new(field: F, names: Vec<String>, weights: Vec<u32>, order: MonomialOrder) -> Result<Self> {
        if names.len() != weights.len() {
            return Err(Error::Input(format!(
                "{} variable names but {} weights",
                names.len(),
                weights.len()
            )));
        }
        if weights.contains(&0) {
            return Err(Error::Input("variable weights must be positive".into()));
        }
        if let MonomialOrder::BlockElimination { first_block } = order {
            if first_block > names.len() {
                return Err(Error::Input("elimination block larger than the ring".into()));
            }
        }
        Ok(Self { field, names: names.into(), order: TermOrder::new(order, weights.into()) })
    }

    /// `K[prefix1, ..., prefixN]` with the given weights.
    pub fn with_prefix(field: F, prefix: &str, weights: Vec<u32>, order: MonomialOrder) -> Result<Self> {
        let names = (1..=weights.len()).map(|i| format!("{prefix}{i}")).collect();
        Self::new(field, names, weights, order)
    }

    /// Standard-graded `K[y1..yn]` under grevlex.
    pub fn standard(field: F, prefix: &str, n: usize) -> Self {
        Self::with_prefix(field, prefix, vec![1; n], MonomialOrder::WeightedGrevlex).unwrap()
    }

    /// Same variables and weights, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Self> {
        Self::new(self.field.clone(), self.names.to_vec(), self.weights().to_vec(), order)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        self.order.weights()
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn order_kind(&self) -> MonomialOrder {
        self.order.kind()
    }

    /// Same variables, weights and field (orders may differ).
    pub fn same_variables(&self, other: &Self) -> bool {
        self.names == other.names && self.weights() == other.weights()
    }

    pub fn weighted_degree(&self, m: &Monomial) -> u32 {
        m.weighted_degree(self.weights())
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    pub fn zero(&self) -> Polynomial<F::Elem> {
        Polynomial::zero()
    }

    pub fn one(&self) -> Polynomial<F::Elem> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Polynomial<F::Elem> {
        self.term(self.one_monomial(), c)
    }

    pub fn var(&self, i: usize) -> Polynomial<F::Elem> {
        self.term(Monomial::var(self.nvars(), i), self.field.one())
    }

    pub fn term(&self, mono: Monomial, coeff: F::Elem) -> Polynomial<F::Elem> {
        assert_eq!(mono.len(), self.nvars(), "monomial from another ring");
        if self.field.is_zero(&coeff) {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![Term { mono, coeff }] }
        }
    }

    /// Builds a polynomial from arbitrary terms: combines duplicates, drops
    /// zeros, sorts.
    pub fn from_terms(&self, terms: impl IntoIterator<Item = (Monomial, F::Elem)>) -> Polynomial<F::Elem> {
        let k = &self.field;
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.len(), self.nvars(), "monomial from another ring");
            match acc.get_mut(&m) {
                Some(v) => *v = k.add(v, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<Term<F::Elem>> = acc
            .into_iter()
            .filter(|(_, c)| !k.is_zero(c))
            .map(|(mono, coeff)| Term { mono, coeff })
            .collect();
        terms.sort_by(|a, b| self.cmp(&b.mono, &a.mono));
        Polynomial { terms }
    }

    /// Re-sorts a polynomial of a ring with the same variables into this
    /// ring's order.
    pub fn reorder(&self, p: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        let mut terms = p.terms.clone();
        terms.sort_by(|a, b| self.cmp(&b.mono, &a.mono));
        Polynomial { terms }
    }

    /// Checks the structural invariants (sorted, no zeros, right arity).
    pub fn is_well_formed(&self, p: &Polynomial<F::Elem>) -> bool {
        p.terms.iter().all(|t| t.mono.len() == self.nvars() && !self.field.is_zero(&t.coeff))
            && p.terms.windows(2).all(|w| self.cmp(&w[0].mono, &w[1].mono) == Ordering::Greater)
    }

    pub fn add(&self, a: &Polynomial<F::Elem>, b: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        self.combine(a, b, false)
    }

    pub fn sub(&self, a: &Polynomial<F::Elem>, b: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        self.combine(a, b, true)
    }

    fn combine(&self, a: &Polynomial<F::Elem>, b: &Polynomial<F::Elem>, negate_b: bool) -> Polynomial<F::Elem> {
        let k = &self.field;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let conv = |c: &F::Elem| if negate_b { k.neg(c) } else { c.clone() };
        while i < a.len() && j < b.len() {
            match self.cmp(&a.terms[i].mono, &b.terms[j].mono) {
                Ordering::Greater => {
                    out.push(a.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term { mono: b.terms[j].mono.clone(), coeff: conv(&b.terms[j].coeff) });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_b {
                        k.sub(&a.terms[i].coeff, &b.terms[j].coeff)
                    } else {
                        k.add(&a.terms[i].coeff, &b.terms[j].coeff)
                    };
                    if !k.is_zero(&c) {
                        out.push(Term { mono: a.terms[i].mono.clone(), coeff: c });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a.terms[i..]);
        out.extend(b.terms[j..].iter().map(|t| Term { mono: t.mono.clone(), coeff: conv(&t.coeff) }));
        Polynomial { terms: out }
    }

    pub fn neg(&self, a: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        Polynomial {
            terms: a.terms.iter().map(|t| Term { mono: t.mono.clone(), coeff: self.field.neg(&t.coeff) }).collect(),
        }
    }

    pub fn scale(&self, a: &Polynomial<F::Elem>, c: &F::Elem) -> Polynomial<F::Elem> {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial {
            terms: a.terms.iter().map(|t| Term { mono: t.mono.clone(), coeff: self.field.mul(&t.coeff, c) }).collect(),
        }
    }

    /// `c * m * a`; multiplication by a monomial preserves the term order.
    pub fn mul_term(&self, a: &Polynomial<F::Elem>, m: &Monomial, c: &F::Elem) -> Polynomial<F::Elem> {
        if self.field.is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial {
            terms: a
                .terms
                .iter()
                .map(|t| Term { mono: t.mono.mul(m), coeff: self.field.mul(&t.coeff, c) })
                .collect(),
        }
    }

    /// `f - c * m * g`.
    pub fn sub_mul_term(
        &self,
        f: &Polynomial<F::Elem>,
        c: &F::Elem,
        m: &Monomial,
        g: &Polynomial<F::Elem>,
    ) -> Polynomial<F::Elem> {
        let k = &self.field;
        if k.is_zero(c) {
            return f.clone();
        }
        let mut out = Vec::with_capacity(f.len() + g.len());
        let mut i = 0;
        let mut gi = g.terms.iter().map(|t| (t.mono.mul(m), &t.coeff)).peekable();
        while let Some((gm, gc)) = gi.peek() {
            if i < f.len() {
                match self.cmp(&f.terms[i].mono, gm) {
                    Ordering::Greater => {
                        out.push(f.terms[i].clone());
                        i += 1;
                        continue;
                    }
                    Ordering::Equal => {
                        let mut v = f.terms[i].coeff.clone();
                        k.sub_mul_assign(&mut v, c, gc);
                        if !k.is_zero(&v) {
                            out.push(Term { mono: f.terms[i].mono.clone(), coeff: v });
                        }
                        i += 1;
                        gi.next();
                        continue;
                    }
                    Ordering::Less => {}
                }
            }
            let (gm, gc) = gi.next().unwrap();
            out.push(Term { mono: gm, coeff: k.neg(&k.mul(c, gc)) });
        }
        out.extend_from_slice(&f.terms[i..]);
        Polynomial { terms: out }
    }

    pub fn mul(&self, a: &Polynomial<F::Elem>, b: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        if a.is_zero() || b.is_zero() {
            return Polynomial::zero();
        }
        let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        if small.len() == 1 {
            let t = &small.terms[0];
            return self.mul_term(large, &t.mono, &t.coeff);
        }
        let k = &self.field;
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::with_capacity(a.len() * b.len());
        for s in &small.terms {
            for l in &large.terms {
                let m = s.mono.mul(&l.mono);
                let c = k.mul(&s.coeff, &l.coeff);
                match acc.get_mut(&m) {
                    Some(v) => *v = k.add(v, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<Term<F::Elem>> = acc
            .into_iter()
            .filter(|(_, c)| !k.is_zero(c))
            .map(|(mono, coeff)| Term { mono, coeff })
            .collect();
        terms.sort_by(|x, y| self.cmp(&y.mono, &x.mono));
        Polynomial { terms }
    }

    pub fn pow(&self, a: &Polynomial<F::Elem>, e: u32) -> Polynomial<F::Elem> {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Maximum weighted degree of a term; `None` for zero.
    pub fn degree(&self, p: &Polynomial<F::Elem>) -> Option<u32> {
        p.terms.iter().map(|t| self.weighted_degree(&t.mono)).max()
    }

    /// Whether all terms share one weighted degree (zero counts as homogeneous).
    pub fn is_homogeneous(&self, p: &Polynomial<F::Elem>) -> bool {
        let mut degs = p.terms.iter().map(|t| self.weighted_degree(&t.mono));
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Canonical scalar multiple: primitive integral with positive leading
    /// coefficient over the rationals, monic over a prime field.
    pub fn normalize(&self, p: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        if p.is_zero() {
            return p.clone();
        }
        let c = self.field.normalizer(p.terms.iter().map(|t| &t.coeff));
        self.scale(p, &c)
    }

    /// Makes the leading coefficient 1.
    pub fn make_monic(&self, p: &Polynomial<F::Elem>) -> Polynomial<F::Elem> {
        match p.leading_coeff() {
            None => p.clone(),
            Some(c) if self.field.is_one(c) => p.clone(),
            Some(c) => self.scale(p, &self.field.inv(c).unwrap()),
        }
    }

    /// All monomials of weighted degree `d`, sorted descending in this ring's order.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        let mut ms = monomials_of_degree(self.weights(), d);
        ms.sort_by(|a, b| self.cmp(b, a));
        ms
    }

    /// Coefficient of `m` in `p` (zero when absent).
    pub fn coefficient(&self, p: &Polynomial<F::Elem>, m: &Monomial) -> F::Elem {
        p.terms
            .binary_search_by(|t| self.cmp(m, &t.mono))
            .map(|i| p.terms[i].coeff.clone())
            .unwrap_or_else(|_| self.field.zero())
    }

    /// Moves `p` into `target` sending variable `i` to `map[i]`.
    pub fn map_variables(
        &self,
        p: &Polynomial<F::Elem>,
        target: &GradedRing<F>,
        map: &[usize],
    ) -> Polynomial<F::Elem> {
        assert_eq!(map.len(), self.nvars());
        target.from_terms(p.terms.iter().map(|t| {
            let mut m = target.one_monomial();
            for (i, &j) in map.iter().enumerate() {
                let e = t.mono.exp(i);
                if e > 0 {
                    m.set_exp(j, m.exp(j) + e);
                }
            }
            (m, t.coeff.clone())
        }))
    }

    /// Ring homomorphism `v_i -> images[i]` into `target`.
    pub fn substitute(
        &self,
        h: &Polynomial<F::Elem>,
        images: &[Polynomial<F::Elem>],
        target: &GradedRing<F>,
    ) -> Result<Polynomial<F::Elem>> {
        if images.len() != self.nvars() {
            return Err(Error::Input(format!(
                "substitution needs {} images, got {}",
                self.nvars(),
                images.len()
            )));
        }
        let k = &self.field;
        let mut powers: Vec<Vec<Polynomial<F::Elem>>> = vec![vec![target.one()]; self.nvars()];
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        for t in &h.terms {
            let mut prod = target.constant(t.coeff.clone());
            for i in 0..self.nvars() {
                let e = t.mono.exp(i) as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = target.mul(powers[i].last().unwrap(), &images[i]);
                    powers[i].push(next);
                }
                prod = target.mul(&prod, &powers[i][e]);
            }
            for term in prod.terms {
                match acc.get_mut(&term.mono) {
                    Some(v) => *v = k.add(v, &term.coeff),
                    None => {
                        acc.insert(term.mono, term.coeff);
                    }
                }
            }
        }
        Ok(target.from_terms(acc))
    }

    /// Checks that `images[i]` is homogeneous of degree `weights[i]` in `target`.
    pub fn check_graded_images(&self, images: &[Polynomial<F::Elem>], target: &GradedRing<F>) -> Result<()> {
        for (i, (img, &w)) in images.iter().zip(self.weights()).enumerate() {
            if img.is_zero() {
                continue;
            }
            if !target.is_homogeneous(img) || target.degree(img) != Some(w) {
                return Err(Error::Input(format!(
                    "image of {} is not homogeneous of degree {w}",
                    self.names[i]
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::poly::text::parse;
    use proptest::prelude::*;

    fn t(n: usize) -> GradedRing<Rationals> {
        GradedRing::standard(Rationals, "y", n)
    }

    #[test]
    fn substitution_examples() {
        let ty = t(2);
        let s1 = GradedRing::standard(Rationals, "x", 1);
        let img = parse(&ty, "y1 + y2").unwrap();
        let h = parse(&s1, "x1").unwrap();
        assert_eq!(s1.substitute(&h, std::slice::from_ref(&img), &ty).unwrap(), img);

        let s3 = GradedRing::with_prefix(Rationals, "x", vec![2, 2, 2], MonomialOrder::WeightedGrevlex).unwrap();
        let imgs: Vec<_> = ["y1^2", "y1*y2", "y2^2"].iter().map(|s| parse(&ty, s).unwrap()).collect();
        s3.check_graded_images(&imgs, &ty).unwrap();
        let h = parse(&s3, "x1*x3 - x2^2").unwrap();
        assert!(s3.substitute(&h, &imgs, &ty).unwrap().is_zero());

        let ty1 = t(1);
        let h = parse(&s1, "x1^2").unwrap();
        let y1 = parse(&ty1, "y1").unwrap();
        assert_eq!(s1.substitute(&h, &[y1], &ty1).unwrap(), parse(&ty1, "y1^2").unwrap());

        assert!(s3.substitute(&h, &imgs[..2], &ty).is_err());
    }

    #[test]
    fn normalization() {
        let ty = t(2);
        let p = parse(&ty, "-2/3*y1 + 4/9*y2").unwrap();
        assert_eq!(ty.normalize(&p), parse(&ty, "3*y1 - 2*y2").unwrap());
        let f7 = GradedRing::standard(PrimeField::new(7).unwrap(), "y", 2);
        let p = parse(&f7, "3*y1 + y2").unwrap();
        assert_eq!(f7.normalize(&p), parse(&f7, "y1 + 5*y2").unwrap());
    }

    fn small_poly(n: usize) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
        proptest::collection::vec((proptest::collection::vec(0u32..3, n), -3i64..4), 0..5)
    }

    proptest! {
        #[test]
        fn substitution_is_a_ring_homomorphism(
            a in small_poly(2), b in small_poly(2),
            i1 in small_poly(3), i2 in small_poly(3),
        ) {
            let k = Rationals;
            let s = t(2);
            let tt = t(3);
            let mk = |ring: &GradedRing<Rationals>, v: &Vec<(Vec<u32>, i64)>| {
                ring.from_terms(v.iter().map(|(e, c)| (Monomial::from_exponents(e), k.from_i64(*c))))
            };
            let (a, b) = (mk(&s, &a), mk(&s, &b));
            let imgs = vec![mk(&tt, &i1), mk(&tt, &i2)];
            let sub = |p: &Polynomial<_>| s.substitute(p, &imgs, &tt).unwrap();
            prop_assert_eq!(sub(&s.mul(&a, &b)), tt.mul(&sub(&a), &sub(&b)));
            prop_assert_eq!(sub(&s.add(&a, &b)), tt.add(&sub(&a), &sub(&b)));
            prop_assert!(tt.is_well_formed(&sub(&a)));
        }

        #[test]
        fn graded_substitution_stays_homogeneous(d in 0u32..5, c in proptest::collection::vec(-2i64..3, 1..6)) {
            let k = Rationals;
            let s = GradedRing::with_prefix(k, "x", vec![2, 1], MonomialOrder::WeightedGrevlex).unwrap();
            let tt = t(2);
            let imgs = vec![parse(&tt, "y1^2 - 3*y1*y2").unwrap(), parse(&tt, "y1 + y2").unwrap()];
            let ms = s.monomials_of_degree(d);
            let h = s.from_terms(ms.into_iter().zip(c.iter()).map(|(m, &c)| (m, k.from_i64(c))));
            let out = s.substitute(&h, &imgs, &tt).unwrap();
            prop_assert!(tt.is_homogeneous(&out));
            if !out.is_zero() {
                prop_assert_eq!(tt.degree(&out), Some(d));
            }
        }

        #[test]
        fn sub_mul_term_matches_generic_ops(a in small_poly(3), b in small_poly(3), e in proptest::collection::vec(0u32..3, 3), c in -3i64..4) {
            let k = Rationals;
            let r = t(3);
            let mk = |v: &Vec<(Vec<u32>, i64)>| {
                r.from_terms(v.iter().map(|(e, c)| (Monomial::from_exponents(e), k.from_i64(*c))))
            };
            let (a, b) = (mk(&a), mk(&b));
            let m = Monomial::from_exponents(&e);
            let c = k.from_i64(c);
            let direct = r.sub_mul_term(&a, &c, &m, &b);
            let generic = r.sub(&a, &r.mul_term(&b, &m, &c));
            prop_assert!(r.is_well_formed(&direct));
            prop_assert_eq!(direct, generic);
        }
    }
}
