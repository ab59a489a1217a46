//! Reynolds averaging, degreewise bases of invariants, and the Molien series.

use std::collections::{HashMap, HashSet};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::group::{act, FiniteGroup};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::SparseEchelon;
use crate::poly::{GradedRing, Monomial, Polynomial, RationalFunction, UniPoly};

/// `(1/|G|) Σ_σ σ·f`.
pub fn reynolds<F: Field>(
    group: &FiniteGroup<F>,
    ring: &GradedRing<F>,
    f: &Polynomial<F::Elem>,
) -> Result<Polynomial<F::Elem>> {
    let k = group.field();
    let inv_order = k
        .inv(&k.from_i64(group.order() as i64))
        .ok_or(Error::Modular { characteristic: k.characteristic(), order: group.order() })?;
    let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
    for g in group.elements() {
        for t in act(ring, g, f)?.into_terms() {
            match acc.get_mut(&t.mono) {
                Some(v) => *v = k.add(v, &t.coeff),
                None => {
                    acc.insert(t.mono, t.coeff);
                }
            }
        }
    }
    let sum = ring.from_terms(acc);
    Ok(ring.scale(&sum, &inv_order))
}

/// Basis of the invariants of one degree in canonical form.
#[derive(Clone, Debug)]
pub struct InvariantSpace<E> {
    pub degree: u32,
    /// Reduced row echelon basis with respect to the lex-descending monomial
    /// list, each element normalized.
    pub basis: Vec<Polynomial<E>>,
    /// `pivots[k]` occurs in `basis[k]` and in no other basis element.
    pub pivots: Vec<Monomial>,
}

impl<E> InvariantSpace<E> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Reynolds images of all degree-`d` monomials, echelonized.
pub fn invariant_space_basis<F: Field>(
    group: &FiniteGroup<F>,
    ring: &GradedRing<F>,
    d: u32,
) -> Result<InvariantSpace<F::Elem>> {
    let k = group.field();
    let monos = crate::poly::monomials_of_degree(ring.weights(), d);
    let index: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let monomial_group = group.is_monomial();
    let mut covered: HashSet<usize> = HashSet::new();
    let mut ech = SparseEchelon::new(k.clone());
    for (i, m) in monos.iter().enumerate() {
        // For monomial groups the image of m is a multiple of the image of
        // any monomial in its orbit, so one representative per orbit suffices.
        if monomial_group && covered.contains(&i) {
            continue;
        }
        let img = reynolds(group, ring, &ring.term(m.clone(), k.one()))?;
        if monomial_group {
            let mut orbit = Monomial::one(m.len());
            for g in group.elements() {
                orbit = act(ring, g, &ring.term(m.clone(), k.one()))?.terms()[0].mono.clone();
                covered.insert(index[&orbit]);
            }
            let _ = orbit;
        }
        let mut v: Vec<(usize, F::Elem)> = img.into_terms().into_iter().map(|t| (index[&t.mono], t.coeff)).collect();
        v.sort_by_key(|(c, _)| *c);
        ech.insert(v);
    }
    let rows = ech.into_rref_rows();
    let pivots = rows.iter().map(|r| monos[r[0].0].clone()).collect();
    let basis = rows
        .into_iter()
        .map(|r| ring.normalize(&ring.from_terms(r.into_iter().map(|(c, x)| (monos[c].clone(), x)))))
        .collect();
    Ok(InvariantSpace { degree: d, basis, pivots })
}

/// `det(I - tM)` by the Faddeev–LeVerrier recurrence (characteristic 0).
fn det_one_minus_t(m: &[Vec<BigRational>]) -> UniPoly {
    let n = m.len();
    let mul = |a: &[Vec<BigRational>], b: &[Vec<BigRational>]| -> Vec<Vec<BigRational>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(BigRational::zero(), |acc, l| acc + &a[i][l] * &b[l][j]))
                    .collect()
            })
            .collect()
    };
    let mut coeffs = vec![BigRational::one()];
    let mut mk: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n]; n];
    for kk in 1..=n {
        let mut next = mul(m, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[kk - 1];
        }
        let am = mul(m, &next);
        let trace = (0..n).fold(BigRational::zero(), |acc, i| acc + &am[i][i]);
        coeffs.push(-trace / BigRational::from_integer((kk as i64).into()));
        mk = next;
    }
    UniPoly::new(coeffs)
}

/// `(1/|G|) Σ_σ 1/det(I - tσ)` as a normalized rational function.
pub fn molien_series<F: Field>(group: &FiniteGroup<F>) -> Result<RationalFunction> {
    let k = group.field();
    if k.characteristic() != 0 {
        return Err(Error::Unsupported("Molien closed form restricted to characteristic 0".into()));
    }
    let n = group.dimension();
    let mut classes: HashMap<UniPoly, usize> = HashMap::new();
    let mut first_seen: Vec<UniPoly> = Vec::new();
    for g in group.elements() {
        let m: Vec<Vec<BigRational>> =
            (0..n).map(|i| (0..n).map(|j| k.to_rational(g.matrix().get(i, j))).collect()).collect();
        let det = det_one_minus_t(&m);
        let count = classes.entry(det.clone()).or_insert(0);
        if *count == 0 {
            first_seen.push(det);
        }
        *count += 1;
    }
    let mut sum = RationalFunction::new(UniPoly::zero(), UniPoly::one())?;
    for det in first_seen {
        let count = BigRational::from_integer(classes[&det].into());
        sum = sum.add(&RationalFunction::new(UniPoly::new(vec![count]), det)?)?;
    }
    sum.scale(&BigRational::new(1.into(), group.order().into()))
}
