//! Betti numbers as Koszul homology, `Tor_i^S(R, K)_j = H_i(K(x) ⊗ R)_j`,
//! computed degreewise by linear algebra over the standard monomials of `J`.
//! Independent of the Schreyer route and meant for small cases.

use std::collections::HashMap;

use super::betti::BettiTable;
use crate::error::{Budget, Result};
use crate::field::Field;
use crate::groebner::GroebnerBasis;
use crate::linalg::SparseEchelon;
use crate::poly::{GradedRing, Monomial};

/// Standard monomials of `S/J` per degree.
struct Quotient {
    by_degree: Vec<Vec<Monomial>>,
}

impl Quotient {
    fn new<F: Field>(gb: &GroebnerBasis<F>, top: u32) -> Self {
        let ring = gb.ring();
        let leads = gb.leading_monomials();
        let by_degree: Vec<Vec<Monomial>> = (0..=top)
            .map(|d| ring.monomials_of_degree(d).into_iter().filter(|m| !leads.iter().any(|l| l.divides(m))).collect())
            .collect();
        Self { by_degree }
    }

    fn dim(&self, d: i64) -> usize {
        if d < 0 {
            0
        } else {
            self.by_degree.get(d as usize).map_or(0, Vec::len)
        }
    }
}

fn subsets(r: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, r: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for a in start..r {
            cur.push(a);
            go(a + 1, r, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, r, size, &mut Vec::new(), &mut out);
    out
}

/// Basis of `C_{i,j} = ⊕_{|A| = i} R_{j - deg A} e_A` as `(A, monomial)`.
fn chain_basis(q: &Quotient, weights: &[u32], i: usize, j: u32) -> Vec<(Vec<usize>, Monomial)> {
    let mut out = Vec::new();
    for a in subsets(weights.len(), i) {
        let da: u32 = a.iter().map(|&x| weights[x]).sum();
        if da > j {
            continue;
        }
        for m in &q.by_degree[(j - da) as usize] {
            out.push((a.clone(), m.clone()));
        }
    }
    out
}

/// Rank of `∂ : C_{i,j} -> C_{i-1,j}`.
fn boundary_rank<F: Field>(gb: &GroebnerBasis<F>, q: &Quotient, i: usize, j: u32) -> Result<usize> {
    let ring: &GradedRing<F> = gb.ring();
    let k = ring.field();
    let weights = ring.weights();
    if i == 0 {
        return Ok(0);
    }
    let target = chain_basis(q, weights, i - 1, j);
    let target_index: HashMap<(Vec<usize>, Monomial), usize> =
        target.into_iter().enumerate().map(|(c, key)| (key, c)).collect();
    let mut ech = SparseEchelon::new(k.clone());
    for (a, m) in chain_basis(q, weights, i, j) {
        let mut row: HashMap<usize, F::Elem> = HashMap::new();
        for (pos, &x) in a.iter().enumerate() {
            let mut face = a.clone();
            face.remove(pos);
            let mut xm = m.clone();
            xm.set_exp(x, m.exp(x) + 1);
            let nf = gb.normal_form(&ring.term(xm, k.one()))?;
            let sign = if pos % 2 == 0 { k.one() } else { k.neg(&k.one()) };
            for t in nf.terms() {
                let col = target_index[&(face.clone(), t.mono.clone())];
                let v = k.mul(&sign, &t.coeff);
                let e = row.entry(col).or_insert_with(|| k.zero());
                *e = k.add(e, &v);
            }
        }
        let mut v: Vec<(usize, F::Elem)> = row.into_iter().filter(|(_, x)| !k.is_zero(x)).collect();
        v.sort_by_key(|(c, _)| *c);
        ech.insert(v);
    }
    Ok(ech.rank())
}

/// `β_{i,j}` for all `i` and all `j <= max_degree`.
pub fn koszul_betti<F: Field>(gb: &GroebnerBasis<F>, max_degree: u32, budget: &Budget) -> Result<BettiTable> {
    let ring = gb.ring();
    let r = ring.nvars();
    let q = Quotient::new(gb, max_degree);
    let mut table = BettiTable::default();
    for j in 0..=max_degree {
        for i in 0..=r {
            budget.check("Koszul homology")?;
            let dim: usize = subsets(r, i)
                .iter()
                .map(|a| q.dim(j as i64 - a.iter().map(|&x| ring.weights()[x] as i64).sum::<i64>()))
                .sum();
            if dim == 0 {
                continue;
            }
            let out_rank = boundary_rank(gb, &q, i, j)?;
            let in_rank = boundary_rank(gb, &q, i + 1, j)?;
            table.add(i, j, dim - out_rank - in_rank);
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::groebner::buchberger;
    use crate::poly::text::parse;
    use crate::poly::MonomialOrder;

    #[test]
    fn twisted_cubic_tor() {
        let f7 = PrimeField::new(7).unwrap();
        let r = GradedRing::with_prefix(f7, "x", vec![3, 3, 3, 3], MonomialOrder::WeightedGrevlex).unwrap();
        let gens: Vec<_> = ["x1*x3 - x2^2", "x2*x4 - x3^2", "x1*x4 - x2*x3"].iter().map(|s| parse(&r, s).unwrap()).collect();
        let gb = buchberger(&r, &gens).unwrap();
        let t = koszul_betti(&gb, 12, &Budget::unlimited()).unwrap();
        assert_eq!(t.triples(), vec![(0, 0, 1), (1, 6, 3), (2, 9, 2)]);
    }

    #[test]
    fn polynomial_ring_has_only_tor_zero() {
        let r = GradedRing::with_prefix(Rationals, "x", vec![3, 2, 1], MonomialOrder::WeightedGrevlex).unwrap();
        let gb = buchberger(&r, &[]).unwrap();
        assert_eq!(koszul_betti(&gb, 6, &Budget::unlimited()).unwrap().triples(), vec![(0, 0, 1)]);
    }
}
