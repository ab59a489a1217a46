use std::cmp::Ordering;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use crate::error::{Error, Result};

/// The kind of a monomial order; weights come from the ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MonomialOrder {
    /// Weighted degree first, then reverse lexicographic from the last variable.
    WeightedGrevlex,
    Lex,
    /// The first `first_block` variables compared by weighted grevlex, ties
    /// broken by weighted grevlex on the remaining variables.
    BlockElimination { first_block: usize },
}

impl MonomialOrder {
    /// Whether every monomial involving one of the first `count` variables is
    /// greater than every monomial free of them.
    pub fn eliminates(&self, count: usize) -> bool {
        match self {
            MonomialOrder::Lex => true,
            MonomialOrder::BlockElimination { first_block } => *first_block == count,
            MonomialOrder::WeightedGrevlex => count == 0,
        }
    }
}

/// A monomial order bound to a weight vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    kind: MonomialOrder,
    weights: Arc<[u32]>,
}

impl TermOrder {
    pub fn new(kind: MonomialOrder, weights: Arc<[u32]>) -> Self {
        Self { kind, weights }
    }

    pub fn kind(&self) -> MonomialOrder {
        self.kind
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.cmp_by(|i| a.exp(i), |i| b.exp(i))
    }

    /// Compares `a1 * a2` with `b1 * b2` without forming the products.
    #[inline]
    pub fn cmp_products(&self, a1: &Monomial, a2: &Monomial, b1: &Monomial, b2: &Monomial) -> Ordering {
        self.cmp_by(|i| a1.exp(i) + a2.exp(i), |i| b1.exp(i) + b2.exp(i))
    }

    #[inline]
    fn cmp_by(&self, ea: impl Fn(usize) -> u32, eb: impl Fn(usize) -> u32) -> Ordering {
        let n = self.weights.len();
        match self.kind {
            MonomialOrder::WeightedGrevlex => self.grevlex_range(0, n, &ea, &eb),
            MonomialOrder::Lex => {
                for i in 0..n {
                    let (x, y) = (ea(i), eb(i));
                    if x != y {
                        return x.cmp(&y);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::BlockElimination { first_block } => self
                .grevlex_range(0, first_block, &ea, &eb)
                .then_with(|| self.grevlex_range(first_block, n, &ea, &eb)),
        }
    }

    #[inline]
    fn grevlex_range(
        &self,
        lo: usize,
        hi: usize,
        ea: &impl Fn(usize) -> u32,
        eb: &impl Fn(usize) -> u32,
    ) -> Ordering {
        let w = &self.weights;
        let da: u32 = (lo..hi).map(|i| ea(i) * w[i]).sum();
        let db: u32 = (lo..hi).map(|i| eb(i) * w[i]).sum();
        if da != db {
            return da.cmp(&db);
        }
        for i in (lo..hi).rev() {
            let (x, y) = (ea(i), eb(i));
            if x != y {
                return y.cmp(&x);
            }
        }
        Ordering::Equal
    }
}

/// Compares two monomials of one ring under `order` with the given weights.
pub fn compare_monomials(
    order: MonomialOrder,
    weights: &[u32],
    a: &Monomial,
    b: &Monomial,
) -> Result<Ordering> {
    if a.len() != weights.len() || b.len() != weights.len() {
        return Err(Error::Input(format!(
            "monomials of length {} and {} compared in a ring with {} variables",
            a.len(),
            b.len(),
            weights.len()
        )));
    }
    if let MonomialOrder::BlockElimination { first_block } = order {
        if first_block > weights.len() {
            return Err(Error::Input("elimination block larger than the ring".into()));
        }
    }
    Ok(TermOrder::new(order, weights.into()).cmp(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn spec_examples() {
        let g = MonomialOrder::WeightedGrevlex;
        assert_eq!(compare_monomials(g, &[1, 1], &m(&[1, 1]), &m(&[1, 1])).unwrap(), Ordering::Equal);
        // x^2 vs xy
        assert_eq!(compare_monomials(g, &[1, 1], &m(&[2, 0]), &m(&[1, 1])).unwrap(), Ordering::Greater);
        // x2^3 (degree 6) vs x1 (degree 3) with weights (3, 2)
        assert_eq!(compare_monomials(g, &[3, 2], &m(&[0, 3]), &m(&[1, 0])).unwrap(), Ordering::Greater);
        assert!(compare_monomials(g, &[1, 1], &m(&[1]), &m(&[1, 0])).is_err());
    }

    #[test]
    fn grevlex_differs_from_lex() {
        // degree 3 in three variables: x*z^2 vs y^3
        let w = [1, 1, 1];
        let a = m(&[1, 0, 2]);
        let b = m(&[0, 3, 0]);
        assert_eq!(compare_monomials(MonomialOrder::Lex, &w, &a, &b).unwrap(), Ordering::Greater);
        assert_eq!(compare_monomials(MonomialOrder::WeightedGrevlex, &w, &a, &b).unwrap(), Ordering::Less);
    }

    #[test]
    fn block_order_eliminates() {
        let ord = TermOrder::new(MonomialOrder::BlockElimination { first_block: 1 }, vec![1, 3, 3].into());
        // y (degree 1) beats x1^5 (degree 15)
        assert_eq!(ord.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 0])), Ordering::Greater);
        assert!(MonomialOrder::BlockElimination { first_block: 1 }.eliminates(1));
        assert!(!MonomialOrder::BlockElimination { first_block: 1 }.eliminates(2));
    }

    fn mono3() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..4, 3).prop_map(|v| Monomial::from_exponents(&v))
    }

    fn any_order() -> impl Strategy<Value = TermOrder> {
        prop_oneof![
            Just(MonomialOrder::WeightedGrevlex),
            Just(MonomialOrder::Lex),
            Just(MonomialOrder::BlockElimination { first_block: 1 }),
            Just(MonomialOrder::BlockElimination { first_block: 2 }),
        ]
        .prop_flat_map(|k| {
            proptest::collection::vec(1u32..4, 3).prop_map(move |w| TermOrder::new(k, w.into()))
        })
    }

    proptest! {
        #[test]
        fn total_multiplicative_order(ord in any_order(), a in mono3(), b in mono3(), c in mono3()) {
            let ab = ord.cmp(&a, &b);
            prop_assert_eq!(ab, ord.cmp(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            if ab == Ordering::Less {
                prop_assert_eq!(ord.cmp(&a.mul(&c), &b.mul(&c)), Ordering::Less);
                if ord.cmp(&b, &c) == Ordering::Less {
                    prop_assert_eq!(ord.cmp(&a, &c), Ordering::Less);
                }
            }
            prop_assert_eq!(ord.cmp_products(&a, &c, &b, &c), ord.cmp(&a.mul(&c), &b.mul(&c)));
            prop_assert_ne!(ord.cmp(&Monomial::one(3), &a), Ordering::Greater);
        }
    }
}
