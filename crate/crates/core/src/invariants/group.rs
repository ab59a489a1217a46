//! Finite linear groups given by generators, closed by breadth-first search.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{rank, DenseMatrix};
use crate::poly::{GradedRing, Monomial, Polynomial};

/// Default bound on the number of group elements enumerated.
pub const DEFAULT_GROUP_CAP: usize = 10_000;

/// A matrix entry in input files: an integer or a string `"a/b"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarLiteral {
    Int(i64),
    Text(String),
}

impl ScalarLiteral {
    pub fn to_elem<F: Field>(&self, k: &F) -> Result<F::Elem> {
        match self {
            ScalarLiteral::Int(v) => Ok(k.from_i64(*v)),
            ScalarLiteral::Text(s) => {
                let bad = || Error::Input(format!("malformed scalar {s:?}"));
                let (num, den) = match s.split_once('/') {
                    Some((a, b)) => (a.trim(), b.trim()),
                    None => (s.trim(), "1"),
                };
                let num: BigInt = num.parse().map_err(|_| bad())?;
                let den: BigInt = den.parse().map_err(|_| bad())?;
                k.from_ratio(&num, &den)
                    .ok_or_else(|| Error::Input(format!("denominator of {s:?} vanishes in the field")))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpec {
    /// Generators as 0-based image lists: variable `i` goes to `g[i]`.
    Permutation { n: usize, generators: Vec<Vec<usize>> },
    /// Explicit `n × n` matrices acting on the variables.
    Matrices { n: usize, entries: Vec<Vec<Vec<ScalarLiteral>>> },
    /// Scalar multiplication by a primitive `m`-th root of unity on `K^n`.
    CyclicScalar { m: u64, n: usize },
}

impl GroupSpec {
    pub fn dimension(&self) -> usize {
        match self {
            GroupSpec::Permutation { n, .. } | GroupSpec::Matrices { n, .. } | GroupSpec::CyclicScalar { n, .. } => *n,
        }
    }

    /// Generator matrices over `k`, validated.
    pub fn generator_matrices<F: Field>(&self, k: &F) -> Result<Vec<DenseMatrix<F::Elem>>> {
        let n = self.dimension();
        if n == 0 {
            return Err(Error::Input("group must act on a space of positive dimension".into()));
        }
        match self {
            GroupSpec::Permutation { generators, .. } => generators
                .iter()
                .map(|g| {
                    let mut seen = vec![false; n];
                    if g.len() != n || g.iter().any(|&j| j >= n || std::mem::replace(&mut seen[j], true)) {
                        return Err(Error::Input(format!("{g:?} is not a permutation of 0..{n}")));
                    }
                    let mut m = DenseMatrix::zeros(k, n, n);
                    for (i, &j) in g.iter().enumerate() {
                        m.set(i, j, k.one());
                    }
                    Ok(m)
                })
                .collect(),
            GroupSpec::Matrices { entries, .. } => entries
                .iter()
                .map(|rows| {
                    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                        return Err(Error::Input(format!("generator matrix is not {n}×{n}")));
                    }
                    let data = rows.iter().flatten().map(|x| x.to_elem(k)).collect::<Result<Vec<_>>>()?;
                    let m = DenseMatrix::new(n, n, data);
                    if rank(k, &m) != n {
                        return Err(Error::Input("generator matrix is singular".into()));
                    }
                    Ok(m)
                })
                .collect(),
            GroupSpec::CyclicScalar { m, .. } => {
                let zeta = root_of_unity(k, *m)?;
                let mut g = DenseMatrix::zeros(k, n, n);
                for i in 0..n {
                    g.set(i, i, zeta.clone());
                }
                Ok(vec![g])
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Permutation { n, generators } => {
                write!(f, "permutation group on K^{n} with {} generator(s)", generators.len())
            }
            GroupSpec::Matrices { n, entries } => write!(f, "matrix group on K^{n} with {} generator(s)", entries.len()),
            GroupSpec::CyclicScalar { m, n } => write!(f, "cyclic group of order {m} acting by scalars on K^{n}"),
        }
    }
}

/// Element of exact multiplicative order `m`: `±1` over the rationals, the
/// smallest such residue over a prime field.
pub fn root_of_unity<F: Field>(k: &F, m: u64) -> Result<F::Elem> {
    if m == 0 {
        return Err(Error::Input("cyclic order must be positive".into()));
    }
    let p = k.characteristic();
    if p == 0 {
        return match m {
            1 => Ok(k.one()),
            2 => Ok(k.from_i64(-1)),
            _ => Err(Error::Unsupported(format!(
                "a primitive {m}-th root of unity is not rational; use a prime field with {m} | p-1"
            ))),
        };
    }
    if !(p - 1).is_multiple_of(m) {
        return Err(Error::Unsupported(format!("GF({p}) has no element of order {m} ({m} does not divide p-1)")));
    }
    let order_is_m = |z: &F::Elem| {
        k.is_one(&k.pow(z, m)) && (1..m).filter(|d| m.is_multiple_of(*d)).all(|d| !k.is_one(&k.pow(z, d)))
    };
    (1..p)
        .map(|v| k.from_i64(v as i64))
        .find(order_is_m)
        .ok_or_else(|| Error::Internal(format!("no element of order {m} in GF({p})")))
}

/// A group element: `y_i -> Σ_j matrix[i][j] y_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement<E> {
    matrix: DenseMatrix<E>,
    /// For monomial matrices: `y_i -> c_i y_{π(i)}` as `(π(i), c_i)`.
    monomial: Option<Vec<(usize, E)>>,
}

impl<E: Clone> GroupElement<E> {
    fn new<F: Field<Elem = E>>(k: &F, matrix: DenseMatrix<E>) -> Self {
        let n = matrix.rows();
        let monomial = (0..n)
            .map(|i| {
                let mut nz = (0..n).filter(|&j| !k.is_zero(matrix.get(i, j)));
                match (nz.next(), nz.next()) {
                    (Some(j), None) => Some((j, matrix.get(i, j).clone())),
                    _ => None,
                }
            })
            .collect();
        Self { matrix, monomial }
    }

    pub fn matrix(&self) -> &DenseMatrix<E> {
        &self.matrix
    }

    pub fn is_monomial(&self) -> bool {
        self.monomial.is_some()
    }
}

/// The closure of a generating set.
#[derive(Clone, Debug)]
pub struct FiniteGroup<F: Field> {
    field: F,
    n: usize,
    elements: Vec<GroupElement<F::Elem>>,
}

/// Enumerates the group generated by `spec` breadth-first from the identity,
/// multiplying by generators in their given order.
pub fn group_closure<F: Field>(k: &F, spec: &GroupSpec, cap: usize) -> Result<FiniteGroup<F>> {
    if cap == 0 {
        return Err(Error::Input("group cap must be positive".into()));
    }
    let gens = spec.generator_matrices(k)?;
    let n = spec.dimension();
    let id = DenseMatrix::identity(k, n);
    let mut seen: HashMap<Vec<F::Elem>, ()> = HashMap::new();
    seen.insert(id.data().to_vec(), ());
    let mut order = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in &gens {
            let y = x.mul(k, g);
            if seen.insert(y.data().to_vec(), ()).is_none() {
                if order.len() == cap {
                    return Err(Error::GroupTooLarge { cap });
                }
                order.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    k.spec().check_non_modular(order.len())?;
    let elements = order.into_iter().map(|m| GroupElement::new(k, m)).collect();
    Ok(FiniteGroup { field: k.clone(), n, elements })
}

impl<F: Field> FiniteGroup<F> {
    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement<F::Elem>] {
        &self.elements
    }

    pub fn is_monomial(&self) -> bool {
        self.elements.iter().all(GroupElement::is_monomial)
    }

    /// The coordinate ring `K[y_1..y_n]` with the standard grading.
    pub fn coordinate_ring(&self) -> GradedRing<F> {
        GradedRing::standard(self.field.clone(), "y", self.n)
    }
}

/// `g · f`: substitutes `y_i -> Σ_j g[i][j] y_j`.
pub fn act<F: Field>(
    ring: &GradedRing<F>,
    g: &GroupElement<F::Elem>,
    f: &Polynomial<F::Elem>,
) -> Result<Polynomial<F::Elem>> {
    let n = g.matrix.rows();
    if ring.nvars() != n {
        return Err(Error::Input(format!("group acts on K^{n} but the ring has {} variables", ring.nvars())));
    }
    let k = ring.field();
    if let Some(perm) = &g.monomial {
        return Ok(ring.from_terms(f.terms().iter().map(|t| act_monomial(k, perm, &t.mono, t.coeff.clone()))));
    }
    let images: Vec<_> = (0..n)
        .map(|i| ring.from_terms((0..n).map(|j| (Monomial::var(n, j), g.matrix.get(i, j).clone()))))
        .collect();
    ring.substitute(f, &images, ring)
}

fn act_monomial<F: Field>(k: &F, perm: &[(usize, F::Elem)], m: &Monomial, coeff: F::Elem) -> (Monomial, F::Elem) {
    let mut out = Monomial::one(m.len());
    let mut c = coeff;
    for (i, (j, s)) in perm.iter().enumerate() {
        let e = m.exp(i);
        if e > 0 {
            out.set_exp(*j, out.exp(*j) + e);
            if !k.is_one(s) {
                c = k.mul(&c, &k.pow(s, e as u64));
            }
        }
    }
    (out, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{FieldSpec, PrimeField, Rationals};
    use crate::poly::text::parse;

    fn perm(n: usize, gens: &[&[usize]]) -> GroupSpec {
        GroupSpec::Permutation { n, generators: gens.iter().map(|g| g.to_vec()).collect() }
    }

    #[test]
    fn closure_examples() {
        let q = Rationals;
        assert_eq!(group_closure(&q, &perm(2, &[&[1, 0]]), 100).unwrap().order(), 2);
        let s3 = group_closure(&q, &perm(3, &[&[1, 0, 2], &[1, 2, 0]]), 100).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(s3.is_monomial());
        let f7 = PrimeField::new(7).unwrap();
        let c3 = group_closure(&f7, &GroupSpec::CyclicScalar { m: 3, n: 2 }, 100).unwrap();
        assert_eq!(c3.order(), 3);
        assert_eq!(root_of_unity(&f7, 3).unwrap(), f7.from_i64(2));
    }

    #[test]
    fn closure_errors() {
        let q = Rationals;
        let s4 = perm(4, &[&[1, 0, 2, 3], &[1, 2, 3, 0]]);
        assert!(matches!(group_closure(&q, &s4, 10), Err(Error::GroupTooLarge { cap: 10 })));
        let infinite = GroupSpec::Matrices {
            n: 2,
            entries: vec![vec![vec![ScalarLiteral::Int(1), ScalarLiteral::Int(1)], vec![ScalarLiteral::Int(0), ScalarLiteral::Int(1)]]],
        };
        assert!(matches!(group_closure(&q, &infinite, 50), Err(Error::GroupTooLarge { .. })));
        let f2 = PrimeField::new(2).unwrap();
        assert!(matches!(group_closure(&f2, &perm(2, &[&[1, 0]]), 10), Err(Error::Modular { .. })));
        assert!(matches!(
            group_closure(&q, &GroupSpec::CyclicScalar { m: 3, n: 2 }, 10),
            Err(Error::Unsupported(_))
        ));
        assert!(group_closure(&q, &perm(2, &[&[0, 0]]), 10).is_err());
        let singular = GroupSpec::Matrices { n: 1, entries: vec![vec![vec![ScalarLiteral::Int(0)]]] };
        assert!(matches!(group_closure(&q, &singular, 10), Err(Error::Input(_))));
        let _ = FieldSpec::Rationals;
    }

    #[test]
    fn action_examples() {
        let q = Rationals;
        let g = group_closure(&q, &perm(2, &[&[1, 0]]), 10).unwrap();
        let r = g.coordinate_ring();
        let y1 = parse(&r, "y1").unwrap();
        assert_eq!(act(&r, &g.elements()[0], &y1).unwrap(), y1);
        assert_eq!(act(&r, &g.elements()[1], &y1).unwrap(), parse(&r, "y2").unwrap());

        let f7 = PrimeField::new(7).unwrap();
        let c3 = group_closure(&f7, &GroupSpec::CyclicScalar { m: 3, n: 2 }, 10).unwrap();
        let r7 = c3.coordinate_ring();
        let f = parse(&r7, "y1^2 + 3*y1*y2").unwrap();
        // ζ = 2, ζ^2 = 4
        assert_eq!(act(&r7, &c3.elements()[1], &f).unwrap(), r7.scale(&f, &f7.from_i64(4)));
    }

    #[test]
    fn general_matrices_use_substitution() {
        let q = Rationals;
        let half = |s: &str| ScalarLiteral::Text(s.into());
        // reflection across the line y1 = y2 written in a rotated basis
        let spec = GroupSpec::Matrices {
            n: 2,
            entries: vec![vec![vec![half("1/2"), half("3/2")], vec![half("1/2"), half("-1/2")]]],
        };
        let g = group_closure(&q, &spec, 10).unwrap();
        assert_eq!(g.order(), 2);
        assert!(!g.is_monomial());
        let r = g.coordinate_ring();
        let f = parse(&r, "y1 + y2").unwrap();
        assert_eq!(act(&r, &g.elements()[1], &f).unwrap(), parse(&r, "y1 + y2").unwrap());
    }

    #[test]
    fn spec_json_round_trip() {
        let s: GroupSpec = serde_json::from_str(r#"{"type":"permutation","n":3,"generators":[[1,0,2]]}"#).unwrap();
        assert_eq!(s, perm(3, &[&[1, 0, 2]]));
        let m: GroupSpec = serde_json::from_str(r#"{"type":"matrices","n":1,"entries":[[[-1]]]}"#).unwrap();
        assert_eq!(m.dimension(), 1);
        let c: GroupSpec = serde_json::from_str(r#"{"type":"cyclic_scalar","m":3,"n":2}"#).unwrap();
        assert_eq!(c, GroupSpec::CyclicScalar { m: 3, n: 2 });
        assert!(serde_json::from_str::<GroupSpec>(r#"{"type":"braid","n":3}"#).is_err());
    }
}
