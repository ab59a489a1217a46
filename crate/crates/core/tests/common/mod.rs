//! Fixtures and linear-algebra oracles shared by the integration tests.
//! The oracles avoid Gröbner bases entirely: they work degree by degree
//! with dense matrices over the base field.
#![allow(dead_code)]

use std::collections::HashMap;
use std::path::PathBuf;

use invsyz::harness::InputSpec;
use invsyz::invariants::{group_closure, invariant_space_basis, minimal_generators, FiniteGroup, GroupSpec};
use invsyz::linalg::{rank, DenseMatrix};
use invsyz::poly::{GradedRing, Monomial, Polynomial};
use invsyz::invariants::InvariantGeneratorSet;
use invsyz::{Budget, Field};

pub fn spec_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("specs").join(format!("{name}.json"))
}

pub fn spec(name: &str) -> InputSpec {
    InputSpec::from_path(&spec_path(name)).unwrap()
}

pub fn permutation(n: usize, gens: &[&[usize]]) -> GroupSpec {
    GroupSpec::Permutation { n, generators: gens.iter().map(|g| g.to_vec()).collect() }
}

pub fn symmetric(n: usize) -> GroupSpec {
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    GroupSpec::Permutation { n, generators: vec![swap, cycle] }
}

pub fn setup<F: Field>(k: &F, spec: &GroupSpec) -> (FiniteGroup<F>, InvariantGeneratorSet<F>) {
    let g = group_closure(k, spec, 10_000).unwrap();
    let (gens, _) = minimal_generators(&g, None, &Budget::unlimited()).unwrap();
    (g, gens)
}

fn dense_rank<F: Field>(k: &F, rows: Vec<HashMap<usize, F::Elem>>, cols: usize) -> usize {
    if rows.is_empty() || cols == 0 {
        return 0;
    }
    let dense: Vec<Vec<F::Elem>> = rows
        .into_iter()
        .map(|r| (0..cols).map(|c| r.get(&c).cloned().unwrap_or_else(|| k.zero())).collect())
        .collect();
    rank(k, &DenseMatrix::from_rows(dense, cols))
}

/// `dim J_δ` as the kernel of `S_δ -> T_δ`, `x_i ↦ f_i`, using only
/// polynomial multiplication in `T`.
pub fn relation_space_dim<F: Field>(gens: &InvariantGeneratorSet<F>, delta: u32) -> usize {
    let t = &gens.ring;
    let k = t.field();
    let s_monos = invsyz::poly::monomials_of_degree(&gens.degrees, delta);
    let mut columns: HashMap<Monomial, usize> = HashMap::new();
    let mut rows = Vec::new();
    for m in &s_monos {
        let mut p = t.one();
        for (i, f) in gens.generators.iter().enumerate() {
            p = t.mul(&p, &t.pow(f, m.exp(i)));
        }
        let mut row = HashMap::new();
        for term in p.terms() {
            let next = columns.len();
            row.insert(*columns.entry(term.mono.clone()).or_insert(next), term.coeff.clone());
        }
        rows.push(row);
    }
    s_monos.len() - dense_rank(k, rows, columns.len())
}

/// Minimal relation count in degree `δ`: `dim J_δ - dim (𝔫J)_δ`, where
/// `(𝔫J)_δ` is spanned by `x_i · J_{δ - d_i}`. Relations are taken as
/// kernel vectors of the substitution map.
pub fn minimal_relations_in_degree<F: Field>(gens: &InvariantGeneratorSet<F>, delta: u32) -> usize {
    let k = gens.ring.field();
    let kernel = |d: u32| -> Vec<HashMap<Monomial, F::Elem>> {
        let monos = invsyz::poly::monomials_of_degree(&gens.degrees, d);
        let t = &gens.ring;
        let images: Vec<Polynomial<F::Elem>> = monos
            .iter()
            .map(|m| {
                let mut p = t.one();
                for (i, f) in gens.generators.iter().enumerate() {
                    p = t.mul(&p, &t.pow(f, m.exp(i)));
                }
                p
            })
            .collect();
        let mut targets: Vec<Monomial> = images.iter().flat_map(|p| p.terms().iter().map(|t| t.mono.clone())).collect();
        targets.sort();
        targets.dedup();
        let rows: Vec<Vec<F::Elem>> = targets.iter().map(|b| images.iter().map(|p| t.coefficient(p, b)).collect()).collect();
        if monos.is_empty() {
            return Vec::new();
        }
        let ker = if rows.is_empty() {
            DenseMatrix::identity(k, monos.len())
        } else {
            invsyz::linalg::kernel_basis(k, &DenseMatrix::from_rows(rows, monos.len()))
        };
        (0..ker.cols())
            .map(|c| {
                ker.column(c)
                    .into_iter()
                    .enumerate()
                    .filter(|(_, v)| !k.is_zero(v))
                    .map(|(i, v)| (monos[i].clone(), v))
                    .collect()
            })
            .collect()
    };
    let top = kernel(delta);
    let mut columns: HashMap<Monomial, usize> = HashMap::new();
    let mut index = |m: &Monomial| {
        let next = columns.len();
        *columns.entry(m.clone()).or_insert(next)
    };
    let mut lower_rows = Vec::new();
    for (i, &d) in gens.degrees.iter().enumerate() {
        if d >= delta {
            continue;
        }
        for rel in kernel(delta - d) {
            let row: HashMap<usize, F::Elem> = rel
                .iter()
                .map(|(m, c)| {
                    let mut xm = m.clone();
                    xm.set_exp(i, m.exp(i) + 1);
                    (index(&xm), c.clone())
                })
                .collect();
            lower_rows.push(row);
        }
    }
    let top_rows: Vec<HashMap<usize, F::Elem>> =
        top.iter().map(|rel| rel.iter().map(|(m, c)| (index(m), c.clone())).collect()).collect();
    let cols = columns.len();
    let decomposable = dense_rank(k, lower_rows.clone(), cols);
    let mut all = lower_rows;
    all.extend(top_rows);
    dense_rank(k, all, cols) - decomposable
}

fn subsets(r: usize, size: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![Vec::new()];
    }
    if r < size {
        return Vec::new();
    }
    let mut out = subsets(r - 1, size);
    for mut s in subsets(r - 1, size - 1) {
        s.push(r - 1);
        out.push(s);
    }
    out
}

/// `β_{i,j}` as the homology of the Koszul complex of `f_1..f_r` over
/// `R = K[V]^G`, with `R_d` taken from Reynolds images. Independent of
/// `J` and of any resolution.
pub struct KoszulOverR<'a, F: Field> {
    group: &'a FiniteGroup<F>,
    gens: &'a InvariantGeneratorSet<F>,
    spaces: HashMap<u32, Vec<Polynomial<F::Elem>>>,
}

impl<'a, F: Field> KoszulOverR<'a, F> {
    pub fn new(group: &'a FiniteGroup<F>, gens: &'a InvariantGeneratorSet<F>) -> Self {
        Self { group, gens, spaces: HashMap::new() }
    }

    fn space(&mut self, d: i64) -> Vec<Polynomial<F::Elem>> {
        if d < 0 {
            return Vec::new();
        }
        let d = d as u32;
        if !self.spaces.contains_key(&d) {
            let ring: &GradedRing<F> = &self.gens.ring;
            let basis = invariant_space_basis(self.group, ring, d).unwrap().basis;
            self.spaces.insert(d, basis);
        }
        self.spaces[&d].clone()
    }

    fn chain_basis(&mut self, i: usize, j: u32) -> Vec<(Vec<usize>, Polynomial<F::Elem>)> {
        let r = self.gens.r();
        let mut out = Vec::new();
        for a in subsets(r, i) {
            let da: i64 = a.iter().map(|&x| self.gens.degrees[x] as i64).sum();
            for p in self.space(j as i64 - da) {
                out.push((a.clone(), p));
            }
        }
        out
    }

    fn boundary_rank(&mut self, i: usize, j: u32) -> usize {
        if i == 0 || i > self.gens.r() {
            return 0;
        }
        let t = self.gens.ring.clone();
        let k = t.field().clone();
        let mut columns: HashMap<(Vec<usize>, Monomial), usize> = HashMap::new();
        let mut rows = Vec::new();
        for (a, p) in self.chain_basis(i, j) {
            let mut row: HashMap<usize, F::Elem> = HashMap::new();
            for (pos, &x) in a.iter().enumerate() {
                let mut face = a.clone();
                face.remove(pos);
                let image = t.mul(&self.gens.generators[x], &p);
                for term in image.terms() {
                    let next = columns.len();
                    let c = *columns.entry((face.clone(), term.mono.clone())).or_insert(next);
                    let v = if pos % 2 == 0 { term.coeff.clone() } else { k.neg(&term.coeff) };
                    let e = row.entry(c).or_insert_with(|| k.zero());
                    *e = k.add(e, &v);
                }
            }
            rows.push(row);
        }
        let cols = columns.len();
        dense_rank(&k, rows, cols)
    }

    pub fn betti(&mut self, i: usize, j: u32) -> usize {
        let dim = self.chain_basis(i, j).len();
        dim - self.boundary_rank(i, j) - self.boundary_rank(i + 1, j)
    }
}
