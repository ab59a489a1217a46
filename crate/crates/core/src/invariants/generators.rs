//! Minimal homogeneous generators of the invariant ring, degree by degree.

use serde::Serialize;

use super::group::FiniteGroup;
use super::space::{invariant_space_basis, InvariantSpace};
use crate::error::{Budget, Error, Result};
use crate::field::Field;
use crate::linalg::SparseEchelon;
use crate::poly::{GradedRing, Polynomial};

/// Minimal generators `f_1..f_r` with `deg f_1 >= ... >= deg f_r`.
#[derive(Clone, Debug)]
pub struct InvariantGeneratorSet<F: Field> {
    pub ring: GradedRing<F>,
    pub generators: Vec<Polynomial<F::Elem>>,
    pub degrees: Vec<u32>,
    /// Every degree up to and including this one was scanned.
    pub scanned_through: u32,
}

impl<F: Field> InvariantGeneratorSet<F> {
    pub fn r(&self) -> usize {
        self.generators.len()
    }

    /// `β_G(V)`, the largest generator degree (0 when `r = 0`).
    pub fn beta(&self) -> u32 {
        self.degrees.first().copied().unwrap_or(0)
    }

    /// The same set without generator `index` (fault injection for tests
    /// and diagnostics).
    pub fn without(&self, index: usize) -> Result<Self> {
        if index >= self.r() {
            return Err(Error::Input(format!("generator index {index} out of range (r = {})", self.r())));
        }
        let mut out = self.clone();
        out.generators.remove(index);
        out.degrees.remove(index);
        Ok(out)
    }
}

/// Summary of one degree of the generator scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeStep {
    pub degree: u32,
    pub invariants: usize,
    pub decomposable: usize,
    pub new_generators: usize,
}

/// Generators of degree `<= degree_cap` (default `|G|`), with per-degree
/// dimension data. A generator above `|G|` is reported as a bound violation.
pub fn minimal_generators<F: Field>(
    group: &FiniteGroup<F>,
    degree_cap: Option<u32>,
    budget: &Budget,
) -> Result<(InvariantGeneratorSet<F>, Vec<DegreeStep>)> {
    let order = group.order() as u32;
    let cap = degree_cap.unwrap_or(order);
    if cap == 0 {
        return Err(Error::Input("degree cap must be positive".into()));
    }
    let ring = group.coordinate_ring();
    let k = group.field();
    let mut spaces: Vec<InvariantSpace<F::Elem>> = vec![invariant_space_basis(group, &ring, 0)?];
    let mut found: Vec<(u32, Polynomial<F::Elem>)> = Vec::new();
    let mut steps = Vec::new();
    for d in 1..=cap {
        budget.check("invariant generators")?;
        let space = invariant_space_basis(group, &ring, d)?;
        let dim = space.dim();
        let mut ech = SparseEchelon::new(k.clone());
        // Products f_i * u with u running over a basis of R_{d - d_i}, in
        // coordinates read at the pivot monomials of R_d.
        'outer: for (di, f) in &found {
            for u in &spaces[(d - di) as usize].basis {
                if ech.rank() == dim {
                    break 'outer;
                }
                let v: Vec<(usize, F::Elem)> = space
                    .pivots
                    .iter()
                    .enumerate()
                    .filter_map(|(c, p)| {
                        let x = product_coefficient(&ring, f, u, p);
                        (!k.is_zero(&x)).then_some((c, x))
                    })
                    .collect();
                ech.insert(v);
            }
        }
        let decomposable = ech.rank();
        let mut new_here = 0;
        for (c, b) in space.basis.iter().enumerate() {
            if ech.rank() == dim {
                break;
            }
            let coord = vec![(c, ring.coefficient(b, &space.pivots[c]))];
            if ech.insert(coord) {
                if d > order {
                    return Err(Error::BoundViolation(format!(
                        "new invariant generator in degree {d} exceeds the Noether bound |G| = {order}"
                    )));
                }
                found.push((d, b.clone()));
                new_here += 1;
            }
        }
        steps.push(DegreeStep { degree: d, invariants: dim, decomposable, new_generators: new_here });
        spaces.push(space);
    }
    // Stable sort keeps discovery order within a degree.
    found.sort_by_key(|b| std::cmp::Reverse(b.0));
    let set = InvariantGeneratorSet {
        ring,
        degrees: found.iter().map(|(d, _)| *d).collect(),
        generators: found.into_iter().map(|(_, f)| f).collect(),
        scanned_through: cap,
    };
    Ok((set, steps))
}

/// Coefficient of `m` in `f * u` without forming the product.
fn product_coefficient<F: Field>(
    ring: &GradedRing<F>,
    f: &Polynomial<F::Elem>,
    u: &Polynomial<F::Elem>,
    m: &crate::poly::Monomial,
) -> F::Elem {
    let k = ring.field();
    let mut acc = k.zero();
    let mask = m.mask();
    for t in f.terms() {
        if t.mono.mask() & !mask != 0 {
            continue;
        }
        if let Some(q) = m.div(&t.mono) {
            let c = ring.coefficient(u, &q);
            if !k.is_zero(&c) {
                acc = k.add(&acc, &k.mul(&t.coeff, &c));
            }
        }
    }
    acc
}
