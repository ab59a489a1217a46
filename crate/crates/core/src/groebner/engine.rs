//! Buchberger's algorithm for submodules of a graded free module, with the
//! normal selection strategy and the Gebauer–Möller criteria.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use super::module::{FreeModule, ModTerm, ModVec};
use crate::error::{Budget, Result};
use crate::field::Field;
use crate::poly::Monomial;

#[derive(Clone, Debug)]
enum PairKind {
    Input(usize),
    S(usize, usize),
}

#[derive(Clone, Debug)]
struct Pair {
    kind: PairKind,
    comp: usize,
    lcm: Monomial,
}

#[derive(Clone, Debug)]
struct Lead {
    comp: usize,
    mono: Monomial,
    mask: u64,
}

impl Lead {
    fn of<E>(t: &ModTerm<E>) -> Self {
        Self { comp: t.comp, mono: t.mono.clone(), mask: t.mono.mask() }
    }
}

/// Reduces `f` completely (leading term and tail) by the elements of
/// `basis` selected by `usable`.
pub(crate) fn reduce_with<F: Field>(
    module: &FreeModule<F>,
    f: ModVec<F::Elem>,
    basis: &[ModVec<F::Elem>],
    leads: &[(usize, Monomial, u64)],
    usable: impl Fn(usize) -> bool,
) -> ModVec<F::Elem> {
    let k = module.field();
    let mut f = f;
    let mut pos = 0;
    while pos < f.terms.len() {
        let t = &f.terms[pos];
        let mask = t.mono.mask();
        let hit = leads.iter().enumerate().find(|(i, (c, m, lm))| {
            *c == t.comp && lm & !mask == 0 && usable(*i) && m.divides(&t.mono)
        });
        match hit {
            None => pos += 1,
            Some((i, (_, m, _))) => {
                let g = &basis[i];
                let q = t.mono.div(m).unwrap();
                let c = k.div(&t.coeff, &g.terms[0].coeff);
                let tail = module.sub_mul_term_slice(&f.terms[pos..], &c, &q, g);
                f.terms.truncate(pos);
                f.terms.extend(tail.terms);
            }
        }
    }
    f
}

/// Normal form of `f` modulo a set of module elements.
pub fn reduce<F: Field>(module: &FreeModule<F>, f: &ModVec<F::Elem>, basis: &[ModVec<F::Elem>]) -> ModVec<F::Elem> {
    let leads: Vec<_> = basis
        .iter()
        .filter_map(|g| g.lead().map(|t| (t.comp, t.mono.clone(), t.mono.mask())))
        .collect();
    let nonzero: Vec<ModVec<F::Elem>> = basis.iter().filter(|g| !g.is_zero()).cloned().collect();
    reduce_with(module, f.clone(), &nonzero, &leads, |_| true)
}

struct State<'a, F: Field> {
    module: &'a FreeModule<F>,
    basis: Vec<ModVec<F::Elem>>,
    leads: Vec<Lead>,
    lead_keys: Vec<(usize, Monomial, u64)>,
    active: Vec<bool>,
    buckets: BTreeMap<u32, (Vec<Pair>, bool)>,
    ideal_mode: bool,
}

impl<'a, F: Field> State<'a, F> {
    fn pair_degree(&self, comp: usize, lcm: &Monomial) -> u32 {
        self.module.term_degree(comp, lcm)
    }

    fn push_pair(&mut self, degree: u32, pair: Pair) {
        let bucket = self.buckets.entry(degree).or_insert_with(|| (Vec::new(), true));
        bucket.0.push(pair);
        bucket.1 = false;
    }

    /// Smallest pair: lowest degree, then smallest lcm term, then inputs
    /// before S-pairs, then indices.
    fn pop_pair(&mut self) -> Option<Pair> {
        let module = self.module;
        let mut entry = self.buckets.first_entry()?;
        let (pairs, sorted) = entry.get_mut();
        if !*sorted {
            pairs.sort_by(|a, b| pair_cmp(module, b, a));
            *sorted = true;
        }
        let p = pairs.pop();
        if pairs.is_empty() {
            entry.remove();
        }
        p
    }

    fn spoly(&self, i: usize, j: usize, comp: usize, lcm: &Monomial) -> ModVec<F::Elem> {
        let k = self.module.field();
        let (a, b) = (&self.basis[i], &self.basis[j]);
        let ma = lcm.div(&a.terms[0].mono).unwrap();
        let mb = lcm.div(&b.terms[0].mono).unwrap();
        debug_assert!(a.terms[0].comp == comp && b.terms[0].comp == comp);
        let left = self.module.mul_term(a, &ma, &k.inv(&a.terms[0].coeff).unwrap());
        self.module.sub_mul_term(&left, &k.inv(&b.terms[0].coeff).unwrap(), &mb, b)
    }

    fn reduce(&self, f: ModVec<F::Elem>) -> ModVec<F::Elem> {
        reduce_with(self.module, f, &self.basis, &self.lead_keys, |i| self.active[i])
    }

    fn insert(&mut self, h: ModVec<F::Elem>) {
        let t = self.basis.len();
        let lt = Lead::of(&h.terms[0]);
        let comp = lt.comp;

        // B: drop queued pairs (i, j) whose lcm is divisible by lt(h) while
        // lcm(i, h) and lcm(j, h) are both proper divisors of it.
        let leads = &self.leads;
        for (pairs, _) in self.buckets.values_mut() {
            pairs.retain(|p| match p.kind {
                PairKind::S(i, j) => {
                    !(p.comp == comp
                        && lt.mono.divides(&p.lcm)
                        && leads[i].mono.lcm(&lt.mono) != p.lcm
                        && leads[j].mono.lcm(&lt.mono) != p.lcm)
                }
                PairKind::Input(_) => true,
            });
        }
        self.buckets.retain(|_, (pairs, _)| !pairs.is_empty());

        // New pairs, thinned by the chain (M) and product (F) criteria.
        let mut cands: Vec<(usize, Monomial, bool)> = (0..t)
            .filter(|&i| self.active[i] && self.leads[i].comp == comp)
            .map(|i| {
                let m = &self.leads[i].mono;
                (i, m.lcm(&lt.mono), m.is_coprime(&lt.mono))
            })
            .collect();
        let keep: Vec<bool> = cands
            .iter()
            .map(|(_, l, _)| !cands.iter().any(|(_, l2, _)| l2 != l && l2.divides(l)))
            .collect();
        let mut filtered: Vec<(usize, Monomial, bool)> =
            cands.drain(..).zip(keep).filter(|(_, k)| *k).map(|(c, _)| c).collect();
        filtered.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
        let mut idx = 0;
        while idx < filtered.len() {
            let mut end = idx + 1;
            while end < filtered.len() && filtered[end].1 == filtered[idx].1 {
                end += 1;
            }
            let group = &filtered[idx..end];
            let any_coprime = self.ideal_mode && group.iter().any(|c| c.2);
            if !any_coprime {
                let (i, lcm, _) = group[0].clone();
                let degree = self.pair_degree(comp, &lcm);
                self.push_pair(degree, Pair { kind: PairKind::S(i, t), comp, lcm });
            }
            idx = end;
        }

        for i in 0..t {
            if self.active[i] && self.leads[i].comp == comp && lt.mono.divides(&self.leads[i].mono) {
                self.active[i] = false;
            }
        }
        self.lead_keys.push((comp, lt.mono.clone(), lt.mask));
        self.leads.push(lt);
        self.active.push(true);
        self.basis.push(h);
    }
}

fn pair_cmp<F: Field>(module: &FreeModule<F>, a: &Pair, b: &Pair) -> Ordering {
    module.cmp(a.comp, &a.lcm, b.comp, &b.lcm).then_with(|| match (&a.kind, &b.kind) {
        (PairKind::Input(x), PairKind::Input(y)) => x.cmp(y),
        (PairKind::Input(_), PairKind::S(..)) => Ordering::Less,
        (PairKind::S(..), PairKind::Input(_)) => Ordering::Greater,
        (PairKind::S(a1, a2), PairKind::S(b1, b2)) => (a2, a1).cmp(&(b2, b1)),
    })
}

/// Reduced Gröbner basis of the submodule generated by `gens`.
///
/// Elements are normalized (primitive with positive leading coefficient over
/// the rationals, monic otherwise) and sorted by ascending leading term.
pub fn module_groebner_basis<F: Field>(
    module: &FreeModule<F>,
    gens: &[ModVec<F::Elem>],
    budget: &Budget,
) -> Result<Vec<ModVec<F::Elem>>> {
    let mut st = State {
        module,
        basis: Vec::new(),
        leads: Vec::new(),
        lead_keys: Vec::new(),
        active: Vec::new(),
        buckets: BTreeMap::new(),
        ideal_mode: module.rank() == 1,
    };
    for (k, g) in gens.iter().enumerate() {
        if let Some(t) = g.lead() {
            let degree = g.terms.iter().map(|t| module.term_degree(t.comp, &t.mono)).max().unwrap();
            st.push_pair(degree, Pair { kind: PairKind::Input(k), comp: t.comp, lcm: t.mono.clone() });
        }
    }
    while let Some(pair) = st.pop_pair() {
        budget.check("Gröbner basis")?;
        let f = match pair.kind {
            PairKind::Input(k) => gens[k].clone(),
            PairKind::S(i, j) => st.spoly(i, j, pair.comp, &pair.lcm),
        };
        let h = st.reduce(f);
        if !h.is_zero() {
            let h = module.make_monic(&h);
            st.insert(h);
        }
    }
    interreduce(module, st.basis, st.active, budget)
}

fn interreduce<F: Field>(
    module: &FreeModule<F>,
    basis: Vec<ModVec<F::Elem>>,
    active: Vec<bool>,
    budget: &Budget,
) -> Result<Vec<ModVec<F::Elem>>> {
    let mut kept: Vec<ModVec<F::Elem>> =
        basis.into_iter().zip(active).filter(|(_, a)| *a).map(|(g, _)| g).collect();
    kept.sort_by(|a, b| {
        let (x, y) = (&a.terms[0], &b.terms[0]);
        module.cmp(x.comp, &x.mono, y.comp, &y.mono)
    });
    let keys: Vec<_> = kept.iter().map(|g| (g.terms[0].comp, g.terms[0].mono.clone(), g.terms[0].mono.mask())).collect();
    // Leading terms form an antichain, so reducing by the others only
    // touches tails. Ascending order lets each element use already reduced
    // smaller ones.
    for i in 0..kept.len() {
        budget.check("Gröbner interreduction")?;
        let head = ModVec { terms: vec![kept[i].terms[0].clone()] };
        let tail = ModVec { terms: kept[i].terms[1..].to_vec() };
        let tail = reduce_with(module, tail, &kept, &keys, |j| j != i);
        let full = module.add(&head, &tail);
        kept[i] = module.normalize(&full);
    }
    Ok(kept)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::poly::text::parse;
    use crate::poly::GradedRing;

    fn ideal_gb(ring: &GradedRing<Rationals>, gens: &[&str]) -> Vec<String> {
        let m = FreeModule::pot(ring.clone(), vec![0]);
        let gens: Vec<_> = gens.iter().map(|s| m.from_polynomial(&parse(ring, s).unwrap(), 0)).collect();
        module_groebner_basis(&m, &gens, &Budget::unlimited())
            .unwrap()
            .iter()
            .map(|g| crate::poly::text::render(ring, &m.component(g, 0)))
            .collect()
    }

    #[test]
    fn twisted_cubic() {
        let r = GradedRing::standard(Rationals, "x", 4);
        let gb = ideal_gb(&r, &["x1*x3 - x2^2", "x2*x4 - x3^2", "x1*x4 - x2*x3"]);
        assert_eq!(gb, vec!["x3^2 - x2*x4", "x2*x3 - x1*x4", "x2^2 - x1*x3"]);
    }

    #[test]
    fn module_pot_syzygy_style() {
        let r = GradedRing::standard(Rationals, "y", 2);
        // (y1, 1, 0) and (y2, 0, 1) span a submodule whose POT basis exposes
        // the syzygy y2*e1 - y1*e2 in the tail components.
        let m = FreeModule::pot(r.clone(), vec![0, 1, 1]);
        let v1 = m.from_polynomials(&[parse(&r, "y1").unwrap(), r.one(), r.zero()]);
        let v2 = m.from_polynomials(&[parse(&r, "y2").unwrap(), r.zero(), r.one()]);
        let gb = module_groebner_basis(&m, &[v1, v2], &Budget::unlimited()).unwrap();
        let syz: Vec<_> = gb.iter().filter(|g| g.terms[0].comp >= 1).collect();
        assert_eq!(syz.len(), 1);
        assert_eq!(m.component(syz[0], 1), parse(&r, "y2").unwrap());
        assert_eq!(m.component(syz[0], 2), parse(&r, "-y1").unwrap());
    }

    #[test]
    fn prime_field_basis_is_monic() {
        let r = GradedRing::standard(PrimeField::new(7).unwrap(), "y", 2);
        let m = FreeModule::pot(r.clone(), vec![0]);
        let g = m.from_polynomial(&parse(&r, "3*y1^2 + y2^2").unwrap(), 0);
        let gb = module_groebner_basis(&m, &[g], &Budget::unlimited()).unwrap();
        assert_eq!(crate::poly::text::render(&r, &m.component(&gb[0], 0)), "y1^2 + 5*y2^2");
    }
}
