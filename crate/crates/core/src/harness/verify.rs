use std::time::Instant;

use super::input::InputSpec;
use super::report::{BoundsReport, Check, DegreeValue, Record, SyzygyReport, Timing};
use crate::error::{Budget, Error, Result};
use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::invariants::{
    group_closure, invariant_space_basis, minimal_generators, molien_series, tau, DegreeStep, FiniteGroup,
    InvariantGeneratorSet, DEFAULT_GROUP_CAP,
};
use crate::poly::text::render;
use crate::poly::RationalFunction;
use crate::resolution::{
    first_syzygies_over_t, hilbert_series_from_betti, minimal_resolution, regularity_hilbert_ideal, syzygy_ideal,
};

/// Knobs for [`verify_bounds`]. `i_max` and `degree_cap` override the
/// values in the spec file.
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub i_max: Option<usize>,
    pub degree_cap: Option<u32>,
    pub budget_seconds: Option<f64>,
    /// Remove this generator before computing anything downstream.
    pub drop_generator: Option<usize>,
    pub timings: bool,
    pub group_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { i_max: None, degree_cap: None, budget_seconds: None, drop_generator: None, timings: false, group_cap: DEFAULT_GROUP_CAP }
    }
}

struct Clock {
    last: Instant,
    entries: Vec<Timing>,
}

impl Clock {
    fn new() -> Self {
        Self { last: Instant::now(), entries: Vec::new() }
    }

    fn lap(&mut self, stage: &str) {
        let now = Instant::now();
        self.entries.push(Timing { stage: stage.into(), seconds: (now - self.last).as_secs_f64() });
        self.last = now;
    }
}

/// Runs closure, generators, syzygy ideal, resolution, Hilbert data, `τ`
/// and the syzygies over `T`, then evaluates every bound.
///
/// A generator set that fails to span the invariant ring is an error, not
/// a report: nothing downstream of it would mean anything.
pub fn verify_bounds(spec: &InputSpec, opts: &VerifyOptions) -> Result<BoundsReport> {
    spec.field.validate()?;
    let budget = opts.budget_seconds.map_or_else(Budget::unlimited, Budget::seconds);
    match spec.field {
        FieldSpec::Rationals => run(&Rationals, spec, opts, &budget),
        FieldSpec::Prime { p } => run(&PrimeField::new(p)?, spec, opts, &budget),
    }
}

fn run<F: Field>(k: &F, spec: &InputSpec, opts: &VerifyOptions, budget: &Budget) -> Result<BoundsReport> {
    let mut clock = Clock::new();
    let degree_cap = opts.degree_cap.or(spec.degree_cap);
    let group = group_closure(k, &spec.group, opts.group_cap)?;
    clock.lap("closure");
    let (mut gens, steps) = minimal_generators(&group, degree_cap, budget)?;
    if let Some(idx) = opts.drop_generator {
        gens = gens.without(idx)?;
    }
    clock.lap("generators");

    let j = syzygy_ideal(&gens, budget)?;
    clock.lap("syzygy ideal");
    let res = minimal_resolution(&j.ring, j.basis.elements(), budget)?;
    clock.lap("resolution");
    let hilbert = hilbert_series_from_betti(&res.betti, &gens.degrees)?;
    let completeness = check_completeness(&group, &gens, &steps, &hilbert.series, budget)?;
    clock.lap("hilbert series");

    let hd = tau(group.order(), &gens, budget)?;
    let reg = regularity_hilbert_ideal(&hd);
    clock.lap("tau");
    let u_degrees = first_syzygies_over_t(&gens, budget)?;
    clock.lap("syzygies over T");

    let order = group.order() as i64;
    let n = group.dimension();
    let s = n;
    let r = gens.r();
    let beta = gens.beta() as i64;
    let t = hd.tau as i64;
    let a = hilbert.a_invariant;
    let len = res.betti.length();
    let i_max = opts.i_max.or(spec.i_max).unwrap_or(len).max(1);
    let top = i_max.min(len);
    let beta_upper = |i: usize| res.betti.max_degree(i).unwrap_or(0) as i64;
    let degree_sum = |count: usize| -> Option<i64> {
        (count <= r).then(|| gens.degrees[..count].iter().map(|&d| d as i64).sum())
    };

    let mut records = vec![
        Record::theorem("noether", "beta <= |G|", beta, order),
        Record::theorem("fogarty", "tau <= |G|", t, order),
        Record::theorem("knop", "a(R) <= -s", a, -(s as i64)),
    ];
    for i in 1..=top {
        if let Some(sum) = degree_sum(s + i) {
            records.push(Record::theorem(
                format!("betti_degree_sum[{i}]"),
                format!("beta^{i} <= d_1 + ... + d_{} - s", s + i),
                beta_upper(i),
                sum - s as i64,
            ));
        }
        records.push(Record::theorem(
            format!("betti_beta_bound[{i}]"),
            format!("beta^{i} <= (s + {i}) beta - s"),
            beta_upper(i),
            (s + i) as i64 * beta - s as i64,
        ));
        records.push(Record::theorem(
            format!("betti_order_bound[{i}]"),
            format!("beta^{i} <= (n + {i}) |G| - n"),
            beta_upper(i),
            (n + i) as i64 * order - n as i64,
        ));
    }
    for i in 0..=top {
        if let Some(sum) = degree_sum(s + i) {
            records.push(Record::theorem(
                format!("tor_degree[{i}]"),
                format!("deg Tor_{i} <= d_1 + ... + d_{} + a(R)", s + i),
                beta_upper(i),
                sum + a,
            ));
        }
    }
    records.push(Record::theorem("relations_2tau", "beta^1 <= 2 tau", beta_upper(1), 2 * t));
    records.push(Record::theorem("relations_2order", "2 tau <= 2 |G|", 2 * t, 2 * order));
    records.push(Record::theorem(
        "u_degree",
        "max degree of a minimal generator of U <= tau + 1",
        u_degrees.iter().copied().max().unwrap_or(0) as i64,
        t + 1,
    ));
    for i in 1..=top {
        records.push(Record::conjecture(
            format!("conjecture[{i}]"),
            format!("beta^{i} <= {} tau", i + 1),
            beta_upper(i),
            (i + 1) as i64 * t,
        ));
    }

    let check = |name: &str, passed: bool, detail: String| Check { name: name.into(), passed, detail };
    let within_cap = (1..=len).all(|i| degree_sum(s + i).is_some_and(|b| beta_upper(i) <= b - s as i64));
    let vanishing = j
        .basis
        .elements()
        .iter()
        .map(|h| j.ring.substitute(h, &gens.generators, &gens.ring).map(|v| v.is_zero()))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|z| z);
    let zero_row = res.betti.triples().iter().filter(|(i, _, _)| *i == 0).cloned().collect::<Vec<_>>();
    let checks = vec![
        completeness,
        check("reg(I) = tau", reg == hd.tau, format!("reg(I) = {reg}, tau = {}", hd.tau)),
        check("T/I has no gaps", hd.has_no_gaps(), format!("Hilbert function {:?}", hd.hilbert_function())),
        check("k = r - s", len as i64 == r as i64 - s as i64, format!("k = {len}, r - s = {}", r as i64 - s as i64)),
        check("R is cyclic over S", zero_row == vec![(0, 0, 1)], format!("i = 0 entries {zero_row:?}")),
        check("J vanishes on the generators", vanishing, format!("{} Groebner basis elements substituted", j.basis.len())),
        check(
            "J agrees with F_1",
            j.minimal_generator_degrees.len() == res.betti.rank(1) && j.beta1() as i64 == beta_upper(1),
            format!("{} minimal relations, rank F_1 = {}", j.minimal_generator_degrees.len(), res.betti.rank(1)),
        ),
        check("resolution is a complex", res.is_complex(), "d_i d_{i+1} = 0 for all i".into()),
        check("resolution is minimal", res.is_minimal(), "no nonzero constant entries".into()),
        check("resolution is graded", res.is_graded(), "entry degrees match the shifts".into()),
        check("Betti degrees within the proven cap", within_cap, format!("all {len} homological degrees")),
    ];

    let beta_i = (1..=len).map(|i| DegreeValue { i, value: beta_upper(i) as u32 }).collect();
    Ok(BoundsReport {
        group: spec.group.to_string(),
        field: spec.field.to_string(),
        group_order: group.order(),
        n,
        s,
        r,
        degrees: gens.degrees.clone(),
        beta: gens.beta(),
        tau: hd.tau,
        reg_hilbert_ideal: reg,
        hilbert_function_t_mod_i: hd.hilbert_function(),
        a_invariant: a,
        hilbert_series: hilbert.series.to_string(),
        generators: gens.generators.iter().map(|f| render(&gens.ring, f)).collect(),
        syzygy_ideal: SyzygyReport {
            minimal_generator_degrees: j.minimal_generator_degrees.clone(),
            minimal_generators: j.minimal_generators.iter().map(|h| render(&j.ring, h)).collect(),
            groebner_basis_size: j.basis.len(),
        },
        betti_text: res.betti.render(),
        betti: res.betti,
        resolution_length: len,
        beta_i,
        u_degrees,
        i_max,
        records,
        checks,
        dropped_generator: opts.drop_generator,
        timings: opts.timings.then_some(clock.entries),
    })
}

/// The subalgebra generated by `gens` must be all of `K[V]^G`: its Hilbert
/// series (from the Betti numbers) is compared with the Molien series in
/// characteristic 0 and with invariant dimensions through degree `2|G|`.
fn check_completeness<F: Field>(
    group: &FiniteGroup<F>,
    gens: &InvariantGeneratorSet<F>,
    steps: &[DegreeStep],
    series: &RationalFunction,
    budget: &Budget,
) -> Result<Check> {
    let top = 2 * group.order();
    let coeffs = series.series(top)?;
    let ring = group.coordinate_ring();
    for (d, got) in coeffs.iter().enumerate().skip(1) {
        let dim = match steps.iter().find(|s| s.degree as usize == d) {
            Some(step) => step.invariants,
            None if group.field().characteristic() == 0 => break,
            None => {
                budget.check("completeness")?;
                invariant_space_basis(group, &ring, d as u32)?.dim()
            }
        };
        if *got != num_rational::BigRational::from_integer(dim.into()) {
            return Err(Error::BoundViolation(format!(
                "generator set incomplete: dim R_{d} = {dim} but the {} generator(s) span {got} in degree {d}",
                gens.r()
            )));
        }
    }
    if group.field().characteristic() == 0 {
        let molien = molien_series(group)?;
        if !series.same_function(&molien) {
            return Err(Error::BoundViolation(format!(
                "generator set incomplete: Hilbert series {series} differs from the Molien series {molien}"
            )));
        }
        return Ok(Check {
            name: "generators span R".into(),
            passed: true,
            detail: "Hilbert series from the Betti table equals the Molien series".into(),
        });
    }
    Ok(Check {
        name: "generators span R".into(),
        passed: true,
        detail: format!("dimensions agree with the invariant spaces through degree {top}"),
    })
}
