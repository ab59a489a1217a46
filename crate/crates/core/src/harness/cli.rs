//! Command-line front end. Every subcommand reads one JSON spec (or a
//! directory of them) and writes JSON to `--out` or standard output.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use super::input::InputSpec;
use super::report::BoundsReport;
use super::sweep::{sweep, SweepRow};
use super::verify::{verify_bounds, VerifyOptions};
use crate::error::{Budget, Error, Result};
use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::invariants::{group_closure, minimal_generators, molien_series, tau, DEFAULT_GROUP_CAP};
use crate::poly::text::render;
use crate::resolution::{hilbert_series_from_betti, minimal_resolution, regularity_hilbert_ideal, syzygy_ideal};

#[derive(Debug, Parser)]
#[command(name = "invsyz", version, about = "Invariant rings of finite groups, their syzygies and degree bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// JSON group specification.
    #[arg(long)]
    spec: PathBuf,
    /// Scan invariants up to this degree instead of |G|.
    #[arg(long)]
    degree_cap: Option<u32>,
    /// Abort cleanly after this many wall-clock seconds.
    #[arg(long)]
    budget_seconds: Option<f64>,
    /// Write JSON here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimal generators of the invariant ring.
    Invariants(Common),
    /// τ and the Hilbert function of T/I.
    Tau(Common),
    /// Minimal relations among the generators.
    SyzygyIdeal(Common),
    /// Graded Betti table of the invariant ring over S.
    Betti(Common),
    /// Molien series (characteristic 0 only).
    Molien {
        #[command(flatten)]
        common: Common,
        /// Number of series coefficients to list (default 2|G|).
        #[arg(long)]
        terms: Option<usize>,
    },
    /// Full pipeline with every bound evaluated.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Largest homological degree to evaluate bounds for.
        #[arg(long)]
        imax: Option<usize>,
        /// Print the text rendering instead of JSON on standard output.
        #[arg(long)]
        text: bool,
        /// Include per-stage wall-clock timings (the report is then not reproducible).
        #[arg(long)]
        timings: bool,
        /// Drop generator K (0-based, in descending degree order) before the
        /// downstream stages; for exercising the diagnostics.
        #[arg(long, value_name = "K")]
        drop_generator: Option<usize>,
    },
    /// Verify every *.json spec in a directory and print a summary table.
    Sweep {
        #[arg(long)]
        dir: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        imax: Option<usize>,
        #[arg(long)]
        degree_cap: Option<u32>,
        #[arg(long)]
        budget_seconds: Option<f64>,
        /// Write the rows as JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

macro_rules! over_field {
    ($spec:expr, $k:ident => $body:expr) => {
        match $spec {
            FieldSpec::Rationals => {
                let $k = &Rationals;
                $body
            }
            FieldSpec::Prime { p } => {
                let $k = &PrimeField::new(p)?;
                $body
            }
        }
    };
}

/// Parses `argv` (including the program name), runs it, and returns the
/// process exit code.
pub fn run_cli<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { 64 } else { 0 };
        }
    };
    match dispatch(cli.command, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(|e| Error::Internal(format!("stdout: {e}"))),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON value serializes");
    s.push('\n');
    s
}

fn budget(c: &Common) -> Budget {
    c.budget_seconds.map_or_else(Budget::unlimited, Budget::seconds)
}

fn dispatch(command: Command, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Invariants(c) => {
            let spec = InputSpec::from_path(&c.spec)?;
            let v = over_field!(spec.field, k => invariants_json(k, &spec, &c)?);
            emit(&c.out, &pretty(&v), stdout)?;
        }
        Command::Tau(c) => {
            let spec = InputSpec::from_path(&c.spec)?;
            let v = over_field!(spec.field, k => tau_json(k, &spec, &c)?);
            emit(&c.out, &pretty(&v), stdout)?;
        }
        Command::SyzygyIdeal(c) => {
            let spec = InputSpec::from_path(&c.spec)?;
            let v = over_field!(spec.field, k => syzygy_json(k, &spec, &c)?);
            emit(&c.out, &pretty(&v), stdout)?;
        }
        Command::Betti(c) => {
            let spec = InputSpec::from_path(&c.spec)?;
            let v = over_field!(spec.field, k => betti_json(k, &spec, &c)?);
            emit(&c.out, &pretty(&v), stdout)?;
        }
        Command::Molien { common, terms } => {
            let spec = InputSpec::from_path(&common.spec)?;
            let v = over_field!(spec.field, k => molien_json(k, &spec, terms)?);
            emit(&common.out, &pretty(&v), stdout)?;
        }
        Command::Verify { common, imax, text, timings, drop_generator } => {
            if imax == Some(0) {
                return Err(Error::Input("--imax must be at least 1".into()));
            }
            let spec = InputSpec::from_path(&common.spec)?;
            let opts = VerifyOptions {
                i_max: imax,
                degree_cap: common.degree_cap,
                budget_seconds: common.budget_seconds,
                drop_generator,
                timings,
                group_cap: DEFAULT_GROUP_CAP,
            };
            let report = verify_bounds(&spec, &opts)?;
            if common.out.is_some() {
                emit(&common.out, &report.to_json(), stdout)?;
                emit(&None, &report.render_text(), stdout)?;
            } else if text {
                emit(&None, &report.render_text(), stdout)?;
            } else {
                emit(&None, &report.to_json(), stdout)?;
            }
            summarize(&report, stderr);
            return Ok(report.exit_code());
        }
        Command::Sweep { dir, jobs, imax, degree_cap, budget_seconds, out } => {
            let opts = VerifyOptions { i_max: imax, degree_cap, budget_seconds, ..VerifyOptions::default() };
            let rows = sweep(&dir, &opts, jobs)?;
            if out.is_some() {
                let v = serde_json::to_value(&rows).expect("rows serialize");
                emit(&out, &pretty(&v), stdout)?;
            }
            emit(&None, &SweepRow::render_table(&rows), stdout)?;
            return Ok(rows.iter().map(|r| r.exit_code).max().unwrap_or(0));
        }
    }
    Ok(0)
}

fn summarize(report: &BoundsReport, stderr: &mut dyn Write) {
    for r in report.records.iter().filter(|r| r.status == super::report::Status::Violated) {
        let _ = writeln!(stderr, "bound violation (implementation bug): {} ({} > {})", r.statement, r.left, r.right);
    }
    for c in report.checks.iter().filter(|c| !c.passed) {
        let _ = writeln!(stderr, "check failed (implementation bug): {}: {}", c.name, c.detail);
    }
    for r in report.records.iter().filter(|r| r.status == super::report::Status::ConjectureCounterexample) {
        let _ = writeln!(stderr, "*** CONJECTURE COUNTEREXAMPLE: {} fails ({} > {}) ***", r.statement, r.left, r.right);
    }
}

fn invariants_json<F: Field>(k: &F, spec: &InputSpec, c: &Common) -> Result<Value> {
    let group = group_closure(k, &spec.group, DEFAULT_GROUP_CAP)?;
    let (gens, steps) = minimal_generators(&group, c.degree_cap.or(spec.degree_cap), &budget(c))?;
    Ok(json!({
        "group": spec.group.to_string(),
        "field": spec.field.to_string(),
        "group_order": group.order(),
        "degrees": gens.degrees,
        "beta": gens.beta(),
        "generators": gens.generators.iter().map(|f| render(&gens.ring, f)).collect::<Vec<_>>(),
        "steps": steps,
    }))
}

fn tau_json<F: Field>(k: &F, spec: &InputSpec, c: &Common) -> Result<Value> {
    let group = group_closure(k, &spec.group, DEFAULT_GROUP_CAP)?;
    let b = budget(c);
    let (gens, _) = minimal_generators(&group, c.degree_cap.or(spec.degree_cap), &b)?;
    let hd = tau(group.order(), &gens, &b)?;
    let gb = &hd.hilbert_ideal_basis;
    Ok(json!({
        "tau": hd.tau,
        "reg_hilbert_ideal": regularity_hilbert_ideal(&hd),
        "hilbert_function_t_mod_i": hd.hilbert_function(),
        "hilbert_ideal_groebner_basis": gb.elements().iter().map(|f| render(gb.ring(), f)).collect::<Vec<_>>(),
    }))
}

fn syzygy_json<F: Field>(k: &F, spec: &InputSpec, c: &Common) -> Result<Value> {
    let group = group_closure(k, &spec.group, DEFAULT_GROUP_CAP)?;
    let b = budget(c);
    let (gens, _) = minimal_generators(&group, c.degree_cap.or(spec.degree_cap), &b)?;
    let j = syzygy_ideal(&gens, &b)?;
    Ok(json!({
        "degrees": gens.degrees,
        "beta1": j.beta1(),
        "minimal_generator_degrees": j.minimal_generator_degrees,
        "minimal_generators": j.minimal_generators.iter().map(|h| render(&j.ring, h)).collect::<Vec<_>>(),
        "groebner_basis": j.basis.elements().iter().map(|h| render(&j.ring, h)).collect::<Vec<_>>(),
    }))
}

fn betti_json<F: Field>(k: &F, spec: &InputSpec, c: &Common) -> Result<Value> {
    let group = group_closure(k, &spec.group, DEFAULT_GROUP_CAP)?;
    let b = budget(c);
    let (gens, _) = minimal_generators(&group, c.degree_cap.or(spec.degree_cap), &b)?;
    let j = syzygy_ideal(&gens, &b)?;
    let res = minimal_resolution(&j.ring, j.basis.elements(), &b)?;
    let h = hilbert_series_from_betti(&res.betti, &gens.degrees)?;
    let len = res.betti.length();
    Ok(json!({
        "degrees": gens.degrees,
        "betti": res.betti,
        "betti_text": res.betti.render(),
        "resolution_length": len,
        "beta_i": (1..=len).map(|i| json!({"i": i, "value": res.betti.max_degree(i)})).collect::<Vec<_>>(),
        "hilbert_series": h.series.to_string(),
        "a_invariant": h.a_invariant,
    }))
}

fn molien_json<F: Field>(k: &F, spec: &InputSpec, terms: Option<usize>) -> Result<Value> {
    let group = group_closure(k, &spec.group, DEFAULT_GROUP_CAP)?;
    let m = molien_series(&group)?;
    let n = terms.unwrap_or(2 * group.order());
    let coeffs: Vec<String> = m.series(n)?.iter().map(|c| c.to_string()).collect();
    Ok(json!({
        "group_order": group.order(),
        "series": m.to_string(),
        "a_invariant": m.degree(),
        "coefficients": coeffs,
    }))
}
