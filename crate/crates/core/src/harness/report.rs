use std::fmt::Write as _;

use serde::Serialize;

use crate::resolution::BettiTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "holds")]
    Holds,
    #[serde(rename = "sharp")]
    Sharp,
    #[serde(rename = "VIOLATED")]
    Violated,
    #[serde(rename = "conjecture-holds")]
    ConjectureHolds,
    #[serde(rename = "conjecture-sharp")]
    ConjectureSharp,
    #[serde(rename = "CONJECTURE-COUNTEREXAMPLE")]
    ConjectureCounterexample,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Sharp => "sharp",
            Status::Violated => "VIOLATED",
            Status::ConjectureHolds => "conjecture-holds",
            Status::ConjectureSharp => "conjecture-sharp",
            Status::ConjectureCounterexample => "CONJECTURE-COUNTEREXAMPLE",
        }
    }
}

/// One inequality `left <= right`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub name: String,
    pub statement: String,
    pub left: i64,
    pub right: i64,
    pub status: Status,
}

impl Record {
    pub fn theorem(name: impl Into<String>, statement: impl Into<String>, left: i64, right: i64) -> Self {
        let status = match left.cmp(&right) {
            std::cmp::Ordering::Less => Status::Holds,
            std::cmp::Ordering::Equal => Status::Sharp,
            std::cmp::Ordering::Greater => Status::Violated,
        };
        Self { name: name.into(), statement: statement.into(), left, right, status }
    }

    pub fn conjecture(name: impl Into<String>, statement: impl Into<String>, left: i64, right: i64) -> Self {
        let status = match left.cmp(&right) {
            std::cmp::Ordering::Less => Status::ConjectureHolds,
            std::cmp::Ordering::Equal => Status::ConjectureSharp,
            std::cmp::Ordering::Greater => Status::ConjectureCounterexample,
        };
        Self { name: name.into(), statement: statement.into(), left, right, status }
    }
}

/// An identity or structural property of the computed objects.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeValue {
    pub i: usize,
    pub value: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SyzygyReport {
    pub minimal_generator_degrees: Vec<u32>,
    pub minimal_generators: Vec<String>,
    pub groebner_basis_size: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Timing {
    pub stage: String,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundsReport {
    pub group: String,
    pub field: String,
    pub group_order: usize,
    pub n: usize,
    pub s: usize,
    pub r: usize,
    pub degrees: Vec<u32>,
    pub beta: u32,
    pub tau: u32,
    pub reg_hilbert_ideal: u32,
    pub hilbert_function_t_mod_i: Vec<usize>,
    pub a_invariant: i64,
    pub hilbert_series: String,
    pub generators: Vec<String>,
    pub syzygy_ideal: SyzygyReport,
    pub betti: BettiTable,
    pub betti_text: String,
    pub resolution_length: usize,
    /// `β^i` for `1 <= i <= k`.
    pub beta_i: Vec<DegreeValue>,
    pub u_degrees: Vec<u32>,
    pub i_max: usize,
    pub records: Vec<Record>,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dropped_generator: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Vec<Timing>>,
}

impl BoundsReport {
    pub fn record(&self, name: &str) -> Option<&Record> {
        self.records.iter().find(|r| r.name == name)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn beta_upper(&self, i: usize) -> Option<u32> {
        self.beta_i.iter().find(|d| d.i == i).map(|d| d.value)
    }

    pub fn has_violation(&self) -> bool {
        self.records.iter().any(|r| r.status == Status::Violated) || self.checks.iter().any(|c| !c.passed)
    }

    pub fn has_counterexample(&self) -> bool {
        self.records.iter().any(|r| r.status == Status::ConjectureCounterexample)
    }

    /// 70 for a failed proven bound or check, 3 for a conjecture
    /// counterexample, 0 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.has_violation() {
            70
        } else if self.has_counterexample() {
            3
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut o = String::new();
        let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
        let _ = writeln!(o, "group     {}", self.group);
        let _ = writeln!(o, "field     {}", self.field);
        let _ = writeln!(o, "|G| = {}   n = {}   s = {}   r = {}", self.group_order, self.n, self.s, self.r);
        if let Some(k) = self.dropped_generator {
            let _ = writeln!(o, "NOTE      generator {k} was dropped on request");
        }
        let _ = writeln!(o, "degrees   {}", join(&self.degrees));
        let _ = writeln!(o, "beta      {}", self.beta);
        let _ = writeln!(o, "tau       {}   reg(I) = {}", self.tau, self.reg_hilbert_ideal);
        let hf: Vec<String> = self.hilbert_function_t_mod_i.iter().map(usize::to_string).collect();
        let _ = writeln!(o, "HF(T/I)   {}", hf.join(" "));
        let _ = writeln!(o, "H(R,t)    {}", self.hilbert_series);
        let _ = writeln!(o, "a(R)      {}", self.a_invariant);
        let _ = writeln!(o, "J         minimal generator degrees [{}]", join(&self.syzygy_ideal.minimal_generator_degrees));
        let _ = writeln!(o, "U         minimal generator degrees [{}]", join(&self.u_degrees));
        let _ = writeln!(o, "k         {}", self.resolution_length);
        let _ = writeln!(o, "\nBetti table");
        o.push_str(&self.betti_text);
        let _ = writeln!(o, "\nbounds");
        let width = self.records.iter().map(|r| r.name.len()).max().unwrap_or(0);
        for r in &self.records {
            let _ = writeln!(
                o,
                "  {:<width$}  {:>5} <= {:<5}  {:<26}  {}",
                r.name,
                r.left,
                r.right,
                r.status.label(),
                r.statement
            );
        }
        let _ = writeln!(o, "\nchecks");
        for c in &self.checks {
            let _ = writeln!(o, "  {}  {}: {}", if c.passed { "ok  " } else { "FAIL" }, c.name, c.detail);
        }
        if self.has_counterexample() {
            let _ = writeln!(o, "\n*** conjecture counterexample found ***");
        }
        if let Some(ts) = &self.timings {
            let _ = writeln!(o, "\ntimings");
            for t in ts {
                let _ = writeln!(o, "  {:<20} {:.3}s", t.stage, t.seconds);
            }
        }
        o
    }
}
