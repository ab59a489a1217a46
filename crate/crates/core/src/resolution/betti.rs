//! Graded Betti tables and the Hilbert series they determine.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Result;
use crate::poly::univariate::product_one_minus;
use crate::poly::{RationalFunction, UniPoly};

/// `β_{i,j} = dim Tor_i^S(R, K)_j`, zero entries omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), usize>,
}

impl BettiTable {
    pub fn from_triples(triples: impl IntoIterator<Item = (usize, u32, usize)>) -> Self {
        let mut t = Self::default();
        for (i, j, b) in triples {
            t.add(i, j, b);
        }
        t
    }

    pub fn add(&mut self, i: usize, j: u32, count: usize) {
        if count > 0 {
            *self.entries.entry((i, j)).or_insert(0) += count;
        }
    }

    pub fn get(&self, i: usize, j: u32) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// `(i, j, β_{i,j})` with `β_{i,j} > 0`, sorted by `i` then `j`.
    pub fn triples(&self) -> Vec<(usize, u32, usize)> {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b)).collect()
    }

    /// Projective dimension `k`.
    pub fn length(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn rank(&self, i: usize) -> usize {
        self.entries.range((i, 0)..=(i, u32::MAX)).map(|(_, &b)| b).sum()
    }

    /// `β^i = max{ j : β_{i,j} ≠ 0 }`, `None` when `F_i = 0`.
    pub fn max_degree(&self, i: usize) -> Option<u32> {
        self.entries.range((i, 0)..=(i, u32::MAX)).map(|(&(_, j), _)| j).max()
    }

    /// `Σ_i (-1)^i Σ_j β_{i,j} t^j`.
    pub fn alternating_numerator(&self) -> UniPoly {
        let top = self.entries.keys().map(|&(_, j)| j as usize).max().unwrap_or(0);
        let mut c = vec![0i64; top + 1];
        for (&(i, j), &b) in &self.entries {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            c[j as usize] += sign * b as i64;
        }
        UniPoly::from_ints(&c)
    }

    /// Layout with columns `i` and rows `j - i`, `.` for zero.
    pub fn render(&self) -> String {
        if self.entries.is_empty() {
            return "(empty)\n".into();
        }
        let k = self.length();
        let rows: Vec<i64> = self.entries.keys().map(|&(i, j)| j as i64 - i as i64).collect();
        let (lo, hi) = (*rows.iter().min().unwrap(), *rows.iter().max().unwrap());
        let cell = |v: usize| if v == 0 { ".".to_string() } else { v.to_string() };
        let mut width = 1;
        for i in 0..=k {
            width = width.max(self.rank(i).to_string().len());
        }
        let label = format!("{hi}").len().max(format!("{lo}").len()).max(5);
        let mut out = String::new();
        let _ = write!(out, "{:>w$} ", "", w = label + 1);
        for i in 0..=k {
            let _ = write!(out, " {:>width$}", i);
        }
        out.push('\n');
        let _ = write!(out, "{:>w$}:", "total", w = label);
        out.push(' ');
        for i in 0..=k {
            let _ = write!(out, " {:>width$}", self.rank(i));
        }
        out.push('\n');
        for row in lo..=hi {
            let _ = write!(out, "{:>w$}:", row, w = label);
            out.push(' ');
            for i in 0..=k {
                let j = row + i as i64;
                let v = if j < 0 { 0 } else { self.get(i, j as u32) };
                let _ = write!(out, " {:>width$}", cell(v));
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: u32,
    pub beta: usize,
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<BettiEntry> = self.triples().into_iter().map(|(i, j, beta)| BettiEntry { i, j, beta }).collect();
        v.serialize(s)
    }
}

/// `H(R, t)` and its degree `a(R)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub series: RationalFunction,
    pub a_invariant: i64,
}

/// `H(R,t) = Σ(-1)^i β_{i,j} t^j / Π(1 - t^{d_i})`, normalized.
pub fn hilbert_series_from_betti(table: &BettiTable, degrees: &[u32]) -> Result<HilbertData> {
    let series = RationalFunction::new(table.alternating_numerator(), product_one_minus(degrees))?;
    let a_invariant = series
        .degree()
        .ok_or_else(|| crate::error::Error::Internal("Hilbert series of the invariant ring vanished".into()))?;
    Ok(HilbertData { series, a_invariant })
}
