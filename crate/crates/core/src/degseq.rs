//! Degree sequences: graphicality, classification and the majorization order.
//!
//! Sequences are always stored sorted nonincreasing. Zero entries are rejected
//! when a sequence is built, so every vertex of a realization has degree at
//! least one.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest order accepted by [`enumerate_tree_sequences`].
pub const TREE_SEQUENCE_MAX_N: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct DegreeSequence {
    entries: Vec<usize>,
}

impl DegreeSequence {
    /// Builds a sequence from arbitrary-order positive entries; the result is
    /// sorted nonincreasing.
    pub fn new(mut entries: Vec<usize>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::invalid("degree sequence is empty"));
        }
        if entries.contains(&0) {
            return Err(Error::invalid("degree sequence contains a zero entry"));
        }
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeSequence { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.entries.iter().sum()
    }

    pub fn max_degree(&self) -> usize {
        self.entries[0]
    }

    /// Number of entries equal to one.
    pub fn leaf_count(&self) -> usize {
        self.entries.iter().filter(|&&d| d == 1).count()
    }

    /// Entries of degree at least two, sorted nondecreasing.
    pub fn interior_ascending(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.entries.iter().copied().filter(|&d| d >= 2).collect();
        v.reverse();
        v
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;

    /// Accepts comma- or whitespace-separated positive integers, optionally
    /// wrapped in parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut entries = Vec::new();
        for tok in trimmed
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
        {
            let d: usize = tok
                .parse()
                .map_err(|_| Error::invalid(format!("`{tok}` is not a nonnegative integer")))?;
            entries.push(d);
        }
        DegreeSequence::new(entries)
    }
}

impl From<DegreeSequence> for Vec<usize> {
    fn from(seq: DegreeSequence) -> Self {
        seq.entries
    }
}

impl TryFrom<Vec<usize>> for DegreeSequence {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        DegreeSequence::new(v)
    }
}

/// Erdős–Gallai test.
pub fn is_graphic(seq: &DegreeSequence) -> bool {
    let d = seq.entries();
    let n = d.len();
    if !seq.sum().is_multiple_of(2) || d[0] > n - 1 {
        return false;
    }
    let mut prefix = 0usize;
    for r in 0..n.saturating_sub(1) {
        prefix += d[r];
        let tail: usize = d[r + 1..].iter().map(|&x| x.min(r + 1)).sum();
        if prefix > r * (r + 1) + tail {
            return false;
        }
    }
    true
}

/// True iff the sequence is graphic and some realization is connected.
///
/// Uses the classical criterion: every entry positive and at least `n - 1`
/// edges. The printed literature version with `n(n-1)/2` would reject paths.
pub fn has_connected_realization(seq: &DegreeSequence) -> bool {
    let n = seq.len();
    if n == 1 {
        return false;
    }
    is_graphic(seq) && seq.sum() >= 2 * (n - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    NotGraphic,
    /// Graphic, but every realization is disconnected.
    ForestOnly,
    Tree,
    Unicyclic,
    Bicyclic,
    General,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::NotGraphic => "not-graphic",
            Classification::ForestOnly => "forest-only",
            Classification::Tree => "tree",
            Classification::Unicyclic => "unicyclic",
            Classification::Bicyclic => "bicyclic",
            Classification::General => "general",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub fn classify(seq: &DegreeSequence) -> Classification {
    if !is_graphic(seq) {
        return Classification::NotGraphic;
    }
    if !has_connected_realization(seq) {
        return Classification::ForestOnly;
    }
    let n = seq.len();
    let sum = seq.sum();
    if sum == 2 * (n - 1) {
        Classification::Tree
    } else if sum == 2 * n && n >= 3 && seq.entries()[2] >= 2 {
        Classification::Unicyclic
    } else if sum == 2 * (n + 1) {
        Classification::Bicyclic
    } else {
        Classification::General
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Majorization {
    Strict,
    Weak,
    #[serde(rename = "none")]
    Neither,
}

/// Compares prefix sums: does `tau` majorize `pi`?
///
/// Sequences of different length are never comparable.
pub fn majorizes(tau: &DegreeSequence, pi: &DegreeSequence) -> Majorization {
    if tau.len() != pi.len() || tau == pi {
        return Majorization::Neither;
    }
    let (mut st, mut sp) = (0usize, 0usize);
    for (a, b) in tau.entries().iter().zip(pi.entries()) {
        st += a;
        sp += b;
        if st < sp {
            return Majorization::Neither;
        }
    }
    if st == sp {
        Majorization::Strict
    } else {
        Majorization::Weak
    }
}

/// Chain of unit transfers `pi = s_0 ◁ s_1 ◁ … ◁ s_m = tau`.
///
/// Each step raises the first entry where the running prefix sum falls short
/// of `tau` and lowers the entry at which the deficit closes. Every
/// intermediate stays sorted, positive and majorized by `tau`, hence graphic.
pub fn majorization_chain(pi: &DegreeSequence, tau: &DegreeSequence) -> Result<Vec<DegreeSequence>> {
    if majorizes(tau, pi) != Majorization::Strict {
        return Err(Error::precondition(format!(
            "{tau} does not strictly majorize {pi}"
        )));
    }
    if !is_graphic(pi) || !is_graphic(tau) {
        return Err(Error::precondition("both sequences must be graphic"));
    }
    let target = tau.entries();
    let mut cur = pi.entries().to_vec();
    let mut chain = vec![pi.clone()];
    while cur != target {
        let mut gap = 0isize;
        let mut raise = None;
        let mut lower = None;
        for i in 0..cur.len() {
            gap += target[i] as isize - cur[i] as isize;
            if raise.is_none() && gap > 0 {
                raise = Some(i);
            } else if raise.is_some() && gap == 0 {
                lower = Some(i);
                break;
            }
        }
        let (i, j) = match (raise, lower) {
            (Some(i), Some(j)) => (i, j),
            _ => unreachable!("prefix gap must open and close while sequences differ"),
        };
        cur[i] += 1;
        cur[j] -= 1;
        chain.push(DegreeSequence { entries: cur.clone() });
    }
    Ok(chain)
}

/// All tree degree sequences of order `n`, in descending lexicographic order.
pub fn enumerate_tree_sequences(n: usize) -> Result<Vec<DegreeSequence>> {
    if !(2..=TREE_SEQUENCE_MAX_N).contains(&n) {
        return Err(Error::invalid(format!(
            "tree sequence order must lie in 2..={TREE_SEQUENCE_MAX_N}, got {n}"
        )));
    }
    // Subtract one from every entry: partitions of n - 2 into at most n parts.
    let mut out = Vec::new();
    let mut parts = Vec::with_capacity(n);
    partitions_desc(n - 2, n - 2, n, &mut parts, &mut |p| {
        let mut entries: Vec<usize> = p.iter().map(|x| x + 1).collect();
        entries.resize(n, 1);
        out.push(DegreeSequence { entries });
    });
    Ok(out)
}

fn partitions_desc(
    remaining: usize,
    max_part: usize,
    max_len: usize,
    parts: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if remaining == 0 {
        emit(parts);
        return;
    }
    if parts.len() == max_len {
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        parts.push(p);
        partitions_desc(remaining - p, p, max_len, parts, emit);
        parts.pop();
    }
}

/// All positive nonincreasing sequences of length `n` with entries in
/// `1..=max_entry` and the given sum.
pub fn sequences_with_sum(n: usize, sum: usize, max_entry: usize) -> Vec<DegreeSequence> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fill_with_sum(n, sum, max_entry, &mut cur, &mut out);
    out
}

fn fill_with_sum(
    n: usize,
    remaining: usize,
    cap: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<DegreeSequence>,
) {
    let slots = n - cur.len();
    if slots == 0 {
        if remaining == 0 {
            out.push(DegreeSequence { entries: cur.clone() });
        }
        return;
    }
    if remaining < slots || remaining > slots * cap {
        return;
    }
    for d in (1..=cap.min(remaining)).rev() {
        cur.push(d);
        fill_with_sum(n, remaining - d, d, cur, out);
        cur.pop();
    }
}
