use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Weight applied to each pairwise distance in `W_ψ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PsiFunction {
    Identity,
    /// `x(x+1)/2`, giving the hyper-Wiener index.
    Hyper,
    /// `1/x`, giving the Harary index.
    Reciprocal,
    /// `1` up to distance `r`, else `0`, giving `p_r`.
    Threshold(usize),
    /// Values for distances `1, 2, ...`.
    Table(Vec<f64>),
}

impl PsiFunction {
    /// `ψ(x)` for `x >= 1`; `ψ(0)` is never needed since pairs are distinct.
    pub fn eval(&self, x: usize) -> Result<f64> {
        Ok(match self {
            PsiFunction::Identity => x as f64,
            PsiFunction::Hyper => (x * (x + 1) / 2) as f64,
            PsiFunction::Reciprocal => 1.0 / x as f64,
            PsiFunction::Threshold(r) => f64::from(u8::from(x <= *r)),
            PsiFunction::Table(values) => *values.get(x.wrapping_sub(1)).ok_or_else(|| {
                Error::invalid(format!("psi table has {} values, distance {x} needed", values.len()))
            })?,
        })
    }

    /// `ψ(x)` with `ψ(0) = 0`, as used by the `p_k` decomposition.
    pub fn eval_from_zero(&self, x: usize) -> Result<f64> {
        if x == 0 {
            Ok(0.0)
        } else {
            self.eval(x)
        }
    }
}

impl fmt::Display for PsiFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PsiFunction::Identity => f.write_str("identity"),
            PsiFunction::Hyper => f.write_str("hyper"),
            PsiFunction::Reciprocal => f.write_str("reciprocal"),
            PsiFunction::Threshold(r) => write!(f, "threshold:{r}"),
            PsiFunction::Table(v) => {
                let parts: Vec<String> = v.iter().map(f64::to_string).collect();
                write!(f, "table:{}", parts.join(","))
            }
        }
    }
}

impl FromStr for PsiFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "identity" => return Ok(PsiFunction::Identity),
            "hyper" => return Ok(PsiFunction::Hyper),
            "reciprocal" => return Ok(PsiFunction::Reciprocal),
            _ => {}
        }
        if let Some(r) = s.strip_prefix("threshold:") {
            let r: usize = r
                .parse()
                .map_err(|_| Error::invalid(format!("bad threshold `{r}`")))?;
            return Ok(PsiFunction::Threshold(r));
        }
        if let Some(t) = s.strip_prefix("table:") {
            let values = t
                .split(',')
                .map(|x| {
                    let v: f64 = x
                        .trim()
                        .parse()
                        .map_err(|_| Error::invalid(format!("bad table value `{x}`")))?;
                    if v < 0.0 || !v.is_finite() {
                        return Err(Error::invalid("psi values must be finite and nonnegative"));
                    }
                    Ok(v)
                })
                .collect::<Result<Vec<f64>>>()?;
            return Ok(PsiFunction::Table(values));
        }
        Err(Error::invalid(format!("unknown psi function `{s}`")))
    }
}

/// `counts[d]` = number of unordered vertex pairs at distance `d`.
pub fn distance_counts(g: &Graph) -> Result<Vec<u64>> {
    let dist = g.distance_matrix()?;
    let mut counts = vec![0u64; g.order().max(1)];
    for (u, row) in dist.iter().enumerate() {
        for &d in &row[u + 1..] {
            counts[d] += 1;
        }
    }
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
    Ok(counts)
}

pub fn wiener(g: &Graph) -> Result<u64> {
    Ok(distance_counts(g)?
        .iter()
        .enumerate()
        .map(|(d, &c)| d as u64 * c)
        .sum())
}

/// Exact hyper-Wiener index `Σ d(d+1)/2`.
pub fn hyper_wiener(g: &Graph) -> Result<u64> {
    Ok(distance_counts(g)?
        .iter()
        .enumerate()
        .map(|(d, &c)| (d * (d + 1) / 2) as u64 * c)
        .sum())
}

pub fn harary(g: &Graph) -> Result<f64> {
    w_psi(g, &PsiFunction::Reciprocal)
}

pub fn w_psi(g: &Graph, psi: &PsiFunction) -> Result<f64> {
    let mut total = 0.0;
    for (d, &c) in distance_counts(g)?.iter().enumerate().skip(1) {
        if c > 0 {
            total += c as f64 * psi.eval(d)?;
        }
    }
    Ok(total)
}

/// Number of unordered pairs at distance at most `r`.
pub fn p_r_count(g: &Graph, r: usize) -> Result<u64> {
    Ok(distance_counts(g)?
        .iter()
        .enumerate()
        .skip(1)
        .take_while(|&(d, _)| d <= r)
        .map(|(_, &c)| c)
        .sum())
}

/// `Σ_{uv ∈ E} d(u) d(v)`.
pub fn second_zagreb(g: &Graph) -> u64 {
    g.edges()
        .into_iter()
        .map(|(u, v)| (g.degree(u) * g.degree(v)) as u64)
        .sum()
}
