//! Integer partitions, interlacing, Gelfand–Tsetlin patterns and tableaux.

mod gt;
mod tableau;

pub use gt::{enumerate_patterns, gt_patterns, sp_gt_patterns, GTPattern, Pattern, PatternKind, SpGTPattern};
pub use tableau::{odd_orthogonal_tableaux, Letter, Tableau, TableauKind};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// dropped on construction, so `(2,1)` and `(2,1,0)` are the same value.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts.iter().map(|&p| p as i64).collect()));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts already known to be weakly decreasing.
    pub(crate) fn from_decreasing(mut parts: Vec<u64>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]), "{parts:?}");
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangle `width^rows`, i.e. `rows` parts all equal to `width`.
    pub fn rectangle(width: u64, rows: usize) -> Self {
        if width == 0 {
            return Self::empty();
        }
        Partition { parts: vec![width; rows] }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of non-zero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Zero-based part access; indices past the length read as 0.
    pub fn get(&self, i: usize) -> u64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u64 {
        self.get(0)
    }

    /// The parts followed by zeros up to `len` entries. Panics if the
    /// partition is longer than `len`.
    pub fn padded(&self, len: usize) -> Vec<u64> {
        assert!(self.len() <= len, "partition {self} longer than {len}");
        let mut v = self.parts.clone();
        v.resize(len, 0);
        v
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.get(i) >= other.get(i))
    }

    pub fn has_even_rows(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }

    /// `self ≺ lambda`: `lambda_i >= self_i >= lambda_{i+1}` for all `i`.
    pub fn interlaces(&self, lambda: &Partition) -> bool {
        interlaces(self, lambda, false)
    }
}

/// Upward interlacing `mu ≺ lambda`, or dual interlacing `mu ≺' lambda`
/// when `dual` is set (`mu ⊆ lambda` with `lambda_i - mu_i ∈ {0, 1}`).
pub fn interlaces(mu: &Partition, lambda: &Partition, dual: bool) -> bool {
    let len = mu.len().max(lambda.len());
    if dual {
        (0..len).all(|i| {
            let (l, m) = (lambda.get(i), mu.get(i));
            l >= m && l - m <= 1
        })
    } else {
        (0..len).all(|i| lambda.get(i) >= mu.get(i) && mu.get(i) >= lambda.get(i + 1))
    }
}

/// All `mu` with `mu ≺ lambda` and at most `max_len` parts, in lexicographic
/// order of their padded part vectors.
pub fn interlacing_below(lambda: &Partition, max_len: usize) -> Vec<Partition> {
    if lambda.len() > max_len + 1 {
        return Vec::new();
    }
    let ranges: Vec<(u64, u64)> = (0..max_len.min(lambda.len()))
        .map(|j| (lambda.get(j + 1), lambda.get(j)))
        .collect();
    box_product(&ranges).into_iter().map(Partition::from_decreasing).collect()
}

/// All `lambda` with `mu ≺ lambda` and `lambda_1 <= max_first`, in
/// lexicographic order of their padded part vectors.
pub fn interlacing_above(mu: &Partition, max_first: u64) -> Vec<Partition> {
    if mu.first() > max_first {
        return Vec::new();
    }
    let mut ranges = vec![(mu.first(), max_first)];
    ranges.extend((1..=mu.len()).map(|j| (mu.get(j), mu.get(j - 1))));
    box_product(&ranges).into_iter().map(Partition::from_decreasing).collect()
}

/// All partitions fitting in the box with `rows` rows and `width` columns,
/// in colex order: compared from the last (padded) part to the first.
pub fn partitions_in_box(width: u64, rows: usize) -> Vec<Partition> {
    fn go(width: u64, rows: usize, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if prefix.len() == rows {
            out.push(prefix.clone());
            return;
        }
        let cap = prefix.last().copied().unwrap_or(width);
        for p in 0..=cap {
            prefix.push(p);
            go(width, rows, prefix, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    go(width, rows, &mut Vec::with_capacity(rows), &mut raw);
    raw.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    raw.into_iter().map(Partition::from_decreasing).collect()
}

/// Cartesian product of inclusive integer ranges, lexicographic.
fn box_product(ranges: &[(u64, u64)]) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::with_capacity(ranges.len())];
    for &(lo, hi) in ranges {
        if lo > hi {
            return Vec::new();
        }
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (lo..=hi).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `(3,1)`, `3,1`, `3 1`, `()` and the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u64>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u64>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u64> {
    fn from(p: Partition) -> Vec<u64> {
        p.parts
    }
}
