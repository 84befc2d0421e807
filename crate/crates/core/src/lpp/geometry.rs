use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GeometryKind {
    /// Point-to-half-line-reflected: the `2n × n × n` quarter square.
    P2hlr,
    /// Point-to-point-reflected: the half-space triangle below `j = n`.
    P2pr,
    /// Point-to-line: the triangle under the anti-diagonal `i + j = n + 1`.
    P2l,
}

impl fmt::Display for GeometryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeometryKind::P2hlr => "p2hlr",
            GeometryKind::P2pr => "p2pr",
            GeometryKind::P2l => "p2l",
        })
    }
}

impl FromStr for GeometryKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "p2hlr" => Ok(GeometryKind::P2hlr),
            "p2pr" => Ok(GeometryKind::P2pr),
            "p2l" => Ok(GeometryKind::P2l),
            other => Err(Error::Parse(format!("unknown geometry {other:?}"))),
        }
    }
}

/// A domain of unit squares in the quarter plane. Squares are named by the
/// cartesian coordinates `(i, j)` of their top-right corner, `i` horizontal,
/// both starting at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Geometry {
    pub kind: GeometryKind,
    pub n: usize,
}

impl Geometry {
    pub fn new(kind: GeometryKind, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange("n must be positive".into()));
        }
        Ok(Geometry { kind, n })
    }

    /// Number of columns of the bounding box.
    pub fn width(&self) -> usize {
        self.n
    }

    /// Number of rows of the bounding box.
    pub fn height(&self) -> usize {
        match self.kind {
            GeometryKind::P2hlr => 2 * self.n,
            _ => self.n,
        }
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        let n = self.n;
        if i == 0 || j == 0 {
            return false;
        }
        match self.kind {
            GeometryKind::P2hlr => i <= j && i + j <= 2 * n + 1,
            GeometryKind::P2pr => i <= j && j <= n,
            GeometryKind::P2l => i + j <= n + 1,
        }
    }

    /// All squares, bottom row first and left to right within a row. Every
    /// square comes after its left and lower neighbours.
    pub fn squares(&self) -> Vec<(usize, usize)> {
        (1..=self.height())
            .flat_map(|j| (1..=self.width()).map(move |i| (i, j)))
            .filter(|&(i, j)| self.contains(i, j))
            .collect()
    }

    pub fn num_squares(&self) -> usize {
        let n = self.n;
        match self.kind {
            GeometryKind::P2hlr => n * n + n,
            _ => n * (n + 1) / 2,
        }
    }

    /// Reflecting-boundary squares on the diagonal `i = j`.
    pub fn is_diagonal(&self, i: usize, j: usize) -> bool {
        i == j && self.kind != GeometryKind::P2l
    }

    /// The (1-based) variable attached to row `j`.
    pub fn row_variable(&self, j: usize) -> usize {
        let n = self.n;
        match self.kind {
            GeometryKind::P2hlr if j > n => 2 * n + 1 - j,
            GeometryKind::P2hlr | GeometryKind::P2pr => j,
            GeometryKind::P2l => n + 1 - j,
        }
    }

    /// Exponent vector contributed by a unit weight on square `(i, j)`:
    /// `x_i` on the diagonal, `x_i x_{row(j)}` elsewhere.
    pub fn square_exponents(&self, i: usize, j: usize) -> Vec<i32> {
        let mut e = vec![0; self.n];
        e[i - 1] += 1;
        if !self.is_diagonal(i, j) {
            e[self.row_variable(j) - 1] += 1;
        }
        e
    }

    /// Squares where a polymer may end.
    pub fn is_terminal(&self, i: usize, j: usize) -> bool {
        let n = self.n;
        match self.kind {
            GeometryKind::P2hlr => i + j == 2 * n + 1,
            GeometryKind::P2pr => i == n && j == n,
            GeometryKind::P2l => i + j == n + 1,
        }
    }
}

impl fmt::Display for Geometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={})", self.kind, self.n)
    }
}
