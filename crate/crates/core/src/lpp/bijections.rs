//! The two RSK bijections behind the factorization: row insertion on the
//! p2hlr quarter square produces symplectic patterns, column insertion on
//! the symmetrised p2l triangle produces patterns with even-row shapes.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::filling::Filling;
use super::geometry::{Geometry, GeometryKind};
use crate::error::{Error, Result};
use crate::growth::{grow_grid, ungrow_grid, LocalRuleInput, Rule};
use crate::partitions::{GTPattern, Partition, SpGTPattern};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Inverse,
}

impl std::str::FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "forward" => Ok(Direction::Forward),
            "inverse" => Ok(Direction::Inverse),
            other => Err(Error::Parse(format!("unknown direction {other:?}"))),
        }
    }
}

/// The up-down chain `μ^(1,2n) ≻ μ^(1,2n-1) ≺ … ≻ μ^(n,n)` read off the
/// north-east border of a p2hlr growth diagram, viewed as a triangular
/// array whose diagonals are the chain's partitions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OscillatingTableau {
    n: usize,
    chain: Vec<Partition>,
}

impl OscillatingTableau {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `P_1, …, P_2n` with `P_{2m-1} = μ^(m,2n-m+1)` and `P_{2m} = μ^(m,2n-m)`.
    pub fn chain(&self) -> &[Partition] {
        &self.chain
    }

    /// `t_{i,j}`, or `None` outside the triangle.
    pub fn entry(&self, i: usize, j: usize) -> Option<u64> {
        let k = (2 * self.n + i).checked_sub(j)?;
        if i == 0 || k == 0 || k > 2 * self.n {
            return None;
        }
        let m = k.div_ceil(2);
        (i <= m).then(|| self.chain[k - 1].get(m - i))
    }

    /// Largest entry, attained on the first diagonal of every partition.
    pub fn max_entry(&self) -> u64 {
        self.chain.iter().map(Partition::first).max().unwrap_or(0)
    }
}

impl fmt::Display for OscillatingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.chain {
            writeln!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Partitions on the lattice points of the p2hlr domain, `0 ≤ a ≤ n`,
/// `0 ≤ b ≤ 2n`.
struct Lattice {
    n: usize,
    points: Vec<Option<Partition>>,
}

impl Lattice {
    fn new(n: usize) -> Self {
        Lattice { n, points: vec![None; (n + 1) * (2 * n + 1)] }
    }

    fn slot(&mut self, a: usize, b: usize) -> &mut Option<Partition> {
        &mut self.points[a * (2 * self.n + 1) + b]
    }

    fn get(&self, a: usize, b: usize) -> Result<Partition> {
        if a == 0 || b == 0 {
            return Ok(Partition::empty());
        }
        self.points[a * (2 * self.n + 1) + b]
            .clone()
            .ok_or_else(|| Error::Inverse(format!("lattice point ({a},{b}) not yet determined")))
    }
}

/// Squares of the p2hlr domain in growth order: rows bottom to top, left to
/// right within a row.
fn growth_order(n: usize) -> impl DoubleEndedIterator<Item = (usize, usize)> {
    (1..=2 * n).flat_map(move |j| (1..=j.min(2 * n + 1 - j)).map(move |i| (i, j)))
}

/// `(α, β)` for square `(i, j)`; on the diagonal both are `μ^(i-1,i)`.
fn neighbours(lattice: &Lattice, i: usize, j: usize) -> Result<(Partition, Partition)> {
    let alpha = lattice.get(i - 1, j)?;
    let beta = if i == j { alpha.clone() } else { lattice.get(i, j - 1)? };
    Ok((alpha, beta))
}

/// Runs row insertion over a p2hlr filling and returns the border chain.
pub fn oscillating_tableau(w: &Filling) -> Result<OscillatingTableau> {
    let g = w.geometry();
    if g.kind != GeometryKind::P2hlr {
        return Err(Error::InvalidFilling(format!("expected a p2hlr filling, got {g}")));
    }
    let n = g.n;
    let mut lattice = Lattice::new(n);
    for (i, j) in growth_order(n) {
        let (alpha, beta) = neighbours(&lattice, i, j)?;
        let kappa = lattice.get(i - 1, j - 1)?;
        let nu = Rule::Row.apply(&LocalRuleInput::new(alpha, beta, kappa, w.get(i, j)))?;
        *lattice.slot(i, j) = Some(nu);
    }
    let chain = (1..=n)
        .flat_map(|m| [(m, 2 * n - m + 1), (m, 2 * n - m)])
        .map(|(a, b)| lattice.get(a, b))
        .collect::<Result<_>>()?;
    Ok(OscillatingTableau { n, chain })
}

/// Maps a p2hlr filling with passage time at most `u` to a symplectic
/// pattern of height `2n` whose shape has first part at most `u`.
pub fn bz_forward(w: &Filling, u: u64) -> Result<SpGTPattern> {
    let time = w.lpp_time();
    if time > u {
        return Err(Error::BoundExceeded { time, bound: u });
    }
    let t = oscillating_tableau(w)?;
    let rows = t
        .chain
        .iter()
        .enumerate()
        .map(|(idx, p)| {
            let m = (idx + 1).div_ceil(2);
            (1..=m).map(|j| u - p.get(m - j)).collect()
        })
        .collect();
    SpGTPattern::new(rows)
}

/// Inverse of [`bz_forward`].
pub fn bz_inverse(z: &SpGTPattern, u: u64) -> Result<Filling> {
    let n = z.n();
    if n == 0 {
        return Err(Error::InvalidPattern("empty pattern".into()));
    }
    if z.shape().first() > u {
        return Err(Error::InvalidPattern(format!("shape {} has first part above {u}", z.shape())));
    }
    let mut lattice = Lattice::new(n);
    for (idx, row) in z.rows().iter().enumerate() {
        let k = idx + 1;
        let m = k.div_ceil(2);
        if row.iter().any(|&v| v > u) {
            return Err(Error::InvalidPattern(format!("row {k} has an entry above {u}")));
        }
        let parts = (1..=m).map(|i| u - row[m - i]).collect();
        let b = if k % 2 == 1 { 2 * n - m + 1 } else { 2 * n - m };
        *lattice.slot(m, b) = Some(Partition::new(parts)?);
    }
    let geometry = Geometry::new(GeometryKind::P2hlr, n)?;
    let mut w = Filling::zero(geometry);
    for (i, j) in growth_order(n).rev() {
        let nu = lattice.get(i, j)?;
        let (alpha, beta) = neighbours(&lattice, i, j)?;
        let (kappa, g) = Rule::Row.invert(&alpha, &beta, &nu)?;
        if i == 1 || j == 1 {
            if !kappa.is_empty() {
                return Err(Error::Inverse(format!("non-empty partition {kappa} on the axes")));
            }
        } else {
            *lattice.slot(i - 1, j - 1) = Some(kappa);
        }
        w.set(i, j, g)?;
    }
    Ok(w)
}

/// The symmetric `n × n` matrix `M` built from a p2l filling by flipping it
/// upside down, doubling the hypotenuse and reflecting. Returned as
/// `m[i-1][j-1] = M_{i,j}` with `i` horizontal.
pub fn p2l_matrix(w: &Filling) -> Result<Vec<Vec<u64>>> {
    let g = w.geometry();
    if g.kind != GeometryKind::P2l {
        return Err(Error::InvalidFilling(format!("expected a p2l filling, got {g}")));
    }
    let n = g.n;
    let m = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| match i.cmp(&j) {
                    std::cmp::Ordering::Less => w.get(i, n + 1 - j),
                    std::cmp::Ordering::Equal => 2 * w.get(i, n + 1 - i),
                    std::cmp::Ordering::Greater => w.get(j, n + 1 - i),
                })
                .collect()
        })
        .collect();
    Ok(m)
}

/// Inverse of [`p2l_matrix`]; fails unless `m` is symmetric with an even
/// diagonal.
pub fn p2l_from_matrix(m: &[Vec<u64>]) -> Result<Filling> {
    let n = m.len();
    if m.iter().any(|c| c.len() != n) {
        return Err(Error::InvalidFilling("matrix must be square".into()));
    }
    for i in 0..n {
        if m[i][i] % 2 != 0 {
            return Err(Error::Inverse(format!("odd diagonal entry at ({},{})", i + 1, i + 1)));
        }
        for j in 0..i {
            if m[i][j] != m[j][i] {
                return Err(Error::Inverse(format!("matrix is not symmetric at ({},{})", i + 1, j + 1)));
            }
        }
    }
    let mut w = Filling::zero(Geometry::new(GeometryKind::P2l, n)?);
    for (i, j) in w.geometry().squares() {
        let jf = n + 1 - j;
        let v = m[i - 1][jf - 1];
        w.set(i, j, if i == jf { v / 2 } else { v })?;
    }
    Ok(w)
}

/// Maps a p2l filling to a Gelfand–Tsetlin pattern of height `n` whose
/// shape has even rows and first part `2 · lpp_time(w)`.
pub fn p2l_forward(w: &Filling) -> Result<GTPattern> {
    let grid = grow_grid(&p2l_matrix(w)?, Rule::Col)?;
    GTPattern::from_chain(&grid.north_chain())
}

/// Inverse of [`p2l_forward`].
pub fn p2l_inverse(z: &GTPattern) -> Result<Filling> {
    if z.height() == 0 {
        return Err(Error::InvalidPattern("empty pattern".into()));
    }
    if !z.shape().has_even_rows() {
        return Err(Error::InvalidPattern(format!("shape {} has an odd row", z.shape())));
    }
    let chain = z.chain();
    p2l_from_matrix(&ungrow_grid(&chain, &chain, Rule::Col)?)
}
