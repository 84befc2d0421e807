//! Fomin growth diagrams for the row (Knuth) and column (Burge) RSK
//! correspondences.
//!
//! Both local rules take partitions `alpha`, `beta`, `kappa` with
//! `kappa ≺ alpha` and `kappa ≺ beta` plus an integer `g >= 0`, and produce
//! `nu` with `alpha ≺ nu` and `beta ≺ nu`, such that
//! `|kappa| + |nu| = |alpha| + |beta| + g`. Each is a bijection between
//! `(kappa, g)` and `nu` for fixed `alpha`, `beta`.

mod greene;

pub use greene::{greene_oracle, PathDirection};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    /// Knuth's row insertion.
    Row,
    /// Burge's column insertion.
    Col,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalRuleInput {
    pub alpha: Partition,
    pub beta: Partition,
    pub kappa: Partition,
    pub g: u64,
}

impl LocalRuleInput {
    pub fn new(alpha: Partition, beta: Partition, kappa: Partition, g: u64) -> Self {
        LocalRuleInput { alpha, beta, kappa, g }
    }

    fn check(&self) -> Result<()> {
        if !self.kappa.interlaces(&self.alpha) || !self.kappa.interlaces(&self.beta) {
            return Err(Error::Interlacing(format!(
                "kappa {} must interlace with alpha {} and beta {}",
                self.kappa, self.alpha, self.beta
            )));
        }
        Ok(())
    }
}

impl Rule {
    pub fn apply(self, input: &LocalRuleInput) -> Result<Partition> {
        match self {
            Rule::Row => row_rsk_local(input),
            Rule::Col => col_rsk_local(input),
        }
    }

    pub fn invert(self, alpha: &Partition, beta: &Partition, nu: &Partition) -> Result<(Partition, u64)> {
        invert_local(self, alpha, beta, nu)
    }
}

pub fn row_rsk_local(input: &LocalRuleInput) -> Result<Partition> {
    input.check()?;
    let LocalRuleInput { alpha, beta, kappa, g } = input;
    let len = alpha.len().min(beta.len()) + 1;
    let mut nu = Vec::with_capacity(len);
    nu.push(alpha.first().max(beta.first()) + g);
    for s in 1..len {
        // min(alpha, beta) >= kappa on the previous index, so no underflow
        nu.push(alpha.get(s).max(beta.get(s)) + alpha.get(s - 1).min(beta.get(s - 1)) - kappa.get(s - 1));
    }
    Ok(Partition::from_decreasing(nu))
}

/// Column rule. The index-0 value of kappa is taken as `+∞`, so the last
/// step sets `nu_1 = max(alpha_1, beta_1) + G_1`.
pub fn col_rsk_local(input: &LocalRuleInput) -> Result<Partition> {
    input.check()?;
    let LocalRuleInput { alpha, beta, kappa, g } = input;
    let len = alpha.len().min(beta.len()) + 1;
    let mut nu = vec![0u64; len];
    let mut carry = *g;
    for s in (1..=len).rev() {
        let top = alpha.get(s - 1).max(beta.get(s - 1));
        if s == 1 {
            nu[0] = top + carry;
            break;
        }
        let cap = kappa.get(s - 2);
        nu[s - 1] = (top + carry).min(cap);
        carry = carry - carry.min(cap - top) + alpha.get(s - 2).min(beta.get(s - 2)) - cap;
    }
    Ok(Partition::from_decreasing(nu))
}

/// Recovers `(kappa, g)` from `(alpha, beta, nu)` for either rule.
pub fn invert_local(rule: Rule, alpha: &Partition, beta: &Partition, nu: &Partition) -> Result<(Partition, u64)> {
    if !alpha.interlaces(nu) || !beta.interlaces(nu) {
        return Err(Error::Interlacing(format!(
            "nu {nu} must interlace above alpha {alpha} and beta {beta}"
        )));
    }
    let len = alpha.len().min(beta.len()) + 1;
    let mut kappa = Vec::with_capacity(len - 1);
    let top = |s: usize| alpha.get(s).max(beta.get(s)) as i64;
    let low = |s: usize| alpha.get(s).min(beta.get(s)) as i64;
    let nu_at = |s: usize| nu.get(s) as i64;
    let g = match rule {
        Rule::Row => {
            for s in 1..len {
                kappa.push(top(s) + low(s - 1) - nu_at(s));
            }
            nu_at(0) - top(0)
        }
        Rule::Col => {
            let mut carry = nu_at(0) - top(0);
            for s in 0..len - 1 {
                let k = (low(s) - carry).max(nu_at(s + 1));
                kappa.push(k);
                carry = nu_at(s + 1) + carry - top(s + 1) - low(s) + k;
            }
            carry
        }
    };
    if g < 0 || kappa.iter().any(|&k| k < 0) {
        return Err(Error::Inverse(format!("negative reconstruction for nu {nu} over {alpha}, {beta}")));
    }
    let kappa = Partition::new(kappa.into_iter().map(|k| k as u64).collect())
        .map_err(|e| Error::Inverse(format!("reconstructed kappa is not a partition: {e}")))?;
    if !kappa.interlaces(alpha) || !kappa.interlaces(beta) {
        return Err(Error::Inverse(format!("reconstructed kappa {kappa} does not interlace")));
    }
    Ok((kappa, g as u64))
}

/// A rectangular growth diagram: partitions on the lattice points
/// `(i, j)`, `0 <= i <= m`, `0 <= j <= n`, grown from a matrix whose
/// entry `(i, j)` sits in the unit cell with top-right corner `(i, j)`.
/// `i` is the horizontal coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthGrid {
    m: usize,
    n: usize,
    rule: Rule,
    points: Vec<Partition>,
}

impl GrowthGrid {
    pub fn dims(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn rule(&self) -> Rule {
        self.rule
    }

    pub fn at(&self, i: usize, j: usize) -> &Partition {
        &self.points[i * (self.n + 1) + j]
    }

    pub fn corner(&self) -> &Partition {
        self.at(self.m, self.n)
    }

    /// `μ^(0,n) ≺ μ^(1,n) ≺ … ≺ μ^(m,n)` along the top edge.
    pub fn north_chain(&self) -> Vec<Partition> {
        (0..=self.m).map(|i| self.at(i, self.n).clone()).collect()
    }

    /// `μ^(m,0) ≺ μ^(m,1) ≺ … ≺ μ^(m,n)` along the right edge.
    pub fn east_chain(&self) -> Vec<Partition> {
        (0..=self.n).map(|j| self.at(self.m, j).clone()).collect()
    }

    /// Checks `|κ| + |ν| = |α| + |β| + w` at every cell.
    pub fn conserves(&self, matrix: &[Vec<u64>]) -> bool {
        (1..=self.m).all(|i| {
            (1..=self.n).all(|j| {
                self.at(i - 1, j - 1).size() + self.at(i, j).size()
                    == self.at(i - 1, j).size() + self.at(i, j - 1).size() + matrix[i - 1][j - 1]
            })
        })
    }
}

/// Grows the diagram for an `m × n` matrix given as `matrix[i-1][j-1] = w_{i,j}`
/// (outer index horizontal).
pub fn grow_grid(matrix: &[Vec<u64>], rule: Rule) -> Result<GrowthGrid> {
    let m = matrix.len();
    let n = matrix.first().map_or(0, Vec::len);
    if m == 0 || n == 0 || matrix.iter().any(|c| c.len() != n) {
        return Err(Error::InvalidFilling("matrix must be non-empty and rectangular".into()));
    }
    let mut grid = GrowthGrid { m, n, rule, points: vec![Partition::empty(); (m + 1) * (n + 1)] };
    for i in 1..=m {
        for j in 1..=n {
            let input = LocalRuleInput::new(
                grid.at(i - 1, j).clone(),
                grid.at(i, j - 1).clone(),
                grid.at(i - 1, j - 1).clone(),
                matrix[i - 1][j - 1],
            );
            grid.points[i * (n + 1) + j] = rule.apply(&input)?;
        }
    }
    Ok(grid)
}

/// Rebuilds the matrix from the two outer chains of a growth diagram.
/// `north[i] = μ^(i,n)` and `east[j] = μ^(m,j)`; both must end at the same
/// corner partition and start at `∅`.
pub fn ungrow_grid(north: &[Partition], east: &[Partition], rule: Rule) -> Result<Vec<Vec<u64>>> {
    if north.len() < 2 || east.len() < 2 {
        return Err(Error::Inverse("chains need at least two partitions".into()));
    }
    let (m, n) = (north.len() - 1, east.len() - 1);
    if north[m] != east[n] {
        return Err(Error::Inverse(format!("chains disagree at the corner: {} vs {}", north[m], east[n])));
    }
    let mut points: Vec<Option<Partition>> = vec![None; (m + 1) * (n + 1)];
    let idx = |i: usize, j: usize| i * (n + 1) + j;
    for (i, p) in north.iter().enumerate() {
        points[idx(i, n)] = Some(p.clone());
    }
    for (j, p) in east.iter().enumerate() {
        points[idx(m, j)] = Some(p.clone());
    }
    let mut matrix = vec![vec![0u64; n]; m];
    for j in (1..=n).rev() {
        for i in (1..=m).rev() {
            let nu = points[idx(i, j)].clone().expect("filled in reverse order");
            let alpha = points[idx(i - 1, j)].clone().expect("filled in reverse order");
            let beta = points[idx(i, j - 1)].clone().expect("filled in reverse order");
            let (kappa, g) = rule.invert(&alpha, &beta, &nu)?;
            if (i == 1 || j == 1) && !kappa.is_empty() {
                return Err(Error::Inverse(format!("non-empty partition {kappa} on the axes")));
            }
            points[idx(i - 1, j - 1)] = Some(kappa);
            matrix[i - 1][j - 1] = g;
        }
    }
    for i in 0..=m {
        if points[idx(i, 0)].as_ref().is_some_and(|p| !p.is_empty()) {
            return Err(Error::Inverse("non-empty partition on the horizontal axis".into()));
        }
    }
    for j in 0..=n {
        if points[idx(0, j)].as_ref().is_some_and(|p| !p.is_empty()) {
            return Err(Error::Inverse("non-empty partition on the vertical axis".into()));
        }
    }
    Ok(matrix)
}
