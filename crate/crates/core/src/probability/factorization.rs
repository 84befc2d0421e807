use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{exact_cdf, sample_lpp, GeometricSpec, SimulationReport};
use crate::error::{Error, Result};
use crate::lpp::{Geometry, GeometryKind};

/// `P(L^p2hlr ≤ u)` against `P(L^p2pr ≤ u) · P(L^p2l ≤ u/2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactFactorizationRow {
    pub u: u64,
    pub p2hlr: BigRational,
    pub p2pr: BigRational,
    pub p2l: BigRational,
}

impl ExactFactorizationRow {
    pub fn holds(&self) -> bool {
        self.p2hlr == &self.p2pr * &self.p2l
    }
}

/// Exact distribution functions of the three geometries at an even `u`.
pub fn factorization_exact_at(n: usize, y: &BigRational, u: u64) -> Result<ExactFactorizationRow> {
    if u % 2 != 0 {
        return Err(Error::OutOfRange(format!("u = {u} is odd; the factorization needs even u")));
    }
    let cdf = |kind, bound| exact_cdf(Geometry::new(kind, n)?, bound, y);
    Ok(ExactFactorizationRow {
        u,
        p2hlr: cdf(GeometryKind::P2hlr, u)?,
        p2pr: cdf(GeometryKind::P2pr, u)?,
        p2l: cdf(GeometryKind::P2l, u / 2)?,
    })
}

/// [`factorization_exact_at`] for every even `u ≤ u_max`.
pub fn factorization_exact(n: usize, y: &BigRational, u_max: u64) -> Result<Vec<ExactFactorizationRow>> {
    (0..=u_max).step_by(2).map(|u| factorization_exact_at(n, y, u)).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonteCarloFactorization {
    pub n: usize,
    pub q: f64,
    pub seed: u64,
    pub samples: u64,
    /// `(u, P̂(L^p2hlr ≤ u), P̂(L^p2pr ≤ u) · P̂(L^p2l ≤ u/2))` for even `u`.
    pub rows: Vec<(u64, f64, f64)>,
    pub sup_distance: f64,
}

/// Simulates the three geometries independently and compares the p2hlr
/// distribution function with the product of the other two on even `u`.
pub fn factorization_monte_carlo(n: usize, y: &BigRational, samples: u64, seed: u64) -> Result<MonteCarloFactorization> {
    let report = |kind| -> Result<SimulationReport> {
        sample_lpp(&GeometricSpec::new(Geometry::new(kind, n)?, y.clone(), seed)?, samples)
    };
    let hlr = report(GeometryKind::P2hlr)?;
    let pr = report(GeometryKind::P2pr)?;
    let l = report(GeometryKind::P2l)?;
    let u_max = hlr.cdf.len().max(pr.cdf.len()).max(2 * l.cdf.len()) as u64;
    let rows: Vec<(u64, f64, f64)> =
        (0..=u_max).step_by(2).map(|u| (u, hlr.cdf_at(u), pr.cdf_at(u) * l.cdf_at(u / 2))).collect();
    let sup_distance = rows.iter().map(|&(_, a, b)| (a - b).abs()).fold(0.0, f64::max);
    Ok(MonteCarloFactorization { n, q: hlr.q, seed, samples, rows, sup_distance })
}
