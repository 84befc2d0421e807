//! Geometric weights: exact distribution functions of the passage time,
//! seeded sampling and fluctuation scaling.
//!
//! All variables are specialised to a common value `y = √q`. Off-diagonal
//! squares then carry geometric weights of parameter `q = y²` and diagonal
//! squares of the reflected geometries carry parameter `y`.

mod factorization;
mod sampling;

pub use factorization::{
    factorization_exact, factorization_exact_at, factorization_monte_carlo, ExactFactorizationRow,
    MonteCarloFactorization,
};
pub use sampling::{sample_filling, sample_lpp, HistogramPoint, NormalizedStats, SimulationReport};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lpp::{generating_series, Geometry, DEFAULT_NODE_BUDGET};

/// A geometry with i.i.d. geometric weights and a generator seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometricSpec {
    pub geometry: Geometry,
    /// `√q`, strictly between 0 and 1.
    pub y: BigRational,
    pub seed: u64,
}

impl GeometricSpec {
    pub fn new(geometry: Geometry, y: BigRational, seed: u64) -> Result<Self> {
        check_unit_interval(&y)?;
        Ok(GeometricSpec { geometry, y, seed })
    }

    /// Uses the exact binary value of `√q` as `y`.
    pub fn from_q(geometry: Geometry, q: f64, seed: u64) -> Result<Self> {
        if !(q > 0.0 && q < 1.0) {
            return Err(Error::OutOfRange(format!("q = {q} is not in (0,1)")));
        }
        let y = BigRational::from_float(q.sqrt()).ok_or_else(|| Error::OutOfRange(format!("q = {q}")))?;
        GeometricSpec::new(geometry, y, seed)
    }

    pub fn y_f64(&self) -> f64 {
        self.y.to_f64().unwrap_or(f64::NAN)
    }

    pub fn q(&self) -> f64 {
        let y = self.y_f64();
        y * y
    }
}

fn check_unit_interval(y: &BigRational) -> Result<()> {
    if *y <= BigRational::zero() || *y >= BigRational::one() {
        return Err(Error::OutOfRange(format!("y = {y} is not in (0,1)")));
    }
    Ok(())
}

/// Parses `"a/b"`, an integer, or a finite decimal such as `"0.7"` as an
/// exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| bad())?;
        let den: BigInt = den.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(BigRational::new(digits, den));
    }
    Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?))
}

/// The constants `c1` and `c2` of the fluctuation scaling
/// `(L - c1 n) / (c2 n^{1/3})`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScalingConstants {
    pub c1: f64,
    pub c2: f64,
}

impl ScalingConstants {
    pub fn normalize(&self, value: f64, n: usize) -> f64 {
        (value - self.c1 * n as f64) / (self.c2 * (n as f64).cbrt())
    }
}

/// `c1 = 2√q / (1 - √q)` and `c2 = q^{1/6} (1 + √q)^{1/3} / (1 - √q)`.
pub fn scaling_constants(q: f64) -> Result<ScalingConstants> {
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::OutOfRange(format!("q = {q} is not in (0,1)")));
    }
    let s = q.sqrt();
    Ok(ScalingConstants { c1: 2.0 * s / (1.0 - s), c2: q.powf(1.0 / 6.0) * (1.0 + s).cbrt() / (1.0 - s) })
}

/// `Π (1 - p_s)` over the squares `s` of the geometry, where `p_s` is the
/// geometric parameter of square `s` at `x_i = y`.
pub fn normalization(geometry: Geometry, y: &BigRational) -> BigRational {
    geometry
        .squares()
        .into_iter()
        .map(|(i, j)| {
            let degree: i32 = geometry.square_exponents(i, j).iter().sum();
            BigRational::one() - num_traits::pow(y.clone(), degree as usize)
        })
        .product()
}

/// `P(L ≤ bound)` exactly, from the generating series of fillings with
/// passage time at most `bound`.
pub fn exact_cdf(geometry: Geometry, bound: u64, y: &BigRational) -> Result<BigRational> {
    exact_cdf_with_budget(geometry, bound, y, DEFAULT_NODE_BUDGET)
}

pub fn exact_cdf_with_budget(geometry: Geometry, bound: u64, y: &BigRational, node_budget: u64) -> Result<BigRational> {
    check_unit_interval(y)?;
    let series = generating_series(geometry, bound, node_budget)?;
    let values = vec![y.clone(); geometry.n];
    Ok(normalization(geometry, y) * series.specialize(&values)?)
}
