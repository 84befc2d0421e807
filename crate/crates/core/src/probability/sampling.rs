use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{scaling_constants, GeometricSpec, ScalingConstants};
use crate::error::{Error, Result};
use crate::lpp::{Filling, Geometry, GeometryKind};

/// Generator for sample `index`: ChaCha8 keyed by the seed, geometry kind
/// and size, on stream `index`. Squares draw one `u64` each, in the order
/// of [`Geometry::squares`].
fn sample_rng(seed: u64, geometry: Geometry, index: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8] = match geometry.kind {
        GeometryKind::P2hlr => 1,
        GeometryKind::P2pr => 2,
        GeometryKind::P2l => 3,
    };
    key[16..24].copy_from_slice(&(geometry.n as u64).to_le_bytes());
    let mut rng = ChaCha8Rng::from_seed(key);
    rng.set_stream(index);
    rng
}

/// Inverse-CDF draw of `P(X = k) = (1 - p) p^k`, given `ln p`.
fn geometric(rng: &mut ChaCha8Rng, ln_p: f64) -> u64 {
    // 1 - [0,1) lies in (0,1], so the logarithm is finite
    let u = 1.0 - rng.gen::<f64>();
    (u.ln() / ln_p).floor() as u64
}

struct Sampler {
    spec_seed: u64,
    geometry: Geometry,
    ln_diag: f64,
    ln_off: f64,
    /// `(last column, terminal)` for each row, bottom first.
    rows: Vec<(usize, bool)>,
}

impl Sampler {
    fn new(spec: &GeometricSpec) -> Self {
        let g = spec.geometry;
        let y = spec.y_f64();
        let rows = (1..=g.height())
            .map(|j| {
                let last = (1..=g.width()).filter(|&i| g.contains(i, j)).max().unwrap_or(0);
                (last, g.is_terminal(last, j))
            })
            .collect();
        Sampler { spec_seed: spec.seed, geometry: g, ln_diag: y.ln(), ln_off: 2.0 * y.ln(), rows }
    }

    fn ln_p(&self, i: usize, j: usize) -> f64 {
        if self.geometry.is_diagonal(i, j) {
            self.ln_diag
        } else {
            self.ln_off
        }
    }

    /// Row-by-row passage time without materialising the filling.
    fn passage_time(&self, index: u64) -> u64 {
        let mut rng = sample_rng(self.spec_seed, self.geometry, index);
        let width = self.geometry.width();
        let mut below = vec![0u64; width + 1];
        let mut here = vec![0u64; width + 1];
        let mut time = 0;
        for (row, &(last, terminal)) in self.rows.iter().enumerate() {
            let j = row + 1;
            for i in 1..=last {
                let w = geometric(&mut rng, self.ln_p(i, j));
                here[i] = here[i - 1].max(below[i]) + w;
            }
            here[last + 1..].iter_mut().for_each(|v| *v = 0);
            if terminal {
                time = time.max(here[last]);
            }
            std::mem::swap(&mut below, &mut here);
        }
        time
    }
}

/// The filling drawn as sample `index` of `spec`.
pub fn sample_filling(spec: &GeometricSpec, index: u64) -> Filling {
    let sampler = Sampler::new(spec);
    let mut rng = sample_rng(spec.seed, spec.geometry, index);
    let values: Vec<u64> =
        spec.geometry.squares().into_iter().map(|(i, j)| geometric(&mut rng, sampler.ln_p(i, j))).collect();
    Filling::from_values(spec.geometry, &values).expect("one value per square")
}

/// Mass of the normalized statistic at the point corresponding to one
/// passage-time value.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct HistogramPoint {
    pub value: f64,
    pub probability: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NormalizedStats {
    pub c1: f64,
    pub c2: f64,
    pub mean: f64,
    pub variance: f64,
    pub skewness: f64,
    pub histogram: Vec<HistogramPoint>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SimulationReport {
    pub geometry: GeometryKind,
    pub n: usize,
    pub q: f64,
    pub seed: u64,
    pub samples: u64,
    /// `(v, P̂(L ≤ v))` for `v` from 0 to the largest sample.
    pub cdf: Vec<(u64, f64)>,
    pub mean: f64,
    pub variance: f64,
    pub normalized: NormalizedStats,
    #[serde(skip)]
    pub wall_clock: Duration,
}

impl SimulationReport {
    /// Empirical `P(L ≤ v)`.
    pub fn cdf_at(&self, v: u64) -> f64 {
        match self.cdf.get(v as usize) {
            Some(&(_, p)) => p,
            None => 1.0,
        }
    }

    /// One `value,probability` line per CDF point, with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("value,probability\n");
        for (v, p) in &self.cdf {
            out.push_str(&format!("{v},{p}\n"));
        }
        out
    }
}

/// Draws `n_samples` independent passage times. Sample `k` depends only on
/// the seed, the geometry and `k`, so reports are identical across runs and
/// thread counts.
pub fn sample_lpp(spec: &GeometricSpec, n_samples: u64) -> Result<SimulationReport> {
    if n_samples == 0 {
        return Err(Error::OutOfRange("at least one sample is required".into()));
    }
    let start = Instant::now();
    let sampler = Sampler::new(spec);
    let times: Vec<u64> = (0..n_samples).into_par_iter().map(|k| sampler.passage_time(k)).collect();
    let constants = scaling_constants(spec.q())?;
    let mut report = summarize(spec, &times, constants);
    report.wall_clock = start.elapsed();
    Ok(report)
}

fn summarize(spec: &GeometricSpec, times: &[u64], constants: ScalingConstants) -> SimulationReport {
    let total = times.len() as f64;
    let max = times.iter().copied().max().unwrap_or(0);
    let mut counts = vec![0u64; max as usize + 1];
    for &t in times {
        counts[t as usize] += 1;
    }
    let mut running = 0u64;
    let cdf = counts
        .iter()
        .enumerate()
        .map(|(v, &c)| {
            running += c;
            (v as u64, running as f64 / total)
        })
        .collect();

    let mean = times.iter().map(|&t| t as f64).sum::<f64>() / total;
    let central = |k: i32| times.iter().map(|&t| (t as f64 - mean).powi(k)).sum::<f64>() / total;
    let variance = central(2);
    let skewness = if variance > 0.0 { central(3) / variance.powf(1.5) } else { 0.0 };

    let n = spec.geometry.n;
    let scale = constants.c2 * (n as f64).cbrt();
    let histogram = counts
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c > 0)
        .map(|(v, &c)| HistogramPoint { value: constants.normalize(v as f64, n), probability: c as f64 / total })
        .collect();

    SimulationReport {
        geometry: spec.geometry.kind,
        n,
        q: spec.q(),
        seed: spec.seed,
        samples: times.len() as u64,
        cdf,
        mean,
        variance,
        normalized: NormalizedStats {
            c1: constants.c1,
            c2: constants.c2,
            mean: constants.normalize(mean, n),
            variance: variance / (scale * scale),
            skewness,
            histogram,
        },
        wall_clock: Duration::ZERO,
    }
}
