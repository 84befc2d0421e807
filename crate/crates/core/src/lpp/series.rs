use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use super::geometry::Geometry;
use crate::error::{Error, Result};
use crate::poly::{Exponents, LaurentPolynomial};

/// Default cap on search nodes for [`generating_series`].
pub const DEFAULT_NODE_BUDGET: u64 = 200_000_000;

struct Search<'a> {
    bound: u64,
    budget: u64,
    nodes: &'a AtomicU64,
    /// `(left, below)` predecessor positions in the square list.
    preds: Vec<(Option<usize>, Option<usize>)>,
    exps: Vec<Vec<i32>>,
}

impl Search<'_> {
    fn run(&self, at: usize, times: &mut Vec<u64>, exps: &mut [i32], out: &mut HashMap<Exponents, u64>) -> Result<()> {
        if at == self.preds.len() {
            *out.entry(Exponents::from_slice(exps)).or_default() += 1;
            return Ok(());
        }
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        let (left, below) = self.preds[at];
        let base = left.map_or(0, |k| times[k]).max(below.map_or(0, |k| times[k]));
        // any completion has passage time at least `base + w`
        for w in 0..=self.bound - base {
            times.push(base + w);
            add_scaled(exps, &self.exps[at], w as i32);
            let r = self.run(at + 1, times, exps, out);
            add_scaled(exps, &self.exps[at], -(w as i32));
            times.pop();
            r?;
        }
        Ok(())
    }
}

fn add_scaled(acc: &mut [i32], e: &[i32], k: i32) {
    for (a, d) in acc.iter_mut().zip(e) {
        *a += d * k;
    }
}

/// `Σ wt(W)` over all fillings `W` of the geometry with passage time at most
/// `bound`, by exhaustive search that cuts a branch as soon as a partial
/// passage time exceeds the bound. Fails once more than `node_budget`
/// search nodes have been visited.
pub fn generating_series(geometry: Geometry, bound: u64, node_budget: u64) -> Result<LaurentPolynomial> {
    let squares = geometry.squares();
    let position: HashMap<(usize, usize), usize> = squares.iter().enumerate().map(|(k, &s)| (s, k)).collect();
    let preds = squares
        .iter()
        .map(|&(i, j)| (position.get(&(i.wrapping_sub(1), j)).copied(), position.get(&(i, j.wrapping_sub(1))).copied()))
        .collect();
    let exps = squares.iter().map(|&(i, j)| geometry.square_exponents(i, j)).collect();
    let nodes = AtomicU64::new(0);
    let search = Search { bound, budget: node_budget, nodes: &nodes, preds, exps };

    // split on the value of the corner square (1,1)
    let parts: Vec<Result<HashMap<Exponents, u64>>> = (0..=bound)
        .into_par_iter()
        .map(|w| {
            let mut out = HashMap::new();
            let mut exps = vec![0i32; geometry.n];
            add_scaled(&mut exps, &search.exps[0], w as i32);
            search.run(1, &mut vec![w], &mut exps, &mut out)?;
            Ok(out)
        })
        .collect();
    let mut total: HashMap<Exponents, u64> = HashMap::new();
    for part in parts {
        for (e, c) in part? {
            *total.entry(e).or_default() += c;
        }
    }
    Ok(LaurentPolynomial::from_terms(geometry.n, total))
}
