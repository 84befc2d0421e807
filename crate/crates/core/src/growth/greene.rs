//! Exhaustive maximisation over families of vertex-disjoint lattice paths,
//! used as an independent oracle for the growth diagrams' output shapes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PathDirection {
    /// Up or right steps, from the south-west towards the north-east.
    UpRight,
    /// Down or right steps, from the north-west towards the south-east.
    DownRight,
}

/// Maximum total weight of `k` vertex-disjoint monotone paths through the
/// cells of `matrix` (`matrix[i-1][j-1]`, `i` horizontal).
///
/// Up-right paths start in the bottom `k` cells of the left column and end
/// in the top `k` cells of the right column; down-right paths are the
/// vertical mirror image. Meant for small matrices (at most 64 cells).
pub fn greene_oracle(matrix: &[Vec<u64>], k: usize, direction: PathDirection) -> Result<u64> {
    let m = matrix.len();
    let n = matrix.first().map_or(0, Vec::len);
    if m == 0 || n == 0 || matrix.iter().any(|c| c.len() != n) {
        return Err(Error::InvalidFilling("matrix must be non-empty and rectangular".into()));
    }
    if k == 0 || k > m.min(n) {
        return Err(Error::OutOfRange(format!("k = {k} must lie in 1..={}", m.min(n))));
    }
    if m * n > 64 {
        return Err(Error::OutOfRange(format!("{m}x{n} is too large for the exhaustive oracle")));
    }
    let w: Vec<Vec<u64>> = match direction {
        PathDirection::UpRight => matrix.to_vec(),
        PathDirection::DownRight => matrix.iter().map(|col| col.iter().rev().copied().collect()).collect(),
    };
    if k == 1 {
        return Ok(longest_path(&w));
    }

    // every candidate path for each start index, as (cell mask, weight)
    let families: Vec<Vec<(u64, u64)>> = (0..k)
        .map(|p| {
            let mut out = Vec::new();
            walk(&w, (0, p), (m - 1, n - k + p), 0, 0, &mut out);
            out.sort_by(|a, b| b.1.cmp(&a.1));
            out
        })
        .collect();
    let total: u64 = w.iter().flatten().sum();
    let mut best = 0;
    choose(&families, 0, 0, 0, total, &mut best);
    Ok(best)
}

fn longest_path(w: &[Vec<u64>]) -> u64 {
    let (m, n) = (w.len(), w[0].len());
    let mut best = vec![vec![0u64; n]; m];
    for i in 0..m {
        for j in 0..n {
            let prev = match (i, j) {
                (0, 0) => 0,
                (0, _) => best[0][j - 1],
                (_, 0) => best[i - 1][0],
                _ => best[i - 1][j].max(best[i][j - 1]),
            };
            best[i][j] = prev + w[i][j];
        }
    }
    best[m - 1][n - 1]
}

fn walk(w: &[Vec<u64>], at: (usize, usize), end: (usize, usize), mask: u64, acc: u64, out: &mut Vec<(u64, u64)>) {
    let (i, j) = at;
    let n = w[0].len();
    let mask = mask | 1 << (i * n + j);
    let acc = acc + w[i][j];
    if at == end {
        out.push((mask, acc));
        return;
    }
    if i < end.0 {
        walk(w, (i + 1, j), end, mask, acc, out);
    }
    if j < end.1 {
        walk(w, (i, j + 1), end, mask, acc, out);
    }
}

fn choose(families: &[Vec<(u64, u64)>], p: usize, used: u64, acc: u64, remaining: u64, best: &mut u64) {
    if p == families.len() {
        *best = (*best).max(acc);
        return;
    }
    if acc + remaining <= *best {
        return;
    }
    for &(mask, weight) in &families[p] {
        if mask & used != 0 {
            continue;
        }
        choose(families, p + 1, used | mask, acc + weight, remaining - weight, best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_paths() {
        let m = vec![vec![1, 2], vec![0, 3]];
        assert_eq!(greene_oracle(&m, 1, PathDirection::UpRight).unwrap(), 6);
        assert_eq!(greene_oracle(&m, 1, PathDirection::DownRight).unwrap(), 5);
        assert_eq!(greene_oracle(&m, 2, PathDirection::UpRight).unwrap(), 6);
    }

    #[test]
    fn full_families_cover_everything() {
        let m = vec![vec![3, 1, 4], vec![1, 5, 9], vec![2, 6, 5]];
        let total = m.iter().flatten().sum::<u64>();
        assert_eq!(greene_oracle(&m, 3, PathDirection::UpRight).unwrap(), total);
        assert_eq!(greene_oracle(&m, 3, PathDirection::DownRight).unwrap(), total);
        let wide = vec![vec![1, 2, 3, 4], vec![5, 6, 7, 8]];
        assert_eq!(greene_oracle(&wide, 2, PathDirection::UpRight).unwrap(), 36);
    }

    #[test]
    fn zero_matrix_and_errors() {
        let z = vec![vec![0; 4]; 3];
        for k in 1..=3 {
            assert_eq!(greene_oracle(&z, k, PathDirection::UpRight).unwrap(), 0);
        }
        assert!(greene_oracle(&z, 4, PathDirection::UpRight).is_err());
        assert!(greene_oracle(&z, 0, PathDirection::DownRight).is_err());
    }
}
