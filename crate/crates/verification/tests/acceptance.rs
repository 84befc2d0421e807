//! Acceptance criteria AC1–AC8, one PASS/FAIL line each.
//!
//! Every check compares the library against an oracle written here from
//! first principles: brute-force enumeration of fillings with a separate
//! passage-time routine, exact evaluation of the Weyl character formulas,
//! a sweep over families of lattice paths, and brute-force probabilities.

use std::collections::BTreeMap;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use lppqs::characters::{
    bounded_schur_sum, character_jt, character_tab, littlewood_sides, okada_product, Family,
};
use lppqs::growth::{grow_grid, LocalRuleInput, Rule};
use lppqs::lpp::{bz_forward, bz_inverse, generating_series, p2l_forward, p2l_inverse, Filling, Geometry, GeometryKind};
use lppqs::partitions::partitions_in_box;
use lppqs::probability::{
    exact_cdf, factorization_exact_at, factorization_monte_carlo, sample_lpp, scaling_constants, GeometricSpec,
};
use lppqs::{LaurentPolynomial, Partition};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const BUDGET: u64 = u64::MAX;

fn rat(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

// ---------------------------------------------------------------------------
// Domain oracle

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Geo {
    Hlr,
    Pr,
    L,
}

impl Geo {
    fn kind(self) -> GeometryKind {
        match self {
            Geo::Hlr => GeometryKind::P2hlr,
            Geo::Pr => GeometryKind::P2pr,
            Geo::L => GeometryKind::P2l,
        }
    }
}

struct Domain {
    geo: Geo,
    n: usize,
    /// `(i, j)` with `i` horizontal, in increasing `j` then `i`.
    squares: Vec<(usize, usize)>,
}

impl Domain {
    fn new(geo: Geo, n: usize) -> Self {
        let mut squares = Vec::new();
        for j in 1..=2 * n {
            for i in 1..=2 * n {
                let inside = match geo {
                    Geo::Hlr => i <= j && i + j <= 2 * n + 1,
                    Geo::Pr => i <= j && j <= n,
                    Geo::L => i + j <= n + 1,
                };
                if inside {
                    squares.push((i, j));
                }
            }
        }
        Domain { geo, n, squares }
    }

    fn row_variable(&self, j: usize) -> usize {
        match self.geo {
            Geo::Hlr if j <= self.n => j,
            Geo::Hlr => 2 * self.n + 1 - j,
            Geo::Pr => j,
            Geo::L => self.n + 1 - j,
        }
    }

    fn diagonal(&self, i: usize, j: usize) -> bool {
        self.geo != Geo::L && i == j
    }

    fn terminal(&self, i: usize, j: usize) -> bool {
        match self.geo {
            Geo::Hlr => i + j == 2 * self.n + 1,
            Geo::Pr => i == self.n && j == self.n,
            Geo::L => i + j == self.n + 1,
        }
    }

    /// Exponent vector of `wt(W)` and the degree of that monomial at `x_i = y`.
    fn weight(&self, values: &[u64]) -> (Vec<i32>, u64) {
        let mut e = vec![0i32; self.n];
        let mut degree = 0;
        for (&(i, j), &w) in self.squares.iter().zip(values) {
            e[i - 1] += w as i32;
            degree += w;
            if !self.diagonal(i, j) {
                e[self.row_variable(j) - 1] += w as i32;
                degree += w;
            }
        }
        (e, degree)
    }

    /// Longest up-right path from `(1,1)` to a terminal square.
    fn passage_time(&self, values: &[u64]) -> u64 {
        let side = 2 * self.n + 2;
        let mut g = vec![None::<u64>; side * side];
        let mut best = 0;
        for (&(i, j), &w) in self.squares.iter().zip(values) {
            let left = g[(i - 1) * side + j];
            let below = g[i * side + j - 1];
            let before = match (left, below) {
                (None, None) if (i, j) == (1, 1) => 0,
                (None, None) => continue,
                (a, b) => a.unwrap_or(0).max(b.unwrap_or(0)),
            };
            let t = before + w;
            g[i * side + j] = Some(t);
            if self.terminal(i, j) {
                best = best.max(t);
            }
        }
        best
    }

    /// Calls `visit` on every filling with entries in `0..=max`.
    fn for_each_filling(&self, max: u64, mut visit: impl FnMut(&[u64])) {
        let mut values = vec![0u64; self.squares.len()];
        loop {
            visit(&values);
            let mut k = 0;
            loop {
                if k == values.len() {
                    return;
                }
                if values[k] < max {
                    values[k] += 1;
                    break;
                }
                values[k] = 0;
                k += 1;
            }
        }
    }

    /// `Σ wt(W)` over fillings with passage time at most `bound`.
    fn series(&self, bound: u64) -> BTreeMap<Vec<i32>, BigInt> {
        let mut out: BTreeMap<Vec<i32>, BigInt> = BTreeMap::new();
        self.for_each_filling(bound, |v| {
            if self.passage_time(v) <= bound {
                *out.entry(self.weight(v).0).or_default() += 1;
            }
        });
        out
    }

    /// `P(L ≤ u)` for `u` in `0..=max` with geometric weights, `x_i = y`.
    fn cdf(&self, max: u64, y: &BigRational) -> Vec<BigRational> {
        let mut counts: BTreeMap<(u64, u64), u64> = BTreeMap::new();
        self.for_each_filling(max, |v| {
            let t = self.passage_time(v);
            if t <= max {
                *counts.entry((t, self.weight(v).1)).or_default() += 1;
            }
        });
        let mut norm = BigRational::one();
        for &(i, j) in &self.squares {
            let p = if self.diagonal(i, j) { y.clone() } else { y * y };
            norm *= BigRational::one() - p;
        }
        (0..=max)
            .map(|u| {
                let mass: BigRational = counts
                    .iter()
                    .filter(|(&(t, _), _)| t <= u)
                    .map(|(&(_, d), &c)| BigRational::from_integer(c.into()) * num_traits::pow(y.clone(), d as usize))
                    .sum();
                &norm * mass
            })
            .collect()
    }
}

fn terms(p: &LaurentPolynomial) -> BTreeMap<Vec<i32>, BigInt> {
    p.terms().map(|(e, c)| (e.to_vec(), c.clone())).collect()
}

fn series(geo: Geo, n: usize, bound: u64) -> LaurentPolynomial {
    generating_series(Geometry::new(geo.kind(), n).unwrap(), bound, BUDGET).unwrap()
}

fn product_of_variables(n: usize, power: i32) -> LaurentPolynomial {
    LaurentPolynomial::monomial(&vec![power; n], 1)
}

// ---------------------------------------------------------------------------
// Weyl character oracle

fn det(mut a: Vec<Vec<BigRational>>) -> BigRational {
    let n = a.len();
    let mut result = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            a.swap(p, c);
            result = -result;
        }
        let pivot = a[c][c].clone();
        result *= &pivot;
        for r in c + 1..n {
            let f = &a[r][c] / &pivot;
            for k in c..n {
                let v = &f * &a[c][k];
                a[r][k] -= v;
            }
        }
    }
    result
}

fn power(t: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        num_traits::pow(t.clone(), e as usize)
    } else {
        num_traits::pow(t.recip(), (-e) as usize)
    }
}

/// The character at `x_j = t_j²` as a ratio of alternants.
fn weyl(family: Family, lambda: &[u64], t: &[BigRational]) -> BigRational {
    let n = t.len();
    let alternant = |parts: &[u64]| {
        let rows = (0..n)
            .map(|i| {
                let base = parts.get(i).copied().unwrap_or(0) as i64 + (n - 1 - i) as i64;
                t.iter()
                    .map(|tj| match family {
                        Family::Schur => power(tj, 2 * base),
                        Family::Symplectic => power(tj, 2 * (base + 1)) - power(tj, -2 * (base + 1)),
                        Family::OddOrthogonal => power(tj, 2 * base + 1) - power(tj, -(2 * base + 1)),
                    })
                    .collect()
            })
            .collect();
        det(rows)
    };
    alternant(lambda) / alternant(&[])
}

fn evaluation_points(n: usize) -> [Vec<BigRational>; 2] {
    let a = [rat(2, 1), rat(3, 1), rat(5, 1)];
    let b = [rat(3, 2), rat(5, 3), rat(7, 4)];
    [a[..n].to_vec(), b[..n].to_vec()]
}

fn at_squares(p: &LaurentPolynomial, t: &[BigRational]) -> BigRational {
    let x: Vec<BigRational> = t.iter().map(|v| v * v).collect();
    p.specialize(&x).unwrap()
}

// ---------------------------------------------------------------------------
// AC1

fn ac1() -> Outcome {
    let start = Instant::now();
    let x = |e: i32| LaurentPolynomial::monomial(&[e], 1);
    let target = &(&(&(&x(0) + &x(1)) + &(&x(2) + &x(2))) + &x(3)) + &x(4);
    let factored = &(&(&x(0) + &x(1)) + &x(2)) * &(&x(0) + &x(2));
    ensure!(target == factored, "hand expansion of (1+x+x²)(1+x²) is wrong");

    for (n, u) in [(1, 2), (1, 4), (2, 2), (2, 4), (3, 2)] {
        let hlr = series(Geo::Hlr, n, u);
        let pr = series(Geo::Pr, n, u);
        let l = series(Geo::L, n, u / 2);
        ensure!(terms(&hlr) == Domain::new(Geo::Hlr, n).series(u), "p2hlr series differs from enumeration at n={n} u={u}");
        ensure!(terms(&pr) == Domain::new(Geo::Pr, n).series(u), "p2pr series differs from enumeration at n={n} u={u}");
        ensure!(terms(&l) == Domain::new(Geo::L, n).series(u / 2), "p2l series differs from enumeration at n={n} u={u}");
        ensure!(hlr == &pr * &l, "factorization fails at n={n} u={u}");
        if (n, u) == (1, 2) {
            ensure!(hlr == target, "(1,2) instance is {hlr}");
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    Ok("5 instances equal the product and match brute-force enumeration".into())
}

// ---------------------------------------------------------------------------
// AC2

fn symplectic_sum(u: u64, n: usize) -> LaurentPolynomial {
    partitions_in_box(u, n)
        .iter()
        .map(|l| character_jt(Family::Symplectic, l, n).unwrap())
        .fold(LaurentPolynomial::zero(n), |a, b| &a + &b)
}

fn weyl_sum(family: Family, u: u64, n: usize, even_rows: bool, t: &[BigRational]) -> BigRational {
    partitions_in_box(u, n)
        .iter()
        .filter(|l| !even_rows || l.parts().iter().all(|p| p % 2 == 0))
        .map(|l| weyl(family, l.parts(), t))
        .sum()
}

fn ac2() -> Outcome {
    let start = Instant::now();
    let mut checks = 0;
    for (n, u) in [(1, 2), (1, 4), (2, 2), (2, 4)] {
        let hlr = series(Geo::Hlr, n, u);
        let sum = symplectic_sum(u, n);
        ensure!(hlr == &product_of_variables(n, u as i32) * &sum, "step 1 fails at n={n} u={u}");
        for t in evaluation_points(n) {
            ensure!(at_squares(&sum, &t) == weyl_sum(Family::Symplectic, u, n, false, &t), "Σ sp_λ oracle n={n} u={u}");
        }
        let v = u / 2;
        ensure!(series(Geo::Pr, n, u) == bounded_schur_sum(u, n, false), "step 4 (p2pr) fails at n={n} u={u}");
        ensure!(series(Geo::L, n, v) == bounded_schur_sum(u, n, true), "step 4 (p2l) fails at n={n} u={u}");
        checks += 4;
    }

    for n in 1..=3 {
        for u in 0..=6u64 {
            let (lhs, rhs) = okada_product(u, n);
            ensure!(lhs == rhs, "Okada fails at n={n} u={u}");
            let (s, t) = (u / 2, u.div_ceil(2));
            for pt in evaluation_points(n) {
                ensure!(at_squares(&lhs, &pt) == weyl_sum(Family::Symplectic, u, n, false, &pt), "Okada left side oracle n={n} u={u}");
                let product = weyl(Family::Symplectic, &vec![s; n], &pt) * weyl(Family::OddOrthogonal, &vec![t; n], &pt);
                ensure!(at_squares(&rhs, &pt) == product, "Okada right side oracle n={n} u={u}");
            }
            checks += 1;
        }
        for u in [0u64, 2, 4, 6] {
            let v = (u / 2) as i32;
            for (even_rows, family) in [(false, Family::OddOrthogonal), (true, Family::Symplectic)] {
                let (sum, product) = littlewood_sides(u, n, even_rows).map_err(|e| e.to_string())?;
                ensure!(sum == product, "Stembridge (even rows: {even_rows}) fails at n={n} u={u}");
                ensure!(sum == bounded_schur_sum(u, n, even_rows), "Stembridge sum is not the bounded Schur sum");
                for pt in evaluation_points(n) {
                    let x_prod: BigRational = pt.iter().map(|ti| power(ti, 2 * v as i64)).product();
                    ensure!(at_squares(&sum, &pt) == weyl_sum(Family::Schur, u, n, even_rows, &pt), "Schur sum oracle n={n} u={u}");
                    ensure!(
                        at_squares(&product, &pt) == x_prod * weyl(family, &vec![u / 2; n], &pt),
                        "Stembridge product oracle n={n} u={u}"
                    );
                }
                checks += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(600), "took {elapsed:?}");
    Ok(format!("{checks} exact identities, cross-checked against Weyl alternants"))
}

// ---------------------------------------------------------------------------
// AC3

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn ac3() -> Outcome {
    let mut count = 0;
    for n in 1..=3 {
        for lambda in partitions_in_box(3, 3) {
            for family in [Family::Schur, Family::Symplectic, Family::OddOrthogonal] {
                if lambda.len() > n {
                    ensure!(
                        character_jt(family, &lambda, n).is_err() && character_tab(family, &lambda, n).is_err(),
                        "{family:?} {lambda} with {n} variables should be rejected"
                    );
                    continue;
                }
                let jt = character_jt(family, &lambda, n).map_err(|e| e.to_string())?;
                let tab = character_tab(family, &lambda, n).map_err(|e| e.to_string())?;
                ensure!(jt == tab, "{family:?} {lambda} n={n}: determinant and tableaux differ");
                for t in evaluation_points(n) {
                    ensure!(at_squares(&jt, &t) == weyl(family, lambda.parts(), &t), "{family:?} {lambda} n={n}: Weyl oracle");
                }
                match family {
                    Family::Schur => {
                        for p in permutations(n) {
                            ensure!(jt.permute_variables(&p) == jt, "s_{lambda} not symmetric under {p:?}");
                        }
                    }
                    _ => {
                        for i in 0..n {
                            ensure!(jt.invert_variable(i) == jt, "{family:?} {lambda} not invariant under x{} ↦ 1/x{}", i + 1, i + 1);
                        }
                    }
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} (family, λ, n) cases consistent"))
}

// ---------------------------------------------------------------------------
// AC4

/// Maximum weight of a union of `k` monotone paths from corner to corner,
/// by sweeping anti-diagonals with the paths' positions kept sorted.
fn k_path_oracle(w: &[Vec<u64>], k: usize) -> u64 {
    let (m, n) = (w.len(), w[0].len());
    let mut states: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    states.insert(vec![0; k], w[0][0]);
    for t in 1..m + n - 1 {
        let mut next: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
        for (pos, &value) in &states {
            for mask in 0..1u32 << k {
                let moved: Vec<usize> = pos.iter().enumerate().map(|(p, &i)| i + ((mask >> p) & 1) as usize).collect();
                if moved.windows(2).any(|x| x[0] > x[1]) || moved.iter().any(|&i| i >= m || t - i >= n) {
                    continue;
                }
                let mut cells = moved.clone();
                cells.dedup();
                let gain: u64 = cells.iter().map(|&i| w[i][t - i]).sum();
                let slot = next.entry(moved).or_insert(0);
                *slot = (*slot).max(value + gain);
            }
        }
        states = next;
    }
    states.values().copied().max().unwrap_or(0)
}

fn ac4() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut comparisons = 0;
    for _ in 0..200 {
        let (m, n) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let matrix: Vec<Vec<u64>> = (0..m).map(|_| (0..n).map(|_| rng.gen_range(0..=4)).collect()).collect();
        let mirrored: Vec<Vec<u64>> = matrix.iter().map(|c| c.iter().rev().copied().collect()).collect();
        let row = grow_grid(&matrix, Rule::Row).map_err(|e| e.to_string())?;
        let col = grow_grid(&matrix, Rule::Col).map_err(|e| e.to_string())?;
        for k in 1..=m.min(n) {
            let lambda: u64 = row.corner().parts().iter().take(k).sum();
            let mu: u64 = col.corner().parts().iter().take(k).sum();
            ensure!(lambda == k_path_oracle(&matrix, k), "row rule k={k} on {matrix:?}");
            ensure!(mu == k_path_oracle(&mirrored, k), "column rule k={k} on {matrix:?}");
            comparisons += 2;
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    Ok(format!("200 matrices, {comparisons} partial sums equal the path oracle"))
}

// ---------------------------------------------------------------------------
// AC5

fn interlaces(small: &Partition, big: &Partition) -> bool {
    let len = big.len().max(small.len()) + 1;
    let (s, b) = (small.padded(len), big.padded(len));
    (0..len).all(|i| b[i] >= s[i] && (i + 1 == len || s[i] >= b[i + 1]))
}

fn random_partition(rng: &mut ChaCha8Rng) -> Partition {
    let len = rng.gen_range(0..=4);
    let mut parts: Vec<u64> = (0..len).map(|_| rng.gen_range(1..=6)).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).unwrap()
}

fn random_above(rng: &mut ChaCha8Rng, kappa: &Partition) -> Partition {
    let k = kappa.padded(kappa.len() + 1);
    let parts = (0..k.len())
        .map(|i| {
            let upper = if i == 0 { k[0] + 3 } else { k[i - 1] };
            rng.gen_range(k[i]..=upper)
        })
        .collect();
    Partition::new(parts).unwrap()
}

fn random_filling(rng: &mut ChaCha8Rng, geo: Geo, n: usize) -> (Filling, Domain) {
    let d = Domain::new(geo, n);
    let values: Vec<u64> = d.squares.iter().map(|_| rng.gen_range(0..=3)).collect();
    let g = Geometry::new(geo.kind(), n).unwrap();
    let mut w = Filling::zero(g);
    for (&(i, j), &v) in d.squares.iter().zip(&values) {
        w.set(i, j, v).unwrap();
    }
    (w, d)
}

fn oracle_time(w: &Filling, d: &Domain) -> u64 {
    let values: Vec<u64> = d.squares.iter().map(|&(i, j)| w.get(i, j)).collect();
    d.passage_time(&values)
}

fn ac5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for rule in [Rule::Row, Rule::Col] {
        for case in 0..1000 {
            let kappa = random_partition(&mut rng);
            let alpha = random_above(&mut rng, &kappa);
            let beta = random_above(&mut rng, &kappa);
            let g = rng.gen_range(0..=6);
            let nu = rule
                .apply(&LocalRuleInput::new(alpha.clone(), beta.clone(), kappa.clone(), g))
                .map_err(|e| format!("{rule:?} case {case}: {e}"))?;
            ensure!(interlaces(&alpha, &nu) && interlaces(&beta, &nu), "{rule:?}: {nu} does not cover {alpha} and {beta}");
            ensure!(kappa.size() + nu.size() == alpha.size() + beta.size() + g, "{rule:?}: size identity fails");
            let back = rule.invert(&alpha, &beta, &nu).map_err(|e| e.to_string())?;
            ensure!(back == (kappa.clone(), g), "{rule:?}: inverse gave {back:?}, expected ({kappa}, {g})");
        }
    }
    for case in 0..500 {
        let n = rng.gen_range(1..=4);
        let (w, d) = random_filling(&mut rng, Geo::Hlr, n);
        let u = oracle_time(&w, &d) + rng.gen_range(0..=2);
        let z = bz_forward(&w, u).map_err(|e| format!("p2hlr case {case}: {e}"))?;
        ensure!(z.rows().iter().flatten().all(|&e| e <= u), "p2hlr case {case}: entry above u={u}");
        ensure!(bz_inverse(&z, u).map_err(|e| e.to_string())? == w, "p2hlr case {case}: round trip");
    }
    for case in 0..500 {
        let n = rng.gen_range(1..=4);
        let (w, d) = random_filling(&mut rng, Geo::L, n);
        let z = p2l_forward(&w).map_err(|e| format!("p2l case {case}: {e}"))?;
        let shape = z.rows().last().cloned().unwrap_or_default();
        ensure!(shape.iter().all(|p| p % 2 == 0), "p2l case {case}: shape {shape:?} has an odd row");
        ensure!(shape.first().copied().unwrap_or(0) == 2 * oracle_time(&w, &d), "p2l case {case}: first row is not twice the passage time");
        ensure!(p2l_inverse(&z).map_err(|e| e.to_string())? == w, "p2l case {case}: round trip");
    }
    Ok("2×1000 local-rule, 500 p2hlr and 500 p2l round trips".into())
}

// ---------------------------------------------------------------------------
// AC6

fn ac6() -> Outcome {
    let mut rows = 0;
    for y in [rat(1, 2), rat(1, 3)] {
        for n in 1..=2 {
            let hlr = Domain::new(Geo::Hlr, n).cdf(8, &y);
            let pr = Domain::new(Geo::Pr, n).cdf(8, &y);
            let l = Domain::new(Geo::L, n).cdf(4, &y);
            for u in (0..=8u64).step_by(2) {
                let row = factorization_exact_at(n, &y, u).map_err(|e| e.to_string())?;
                ensure!(row.holds(), "factorization fails at n={n} y={y} u={u}");
                ensure!(row.p2hlr == hlr[u as usize], "p2hlr CDF differs from enumeration at n={n} y={y} u={u}");
                ensure!(row.p2pr == pr[u as usize], "p2pr CDF differs from enumeration at n={n} y={y} u={u}");
                ensure!(row.p2l == l[u as usize / 2], "p2l CDF differs from enumeration at n={n} y={y} u={u}");
                ensure!(hlr[u as usize] == &pr[u as usize] * &l[u as usize / 2], "enumerated factorization n={n} y={y} u={u}");
                rows += 1;
            }
        }
        for u in 0..=8u64 {
            let one = BigRational::one();
            let pr = exact_cdf(Geometry::new(GeometryKind::P2pr, 1).unwrap(), u, &y).map_err(|e| e.to_string())?;
            ensure!(pr == &one - power(&y, u as i64 + 1), "n=1 p2pr closed form at u={u}");
            let l = exact_cdf(Geometry::new(GeometryKind::P2l, 1).unwrap(), u, &y).map_err(|e| e.to_string())?;
            ensure!(l == &one - power(&y, 2 * (u as i64 + 1)), "n=1 p2l closed form at v={u}");
        }
    }
    Ok(format!("{rows} rational identities and the n=1 closed forms"))
}

// ---------------------------------------------------------------------------
// AC7

fn ac7() -> Outcome {
    let start = Instant::now();
    let y = rat(7, 10);
    let a = factorization_monte_carlo(30, &y, 100_000, 7).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let b = factorization_monte_carlo(30, &y, 100_000, 7).map_err(|e| e.to_string())?;
    ensure!(a == b, "fixed seed did not reproduce the run");
    ensure!(a.sup_distance <= 0.02, "sup-distance {:.4} > 0.02", a.sup_distance);
    ensure!(elapsed < Duration::from_secs(180), "took {elapsed:?}");
    Ok(format!("sup-distance {:.4} at n=30, q=0.49, 1e5 samples per geometry ({:.1} s per run)", a.sup_distance, elapsed.as_secs_f64()))
}

// ---------------------------------------------------------------------------
// AC8

fn ac8() -> Outcome {
    let constants = scaling_constants(0.25).map_err(|e| e.to_string())?;
    ensure!((constants.c1 - 2.0).abs() < 1e-12, "c1 = {}", constants.c1);
    let mut stats = Vec::new();
    for n in [50usize, 100, 200] {
        let spec = GeometricSpec::new(Geometry::new(GeometryKind::P2hlr, n).unwrap(), rat(1, 2), 8).map_err(|e| e.to_string())?;
        let report = sample_lpp(&spec, 10_000).map_err(|e| e.to_string())?;
        stats.push((n, report.normalized.mean, report.normalized.variance, report.normalized.skewness));
    }
    let summary = stats
        .iter()
        .map(|(n, m, v, s)| format!("n={n}: mean {m:.3} var {v:.3} skew {s:.3}"))
        .collect::<Vec<_>>()
        .join("; ");
    for w in stats.windows(2) {
        let (mean_drift, var_drift) = ((w[1].1 - w[0].1).abs() / w[0].1.abs(), (w[1].2 - w[0].2).abs() / w[0].2.abs());
        ensure!(mean_drift < 0.15, "mean drift {mean_drift:.3} from n={} to n={} ({summary})", w[0].0, w[1].0);
        ensure!(var_drift < 0.15, "variance drift {var_drift:.3} from n={} to n={} ({summary})", w[0].0, w[1].0);
    }
    let skew = stats[2].3;
    ensure!(skew < 0.0, "drift < 15% holds, but skewness at n=200 is {skew:.3}, not negative ({summary})");
    Ok(summary)
}

fn main() -> ExitCode {
    let criteria: [(&str, &str, fn() -> Outcome); 8] = [
        ("AC1", "generating-series factorization", ac1),
        ("AC2", "step identities", ac2),
        ("AC3", "character consistency", ac3),
        ("AC4", "Greene partial sums", ac4),
        ("AC5", "bijection round trips", ac5),
        ("AC6", "exact probability factorization", ac6),
        ("AC7", "Monte Carlo factorization", ac7),
        ("AC8", "fluctuation trend", ac8),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (id, name, check) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| id.contains(f.as_str()) || name.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {id} {name}: {detail} [{secs:.1} s]"),
            Err(reason) => {
                failed += 1;
                println!("FAIL {id} {name}: {reason} [{secs:.1} s]");
            }
        }
    }
    if failed > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
