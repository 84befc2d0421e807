use std::time::Instant;

use clap::{Args, ValueEnum};
use lppqs::characters::{littlewood_sides, okada_product};
use lppqs::growth::{greene_oracle, grow_grid, LocalRuleInput, PathDirection, Rule};
use lppqs::lpp::{
    bz_forward, bz_inverse, generating_series, p2l_forward, p2l_inverse, Filling, Geometry, GeometryKind,
};
use lppqs::partitions::interlacing_above;
use lppqs::Partition;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    Theorem,
    Okada,
    Stembridge,
    Greene,
    Roundtrips,
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Scope::All, env = "LPPQS_SCOPE")]
    scope: Scope,
    /// Number of variables; default runs the built-in range.
    #[arg(long, env = "LPPQS_N")]
    n: Option<usize>,
    /// Bound on the passage time or first part; default runs the built-in range.
    #[arg(long, env = "LPPQS_U")]
    u: Option<u64>,
    /// Random cases for the greene and roundtrips scopes.
    #[arg(long, default_value_t = 200, env = "LPPQS_TRIALS")]
    trials: usize,
    /// Largest matrix dimension for the greene scope.
    #[arg(long, default_value_t = 5)]
    max_dim: usize,
    #[arg(long, default_value_t = 0, env = "LPPQS_SEED")]
    seed: u64,
}

struct Report {
    failures: usize,
}

impl Report {
    fn line(&mut self, ok: bool, name: &str, start: Instant) {
        if !ok {
            self.failures += 1;
        }
        let status = if ok { "PASS" } else { "FAIL" };
        println!("{status} {name} ({:.1} ms)", start.elapsed().as_secs_f64() * 1e3);
    }
}

fn instances(n: Option<usize>, u: Option<u64>, ns: &[usize], us: &[u64]) -> Vec<(usize, u64)> {
    let ns = n.map_or_else(|| ns.to_vec(), |n| vec![n]);
    let us = u.map_or_else(|| us.to_vec(), |u| vec![u]);
    ns.iter().flat_map(|&n| us.iter().map(move |&u| (n, u))).collect()
}

fn geometry(kind: GeometryKind, n: usize) -> Result<Geometry, CliError> {
    Ok(Geometry::new(kind, n)?)
}

fn theorem(args: &VerifyArgs, budget: u64, report: &mut Report) -> Result<(), CliError> {
    let list = match (args.n, args.u) {
        (None, None) => vec![(1, 2), (1, 4), (2, 2), (2, 4), (3, 2)],
        (n, u) => instances(n, u, &[1, 2], &[2, 4]),
    };
    for (n, u) in list {
        if u % 2 != 0 {
            return Err(CliError::Usage(format!("the factorization needs even u, got {u}")));
        }
        let start = Instant::now();
        let hlr = generating_series(geometry(GeometryKind::P2hlr, n)?, u, budget)?;
        let pr = generating_series(geometry(GeometryKind::P2pr, n)?, u, budget)?;
        let l = generating_series(geometry(GeometryKind::P2l, n)?, u / 2, budget)?;
        let product = &pr * &l;
        report.line(hlr == product, &format!("theorem n={n} u={u}"), start);
        println!("  p2hlr:   {hlr}");
        println!("  product: {product}");
    }
    Ok(())
}

fn okada(args: &VerifyArgs, report: &mut Report) {
    for (n, u) in instances(args.n, args.u, &[1, 2, 3], &[0, 1, 2, 3, 4, 5, 6]) {
        let start = Instant::now();
        let (lhs, rhs) = okada_product(u, n);
        report.line(lhs == rhs, &format!("okada n={n} u={u}"), start);
    }
}

fn stembridge(args: &VerifyArgs, report: &mut Report) -> Result<(), CliError> {
    for (n, u) in instances(args.n, args.u, &[1, 2, 3], &[0, 2, 4, 6]) {
        if u % 2 != 0 {
            return Err(CliError::Usage(format!("the bounded Littlewood identities need even u, got {u}")));
        }
        for even_rows in [false, true] {
            let start = Instant::now();
            let (sum, product) = littlewood_sides(u, n, even_rows)?;
            let which = if even_rows { "even-rows" } else { "all-rows" };
            report.line(sum == product, &format!("stembridge {which} n={n} u={u}"), start);
        }
    }
    Ok(())
}

fn partial_sum(p: &Partition, k: usize) -> u64 {
    p.parts().iter().take(k).sum()
}

fn greene(args: &VerifyArgs, report: &mut Report) -> Result<(), CliError> {
    if args.max_dim == 0 || args.max_dim * args.max_dim > 64 {
        return Err(CliError::Usage(format!("--max-dim must be between 1 and 8, got {}", args.max_dim)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let start = Instant::now();
    let mut bad = 0;
    for _ in 0..args.trials {
        let (m, n) = (rng.gen_range(1..=args.max_dim), rng.gen_range(1..=args.max_dim));
        let matrix: Vec<Vec<u64>> = (0..m).map(|_| (0..n).map(|_| rng.gen_range(0..=4)).collect()).collect();
        let row = grow_grid(&matrix, Rule::Row)?;
        let col = grow_grid(&matrix, Rule::Col)?;
        for k in 1..=m.min(n) {
            if partial_sum(row.corner(), k) != greene_oracle(&matrix, k, PathDirection::UpRight)?
                || partial_sum(col.corner(), k) != greene_oracle(&matrix, k, PathDirection::DownRight)?
            {
                bad += 1;
                eprintln!("greene mismatch at k={k} for {matrix:?}");
            }
        }
    }
    report.line(bad == 0, &format!("greene trials={} max-dim={}", args.trials, args.max_dim), start);
    Ok(())
}

fn random_filling(rng: &mut ChaCha8Rng, kind: GeometryKind, n: usize, max_w: u64) -> Result<Filling, CliError> {
    let g = geometry(kind, n)?;
    let values: Vec<u64> = (0..g.num_squares()).map(|_| rng.gen_range(0..=max_w)).collect();
    Ok(Filling::from_values(g, &values)?)
}

fn roundtrips(args: &VerifyArgs, report: &mut Report) -> Result<(), CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);

    for rule in [Rule::Row, Rule::Col] {
        let start = Instant::now();
        let mut ok = true;
        for _ in 0..args.trials {
            let len = rng.gen_range(0..=3);
            let mut parts: Vec<u64> = (0..len).map(|_| rng.gen_range(0..=4)).collect();
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let kappa = Partition::new(parts)?;
            let above = interlacing_above(&kappa, kappa.first() + 3);
            let alpha = above[rng.gen_range(0..above.len())].clone();
            let beta = above[rng.gen_range(0..above.len())].clone();
            let g = rng.gen_range(0..=5);
            let nu = rule.apply(&LocalRuleInput::new(alpha.clone(), beta.clone(), kappa.clone(), g))?;
            ok &= kappa.size() + nu.size() == alpha.size() + beta.size() + g;
            ok &= rule.invert(&alpha, &beta, &nu)? == (kappa, g);
        }
        report.line(ok, &format!("roundtrip {rule:?} local rule trials={}", args.trials), start);
    }

    let start = Instant::now();
    let mut ok = true;
    for _ in 0..args.trials {
        let n = args.n.unwrap_or_else(|| rng.gen_range(1..=3));
        let w = random_filling(&mut rng, GeometryKind::P2hlr, n, 2)?;
        let u = args.u.unwrap_or_else(|| w.lpp_time() + rng.gen_range(0..=2)).max(w.lpp_time());
        let z = bz_forward(&w, u)?;
        ok &= z.rows().iter().flatten().all(|&v| v <= u);
        ok &= bz_inverse(&z, u)? == w;
    }
    report.line(ok, &format!("roundtrip p2hlr bijection trials={}", args.trials), start);

    let start = Instant::now();
    let mut ok = true;
    for _ in 0..args.trials {
        let n = args.n.unwrap_or_else(|| rng.gen_range(1..=4));
        let w = random_filling(&mut rng, GeometryKind::P2l, n, 3)?;
        let z = p2l_forward(&w)?;
        ok &= z.shape().has_even_rows() && z.shape().first() == 2 * w.lpp_time();
        ok &= p2l_inverse(&z)? == w;
    }
    report.line(ok, &format!("roundtrip p2l bijection trials={}", args.trials), start);
    Ok(())
}

pub fn run(args: &VerifyArgs, budget: u64) -> Result<(), CliError> {
    let mut report = Report { failures: 0 };
    let all = args.scope == Scope::All;
    if all || args.scope == Scope::Theorem {
        theorem(args, budget, &mut report)?;
    }
    if all || args.scope == Scope::Okada {
        okada(args, &mut report);
    }
    if all || args.scope == Scope::Stembridge {
        stembridge(args, &mut report)?;
    }
    if all || args.scope == Scope::Greene {
        greene(args, &mut report)?;
    }
    if all || args.scope == Scope::Roundtrips {
        roundtrips(args, &mut report)?;
    }
    if report.failures > 0 {
        return Err(CliError::Math(format!("{} check(s) failed", report.failures)));
    }
    Ok(())
}
