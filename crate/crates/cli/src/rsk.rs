use std::path::PathBuf;

use clap::{Args, ValueEnum};
use lppqs::growth::{grow_grid, ungrow_grid, Rule};
use lppqs::lpp::{bz_forward, bz_inverse, p2l_forward, p2l_inverse, Filling, GeometryKind};
use lppqs::partitions::{GTPattern, SpGTPattern};
use lppqs::Partition;

use crate::error::CliError;
use crate::emit;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RskGeometry {
    /// Half-space rectangle filling and symplectic pattern (row insertion).
    P2hlr,
    /// Triangle filling and pattern with even rows (column insertion).
    P2l,
    /// Plain matrix and its pair of growth chains.
    Matrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    Forward,
    Inverse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RuleArg {
    Row,
    Col,
}

#[derive(Args, Debug)]
pub struct RskArgs {
    /// Input file: a filling grid, a pattern (one row per line) or a matrix.
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = RskGeometry::P2hlr)]
    geometry: RskGeometry,
    #[arg(long, value_enum, default_value_t = DirectionArg::Forward)]
    direction: DirectionArg,
    /// Bound on the pattern entries (p2hlr only; forward defaults to the passage time).
    #[arg(long)]
    u: Option<u64>,
    /// Local rule for the matrix geometry.
    #[arg(long, value_enum, default_value_t = RuleArg::Row)]
    rule: RuleArg,
    /// Apply the map and its inverse, and fail unless the input comes back.
    #[arg(long)]
    roundtrip: bool,
    #[arg(long)]
    output: Option<PathBuf>,
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.starts_with('#'))
}

fn parse_rows(text: &str) -> Result<Vec<Vec<u64>>, CliError> {
    content_lines(text)
        .filter(|l| !l.is_empty())
        .map(|line| {
            line.split_whitespace()
                .map(|t| t.parse::<u64>().map_err(|e| CliError::Usage(format!("{t:?}: {e}"))))
                .collect()
        })
        .collect()
}

/// Two chains of partitions separated by a blank line.
fn parse_chains(text: &str) -> Result<(Vec<Partition>, Vec<Partition>), CliError> {
    let mut blocks: Vec<Vec<Partition>> = vec![Vec::new()];
    for line in content_lines(text) {
        if line.is_empty() {
            if !blocks.last().is_some_and(Vec::is_empty) {
                blocks.push(Vec::new());
            }
        } else {
            blocks.last_mut().expect("non-empty").push(line.parse()?);
        }
    }
    blocks.retain(|b| !b.is_empty());
    match <[Vec<Partition>; 2]>::try_from(blocks) {
        Ok([north, east]) => Ok((north, east)),
        Err(b) => Err(CliError::Usage(format!("expected two chains separated by a blank line, found {}", b.len()))),
    }
}

fn write_chains(north: &[Partition], east: &[Partition]) -> String {
    let mut out = String::new();
    for p in north {
        out.push_str(&format!("{p}\n"));
    }
    out.push('\n');
    for p in east {
        out.push_str(&format!("{p}\n"));
    }
    out
}

fn check(roundtrip: bool, same: bool) -> Result<(), CliError> {
    if roundtrip && !same {
        return Err(CliError::Math("round trip did not reproduce the input".into()));
    }
    Ok(())
}

fn p2hlr(args: &RskArgs, text: &str) -> Result<String, CliError> {
    match args.direction {
        DirectionArg::Forward => {
            let w = Filling::parse_grid(GeometryKind::P2hlr, text)?;
            let u = args.u.unwrap_or_else(|| w.lpp_time());
            let z = bz_forward(&w, u)?;
            check(args.roundtrip, args.roundtrip && bz_inverse(&z, u)? == w)?;
            Ok(z.to_string())
        }
        DirectionArg::Inverse => {
            let z = SpGTPattern::new(parse_rows(text)?)?;
            let u = args.u.ok_or_else(|| CliError::Usage("--u is required for the inverse map".into()))?;
            let w = bz_inverse(&z, u)?;
            check(args.roundtrip, args.roundtrip && bz_forward(&w, u)? == z)?;
            Ok(w.to_string())
        }
    }
}

fn p2l(args: &RskArgs, text: &str) -> Result<String, CliError> {
    match args.direction {
        DirectionArg::Forward => {
            let w = Filling::parse_grid(GeometryKind::P2l, text)?;
            let z = p2l_forward(&w)?;
            check(args.roundtrip, args.roundtrip && p2l_inverse(&z)? == w)?;
            Ok(z.to_string())
        }
        DirectionArg::Inverse => {
            let z = GTPattern::new(parse_rows(text)?)?;
            let w = p2l_inverse(&z)?;
            check(args.roundtrip, args.roundtrip && p2l_forward(&w)? == z)?;
            Ok(w.to_string())
        }
    }
}

fn matrix(args: &RskArgs, text: &str) -> Result<String, CliError> {
    let rule = match args.rule {
        RuleArg::Row => Rule::Row,
        RuleArg::Col => Rule::Col,
    };
    match args.direction {
        DirectionArg::Forward => {
            let m = parse_rows(text)?;
            let grid = grow_grid(&m, rule)?;
            let (north, east) = (grid.north_chain(), grid.east_chain());
            check(args.roundtrip, args.roundtrip && ungrow_grid(&north, &east, rule)? == m)?;
            Ok(write_chains(&north, &east))
        }
        DirectionArg::Inverse => {
            let (north, east) = parse_chains(text)?;
            let m = ungrow_grid(&north, &east, rule)?;
            if args.roundtrip {
                let grid = grow_grid(&m, rule)?;
                check(true, grid.north_chain() == north && grid.east_chain() == east)?;
            }
            Ok(m.iter().map(|row| row.iter().map(u64::to_string).collect::<Vec<_>>().join(" ") + "\n").collect())
        }
    }
}

pub fn run(args: &RskArgs) -> Result<(), CliError> {
    let text = std::fs::read_to_string(&args.input)
        .map_err(|e| CliError::Usage(format!("{}: {e}", args.input.display())))?;
    let out = match args.geometry {
        RskGeometry::P2hlr => p2hlr(args, &text)?,
        RskGeometry::P2l => p2l(args, &text)?,
        RskGeometry::Matrix => matrix(args, &text)?,
    };
    emit(args.output.as_ref(), &out)
}
