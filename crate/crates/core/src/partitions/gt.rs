use std::fmt;

use serde::{Deserialize, Serialize};

use super::tableau::{odd_orthogonal_tableaux, Tableau, TableauKind};
use super::{interlacing_below, Partition};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PatternKind {
    Ordinary,
    Symplectic,
    OddOrthogonal,
}

/// Row lengths: `i` for ordinary patterns, `ceil(i/2)` for symplectic ones.
fn row_len(symplectic: bool, i: usize) -> usize {
    if symplectic {
        i.div_ceil(2)
    } else {
        i
    }
}

fn validate_rows(rows: &[Vec<u64>], symplectic: bool) -> Result<()> {
    for (idx, row) in rows.iter().enumerate() {
        let i = idx + 1;
        if row.len() != row_len(symplectic, i) {
            return Err(Error::InvalidPattern(format!(
                "row {i} has {} entries, expected {}",
                row.len(),
                row_len(symplectic, i)
            )));
        }
        if row.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPattern(format!("row {i} is not weakly decreasing")));
        }
    }
    for (idx, pair) in rows.windows(2).enumerate() {
        let upper = Partition::from_decreasing(pair[0].clone());
        let lower = Partition::from_decreasing(pair[1].clone());
        if !upper.interlaces(&lower) {
            return Err(Error::InvalidPattern(format!("rows {} and {} do not interlace", idx + 1, idx + 2)));
        }
    }
    Ok(())
}

fn chain_of(rows: &[Vec<u64>]) -> Vec<Partition> {
    std::iter::once(Partition::empty())
        .chain(rows.iter().map(|r| Partition::from_decreasing(r.clone())))
        .collect()
}

fn rows_of(chain: &[Partition], symplectic: bool) -> Result<Vec<Vec<u64>>> {
    if chain.first().is_some_and(|p| !p.is_empty()) {
        return Err(Error::InvalidPattern("chain must start at the empty partition".into()));
    }
    chain
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, p)| {
            let len = row_len(symplectic, i);
            if p.len() > len {
                return Err(Error::InvalidPattern(format!("λ^({i}) = {p} has more than {len} parts")));
            }
            Ok(p.padded(len))
        })
        .collect()
}

fn type_of(rows: &[Vec<u64>]) -> Vec<u64> {
    let sums: Vec<u64> = rows.iter().map(|r| r.iter().sum()).collect();
    (0..sums.len()).map(|i| sums[i] - if i == 0 { 0 } else { sums[i - 1] }).collect()
}

fn write_rows(f: &mut fmt::Formatter<'_>, rows: &[Vec<u64>]) -> fmt::Result {
    for row in rows {
        let cells: Vec<String> = row.iter().map(u64::to_string).collect();
        writeln!(f, "{}", cells.join(" "))?;
    }
    Ok(())
}

/// A Gelfand–Tsetlin pattern of height `n`: row `i` has `i` entries and
/// consecutive rows interlace.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GTPattern {
    rows: Vec<Vec<u64>>,
}

impl GTPattern {
    pub fn new(rows: Vec<Vec<u64>>) -> Result<Self> {
        validate_rows(&rows, false)?;
        Ok(GTPattern { rows })
    }

    /// Rebuilds the pattern from `∅ = λ^(0) ≺ λ^(1) ≺ … ≺ λ^(n)`.
    pub fn from_chain(chain: &[Partition]) -> Result<Self> {
        GTPattern::new(rows_of(chain, false)?)
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        self.rows.last().map(|r| Partition::from_decreasing(r.clone())).unwrap_or_default()
    }

    pub fn chain(&self) -> Vec<Partition> {
        chain_of(&self.rows)
    }

    /// `type(z)_i = |row i| - |row i-1|`, the number of `i`s in the tableau.
    pub fn type_vector(&self) -> Vec<u64> {
        type_of(&self.rows)
    }

    pub fn to_tableau(&self) -> Tableau {
        Tableau::from_chain(TableauKind::Semistandard, self.height(), &self.chain())
            .expect("a valid pattern labels a semi-standard tableau")
    }

    pub fn from_tableau(t: &Tableau) -> Result<Self> {
        if t.kind() != TableauKind::Semistandard {
            return Err(Error::InvalidTableau(format!("expected a semi-standard tableau, got {:?}", t.kind())));
        }
        GTPattern::from_chain(&t.chain())
    }
}

impl fmt::Display for GTPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows)
    }
}

/// A symplectic Gelfand–Tsetlin pattern of height `2n`: row `i` has
/// `ceil(i/2)` entries, and entries past a row's end read as zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SpGTPattern {
    rows: Vec<Vec<u64>>,
}

impl SpGTPattern {
    pub fn new(rows: Vec<Vec<u64>>) -> Result<Self> {
        if rows.len() % 2 != 0 {
            return Err(Error::InvalidPattern(format!("symplectic pattern has odd height {}", rows.len())));
        }
        validate_rows(&rows, true)?;
        Ok(SpGTPattern { rows })
    }

    pub fn from_chain(chain: &[Partition]) -> Result<Self> {
        SpGTPattern::new(rows_of(chain, true)?)
    }

    /// Number of variables, i.e. half the height.
    pub fn n(&self) -> usize {
        self.rows.len() / 2
    }

    pub fn height(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        self.rows.last().map(|r| Partition::from_decreasing(r.clone())).unwrap_or_default()
    }

    pub fn chain(&self) -> Vec<Partition> {
        chain_of(&self.rows)
    }

    /// Length `2n`; entry `2i-1` counts `i` and entry `2i` counts `ī` in the
    /// corresponding symplectic tableau.
    pub fn type_vector(&self) -> Vec<u64> {
        type_of(&self.rows)
    }

    /// `type_{2i-1} - type_{2i}` for each `i`, the exponent of `x_i` in
    /// the symplectic character.
    pub fn weight_exponents(&self) -> Vec<i64> {
        self.type_vector().chunks(2).map(|c| c[0] as i64 - c[1] as i64).collect()
    }

    pub fn to_tableau(&self) -> Tableau {
        Tableau::from_chain(TableauKind::Symplectic, self.n(), &self.chain())
            .expect("a valid symplectic pattern labels a symplectic tableau")
    }

    pub fn from_tableau(t: &Tableau) -> Result<Self> {
        if t.kind() != TableauKind::Symplectic {
            return Err(Error::InvalidTableau(format!("expected a symplectic tableau, got {:?}", t.kind())));
        }
        SpGTPattern::from_chain(&t.chain())
    }
}

impl fmt::Display for SpGTPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_rows(f, &self.rows)
    }
}

fn enumerate_rows(rows: usize, shape: &Partition, symplectic: bool) -> Result<Vec<Vec<Vec<u64>>>> {
    let bottom = row_len(symplectic, rows);
    if shape.len() > bottom {
        return Err(Error::ShapeTooLong { shape: shape.to_string(), len: shape.len(), max: bottom });
    }
    if rows == 0 {
        return Ok(vec![Vec::new()]);
    }
    // Partial patterns are built from the bottom row upwards.
    let mut partial: Vec<Vec<Partition>> = vec![vec![shape.clone()]];
    for i in (1..rows).rev() {
        let len = row_len(symplectic, i);
        partial = partial
            .into_iter()
            .flat_map(|stack| {
                let top = stack.last().unwrap().clone();
                interlacing_below(&top, len).into_iter().map(move |p| {
                    let mut s = stack.clone();
                    s.push(p);
                    s
                })
            })
            .collect();
    }
    let mut out: Vec<Vec<Vec<u64>>> = partial
        .into_iter()
        .map(|stack| {
            stack
                .into_iter()
                .rev()
                .enumerate()
                .map(|(idx, p)| p.padded(row_len(symplectic, idx + 1)))
                .collect()
        })
        .collect();
    out.sort();
    Ok(out)
}

/// `GT_n(shape)` in lexicographic order of row-major entries.
pub fn gt_patterns(n: usize, shape: &Partition) -> Result<Vec<GTPattern>> {
    Ok(enumerate_rows(n, shape, false)?.into_iter().map(|rows| GTPattern { rows }).collect())
}

/// `SpGT_{2n}(shape)` in lexicographic order of row-major entries.
pub fn sp_gt_patterns(n: usize, shape: &Partition) -> Result<Vec<SpGTPattern>> {
    Ok(enumerate_rows(2 * n, shape, true)?.into_iter().map(|rows| SpGTPattern { rows }).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pattern {
    Ordinary(GTPattern),
    Symplectic(SpGTPattern),
    /// Odd orthogonal objects are enumerated in tableau form.
    OddOrthogonal(Tableau),
}

/// Enumerates patterns of the given kind. `height` is `n` for ordinary
/// patterns and `2n` for the symplectic and odd orthogonal kinds.
pub fn enumerate_patterns(kind: PatternKind, height: usize, shape: &Partition) -> Result<Vec<Pattern>> {
    match kind {
        PatternKind::Ordinary => Ok(gt_patterns(height, shape)?.into_iter().map(Pattern::Ordinary).collect()),
        PatternKind::Symplectic | PatternKind::OddOrthogonal if height % 2 != 0 => {
            Err(Error::InvalidPattern(format!("{kind:?} patterns need an even height, got {height}")))
        }
        PatternKind::Symplectic => Ok(sp_gt_patterns(height / 2, shape)?.into_iter().map(Pattern::Symplectic).collect()),
        PatternKind::OddOrthogonal => Ok(odd_orthogonal_tableaux(height / 2, shape)?
            .into_iter()
            .map(Pattern::OddOrthogonal)
            .collect()),
    }
}
