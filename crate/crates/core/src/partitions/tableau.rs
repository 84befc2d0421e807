use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Partition;
use crate::error::{Error, Result};

/// A tableau symbol. The total order is `1 < 1̄ < 2 < 2̄ < … < n < n̄ < ∞`;
/// semi-standard tableaux only use the unbarred letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Letter {
    Plain(u32),
    Bar(u32),
    Infinity,
}

impl Letter {
    fn key(self) -> u64 {
        match self {
            Letter::Plain(i) => 2 * i as u64 - 1,
            Letter::Bar(i) => 2 * i as u64,
            Letter::Infinity => u64::MAX,
        }
    }

    /// Position of the letter in the interlacing chain: `i ↦ 2i-1`,
    /// `ī ↦ 2i` (symplectic) or `i ↦ i` (semi-standard).
    fn chain_index(self, kind: TableauKind) -> usize {
        match (kind, self) {
            (TableauKind::Semistandard, Letter::Plain(i)) => i as usize,
            (_, l) => l.key() as usize,
        }
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Plain(i) => write!(f, "{i}"),
            Letter::Bar(i) => write!(f, "{i}'"),
            Letter::Infinity => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TableauKind {
    /// Semi-standard Young tableaux on `1 < … < n`.
    Semistandard,
    /// King's symplectic tableaux on `1 < 1̄ < … < n < n̄`.
    Symplectic,
    /// Sundaram's odd orthogonal tableaux on `1 < 1̄ < … < n < n̄ < ∞`.
    OddOrthogonal,
}

impl TableauKind {
    /// The alphabet in increasing order for `n` letters.
    pub fn alphabet(self, n: usize) -> Vec<Letter> {
        let n = n as u32;
        match self {
            TableauKind::Semistandard => (1..=n).map(Letter::Plain).collect(),
            TableauKind::Symplectic | TableauKind::OddOrthogonal => {
                let mut a: Vec<Letter> = (1..=n).flat_map(|i| [Letter::Plain(i), Letter::Bar(i)]).collect();
                if self == TableauKind::OddOrthogonal {
                    a.push(Letter::Infinity);
                }
                a
            }
        }
    }

    fn admits(self, letter: Letter, n: usize) -> bool {
        let n = n as u32;
        match (self, letter) {
            (_, Letter::Plain(i)) => (1..=n).contains(&i),
            (TableauKind::Semistandard, _) => false,
            (_, Letter::Bar(i)) => (1..=n).contains(&i),
            (TableauKind::OddOrthogonal, Letter::Infinity) => true,
            (TableauKind::Symplectic, Letter::Infinity) => false,
        }
    }
}

fn column_ok(above: Letter, below: Letter) -> bool {
    above < below || (above == Letter::Infinity && below == Letter::Infinity)
}

/// A filling of a Young diagram, validated against its kind's conditions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tableau {
    kind: TableauKind,
    n: usize,
    shape: Partition,
    rows: Vec<Vec<Letter>>,
}

impl Tableau {
    /// Validates rows weakly increasing, columns strictly increasing except
    /// for stacked `∞`s, the symplectic condition (row `r` holds letters
    /// `>= r`) for the barred kinds, and at most one `∞` per row for odd
    /// orthogonal tableaux. The `∞` cells therefore form a vertical strip.
    pub fn new(kind: TableauKind, n: usize, rows: Vec<Vec<Letter>>) -> Result<Self> {
        let mut rows = rows;
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        let shape = Partition::new(rows.iter().map(|r| r.len() as u64).collect())
            .map_err(|_| Error::InvalidTableau("row lengths are not a partition".into()))?;
        for (r, row) in rows.iter().enumerate() {
            for (c, &letter) in row.iter().enumerate() {
                if !kind.admits(letter, n) {
                    return Err(Error::InvalidTableau(format!("letter {letter} not in alphabet for n={n}")));
                }
                if c > 0 && row[c - 1] > letter {
                    return Err(Error::InvalidTableau(format!("row {} decreases at column {}", r + 1, c + 1)));
                }
                if r > 0 && !column_ok(rows[r - 1][c], letter) {
                    return Err(Error::InvalidTableau(format!("column {} not strict at row {}", c + 1, r + 1)));
                }
                if kind != TableauKind::Semistandard && letter < Letter::Plain(r as u32 + 1) {
                    return Err(Error::InvalidTableau(format!("symplectic condition fails in row {}", r + 1)));
                }
            }
            if kind == TableauKind::OddOrthogonal && row.iter().filter(|&&l| l == Letter::Infinity).count() > 1 {
                return Err(Error::InvalidTableau(format!("two infinities in row {}", r + 1)));
            }
        }
        Ok(Tableau { kind, n, shape, rows })
    }

    pub fn kind(&self) -> TableauKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.rows.iter().flatten().filter(|&&l| l == letter).count()
    }

    /// Exponent of each `x_i` in the tableau's monomial: the multiplicity of
    /// `i` for semi-standard tableaux, `#i - #ī` otherwise.
    pub fn weight_exponents(&self) -> Vec<i64> {
        let mut e = vec![0i64; self.n];
        for &l in self.rows.iter().flatten() {
            match l {
                Letter::Plain(i) => e[i as usize - 1] += 1,
                Letter::Bar(i) => e[i as usize - 1] -= 1,
                Letter::Infinity => {}
            }
        }
        e
    }

    /// The chain `λ^(0) ⊆ λ^(1) ⊆ …` where `λ^(k)` is the shape occupied by
    /// letters of chain index at most `k`. Has `n+1` (semi-standard) or
    /// `2n+1` entries; `∞` is not part of the chain.
    pub(crate) fn chain(&self) -> Vec<Partition> {
        let steps = match self.kind {
            TableauKind::Semistandard => self.n,
            _ => 2 * self.n,
        };
        (0..=steps)
            .map(|k| {
                Partition::from_decreasing(
                    self.rows
                        .iter()
                        .map(|row| row.iter().filter(|l| **l != Letter::Infinity && l.chain_index(self.kind) <= k).count() as u64)
                        .collect(),
                )
            })
            .collect()
    }

    /// Labels the skew shapes of a chain of partitions with successive
    /// letters of the alphabet.
    pub(crate) fn from_chain(kind: TableauKind, n: usize, chain: &[Partition]) -> Result<Self> {
        let alphabet = kind.alphabet(n);
        let shape = chain.last().cloned().unwrap_or_default();
        let mut rows: Vec<Vec<Letter>> = shape.parts().iter().map(|&p| Vec::with_capacity(p as usize)).collect();
        for (k, pair) in chain.windows(2).enumerate() {
            let (inner, outer) = (&pair[0], &pair[1]);
            if !outer.contains(inner) {
                return Err(Error::InvalidPattern(format!("{inner} not contained in {outer}")));
            }
            for (r, row) in rows.iter_mut().enumerate() {
                for _ in inner.get(r)..outer.get(r) {
                    row.push(alphabet[k]);
                }
            }
        }
        Tableau::new(kind, n, rows)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Letter::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// All odd orthogonal tableaux of the given shape on `n` letter pairs, in
/// lexicographic order of their row-major reading words.
pub fn odd_orthogonal_tableaux(n: usize, shape: &Partition) -> Result<Vec<Tableau>> {
    if shape.len() > n {
        return Err(Error::ShapeTooLong { shape: shape.to_string(), len: shape.len(), max: n });
    }
    let alphabet = TableauKind::OddOrthogonal.alphabet(n);
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut rows: Vec<Vec<Letter>> = shape.parts().iter().map(|_| Vec::new()).collect();
    let mut out = Vec::new();
    fill_oot(&cells, 0, &alphabet, &mut rows, &mut out, n);
    Ok(out)
}

fn fill_oot(
    cells: &[(usize, usize)],
    at: usize,
    alphabet: &[Letter],
    rows: &mut Vec<Vec<Letter>>,
    out: &mut Vec<Tableau>,
    n: usize,
) {
    let Some(&(r, c)) = cells.get(at) else {
        out.push(Tableau {
            kind: TableauKind::OddOrthogonal,
            n,
            shape: Partition::from_decreasing(rows.iter().map(|r| r.len() as u64).collect()),
            rows: rows.clone(),
        });
        return;
    };
    let has_infinity = rows[r].contains(&Letter::Infinity);
    for &letter in alphabet {
        if letter < Letter::Plain(r as u32 + 1) {
            continue;
        }
        if c > 0 && rows[r][c - 1] > letter {
            continue;
        }
        if r > 0 && !column_ok(rows[r - 1][c], letter) {
            continue;
        }
        if letter == Letter::Infinity && has_infinity {
            continue;
        }
        rows[r].push(letter);
        fill_oot(cells, at + 1, alphabet, rows, out, n);
        rows[r].pop();
    }
}
