use std::fmt;

use serde::{Deserialize, Serialize};

use super::geometry::{Geometry, GeometryKind};
use crate::error::{Error, Result};
use crate::poly::LaurentPolynomial;

/// Non-negative integer weights on the squares of a geometry. Stored densely
/// over the bounding box; squares outside the domain always hold zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Filling {
    geometry: Geometry,
    grid: Vec<u64>,
}

impl Filling {
    pub fn zero(geometry: Geometry) -> Self {
        Filling { geometry, grid: vec![0; geometry.width() * geometry.height()] }
    }

    /// Builds a filling from one value per square, in the order of
    /// [`Geometry::squares`].
    pub fn from_values(geometry: Geometry, values: &[u64]) -> Result<Self> {
        let squares = geometry.squares();
        if squares.len() != values.len() {
            return Err(Error::InvalidFilling(format!(
                "{geometry} has {} squares, got {} values",
                squares.len(),
                values.len()
            )));
        }
        let mut f = Filling::zero(geometry);
        for (&(i, j), &w) in squares.iter().zip(values) {
            let idx = f.index(i, j);
            f.grid[idx] = w;
        }
        Ok(f)
    }

    fn index(&self, i: usize, j: usize) -> usize {
        (j - 1) * self.geometry.width() + (i - 1)
    }

    pub fn geometry(&self) -> Geometry {
        self.geometry
    }

    /// Weight of square `(i, j)`; zero outside the domain.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        if self.geometry.contains(i, j) {
            self.grid[self.index(i, j)]
        } else {
            0
        }
    }

    pub fn set(&mut self, i: usize, j: usize, w: u64) -> Result<()> {
        if !self.geometry.contains(i, j) {
            return Err(Error::InvalidFilling(format!("square ({i},{j}) is outside {}", self.geometry)));
        }
        let idx = self.index(i, j);
        self.grid[idx] = w;
        Ok(())
    }

    /// Values in the order of [`Geometry::squares`].
    pub fn values(&self) -> Vec<u64> {
        self.geometry.squares().into_iter().map(|(i, j)| self.get(i, j)).collect()
    }

    /// Last passage time: the largest total weight of an up-right path of
    /// squares from `(1,1)` to a terminal square of the geometry.
    pub fn lpp_time(&self) -> u64 {
        let g = self.geometry;
        let mut best = vec![0u64; self.grid.len()];
        let mut time = 0;
        for (i, j) in g.squares() {
            let left = if g.contains(i - 1, j) { best[self.index(i - 1, j)] } else { 0 };
            let down = if j > 1 && g.contains(i, j - 1) { best[self.index(i, j - 1)] } else { 0 };
            let here = left.max(down) + self.get(i, j);
            best[self.index(i, j)] = here;
            if g.is_terminal(i, j) {
                time = time.max(here);
            }
        }
        time
    }

    /// Exponents of the filling's weight monomial.
    pub fn weight_exponents(&self) -> Vec<i32> {
        let g = self.geometry;
        let mut e = vec![0i32; g.n];
        for (i, j) in g.squares() {
            let w = self.get(i, j) as i32;
            if w == 0 {
                continue;
            }
            for (acc, d) in e.iter_mut().zip(g.square_exponents(i, j)) {
                *acc += d * w;
            }
        }
        e
    }

    pub fn weight_of(&self) -> LaurentPolynomial {
        LaurentPolynomial::monomial(&self.weight_exponents(), 1)
    }

    /// Sum of column `i` over the domain.
    pub fn column_sum(&self, i: usize) -> u64 {
        (1..=self.geometry.height()).map(|j| self.get(i, j)).sum()
    }

    /// Sum of row `j` over the domain.
    pub fn row_sum(&self, j: usize) -> u64 {
        (1..=self.geometry.width()).map(|i| self.get(i, j)).sum()
    }

    /// Reads the text grid format: one line per row, top row first,
    /// whitespace-separated integers, `-` for squares outside the domain.
    /// Blank lines and lines starting with `#` are ignored.
    pub fn parse_grid(kind: GeometryKind, text: &str) -> Result<Self> {
        let lines: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect();
        let n = match kind {
            GeometryKind::P2hlr if lines.len() % 2 == 0 => lines.len() / 2,
            GeometryKind::P2hlr => {
                return Err(Error::Parse(format!("p2hlr grids have an even number of rows, got {}", lines.len())))
            }
            _ => lines.len(),
        };
        let geometry = Geometry::new(kind, n).map_err(|_| Error::Parse("empty grid".into()))?;
        let mut filling = Filling::zero(geometry);
        for (row, line) in lines.iter().enumerate() {
            let j = geometry.height() - row;
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != geometry.width() {
                return Err(Error::Parse(format!(
                    "row {j} has {} entries, expected {}",
                    tokens.len(),
                    geometry.width()
                )));
            }
            for (col, tok) in tokens.iter().enumerate() {
                let i = col + 1;
                match (*tok, geometry.contains(i, j)) {
                    ("-", false) => {}
                    ("-", true) => return Err(Error::Parse(format!("square ({i},{j}) is in the domain but marked '-'"))),
                    (_, false) => return Err(Error::Parse(format!("square ({i},{j}) is outside the domain, expected '-'"))),
                    (t, true) => {
                        let w = t.parse::<u64>().map_err(|e| Error::Parse(format!("({i},{j}) {t:?}: {e}")))?;
                        filling.set(i, j, w)?;
                    }
                }
            }
        }
        Ok(filling)
    }
}

impl fmt::Display for Filling {
    /// The text grid format read by [`Filling::parse_grid`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.geometry;
        for j in (1..=g.height()).rev() {
            let cells: Vec<String> = (1..=g.width())
                .map(|i| if g.contains(i, j) { self.get(i, j).to_string() } else { "-".to_string() })
                .collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
