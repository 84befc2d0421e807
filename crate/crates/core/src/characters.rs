//! Schur polynomials, symplectic characters and odd orthogonal characters,
//! computed both by Jacobi–Trudi determinants and as tableau generating
//! functions, together with the bounded sums built from them.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::partitions::{gt_patterns, odd_orthogonal_tableaux, partitions_in_box, sp_gt_patterns, Partition};
use crate::poly::{Exponents, LaurentPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `s_λ(x_1, …, x_n)`
    Schur,
    /// `sp_λ(x_1^±, …, x_n^±)`
    Symplectic,
    /// `so^odd_λ(x_1^±, …, x_n^±)`
    OddOrthogonal,
}

impl Family {
    /// The alphabet fed to the complete homogeneous polynomials:
    /// `x_i`; `x_i, x_i^{-1}`; or `x_i, x_i^{-1}, 1`.
    pub fn variables(self, n: usize) -> Vec<Exponents> {
        let unit = |i: usize, p: i32| {
            let mut e: Exponents = SmallVec::from_elem(0, n);
            e[i] = p;
            e
        };
        match self {
            Family::Schur => (0..n).map(|i| unit(i, 1)).collect(),
            Family::Symplectic | Family::OddOrthogonal => {
                let mut v: Vec<Exponents> = (0..n).flat_map(|i| [unit(i, 1), unit(i, -1)]).collect();
                if self == Family::OddOrthogonal {
                    v.push(SmallVec::from_elem(0, n));
                }
                v
            }
        }
    }
}

/// `h_k` of the given monomials; `h_0 = 1` and `h_k = 0` for `k < 0`.
pub fn complete_homogeneous(k: i64, nvars: usize, variables: &[Exponents]) -> LaurentPolynomial {
    if k < 0 {
        return LaurentPolynomial::zero(nvars);
    }
    complete_homogeneous_upto(k as usize, nvars, variables).pop().unwrap()
}

/// `[h_0, h_1, …, h_max]`, via `h_d(v_1..v_m) = h_d(v_1..v_{m-1}) + v_m h_{d-1}(v_1..v_m)`.
pub fn complete_homogeneous_upto(max: usize, nvars: usize, variables: &[Exponents]) -> Vec<LaurentPolynomial> {
    let mut h: Vec<LaurentPolynomial> = (0..=max)
        .map(|d| if d == 0 { LaurentPolynomial::one(nvars) } else { LaurentPolynomial::zero(nvars) })
        .collect();
    for v in variables {
        for d in 1..=max {
            let step = h[d - 1].shift(v);
            h[d] = &h[d] + &step;
        }
    }
    h
}

/// Jacobi–Trudi evaluation for one family and variable count, reusing a
/// single table of complete homogeneous polynomials across shapes.
struct JacobiTrudi {
    family: Family,
    n: usize,
    h: Vec<LaurentPolynomial>,
}

impl JacobiTrudi {
    fn new(family: Family, n: usize, max_degree: usize) -> Self {
        let h = complete_homogeneous_upto(max_degree, n, &family.variables(n));
        JacobiTrudi { family, n, h }
    }

    fn h(&self, k: i64) -> LaurentPolynomial {
        if k < 0 {
            LaurentPolynomial::zero(self.n)
        } else {
            self.h[k as usize].clone()
        }
    }

    fn character(&self, lambda: &Partition) -> Result<LaurentPolynomial> {
        if lambda.len() > self.n {
            return Err(Error::ShapeTooLong { shape: lambda.to_string(), len: lambda.len(), max: self.n });
        }
        let len = lambda.len();
        if len == 0 {
            return Ok(LaurentPolynomial::one(self.n));
        }
        let matrix: Vec<Vec<LaurentPolynomial>> = (1..=len as i64)
            .map(|i| {
                let li = lambda.get(i as usize - 1) as i64;
                (1..=len as i64)
                    .map(|j| match self.family {
                        Family::Schur => self.h(li - i + j),
                        Family::Symplectic => &self.h(li - i + j) + &self.h(li - i - j + 2),
                        Family::OddOrthogonal => &self.h(li - i + j) - &self.h(li - i - j),
                    })
                    .collect()
            })
            .collect();
        let det = determinant(&matrix, self.n);
        match self.family {
            Family::Symplectic => det.try_halve(),
            _ => Ok(det),
        }
    }
}

/// Laplace expansion along rows, memoised over the set of used columns.
fn determinant(matrix: &[Vec<LaurentPolynomial>], nvars: usize) -> LaurentPolynomial {
    let len = matrix.len();
    let mut partial: Vec<Option<LaurentPolynomial>> = vec![None; 1 << len];
    partial[0] = Some(LaurentPolynomial::one(nvars));
    for mask in 0usize..(1 << len) {
        let Some(acc) = partial[mask].take() else { continue };
        let row = mask.count_ones() as usize;
        if row == len {
            partial[mask] = Some(acc);
            continue;
        }
        for col in 0..len {
            if mask & (1 << col) != 0 || matrix[row][col].is_zero() {
                continue;
            }
            let term = &acc * &matrix[row][col];
            let term = if (mask >> col).count_ones() % 2 == 1 { -&term } else { term };
            let next = mask | (1 << col);
            partial[next] = Some(match partial[next].take() {
                Some(p) => &p + &term,
                None => term,
            });
        }
    }
    partial[(1 << len) - 1].take().unwrap_or_else(|| LaurentPolynomial::zero(nvars))
}

fn jt_degree(lambda: &Partition) -> usize {
    lambda.first() as usize + lambda.len()
}

/// The character of `lambda` in `n` variables from its Jacobi–Trudi
/// determinant. The symplectic determinant is halved exactly.
pub fn character_jt(family: Family, lambda: &Partition, n: usize) -> Result<LaurentPolynomial> {
    JacobiTrudi::new(family, n, jt_degree(lambda)).character(lambda)
}

/// The character of `lambda` in `n` variables as a sum over tableaux
/// (Gelfand–Tsetlin patterns for the Schur and symplectic families).
pub fn character_tab(family: Family, lambda: &Partition, n: usize) -> Result<LaurentPolynomial> {
    let monomials: Vec<Vec<i64>> = match family {
        Family::Schur => gt_patterns(n, lambda)?
            .iter()
            .map(|z| z.type_vector().into_iter().map(|t| t as i64).collect())
            .collect(),
        Family::Symplectic => sp_gt_patterns(n, lambda)?.iter().map(|z| z.weight_exponents()).collect(),
        Family::OddOrthogonal => odd_orthogonal_tableaux(n, lambda)?.iter().map(|t| t.weight_exponents()).collect(),
    };
    Ok(LaurentPolynomial::from_terms(
        n,
        monomials.into_iter().map(|e| (e.into_iter().map(|x| x as i32).collect::<Exponents>(), 1)),
    ))
}

fn bounded_sum(family: Family, u: u64, n: usize, keep: impl Fn(&Partition) -> bool + Sync) -> LaurentPolynomial {
    let ctx = JacobiTrudi::new(family, n, u as usize + n);
    let shapes: Vec<Partition> = partitions_in_box(u, n).into_iter().filter(|l| keep(l)).collect();
    shapes
        .par_iter()
        .map(|l| ctx.character(l).expect("shapes in the box fit the variable count"))
        .reduce(|| LaurentPolynomial::zero(n), |a, b| &a + &b)
}

/// `Σ s_λ(x_1, …, x_n)` over `λ_1 <= u`, `ℓ(λ) <= n`, optionally only
/// over partitions whose parts are all even.
pub fn bounded_schur_sum(u: u64, n: usize, even_rows_only: bool) -> LaurentPolynomial {
    bounded_sum(Family::Schur, u, n, |l| !even_rows_only || l.has_even_rows())
}

/// `Σ sp_λ(x_1^±, …, x_n^±)` over `λ_1 <= u`, `ℓ(λ) <= n`.
pub fn bounded_symplectic_sum(u: u64, n: usize) -> LaurentPolynomial {
    bounded_sum(Family::Symplectic, u, n, |_| true)
}

/// Both sides of the bounded symplectic sum identity: the sum
/// `Σ_{λ_1 <= u} sp_λ` and the product `sp_{(s^n)} · so^odd_{(t^n)}` with
/// `s = floor(u/2)`, `t = ceil(u/2)`.
pub fn okada_product(u: u64, n: usize) -> (LaurentPolynomial, LaurentPolynomial) {
    let lhs = bounded_symplectic_sum(u, n);
    let (s, t) = (u / 2, u.div_ceil(2));
    let sp = character_jt(Family::Symplectic, &Partition::rectangle(s, n), n).expect("rectangle fits");
    let so = character_jt(Family::OddOrthogonal, &Partition::rectangle(t, n), n).expect("rectangle fits");
    (lhs, &sp * &so)
}

/// Both sides of the bounded Littlewood identities for `u = 2v`:
/// `Σ_{λ_1 <= u} s_λ = (x_1⋯x_n)^v so^odd_{(v^n)}` and, over even-row
/// `λ`, `Σ s_λ = (x_1⋯x_n)^v sp_{(v^n)}`.
pub fn littlewood_sides(u: u64, n: usize, even_rows_only: bool) -> Result<(LaurentPolynomial, LaurentPolynomial)> {
    if u % 2 != 0 {
        return Err(Error::OutOfRange(format!("the bounded Littlewood identities need even u, got {u}")));
    }
    let v = u / 2;
    let family = if even_rows_only { Family::Symplectic } else { Family::OddOrthogonal };
    let character = character_jt(family, &Partition::rectangle(v, n), n)?;
    Ok((bounded_schur_sum(u, n, even_rows_only), character.shift(&vec![v as i32; n])))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn poly(nvars: usize, terms: &[(&[i32], i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(nvars, terms.iter().map(|(e, c)| (Exponents::from_slice(e), *c)))
    }

    #[test]
    fn complete_homogeneous_examples() {
        let vars = Family::Schur.variables(2);
        assert_eq!(complete_homogeneous(0, 2, &vars), LaurentPolynomial::one(2));
        assert!(complete_homogeneous(-2, 2, &vars).is_zero());
        assert_eq!(complete_homogeneous(2, 2, &vars), poly(2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)]));
        let so = Family::OddOrthogonal.variables(1);
        assert_eq!(complete_homogeneous(1, 1, &so), poly(1, &[(&[1], 1), (&[0], 1), (&[-1], 1)]));
    }

    #[test]
    fn small_characters() {
        assert_eq!(character_jt(Family::Schur, &p(&[]), 3).unwrap(), LaurentPolynomial::one(3));
        assert_eq!(character_jt(Family::Symplectic, &p(&[1]), 1).unwrap(), poly(1, &[(&[1], 1), (&[-1], 1)]));
        assert_eq!(
            character_jt(Family::OddOrthogonal, &p(&[1]), 1).unwrap(),
            poly(1, &[(&[1], 1), (&[0], 1), (&[-1], 1)])
        );
        assert_eq!(character_tab(Family::Schur, &p(&[1]), 2).unwrap(), poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]));
        assert_eq!(character_tab(Family::Symplectic, &p(&[1]), 1).unwrap(), poly(1, &[(&[1], 1), (&[-1], 1)]));
        assert_eq!(
            character_tab(Family::Schur, &p(&[2]), 2).unwrap(),
            poly(2, &[(&[2, 0], 1), (&[1, 1], 1), (&[0, 2], 1)])
        );
        assert!(character_jt(Family::Schur, &p(&[1, 1]), 1).is_err());
    }

    #[test]
    fn specialization_counts_patterns() {
        let s = character_jt(Family::Schur, &p(&[2, 1]), 2).unwrap();
        assert_eq!(s.coefficient_sum(), 2.into());
        assert_eq!(gt_patterns(2, &p(&[2, 1])).unwrap().len(), 2);
    }

    #[test]
    fn determinant_matches_tableaux() {
        for family in [Family::Schur, Family::Symplectic, Family::OddOrthogonal] {
            for n in 1..=3 {
                for lambda in partitions_in_box(3, n) {
                    assert_eq!(
                        character_jt(family, &lambda, n).unwrap(),
                        character_tab(family, &lambda, n).unwrap(),
                        "{family:?} {lambda} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn bounded_sums() {
        assert_eq!(bounded_schur_sum(0, 2, false), LaurentPolynomial::one(2));
        assert_eq!(bounded_schur_sum(2, 1, false), poly(1, &[(&[0], 1), (&[1], 1), (&[2], 1)]));
        assert_eq!(bounded_schur_sum(2, 1, true), poly(1, &[(&[0], 1), (&[2], 1)]));
    }

    #[test]
    fn okada_small_cases() {
        let (l, r) = okada_product(0, 2);
        assert_eq!(l, LaurentPolynomial::one(2));
        assert_eq!(r, LaurentPolynomial::one(2));
        let (l, r) = okada_product(2, 1);
        let expected = poly(1, &[(&[2], 1), (&[1], 1), (&[0], 2), (&[-1], 1), (&[-2], 1)]);
        assert_eq!(l, expected);
        assert_eq!(r, expected);
        let (l, r) = okada_product(1, 1);
        assert_eq!(l, poly(1, &[(&[1], 1), (&[0], 1), (&[-1], 1)]));
        assert_eq!(l, r);
    }

    #[test]
    fn littlewood_small_cases() {
        for n in 1..=2 {
            for even in [false, true] {
                let (l, r) = littlewood_sides(4, n, even).unwrap();
                assert_eq!(l, r, "n={n} even={even}");
            }
        }
        assert!(littlewood_sides(3, 1, true).is_err());
    }
}
