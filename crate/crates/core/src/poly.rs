//! Sparse multivariate Laurent polynomials with big-integer coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exponent vector of a monomial; entries may be negative.
pub type Exponents = SmallVec<[i32; 8]>;

/// A Laurent polynomial in `x_1, …, x_n` over the integers. Zero
/// coefficients are never stored, and terms are kept ordered by exponent
/// vector so that equality and the text form are canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    nvars: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

impl LaurentPolynomial {
    pub fn zero(nvars: usize) -> Self {
        LaurentPolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(&vec![0; nvars], c)
    }

    pub fn monomial(exponents: &[i32], c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exponents::from_slice(exponents), c);
        }
        LaurentPolynomial { nvars: exponents.len(), terms }
    }

    /// `x_i^power` (zero-based `i`).
    pub fn variable(nvars: usize, i: usize, power: i32) -> Self {
        let mut e = vec![0; nvars];
        e[i] = power;
        Self::monomial(&e, 1)
    }

    /// `(x_1 ⋯ x_n)^power`.
    pub fn product_of_variables(nvars: usize, power: i32) -> Self {
        Self::monomial(&vec![power; nvars], 1)
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<I, C>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, C)>,
        C: Into<BigInt>,
    {
        let mut out = BTreeMap::<Exponents, BigInt>::new();
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            *out.entry(e).or_default() += c.into();
        }
        out.retain(|_, c| !c.is_zero());
        LaurentPolynomial { nvars, terms: out }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponents: &[i32]) -> BigInt {
        self.terms.get(exponents).cloned().unwrap_or_default()
    }

    fn same_vars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_vars(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            *terms.entry(e.clone()).or_default() += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(LaurentPolynomial { nvars: self.nvars, terms })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_vars(other)?;
        let mut acc: HashMap<Exponents, BigInt> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_default() += ca * cb;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(LaurentPolynomial { nvars: self.nvars, terms })
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.nvars), |acc, _| &acc * self)
    }

    /// Multiplies by the monomial `x^shift`.
    pub fn shift(&self, shift: &[i32]) -> Self {
        assert_eq!(shift.len(), self.nvars);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
            .collect();
        LaurentPolynomial { nvars: self.nvars, terms }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect();
        LaurentPolynomial { nvars: self.nvars, terms }
    }

    /// Divides every coefficient by two, failing if any is odd.
    pub fn try_halve(&self) -> Result<Self> {
        let two = BigInt::from(2);
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let (q, r) = c.div_rem(&two);
            if !r.is_zero() {
                return Err(Error::InexactHalving);
            }
            terms.insert(e.clone(), q);
        }
        Ok(LaurentPolynomial { nvars: self.nvars, terms })
    }

    /// Substitutes `x_i ↦ x_i^{-1}` (zero-based `i`).
    pub fn invert_variable(&self, i: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e[i] = -e[i];
                (e, c.clone())
            })
            .collect();
        LaurentPolynomial { nvars: self.nvars, terms }
    }

    /// Renames variables: `x_i ↦ x_{perm[i]}` (zero-based).
    pub fn permute_variables(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut out: Exponents = SmallVec::from_elem(0, self.nvars);
                for (i, &p) in perm.iter().enumerate() {
                    out[p] = e[i];
                }
                (out, c.clone())
            })
            .collect();
        LaurentPolynomial { nvars: self.nvars, terms }
    }

    /// Exact evaluation at rational values of the variables.
    pub fn specialize(&self, values: &[BigRational]) -> Result<BigRational> {
        if values.len() != self.nvars {
            return Err(Error::VariableMismatch(self.nvars, values.len()));
        }
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for (i, (&k, v)) in e.iter().zip(values).enumerate() {
                if k < 0 && v.is_zero() {
                    return Err(Error::ZeroToNegativePower(i + 1));
                }
                term *= num_traits::pow::Pow::pow(v, k);
            }
            total += term;
        }
        Ok(total)
    }

    /// Sum of all coefficients, i.e. the value at `x = (1, …, 1)`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Parses the canonical text form produced by `Display`.
    pub fn parse(s: &str, nvars: usize) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero(nvars));
        }
        let mut terms = Vec::new();
        for raw in s.split(" + ") {
            let mut pieces = raw.splitn(2, " * ");
            let coef: BigInt = pieces
                .next()
                .unwrap_or_default()
                .trim()
                .parse()
                .map_err(|e| Error::Parse(format!("coefficient in {raw:?}: {e}")))?;
            let mut exps: Exponents = SmallVec::from_elem(0, nvars);
            if let Some(mono) = pieces.next() {
                for factor in mono.split_whitespace() {
                    let (var, power) = factor.split_once('^').unwrap_or((factor, "1"));
                    let idx: usize = var
                        .strip_prefix('x')
                        .and_then(|v| v.parse().ok())
                        .filter(|&i| (1..=nvars).contains(&i))
                        .ok_or_else(|| Error::Parse(format!("bad variable {var:?}")))?;
                    exps[idx - 1] += power.parse::<i32>().map_err(|e| Error::Parse(format!("{factor:?}: {e}")))?;
                }
            }
            terms.push((exps, coef));
        }
        Ok(Self::from_terms(nvars, terms))
    }
}

/// `a + b`, `a - b` or `a * b` for operands in the same number of variables.
pub fn arithmetic(a: &LaurentPolynomial, b: &LaurentPolynomial, op: ArithOp) -> Result<LaurentPolynomial> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
    }
}

/// Canonical form: terms in increasing exponent-vector order, each written
/// `c * x1^e1 … xn^en`, joined by ` + `. The zero polynomial is `0`.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            if self.nvars > 0 {
                write!(f, " *")?;
                for (i, p) in e.iter().enumerate() {
                    write!(f, " x{}^{}", i + 1, p)?;
                }
            }
        }
        Ok(())
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect();
        LaurentPolynomial { nvars: self.nvars, terms }
    }
}

// The operator forms panic on a variable-count mismatch; use the `try_`
// methods where that is a recoverable condition.
impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: Self) -> LaurentPolynomial {
        self.try_add(rhs).expect("variable count mismatch")
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: Self) -> LaurentPolynomial {
        self.try_sub(rhs).expect("variable count mismatch")
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: Self) -> LaurentPolynomial {
        self.try_mul(rhs).expect("variable count mismatch")
    }
}

impl std::iter::Sum for LaurentPolynomial {
    /// Panics on an empty iterator, which carries no variable count.
    fn sum<I: Iterator<Item = Self>>(mut iter: I) -> Self {
        let first = iter.next().expect("sum of an empty sequence of polynomials");
        iter.fold(first, |acc, p| &acc + &p)
    }
}
