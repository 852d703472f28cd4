//! Exact number types and integer/rational linear algebra.
//!
//! Everything in this crate computes over exact arithmetic: arbitrary
//! precision rationals, Gaussian rationals (complex numbers with rational
//! real and imaginary parts) and dense integer/rational matrices.  Rank is
//! computed by fraction-free Bareiss elimination, integer matrices are
//! diagonalized by a gcd-pivoting Smith normal form, and mod-2 kernels by
//! Gaussian elimination over GF(2).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use thiserror::Error;

/// Errors produced while parsing the textual number formats.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseNumberError {
    #[error("empty numeric literal")]
    Empty,
    #[error("malformed rational literal: {0}")]
    BadRational(String),
    #[error("zero denominator in rational literal")]
    ZeroDenominator,
    #[error("malformed Gaussian rational literal: {0}")]
    BadGaussian(String),
}

/// An exact rational number with positive denominator in lowest terms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Self {
        let d = denominator.into();
        assert!(!d.is_zero(), "denominator must be nonzero");
        Rational(BigRational::new(numerator.into(), d))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "cannot invert zero");
        Rational(self.0.recip())
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                (&self).$method(rhs)
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                self.$method(&rhs)
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        (&self).div(&rhs)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl fmt::Display for Rational {
    /// Renders as `p/q`, with `/q` omitted when the denominator is one.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = ParseNumberError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseNumberError::Empty);
        }
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let n = BigInt::from_str(num.trim())
            .map_err(|_| ParseNumberError::BadRational(s.to_string()))?;
        let d = BigInt::from_str(den.trim())
            .map_err(|_| ParseNumberError::BadRational(s.to_string()))?;
        if d.is_zero() {
            return Err(ParseNumberError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(n, d)))
    }
}

impl Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An exact complex number with rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational::new(Rational::from_int(n), Rational::zero())
    }

    pub fn from_rational(re: Rational) -> Self {
        GaussianRational::new(re, Rational::zero())
    }

    pub fn zero() -> Self {
        GaussianRational::from_int(0)
    }

    pub fn one() -> Self {
        GaussianRational::from_int(1)
    }

    pub fn i() -> Self {
        GaussianRational::new(Rational::zero(), Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// The squared modulus `re² + im²`, an exact rational.
    pub fn norm_sq(&self) -> Rational {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -&self.im)
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "cannot invert zero");
        let n = self.norm_sq();
        let c = self.conj();
        GaussianRational::new(&c.re / &n, &c.im / &n)
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        )
    }
}

impl Div for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self * &rhs.recip()
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

macro_rules! gaussian_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
    };
}

gaussian_owned_binop!(Add, add);
gaussian_owned_binop!(Sub, sub);
gaussian_owned_binop!(Mul, mul);
gaussian_owned_binop!(Div, div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

impl fmt::Display for GaussianRational {
    /// Renders as `p/q+r/s i` with an explicit sign on the imaginary part.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{}-{} i", self.re, -&self.im)
        } else {
            write!(f, "{}+{} i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for GaussianRational {
    type Err = ParseNumberError;

    /// Parses `p/q+r/s i`; a plain rational is accepted as purely real.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseNumberError::Empty);
        }
        let Some(body) = s.strip_suffix('i') else {
            return Ok(GaussianRational::from_rational(s.parse()?));
        };
        let body = body.trim_end();
        // Split at the sign of the imaginary part: the last '+' or '-' that is
        // not a leading sign and not immediately after '/'.
        let bytes = body.as_bytes();
        let mut split_at = None;
        for idx in (1..bytes.len()).rev() {
            if (bytes[idx] == b'+' || bytes[idx] == b'-') && bytes[idx - 1] != b'/' {
                split_at = Some(idx);
                break;
            }
        }
        let idx = split_at.ok_or_else(|| ParseNumberError::BadGaussian(s.to_string()))?;
        let re: Rational = body[..idx].parse()?;
        let sign = if bytes[idx] == b'-' { -1 } else { 1 };
        let im_raw: Rational = body[idx + 1..].parse()?;
        let im = if sign < 0 { -&im_raw } else { im_raw };
        Ok(GaussianRational::new(re, im))
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A dense matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            entries: rows
                .into_iter()
                .flatten()
                .map(BigInt::from)
                .collect(),
        }
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = &self[(i, k)] * &rhs[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| &self[(i, j)] * &v[j]).sum())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|e| Rational::from_int(e.clone()))
                .collect(),
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

/// A dense matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RatMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut t = RatMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }
}

impl std::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }
}

/// Rank over the rationals by fraction-free Bareiss elimination.
///
/// Each row is first scaled to integers (scaling does not change rank), then
/// the Bareiss scheme keeps all intermediate values integral with bounded
/// growth.
pub fn rank_rational(m: &RatMatrix) -> usize {
    // Clear denominators row by row.
    let mut a: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|i| {
            let lcm = (0..m.cols).fold(BigInt::one(), |acc, j| {
                num_integer::lcm(acc, m[(i, j)].denominator().clone())
            });
            (0..m.cols)
                .map(|j| {
                    m[(i, j)].numerator() * (&lcm / m[(i, j)].denominator())
                })
                .collect()
        })
        .collect();
    bareiss_rank(&mut a, m.rows, m.cols)
}

/// Rank of an integer matrix over the rationals.
pub fn rank_int(m: &IntMatrix) -> usize {
    let mut a: Vec<Vec<BigInt>> = (0..m.rows)
        .map(|i| (0..m.cols).map(|j| m[(i, j)].clone()).collect())
        .collect();
    bareiss_rank(&mut a, m.rows, m.cols)
}

fn bareiss_rank(a: &mut [Vec<BigInt>], rows: usize, cols: usize) -> usize {
    let mut rank = 0;
    let mut prev_pivot = BigInt::one();
    let mut row = 0;
    for col in 0..cols {
        // Find a pivot in this column at or below `row`.
        let Some(pivot_row) = (row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, pivot_row);
        for r in row + 1..rows {
            for c in col + 1..cols {
                let val = &a[row][col] * &a[r][c] - &a[r][col] * &a[row][c];
                a[r][c] = val / &prev_pivot;
            }
            a[r][col] = BigInt::zero();
        }
        prev_pivot = a[row][col].clone();
        row += 1;
        rank += 1;
        if row == rows {
            break;
        }
    }
    rank
}

/// The Smith normal form of an integer matrix together with the unimodular
/// transforms: `p * a * q = d` with `d` diagonal and `d[i] | d[i+1]`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub p: IntMatrix,
    pub q: IntMatrix,
    pub d: IntMatrix,
}

impl SmithDecomposition {
    /// Nonnegative invariant factors `d₁ | d₂ | …` (zeros excluded).
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.d.rows.min(self.d.cols);
        (0..n)
            .map(|i| self.d[(i, i)].clone())
            .filter(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Smith normal form via repeated gcd pivoting with full row/column
/// reduction.  Suitable for the small sparse matrices used here.
pub fn smith_decompose(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut p = IntMatrix::identity(rows);
    let mut q = IntMatrix::identity(cols);

    let mut k = 0;
    while k < rows.min(cols) {
        // Locate the entry of smallest nonzero magnitude in the remaining block.
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if d[(i, j)].is_zero() {
                    continue;
                }
                match pivot {
                    Some((pi, pj)) if d[(pi, pj)].abs() <= d[(i, j)].abs() => {}
                    _ => pivot = Some((i, j)),
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        swap_rows(&mut d, &mut p, k, pi);
        swap_cols(&mut d, &mut q, k, pj);

        // Reduce the pivot row and column to zero; restart if a smaller
        // remainder appears.
        loop {
            let mut clean = true;
            for i in k + 1..rows {
                if d[(i, k)].is_zero() {
                    continue;
                }
                let f = div_round(&d[(i, k)], &d[(k, k)]);
                if !f.is_zero() {
                    add_row_multiple(&mut d, &mut p, i, k, &-f);
                }
                if !d[(i, k)].is_zero() {
                    swap_rows(&mut d, &mut p, k, i);
                    clean = false;
                }
            }
            for j in k + 1..cols {
                if d[(k, j)].is_zero() {
                    continue;
                }
                let f = div_round(&d[(k, j)], &d[(k, k)]);
                if !f.is_zero() {
                    add_col_multiple(&mut d, &mut q, j, k, &-f);
                }
                if !d[(k, j)].is_zero() {
                    swap_cols(&mut d, &mut q, k, j);
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }

        // Ensure the pivot divides every remaining entry.
        let mut divides_all = true;
        'outer: for i in k + 1..rows {
            for j in k + 1..cols {
                if !(&d[(i, j)] % &d[(k, k)]).is_zero() {
                    // Fold row i into row k and redo the elimination step.
                    add_row_multiple(&mut d, &mut p, k, i, &BigInt::one());
                    divides_all = false;
                    break 'outer;
                }
            }
        }
        if !divides_all {
            continue;
        }
        if d[(k, k)].is_negative() {
            negate_row(&mut d, &mut p, k);
        }
        k += 1;
    }
    SmithDecomposition { p, q, d }
}

/// Invariant factors `d₁ | d₂ | …` (all positive) and the rank.
pub fn smith_normal_form(m: &IntMatrix) -> (Vec<BigInt>, usize) {
    let dec = smith_decompose(m);
    let factors = dec.invariant_factors();
    let rank = factors.len();
    (factors, rank)
}

fn swap_rows(d: &mut IntMatrix, p: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..d.cols {
        let (x, y) = (d[(a, j)].clone(), d[(b, j)].clone());
        d[(a, j)] = y;
        d[(b, j)] = x;
    }
    for j in 0..p.cols {
        let (x, y) = (p[(a, j)].clone(), p[(b, j)].clone());
        p[(a, j)] = y;
        p[(b, j)] = x;
    }
}

fn swap_cols(d: &mut IntMatrix, q: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..d.rows {
        let (x, y) = (d[(i, a)].clone(), d[(i, b)].clone());
        d[(i, a)] = y;
        d[(i, b)] = x;
    }
    for i in 0..q.rows {
        let (x, y) = (q[(i, a)].clone(), q[(i, b)].clone());
        q[(i, a)] = y;
        q[(i, b)] = x;
    }
}

/// row[target] += f * row[source], mirrored in the row transform.
fn add_row_multiple(d: &mut IntMatrix, p: &mut IntMatrix, target: usize, source: usize, f: &BigInt) {
    for j in 0..d.cols {
        let delta = f * &d[(source, j)];
        d[(target, j)] += delta;
    }
    for j in 0..p.cols {
        let delta = f * &p[(source, j)];
        p[(target, j)] += delta;
    }
}

/// col[target] += f * col[source], mirrored in the column transform.
fn add_col_multiple(d: &mut IntMatrix, q: &mut IntMatrix, target: usize, source: usize, f: &BigInt) {
    for i in 0..d.rows {
        let delta = f * &d[(i, source)];
        d[(i, target)] += delta;
    }
    for i in 0..q.rows {
        let delta = f * &q[(i, source)];
        q[(i, target)] += delta;
    }
}

fn negate_row(d: &mut IntMatrix, p: &mut IntMatrix, row: usize) {
    for j in 0..d.cols {
        let v = -&d[(row, j)];
        d[(row, j)] = v;
    }
    for j in 0..p.cols {
        let v = -&p[(row, j)];
        p[(row, j)] = v;
    }
}

/// Rounded integer quotient (nearest integer), used to shrink remainders fast.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    let (q, r) = num_integer::div_rem(a.clone(), b.clone());
    if &r.abs() * &two > b.abs() {
        if (r.is_negative()) == (b.is_negative()) {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// An integer basis of the kernel of `m` (columns as kernel vectors).
pub fn kernel_int(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let dec = smith_decompose(m);
    let rank = dec.rank();
    (rank..m.cols)
        .map(|j| (0..m.cols).map(|i| dec.q[(i, j)].clone()).collect())
        .collect()
}

/// A dense matrix over GF(2), stored as bytes in {0, 1}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Gf2Matrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<u8>,
}

impl Gf2Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Gf2Matrix {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn from_int(m: &IntMatrix) -> Self {
        let mut g = Gf2Matrix::zero(m.rows, m.cols);
        for i in 0..m.rows {
            for j in 0..m.cols {
                g[(i, j)] = if (&m[(i, j)] % BigInt::from(2)).is_zero() { 0 } else { 1 };
            }
        }
        g
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate().0
    }

    /// A basis of the right kernel.
    pub fn nullspace(&self) -> Vec<Vec<u8>> {
        let (rank, reduced, pivot_cols) = self.clone().eliminate();
        let _ = rank;
        let free_cols: Vec<usize> = (0..self.cols)
            .filter(|c| !pivot_cols.contains(c))
            .collect();
        free_cols
            .iter()
            .map(|&fc| {
                let mut v = vec![0u8; self.cols];
                v[fc] = 1;
                for (r, &pc) in pivot_cols.iter().enumerate() {
                    v[pc] = reduced[(r, fc)];
                }
                v
            })
            .collect()
    }

    /// Returns (rank, reduced row echelon form, pivot columns).
    fn eliminate(mut self) -> (usize, Gf2Matrix, Vec<usize>) {
        let mut pivot_cols = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            let Some(pr) = (row..self.rows).find(|&r| self[(r, col)] == 1) else {
                continue;
            };
            for j in 0..self.cols {
                let (a, b) = (self[(row, j)], self[(pr, j)]);
                self[(row, j)] = b;
                self[(pr, j)] = a;
            }
            for r in 0..self.rows {
                if r != row && self[(r, col)] == 1 {
                    for j in 0..self.cols {
                        self[(r, j)] ^= self[(row, j)];
                    }
                }
            }
            pivot_cols.push(col);
            row += 1;
            if row == self.rows {
                break;
            }
        }
        (pivot_cols.len(), self, pivot_cols)
    }
}

impl std::ops::Index<(usize, usize)> for Gf2Matrix {
    type Output = u8;
    fn index(&self, (i, j): (usize, usize)) -> &u8 {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Gf2Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u8 {
        &mut self.entries[i * self.cols + j]
    }
}

/// Basis of the GF(2) kernel of an integer matrix reduced mod 2.
pub fn nullspace_mod2(m: &IntMatrix) -> Vec<Vec<u8>> {
    Gf2Matrix::from_int(m).nullspace()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn rational_normalizes_and_renders() {
        assert_eq!(r(2, 4), r(1, 2));
        assert_eq!(r(1, -2), r(-1, 2));
        assert_eq!(r(6, 3).to_string(), "2");
        assert_eq!(r(-3, 9).to_string(), "-1/3");
        assert!(r(1, -2).denominator() > &BigInt::zero());
    }

    #[test]
    fn rational_round_trips() {
        for s in ["0", "7", "-7", "22/7", "-22/7", "1/1000000000000000000000"] {
            let q: Rational = s.parse().unwrap();
            let back: Rational = q.to_string().parse().unwrap();
            assert_eq!(q, back);
        }
    }

    #[test]
    fn gaussian_arithmetic_closes() {
        let z = GaussianRational::new(r(1, 2), r(-3, 4));
        let w = GaussianRational::new(r(2, 1), r(1, 3));
        let prod = &z * &w;
        let back = &prod / &w;
        assert_eq!(back, z);
        assert_eq!(z.norm_sq(), r(13, 16));
    }

    #[test]
    fn gaussian_round_trips() {
        for s in ["1/2+3/4 i", "0+1 i", "-5-2/3 i", "7+0 i"] {
            let z: GaussianRational = s.parse().unwrap();
            let back: GaussianRational = z.to_string().parse().unwrap();
            assert_eq!(z, back);
        }
        // A plain rational parses as purely real.
        let z: GaussianRational = "5/3".parse().unwrap();
        assert_eq!(z, GaussianRational::from_rational(r(5, 3)));
    }

    #[test]
    fn rank_identity_and_zero() {
        let id = IntMatrix::identity(2).to_rational();
        assert_eq!(rank_rational(&id), 2);
        let z = RatMatrix::zero(3, 4);
        assert_eq!(rank_rational(&z), 0);
    }

    #[test]
    fn rank_equals_transpose_rank() {
        let m = RatMatrix::from_rows(vec![
            vec![r(1, 2), r(1, 3), r(0, 1)],
            vec![r(3, 2), r(1, 1), r(1, 1)],
            vec![r(1, 1), r(2, 3), r(0, 1)],
        ]);
        assert_eq!(rank_rational(&m), rank_rational(&m.transpose()));
        assert_eq!(rank_rational(&m), 2);
    }

    #[test]
    fn snf_diag_2_3() {
        let m = IntMatrix::from_rows(vec![vec![2, 0], vec![0, 3]]);
        let (factors, rank) = smith_normal_form(&m);
        assert_eq!(rank, 2);
        assert_eq!(factors, vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn snf_empty_matrix() {
        let m = IntMatrix::zero(0, 0);
        let (factors, rank) = smith_normal_form(&m);
        assert!(factors.is_empty());
        assert_eq!(rank, 0);
    }

    #[test]
    fn snf_degree_two_disc() {
        // One 2-cell attached to a circle by degree 2.
        let m = IntMatrix::from_rows(vec![vec![2]]);
        let (factors, _) = smith_normal_form(&m);
        assert_eq!(factors, vec![BigInt::from(2)]);
    }

    #[test]
    fn snf_transforms_are_consistent() {
        let m = IntMatrix::from_rows(vec![
            vec![-6, 111, -36, 6],
            vec![5, -672, 210, 74],
            vec![0, -255, 81, 24],
            vec![-7, 255, -81, -10],
        ]);
        let dec = smith_decompose(&m);
        assert_eq!(dec.p.mul(&m).mul(&dec.q), dec.d);
        let (factors, _) = smith_normal_form(&m);
        assert_eq!(
            factors,
            vec![BigInt::from(1), BigInt::from(3), BigInt::from(21)]
        );
    }

    #[test]
    fn snf_rank_matches_rational_rank() {
        let m = IntMatrix::from_rows(vec![
            vec![1, 2, 3],
            vec![2, 4, 6],
            vec![0, 1, 1],
            vec![1, 3, 4],
        ]);
        let (_, rank) = smith_normal_form(&m);
        assert_eq!(rank, rank_int(&m));
        assert_eq!(rank, 2);
    }

    #[test]
    fn kernel_int_spans_kernel() {
        let m = IntMatrix::from_rows(vec![vec![1, 2, 3], vec![2, 4, 6]]);
        let basis = kernel_int(&m);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn mod2_identity_has_trivial_kernel() {
        let m = IntMatrix::identity(3);
        assert!(nullspace_mod2(&m).is_empty());
    }

    #[test]
    fn mod2_kernel_of_k5_incidence() {
        // Vertex-edge incidence of K5: columns are edges {i,j}, rows vertices.
        let mut m = IntMatrix::zero(5, 10);
        let mut col = 0;
        for i in 0..5 {
            for j in i + 1..5 {
                m[(i, col)] = BigInt::one();
                m[(j, col)] = BigInt::one();
                col += 1;
            }
        }
        assert_eq!(nullspace_mod2(&m).len(), 6);
        // Over the integers the incidence matrix has full rank 5.
        assert_eq!(rank_int(&m), 5);
        assert_eq!(kernel_int(&m).len(), 5);
    }
}
