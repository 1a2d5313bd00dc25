//! Integer polynomials in `t`, power series in `q` truncated at a fixed
//! order, and partitions in multiplicity form.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("partitions of a negative integer ({0})")]
    NegativeSize(i64),
    #[error("factor (1 - base*q^d) needs d >= 1, got {0}")]
    ZeroShift(u32),
    #[error("series is not invertible: constant term {0} is not 1")]
    NotInvertible(String),
}

/// An integer polynomial in `t`, constant term first, trailing zeros trimmed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TPoly(Vec<BigInt>);

impl TPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self(Vec::new())
    }

    pub fn one() -> Self {
        Self(vec![BigInt::one()])
    }

    /// `c·t^k`.
    pub fn monomial(k: usize, c: BigInt) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn t_power(k: usize) -> Self {
        Self::monomial(k, BigInt::one())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.0.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// Degree in `t`; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.0.last()
    }

    pub fn eval(&self, t: i64) -> BigInt {
        let t = BigInt::from(t);
        self.0
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &t + c)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.0.iter().cloned());
        Self(v)
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let n = self.0.len().max(rhs.0.len());
        TPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let n = self.0.len().max(rhs.0.len());
        TPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        TPoly::new(v)
    }
}

impl Add for TPoly {
    type Output = TPoly;
    fn add(self, rhs: TPoly) -> TPoly {
        &self + &rhs
    }
}

impl Mul for TPoly {
    type Output = TPoly;
    fn mul(self, rhs: TPoly) -> TPoly {
        &self * &rhs
    }
}

/// Renders e.g. `1 + 2t^2 + 2t^4`.
impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            let var = match k {
                0 => String::new(),
                1 => "t".to_owned(),
                k => format!("t^{k}"),
            };
            let body = if k == 0 {
                abs.to_string()
            } else if abs.is_one() {
                var
            } else {
                format!("{abs}{var}")
            };
            match (first, c.is_negative()) {
                (true, false) => f.write_str(&body)?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// `Σ_{n ≤ N} c_n q^n` with [`TPoly`] coefficients, exact through `q^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    order: usize,
    coeffs: Vec<TPoly>,
}

impl QSeries {
    pub fn new(order: usize, mut coeffs: Vec<TPoly>) -> Self {
        coeffs.resize(order + 1, TPoly::zero());
        Self { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::new(order, vec![TPoly::one()])
    }

    /// `c·q^d`, dropped entirely if `d > order`.
    pub fn monomial(order: usize, d: usize, c: TPoly) -> Self {
        let mut s = Self::zero(order);
        if d <= order {
            s.coeffs[d] = c;
        }
        s
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, n: usize) -> &TPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[TPoly] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Self::new(order, self.coeffs[..=order].to_vec())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.order), |acc, _| &acc * self)
    }

    /// Multiplicative inverse; the constant term must be exactly 1.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::NotInvertible(self.coeffs[0].to_string()));
        }
        let mut inv = vec![TPoly::one()];
        for n in 1..=self.order {
            let mut acc = TPoly::zero();
            for k in 1..=n {
                acc = &acc + &(&self.coeffs[k] * &inv[n - k]);
            }
            inv.push(-&acc);
        }
        Ok(Self::new(self.order, inv))
    }
}

/// `(1 − base·q^d)^{−1} = Σ_k base^k q^{dk}`, truncated at `order`.
pub fn qseries_inv_factor(base: &TPoly, d: u32, order: usize) -> Result<QSeries, SeriesError> {
    if d == 0 {
        return Err(SeriesError::ZeroShift(d));
    }
    let d = d as usize;
    let mut s = QSeries::zero(order);
    let mut power = TPoly::one();
    for k in 0..=order / d {
        s.coeffs[k * d] = power.clone();
        power = &power * base;
    }
    Ok(s)
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        let order = self.order.min(rhs.order);
        QSeries::new(
            order,
            (0..=order)
                .map(|n| &self.coeffs[n] + &rhs.coeffs[n])
                .collect(),
        )
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        let order = self.order.min(rhs.order);
        let mut out = vec![TPoly::zero(); order + 1];
        for i in 0..=order {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=order - i {
                if !rhs.coeffs[j].is_zero() {
                    out[i + j] = &out[i + j] + &(&self.coeffs[i] * &rhs.coeffs[j]);
                }
            }
        }
        QSeries::new(order, out)
    }
}

impl Add for QSeries {
    type Output = QSeries;
    fn add(self, rhs: QSeries) -> QSeries {
        &self + &rhs
    }
}

impl Mul for QSeries {
    type Output = QSeries;
    fn mul(self, rhs: QSeries) -> QSeries {
        &self * &rhs
    }
}

/// Renders `(c_0) + (c_1) q + (c_2) q^2 + …`, skipping zero coefficients.
impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c}) q")?,
                n => write!(f, "({c}) q^{n}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order + 1)
    }
}

/// A partition `(1^{a_1} 2^{a_2} ⋯ n^{a_n})` of `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    n: usize,
    /// `mults[j - 1] = a_j`.
    mults: Vec<u32>,
}

impl Partition {
    /// From parts in any order; `n` is their sum.
    pub fn from_parts(parts: &[usize]) -> Self {
        let n: usize = parts.iter().sum();
        let mut mults = vec![0u32; n];
        for &p in parts.iter().filter(|&&p| p > 0) {
            mults[p - 1] += 1;
        }
        Self { n, mults }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// `a_j`, the number of parts equal to `j`.
    pub fn multiplicity(&self, j: usize) -> u32 {
        if j == 0 {
            return 0;
        }
        self.mults.get(j - 1).copied().unwrap_or(0)
    }

    /// `(j, a_j)` for every `j` with `a_j > 0`.
    pub fn multiplicities(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.mults
            .iter()
            .enumerate()
            .filter(|(_, &a)| a > 0)
            .map(|(i, &a)| (i + 1, a))
    }

    /// `d(ν) = Σ_j a_j`, the number of parts.
    pub fn length(&self) -> u32 {
        self.mults.iter().sum()
    }

    /// Parts in nonincreasing order.
    pub fn parts(&self) -> Vec<usize> {
        let mut out = Vec::new();
        for (j, a) in self.multiplicities().collect::<Vec<_>>().into_iter().rev() {
            out.extend(std::iter::repeat_n(j, a as usize));
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .multiplicities()
            .map(|(j, a)| format!("{j}^{a}"))
            .collect();
        write!(f, "({})", parts.join(" "))
    }
}

/// All partitions of `n`, in reverse lexicographic order of their parts
/// (`(n)` first, `(1^n)` last).
pub fn partitions(n: i64) -> Result<Vec<Partition>, SeriesError> {
    if n < 0 {
        return Err(SeriesError::NegativeSize(n));
    }
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_parts(prefix));
            return;
        }
        for part in (1..=max.min(remaining)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as usize, n as usize, &mut Vec::new(), &mut out);
    Ok(out)
}
