//! Exact arithmetic in cyclotomic fields `Q(ζ_M)`.
//!
//! An element of order `M` is stored as the remainder of its coefficient
//! polynomial modulo the cyclotomic polynomial `Φ_M`, so equality of two
//! elements of the same order is equality of their coefficient vectors.
//! Elements of different orders are compared and combined by lifting both
//! to the least common multiple of the orders.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::atomic::{AtomicU32, Ordering};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Default bound on the ambient order produced by joining two fields.
pub const DEFAULT_ORDER_CAP: u32 = 360;

static ORDER_CAP: AtomicU32 = AtomicU32::new(DEFAULT_ORDER_CAP);

/// Sets the largest cyclotomic order that mixed-order arithmetic may produce.
pub fn set_order_cap(cap: u32) {
    ORDER_CAP.store(cap.max(1), Ordering::Relaxed);
}

pub fn order_cap() -> u32 {
    ORDER_CAP.load(Ordering::Relaxed)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclotomicError {
    #[error("cyclotomic order must be positive, got {0}")]
    InvalidOrder(i64),
    #[error("order {order} expects {order} coefficients, got {len}")]
    LengthMismatch { order: u32, len: usize },
    #[error("joined cyclotomic order {0} exceeds the configured cap {1}")]
    OrderCapExceeded(u64, u32),
    #[error("order {target} is not a multiple of {order}")]
    NotAMultiple { order: u32, target: u32 },
    #[error("inverse of zero")]
    DivisionByZero,
}

type Poly = Vec<BigRational>;

fn phi_table() -> &'static RwLock<HashMap<u32, Arc<Vec<BigInt>>>> {
    static TABLE: OnceLock<RwLock<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Coefficients (constant term first) of the `n`-th cyclotomic polynomial.
///
/// Computed as `(x^n - 1) / Π_{d | n, d < n} Φ_d` and memoized. Concurrent
/// writers insert identical values, so the race is harmless.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<BigInt>> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    if let Some(p) = phi_table().read().unwrap().get(&n) {
        return Arc::clone(p);
    }
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let divisor = cyclotomic_polynomial(d);
        num = div_monic_exact(&num, &divisor);
    }
    let result = Arc::new(num);
    phi_table()
        .write()
        .unwrap()
        .entry(n)
        .or_insert_with(|| Arc::clone(&result));
    result
}

fn div_monic_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quot
}

/// Euler's totient.
pub fn totient(n: u32) -> u32 {
    let mut n = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn reduce_mod_phi(order: u32, mut p: Poly) -> Poly {
    let phi = cyclotomic_polynomial(order);
    let deg = phi.len() - 1;
    trim(&mut p);
    if p.len() > deg {
        let phi: Vec<BigRational> = phi.iter().cloned().map(BigRational::from_integer).collect();
        for i in (deg..p.len()).rev() {
            if p[i].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut p[i], BigRational::zero());
            for j in 0..deg {
                if !phi[j].is_zero() {
                    p[i - deg + j] -= &c * &phi[j];
                }
            }
        }
        p.truncate(deg);
    }
    trim(&mut p);
    p
}

/// An exact element of `Q(ζ_M)`.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    /// Builds `Σ_j c_j ζ_M^j` from exactly `M` coefficients.
    pub fn new(order: i64, coeffs: Vec<BigRational>) -> Result<Self, CyclotomicError> {
        if order <= 0 || order > u32::MAX as i64 {
            return Err(CyclotomicError::InvalidOrder(order));
        }
        let order = order as u32;
        if coeffs.len() != order as usize {
            return Err(CyclotomicError::LengthMismatch {
                order,
                len: coeffs.len(),
            });
        }
        Ok(Self::from_poly(order, coeffs))
    }

    /// Reduces an arbitrary-length coefficient polynomial in `ζ_M`.
    pub fn from_poly(order: u32, coeffs: Vec<BigRational>) -> Self {
        assert!(order >= 1);
        let m = order as usize;
        // fold exponents mod M first so the division below stays short
        let mut folded: Poly = vec![BigRational::zero(); m.min(coeffs.len())];
        for (j, c) in coeffs.into_iter().enumerate() {
            folded[j % m] += c;
        }
        Self {
            order,
            coeffs: reduce_mod_phi(order, folded),
        }
    }

    pub fn zero(order: u32) -> Self {
        Self {
            order,
            coeffs: Vec::new(),
        }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rational(order, BigRational::one())
    }

    pub fn from_rational(order: u32, r: BigRational) -> Self {
        Self::from_poly(order, vec![r])
    }

    pub fn from_integer(order: u32, n: i64) -> Self {
        Self::from_rational(order, BigRational::from_integer(n.into()))
    }

    /// `ζ_M^k` for any integer `k`.
    pub fn root(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        let mut coeffs = vec![BigRational::zero(); e + 1];
        coeffs[e] = BigRational::one();
        Self::from_poly(order, coeffs)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Canonical coefficients in the power basis `1, ζ, …, ζ^{φ(M)-1}`,
    /// trailing zeros removed.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Re-expresses the element in `Q(ζ_target)`, where `target` is a
    /// multiple of the current order.
    pub fn lift(&self, target: u32) -> Result<Self, CyclotomicError> {
        if target == 0 || !target.is_multiple_of(self.order) {
            return Err(CyclotomicError::NotAMultiple {
                order: self.order,
                target,
            });
        }
        if target == self.order {
            return Ok(self.clone());
        }
        let step = (target / self.order) as usize;
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len().saturating_sub(1) * step + 1];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[j * step] = c.clone();
        }
        Ok(Self::from_poly(target, coeffs))
    }

    /// Re-expresses the element in the subfield `Q(ζ_target)`, `target | M`.
    /// Returns `None` when the value does not lie in that subfield.
    pub fn restrict(&self, target: u32) -> Option<Self> {
        if target == 0 || !self.order.is_multiple_of(target) {
            return None;
        }
        if target == self.order {
            return Some(self.clone());
        }
        let n = totient(self.order) as usize;
        let k = totient(target) as usize;
        // columns: images of ζ_target^i in Q(ζ_M); last column: self
        let mut rows = vec![vec![BigRational::zero(); k + 1]; n];
        for i in 0..k {
            let image = Self::root(target, i as i64).lift(self.order).ok()?;
            for (r, c) in image.coeffs.iter().enumerate() {
                rows[r][i] = c.clone();
            }
        }
        for (r, c) in self.coeffs.iter().enumerate() {
            rows[r][k] = c.clone();
        }
        let solution = solve_rational(rows, k)?;
        let candidate = Self::from_poly(target, solution);
        (candidate.lift(self.order).ok()? == *self).then_some(candidate)
    }

    fn joined(&self, other: &Self) -> Result<(Self, Self), CyclotomicError> {
        if self.order == other.order {
            return Ok((self.clone(), other.clone()));
        }
        let l = (self.order as u64).lcm(&(other.order as u64));
        if l > order_cap() as u64 {
            return Err(CyclotomicError::OrderCapExceeded(l, order_cap()));
        }
        Ok((self.lift(l as u32)?, other.lift(l as u32)?))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, CyclotomicError> {
        if self.order == other.order {
            return Ok(self.add_same(other));
        }
        let (a, b) = self.joined(other)?;
        Ok(a.add_same(&b))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, CyclotomicError> {
        if self.order == other.order {
            return Ok(self.mul_same(other));
        }
        let (a, b) = self.joined(other)?;
        Ok(a.mul_same(&b))
    }

    fn add_same(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let c = match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            coeffs.push(c);
        }
        trim(&mut coeffs);
        Self {
            order: self.order,
            coeffs,
        }
    }

    fn mul_same(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.order);
        }
        let mut prod = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Self {
            order: self.order,
            coeffs: reduce_mod_phi(self.order, prod),
        }
    }

    /// Multiplies by `ζ_M^k`.
    pub fn mul_root(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let m = self.order as i64;
        let shift = k.rem_euclid(m) as usize;
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + shift];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[j + shift] = c.clone();
        }
        Self::from_poly(self.order, coeffs)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        if r.is_zero() {
            return Self::zero(self.order);
        }
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse, by the extended Euclidean algorithm against `Φ_M`.
    pub fn inv(&self) -> Result<Self, CyclotomicError> {
        if self.is_zero() {
            return Err(CyclotomicError::DivisionByZero);
        }
        let phi: Poly = cyclotomic_polynomial(self.order)
            .iter()
            .cloned()
            .map(BigRational::from_integer)
            .collect();
        let (g, s) = ext_gcd(self.coeffs.clone(), phi);
        // g is a nonzero constant since Φ_M is irreducible and deg self < deg Φ_M
        debug_assert_eq!(g.len(), 1);
        let g0 = g[0].clone();
        let s: Poly = s.into_iter().map(|c| c / &g0).collect();
        Ok(Self::from_poly(self.order, s))
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        let m = self.order as usize;
        let mut coeffs = vec![BigRational::zero(); m];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[(m - j % m) % m] += c;
        }
        Self::from_poly(self.order, coeffs)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_same(&base);
            }
            base = base.mul_same(&base);
            e >>= 1;
        }
        acc
    }
}

/// Solves the first `k` unknowns of an augmented rational system, returning
/// `None` if it is inconsistent.
fn solve_rational(mut rows: Vec<Vec<BigRational>>, k: usize) -> Option<Vec<BigRational>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..k {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for c in col..=k {
            rows[r][c] = &rows[r][c] * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for c in col..=k {
                    let delta = &f * &rows[r][c];
                    rows[i][c] -= delta;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); k];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = rows[i][k].clone();
    }
    Some(x)
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Poly, Poly) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let lead = b[db].recip();
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + db] * &lead;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        quot[i] = c;
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Poly {
    let n = a.len().max(b.len());
    let zero = BigRational::zero();
    let mut out: Poly = (0..n)
        .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
        .collect();
    trim(&mut out);
    out
}

/// Returns `(g, s)` with `s·a ≡ g (mod b)`, `g = gcd(a, b)`.
fn ext_gcd(a: Poly, b: Poly) -> (Poly, Poly) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1): (Poly, Poly) = (vec![BigRational::one()], Vec::new());
    trim(&mut r1);
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    (r0, s0)
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let l = self.order.lcm(&other.order);
        match (self.lift(l), other.lift(l)) {
            (Ok(a), Ok(b)) => a.coeffs == b.coeffs,
            _ => false,
        }
    }
}

impl Eq for Cyclotomic {}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

// Operator forms panic when joining orders would exceed the cap; use the
// `try_*` methods where that can happen.
impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.try_add(rhs).expect("cyclotomic addition")
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.try_add(&-rhs).expect("cyclotomic subtraction")
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.try_mul(rhs).expect("cyclotomic multiplication")
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        &self - &rhs
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

/// Renders e.g. `1/2 + (-1/2)*z4`, with `zM` standing for `ζ_M`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let root = match j {
                0 => String::new(),
                1 => format!("z{}", self.order),
                _ => format!("z{}^{}", self.order, j),
            };
            if j == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                f.write_str(&root)?;
            } else if c.is_negative() {
                write!(f, "({c})*{root}")?;
            } else {
                write!(f, "{c}*{root}")?;
            }
        }
        Ok(())
    }
}

/// Parses `"p/q"`, `"p"` or a bare integer into a rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            (!q.is_zero()).then(|| BigRational::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}
