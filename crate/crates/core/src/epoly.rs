//! Integer polynomials in two formal variables `u`, `v`.
//!
//! This is the algebra of E-polynomials: disjoint unions add, locally
//! trivial fibrations multiply, and `E(−1, −1)` is the Euler characteristic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EPolyError {
    #[error("geometric sum needs k >= 1, got {0}")]
    NonPositiveLength(i64),
    #[error("the zero polynomial has no degree range")]
    Empty,
    #[error("invalid coefficient {0:?}")]
    BadCoefficient(String),
}

/// `Σ e^{p,q} u^p v^q`, keyed by `(p, q)` in lexicographic order; no zero
/// coefficients are stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct EPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

/// One `{p, q, coeff}` entry of the JSON form; coefficients are strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EPolyTerm {
    pub p: u32,
    pub q: u32,
    pub coeff: String,
}

impl EPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, BigInt::one())
    }

    pub fn monomial(p: u32, q: u32, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((p, q), coeff);
        }
        Self { terms }
    }

    /// `(uv)^k`.
    pub fn uv_power(k: u32) -> Self {
        Self::monomial(k, k, BigInt::one())
    }

    /// Builds from `(p, q, coeff)` triples, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (u32, u32, BigInt)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (p, q, c) in terms {
            out.add_term(p, q, c);
        }
        out
    }

    /// `Σ_k coeffs[k] (uv)^k`.
    pub fn from_uv_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| (k as u32, k as u32, BigInt::from(c))),
        )
    }

    fn add_term(&mut self, p: u32, q: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((p, q)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(p, q));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: u32, q: u32) -> BigInt {
        self.terms.get(&(p, q)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigInt)> {
        self.terms.iter().map(|(&(p, q), c)| (p, q, c))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// `E(−1, −1)`.
    pub fn euler_number(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(&(p, q), c)| if (p + q) % 2 == 0 { c.clone() } else { -c })
            .sum()
    }

    /// Whether every term is a power of `uv`.
    pub fn is_pure_uv(&self) -> bool {
        self.terms.keys().all(|(p, q)| p == q)
    }

    /// Smallest and largest `p` over the terms.
    pub fn uv_degree_range(&self) -> Result<(u32, u32), EPolyError> {
        let min = self
            .terms
            .keys()
            .map(|k| k.0)
            .min()
            .ok_or(EPolyError::Empty)?;
        let max = self
            .terms
            .keys()
            .map(|k| k.0)
            .max()
            .ok_or(EPolyError::Empty)?;
        Ok((min, max))
    }

    /// Whether all coefficients are nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Coefficients of `(uv)^0, (uv)^1, …` for a polynomial in `uv`.
    pub fn uv_coefficients(&self) -> Option<Vec<BigInt>> {
        if !self.is_pure_uv() {
            return None;
        }
        let top = self
            .terms
            .keys()
            .map(|k| k.0)
            .max()
            .map_or(0, |m| m as usize + 1);
        let mut out = vec![BigInt::zero(); top];
        for (&(p, _), c) in &self.terms {
            out[p as usize] = c.clone();
        }
        Some(out)
    }

    pub fn to_json_terms(&self) -> Vec<EPolyTerm> {
        self.terms
            .iter()
            .map(|(&(p, q), c)| EPolyTerm {
                p,
                q,
                coeff: c.to_string(),
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[EPolyTerm]) -> Result<Self, EPolyError> {
        let mut out = Self::zero();
        for t in terms {
            let c: BigInt = t
                .coeff
                .trim()
                .parse()
                .map_err(|_| EPolyError::BadCoefficient(t.coeff.clone()))?;
            out.add_term(t.p, t.q, c);
        }
        Ok(out)
    }
}

/// `1 + uv + ⋯ + (uv)^{k−1} = ((uv)^k − 1)/(uv − 1)`.
pub fn geometric_sum(k: i64) -> Result<EPoly, EPolyError> {
    if k <= 0 {
        return Err(EPolyError::NonPositiveLength(k));
    }
    Ok(EPoly::from_terms(
        (0..k as u32).map(|j| (j, j, BigInt::one())),
    ))
}

/// `(uv)^d`: the E-polynomial of `C^d` and of `C^d/H` for finite linear `H`.
pub fn affine_quotient_e(d: u32) -> EPoly {
    EPoly::uv_power(d)
}

impl Add for &EPoly {
    type Output = EPoly;
    fn add(self, rhs: &EPoly) -> EPoly {
        let mut out = self.clone();
        for (&(p, q), c) in &rhs.terms {
            out.add_term(p, q, c.clone());
        }
        out
    }
}

impl Add for EPoly {
    type Output = EPoly;
    fn add(self, rhs: EPoly) -> EPoly {
        &self + &rhs
    }
}

impl Mul for &EPoly {
    type Output = EPoly;
    fn mul(self, rhs: &EPoly) -> EPoly {
        let mut out = EPoly::zero();
        for (&(p1, q1), a) in &self.terms {
            for (&(p2, q2), b) in &rhs.terms {
                let p = p1.checked_add(p2).expect("u-exponent overflow");
                let q = q1.checked_add(q2).expect("v-exponent overflow");
                out.add_term(p, q, a * b);
            }
        }
        out
    }
}

impl Mul for EPoly {
    type Output = EPoly;
    fn mul(self, rhs: EPoly) -> EPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for EPoly {
    fn sum<I: Iterator<Item = EPoly>>(iter: I) -> EPoly {
        iter.fold(EPoly::zero(), |acc, e| &acc + &e)
    }
}

fn uv_monomial(p: u32) -> String {
    match p {
        0 => String::new(),
        1 => "uv".to_owned(),
        k => format!("(uv)^{k}"),
    }
}

fn monomial(p: u32, q: u32) -> String {
    let var = |name: &str, e: u32| match e {
        0 => None,
        1 => Some(name.to_owned()),
        e => Some(format!("{name}^{e}")),
    };
    [var("u", p), var("v", q)]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join("*")
}

/// Terms in lexicographic `(p, q)` order, e.g. `uv + (uv)^2` or `1 - v - u + u*v`.
impl fmt::Display for EPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let pure = self.is_pure_uv();
        for (i, (&(p, q), c)) in self.terms.iter().enumerate() {
            let mon = if pure { uv_monomial(p) } else { monomial(p, q) };
            let abs = c.abs();
            let body = match (mon.is_empty(), abs.is_one()) {
                (true, _) => abs.to_string(),
                (false, true) => mon,
                (false, false) => format!("{abs}*{mon}"),
            };
            match (i, c.is_negative()) {
                (0, false) => f.write_str(&body)?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}
