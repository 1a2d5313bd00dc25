//! Poincaré polynomials of `Hilbⁿ(T*Σ)` for a smooth projective curve `Σ`.
//!
//! Two independent routes are provided: the sum over partitions `ν` of `n`
//! of `t^{2n − 2d(ν)} P_t(S^ν Σ)`, and Göttsche's infinite product. Both use
//! ordinary (not compactly supported) cohomology.

use thiserror::Error;

use crate::series::{partitions, qseries_inv_factor, Partition, QSeries, TPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("genus must be nonnegative, got {0}")]
    NegativeGenus(i64),
    #[error("series order must be nonnegative, got {0}")]
    NegativeOrder(i64),
}

fn check(genus: i64, order: i64) -> Result<(u32, usize), CurveError> {
    if genus < 0 {
        return Err(CurveError::NegativeGenus(genus));
    }
    if order < 0 {
        return Err(CurveError::NegativeOrder(order));
    }
    Ok((genus as u32, order as usize))
}

/// `1 + t·q` raised to `2g`, times `(1 − q)^{−1}(1 − t²q)^{−1}`: the
/// coefficient of `q^m` is `P_t(S^m Σ)` for a curve of genus `g`.
pub fn macdonald_series(genus: i64, order: i64) -> Result<QSeries, CurveError> {
    let (g, n) = check(genus, order)?;
    let odd = &QSeries::one(n) + &QSeries::monomial(n, 1, TPoly::t_power(1));
    let even0 = qseries_inv_factor(&TPoly::one(), 1, n).expect("d = 1");
    let even2 = qseries_inv_factor(&TPoly::t_power(2), 1, n).expect("d = 1");
    Ok(&(&odd.pow(2 * g) * &even0) * &even2)
}

/// `P_t(S^ν Σ) = Π_j P_t(S^{a_j} Σ)`.
pub fn poincare_sym_nu(nu: &Partition, genus: i64) -> Result<TPoly, CurveError> {
    let top = nu.multiplicities().map(|(_, a)| a).max().unwrap_or(0);
    let sym = macdonald_series(genus, top as i64)?;
    Ok(nu
        .multiplicities()
        .fold(TPoly::one(), |acc, (_, a)| &acc * sym.coeff(a as usize)))
}

/// `Σ_ν t^{2n − 2d(ν)} P_t(S^ν Σ)` over partitions `ν` of `n`.
pub fn hilb_poincare_strata(n: i64, genus: i64) -> Result<TPoly, CurveError> {
    let (_, n) = check(genus, n)?;
    let mut total = TPoly::zero();
    for nu in partitions(n as i64).expect("n >= 0") {
        let shift = 2 * (n - nu.length() as usize);
        total = &total + &poincare_sym_nu(&nu, genus)?.shift(shift);
    }
    Ok(total)
}

/// `Π_{d ≥ 1} (1 + t^{2d−1}q^d)^{b_1} / ((1 − t^{2d−2}q^d)^{b_0} (1 − t^{2d}q^d)^{b_2})`
/// with `(b_0, b_1, b_2) = (1, 2g, 1)`, through `q^N`.
pub fn goettsche_series(genus: i64, order: i64) -> Result<QSeries, CurveError> {
    let (g, n) = check(genus, order)?;
    let mut acc = QSeries::one(n);
    for d in 1..=n {
        let odd = &QSeries::one(n) + &QSeries::monomial(n, d, TPoly::t_power(2 * d - 1));
        acc = &acc * &odd.pow(2 * g);
        for base in [TPoly::t_power(2 * d - 2), TPoly::t_power(2 * d)] {
            acc = &acc * &qseries_inv_factor(&base, d as u32, n).expect("d >= 1");
        }
    }
    Ok(acc)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveVerdict {
    Pass,
    Mismatch {
        n: usize,
        product: TPoly,
        strata: TPoly,
    },
}

impl CurveVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, CurveVerdict::Pass)
    }
}

/// Compares the product formula against the partition sum for every `n ≤ N`.
pub fn check_goettsche_vs_strata(genus: i64, order: i64) -> Result<CurveVerdict, CurveError> {
    let product = goettsche_series(genus, order)?;
    for n in 0..=order as usize {
        let strata = hilb_poincare_strata(n as i64, genus)?;
        if product.coeff(n) != &strata {
            return Ok(CurveVerdict::Mismatch {
                n,
                product: product.coeff(n).clone(),
                strata,
            });
        }
    }
    Ok(CurveVerdict::Pass)
}
