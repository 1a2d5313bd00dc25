//! Square matrices over a cyclotomic field, with exact Gaussian elimination.

use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use thiserror::Error;

use crate::cyclotomic::{order_cap, Cyclotomic, CyclotomicError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix is not square: row {row} has {len} entries, expected {dim}")]
    NotSquare { row: usize, len: usize, dim: usize },
    #[error("matrix sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error(transparent)]
    Cyclotomic(#[from] CyclotomicError),
}

/// Hashable canonical form of a matrix whose entries share one order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatrixKey(Vec<Vec<BigRational>>);

/// A `d × d` matrix over `Q(ζ_M)`; every entry is stored at the matrix order `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycMatrix {
    dim: usize,
    order: u32,
    entries: Vec<Cyclotomic>,
}

impl CycMatrix {
    pub fn new(rows: Vec<Vec<Cyclotomic>>) -> Result<Self, MatrixError> {
        let dim = rows.len();
        for (row, r) in rows.iter().enumerate() {
            if r.len() != dim {
                return Err(MatrixError::NotSquare {
                    row,
                    len: r.len(),
                    dim,
                });
            }
        }
        let mut order = 1u64;
        for c in rows.iter().flatten() {
            order = order.lcm(&(c.order() as u64));
        }
        if order > order_cap() as u64 {
            return Err(CyclotomicError::OrderCapExceeded(order, order_cap()).into());
        }
        let order = order as u32;
        let entries = rows
            .into_iter()
            .flatten()
            .map(|c| c.lift(order))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            dim,
            order,
            entries,
        })
    }

    /// Builds a matrix over `Q` from integer rows; panics on ragged input.
    pub fn from_integers(rows: &[Vec<i64>]) -> Self {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| Cyclotomic::from_integer(1, x)).collect())
                .collect(),
        )
        .expect("integer matrix")
    }

    pub fn identity(dim: usize, order: u32) -> Self {
        Self::scalar(dim, &Cyclotomic::one(order))
    }

    pub fn scalar(dim: usize, c: &Cyclotomic) -> Self {
        let mut entries = vec![Cyclotomic::zero(c.order()); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = c.clone();
        }
        Self {
            dim,
            order: c.order(),
            entries,
        }
    }

    pub fn diagonal(diag: Vec<Cyclotomic>) -> Result<Self, MatrixError> {
        let dim = diag.len();
        let mut rows = Vec::with_capacity(dim);
        for (i, c) in diag.into_iter().enumerate() {
            let mut row = vec![Cyclotomic::zero(c.order()); dim];
            row[i] = c;
            rows.push(row);
        }
        Self::new(rows)
    }

    /// Permutation matrix sending basis vector `e_j` to `e_{perm[j]}`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut rows = vec![vec![0i64; n]; n];
        for (j, &i) in perm.iter().enumerate() {
            rows[i][j] = 1;
        }
        Self::from_integers(&rows)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.entries[i * self.dim + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Cyclotomic]> {
        self.entries.chunks(self.dim.max(1)).take(self.dim)
    }

    pub fn key(&self) -> MatrixKey {
        MatrixKey(self.entries.iter().map(|c| c.coeffs().to_vec()).collect())
    }

    pub fn lift(&self, order: u32) -> Result<Self, MatrixError> {
        if order == self.order {
            return Ok(self.clone());
        }
        Ok(Self {
            dim: self.dim,
            order,
            entries: self
                .entries
                .iter()
                .map(|c| c.lift(order))
                .collect::<Result<_, _>>()?,
        })
    }

    fn joined(&self, other: &Self) -> Result<(Self, Self), MatrixError> {
        if self.dim != other.dim {
            return Err(MatrixError::SizeMismatch(self.dim, other.dim));
        }
        if self.order == other.order {
            return Ok((self.clone(), other.clone()));
        }
        let l = (self.order as u64).lcm(&(other.order as u64));
        if l > order_cap() as u64 {
            return Err(CyclotomicError::OrderCapExceeded(l, order_cap()).into());
        }
        Ok((self.lift(l as u32)?, other.lift(l as u32)?))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.dim == other.dim && self.order == other.order {
            return Ok(self.mul_same(other));
        }
        let (a, b) = self.joined(other)?;
        Ok(a.mul_same(&b))
    }

    fn mul_same(&self, other: &Self) -> Self {
        let d = self.dim;
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let mut acc = Cyclotomic::zero(self.order);
                for k in 0..d {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                entries.push(acc);
            }
        }
        Self {
            dim: d,
            order: self.order,
            entries,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.dim, self.order);
        for _ in 0..e {
            acc = acc.mul_same(self);
        }
        acc
    }

    pub fn scale(&self, c: &Cyclotomic) -> Result<Self, MatrixError> {
        let s = Self::scalar(self.dim, c);
        s.try_mul(self)
    }

    pub fn transpose(&self) -> Self {
        let d = self.dim;
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                entries.push(self.get(j, i).clone());
            }
        }
        Self {
            dim: d,
            order: self.order,
            entries,
        }
    }

    pub fn trace(&self) -> Cyclotomic {
        (0..self.dim).fold(Cyclotomic::zero(self.order), |acc, i| &acc + self.get(i, i))
    }

    pub fn is_identity(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                let c = self.get(i, j);
                if i == j {
                    c.is_one()
                } else {
                    c.is_zero()
                }
            })
        })
    }

    /// Returns `c` if the matrix equals `c·I`.
    pub fn as_scalar(&self) -> Option<Cyclotomic> {
        if self.dim == 0 {
            return Some(Cyclotomic::one(self.order));
        }
        let c = self.get(0, 0);
        let ok = (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                if i == j {
                    self.get(i, j) == c
                } else {
                    self.get(i, j).is_zero()
                }
            })
        });
        ok.then(|| c.clone())
    }

    /// `diag(self, other)` as a block matrix.
    pub fn block_diag(&self, other: &Self) -> Result<Self, MatrixError> {
        let (a, b) = if self.order == other.order {
            (self.clone(), other.clone())
        } else {
            let l = (self.order as u64).lcm(&(other.order as u64)) as u32;
            (self.lift(l)?, other.lift(l)?)
        };
        let d = a.dim + b.dim;
        let mut rows = vec![vec![Cyclotomic::zero(a.order); d]; d];
        for i in 0..a.dim {
            for j in 0..a.dim {
                rows[i][j] = a.get(i, j).clone();
            }
        }
        for i in 0..b.dim {
            for j in 0..b.dim {
                rows[a.dim + i][a.dim + j] = b.get(i, j).clone();
            }
        }
        Self::new(rows)
    }

    fn to_rows(&self) -> Vec<Vec<Cyclotomic>> {
        self.rows().map(<[Cyclotomic]>::to_vec).collect()
    }

    pub fn determinant(&self) -> Cyclotomic {
        let mut m = self.to_rows();
        let n = self.dim;
        let mut det = Cyclotomic::one(self.order);
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return Cyclotomic::zero(self.order);
            };
            if p != col {
                m.swap(p, col);
                det = -det;
            }
            det = &det * &m[col][col];
            let inv = m[col][col].inv().expect("nonzero pivot");
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let f = &m[r][col] * &inv;
                for c in col..n {
                    let delta = &f * &m[col][c];
                    m[r][c] = &m[r][c] - &delta;
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        !self.determinant().is_zero()
    }

    pub fn rank(&self) -> usize {
        rank_of_rows(self.to_rows(), self.dim)
    }

    /// Basis of the fixed space `ker(self - I)`.
    pub fn fixed_basis(&self) -> Vec<Vec<Cyclotomic>> {
        let mut rows = self.to_rows();
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = &row[i] - &Cyclotomic::one(self.order);
        }
        kernel(rows, self.dim, self.order)
    }

    /// Inverse by Gauss-Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.dim;
        let mut m: Vec<Vec<Cyclotomic>> = self
            .to_rows()
            .into_iter()
            .enumerate()
            .map(|(i, mut r)| {
                r.extend((0..n).map(|j| {
                    if i == j {
                        Cyclotomic::one(self.order)
                    } else {
                        Cyclotomic::zero(self.order)
                    }
                }));
                r
            })
            .collect();
        for col in 0..n {
            let p = (col..n).find(|&r| !m[r][col].is_zero())?;
            m.swap(p, col);
            let inv = m[col][col].inv().ok()?;
            for c in 0..2 * n {
                m[col][c] = &m[col][c] * &inv;
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in 0..2 * n {
                        let delta = &f * &m[col][c];
                        m[r][c] = &m[r][c] - &delta;
                    }
                }
            }
        }
        Some(Self {
            dim: n,
            order: self.order,
            entries: m.into_iter().flat_map(|r| r.into_iter().skip(n)).collect(),
        })
    }
}

/// Reduced row echelon form in place; returns pivot columns.
pub(crate) fn rref(rows: &mut [Vec<Cyclotomic>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("nonzero pivot");
        for c in col..ncols {
            rows[r][c] = &rows[r][c] * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                for c in col..ncols {
                    let delta = &f * &rows[r][c];
                    rows[i][c] = &rows[i][c] - &delta;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

pub(crate) fn rank_of_rows(mut rows: Vec<Vec<Cyclotomic>>, ncols: usize) -> usize {
    rref(&mut rows, ncols).len()
}

fn kernel(mut rows: Vec<Vec<Cyclotomic>>, ncols: usize, order: u32) -> Vec<Vec<Cyclotomic>> {
    let pivots = rref(&mut rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Cyclotomic::zero(order); ncols];
            v[f] = Cyclotomic::one(order);
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -&rows[i][f];
            }
            v
        })
        .collect()
}

impl fmt::Display for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for (j, c) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{c}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}
