//! Built-in named groups.
//!
//! The binary polyhedral groups use the standard quaternionic generators
//! in `SU(2)`: `i = diag(ζ₄, ζ₄⁻¹)`, `j = [[0, 1], [−1, 0]]`, and
//! `ω = (1 + i + j + k)/2` for the tetrahedral group over `Q(ζ₄)`; the
//! octahedral group adds `diag(ζ₈, ζ₈⁻¹)`. The icosahedral group uses
//! Klein's generators over `Q(ζ₅)`:
//! `S = diag(ζ³, ζ²)` and `T = (1/√5)[[−(ζ − ζ⁴), ζ² − ζ³], [ζ² − ζ³, ζ − ζ⁴]]`
//! with `√5 = ζ + ζ⁴ − ζ² − ζ³`.

use num_rational::BigRational;
use thiserror::Error;

use crate::cyclotomic::Cyclotomic;
use crate::matgroup::{GroupError, MatrixGroup};
use crate::matrix::CycMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog group {0:?}")]
    Unknown(String),
    #[error("catalog group {name:?} needs an integer parameter >= {min}, got {given:?}")]
    BadParameter {
        name: String,
        min: u32,
        given: Option<String>,
    },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Names accepted by [`catalog_group`]; `:k` marks an integer parameter.
pub const CATALOG_NAMES: &[&str] = &[
    "trivial-sl2",
    "minus-one-sl2",
    "minus-one-sp4",
    "cyclic-sl2:k",
    "binary-dihedral:k",
    "binary-tetrahedral",
    "binary-octahedral",
    "binary-icosahedral",
    "symmetric:n",
    "symmetric-sl:n",
];

fn z(m: u32, k: i64) -> Cyclotomic {
    Cyclotomic::root(m, k)
}

fn int(m: u32, n: i64) -> Cyclotomic {
    Cyclotomic::from_integer(m, n)
}

fn m2(a: Cyclotomic, b: Cyclotomic, c: Cyclotomic, d: Cyclotomic) -> CycMatrix {
    CycMatrix::new(vec![vec![a, b], vec![c, d]]).expect("2x2")
}

/// `⟨diag(ζ_k, ζ_k⁻¹)⟩`, cyclic of order `k`.
pub fn cyclic_sl2_generators(k: u32) -> Vec<CycMatrix> {
    vec![m2(z(k, 1), int(k, 0), int(k, 0), z(k, -1))]
}

/// Binary dihedral group of order `4k`.
pub fn binary_dihedral_generators(k: u32) -> Vec<CycMatrix> {
    let m = 2 * k;
    vec![
        m2(z(m, 1), int(m, 0), int(m, 0), z(m, -1)),
        m2(int(m, 0), int(m, 1), int(m, -1), int(m, 0)),
    ]
}

pub fn binary_tetrahedral_generators() -> Vec<CycMatrix> {
    let half = BigRational::new(1.into(), 2.into());
    let i = z(4, 1);
    let one = int(4, 1);
    let omega = m2(
        (&one + &i).scale(&half),
        (&one + &i).scale(&half),
        (&i - &one).scale(&half),
        (&one - &i).scale(&half),
    );
    vec![
        m2(i.clone(), int(4, 0), int(4, 0), -&i),
        m2(int(4, 0), int(4, 1), int(4, -1), int(4, 0)),
        omega,
    ]
}

pub fn binary_octahedral_generators() -> Vec<CycMatrix> {
    let mut gens = binary_tetrahedral_generators();
    gens.push(m2(z(8, 1), int(8, 0), int(8, 0), z(8, -1)));
    gens
}

pub fn binary_icosahedral_generators() -> Vec<CycMatrix> {
    let e = |k| z(5, k);
    let sqrt5 = &(&e(1) + &e(4)) - &(&e(2) + &e(3));
    let inv = sqrt5.inv().expect("sqrt 5 is nonzero");
    let a = &e(1) - &e(4);
    let b = &e(2) - &e(3);
    let s = m2(e(3), int(5, 0), int(5, 0), e(2));
    let t = m2(-&(&inv * &a), &inv * &b, &inv * &b, &inv * &a);
    vec![s, t]
}

/// Adjacent transpositions as `n × n` permutation matrices.
pub fn symmetric_generators(n: usize) -> Vec<CycMatrix> {
    (0..n.saturating_sub(1))
        .map(|i| {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.swap(i, i + 1);
            CycMatrix::permutation(&perm)
        })
        .collect()
}

/// Adjacent transpositions rescaled into `SL(n)`: by `−1` for odd `n`,
/// by `ζ_{2n}` for even `n`. The image in `PGL(n)` is the permutation group.
pub fn symmetric_sl_generators(n: usize) -> Vec<CycMatrix> {
    let scale = if n % 2 == 1 {
        int(1, -1)
    } else {
        z(2 * n as u32, 1)
    };
    symmetric_generators(n)
        .into_iter()
        .map(|g| g.scale(&scale).expect("scalar multiple"))
        .collect()
}

fn parameter(name: &str, given: Option<&str>, min: u32) -> Result<u32, CatalogError> {
    given
        .and_then(|s| s.trim().parse::<u32>().ok())
        .filter(|&k| k >= min)
        .ok_or_else(|| CatalogError::BadParameter {
            name: name.to_owned(),
            min,
            given: given.map(str::to_owned),
        })
}

/// Matrix size and generators of a catalog group.
pub fn catalog_generators(name: &str) -> Result<(usize, Vec<CycMatrix>), CatalogError> {
    let (base, param) = match name.split_once(':') {
        Some((b, p)) => (b, Some(p)),
        None => (name, None),
    };
    let no_param = |r: (usize, Vec<CycMatrix>)| {
        if param.is_some() {
            Err(CatalogError::Unknown(name.to_owned()))
        } else {
            Ok(r)
        }
    };
    match base {
        "trivial-sl2" => no_param((2, Vec::new())),
        "minus-one-sl2" => no_param((2, vec![CycMatrix::scalar(2, &int(1, -1))])),
        "minus-one-sp4" => no_param((4, vec![CycMatrix::scalar(4, &int(1, -1))])),
        "binary-tetrahedral" => no_param((2, binary_tetrahedral_generators())),
        "binary-octahedral" => no_param((2, binary_octahedral_generators())),
        "binary-icosahedral" => no_param((2, binary_icosahedral_generators())),
        "cyclic-sl2" => Ok((2, cyclic_sl2_generators(parameter(base, param, 1)?))),
        "binary-dihedral" => Ok((2, binary_dihedral_generators(parameter(base, param, 1)?))),
        "symmetric" => {
            let n = parameter(base, param, 1)? as usize;
            Ok((n, symmetric_generators(n)))
        }
        "symmetric-sl" => {
            let n = parameter(base, param, 1)? as usize;
            Ok((n, symmetric_sl_generators(n)))
        }
        _ => Err(CatalogError::Unknown(name.to_owned())),
    }
}

pub fn catalog_group(name: &str, cap: usize) -> Result<MatrixGroup, CatalogError> {
    let (dim, gens) = catalog_generators(name)?;
    Ok(MatrixGroup::closure(dim, &gens, cap)?)
}
