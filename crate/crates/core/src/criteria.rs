//! Necessary conditions for a linear quotient to admit a symplectic
//! resolution, and the pseudo-reflection test for smooth quotients.
//!
//! A failing verdict rules a resolution out. A passing verdict proves nothing.

use std::collections::HashMap;

use num_rational::BigRational;
use thiserror::Error;

use crate::cyclotomic::Cyclotomic;
use crate::matgroup::{is_symplectic, GroupError, MatrixGroup};
use crate::matrix::{rank_of_rows, rref};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriteriaError {
    #[error("element {index} does not preserve the standard symplectic form")]
    NotSymplectic { index: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A fixed subspace `Fix(g)` that is maximal under inclusion among all
/// `Fix(g)`, `g ≠ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalFixed {
    /// Least element index with this fixed subspace.
    pub element: usize,
    pub dimension: usize,
    pub codimension: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail {
        witness: usize,
        fixed_dimension: usize,
        codimension: usize,
    },
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflectionGeneration {
    pub reflections: Vec<usize>,
    pub subgroup_order: usize,
    pub generated: bool,
}

type SubspaceKey = Vec<Vec<BigRational>>;

struct Subspace {
    element: usize,
    rows: Vec<Vec<Cyclotomic>>,
}

fn fixed_dimensions(group: &MatrixGroup) -> Vec<usize> {
    group
        .elements()
        .iter()
        .map(|g| g.fixed_basis().len())
        .collect()
}

/// Distinct fixed subspaces of the nontrivial elements that are maximal
/// under inclusion, sorted by element index.
pub fn maximal_fixed_subspaces(group: &MatrixGroup) -> Vec<MaximalFixed> {
    let d = group.dim();
    let mut seen: HashMap<SubspaceKey, usize> = HashMap::new();
    let mut spaces: Vec<Subspace> = Vec::new();
    for (i, g) in group.elements().iter().enumerate().skip(1) {
        let mut rows = g.fixed_basis();
        rref(&mut rows, d);
        let key: SubspaceKey = rows.iter().flatten().map(|c| c.coeffs().to_vec()).collect();
        if seen.contains_key(&key) {
            continue;
        }
        seen.insert(key, spaces.len());
        spaces.push(Subspace { element: i, rows });
    }
    let contained_in = |small: &Subspace, big: &Subspace| {
        let mut rows = big.rows.clone();
        rows.extend(small.rows.iter().cloned());
        rank_of_rows(rows, d) == big.rows.len()
    };
    spaces
        .iter()
        .filter(|s| {
            !spaces
                .iter()
                .any(|t| t.rows.len() > s.rows.len() && contained_in(s, t))
        })
        .map(|s| MaximalFixed {
            element: s.element,
            dimension: s.rows.len(),
            codimension: d - s.rows.len(),
        })
        .collect()
}

/// Codimensions of the maximal fixed subspaces, ascending.
pub fn maximal_fixed_codims(group: &MatrixGroup) -> Vec<usize> {
    let mut v: Vec<usize> = maximal_fixed_subspaces(group)
        .iter()
        .map(|m| m.codimension)
        .collect();
    v.sort_unstable();
    v
}

fn check_symplectic(group: &MatrixGroup) -> Result<(), CriteriaError> {
    for (index, g) in group.elements().iter().enumerate() {
        if !is_symplectic(g)? {
            return Err(CriteriaError::NotSymplectic { index });
        }
    }
    Ok(())
}

/// The union of the fixed loci of nontrivial elements must be empty or of
/// pure codimension 2. On failure the witness is the least element whose
/// fixed subspace is maximal with codimension other than 2.
pub fn passes_pure_codim2(group: &MatrixGroup) -> Result<Verdict, CriteriaError> {
    check_symplectic(group)?;
    Ok(maximal_fixed_subspaces(group)
        .into_iter()
        .find(|m| m.codimension != 2)
        .map_or(Verdict::Pass, |m| Verdict::Fail {
            witness: m.element,
            fixed_dimension: m.dimension,
            codimension: m.codimension,
        }))
}

/// Elements whose fixed subspace has codimension 2.
pub fn symplectic_reflections(group: &MatrixGroup) -> Result<Vec<usize>, CriteriaError> {
    check_symplectic(group)?;
    let d = group.dim();
    Ok(fixed_dimensions(group)
        .into_iter()
        .enumerate()
        .filter(|&(_, f)| d - f == 2)
        .map(|(i, _)| i)
        .collect())
}

pub fn generated_by_symplectic_reflections(
    group: &MatrixGroup,
) -> Result<ReflectionGeneration, CriteriaError> {
    let reflections = symplectic_reflections(group)?;
    Ok(generation(group, reflections))
}

/// Elements fixing a hyperplane.
pub fn pseudo_reflections(group: &MatrixGroup) -> Vec<usize> {
    let d = group.dim();
    fixed_dimensions(group)
        .into_iter()
        .enumerate()
        .filter(|&(_, f)| f + 1 == d)
        .map(|(i, _)| i)
        .collect()
}

/// Whether the pseudo-reflections generate the group, i.e. whether
/// `Cⁿ/G` is smooth.
pub fn generated_by_pseudo_reflections(group: &MatrixGroup) -> ReflectionGeneration {
    generation(group, pseudo_reflections(group))
}

fn generation(group: &MatrixGroup, reflections: Vec<usize>) -> ReflectionGeneration {
    let subgroup_order = group.generated_subgroup(&reflections).len();
    ReflectionGeneration {
        generated: subgroup_order == group.order(),
        reflections,
        subgroup_order,
    }
}
