//! Finite groups of invertible cyclotomic matrices.
//!
//! Groups are built by breadth-first closure from generators and keep their
//! elements in insertion order, identity first, so every downstream
//! computation is reproducible. Conjugacy classes and projective classes
//! are computed on first use and cached.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::OnceLock;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

use crate::cyclotomic::{order_cap, Cyclotomic, CyclotomicError};
use crate::matrix::{CycMatrix, MatrixError, MatrixKey};

/// Default bound on the number of elements produced by [`MatrixGroup::closure`].
pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("generator {index} has size {found}, expected {expected}")]
    SizeMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("generator {index} is not invertible")]
    NonInvertible { index: usize },
    #[error("closure exceeded {cap} elements; group not certified finite at this cap")]
    CapExceeded { cap: usize },
    #[error("element order exceeds {bound}; input is not of finite order")]
    OrderBoundExceeded { bound: usize },
    #[error("eigenvalue multiplicity for exponent {k} is not a nonnegative integer: {value}")]
    NonIntegerMultiplicity { k: u32, value: String },
    #[error("symplectic form needs an even matrix size, got {0}")]
    OddSize(usize),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Cyclotomic(#[from] CyclotomicError),
}

/// Eigenvalue exponents of a finite-order matrix: the eigenvalue
/// `exp(2πi k/m)` occurs with multiplicity `mults[k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenData {
    pub modulus: u32,
    pub mults: BTreeMap<u32, u32>,
}

impl EigenData {
    pub fn dimension(&self) -> u32 {
        self.mults.values().sum()
    }

    pub fn fixed_dimension(&self) -> u32 {
        self.mults.get(&0).copied().unwrap_or(0)
    }

    /// `Σ a_i` with eigenvalues `exp(2πi a_i)`, `a_i ∈ [0, 1)`.
    pub fn weight(&self) -> BigRational {
        let num: u64 = self.mults.iter().map(|(&k, &n)| k as u64 * n as u64).sum();
        BigRational::new(num.into(), self.modulus.into())
    }

    /// Multiplicities of the distinct eigenvalues, sorted descending.
    pub fn multiplicity_multiset(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.mults.values().copied().collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Least element index in the class.
    pub representative: usize,
    pub elements: Vec<usize>,
}

/// A class of the image of the group modulo its scalar subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveClass {
    pub representative: usize,
    pub elements: Vec<usize>,
    /// Indices into [`MatrixGroup::conjugacy_classes`] fused into this class.
    pub ordinary_classes: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct FixedSubspace {
    pub dimension: usize,
    pub basis: Vec<Vec<Cyclotomic>>,
}

#[derive(Debug)]
pub struct MatrixGroup {
    dim: usize,
    field_order: u32,
    elements: Vec<CycMatrix>,
    index: HashMap<MatrixKey, usize>,
    generators: Vec<usize>,
    scalars: Vec<usize>,
    classes: OnceLock<Vec<ConjugacyClass>>,
    projective: OnceLock<Vec<ProjectiveClass>>,
}

impl MatrixGroup {
    /// Closes `generators` under multiplication. An empty generator list
    /// yields the trivial group of size `dim`.
    pub fn closure(dim: usize, generators: &[CycMatrix], cap: usize) -> Result<Self, GroupError> {
        for (index, g) in generators.iter().enumerate() {
            if g.dim() != dim {
                return Err(GroupError::SizeMismatch {
                    index,
                    expected: dim,
                    found: g.dim(),
                });
            }
        }
        let mut order = 1u64;
        for g in generators {
            order = order.lcm(&(g.order() as u64));
        }
        if order > order_cap() as u64 {
            return Err(CyclotomicError::OrderCapExceeded(order, order_cap()).into());
        }
        let order = order as u32;
        let gens = generators
            .iter()
            .map(|g| g.lift(order))
            .collect::<Result<Vec<_>, _>>()?;
        for (index, g) in gens.iter().enumerate() {
            if !g.is_invertible() {
                return Err(GroupError::NonInvertible { index });
            }
        }

        let identity = CycMatrix::identity(dim, order);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity.key(), 0usize);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for s in &gens {
                let prod = elements[i].try_mul(s)?;
                let key = prod.key();
                if index.contains_key(&key) {
                    continue;
                }
                if elements.len() >= cap {
                    return Err(GroupError::CapExceeded { cap });
                }
                index.insert(key, elements.len());
                queue.push_back(elements.len());
                elements.push(prod);
            }
        }
        let generators = gens.iter().map(|g| index[&g.key()]).collect();
        Ok(Self::assemble(dim, order, elements, index, generators))
    }

    fn assemble(
        dim: usize,
        field_order: u32,
        elements: Vec<CycMatrix>,
        index: HashMap<MatrixKey, usize>,
        generators: Vec<usize>,
    ) -> Self {
        let scalars = elements
            .iter()
            .enumerate()
            .filter(|(_, g)| g.as_scalar().is_some())
            .map(|(i, _)| i)
            .collect();
        Self {
            dim,
            field_order,
            elements,
            index,
            generators,
            scalars,
            classes: OnceLock::new(),
            projective: OnceLock::new(),
        }
    }

    /// Matrix size `d`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Cyclotomic order shared by all entries.
    pub fn field_order(&self) -> u32 {
        self.field_order
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[CycMatrix] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &CycMatrix {
        &self.elements[i]
    }

    pub fn identity_index(&self) -> usize {
        0
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Indices of the elements of the form `ζ·I`.
    pub fn scalar_subgroup(&self) -> &[usize] {
        &self.scalars
    }

    pub fn index_of(&self, m: &CycMatrix) -> Option<usize> {
        let m = m.lift(self.field_order).ok()?;
        self.index.get(&m.key()).copied()
    }

    /// Index of the product `elements[a] · elements[b]`.
    pub fn mul_index(&self, a: usize, b: usize) -> usize {
        let prod = self.elements[a]
            .try_mul(&self.elements[b])
            .expect("same-order product");
        self.index[&prod.key()]
    }

    pub fn inverse_index(&self, a: usize) -> usize {
        let inv = self.elements[a]
            .inverse()
            .expect("group elements are invertible");
        self.index[&inv.key()]
    }

    /// Indices of the subgroup generated by the given elements.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[0] = true;
        let mut out = vec![0];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for &s in gens {
                let j = self.mul_index(i, s);
                if !seen[j] {
                    seen[j] = true;
                    out.push(j);
                    queue.push_back(j);
                }
            }
        }
        out
    }

    /// Conjugacy classes, ordered by representative; the identity class comes first.
    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        self.classes.get_or_init(|| self.compute_classes())
    }

    fn compute_classes(&self) -> Vec<ConjugacyClass> {
        // conjugation by the generators and their inverses reaches every
        // conjugate because the group is finite
        let conjugators: Vec<(usize, usize)> = self
            .generators
            .iter()
            .map(|&s| (s, self.inverse_index(s)))
            .collect();
        let mut class_of = vec![usize::MAX; self.order()];
        let mut classes = Vec::new();
        for start in 0..self.order() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class_of[start] = id;
            let mut members = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(g) = queue.pop_front() {
                for &(s, s_inv) in &conjugators {
                    for (a, b) in [(s, s_inv), (s_inv, s)] {
                        let h = self.mul_index(self.mul_index(a, g), b);
                        if class_of[h] == usize::MAX {
                            class_of[h] = id;
                            members.push(h);
                            queue.push_back(h);
                        }
                    }
                }
            }
            members.sort_unstable();
            classes.push(ConjugacyClass {
                representative: start,
                elements: members,
            });
        }
        classes
    }

    pub fn class_count(&self) -> usize {
        self.conjugacy_classes().len()
    }

    /// Index of the conjugacy class containing element `i`.
    pub fn class_of(&self, i: usize) -> usize {
        self.conjugacy_classes()
            .iter()
            .position(|c| c.elements.binary_search(&i).is_ok())
            .expect("classes cover the group")
    }

    /// Classes of the image in `PGL(d)`: `g ~ h` iff `x g x⁻¹ = s h` for
    /// some `x` in the group and some scalar `s` in the group.
    pub fn projective_classes(&self) -> &[ProjectiveClass] {
        self.projective
            .get_or_init(|| self.compute_projective_classes())
    }

    fn compute_projective_classes(&self) -> Vec<ProjectiveClass> {
        let classes = self.conjugacy_classes();
        let mut class_of = vec![0usize; self.order()];
        for (c, class) in classes.iter().enumerate() {
            for &e in &class.elements {
                class_of[e] = c;
            }
        }
        let mut parent: Vec<usize> = (0..classes.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (c, class) in classes.iter().enumerate() {
            for &s in &self.scalars {
                let other = class_of[self.mul_index(s, class.representative)];
                let (a, b) = (find(&mut parent, c), find(&mut parent, other));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for c in 0..classes.len() {
            let root = find(&mut parent, c);
            groups.entry(root).or_default().push(c);
        }
        groups
            .into_values()
            .map(|ordinary| {
                let mut elements: Vec<usize> = ordinary
                    .iter()
                    .flat_map(|&c| classes[c].elements.iter().copied())
                    .collect();
                elements.sort_unstable();
                ProjectiveClass {
                    representative: elements[0],
                    elements,
                    ordinary_classes: ordinary,
                }
            })
            .collect()
    }

    pub fn projective_class_count(&self) -> usize {
        self.projective_classes().len()
    }

    /// The image of the group under `g ↦ diag(g, (gᵀ)⁻¹)` acting on `Cᵈ ⊕ (Cᵈ)*`.
    /// Element indices are preserved.
    pub fn cotangent_lift(&self) -> MatrixGroup {
        let elements: Vec<CycMatrix> = self.elements.iter().map(cotangent_lift_matrix).collect();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.key(), i))
            .collect();
        Self::assemble(
            2 * self.dim,
            self.field_order,
            elements,
            index,
            self.generators.clone(),
        )
    }

    /// Multiset of element orders, as `order → count`.
    pub fn element_order_histogram(&self) -> Result<BTreeMap<u32, usize>, GroupError> {
        let mut hist = BTreeMap::new();
        for g in &self.elements {
            *hist.entry(element_order(g, self.order())?).or_insert(0) += 1;
        }
        Ok(hist)
    }
}

/// `diag(g, (gᵀ)⁻¹)`.
pub fn cotangent_lift_matrix(g: &CycMatrix) -> CycMatrix {
    let dual = g
        .transpose()
        .inverse()
        .expect("group elements are invertible");
    g.block_diag(&dual).expect("same order blocks")
}

/// The standard symplectic form `[[0, I], [-I, 0]]` of size `2n`.
pub fn standard_symplectic_form(n: usize) -> CycMatrix {
    let mut rows = vec![vec![0i64; 2 * n]; 2 * n];
    for i in 0..n {
        rows[i][n + i] = 1;
        rows[n + i][i] = -1;
    }
    CycMatrix::from_integers(&rows)
}

/// Whether `gᵀ J g = J` for the standard form `J`.
pub fn is_symplectic(g: &CycMatrix) -> Result<bool, GroupError> {
    if !g.dim().is_multiple_of(2) {
        return Err(GroupError::OddSize(g.dim()));
    }
    let j = standard_symplectic_form(g.dim() / 2);
    let lhs = g.transpose().try_mul(&j)?.try_mul(g)?;
    Ok(lhs == j.lift(g.order())?)
}

pub fn fixed_subspace(g: &CycMatrix) -> FixedSubspace {
    let basis = g.fixed_basis();
    FixedSubspace {
        dimension: basis.len(),
        basis,
    }
}

/// Least `m ≥ 1` with `gᵐ = I`, searching up to `bound`.
pub fn element_order(g: &CycMatrix, bound: usize) -> Result<u32, GroupError> {
    let mut power = g.clone();
    for m in 1..=bound.max(1) {
        if power.is_identity() {
            return Ok(m as u32);
        }
        power = power.try_mul(g)?;
    }
    Err(GroupError::OrderBoundExceeded { bound })
}

/// Eigenvalue multiplicities from the trace transform
/// `mult_k = (1/m) Σ_j tr(gʲ) ζ_m^{-jk}`.
pub fn eigen_data(g: &CycMatrix) -> Result<EigenData, GroupError> {
    let m = element_order(g, DEFAULT_CLOSURE_CAP)?;
    let n = (g.order() as u64).lcm(&(m as u64));
    if n > order_cap() as u64 {
        return Err(CyclotomicError::OrderCapExceeded(n, order_cap()).into());
    }
    let n = n as u32;
    let step = (n / m) as i64;
    let mut traces = Vec::with_capacity(m as usize);
    let mut power = CycMatrix::identity(g.dim(), g.order());
    for _ in 0..m {
        traces.push(power.trace().lift(n)?);
        power = power.try_mul(g)?;
    }
    let inv_m = BigRational::new(1.into(), m.into());
    let mut mults = BTreeMap::new();
    for k in 0..m {
        let mut acc = Cyclotomic::zero(n);
        for (j, tr) in traces.iter().enumerate() {
            let e = -(j as i64) * (k as i64) * step;
            acc = &acc + &tr.mul_root(e);
        }
        let value = acc.scale(&inv_m);
        let mult = value
            .as_rational()
            .filter(|r| r.is_integer() && !r.is_negative())
            .and_then(|r| r.to_integer().to_u32())
            .ok_or_else(|| GroupError::NonIntegerMultiplicity {
                k,
                value: value.to_string(),
            })?;
        if mult > 0 {
            mults.insert(k, mult);
        }
    }
    let data = EigenData { modulus: m, mults };
    if data.dimension() as usize != g.dim() {
        return Err(GroupError::NonIntegerMultiplicity {
            k: 0,
            value: format!("multiplicities sum to {}", data.dimension()),
        });
    }
    Ok(data)
}

/// Batyrev weight (age) `Σ a_i`.
pub fn weight(g: &CycMatrix) -> Result<BigRational, GroupError> {
    Ok(eigen_data(g)?.weight())
}

/// Converts an integral weight to `u32`; `None` if the weight is fractional.
pub fn integral_weight(w: &BigRational) -> Option<u32> {
    if w.is_integer() && !w.is_negative() {
        w.to_integer().to_u32()
    } else {
        None
    }
}

impl PartialEq for MatrixGroup {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.elements == other.elements
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(m: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root(m, k)
    }

    fn quaternion() -> MatrixGroup {
        let a = CycMatrix::diagonal(vec![z(4, 1), z(4, 3)]).unwrap();
        let b = CycMatrix::from_integers(&[vec![0, 1], vec![-1, 0]]);
        MatrixGroup::closure(2, &[a, b], 100).unwrap()
    }

    fn s3() -> MatrixGroup {
        let gens = [
            CycMatrix::permutation(&[1, 0, 2]),
            CycMatrix::permutation(&[0, 2, 1]),
        ];
        MatrixGroup::closure(3, &gens, 100).unwrap()
    }

    #[test]
    fn closure_examples() {
        let g = CycMatrix::diagonal(vec![z(3, 1), z(3, 2)]).unwrap();
        assert_eq!(MatrixGroup::closure(2, &[g], 100).unwrap().order(), 3);
        assert_eq!(quaternion().order(), 8);
        let trivial = MatrixGroup::closure(4, &[], 100).unwrap();
        assert_eq!(trivial.order(), 1);
        assert!(trivial.element(0).is_identity());
        assert_eq!(trivial.dim(), 4);
    }

    #[test]
    fn closure_errors() {
        let singular = CycMatrix::from_integers(&[vec![1, 1], vec![1, 1]]);
        let ok = CycMatrix::from_integers(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(
            MatrixGroup::closure(2, &[ok.clone(), singular], 10).unwrap_err(),
            GroupError::NonInvertible { index: 1 }
        );
        let infinite = CycMatrix::from_integers(&[vec![1, 1], vec![0, 1]]);
        assert_eq!(
            MatrixGroup::closure(2, &[infinite], 50).unwrap_err(),
            GroupError::CapExceeded { cap: 50 }
        );
        assert!(matches!(
            MatrixGroup::closure(3, &[ok], 10).unwrap_err(),
            GroupError::SizeMismatch {
                index: 0,
                expected: 3,
                found: 2
            }
        ));
    }

    #[test]
    fn class_examples() {
        let trivial = MatrixGroup::closure(2, &[], 10).unwrap();
        assert_eq!(trivial.class_count(), 1);

        let s3 = s3();
        let mut sizes: Vec<usize> = s3
            .conjugacy_classes()
            .iter()
            .map(|c| c.elements.len())
            .collect();
        assert_eq!(sizes[0], 1);
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);

        assert_eq!(quaternion().class_count(), 5);
    }

    #[test]
    fn projective_class_examples() {
        let minus = CycMatrix::from_integers(&[vec![-1, 0], vec![0, -1]]);
        let pm = MatrixGroup::closure(2, &[minus], 10).unwrap();
        assert_eq!(pm.scalar_subgroup().len(), 2);
        assert_eq!(pm.projective_class_count(), 1);

        let c4 = MatrixGroup::closure(
            2,
            &[CycMatrix::diagonal(vec![z(4, 1), z(4, 3)]).unwrap()],
            10,
        )
        .unwrap();
        assert_eq!(c4.scalar_subgroup().len(), 2);
        assert_eq!(c4.projective_class_count(), 2);

        let trivial = MatrixGroup::closure(3, &[], 10).unwrap();
        assert_eq!(trivial.projective_class_count(), 1);
    }

    #[test]
    fn fixed_subspace_examples() {
        assert_eq!(fixed_subspace(&CycMatrix::identity(3, 1)).dimension, 3);
        let minus = CycMatrix::from_integers(&[vec![-1, 0], vec![0, -1]]);
        assert_eq!(fixed_subspace(&minus).dimension, 0);
        assert_eq!(
            fixed_subspace(&CycMatrix::permutation(&[1, 0, 2])).dimension,
            2
        );
    }

    #[test]
    fn order_eigen_weight_examples() {
        let id = CycMatrix::identity(2, 1);
        let rot = CycMatrix::diagonal(vec![z(3, 1), z(3, 2)]).unwrap();
        let minus = CycMatrix::from_integers(&[vec![-1, 0], vec![0, -1]]);
        assert_eq!(element_order(&id, 10).unwrap(), 1);
        assert_eq!(element_order(&rot, 10).unwrap(), 3);
        assert_eq!(element_order(&minus, 10).unwrap(), 2);
        let infinite = CycMatrix::from_integers(&[vec![1, 1], vec![0, 1]]);
        assert_eq!(
            element_order(&infinite, 20).unwrap_err(),
            GroupError::OrderBoundExceeded { bound: 20 }
        );

        let e = eigen_data(&id).unwrap();
        assert_eq!(e.mults, BTreeMap::from([(0, 2)]));
        let e = eigen_data(&rot).unwrap();
        assert_eq!((e.modulus, e.mults), (3, BTreeMap::from([(1, 1), (2, 1)])));
        let e = eigen_data(&minus).unwrap();
        assert_eq!((e.modulus, e.mults), (2, BTreeMap::from([(1, 2)])));

        let one = BigRational::from_integer(1.into());
        assert!(num_traits::Zero::is_zero(&weight(&id).unwrap()));
        assert_eq!(weight(&minus).unwrap(), one);
        assert_eq!(weight(&rot).unwrap(), one);
    }

    #[test]
    fn cotangent_lift_examples() {
        let lifted = cotangent_lift_matrix(&CycMatrix::identity(2, 1));
        assert!(lifted.is_identity() && lifted.dim() == 4);

        let g = CycMatrix::diagonal(vec![z(3, 1)]).unwrap();
        let lifted = cotangent_lift_matrix(&g);
        assert_eq!(lifted, CycMatrix::diagonal(vec![z(3, 1), z(3, 2)]).unwrap());
        assert!(lifted.determinant().is_one());

        let swap = cotangent_lift_matrix(&CycMatrix::permutation(&[1, 0]));
        // MᵀJM = J by hand: the swap acts identically on both blocks
        assert!(is_symplectic(&swap).unwrap());
        assert!(swap.determinant().is_one());
    }

    #[test]
    fn symplectic_examples() {
        assert!(is_symplectic(&CycMatrix::identity(2, 1)).unwrap());
        assert!(is_symplectic(&CycMatrix::diagonal(vec![z(4, 1), z(4, 3)]).unwrap()).unwrap());
        assert!(!is_symplectic(&CycMatrix::diagonal(vec![z(4, 1), z(4, 1)]).unwrap()).unwrap());
        assert_eq!(
            is_symplectic(&CycMatrix::identity(3, 1)).unwrap_err(),
            GroupError::OddSize(3)
        );
    }

    #[test]
    fn lifted_group_keeps_indices() {
        let s3 = s3();
        let lifted = s3.cotangent_lift();
        assert_eq!(lifted.order(), 6);
        for (i, g) in s3.elements().iter().enumerate() {
            assert_eq!(lifted.element(i), &cotangent_lift_matrix(g));
        }
        assert_eq!(lifted.class_count(), 3);
    }

    #[test]
    fn histogram_of_quaternion_orders() {
        let hist = quaternion().element_order_histogram().unwrap();
        assert_eq!(hist, BTreeMap::from([(1, 1), (2, 1), (4, 6)]));
    }
}
