//! Orbifold E-functions and the Hodge-number formulas for symplectic
//! resolutions of `T*X/G`.
//!
//! All results are reported as `Σ (−1)^{p+q} h^{p,q} u^p v^q`, which equals
//! the E-polynomial because the cohomology of such a resolution is pure.
//! None of these functions certifies that a resolution exists; see
//! [`crate::criteria`] for the necessary conditions.

use num_bigint::BigInt;
use thiserror::Error;

use crate::epoly::{affine_quotient_e, geometric_sum, EPoly};
use crate::matgroup::{eigen_data, integral_weight, is_symplectic, GroupError, MatrixGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum McKayError {
    #[error("element {index} does not preserve the standard symplectic form")]
    NotSymplectic { index: usize },
    #[error("element {index} has determinant {det}, expected 1")]
    NotSpecialLinear { index: usize, det: String },
    #[error("element {index} has non-integral weight {weight}")]
    FractionalWeight { index: usize, weight: String },
    #[error(
        "projective class of element {representative} has lifts with different \
         eigenvalue multiplicities: {first:?} vs {second:?} (element {witness})"
    )]
    InconsistentLifts {
        representative: usize,
        witness: usize,
        first: Vec<u32>,
        second: Vec<u32>,
    },
    #[error("stratum codimension {codim} exceeds the dimension {n}")]
    StratumCodimension { codim: u32, n: u32 },
    #[error("matrix size must be at least 1")]
    EmptyDimension,
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// One `(g, W)` summand `(uv)^{wt(g,W)} E(W/C(g,W))` of the orbifold E-function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    pub weight: u32,
    pub quotient_e: EPoly,
    pub label: String,
}

pub fn orbifold_assemble(strata: &[Stratum]) -> EPoly {
    strata
        .iter()
        .map(|s| &EPoly::uv_power(s.weight) * &s.quotient_e)
        .sum()
}

fn check_symplectic(group: &MatrixGroup) -> Result<(), McKayError> {
    for (index, g) in group.elements().iter().enumerate() {
        if !is_symplectic(g)? {
            return Err(McKayError::NotSymplectic { index });
        }
    }
    Ok(())
}

/// Strata of a linear symplectic action on `C^{2n}`: one per conjugacy class,
/// with `W = Fix(g)` a linear subspace and `E(W/C(g)) = (uv)^{dim W}`.
pub fn linear_symplectic_strata(group: &MatrixGroup) -> Result<Vec<Stratum>, McKayError> {
    check_symplectic(group)?;
    group
        .conjugacy_classes()
        .iter()
        .map(|class| {
            let g = group.element(class.representative);
            let eig = eigen_data(g)?;
            let w = eig.weight();
            let weight = integral_weight(&w).ok_or_else(|| McKayError::FractionalWeight {
                index: class.representative,
                weight: w.to_string(),
            })?;
            Ok(Stratum {
                weight,
                quotient_e: affine_quotient_e(eig.fixed_dimension()),
                label: format!("class of element {}", class.representative),
            })
        })
        .collect()
}

/// The stringy E-function of `C^{2n}/G` for a finite `G ⊂ Sp(2n)`.
pub fn stringy_e_linear_symplectic(group: &MatrixGroup) -> Result<EPoly, McKayError> {
    Ok(orbifold_assemble(&linear_symplectic_strata(group)?))
}

/// One projective class's contribution to the `T*Pⁿ` formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TpnClass {
    pub representative: usize,
    pub size: usize,
    /// Multiplicities `k_i(g)` of the distinct eigenvalues, descending.
    pub multiplicities: Vec<u32>,
    pub contribution: EPoly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TpnHodge {
    pub n: usize,
    pub classes: Vec<TpnClass>,
    pub polynomial: EPoly,
}

fn check_special_linear(group: &MatrixGroup) -> Result<usize, McKayError> {
    if group.dim() == 0 {
        return Err(McKayError::EmptyDimension);
    }
    for (index, g) in group.elements().iter().enumerate() {
        let det = g.determinant();
        if !det.is_one() {
            return Err(McKayError::NotSpecialLinear {
                index,
                det: det.to_string(),
            });
        }
    }
    Ok(group.dim() - 1)
}

/// Hodge numbers of a symplectic resolution of `T*Pⁿ/G` for `G ⊂ SL(n+1)`:
/// `(uv)^n Σ_{g} Σ_i ((uv)^{k_i(g)} − 1)/(uv − 1)` over classes of the image
/// of `G` in `PGL(n+1)`.
pub fn hodge_tpn_detail(group: &MatrixGroup) -> Result<TpnHodge, McKayError> {
    let n = check_special_linear(group)?;
    let ordinary = group.conjugacy_classes();
    let mut classes = Vec::new();
    for pclass in group.projective_classes() {
        let mut multiplicities: Option<Vec<u32>> = None;
        for &c in &pclass.ordinary_classes {
            let rep = ordinary[c].representative;
            let mult = eigen_data(group.element(rep))?.multiplicity_multiset();
            match &multiplicities {
                None => multiplicities = Some(mult),
                Some(first) if *first != mult => {
                    return Err(McKayError::InconsistentLifts {
                        representative: pclass.representative,
                        witness: rep,
                        first: first.clone(),
                        second: mult,
                    })
                }
                Some(_) => {}
            }
        }
        let multiplicities = multiplicities.expect("projective classes are nonempty");
        let contribution = multiplicities
            .iter()
            .map(|&k| geometric_sum(k as i64).expect("multiplicities are positive"))
            .sum();
        classes.push(TpnClass {
            representative: pclass.representative,
            size: pclass.elements.len(),
            multiplicities,
            contribution,
        });
    }
    let sum: EPoly = classes.iter().map(|c| c.contribution.clone()).sum();
    Ok(TpnHodge {
        n,
        polynomial: &EPoly::uv_power(n as u32) * &sum,
        classes,
    })
}

pub fn hodge_tpn(group: &MatrixGroup) -> Result<EPoly, McKayError> {
    Ok(hodge_tpn_detail(group)?.polynomial)
}

/// `e(Z) = (n+1)·c(Ḡ)` with `c(Ḡ)` the number of projective classes.
pub fn euler_tpn(group: &MatrixGroup) -> Result<BigInt, McKayError> {
    let n = check_special_linear(group)?;
    Ok(BigInt::from(n + 1) * BigInt::from(group.projective_class_count()))
}

/// `(uv)^n Σ E(W/C(g,W))` for user-supplied strata `(codim_X W, E(W/C(g,W)))`
/// of a projective `n`-fold `X`. Each stratum is assembled with weight
/// `codim W` and affine fiber `(uv)^{dim W}`.
pub fn hodge_cotangent_general(n: u32, strata: &[(u32, EPoly)]) -> Result<EPoly, McKayError> {
    let strata = strata
        .iter()
        .enumerate()
        .map(|(i, (codim, e))| {
            if *codim > n {
                return Err(McKayError::StratumCodimension { codim: *codim, n });
            }
            Ok(Stratum {
                weight: *codim,
                quotient_e: &affine_quotient_e(n - codim) * e,
                label: format!("stratum {i}"),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(orbifold_assemble(&strata))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::Cyclotomic;
    use crate::matrix::CycMatrix;

    fn uv(c: &[i64]) -> EPoly {
        EPoly::from_uv_coeffs(c)
    }

    fn minus_one(d: usize) -> MatrixGroup {
        let m = CycMatrix::scalar(d, &Cyclotomic::from_integer(1, -1));
        MatrixGroup::closure(d, &[m], 10).unwrap()
    }

    #[test]
    fn assemble_examples() {
        let point = Stratum {
            weight: 0,
            quotient_e: EPoly::one(),
            label: "id".into(),
        };
        assert_eq!(orbifold_assemble(&[point]), EPoly::one());
        let strata = [
            Stratum {
                weight: 0,
                quotient_e: uv(&[0, 0, 1]),
                label: "id".into(),
            },
            Stratum {
                weight: 1,
                quotient_e: EPoly::one(),
                label: "-1".into(),
            },
        ];
        assert_eq!(orbifold_assemble(&strata), uv(&[0, 1, 1]));
        assert!(orbifold_assemble(&[]).is_zero());
    }

    #[test]
    fn stringy_examples() {
        let trivial = MatrixGroup::closure(2, &[], 10).unwrap();
        assert_eq!(
            stringy_e_linear_symplectic(&trivial).unwrap(),
            uv(&[0, 0, 1])
        );
        assert_eq!(
            stringy_e_linear_symplectic(&minus_one(2)).unwrap(),
            uv(&[0, 1, 1])
        );
    }

    #[test]
    fn stringy_rejects_non_symplectic() {
        let g = CycMatrix::diagonal(vec![Cyclotomic::root(4, 1), Cyclotomic::root(4, 1)]).unwrap();
        let group = MatrixGroup::closure(2, &[g], 10).unwrap();
        assert!(matches!(
            stringy_e_linear_symplectic(&group),
            Err(McKayError::NotSymplectic { .. })
        ));
        let odd = MatrixGroup::closure(3, &[], 10).unwrap();
        assert!(matches!(
            stringy_e_linear_symplectic(&odd),
            Err(McKayError::Group(GroupError::OddSize(3)))
        ));
    }

    #[test]
    fn tpn_examples() {
        let trivial = MatrixGroup::closure(2, &[], 10).unwrap();
        assert_eq!(hodge_tpn(&trivial).unwrap(), uv(&[0, 1, 1]));
        assert_eq!(hodge_tpn(&minus_one(2)).unwrap(), uv(&[0, 1, 1]));
        assert_eq!(euler_tpn(&minus_one(2)).unwrap(), 2.into());
        for n in 1..4usize {
            let t = MatrixGroup::closure(n + 1, &[], 10).unwrap();
            let mut expected = vec![0; n];
            expected.extend(std::iter::repeat_n(1, n + 1));
            assert_eq!(hodge_tpn(&t).unwrap(), uv(&expected));
        }
        let t3 = MatrixGroup::closure(3, &[], 10).unwrap();
        assert_eq!(euler_tpn(&t3).unwrap(), 3.into());

        let c4 = MatrixGroup::closure(
            2,
            &[CycMatrix::diagonal(vec![Cyclotomic::root(4, 1), Cyclotomic::root(4, 3)]).unwrap()],
            10,
        )
        .unwrap();
        assert_eq!(euler_tpn(&c4).unwrap(), 4.into());
        let detail = hodge_tpn_detail(&c4).unwrap();
        assert_eq!(detail.classes.len(), 2);
        assert_eq!(detail.classes[1].multiplicities, vec![1, 1]);
    }

    #[test]
    fn tpn_rejects_determinant() {
        let g = CycMatrix::from_integers(&[vec![0, 1], vec![1, 0]]);
        let group = MatrixGroup::closure(2, &[g], 10).unwrap();
        assert!(matches!(
            hodge_tpn(&group),
            Err(McKayError::NotSpecialLinear { index: 1, .. })
        ));
        assert!(euler_tpn(&group).is_err());
    }

    #[test]
    fn general_cotangent_examples() {
        assert_eq!(
            hodge_cotangent_general(1, &[(0, uv(&[1, 1]))]).unwrap(),
            uv(&[0, 1, 1])
        );
        let strata = [(0, uv(&[1, 1, 1])), (1, uv(&[1, 1]))];
        assert_eq!(
            hodge_cotangent_general(2, &strata).unwrap(),
            uv(&[0, 0, 2, 2, 1])
        );
        assert_eq!(
            hodge_cotangent_general(0, &[(0, EPoly::one())]).unwrap(),
            EPoly::one()
        );
        assert!(matches!(
            hodge_cotangent_general(1, &[(2, EPoly::one())]),
            Err(McKayError::StratumCodimension { codim: 2, n: 1 })
        ));
    }
}
