//! Worked examples for every public operation, checked exactly.

use mckay_core::catalog::catalog_group;
use mckay_core::criteria::{
    generated_by_pseudo_reflections, generated_by_symplectic_reflections, maximal_fixed_codims,
    passes_pure_codim2, symplectic_reflections, Verdict,
};
use mckay_core::epoly::{affine_quotient_e, geometric_sum};
use mckay_core::group_input::group_from_document;
use mckay_core::hilbcurve::{
    check_goettsche_vs_strata, goettsche_series, hilb_poincare_strata, macdonald_series,
    poincare_sym_nu,
};
use mckay_core::matgroup::{
    cotangent_lift_matrix, eigen_data, element_order, fixed_subspace, is_symplectic, weight,
};
use mckay_core::mckay::{
    euler_tpn, hodge_cotangent_general, hodge_tpn, orbifold_assemble, stringy_e_linear_symplectic,
    Stratum,
};
use mckay_core::series::{partitions, qseries_inv_factor};
use mckay_core::{CycMatrix, Cyclotomic, EPoly, MatrixGroup, Partition, QSeries, TPoly};
use num_bigint::BigInt;
use num_rational::BigRational;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn ints(v: &[i64]) -> Vec<BigRational> {
    v.iter().map(|&c| q(c, 1)).collect()
}

fn z(m: u32, k: i64) -> Cyclotomic {
    Cyclotomic::root(m, k)
}

fn uv(c: &[i64]) -> EPoly {
    EPoly::from_uv_coeffs(c)
}

fn t(c: &[i64]) -> TPoly {
    TPoly::from_i64(c)
}

fn diag(d: Vec<Cyclotomic>) -> CycMatrix {
    CycMatrix::diagonal(d).unwrap()
}

fn closure(dim: usize, gens: &[CycMatrix]) -> MatrixGroup {
    MatrixGroup::closure(dim, gens, 100).unwrap()
}

fn minus_one(d: usize) -> CycMatrix {
    CycMatrix::scalar(d, &Cyclotomic::from_integer(1, -1))
}

fn quaternion() -> MatrixGroup {
    closure(
        2,
        &[
            diag(vec![z(4, 1), z(4, 3)]),
            CycMatrix::from_integers(&[vec![0, 1], vec![-1, 0]]),
        ],
    )
}

fn s3() -> MatrixGroup {
    closure(
        3,
        &[
            CycMatrix::permutation(&[1, 0, 2]),
            CycMatrix::permutation(&[0, 2, 1]),
        ],
    )
}

fn c3() -> MatrixGroup {
    closure(2, &[diag(vec![z(3, 1), z(3, 2)])])
}

fn c4() -> MatrixGroup {
    closure(2, &[diag(vec![z(4, 1), z(4, 3)])])
}

fn pm(d: usize) -> MatrixGroup {
    closure(d, &[minus_one(d)])
}

// cyclotomic arithmetic

#[test]
fn cyclotomic_construction() {
    assert_eq!(Cyclotomic::new(4, ints(&[0, 1, 0, 0])).unwrap(), z(4, 1));
    let minus = Cyclotomic::new(2, ints(&[0, 1])).unwrap();
    assert_eq!(minus, Cyclotomic::from_integer(1, -1).lift(2).unwrap());
    assert_eq!(minus, Cyclotomic::from_integer(1, -1));
    assert!(Cyclotomic::new(3, ints(&[-1, -1, -1])).unwrap().is_zero());
}

#[test]
fn cyclotomic_operations() {
    assert_eq!(&z(4, 1) * &z(4, 1), Cyclotomic::from_integer(4, -1));
    assert_eq!(z(3, 1).inv().unwrap(), z(3, 2));
    assert!((&z(6, 1) + &(-&z(6, 1))).is_zero());
}

// matrix groups

#[test]
fn closure_examples() {
    assert_eq!(c3().order(), 3);
    assert_eq!(quaternion().order(), 8);
    let trivial = closure(2, &[]);
    assert_eq!(trivial.order(), 1);
    assert!(trivial.element(0).is_identity());
}

#[test]
fn class_examples() {
    assert_eq!(closure(2, &[]).class_count(), 1);
    let mut sizes: Vec<usize> = s3()
        .conjugacy_classes()
        .iter()
        .map(|c| c.elements.len())
        .collect();
    sizes.sort_unstable();
    assert_eq!(sizes, vec![1, 2, 3]);
    assert_eq!(quaternion().class_count(), 5);
}

#[test]
fn projective_class_examples() {
    let g = pm(2);
    assert_eq!(g.scalar_subgroup().len(), 2);
    assert_eq!(g.projective_class_count(), 1);
    let g = c4();
    assert_eq!(g.scalar_subgroup().len(), 2);
    assert_eq!(g.order() / g.scalar_subgroup().len(), 2);
    assert_eq!(g.projective_class_count(), 2);
    assert_eq!(closure(2, &[]).projective_class_count(), 1);
}

#[test]
fn fixed_subspace_examples() {
    assert_eq!(fixed_subspace(&CycMatrix::identity(3, 1)).dimension, 3);
    assert_eq!(fixed_subspace(&minus_one(2)).dimension, 0);
    assert_eq!(
        fixed_subspace(&CycMatrix::permutation(&[1, 0, 2])).dimension,
        2
    );
}

#[test]
fn element_order_examples() {
    assert_eq!(element_order(&CycMatrix::identity(2, 1), 100).unwrap(), 1);
    assert_eq!(
        element_order(&diag(vec![z(3, 1), z(3, 2)]), 100).unwrap(),
        3
    );
    assert_eq!(element_order(&minus_one(2), 100).unwrap(), 2);
}

#[test]
fn eigen_examples() {
    let e = eigen_data(&CycMatrix::identity(2, 1)).unwrap();
    assert_eq!(e.mults.into_iter().collect::<Vec<_>>(), vec![(0, 2)]);
    let e = eigen_data(&diag(vec![z(3, 1), z(3, 2)])).unwrap();
    assert_eq!(e.modulus, 3);
    assert_eq!(
        e.mults.into_iter().collect::<Vec<_>>(),
        vec![(1, 1), (2, 1)]
    );
    let e = eigen_data(&minus_one(2)).unwrap();
    assert_eq!(e.modulus, 2);
    assert_eq!(e.mults.into_iter().collect::<Vec<_>>(), vec![(1, 2)]);
}

#[test]
fn weight_examples() {
    assert_eq!(weight(&CycMatrix::identity(2, 1)).unwrap(), q(0, 1));
    assert_eq!(weight(&minus_one(2)).unwrap(), q(1, 1));
    assert_eq!(weight(&diag(vec![z(3, 1), z(3, 2)])).unwrap(), q(1, 1));
}

#[test]
fn cotangent_lift_examples() {
    for n in 1..4 {
        assert_eq!(
            cotangent_lift_matrix(&CycMatrix::identity(n, 1)),
            CycMatrix::identity(2 * n, 1)
        );
    }
    let l = cotangent_lift_matrix(&diag(vec![z(3, 1)]));
    assert_eq!(l, diag(vec![z(3, 1), z(3, 2)]));
    assert!(l.determinant().is_one());
    let swap = cotangent_lift_matrix(&CycMatrix::permutation(&[1, 0]));
    assert_eq!(swap.dim(), 4);
    assert!(is_symplectic(&swap).unwrap());
}

#[test]
fn symplectic_examples() {
    assert!(is_symplectic(&CycMatrix::identity(2, 1)).unwrap());
    assert!(is_symplectic(&diag(vec![z(4, 1), z(4, 3)])).unwrap());
    assert!(!is_symplectic(&diag(vec![z(4, 1), z(4, 1)])).unwrap());
}

// E-polynomials

#[test]
fn epoly_examples() {
    assert_eq!(&uv(&[0, 1]) * &uv(&[1, 1]), uv(&[0, 1, 1]));
    let e = uv(&[3, 0, 2]);
    assert_eq!(&e + &EPoly::zero(), e);
    assert_eq!(geometric_sum(3).unwrap(), uv(&[1, 1, 1]));
    assert_eq!(geometric_sum(1).unwrap(), EPoly::one());
    assert_eq!(geometric_sum(2).unwrap(), uv(&[1, 1]));
    assert_eq!(geometric_sum(4).unwrap(), uv(&[1, 1, 1, 1]));
    assert_eq!(affine_quotient_e(0), EPoly::one());
    assert_eq!(affine_quotient_e(1), uv(&[0, 1]));
    assert_eq!(affine_quotient_e(3), uv(&[0, 0, 0, 1]));
}

#[test]
fn euler_and_shape_examples() {
    assert_eq!(uv(&[1, 1]).euler_number(), 2.into());
    assert_eq!(uv(&[0, 1, 1]).euler_number(), 2.into());
    for k in 1..8 {
        assert_eq!(geometric_sum(k).unwrap().euler_number(), k.into());
    }
    let e = uv(&[0, 1, 1]);
    assert!(e.is_pure_uv());
    assert_eq!(e.uv_degree_range().unwrap(), (1, 2));
    assert!(!EPoly::monomial(1, 2, BigInt::from(1)).is_pure_uv());
    assert!(EPoly::one().is_pure_uv());
    assert_eq!(EPoly::one().uv_degree_range().unwrap(), (0, 0));
}

// orbifold formulas

fn stratum(weight: u32, e: EPoly) -> Stratum {
    Stratum {
        weight,
        quotient_e: e,
        label: String::new(),
    }
}

#[test]
fn assemble_examples() {
    assert_eq!(orbifold_assemble(&[stratum(0, EPoly::one())]), EPoly::one());
    assert_eq!(
        orbifold_assemble(&[stratum(0, uv(&[0, 0, 1])), stratum(1, EPoly::one())]),
        uv(&[0, 1, 1])
    );
    assert!(orbifold_assemble(&[]).is_zero());
}

#[test]
fn stringy_examples() {
    assert_eq!(
        stringy_e_linear_symplectic(&closure(2, &[])).unwrap(),
        uv(&[0, 0, 1])
    );
    assert_eq!(stringy_e_linear_symplectic(&pm(2)).unwrap(), uv(&[0, 1, 1]));
    let ico = catalog_group("binary-icosahedral", 1000).unwrap();
    assert_eq!(ico.order(), 120);
    let e = stringy_e_linear_symplectic(&ico).unwrap();
    assert_eq!(e, uv(&[0, 8, 1]));
    assert_eq!(e.euler_number(), 9.into());
}

#[test]
fn tpn_examples() {
    assert_eq!(hodge_tpn(&closure(2, &[])).unwrap(), uv(&[0, 1, 1]));
    for n in 1..5usize {
        let expected: EPoly = (n..=2 * n).map(|i| EPoly::uv_power(i as u32)).sum();
        assert_eq!(hodge_tpn(&closure(n + 1, &[])).unwrap(), expected);
    }
    assert_eq!(hodge_tpn(&pm(2)).unwrap(), uv(&[0, 1, 1]));
    assert_eq!(euler_tpn(&closure(3, &[])).unwrap(), 3.into());
    assert_eq!(euler_tpn(&pm(2)).unwrap(), 2.into());
    assert_eq!(euler_tpn(&c4()).unwrap(), 4.into());
}

#[test]
fn general_cotangent_examples() {
    assert_eq!(
        hodge_cotangent_general(1, &[(0, uv(&[1, 1]))]).unwrap(),
        uv(&[0, 1, 1])
    );
    assert_eq!(
        hodge_cotangent_general(2, &[(0, uv(&[1, 1, 1])), (1, uv(&[1, 1]))]).unwrap(),
        uv(&[0, 0, 2, 2, 1])
    );
    assert_eq!(
        hodge_cotangent_general(0, &[(0, EPoly::one())]).unwrap(),
        EPoly::one()
    );
}

#[test]
fn general_cotangent_matches_hilbert_square() {
    // Hilb²(T*P¹): Poincaré polynomial 1 + 2t² + 2t⁴ against (uv)²(2 + 2uv + (uv)²)
    let e = hodge_cotangent_general(2, &[(0, uv(&[1, 1, 1])), (1, uv(&[1, 1]))]).unwrap();
    let p = hilb_poincare_strata(2, 0).unwrap();
    let coeffs = e.uv_coefficients().unwrap();
    for (i, c) in coeffs.iter().enumerate() {
        let k = 8 - 2 * i;
        assert_eq!(*c, p.coeff(k), "degree {k}");
    }
}

// necessary conditions

#[test]
fn maximal_codim_examples() {
    assert_eq!(maximal_fixed_codims(&pm(2)), vec![2]);
    assert_eq!(maximal_fixed_codims(&pm(4)), vec![4]);
    assert!(maximal_fixed_codims(&closure(2, &[])).is_empty());
}

#[test]
fn pure_codim2_examples() {
    assert_eq!(passes_pure_codim2(&pm(2)).unwrap(), Verdict::Pass);
    let g = pm(4);
    match passes_pure_codim2(&g).unwrap() {
        Verdict::Fail { witness, .. } => assert_eq!(*g.element(witness), minus_one(4)),
        Verdict::Pass => panic!("{{±I}} in Sp(4) passed"),
    }
    assert!(passes_pure_codim2(&s3().cotangent_lift()).unwrap().passed());
}

#[test]
fn symplectic_reflection_examples() {
    let g = pm(2);
    let r = generated_by_symplectic_reflections(&g).unwrap();
    assert_eq!(r.reflections.len(), 1);
    assert_eq!(*g.element(r.reflections[0]), minus_one(2));
    assert!(r.generated);
    let r = generated_by_symplectic_reflections(&pm(4)).unwrap();
    assert!(r.reflections.is_empty());
    assert!(!r.generated);
    let lifted = s3().cotangent_lift();
    let r = generated_by_symplectic_reflections(&lifted).unwrap();
    assert!(r.generated);
    assert_eq!(r.subgroup_order, 6);
    assert_eq!(symplectic_reflections(&lifted).unwrap().len(), 3);
}

#[test]
fn pseudo_reflection_examples() {
    let g = s3();
    assert_eq!(g.order(), 6);
    assert!(generated_by_pseudo_reflections(&g).generated);
    assert!(!generated_by_pseudo_reflections(&c3()).generated);
    assert!(generated_by_pseudo_reflections(&closure(2, &[])).generated);
}

// series and partitions

#[test]
fn partition_examples() {
    assert_eq!(partitions(0).unwrap(), vec![Partition::from_parts(&[])]);
    assert_eq!(partitions(4).unwrap().len(), 5);
    assert_eq!(partitions(10).unwrap().len(), 42);
    assert!(partitions(-1).is_err());
}

#[test]
fn qseries_examples() {
    let geo = qseries_inv_factor(&TPoly::one(), 1, 3).unwrap();
    assert_eq!(geo, QSeries::new(3, vec![TPoly::one(); 4]));
    let lin = QSeries::new(2, vec![TPoly::one(), t(&[0, 1])]);
    assert_eq!(
        lin.pow(2),
        QSeries::new(2, vec![t(&[1]), t(&[0, 2]), t(&[0, 0, 1])])
    );
    for n in 0..6 {
        let inv = qseries_inv_factor(&t(&[0, 0, 1]), 1, n).unwrap();
        let factor = QSeries::new(n, vec![TPoly::one(), t(&[0, 0, -1])]);
        assert_eq!(&inv * &factor, QSeries::one(n));
    }
}

// curves and Hilbert schemes

#[test]
fn macdonald_examples() {
    for g in 0..5 {
        let s = macdonald_series(g, 6).unwrap();
        assert_eq!(*s.coeff(0), TPoly::one());
        assert_eq!(*s.coeff(1), t(&[1, 2 * g, 1]));
    }
    let s = macdonald_series(0, 6).unwrap();
    for m in 0..=6usize {
        let mut c = vec![0; 2 * m + 1];
        for k in 0..=m {
            c[2 * k] = 1;
        }
        assert_eq!(*s.coeff(m), t(&c));
    }
}

#[test]
fn sym_nu_examples() {
    assert_eq!(
        poincare_sym_nu(&Partition::from_parts(&[1]), 1).unwrap(),
        t(&[1, 2, 1])
    );
    assert_eq!(
        poincare_sym_nu(&Partition::from_parts(&[]), 3).unwrap(),
        TPoly::one()
    );
    assert_eq!(
        poincare_sym_nu(&Partition::from_parts(&[1, 1]), 0).unwrap(),
        t(&[1, 0, 1, 0, 1])
    );
}

#[test]
fn strata_examples() {
    assert_eq!(hilb_poincare_strata(0, 2).unwrap(), TPoly::one());
    for g in 0..5 {
        assert_eq!(hilb_poincare_strata(1, g).unwrap(), t(&[1, 2 * g, 1]));
    }
    assert_eq!(hilb_poincare_strata(2, 0).unwrap(), t(&[1, 0, 2, 0, 2]));
}

#[test]
fn product_examples() {
    for g in 0..5 {
        let s = goettsche_series(g, 4).unwrap();
        assert_eq!(*s.coeff(0), TPoly::one());
        assert_eq!(*s.coeff(1), t(&[1, 2 * g, 1]));
    }
    assert_eq!(
        *goettsche_series(0, 4).unwrap().coeff(2),
        t(&[1, 0, 2, 0, 2])
    );
}

#[test]
fn product_vs_strata_examples() {
    assert!(check_goettsche_vs_strata(0, 5).unwrap().passed());
    assert!(check_goettsche_vs_strata(3, 5).unwrap().passed());
    assert!(check_goettsche_vs_strata(0, 0).unwrap().passed());
}

// group input

#[test]
fn input_examples() {
    let doc = r#"{"cyclotomic_order":2, "size":2,
        "generators":[[[["-1"],["0"]],[["0"],["-1"]]]]}"#;
    let g = group_from_document(doc, 100).unwrap();
    assert_eq!(g.order(), 2);
    let c = catalog_group("cyclic-sl2:3", 100).unwrap();
    assert_eq!(c.order(), 3);
    assert!(c.elements().contains(&diag(vec![z(3, 1), z(3, 2)])));
    assert_eq!(
        catalog_group("binary-icosahedral", 1000).unwrap().order(),
        120
    );
}
