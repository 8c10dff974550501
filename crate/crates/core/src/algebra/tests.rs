use std::sync::Arc;

use num_traits::{One, Zero};

use super::*;
use crate::fields::FieldElem;
use crate::scalar::{Fp, Rational};

type Q = Rational;
type F2 = Fp<2>;

fn qv(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| Q::from_i64(x)).collect()
}

fn gaussian() -> Arc<FieldTower<Q>> {
    Arc::new(FieldTower::new(qv(&[1, 0, 1]), "i", vec![qv(&[0, 1]), qv(&[0, -1])]).unwrap())
}

fn f4() -> Arc<FieldTower<F2>> {
    Arc::new(FieldTower::new(vec![F2::new(1), F2::new(1), F2::new(1)], "w", vec![]).unwrap())
}

fn three_arrow() -> Quiver {
    Quiver::new(
        3,
        vec![(0, 1, "a1".into()), (0, 1, "b1".into()), (1, 2, "a2".into()), (1, 2, "b2".into())],
    )
    .unwrap()
}

#[test]
fn structure_constant_examples() {
    let one = Algebra::<Q>::from_structure_constants(vec![vec![qv(&[1])]], qv(&[1])).unwrap();
    assert_eq!(one.dim(), 1);
    assert_eq!(
        Algebra::<Q>::from_structure_constants(vec![vec![qv(&[0])]], qv(&[1])).unwrap_err(),
        Error::UnitLawFails(0)
    );
    assert!(matches!(
        Algebra::<Q>::from_structure_constants(vec![vec![qv(&[1, 0])]], qv(&[1, 0])),
        Err(Error::ShapeMismatch(_))
    ));
}

#[test]
fn non_associative_table_is_rejected() {
    // basis 1, u, v with u·v = u, v·u = v, u·u = v·v = 0 breaks (u v) u = u (v u)
    let mut t = vec![vec![qv(&[0, 0, 0]); 3]; 3];
    for i in 0..3 {
        t[0][i][i] = Q::one();
        t[i][0][i] = Q::one();
    }
    t[1][2] = qv(&[0, 1, 0]);
    t[2][1] = qv(&[0, 0, 1]);
    assert!(matches!(
        Algebra::from_structure_constants(t, qv(&[1, 0, 0])),
        Err(Error::NotAssociative(..))
    ));
}

#[test]
fn path_algebra_dimensions() {
    assert_eq!(path_algebra::<Q>(&Quiver::kronecker()).unwrap().dim(), 4);
    let three = path_algebra::<Q>(&three_arrow()).unwrap();
    assert_eq!(three.dim(), 11);
    assert_eq!(three.basis_names()[7], "a2*a1");
    assert_eq!(path_algebra::<F2>(&Quiver::a2()).unwrap().dim(), 3);
    let cyclic = Quiver::new(1, vec![(0, 0, "l".into())]).unwrap();
    assert_eq!(path_algebra::<Q>(&cyclic).unwrap_err(), Error::CyclicQuiver);
}

#[test]
fn path_products_compose_right_to_left() {
    let alg = path_algebra::<Q>(&Quiver::a2()).unwrap();
    // basis e1, e2, a with a: 1 -> 2
    let (e1, e2, a) = (alg.basis_vector(0), alg.basis_vector(1), alg.basis_vector(2));
    assert_eq!(alg.mul(&e2, &a), a);
    assert_eq!(alg.mul(&a, &e1), a);
    assert!(alg.mul(&a, &e2).iter().all(Q::is_zero));
}

#[test]
fn exterior_examples() {
    let ext = exterior_algebra::<Q>(2).unwrap();
    assert_eq!(ext.dim(), 4);
    assert_eq!(ext.basis_names(), &["1", "X", "Y", "XY"]);
    let (x, y, xy) = (ext.basis_vector(1), ext.basis_vector(2), ext.basis_vector(3));
    assert_eq!(ext.mul(&x, &y), xy);
    assert_eq!(ext.mul(&y, &x), xy.iter().map(|c| -c.clone()).collect::<Vec<_>>());
    assert!(ext.mul(&x, &x).iter().all(Q::is_zero));
    assert_eq!(exterior_algebra::<Q>(3).unwrap().dim(), 8);
    let e1 = exterior_algebra::<F2>(1).unwrap();
    assert_eq!(e1.dim(), 2);
    assert_eq!(e1.table(), truncated_polynomial::<F2>(2).unwrap().table());
    assert_eq!(exterior_algebra::<Q>(5).unwrap_err(), Error::UnsupportedVarCount(5));
}

#[test]
fn tensor_extension_examples() {
    let k = gaussian();
    let kron = Arc::new(path_algebra::<Q>(&Quiver::kronecker()).unwrap());
    let gamma = tensor_extension(k.clone(), kron.clone()).unwrap();
    assert_eq!(gamma.dim(), 8);

    let cbrt = Arc::new(FieldTower::new(qv(&[-2, 0, 0, 1]), "a", vec![]).unwrap());
    let kk = tensor_extension(cbrt.clone(), Arc::new(field_algebra(cbrt).unwrap())).unwrap();
    assert_eq!(kk.dim(), 9);
    assert!(kk.is_commutative());

    let trivial = Arc::new(FieldTower::new(qv(&[-5, 1]), "c", vec![]).unwrap());
    let same = tensor_extension(trivial, kron.clone()).unwrap();
    assert_eq!(same.table(), kron.table());
}

#[test]
fn extension_agrees_with_plain_tensor_product() {
    let k = gaussian();
    let kron = Arc::new(path_algebra::<Q>(&Quiver::kronecker()).unwrap());
    let gamma = tensor_extension(k.clone(), kron.clone()).unwrap();
    let kf = field_algebra(k).unwrap();
    assert_eq!(gamma.table(), tensor_product(&kf, &kron).unwrap().table());

    // the swap Λ ⊗ K -> K ⊗ Λ is an algebra isomorphism
    let other = Arc::new(tensor_product(&kron, &kf).unwrap());
    let gamma = Arc::new(gamma);
    let (n, ml) = (2, kron.dim());
    let swap = Matrix::from_fn(gamma.dim(), other.dim(), |r, c| {
        let (j, i) = (c / n, c % n);
        if r == i * ml + j { Q::one() } else { Q::zero() }
    });
    let f = AlgebraMorphism::new(other, gamma, swap).unwrap();
    assert_eq!(f.verify(), crate::verdict::Verdict::Proved(MorphismReport { rank: 8, bijective: true }));
}

#[test]
fn embedding_and_centrality() {
    let gamma = Arc::new(tensor_extension(gaussian(), Arc::new(exterior_algebra(2).unwrap())).unwrap());
    assert!(extension_embedding(&gamma).unwrap().verify().is_proved());
    let alpha = gamma.generators().vectors[0].clone();
    for j in 0..gamma.dim() {
        let b = gamma.basis_vector(j);
        assert_eq!(gamma.mul(&alpha, &b), gamma.mul(&b, &alpha));
    }
}

#[test]
fn morphism_verification() {
    let alg = Arc::new(exterior_algebra::<Q>(2).unwrap());
    assert!(AlgebraMorphism::identity(alg.clone()).verify().is_proved());
    let zero = AlgebraMorphism::new(alg.clone(), alg.clone(), Matrix::zeros(4, 4)).unwrap();
    assert_eq!(zero.verify(), crate::verdict::Verdict::Refuted(MorphismFailure::Unit));
    // X -> Y, Y -> X is an automorphism only up to the sign of XY
    let mut swap = Matrix::zeros(4, 4);
    swap.set(0, 0, Q::one());
    swap.set(2, 1, Q::one());
    swap.set(1, 2, Q::one());
    swap.set(3, 3, Q::one());
    let bad = AlgebraMorphism::new(alg.clone(), alg.clone(), swap.clone()).unwrap();
    assert!(matches!(bad.verify(), crate::verdict::Verdict::Refuted(MorphismFailure::Product(..))));
    swap.set(3, 3, -Q::one());
    assert!(AlgebraMorphism::new(alg.clone(), alg, swap).unwrap().verify().is_proved());
}

#[test]
fn twist_examples() {
    let k = gaussian();
    let gamma = Arc::new(tensor_extension(k.clone(), Arc::new(path_algebra(&Quiver::kronecker()).unwrap())).unwrap());
    let id = twist_automorphism(&gamma, 0).unwrap();
    assert!(id.matrix().is_identity());
    let conj = twist_automorphism(&gamma, 1).unwrap();
    assert!(conj.compose(&conj).unwrap().matrix().is_identity());

    let g4 = Arc::new(tensor_extension(f4(), Arc::new(path_algebra(&Quiver::a2()).unwrap())).unwrap());
    let frob = twist_automorphism(&g4, 1).unwrap();
    assert_eq!(frob.verify().witness().map(|r| r.bijective), Some(true));
    assert_eq!(twist_automorphism(&Arc::new(exterior_algebra::<Q>(1).unwrap()), 0).unwrap_err(), Error::NotExtensionAlgebra);
}

#[test]
fn twist_respects_composition() {
    // Q(zeta_7 + zeta_7^-1) would need a cubic; use F_8 = F_2[x]/(x^3+x+1).
    let t = Arc::new(FieldTower::new(vec![F2::new(1), F2::new(1), F2::new(0), F2::new(1)], "w", vec![]).unwrap());
    let gamma = Arc::new(tensor_extension(t.clone(), Arc::new(path_algebra(&Quiver::a2()).unwrap())).unwrap());
    for phi in 0..3 {
        for psi in 0..3 {
            let lhs = twist_automorphism(&gamma, phi).unwrap().compose(&twist_automorphism(&gamma, psi).unwrap()).unwrap();
            let comp = t.compose_automorphisms(phi, psi).unwrap();
            assert_eq!(lhs.matrix(), twist_automorphism(&gamma, comp).unwrap().matrix());
        }
    }
}

/// The ℚ-form of `[[ℂ, ℂ], [0, ℝ]]` with basis E11, iE11, E22, E12, iE12.
fn b2_matrices(k: &FieldTower<Q>) -> Vec<Matrix<Q>> {
    let z = k.zero();
    let one = k.one();
    let i = k.generator();
    let mk = |a: &FieldElem<Q>, b: &FieldElem<Q>, c: &FieldElem<Q>| k.realify(2, 2, &[a.clone(), b.clone(), z.clone(), c.clone()]);
    vec![
        mk(&one, &z, &z),
        mk(&i, &z, &z),
        mk(&z, &z, &one),
        mk(&z, &one, &z),
        mk(&z, &i, &z),
    ]
}

#[test]
fn b2_species_and_its_splitting() {
    let k = gaussian();
    let mats = b2_matrices(&k);
    let names = ["E11", "iE11", "E22", "E12", "iE12"].map(String::from).to_vec();
    let lambda = Arc::new(from_matrix_basis(names, &mats).unwrap());
    assert_eq!(lambda.dim(), 5);

    let q = Quiver::new(3, vec![(1, 0, "alpha".into()), (1, 2, "beta".into())]).unwrap();
    let cq = Arc::new(tensor_extension(k.clone(), Arc::new(path_algebra(&q).unwrap())).unwrap());
    let src = Arc::new(tensor_extension(k, lambda).unwrap());
    // path basis e1, e2, e3, alpha, beta; index 5 + j is i ⊗ path j
    let v = |pairs: &[(usize, i64)]| {
        let mut out = vec![Q::zero(); 10];
        for &(idx, c) in pairs {
            out[idx] = Q::from_i64(c);
        }
        out
    };
    let images = vec![
        v(&[(0, 1), (2, 1)]),
        v(&[(5, 1), (7, -1)]),
        v(&[(1, 1)]),
        v(&[(3, 1), (4, 1)]),
        v(&[(8, 1), (9, -1)]),
    ];
    let f = k_linear_extension(&src, &cq, &images).unwrap();
    assert_eq!(f.verify().witness().map(|r| r.bijective), Some(true));
}
