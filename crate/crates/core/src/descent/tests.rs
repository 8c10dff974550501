use std::sync::Arc;

use super::*;
use crate::algebra::{path_algebra, tensor_extension, Quiver};
use crate::fields::FieldTower;
use crate::modrep::iso_test;
use crate::scalar::{Fp, Rational};
use crate::verdict::Search;

type Q = Rational;
type F2 = Fp<2>;

fn qv(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| Q::from_i64(x)).collect()
}

fn kron_gamma() -> Arc<Algebra<Q>> {
    let k = Arc::new(FieldTower::new(qv(&[1, 0, 1]), "i", vec![qv(&[0, 1]), qv(&[0, -1])]).unwrap());
    Arc::new(tensor_extension(k, Arc::new(path_algebra(&Quiver::kronecker()).unwrap())).unwrap())
}

fn point(gamma: &Arc<Algebra<Q>>, a: &[i64]) -> Module<Q> {
    let k = &gamma.extension_tag().unwrap().tower;
    Module::k_representation(gamma.clone(), &[1, 1], &[vec![k.one()], vec![k.elem(qv(a)).unwrap()]]).unwrap()
}

fn iso(a: &Module<Q>, b: &Module<Q>) -> bool {
    iso_test(a, b, Search::default()).unwrap().is_proved()
}

#[test]
fn degree_one_extension_changes_nothing() {
    let lambda = Arc::new(path_algebra::<Q>(&Quiver::kronecker()).unwrap());
    let k = Arc::new(FieldTower::new(qv(&[-3, 1]), "t", vec![]).unwrap());
    let gamma = Arc::new(tensor_extension(k, lambda.clone()).unwrap());
    let m = Module::representation(
        lambda,
        &[1, 2],
        &[Matrix::from_i64_rows(&[&[1], &[0]]), Matrix::from_i64_rows(&[&[2], &[5]])],
    )
    .unwrap();
    let km = induce(&gamma, &m).unwrap();
    assert_eq!(km.action(), m.action());
    let w = mu_split(&km).unwrap();
    assert!(w.mu.matrix().is_identity() && w.nu.matrix().is_identity());
    assert!(galois_decompose(&km).unwrap().verify());
}

#[test]
fn conjugate_points_split_the_extension() {
    let gamma = kron_gamma();
    let m = point(&gamma, &[0, 1]);
    let n = point(&gamma, &[0, -1]);
    assert_eq!(twist(&m, 0).unwrap(), m);
    let mc = twist(&m, 1).unwrap();
    assert!(twist_hat_holds(&m, &mc, 1).unwrap());
    assert!(iso(&mc, &n));
    assert_eq!(restrict(&mc).unwrap(), restrict(&m).unwrap());

    let w = mu_split(&m).unwrap();
    assert!(w.verify());
    let (kernel, _) = w.mu.kernel();
    assert!(iso(&kernel, &mc));

    let dec = galois_decompose(&m).unwrap();
    assert!(dec.verify());
    let km = induce(&gamma, &restrict(&m).unwrap()).unwrap();
    assert!(iso(&km, &m.direct_sum(&n).unwrap()));
}

#[test]
fn rational_points_descend() {
    let gamma = kron_gamma();
    let x = point(&gamma, &[3]);
    let lambda = gamma.extension_tag().unwrap().lambda.clone();
    let y = Module::representation(lambda, &[1, 1], &[Matrix::from_i64_rows(&[&[1]]), Matrix::from_i64_rows(&[&[3]])]).unwrap();
    let ky = induce(&gamma, &y).unwrap();
    assert!(iso(&ky, &x));
    assert!(iso(&restrict(&ky).unwrap(), &y.power(2)));
    assert_eq!(restrict(&Module::zero(gamma.clone())).unwrap().dim(), 0);
}

#[test]
fn finite_field_extension() {
    let f4 = Arc::new(FieldTower::new(vec![F2::new(1), F2::new(1), F2::new(1)], "w", vec![]).unwrap());
    let a2 = Arc::new(path_algebra::<F2>(&Quiver::a2()).unwrap());
    let gamma = Arc::new(tensor_extension(f4.clone(), a2.clone()).unwrap());
    let w = f4.generator();
    let m = Module::k_representation(gamma.clone(), &[1, 1], &[vec![w]]).unwrap();
    assert!(mu_split(&m).unwrap().verify());
    assert!(galois_decompose(&m).unwrap().verify());

    let s1 = Module::representation(a2.clone(), &[1, 0], &[Matrix::zeros(0, 1)]).unwrap();
    let r = base_change_hom_identity(&gamma, &s1, &s1).unwrap();
    assert_eq!((r.extended, r.base), (2, 1));
    assert!(r.holds());
    let z = Module::zero(a2);
    assert!(base_change_hom_identity(&gamma, &z, &s1).unwrap().holds());
}

#[test]
fn non_normal_towers_are_refused() {
    let cbrt = Arc::new(FieldTower::new(qv(&[-2, 0, 0, 1]), "a", vec![]).unwrap());
    let gamma = Arc::new(tensor_extension(cbrt, Arc::new(path_algebra(&Quiver::a2()).unwrap())).unwrap());
    let k = &gamma.extension_tag().unwrap().tower;
    let m = Module::k_representation(gamma.clone(), &[1, 1], &[vec![k.one()]]).unwrap();
    assert!(mu_split(&m).unwrap().verify());
    assert_eq!(galois_decompose(&m).unwrap_err(), Error::NotNormal);
}
