use std::sync::Arc;

use num_traits::{One, Zero};

use super::*;
use crate::algebra::{
    extension_embedding, exterior_algebra, field_algebra, path_algebra, tensor_extension, truncated_polynomial,
    twist_automorphism, Quiver,
};
use crate::fields::FieldTower;
use crate::scalar::{Fp, Rational};
use crate::verdict::{Search, Strategy, Verdict};

type Q = Rational;
type F2 = Fp<2>;

fn qv(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| Q::from_i64(x)).collect()
}

fn gaussian() -> Arc<FieldTower<Q>> {
    Arc::new(FieldTower::new(qv(&[1, 0, 1]), "i", vec![qv(&[0, 1]), qv(&[0, -1])]).unwrap())
}

fn kron_gamma() -> Arc<Algebra<Q>> {
    Arc::new(tensor_extension(gaussian(), Arc::new(path_algebra(&Quiver::kronecker()).unwrap())).unwrap())
}

/// `K --(1, a)--> K`.
fn kron_point(gamma: &Arc<Algebra<Q>>, a: crate::fields::FieldElem<Q>) -> Module<Q> {
    let k = &gamma.extension_tag().unwrap().tower;
    Module::k_representation(gamma.clone(), &[1, 1], &[vec![k.one()], vec![a]]).unwrap()
}

fn i_and_minus_i(gamma: &Arc<Algebra<Q>>) -> (Module<Q>, Module<Q>) {
    let k = gamma.extension_tag().unwrap().tower.clone();
    let i = k.generator();
    (kron_point(gamma, i.clone()), kron_point(gamma, k.neg(&i)))
}

fn restrict(m: &Module<Q>) -> Module<Q> {
    m.pullback(&extension_embedding(m.algebra()).unwrap()).unwrap()
}

fn exhaustive() -> Search {
    Search::new(Strategy::Exhaustive, 0, 0)
}

#[test]
fn kronecker_points_are_valid_modules() {
    let gamma = kron_gamma();
    let (m, n) = i_and_minus_i(&gamma);
    assert_eq!(m.dim(), 4);
    assert_eq!(n.k_dim_over_extension(), Some(2));
    assert_eq!(Module::zero(gamma.clone()).dim(), 0);
}

#[test]
fn relation_violations_are_caught() {
    // X acting by a non-nilpotent matrix on a module over Q[x]/(x^2)
    let alg = Arc::new(truncated_polynomial::<Q>(2).unwrap());
    let x = Matrix::from_i64_rows(&[&[1, 0], &[0, 0]]);
    let err = Module::from_generator_actions(alg.clone(), 2, &[x]).unwrap_err();
    assert_eq!(err, Error::RelationViolated(1, 1));
    let bad_unit = vec![Matrix::zeros(1, 1), Matrix::zeros(1, 1)];
    assert_eq!(Module::new(alg, bad_unit).unwrap_err(), Error::UnitNotIdentity);
}

#[test]
fn direct_sums() {
    let alg = Arc::new(exterior_algebra::<Q>(2).unwrap());
    let reg = Module::regular(alg.clone());
    assert_eq!(reg.direct_sum(&Module::zero(alg.clone())).unwrap(), reg);
    assert_eq!(reg.power(3).dim(), 12);
    let other = Module::regular(Arc::new(exterior_algebra::<Q>(1).unwrap()));
    assert_eq!(reg.direct_sum(&other).unwrap_err(), Error::AlgebraMismatch);
}

#[test]
fn hom_spaces_of_small_modules() {
    let one = Arc::new(Algebra::<Q>::from_structure_constants(vec![vec![qv(&[1])]], qv(&[1])).unwrap());
    let s = Module::regular(one);
    assert_eq!(HomSpace::new(&s, &s).unwrap().k_dim(), 1);

    let gamma = kron_gamma();
    let (m, n) = i_and_minus_i(&gamma);
    let hmn = HomSpace::new(&m, &n).unwrap();
    assert_eq!(hmn.k_dim(), 0);
    let hmm = HomSpace::new(&m, &m).unwrap();
    assert_eq!((hmm.k_dim(), hmm.ext_dim()), (2, Some(1)));
    for f in hmm.basis() {
        assert!(f.verify());
        assert_eq!(hmm.coords(&hmm.combination(&hmm.coords(f.matrix()))), hmm.coords(f.matrix()));
    }
}

#[test]
fn hom_is_additive() {
    let alg = Arc::new(path_algebra::<Q>(&Quiver::kronecker()).unwrap());
    let rep = |a: i64, b: i64| {
        Module::representation(alg.clone(), &[1, 1], &[Matrix::from_i64_rows(&[&[a]]), Matrix::from_i64_rows(&[&[b]])]).unwrap()
    };
    let reg = Module::regular(alg.clone());
    let (a, b) = (rep(1, 2), rep(0, 1));
    let ab = a.direct_sum(&b).unwrap();
    let dim = |x: &Module<Q>, y: &Module<Q>| HomSpace::new(x, y).unwrap().k_dim();
    for c in [&a, &b, &reg] {
        assert_eq!(dim(&ab, c), dim(&a, c) + dim(&b, c));
        assert_eq!(dim(c, &ab), dim(c, &a) + dim(c, &b));
    }
}

#[test]
fn iso_test_on_conjugate_points() {
    let gamma = kron_gamma();
    let (m, n) = i_and_minus_i(&gamma);
    match iso_test(&m, &n, Search::default()).unwrap() {
        Verdict::Refuted(c) => {
            assert_eq!(c, IsoCertificate::HomProbe { probe: "A", covariant: true, left: 2, right: 0 });
            assert!(c.verify(&m, &n));
        }
        other => panic!("expected a refutation, got {:?}", other.status()),
    }
    let (rm, rn) = (restrict(&m), restrict(&n));
    let w = iso_test(&rm, &rn, Search::default()).unwrap();
    let f = w.witness().expect("isomorphic after restriction");
    assert!(f.verify() && f.is_iso());
    assert!(iso_test(&m, &m, Search::default()).unwrap().is_proved());
}

#[test]
fn exhaustive_iso_over_f2() {
    let alg = Arc::new(truncated_polynomial::<F2>(2).unwrap());
    let reg = Module::regular(alg.clone());
    let x = Matrix::from_fn(2, 2, |r, c| if r == 1 && c == 0 { F2::new(1) } else { F2::new(0) });
    let other = Module::from_generator_actions(alg.clone(), 2, &[x]).unwrap();
    assert!(iso_test(&reg, &other, exhaustive()).unwrap().is_proved());
    let triv = Module::from_generator_actions(alg, 2, &[Matrix::zeros(2, 2)]).unwrap();
    assert!(iso_test(&reg, &triv, exhaustive()).unwrap().is_refuted());
}

#[test]
fn endomorphism_rings() {
    let gamma = kron_gamma();
    let (m, _) = i_and_minus_i(&gamma);
    let (e, _) = end_algebra(&m).unwrap();
    assert_eq!(e.dim(), 2);
    assert!(e.is_commutative());
    match is_division(&e, Search::default()) {
        Verdict::Proved(RingProof::PrimitiveElement { min_poly, .. }) => {
            // the minimal polynomial of a primitive element of Q(i) is a quadratic with negative discriminant
            assert_eq!(min_poly.len(), 3);
            let disc = min_poly[1].clone() * min_poly[1].clone() - Q::from_i64(4) * min_poly[0].clone();
            assert!(disc.is_negative());
        }
        other => panic!("unexpected {:?}", other.status()),
    }

    let dual = Arc::new(truncated_polynomial::<F2>(2).unwrap());
    let (e, _) = end_algebra(&Module::regular(dual)).unwrap();
    assert_eq!(e.dim(), 2);
    match is_division(&e, exhaustive()) {
        Verdict::Refuted(c) => assert!(c.verify(&e)),
        other => panic!("unexpected {:?}", other.status()),
    }
    assert!(is_local(&e, exhaustive()).is_proved());
}

#[test]
fn radicals_in_characteristic_zero() {
    let k = gaussian();
    assert!(radical_char0(&field_algebra(k.clone()).unwrap()).unwrap().is_empty());
    let kk = tensor_extension(k.clone(), Arc::new(field_algebra(k).unwrap())).unwrap();
    assert!(radical_char0(&kk).unwrap().is_empty());
    let ext = Arc::new(exterior_algebra::<Q>(2).unwrap());
    let (e, _) = end_algebra(&Module::regular(ext)).unwrap();
    let j = radical_char0(&e).unwrap();
    assert_eq!(j.len(), 3);
    assert!(matches!(radical_char0(&truncated_polynomial::<F2>(2).unwrap()), Err(Error::WrongCharacteristic)));
}

#[test]
fn locality() {
    let ext = Arc::new(exterior_algebra::<Q>(2).unwrap());
    let reg = Module::regular(ext);
    let (e, _) = end_algebra(&reg).unwrap();
    assert!(is_local(&e, Search::default()).is_proved());
    let (e2, _) = end_algebra(&reg.power(2)).unwrap();
    match is_local(&e2, Search::default()) {
        Verdict::Refuted(c) => assert!(c.verify(&e2)),
        other => panic!("unexpected {:?}", other.status()),
    }
    let f2 = Arc::new(Algebra::<F2>::from_structure_constants(vec![vec![vec![F2::new(1)]]], vec![F2::new(1)]).unwrap());
    let (e, _) = end_algebra(&Module::regular(f2.clone())).unwrap();
    assert!(is_local(&e, exhaustive()).is_proved());
    let (e, _) = end_algebra(&Module::regular(f2).power(2)).unwrap();
    match is_local(&e, exhaustive()) {
        Verdict::Refuted(c) => assert!(c.verify(&e)),
        other => panic!("unexpected {:?}", other.status()),
    }
}

#[test]
fn pullbacks_and_twists() {
    let gamma = kron_gamma();
    let (m, n) = i_and_minus_i(&gamma);
    assert_eq!(m.pullback(&crate::algebra::AlgebraMorphism::identity(gamma.clone())).unwrap(), m);
    let conj = twist_automorphism(&gamma, 1).unwrap();
    let twisted = m.pullback(&conj).unwrap();
    assert!(iso_test(&twisted, &n, Search::default()).unwrap().is_proved());
    assert_eq!(restrict(&twisted), restrict(&m));
    let twice = m.pullback(&conj.compose(&conj).unwrap()).unwrap();
    assert_eq!(twice, twisted.pullback(&conj).unwrap());
}

#[test]
fn submodules_and_quotients() {
    let ext = Arc::new(exterior_algebra::<Q>(2).unwrap());
    let reg = Module::regular(ext);
    let radical: Vec<Vec<Q>> = (1..4).map(|i| (0..4).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect();
    let (sub, inc) = reg.submodule(&radical).unwrap();
    assert_eq!((sub.dim(), inc.shape()), (3, (4, 3)));
    assert!(ModuleMorphism::new(sub, reg.clone(), inc).is_ok());
    let (top, proj) = reg.quotient(&radical).unwrap();
    assert_eq!(top.dim(), 1);
    assert!(ModuleMorphism::new(reg.clone(), top, proj).is_ok());
    assert!(matches!(reg.submodule(&radical[..1]), Err(Error::NotClosed(_))));
}
