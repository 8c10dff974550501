use std::sync::Arc;

use super::*;
use crate::algebra::{path_algebra, tensor_extension, truncated_polynomial, Algebra, Quiver};
use crate::cases;
use crate::linalg::Matrix;
use crate::modrep::{HomSpace, Module, ModuleMorphism};
use crate::scalar::{Fp, Rational, Scalar};
use crate::verdict::{Search, Status, Strategy};

type Q = Rational;
type F2 = Fp<2>;

fn exhaustive() -> Search {
    Search::new(Strategy::Exhaustive, 0, 0)
}

fn dual_numbers() -> Arc<Algebra<F2>> {
    Arc::new(truncated_polynomial::<F2>(2).unwrap())
}

fn a2<F: crate::Scalar>() -> Arc<Algebra<F>> {
    Arc::new(path_algebra(&Quiver::a2()).unwrap())
}

/// `A_2` representations: simple at 0, simple at 1, and the one with a
/// nonzero arrow.
fn a2_modules<F: crate::Scalar>() -> (Module<F>, Module<F>, Module<F>) {
    let alg = a2::<F>();
    let rep = |dims: &[usize], a: Matrix<F>| Module::representation(alg.clone(), dims, &[a]).unwrap();
    (
        rep(&[1, 0], Matrix::zeros(0, 1)),
        rep(&[0, 1], Matrix::zeros(1, 0)),
        rep(&[1, 1], Matrix::identity(1)),
    )
}

#[test]
fn f_invariant_edge_cases() {
    let m = Module::regular(dual_numbers());
    assert_eq!(f_invariant(&m, 0, exhaustive()).value, 0);
    assert_eq!(f_invariant(&m, 2, exhaustive()).value, 2);
    let zero = Module::zero(dual_numbers());
    assert_eq!(f_invariant(&zero, 3, exhaustive()).value, 0);
}

#[test]
fn regular_module_is_cyclic_by_every_strategy() {
    let m = Module::regular(dual_numbers());
    for s in [Strategy::Exhaustive, Strategy::Symbolic, Strategy::Auto] {
        let f = f_invariant(&m, 1, Search::new(s, 0, 10));
        assert_eq!((f.value, f.certainty), (2, Certainty::Exact), "{s}");
    }
}

#[test]
fn semisimple_module_needs_two_generators() {
    let (s, _, _) = a2_modules::<F2>();
    let ss = s.power(2);
    assert_eq!(f_invariant(&ss, 1, exhaustive()).value, 1);
    assert_eq!(f_invariant(&ss, 1, Search::default().with_strategy(Strategy::Symbolic)).value, 1);
    let randomized = f_invariant(&ss, 1, Search::new(Strategy::Randomized, 3, 20));
    assert_eq!((randomized.value, randomized.certainty), (1, Certainty::LowerBound));
}

#[test]
fn generated_submodule_rejects_bad_tuples() {
    let m = Module::regular(dual_numbers());
    assert!(generated_submodule(&m, &[vec![F2::new(1)]]).is_err());
    let span = generated_submodule(&m, &[vec![F2::new(0), F2::new(1)]]).unwrap();
    assert_eq!(span.span_dim, 1);
}

#[test]
fn symbolic_phi_has_one_variable_per_tuple_entry() {
    let m = Module::regular(dual_numbers());
    let phi = symbolic_phi(&m, 2);
    assert_eq!(phi.symbolic_rank(), 2);
}

#[test]
fn identity_is_a_trivial_riedtmann_witness() {
    let (_, _, p) = a2_modules::<Q>();
    let zero = Module::zero(p.algebra().clone());
    let w = RiedtmannWitness::from_matrices(zero, p.clone(), p.clone(), Matrix::zeros(2, 0), Matrix::identity(2)).unwrap();
    assert!(riedtmann_verify(&w).unwrap().is_proved());
}

#[test]
fn broken_witnesses_name_the_failure() {
    let (s0, s1, p) = a2_modules::<Q>();
    let seq = ShortExact::from_injection(
        ModuleMorphism::solve_for(&s1, &p, &[(vec![Q::from_i64(1)], vec![Q::from_i64(0), Q::from_i64(1)])])
            .unwrap()
            .unwrap(),
        &s0,
        exhaustive(),
    )
    .unwrap()
    .expect("P / S_1 is S_0");
    assert!(seq.is_exact());
    let w = seq.riedtmann().unwrap();
    assert!(riedtmann_verify(&w).unwrap().is_proved());

    let mut lazy = w.clone();
    lazy.h = ModuleMorphism::zero(lazy.h.source(), lazy.h.target());
    assert_eq!(riedtmann_verify(&lazy).unwrap().certificate(), Some(&RiedtmannFailure::NotSurjective));

    let mut flat = w.clone();
    flat.g = ModuleMorphism::zero(flat.g.source(), flat.g.target());
    assert_eq!(riedtmann_verify(&flat).unwrap().certificate(), Some(&RiedtmannFailure::NotInjective));
}

#[test]
fn search_finds_the_split_sequence_and_respects_dimensions() {
    let (s0, s1, p) = a2_modules::<F2>();
    let n = s0.direct_sum(&s1).unwrap();
    let found = riedtmann_search(&p, &n, &[s1.clone()], exhaustive()).unwrap();
    assert!(riedtmann_verify(found.witness().unwrap()).unwrap().is_proved());
    assert!(matches!(riedtmann_search(&p, &s0, &[s1], exhaustive()), Err(crate::Error::DimMismatch(2, 1))));

    let zero = Module::zero(p.algebra().clone());
    let same = riedtmann_search(&p, &p, &[zero], exhaustive()).unwrap();
    assert!(same.is_proved());
}

#[test]
fn search_gives_up_with_unknown() {
    // S_0 ⊕ S_1 does not degenerate to P
    let (s0, s1, p) = a2_modules::<F2>();
    let n = s0.direct_sum(&s1).unwrap();
    let found = riedtmann_search(&n, &p, &[s0, s1], exhaustive()).unwrap();
    assert!(found.is_unknown());
}

#[test]
fn hom_order_in_both_directions() {
    let (s0, s1, p) = a2_modules::<F2>();
    let n = s0.direct_sum(&s1).unwrap();
    let family = vec![s0.clone(), s1.clone(), p.clone()];
    let up = hom_order_cmp(&p, &n, &family).unwrap();
    assert_eq!(up.verdict, HomOrderVerdict::Consistent);
    let down = hom_order_cmp(&n, &p, &family).unwrap();
    assert!(matches!(down.verdict, HomOrderVerdict::Violated { .. }));
    assert_eq!(up.rows.len(), 3);
}

#[test]
fn obstruction_battery_short_circuits_on_dimension() {
    let (s0, _, p) = a2_modules::<F2>();
    let r = deg_obstruct(&p, &s0, &ObstructionConfig::default()).unwrap();
    assert_eq!(r.overall, Overall::Refuted { check: "dimension".into(), data: "2 vs 1".into() });
    assert!(r.checks[1..].iter().all(|c| c.status == CheckStatus::Skipped));
}

#[test]
fn obstruction_battery_passes_a_true_degeneration() {
    let (s0, s1, p) = a2_modules::<F2>();
    let n = s0.direct_sum(&s1).unwrap();
    let config = ObstructionConfig { family: vec![s0, s1], f_range: 1..=2, ..Default::default() };
    let r = deg_obstruct(&p, &n, &config).unwrap();
    assert_eq!(r.overall, Overall::Consistent, "{r:?}");
    assert_eq!(r.check("strictness").unwrap().status, CheckStatus::Pass);
    assert!(deg_obstruct(&n, &p, &config).unwrap().is_refuted());
}

#[test]
fn obstruction_checks_f_after_extension() {
    let k = cases::f4();
    let (s0, s1, p) = a2_modules::<F2>();
    let gamma = Arc::new(tensor_extension(k, p.algebra().clone()).unwrap());
    let n = s0.direct_sum(&s1).unwrap();
    let config = ObstructionConfig { extensions: vec![gamma], ..Default::default() };
    let r = deg_obstruct(&p, &n, &config).unwrap();
    assert_eq!(r.check("f_1 over w").unwrap().status, CheckStatus::Pass);
}

#[test]
fn simple_modules_are_minimal() {
    let (s0, s1, p) = a2_modules::<F2>();
    let report = minimality_check(&s0.direct_sum(&s1).unwrap(), &[p.clone()], exhaustive()).unwrap();
    assert_eq!((report.end_division, report.theorem_backed), (Status::Refuted, false));
    assert_eq!(report.candidates[0].below, Status::Unknown);
    let report = minimality_check(&s0, &[s1.clone()], exhaustive()).unwrap();
    assert!(report.theorem_backed);
    assert_eq!(report.candidates[0].below, Status::Refuted);
    assert!(minimality_check(&s0, &[p], exhaustive()).is_err());
}

#[test]
fn kronecker_n_prime_is_not_theorem_backed() {
    let c = cases::kron_min().unwrap();
    let report = minimality_check(&c.n_prime, &[c.m.clone(), c.n.clone()], Search::default()).unwrap();
    assert_eq!(report.end_division, Status::Refuted);
    assert!(!report.theorem_backed);
}

#[test]
fn group_orders() {
    assert_eq!(gl_order(0, 2), Some(1));
    assert_eq!(gl_order(2, 2), Some(6));
    assert_eq!(gl_order(2, 3), Some(48));
    let (_, _, p) = a2_modules::<F2>();
    assert_eq!(aut_order(&p, 1 << 20).unwrap(), 1);
    assert_eq!(aut_order(&p.power(2), 1 << 20).unwrap(), 6);
}

#[test]
fn dual_numbers_in_dimension_two() {
    // x acts by a square-zero 2×2 matrix: zero, or one of the three
    // conjugates of a nilpotent Jordan block
    let space = enumerate_modules(&dual_numbers(), 2, 1 << 20).unwrap();
    assert_eq!(space.method, EnumerationMethod::GeneratorMatrices);
    assert_eq!((space.total, space.classes.len()), (4, 2));
    assert_eq!(space.size_sum(), space.total);
}

#[test]
fn a2_in_dimension_two() {
    let space = enumerate_modules(&a2::<F2>(), 2, 1 << 20).unwrap();
    assert_eq!(space.method, EnumerationMethod::Representations);
    // dims (2,0) and (0,2): one each; dims (1,1): 6 splittings times 2 arrows
    assert_eq!((space.total, space.classes.len()), (14, 4));
    assert_eq!(space.size_sum(), space.total);
}

#[test]
fn dimension_zero_has_one_class() {
    let space = enumerate_modules(&dual_numbers(), 0, 1).unwrap();
    assert_eq!((space.total, space.classes.len()), (1, 1));
}

#[test]
fn enumeration_needs_a_finite_field() {
    assert!(enumerate_modules(&a2::<Q>(), 1, 10).is_err());
    assert!(matches!(
        enumerate_modules(&dual_numbers(), 3, 10),
        Err(crate::Error::BudgetExceeded { .. })
    ));
}

#[test]
fn extension_enumeration_counts_match_brute_force() {
    // F_4 ⊗ A_2 in K-dimension 1 as structures on F_2^2
    let gamma = Arc::new(tensor_extension(cases::f4(), a2::<F2>()).unwrap());
    let space = enumerate_modules(&gamma, 2, 1 << 20).unwrap();
    assert_eq!(space.classes.len(), 2);
    assert_eq!(space.size_sum(), space.total);
    // each simple: a K-structure on F_2^2 is a matrix with minimal
    // polynomial x^2 + x + 1, of which there are |GL_2| / |F_4^×| = 2
    assert_eq!(space.total, 4);
    assert!(enumerate_modules(&gamma, 3, 1 << 20).unwrap().classes.is_empty());
}

#[test]
fn twist_closure_for_a2_over_f4() {
    let gamma = Arc::new(tensor_extension(cases::f4(), a2::<F2>()).unwrap());
    let r = twist_closure_experiment(&gamma, 2, 1 << 24).unwrap();
    assert_eq!(r.gamma_classes, vec![1, 2, 4]);
    assert!(r.twist_stable && r.restriction_reflects_iso);
    assert!(r.disagreements.is_empty() && r.restricted_hom_identity && r.induced_hom_identity);
    assert!(r.consistent());
}

#[test]
fn twist_closure_for_the_base_field() {
    let gamma = Arc::new(tensor_extension(cases::f4(), Arc::new(truncated_polynomial::<F2>(1).unwrap())).unwrap());
    let r = twist_closure_experiment(&gamma, 2, 1 << 24).unwrap();
    assert_eq!(r.gamma_classes, vec![1, 1, 1]);
    assert!(r.consistent());
}

#[test]
fn twist_closure_refuses_unsuitable_input() {
    assert!(twist_closure_experiment(&dual_numbers(), 1, 10).is_err());
}

#[test]
fn generic_rank_of_a_hom_space() {
    let (s0, s1, p) = a2_modules::<Q>();
    let hom = HomSpace::new(&p, &s0.direct_sum(&s1).unwrap()).unwrap();
    assert_eq!(hom_generic_rank(&hom), 1);
    let end = HomSpace::new(&p, &p).unwrap();
    assert_eq!(hom_generic_rank(&end), 2);
}
