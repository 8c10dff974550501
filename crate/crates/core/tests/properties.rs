use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use moddeg::algebra::{path_algebra, tensor_extension, Algebra, Quiver};
use moddeg::cases;
use moddeg::descent::{base_change_hom_identity, galois_decompose, mu_split};
use moddeg::modrep::{end_algebra, is_division, iso_test, HomSpace, Module, ModuleMorphism};
use moddeg::orders::{f_invariant, hom_order_cmp, riedtmann_verify, HomOrderVerdict, ShortExact};
use moddeg::sample::random_module;
use moddeg::{Fp, Rational, Scalar, Search, Strategy};

type F2 = Fp<2>;
type Q = Rational;

fn exhaustive() -> Search {
    Search::new(Strategy::Exhaustive, 0, 0)
}

fn symbolic() -> Search {
    Search::new(Strategy::Symbolic, 0, 0)
}

fn kronecker<F: Scalar>() -> Arc<Algebra<F>> {
    Arc::new(path_algebra(&Quiver::kronecker()).unwrap())
}

fn a2<F: Scalar>() -> Arc<Algebra<F>> {
    Arc::new(path_algebra(&Quiver::a2()).unwrap())
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `0 → U → M → M/U → 0` for the submodule `U` generated by a random vector.
fn random_sequence<F: Scalar>(m: &Module<F>, seed: u64) -> ShortExact<F> {
    let mut r = rng(seed ^ 0x5EED);
    let v: Vec<F> = (0..m.dim()).map(|_| moddeg::scalar::random_scalar(&mut r, 2)).collect();
    let gens: Vec<Vec<F>> = m.action().iter().map(|a| a.mul_vec(&v)).collect();
    let (u, inc) = m.submodule(&gens).unwrap();
    let cols: Vec<Vec<F>> = (0..inc.cols()).map(|c| inc.col(c)).collect();
    let (w, proj) = m.quotient(&cols).unwrap();
    ShortExact::new(ModuleMorphism::new(u, m.clone(), inc).unwrap(), ModuleMorphism::new(m.clone(), w, proj).unwrap())
        .unwrap()
}

fn f_values<F: Scalar>(m: &Module<F>, search: Search) -> Vec<usize> {
    (0..=3).map(|i| f_invariant(m, i, search).value).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn f_is_monotone_and_bounded(seed in any::<u64>()) {
        let m = random_module(&kronecker::<F2>(), 4, 1, &mut rng(seed)).unwrap();
        let f = f_values(&m, exhaustive());
        prop_assert_eq!(f[0], 0);
        prop_assert!(f.windows(2).all(|w| w[0] <= w[1]));
        prop_assert!(f.iter().all(|&v| v <= m.dim()));
        let q = random_module(&a2::<Q>(), 4, 2, &mut rng(seed)).unwrap();
        let g = f_values(&q, symbolic());
        prop_assert!(g.windows(2).all(|w| w[0] <= w[1]) && g[3] <= q.dim());
    }

    #[test]
    fn f_of_a_direct_sum_is_bounded_by_the_parts(seed in any::<u64>()) {
        let alg = kronecker::<F2>();
        let m = random_module(&alg, 3, 1, &mut rng(seed)).unwrap();
        let n = random_module(&alg, 3, 1, &mut rng(seed.wrapping_add(1))).unwrap();
        let mn = m.direct_sum(&n).unwrap();
        for i in 1..=2 {
            let (a, b, s) = (
                f_invariant(&m, i, symbolic()).value,
                f_invariant(&n, i, symbolic()).value,
                f_invariant(&mn, i, symbolic()).value,
            );
            prop_assert!(a.max(b) <= s && s <= a + b, "i = {}: {} {} {}", i, a, b, s);
        }
    }

    #[test]
    fn exhaustive_f_never_exceeds_the_generic_value(seed in any::<u64>()) {
        let m = random_module(&kronecker::<F2>(), 4, 1, &mut rng(seed)).unwrap();
        for i in 1..=2 {
            prop_assert!(f_invariant(&m, i, exhaustive()).value <= f_invariant(&m, i, symbolic()).value);
        }
    }

    #[test]
    fn degenerations_respect_f_and_the_hom_order(seed in any::<u64>()) {
        let alg = kronecker::<Q>();
        let m = random_module(&alg, 4, 2, &mut rng(seed)).unwrap();
        let seq = random_sequence(&m, seed);
        prop_assert!(seq.is_exact());
        let w = seq.riedtmann().unwrap();
        prop_assert!(riedtmann_verify(&w).unwrap().is_proved());
        for i in 1..=2 {
            prop_assert!(f_invariant(&w.m, i, symbolic()).value >= f_invariant(&w.n, i, symbolic()).value);
        }
        let probes: Vec<Module<Q>> =
            (0..4).map(|k| random_module(&alg, 3, 2, &mut rng(seed ^ k)).unwrap()).chain([w.m.clone(), w.n.clone()]).collect();
        prop_assert_eq!(hom_order_cmp(&w.m, &w.n, &probes).unwrap().verdict, HomOrderVerdict::Consistent);
    }

    #[test]
    fn proper_degenerations_are_strict(seed in any::<u64>()) {
        let m = random_module(&kronecker::<F2>(), 4, 1, &mut rng(seed)).unwrap();
        let w = random_sequence(&m, seed).riedtmann().unwrap();
        if iso_test(&w.m, &w.n, exhaustive()).unwrap().is_refuted() {
            let nm = HomSpace::new(&w.n, &w.m).unwrap().k_dim();
            let nn = HomSpace::new(&w.n, &w.n).unwrap().k_dim();
            prop_assert!(nm < nn, "[N,M] = {} [N,N] = {}", nm, nn);
        }
    }

    #[test]
    fn division_endomorphisms_divide_hom_dimensions(seed in any::<u64>()) {
        let alg = kronecker::<F2>();
        let m = random_module(&alg, 3, 1, &mut rng(seed)).unwrap();
        let n = random_module(&alg, 4, 1, &mut rng(!seed)).unwrap();
        let (end, _) = end_algebra(&m).unwrap();
        if m.dim() > 0 && is_division(&end, exhaustive()).is_proved() {
            prop_assert_eq!(HomSpace::new(&m, &n).unwrap().k_dim() % end.dim(), 0);
            prop_assert_eq!(HomSpace::new(&n, &m).unwrap().k_dim() % end.dim(), 0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn descent_over_gaussian_kronecker(seed in any::<u64>()) {
        let gamma = Arc::new(tensor_extension(cases::gaussian(), kronecker::<Q>()).unwrap());
        let m = random_module(&gamma, 2, 2, &mut rng(seed)).unwrap();
        prop_assert!(mu_split(&m).unwrap().verify());
        prop_assert!(galois_decompose(&m).unwrap().verify());
    }

    #[test]
    fn descent_over_f4(seed in any::<u64>()) {
        let gamma = Arc::new(tensor_extension(cases::f4(), a2::<F2>()).unwrap());
        let m = random_module(&gamma, 3, 1, &mut rng(seed)).unwrap();
        prop_assert!(mu_split(&m).unwrap().verify());
        prop_assert!(galois_decompose(&m).unwrap().verify());
    }

    #[test]
    fn base_change_multiplies_hom_dimensions(seed in any::<u64>()) {
        let gamma = Arc::new(tensor_extension(cases::cube_root_two(), a2::<Q>()).unwrap());
        let x = random_module(&a2::<Q>(), 3, 2, &mut rng(seed)).unwrap();
        let m = random_module(&a2::<Q>(), 3, 2, &mut rng(!seed)).unwrap();
        prop_assert!(base_change_hom_identity(&gamma, &x, &m).unwrap().holds());
    }
}
