use moddeg::cases;
use moddeg::descent::{restrict, twist};
use moddeg::modrep::{end_algebra, is_local, iso_test, HomSpace, IsoCertificate, Module};
use moddeg::orders::{
    deg_obstruct, f_invariant, hom_generic_rank, riedtmann_search, riedtmann_verify, ObstructionConfig, Overall,
};
use moddeg::{Fp, Rational, Search, Status, Strategy};

type F2 = Fp<2>;

fn search() -> Search {
    Search::new(Strategy::Auto, 7, 10_000)
}

fn iso(a: &Module<Rational>, b: &Module<Rational>) -> Status {
    iso_test(a, b, search()).unwrap().status()
}

#[test]
fn kron1_is_split_only_over_the_extension() {
    let c = cases::kron1().unwrap();
    assert_eq!(iso(&restrict(&c.m).unwrap(), &restrict(&c.n).unwrap()), Status::Proved);
    let v = iso_test(&c.m, &c.n, search()).unwrap();
    assert!(matches!(v.certificate(), Some(IsoCertificate::HomProbe { .. })), "{v:?}");
    assert!(v.certificate().unwrap().verify(&c.m, &c.n));
}

#[test]
fn b2_degenerations_over_the_real_form() {
    let c = cases::b2().unwrap();
    assert!(c.to_split.verify().is_proved());
    let r = |m: &Module<Rational>| restrict(m).unwrap();
    assert_eq!(iso(&r(&c.s1), &r(&c.s3)), Status::Proved);
    assert_eq!(iso(&r(&c.i1), &r(&c.i3)), Status::Proved);
    assert_eq!(iso(&c.s1, &c.s3), Status::Refuted);
    for (m, n, x) in c.pairs().unwrap() {
        let found = riedtmann_search(&r(&m), &r(&n), &[r(&x)], search()).unwrap();
        let w = found.witness().expect("Λ-degeneration found");
        assert!(riedtmann_verify(w).unwrap().is_proved());
        let report = deg_obstruct(&m, &n, &ObstructionConfig::default()).unwrap();
        assert!(matches!(&report.overall, Overall::Refuted { check, .. } if check == "hom_order"), "{report:?}");
    }
}

#[test]
fn three_arrow_hom_counts_and_degenerations() {
    let c = cases::three_arrow().unwrap();
    let ac = c.a.direct_sum(&c.c).unwrap();
    let ext = |a: &Module<Rational>, b: &Module<Rational>| HomSpace::new(a, b).unwrap().ext_dim().unwrap();
    let bc = twist(&c.b, 1).unwrap();
    let xc = twist(&c.x, 1).unwrap();
    assert_eq!((ext(&c.x, &ac), ext(&c.x, &c.b)), (1, 2));
    // the conjugate of B is separated from A ⊕ C by the conjugate of X, not by X
    assert_eq!((ext(&c.x, &bc), ext(&xc, &bc), ext(&xc, &ac)), (0, 2, 1));
    assert_eq!(iso(&twist(&c.a, 1).unwrap(), &c.a), Status::Proved);
    assert_eq!(iso(&twist(&c.c, 1).unwrap(), &c.c), Status::Proved);

    let r = |m: &Module<Rational>| restrict(m).unwrap();
    let found = riedtmann_search(&r(&c.b), &r(&ac), &[r(&c.a)], search()).unwrap();
    assert!(riedtmann_verify(found.witness().expect("Λ-degeneration found")).unwrap().is_proved());
    let config = ObstructionConfig { family: vec![c.x.clone(), xc], ..Default::default() };
    for b in [&c.b, &bc] {
        assert!(deg_obstruct(b, &ac, &config).unwrap().is_refuted());
    }
}

#[test]
fn kronecker_minimality() {
    let c = cases::kron_min().unwrap();
    let found = riedtmann_search(&c.m, &c.n, &[c.x_i.clone()], search()).unwrap();
    assert!(riedtmann_verify(found.witness().expect("Γ-degeneration found")).unwrap().is_proved());
    assert_eq!(iso(&restrict(&c.n).unwrap(), &restrict(&c.n_prime).unwrap()), Status::Proved);
    assert_eq!(iso(&c.n, &c.n_prime), Status::Refuted);
}

#[test]
fn cube_root_two_splits_off_a_local_summand() {
    let c = cases::cbrt2().unwrap();
    assert!(c.decomposition.verify() && c.decomposition.is_iso());
    assert_eq!((c.k_part.dim(), c.l.dim()), (3, 6));
    let (end, _) = end_algebra(&c.l).unwrap();
    assert!(is_local(&end, search()).is_proved());
    let k2 = c.k_squared();
    assert_eq!(iso(&c.l, &k2), Status::Refuted);
    assert_eq!(iso(&restrict(&c.l).unwrap(), &restrict(&k2).unwrap()), Status::Proved);
}

#[test]
fn exterior_two_witnesses() {
    fn run<F: moddeg::Scalar>() {
        let c = cases::ext2::<F>().unwrap();
        assert!(c.seq_x.is_exact() && c.seq_y.is_exact());
        assert!(riedtmann_verify(&c.witness_x().unwrap()).unwrap().is_proved());
        assert!(riedtmann_verify(&c.witness_square().unwrap()).unwrap().is_proved());
        let s = Search::new(Strategy::Auto, 1, 2000);
        assert_eq!(iso_test(c.ideal_x(), c.ideal_y(), s).unwrap().status(), Status::Refuted);
    }
    run::<Rational>();
    run::<F2>();
}

#[test]
fn exterior_three_chain() {
    fn run<F: moddeg::Scalar>() {
        let s = Search::new(Strategy::Auto, 3, 2000);
        let c = cases::ext3::<F>(s).unwrap();
        let dims: Vec<usize> =
            [&c.rr3, &c.lr2, &c.s, &c.zr3, &c.r_xz, &c.xz, &c.yz, &c.xz_yz].iter().map(|m| m.dim()).collect();
        assert_eq!(dims, [6, 4, 1, 3, 5, 2, 2, 3]);
        assert_eq!(c.pair_map.rank(), 8);
        assert!(c.pair_map.is_injective());
        let hom = HomSpace::new(&c.lr2, &c.rr3).unwrap();
        assert_eq!((hom.k_dim(), hom_generic_rank(&hom)), (6, 3));
        assert!(c.sequences.iter().all(|q| q.is_exact()));
        let report = c.chain.verify(s).unwrap();
        assert!(report.holds, "{report:?}");
        let n = c.lr2_ss().unwrap();
        let sym = s.with_strategy(Strategy::Symbolic);
        assert_eq!((f_invariant(&c.rr3, 1, sym).value, f_invariant(&n, 1, sym).value), (3, 4));
        let obstruction = deg_obstruct(&c.rr3, &n, &ObstructionConfig::default()).unwrap();
        assert!(matches!(&obstruction.overall, Overall::Refuted { check, .. } if check == "f_1"), "{obstruction:?}");
    }
    run::<Rational>();
    run::<F2>();
}

#[test]
fn exterior_three_has_no_generic_monomorphism_over_f2() {
    let c = cases::ext3::<F2>(Search::default()).unwrap();
    let hom = HomSpace::new(&c.lr2, &c.rr3).unwrap();
    let mut best = 0;
    for bits in 0u32..1 << hom.k_dim() {
        let coeffs: Vec<F2> = (0..hom.k_dim()).map(|b| F2::new((bits >> b & 1) as u64)).collect();
        best = best.max(hom.combination(&coeffs).rank());
    }
    assert!(best < 4);
    assert!(best <= hom_generic_rank(&hom));
}
