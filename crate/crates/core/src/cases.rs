//! Worked examples. `ℚ(i)` stands in for `ℂ` and `ℚ` for `ℝ`: every
//! statement checked here only involves `i² = -1` and the conjugation.

use std::sync::Arc;

use crate::algebra::{
    exterior_algebra, field_algebra, from_matrix_basis, k_linear_extension, path_algebra, tensor_extension, Algebra,
    AlgebraMorphism, Quiver,
};
use crate::error::{Error, Result};
use crate::fields::{FieldElem, FieldTower};
use crate::linalg::Matrix;
use crate::modrep::{Module, ModuleMorphism, Subquotient};
use crate::orders::{RiedtmannWitness, ShortExact, VdegChain};
use crate::scalar::{Fp, Rational, Scalar};
use crate::verdict::Search;

type Q = Rational;

fn qv(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| Q::from_i64(x)).collect()
}

/// `ℚ(i)` with conjugation.
pub fn gaussian() -> Arc<FieldTower<Q>> {
    Arc::new(FieldTower::new(qv(&[1, 0, 1]), "i", vec![qv(&[0, 1]), qv(&[0, -1])]).expect("x^2 + 1 is irreducible"))
}

/// `ℚ(∛2)`, which is not normal.
pub fn cube_root_two() -> Arc<FieldTower<Q>> {
    Arc::new(FieldTower::new(qv(&[-2, 0, 0, 1]), "a", vec![]).expect("x^3 - 2 is irreducible"))
}

/// `F_4 = F_2(w)`, `w² = w + 1`, with Frobenius.
pub fn f4() -> Arc<FieldTower<Fp<2>>> {
    let c = |x| Fp::<2>::new(x);
    Arc::new(FieldTower::new(vec![c(1), c(1), c(1)], "w", vec![]).expect("x^2 + x + 1 is irreducible over F_2"))
}

/// `a + b·i`.
fn gi(k: &FieldTower<Q>, a: i64, b: i64) -> FieldElem<Q> {
    k.elem(qv(&[a, b])).expect("two coordinates")
}

fn entries(k: &FieldTower<Q>, pairs: &[(i64, i64)]) -> Vec<FieldElem<Q>> {
    pairs.iter().map(|&(a, b)| gi(k, a, b)).collect()
}

fn extended_path(k: &Arc<FieldTower<Q>>, quiver: &Quiver) -> Result<Arc<Algebra<Q>>> {
    Ok(Arc::new(tensor_extension(k.clone(), Arc::new(path_algebra(quiver)?))?))
}

fn krep(gamma: &Arc<Algebra<Q>>, dims: &[usize], arrows: &[&[(i64, i64)]]) -> Result<Module<Q>> {
    let k = gamma.extension_tag().ok_or(Error::NotExtensionAlgebra)?.tower.clone();
    let arrows: Vec<_> = arrows.iter().map(|a| entries(&k, a)).collect();
    Module::k_representation(gamma.clone(), dims, &arrows)
}

/// Two one-dimensional Kronecker representations over `ℚ(i)` that are
/// conjugate but not isomorphic.
#[derive(Clone, Debug)]
pub struct Kron1 {
    pub gamma: Arc<Algebra<Q>>,
    /// Arrows `(1, i)`.
    pub m: Module<Q>,
    /// Arrows `(1, -i)`.
    pub n: Module<Q>,
}

pub fn kron1() -> Result<Kron1> {
    let gamma = extended_path(&gaussian(), &Quiver::kronecker())?;
    let m = krep(&gamma, &[1, 1], &[&[(1, 0)], &[(0, 1)]])?;
    let n = krep(&gamma, &[1, 1], &[&[(1, 0)], &[(0, -1)]])?;
    Ok(Kron1 { gamma, m, n })
}

/// The real form `[[ℂ, ℂ], [0, ℝ]]` of a species of type `B_2`, its
/// extension to `ℚ(i)`, and the identification of that extension with the
/// path algebra of `1 ← 2 → 3`.
#[derive(Clone, Debug)]
pub struct B2 {
    pub lambda: Arc<Algebra<Q>>,
    pub gamma: Arc<Algebra<Q>>,
    /// `ℚ(i) ⊗ k(1 ← 2 → 3)`.
    pub split: Arc<Algebra<Q>>,
    pub to_split: AlgebraMorphism<Q>,
    /// Representations of `1 ← 2 → 3` pulled back to `gamma`.
    pub s1: Module<Q>,
    pub s2: Module<Q>,
    pub s3: Module<Q>,
    /// Dims `(1, 1, 0)`, `alpha = 1`.
    pub i1: Module<Q>,
    /// Dims `(0, 1, 1)`, `beta = 1`.
    pub i3: Module<Q>,
}

impl B2 {
    /// `(M, N, X)` over `gamma` for `I_1` vs `S_2 ⊕ S_3` with `X = S_3`,
    /// and `I_3` vs `S_2 ⊕ S_1` with `X = S_1`.
    pub fn pairs(&self) -> Result<[(Module<Q>, Module<Q>, Module<Q>); 2]> {
        Ok([
            (self.i1.clone(), self.s2.direct_sum(&self.s3)?, self.s3.clone()),
            (self.i3.clone(), self.s2.direct_sum(&self.s1)?, self.s1.clone()),
        ])
    }
}

pub fn b2() -> Result<B2> {
    let k = gaussian();
    let (z, one, i) = (k.zero(), k.one(), k.generator());
    let mk = |a: &FieldElem<Q>, b: &FieldElem<Q>, c: &FieldElem<Q>| {
        k.realify(2, 2, &[a.clone(), b.clone(), z.clone(), c.clone()])
    };
    let mats: Vec<Matrix<Q>> = vec![mk(&one, &z, &z), mk(&i, &z, &z), mk(&z, &z, &one), mk(&z, &one, &z), mk(&z, &i, &z)];
    let names = ["E11", "iE11", "E22", "E12", "iE12"].map(String::from).to_vec();
    let lambda = Arc::new(from_matrix_basis(names, &mats)?);
    let gamma = Arc::new(tensor_extension(k.clone(), lambda.clone())?);

    let quiver = Quiver::new(3, vec![(1, 0, "alpha".into()), (1, 2, "beta".into())])?;
    let split = extended_path(&k, &quiver)?;
    // path basis e1 e2 e3 alpha beta; index 5 + j is i ⊗ (path j)
    let v = |pairs: &[(usize, i64)]| {
        let mut out = vec![Q::from_i64(0); 10];
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
    let to_split = k_linear_extension(&gamma, &split, &images)?;
    let rep = |dims: &[usize], arrows: &[&[(i64, i64)]]| krep(&split, dims, arrows)?.pullback(&to_split);
    Ok(B2 {
        s1: rep(&[1, 0, 0], &[&[], &[]])?,
        s2: rep(&[0, 1, 0], &[&[], &[]])?,
        s3: rep(&[0, 0, 1], &[&[], &[]])?,
        i1: rep(&[1, 1, 0], &[&[(1, 0)], &[]])?,
        i3: rep(&[0, 1, 1], &[&[], &[(1, 0)]])?,
        lambda,
        gamma,
        split,
        to_split,
    })
}

/// Representations of `0 ⇉ 1 ⇉ 2` over `ℚ(i)`.
#[derive(Clone, Debug)]
pub struct ThreeArrow {
    pub gamma: Arc<Algebra<Q>>,
    /// Dims `(0, 1, 2)`.
    pub a: Module<Q>,
    /// Dims `(3, 2, 2)`, with `b_2 = i·a_2`.
    pub b: Module<Q>,
    /// Dims `(3, 1, 0)`.
    pub c: Module<Q>,
    /// Dims `(0, 1, 1)`, arrows `(1, i)`.
    pub x: Module<Q>,
}

pub fn three_arrow_quiver() -> Quiver {
    Quiver::new(3, vec![(0, 1, "a1".into()), (0, 1, "b1".into()), (1, 2, "a2".into()), (1, 2, "b2".into())])
        .expect("acyclic")
}

pub fn three_arrow() -> Result<ThreeArrow> {
    let gamma = extended_path(&gaussian(), &three_arrow_quiver())?;
    let a = krep(&gamma, &[0, 1, 2], &[&[], &[], &[(1, 0), (0, 0)], &[(0, 0), (1, 0)]])?;
    let (o, l, i) = ((0, 0), (1, 0), (0, 1));
    let b = krep(
        &gamma,
        &[3, 2, 2],
        &[&[l, o, o, o, l, o], &[o, l, o, o, o, l], &[l, o, o, l], &[i, o, o, i]],
    )?;
    let c = krep(&gamma, &[3, 1, 0], &[&[l, o, o], &[o, l, o], &[], &[]])?;
    let x = krep(&gamma, &[0, 1, 1], &[&[], &[], &[l], &[i]])?;
    Ok(ThreeArrow { gamma, a, b, c, x })
}

/// Two-dimensional Kronecker representations over `ℚ(i)`.
#[derive(Clone, Debug)]
pub struct KronMin {
    pub gamma: Arc<Algebra<Q>>,
    /// `(I, [[i, 0], [1, i]])`.
    pub m: Module<Q>,
    /// `(I, i·I)`.
    pub n: Module<Q>,
    /// `(I, diag(i, -i))`.
    pub n_prime: Module<Q>,
    /// `(1, i)`.
    pub x_i: Module<Q>,
}

pub fn kron_min() -> Result<KronMin> {
    let gamma = extended_path(&gaussian(), &Quiver::kronecker())?;
    let (o, l, i, mi) = ((0, 0), (1, 0), (0, 1), (0, -1));
    let id: &[(i64, i64)] = &[l, o, o, l];
    Ok(KronMin {
        m: krep(&gamma, &[2, 2], &[id, &[i, o, l, i]])?,
        n: krep(&gamma, &[2, 2], &[id, &[i, o, o, i]])?,
        n_prime: krep(&gamma, &[2, 2], &[id, &[i, o, o, mi]])?,
        x_i: krep(&gamma, &[1, 1], &[&[l], &[i]])?,
        gamma,
    })
}

/// `Γ = K ⊗ K` for `K = ℚ(∛2)`, split by the separability idempotent.
#[derive(Clone, Debug)]
pub struct Cbrt2 {
    pub tower: Arc<FieldTower<Q>>,
    pub gamma: Arc<Algebra<Q>>,
    /// `e` in the basis of `gamma`.
    pub idempotent: Vec<Q>,
    /// `Γe ≅ K`.
    pub k_part: Module<Q>,
    /// `Γ(1 - e)`.
    pub l: Module<Q>,
    /// `Γe ⊕ Γ(1 - e) → Γ`, the sum of the inclusions.
    pub decomposition: ModuleMorphism<Q>,
}

impl Cbrt2 {
    /// `(Γe)²`, of the same dimension as `L`.
    pub fn k_squared(&self) -> Module<Q> {
        self.k_part.power(2)
    }
}

/// The left ideal `Λx`.
fn left_ideal<F: Scalar>(regular: &Module<F>, x: &[F]) -> Result<(Module<F>, Matrix<F>)> {
    let alg = regular.algebra();
    let vectors: Vec<Vec<F>> = (0..alg.dim()).map(|b| alg.mul(&alg.basis_vector(b), x)).collect();
    regular.submodule(&vectors)
}

pub fn cbrt2() -> Result<Cbrt2> {
    let tower = cube_root_two();
    let gamma = Arc::new(tensor_extension(tower.clone(), Arc::new(field_algebra(tower.clone())?))?);
    let n = tower.degree();
    let sep = tower.separability_idempotent()?;
    let mut idempotent = vec![Q::from_i64(0); gamma.dim()];
    for i in 0..n {
        for j in 0..n {
            idempotent[i * n + j] = sep.coeff(i, j).clone();
        }
    }
    let complement: Vec<Q> = gamma.unit().iter().zip(&idempotent).map(|(u, e)| u.clone() - e.clone()).collect();
    let regular = Module::regular(gamma.clone());
    let (k_part, inc_k) = left_ideal(&regular, &idempotent)?;
    let (l, inc_l) = left_ideal(&regular, &complement)?;
    let decomposition = ModuleMorphism::new(k_part.direct_sum(&l)?, regular, Matrix::hstack(&[&inc_k, &inc_l]))?;
    Ok(Cbrt2 { tower, gamma, idempotent, k_part, l, decomposition })
}

/// The exterior algebra in `X, Y`, with the principal ideals of `X` and `Y`.
#[derive(Clone, Debug)]
pub struct Ext2<F: Scalar> {
    pub lambda: Arc<Algebra<F>>,
    pub regular: Module<F>,
    /// `0 → (X) → Λ → (X) → 0`.
    pub seq_x: ShortExact<F>,
    /// `0 → (Y) → Λ → (Y) → 0`.
    pub seq_y: ShortExact<F>,
}

impl<F: Scalar> Ext2<F> {
    pub fn ideal_x(&self) -> &Module<F> {
        self.seq_x.u()
    }

    pub fn ideal_y(&self) -> &Module<F> {
        self.seq_y.u()
    }

    /// `Λ ≤deg (X) ⊕ (X)`.
    pub fn witness_x(&self) -> Result<RiedtmannWitness<F>> {
        self.seq_x.riedtmann()
    }

    /// `Λ² ≤deg ((X) ⊕ (Y))²`, from the sum of both sequences.
    pub fn witness_square(&self) -> Result<RiedtmannWitness<F>> {
        self.seq_x.direct_sum(&self.seq_y)?.riedtmann()
    }
}

/// `0 → Λf → Λ → Λf → 0`, with `π(1) = f`, for `f` of degree one.
pub fn principal_sequence<F: Scalar>(regular: &Module<F>, f: &[F]) -> Result<ShortExact<F>> {
    let (ideal, inclusion) = left_ideal(regular, f)?;
    let coords = inclusion
        .solve(&Matrix::column(f.to_vec()))?
        .ok_or_else(|| Error::ShapeMismatch("f lies in its own ideal".into()))?
        .col(0);
    let iota = ModuleMorphism::new(ideal.clone(), regular.clone(), inclusion)?;
    let pi = ModuleMorphism::solve_for(regular, &ideal, &[(regular.algebra().unit().to_vec(), coords)])?
        .ok_or_else(|| Error::ShapeMismatch("right multiplication by f".into()))?;
    ShortExact::new(iota, pi)
}

pub fn ext2<F: Scalar>() -> Result<Ext2<F>> {
    let lambda = Arc::new(exterior_algebra::<F>(2)?);
    let regular = Module::regular(lambda.clone());
    let seq_x = principal_sequence(&regular, &lambda.basis_vector(1))?;
    let seq_y = principal_sequence(&regular, &lambda.basis_vector(2))?;
    Ok(Ext2 { lambda, regular, seq_x, seq_y })
}

/// Subquotients of the exterior algebra in `X, Y, Z` (radical `r`) and a
/// chain of short exact sequences giving `r/r³ ≤vdeg Λ/r² ⊕ S²` with
/// complement `(Z)/r³`.
#[derive(Clone, Debug)]
pub struct Ext3<F: Scalar> {
    pub lambda: Arc<Algebra<F>>,
    /// `r/r³`, dimension 6.
    pub rr3: Module<F>,
    /// `Λ/r²`, dimension 4.
    pub lr2: Module<F>,
    /// The simple module `Λ/r`.
    pub s: Module<F>,
    /// `(Z)/r³`, dimension 3.
    pub zr3: Module<F>,
    /// `r/(XZ)`, dimension 5.
    pub r_xz: Module<F>,
    /// `(XZ)`, dimension 2.
    pub xz: Module<F>,
    /// `(YZ)`, dimension 2.
    pub yz: Module<F>,
    /// `(XZ, YZ)`, dimension 3.
    pub xz_yz: Module<F>,
    pub sequences: Vec<ShortExact<F>>,
    pub chain: VdegChain<F>,
    /// `(Λ/r²)² → (r/r³)²`, `e_1 ↦ (X, Y)`, `e_2 ↦ (Y, Z)`.
    pub pair_map: ModuleMorphism<F>,
}

impl<F: Scalar> Ext3<F> {
    /// `Λ/r² ⊕ S ⊕ S`.
    pub fn lr2_ss(&self) -> Result<Module<F>> {
        Module::direct_sum_all(&[&self.lr2, &self.s, &self.s])
    }
}

fn concat<F: Scalar>(parts: &[Vec<F>]) -> Vec<F> {
    parts.concat()
}

fn class<F: Scalar>(sq: &Subquotient<F>, v: &[F]) -> Result<Vec<F>> {
    sq.class_of(v).ok_or_else(|| Error::ShapeMismatch("vector outside the subquotient".into()))
}

fn injection<F: Scalar>(u: &Module<F>, v: &Module<F>, values: &[(Vec<F>, Vec<F>)]) -> Result<ModuleMorphism<F>> {
    ModuleMorphism::solve_for(u, v, values)?.ok_or_else(|| Error::ShapeMismatch("no module map with these values".into()))
}

fn complete<F: Scalar>(iota: ModuleMorphism<F>, w: &Module<F>, search: Search) -> Result<ShortExact<F>> {
    ShortExact::from_injection(iota, w, search)?
        .ok_or_else(|| Error::Inconclusive("cokernel not identified with the expected module".into()))
}

pub fn ext3<F: Scalar>(search: Search) -> Result<Ext3<F>> {
    let lambda = Arc::new(exterior_algebra::<F>(3)?);
    let regular = Module::regular(lambda.clone());
    let b = |name: &str| {
        let idx = lambda.basis_names().iter().position(|n| n == name).expect("exterior basis name");
        lambda.basis_vector(idx)
    };
    let span = |names: &[&str]| names.iter().map(|n| b(n)).collect::<Vec<_>>();
    let r = span(&["X", "Y", "Z", "XY", "XZ", "YZ", "XYZ"]);
    let r2 = span(&["XY", "XZ", "YZ", "XYZ"]);
    let r3 = span(&["XYZ"]);
    let all = span(&["1", "X", "Y", "Z", "XY", "XZ", "YZ", "XYZ"]);
    let z_ideal = span(&["Z", "XZ", "YZ", "XYZ"]);
    let xz_ideal = span(&["XZ", "XYZ"]);

    let rr3 = regular.subquotient(&r, &r3)?;
    let lr2 = regular.subquotient(&all, &r2)?;
    let s = regular.subquotient(&all, &r)?;
    let zr3 = regular.subquotient(&z_ideal, &r3)?;
    let r_xz = regular.subquotient(&r, &xz_ideal)?;
    let xz = regular.subquotient(&xz_ideal, &[])?;
    let yz = regular.subquotient(&span(&["YZ", "XYZ"]), &[])?;
    let xz_yz = regular.subquotient(&span(&["XZ", "YZ", "XYZ"]), &[])?;

    let one = b("1");
    let seq1 = {
        let v = rr3.module.direct_sum(&zr3.module)?;
        let image = concat(&[class(&rr3, &b("X"))?, class(&zr3, &b("Z"))?]);
        complete(injection(&lr2.module, &v, &[(class(&lr2, &one)?, image)])?, &r_xz.module, search)?
    };
    let seq2 = {
        let values = [(class(&xz, &b("XZ"))?, class(&r_xz, &b("Z"))?)];
        complete(injection(&xz.module, &r_xz.module, &values)?, &xz_yz.module, search)?
    };
    let seq3 = {
        let values = [(class(&yz, &b("YZ"))?, class(&xz_yz, &b("YZ"))?)];
        complete(injection(&yz.module, &xz_yz.module, &values)?, &s.module, search)?
    };
    let seq4 = {
        let v = xz.module.direct_sum(&yz.module)?;
        let image = concat(&[class(&xz, &b("XZ"))?, class(&yz, &b("YZ"))?]);
        complete(injection(&zr3.module, &v, &[(class(&zr3, &b("Z"))?, image)])?, &s.module, search)?
    };

    let (lr2m, sm) = (&lr2.module, &s.module);
    let steps = vec![
        seq1.riedtmann()?,
        seq2.with_summand(lr2m)?.riedtmann()?,
        seq3.with_summand(&xz.module.direct_sum(lr2m)?)?.riedtmann()?,
        seq4.with_summand(&sm.direct_sum(lr2m)?)?.riedtmann()?,
    ];
    let chain = VdegChain {
        m: rr3.module.clone(),
        n: Module::direct_sum_all(&[lr2m, sm, sm])?,
        z: zr3.module.clone(),
        steps,
    };

    let pair_map = {
        let (src, tgt) = (lr2m.power(2), rr3.module.power(2));
        let e = class(&lr2, &one)?;
        let zero = vec![F::zero(); lr2m.dim()];
        let (x, y, z) = (class(&rr3, &b("X"))?, class(&rr3, &b("Y"))?, class(&rr3, &b("Z"))?);
        let values = [(concat(&[e.clone(), zero.clone()]), concat(&[x, y.clone()])), (concat(&[zero, e]), concat(&[y, z]))];
        injection(&src, &tgt, &values)?
    };

    Ok(Ext3 {
        lambda,
        rr3: rr3.module,
        lr2: lr2.module,
        s: s.module,
        zr3: zr3.module,
        r_xz: r_xz.module,
        xz: xz.module,
        yz: yz.module,
        xz_yz: xz_yz.module,
        sequences: vec![seq1, seq2, seq3, seq4],
        chain,
        pair_map,
    })
}
