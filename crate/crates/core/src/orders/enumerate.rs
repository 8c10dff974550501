use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{Algebra, AlgebraKind, Quiver};
use crate::descent::{induce, restrict, twist};
use crate::error::{Error, Result};
use crate::fields::FieldElem;
use crate::linalg::Matrix;
use crate::modrep::hom::{for_each_vector, space_size};
use crate::modrep::{iso_test, HomSpace, Module};
use crate::orders::compare::{hom_order_cmp, HomOrderVerdict};
use crate::scalar::{all_elements, Scalar};
use crate::verdict::{Search, Strategy};

/// How the structures were produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EnumerationMethod {
    /// Every tuple of generator matrices, filtered by the relations; class
    /// sizes are member counts.
    GeneratorMatrices,
    /// Quiver representations (over `K` for `K ⊗ kQ`) in block form; class
    /// sizes are `|GL_d(k)| / |Aut M|`.
    Representations,
}

#[derive(Clone, Debug)]
pub struct IsoClass<F: Scalar> {
    /// First member in enumeration order.
    pub representative: Module<F>,
    pub size: u128,
    pub aut_order: u128,
}

/// The module structures on `k^d` up to isomorphism.
#[derive(Clone, Debug)]
pub struct EnumerationSpace<F: Scalar> {
    pub algebra: Arc<Algebra<F>>,
    pub dim: usize,
    pub method: EnumerationMethod,
    /// Number of structures, counted directly or by a closed formula.
    pub total: u128,
    pub classes: Vec<IsoClass<F>>,
}

impl<F: Scalar> EnumerationSpace<F> {
    pub fn size_sum(&self) -> u128 {
        self.classes.iter().map(|c| c.size).sum()
    }

    pub fn representatives(&self) -> Vec<Module<F>> {
        self.classes.iter().map(|c| c.representative.clone()).collect()
    }
}

fn pow(q: u128, e: usize) -> Option<u128> {
    (0..e).try_fold(1u128, |acc, _| acc.checked_mul(q))
}

/// `|GL_n(F_q)|`.
pub fn gl_order(n: usize, q: u128) -> Option<u128> {
    let qn = pow(q, n)?;
    (0..n).try_fold(1u128, |acc, i| acc.checked_mul(qn - pow(q, i)?))
}

fn over_budget(needed: Option<u128>, budget: u128) -> Result<()> {
    match needed {
        Some(n) if n <= budget => Ok(()),
        n => Err(Error::BudgetExceeded { needed: n.unwrap_or(u128::MAX), budget }),
    }
}

/// Number of invertible endomorphisms, by enumerating `End(M)`.
pub fn aut_order<F: Scalar>(m: &Module<F>, budget: u128) -> Result<u128> {
    let hom = HomSpace::new(m, m)?;
    over_budget(space_size::<F>(hom.k_dim()), budget)?;
    let mut count = 0u128;
    for_each_vector::<F>(hom.k_dim(), |c| {
        if hom.combination(c).is_invertible() {
            count += 1;
        }
        false
    });
    Ok(count)
}

/// Groups modules into isomorphism classes, keeping the first member of
/// each class and counting members.
struct Classifier<F: Scalar> {
    classes: Vec<(Vec<usize>, Module<F>, u128)>,
}

impl<F: Scalar> Classifier<F> {
    fn new() -> Self {
        Classifier { classes: Vec::new() }
    }

    fn add(&mut self, m: Module<F>) -> Result<()> {
        let key: Vec<usize> = m.action().iter().map(Matrix::rank).collect();
        let exhaustive = Search::new(Strategy::Exhaustive, 0, 0);
        for (k, rep, count) in self.classes.iter_mut() {
            if *k == key && iso_test(rep, &m, exhaustive)?.is_proved() {
                *count += 1;
                return Ok(());
            }
        }
        self.classes.push((key, m, 1));
        Ok(())
    }
}

/// Compositions of `total` into `parts` nonnegative parts, lexicographic.
fn compositions(parts: usize, total: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(parts - 1, total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn arrow_entries(quiver: &Quiver, dims: &[usize]) -> usize {
    quiver.arrows().iter().map(|a| dims[a.source] * dims[a.target]).sum()
}

/// Calls `f` with every tuple of indices in `0..q` of length `len`, in
/// lexicographic order.
fn for_each_index_tuple(len: usize, q: usize, mut f: impl FnMut(&[usize]) -> Result<()>) -> Result<()> {
    let mut idx = vec![0usize; len];
    loop {
        f(&idx)?;
        let mut k = len;
        loop {
            if k == 0 {
                return Ok(());
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < q {
                break;
            }
            idx[k] = 0;
        }
    }
}

fn enumerate_generator_matrices<F: Scalar>(alg: &Arc<Algebra<F>>, d: usize, budget: u128) -> Result<EnumerationSpace<F>> {
    let g = alg.generators().vectors.len();
    let cells = d * d * g;
    over_budget(space_size::<F>(cells), budget)?;
    let mut classifier = Classifier::new();
    let mut total = 0u128;
    let mut err = None;
    for_each_vector::<F>(cells, |v| {
        let gens: Vec<Matrix<F>> =
            (0..g).map(|i| Matrix::from_vec(d, d, v[i * d * d..(i + 1) * d * d].to_vec()).expect("d x d")).collect();
        if let Ok(m) = Module::from_generator_actions(alg.clone(), d, &gens) {
            total += 1;
            if let Err(e) = classifier.add(m) {
                err = Some(e);
                return true;
            }
        }
        false
    });
    if let Some(e) = err {
        return Err(e);
    }
    let classes = classifier
        .classes
        .into_iter()
        .map(|(_, representative, size)| Ok(IsoClass { aut_order: aut_order(&representative, budget)?, representative, size }))
        .collect::<Result<_>>()?;
    Ok(EnumerationSpace { algebra: alg.clone(), dim: d, method: EnumerationMethod::GeneratorMatrices, total, classes })
}

/// Representations of `quiver` over the field with `q_big` elements, built
/// by `build(dims, entry indices)`; `d` is the dimension over the base
/// field and `n` the degree of the coefficient field over it.
#[allow(clippy::too_many_arguments)]
fn enumerate_representations<F: Scalar>(
    alg: &Arc<Algebra<F>>,
    quiver: &Quiver,
    d: usize,
    n: usize,
    q_big: usize,
    budget: u128,
    build: impl Fn(&[usize], &[usize]) -> Result<Module<F>>,
) -> Result<EnumerationSpace<F>> {
    let q = F::field_order().expect("finite field") as u128;
    let method = EnumerationMethod::Representations;
    if d % n != 0 {
        return Ok(EnumerationSpace { algebra: alg.clone(), dim: d, method, total: 0, classes: Vec::new() });
    }
    let e = d / n;
    let dvs = compositions(quiver.vertices(), e);
    let count: Option<u128> =
        dvs.iter().try_fold(0u128, |acc, dv| acc.checked_add(pow(q_big as u128, arrow_entries(quiver, dv))?));
    over_budget(count, budget)?;
    let gl_d = gl_order(d, q).ok_or(Error::BudgetExceeded { needed: u128::MAX, budget })?;
    let mut total = 0u128;
    let mut classifier = Classifier::new();
    for dv in &dvs {
        let entries = arrow_entries(quiver, dv);
        let stab: u128 = dv.iter().map(|&x| gl_order(x, q_big as u128).expect("small")).product();
        total += gl_d / stab * pow(q_big as u128, entries).expect("within budget");
        for_each_index_tuple(entries, q_big, |idx| classifier.add(build(dv, idx)?))?;
    }
    let classes = classifier
        .classes
        .into_iter()
        .map(|(_, representative, _)| {
            let aut = aut_order(&representative, budget)?;
            Ok(IsoClass { size: gl_d / aut, aut_order: aut, representative })
        })
        .collect::<Result<_>>()?;
    Ok(EnumerationSpace { algebra: alg.clone(), dim: d, method, total, classes })
}

fn split_arrows<T: Clone>(quiver: &Quiver, dims: &[usize], flat: &[T]) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    let mut at = 0;
    for a in quiver.arrows() {
        let len = dims[a.source] * dims[a.target];
        out.push(flat[at..at + len].to_vec());
        at += len;
    }
    out
}

/// All module structures on `k^d` over a finite base field, grouped into
/// isomorphism classes.
///
/// Path algebras and `K ⊗ kQ` are enumerated as (K-)representations and
/// their total is the orbit-counting formula; other algebras are
/// enumerated by generator matrices. `budget` bounds the number of
/// candidates and of endomorphisms enumerated per class.
pub fn enumerate_modules<F: Scalar>(alg: &Arc<Algebra<F>>, d: usize, budget: u128) -> Result<EnumerationSpace<F>> {
    let elems = all_elements::<F>().ok_or(Error::FiniteFieldRequired)?;
    match alg.kind() {
        AlgebraKind::Path(quiver) => enumerate_representations(alg, quiver, d, 1, elems.len(), budget, |dims, idx| {
            let mats: Vec<Matrix<F>> = split_arrows(quiver, dims, idx)
                .into_iter()
                .zip(quiver.arrows())
                .map(|(ix, a)| {
                    let data = ix.iter().map(|&i| elems[i].clone()).collect();
                    Matrix::from_vec(dims[a.target], dims[a.source], data).expect("arrow shape")
                })
                .collect();
            Module::representation(alg.clone(), dims, &mats)
        }),
        AlgebraKind::Extension(tag) => match tag.lambda.kind() {
            AlgebraKind::Path(quiver) => {
                let kelems: Vec<FieldElem<F>> = tag.tower.elements().ok_or(Error::FiniteFieldRequired)?;
                let n = tag.degree();
                enumerate_representations(alg, quiver, d, n, kelems.len(), budget, |dims, idx| {
                    let arrows: Vec<Vec<FieldElem<F>>> = split_arrows(quiver, dims, idx)
                        .into_iter()
                        .map(|ix| ix.iter().map(|&i| kelems[i].clone()).collect())
                        .collect();
                    Module::k_representation(alg.clone(), dims, &arrows)
                })
            }
            _ => enumerate_generator_matrices(alg, d, budget),
        },
        _ => enumerate_generator_matrices(alg, d, budget),
    }
}

/// Agreement of the Hom-orders over `Λ` and over `Γ` on one pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderDisagreement {
    pub dim: usize,
    pub m: usize,
    pub n: usize,
    pub over_lambda: bool,
    pub over_gamma: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistClosureReport {
    pub degree: usize,
    /// Largest `K`-dimension enumerated.
    pub d_max: usize,
    /// `Γ`-classes per `K`-dimension `0..=d_max`.
    pub gamma_classes: Vec<usize>,
    /// `Λ`-classes per `k`-dimension `0..=n·d_max` (the probe family).
    pub lambda_classes: Vec<usize>,
    /// Every `Γ`-class is isomorphic to all of its twists.
    pub twist_stable: bool,
    /// `(K-dimension, class index)` of classes not isomorphic to some twist.
    pub twist_unstable: Vec<(usize, usize)>,
    /// Non-isomorphic `Γ`-classes never become isomorphic over `Λ`.
    pub restriction_reflects_iso: bool,
    /// Pairs of equal dimension compared in both Hom-orders.
    pub pairs: usize,
    pub disagreements: Vec<OrderDisagreement>,
    /// `_Λ[X, M] = n·_Γ[X, M]` on all enumerated pairs (expected when
    /// every class is twist-stable).
    pub restricted_hom_identity: bool,
    /// `_Γ[K⊗X, K⊗M] = n·_Λ[X, M]` on all enumerated `Λ`-pairs.
    pub induced_hom_identity: bool,
}

impl TwistClosureReport {
    /// Twist-stability matches iso-reflection, and when it holds the two
    /// Hom-orders agree on every pair.
    pub fn consistent(&self) -> bool {
        self.twist_stable == self.restriction_reflects_iso
            && (!self.twist_stable || (self.disagreements.is_empty() && self.restricted_hom_identity))
            && self.induced_hom_identity
    }
}

fn hom_le<F: Scalar>(m: &Module<F>, n: &Module<F>, probes: &[Module<F>]) -> Result<bool> {
    Ok(hom_order_cmp(m, n, probes)?.verdict == HomOrderVerdict::Consistent)
}

/// Enumerates `Γ = K ⊗ Λ`-modules up to `K`-dimension `d_max` and
/// `Λ`-modules up to `k`-dimension `n·d_max`, then checks whether every
/// class is twist-stable, whether restriction reflects isomorphism, whether
/// the Hom-orders over `Λ` and `Γ` agree (probes: all enumerated classes),
/// and the two Hom-dimension identities.
pub fn twist_closure_experiment<F: Scalar>(gamma: &Arc<Algebra<F>>, d_max: usize, budget: u128) -> Result<TwistClosureReport> {
    let tag = gamma.extension_tag().ok_or(Error::NotExtensionAlgebra)?.clone();
    if !F::is_finite() {
        return Err(Error::FiniteFieldRequired);
    }
    if !tag.tower.is_normal() {
        return Err(Error::NotNormal);
    }
    let n = tag.degree();
    let lambda = tag.lambda.clone();
    let gamma_spaces: Vec<Vec<Module<F>>> =
        (0..=d_max).map(|e| enumerate_modules(gamma, n * e, budget).map(|s| s.representatives())).collect::<Result<_>>()?;
    let lambda_spaces: Vec<Vec<Module<F>>> =
        (0..=n * d_max).map(|k| enumerate_modules(&lambda, k, budget).map(|s| s.representatives())).collect::<Result<_>>()?;
    let gamma_probes: Vec<Module<F>> = gamma_spaces.iter().flatten().cloned().collect();
    let lambda_probes: Vec<Module<F>> = lambda_spaces.iter().flatten().cloned().collect();
    let exhaustive = Search::new(Strategy::Exhaustive, 0, 0);

    let mut twist_unstable = Vec::new();
    for (e, classes) in gamma_spaces.iter().enumerate() {
        for (c, m) in classes.iter().enumerate() {
            for phi in 0..tag.tower.automorphisms().len() {
                if !iso_test(m, &twist(m, phi)?, exhaustive)?.is_proved() {
                    twist_unstable.push((e, c));
                    break;
                }
            }
        }
    }

    let mut restriction_reflects_iso = true;
    let mut pairs = 0;
    let mut disagreements = Vec::new();
    for (e, classes) in gamma_spaces.iter().enumerate() {
        let restricted: Vec<Module<F>> = classes.iter().map(restrict).collect::<Result<_>>()?;
        for a in 0..classes.len() {
            for b in 0..classes.len() {
                if a < b && iso_test(&restricted[a], &restricted[b], exhaustive)?.is_proved() {
                    restriction_reflects_iso = false;
                }
                if a == b {
                    continue;
                }
                pairs += 1;
                let over_gamma = hom_le(&classes[a], &classes[b], &gamma_probes)?;
                let over_lambda = hom_le(&restricted[a], &restricted[b], &lambda_probes)?;
                if over_gamma != over_lambda {
                    disagreements.push(OrderDisagreement { dim: e, m: a, n: b, over_lambda, over_gamma });
                }
            }
        }
    }

    let mut restricted_hom_identity = true;
    for x in &gamma_probes {
        let rx = restrict(x)?;
        for m in &gamma_probes {
            let over_gamma = HomSpace::new(x, m)?.k_dim();
            let over_lambda = HomSpace::new(&rx, &restrict(m)?)?.k_dim();
            restricted_hom_identity &= over_lambda == n * over_gamma;
        }
    }

    let mut induced_hom_identity = true;
    let induced: Vec<Module<F>> = lambda_probes.iter().map(|x| induce(gamma, x)).collect::<Result<_>>()?;
    for (x, kx) in lambda_probes.iter().zip(&induced) {
        for (m, km) in lambda_probes.iter().zip(&induced) {
            let base = HomSpace::new(x, m)?.k_dim();
            induced_hom_identity &= HomSpace::new(kx, km)?.k_dim() == n * base;
        }
    }

    Ok(TwistClosureReport {
        degree: n,
        d_max,
        gamma_classes: gamma_spaces.iter().map(Vec::len).collect(),
        lambda_classes: lambda_spaces.iter().map(Vec::len).collect(),
        twist_stable: twist_unstable.is_empty(),
        twist_unstable,
        restriction_reflects_iso,
        pairs,
        disagreements,
        restricted_hom_identity,
        induced_hom_identity,
    })
}
