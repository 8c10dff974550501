//! Scalar extension `K ⊗_k −`, restriction, Galois twists, the split
//! multiplication map and the decomposition of `K ⊗_k M` into twists.
//!
//! Modules over `Γ = K ⊗ Λ` use the basis `α^i ⊗ m_s` with index
//! `i·d + s` throughout.

use std::sync::Arc;

use crate::algebra::{extension_embedding, twist_automorphism, Algebra, ExtensionTag};
use crate::error::{Error, Result};
use crate::fields::SeparabilityIdempotent;
use crate::linalg::Matrix;
use crate::modrep::{HomSpace, Module, ModuleMorphism};
use crate::scalar::Scalar;

fn tag_of<F: Scalar>(m: &Module<F>) -> Result<ExtensionTag<F>> {
    m.algebra().extension_tag().cloned().ok_or(Error::NotExtensionAlgebra)
}

/// `K ⊗_k M` for a module `M` over the base algebra of `gamma`:
/// `α^i ⊗ λ_j` acts as `C^i ⊗ ρ(λ_j)` with `C` the companion matrix of `α`.
pub fn induce<F: Scalar>(gamma: &Arc<Algebra<F>>, m: &Module<F>) -> Result<Module<F>> {
    let tag = gamma.extension_tag().ok_or(Error::NotExtensionAlgebra)?;
    if !crate::modrep::same_algebra(&tag.lambda, m.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let tower = &tag.tower;
    let mut action = Vec::with_capacity(gamma.dim());
    for i in 0..tower.degree() {
        let c = tower.mult_matrix(&tower.power_of_generator(i));
        for a in m.action() {
            action.push(c.kron(a));
        }
    }
    Ok(Module::new_unchecked(gamma.clone(), tower.degree() * m.dim(), action))
}

/// The underlying module over the base algebra.
pub fn restrict<F: Scalar>(m: &Module<F>) -> Result<Module<F>> {
    m.pullback(&extension_embedding(m.algebra())?)
}

/// `M^φ`: the same space with `x ⊗ λ` acting as `φ(x) ⊗ λ` did.
pub fn twist<F: Scalar>(m: &Module<F>, phi: usize) -> Result<Module<F>> {
    m.pullback(&twist_automorphism(m.algebra(), phi)?)
}

/// Checks that the identity map `M^φ → M` intertwines the base-algebra
/// actions and carries the action of `α ⊗ 1` on `M^φ` to that of
/// `φ(α) ⊗ 1` on `M`.
pub fn twist_hat_holds<F: Scalar>(m: &Module<F>, twisted: &Module<F>, phi: usize) -> Result<bool> {
    let tag = tag_of(m)?;
    let ml = tag.lambda.dim();
    let lambda_ok = (0..ml).all(|j| twisted.act(j) == m.act(j));
    let beta = tag.tower.automorphisms().get(phi).ok_or(Error::IndexOutOfRange {
        index: phi,
        len: tag.tower.automorphisms().len(),
    })?;
    let alpha_one = |x: &crate::fields::FieldElem<F>| {
        let mut v = vec![F::zero(); m.algebra().dim()];
        for (a, c) in x.coeffs().iter().enumerate() {
            for (b, u) in tag.lambda.unit().iter().enumerate() {
                v[tag.index(a, b)] = c.clone() * u.clone();
            }
        }
        v
    };
    let alpha = tag.tower.generator();
    Ok(lambda_ok && twisted.act_element(&alpha_one(&alpha)) == m.act_element(&alpha_one(beta)))
}

/// `μ_M: K ⊗ M → M` and its splitting `ν_M`.
#[derive(Clone, Debug)]
pub struct SplitEpiWitness<F: Scalar> {
    pub mu: ModuleMorphism<F>,
    pub nu: ModuleMorphism<F>,
    pub idempotent: SeparabilityIdempotent<F>,
}

impl<F: Scalar> SplitEpiWitness<F> {
    /// Both maps are homomorphisms, `μ` is onto, `ν` is injective and
    /// `μ∘ν = 1`.
    pub fn verify(&self) -> bool {
        self.mu.verify()
            && self.nu.verify()
            && self.mu.is_surjective()
            && self.nu.is_injective()
            && self.mu.matrix().mul(self.nu.matrix()).is_identity()
    }
}

/// Matrices of `α^i ⊗ 1` on `M` for `i < n`.
fn alpha_powers<F: Scalar>(m: &Module<F>, tag: &ExtensionTag<F>) -> Vec<Matrix<F>> {
    (0..tag.degree())
        .map(|i| {
            let mut v = vec![F::zero(); m.algebra().dim()];
            for (b, u) in tag.lambda.unit().iter().enumerate() {
                v[tag.index(i, b)] = u.clone();
            }
            m.act_element(&v)
        })
        .collect()
}

/// `μ_M(x ⊗ m) = x·m` and `ν_M(m) = e·(1 ⊗ m)` for the separability
/// idempotent `e = Σ c_aj α^a ⊗ α^j`, i.e. `ν_M(m) = Σ α^a ⊗ c_aj α^j m`.
pub fn mu_split<F: Scalar>(m: &Module<F>) -> Result<SplitEpiWitness<F>> {
    let tag = tag_of(m)?;
    let e = tag.tower.separability_idempotent()?;
    let base = restrict(m)?;
    let km = induce(m.algebra(), &base)?;
    let powers = alpha_powers(m, &tag);
    let mu = Matrix::hstack(&powers.iter().collect::<Vec<_>>());
    let d = m.dim();
    let blocks: Vec<Matrix<F>> = (0..tag.degree())
        .map(|a| {
            let mut block = Matrix::zeros(d, d);
            for (j, p) in powers.iter().enumerate() {
                let c = e.coeff(a, j);
                if !c.is_zero() {
                    block.add_scaled(p, c);
                }
            }
            block
        })
        .collect();
    let nu = Matrix::vstack(&blocks.iter().collect::<Vec<_>>());
    let mu = ModuleMorphism::new(km.clone(), m.clone(), mu)?;
    let nu = ModuleMorphism::new(m.clone(), km, nu)?;
    let w = SplitEpiWitness { mu, nu, idempotent: e };
    if !w.verify() {
        return Err(Error::IdempotentCheckFailed("mu o nu is not the identity".into()));
    }
    Ok(w)
}

/// `K ⊗ M ≅ ⊕_φ M^φ` with explicit inclusions.
#[derive(Clone, Debug)]
pub struct GaloisDecomposition<F: Scalar> {
    pub module: Module<F>,
    /// `M^φ` in automorphism order.
    pub twists: Vec<Module<F>>,
    /// `ι_φ: M^φ → K ⊗ M`.
    pub inclusions: Vec<ModuleMorphism<F>>,
    /// `⊕ M^φ → K ⊗ M`.
    pub assembled: ModuleMorphism<F>,
}

impl<F: Scalar> GaloisDecomposition<F> {
    /// Every `ι_φ` is an injective homomorphism, images of distinct twists
    /// meet trivially, and the assembled map is an isomorphism.
    pub fn verify(&self) -> bool {
        let ranks: Vec<usize> = self.inclusions.iter().map(|i| i.rank()).collect();
        let injective = self.inclusions.iter().zip(&ranks).all(|(i, &r)| i.verify() && r == i.source().dim());
        let pairwise = (0..ranks.len()).all(|a| {
            (a + 1..ranks.len()).all(|b| {
                let both = Matrix::hstack(&[self.inclusions[a].matrix(), self.inclusions[b].matrix()]);
                both.rank() == ranks[a] + ranks[b]
            })
        });
        injective && pairwise && self.assembled.verify() && self.assembled.is_iso()
    }
}

/// Builds `ι_φ` as `ν` of `M^φ` followed by `1 ⊗ φ̂`, which is the identity
/// matrix because restriction forgets the twist.
pub fn galois_decompose<F: Scalar>(m: &Module<F>) -> Result<GaloisDecomposition<F>> {
    let tag = tag_of(m)?;
    if !tag.tower.is_normal() {
        return Err(Error::NotNormal);
    }
    let km = induce(m.algebra(), &restrict(m)?)?;
    let mut twists = Vec::new();
    let mut inclusions = Vec::new();
    for phi in 0..tag.tower.automorphisms().len() {
        let t = twist(m, phi)?;
        let nu = mu_split(&t)?.nu;
        inclusions.push(ModuleMorphism::new(t.clone(), km.clone(), nu.matrix().clone())?);
        twists.push(t);
    }
    let sum = Module::direct_sum_all(&twists.iter().collect::<Vec<_>>())?;
    let block = Matrix::hstack(&inclusions.iter().map(|i| i.matrix()).collect::<Vec<_>>());
    let assembled = ModuleMorphism::new(sum, km, block)?;
    let out = GaloisDecomposition { module: m.clone(), twists, inclusions, assembled };
    if !out.verify() {
        return Err(Error::AssemblyNotInvertible);
    }
    Ok(out)
}

/// Both sides of `dim_k Hom_Γ(K⊗X, K⊗M) = n · dim_k Hom_Λ(X, M)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BaseChangeReport {
    pub extended: usize,
    pub degree: usize,
    pub base: usize,
}

impl BaseChangeReport {
    pub fn holds(&self) -> bool {
        self.extended == self.degree * self.base
    }
}

pub fn base_change_hom_identity<F: Scalar>(
    gamma: &Arc<Algebra<F>>,
    x: &Module<F>,
    m: &Module<F>,
) -> Result<BaseChangeReport> {
    let tag = gamma.extension_tag().ok_or(Error::NotExtensionAlgebra)?;
    let extended = HomSpace::new(&induce(gamma, x)?, &induce(gamma, m)?)?.k_dim();
    let base = HomSpace::new(x, m)?.k_dim();
    Ok(BaseChangeReport { extended, degree: tag.degree(), base })
}

#[cfg(test)]
mod tests;
