//! Seeded random modules for property tests and experiments.

use std::sync::Arc;

use rand::Rng;

use crate::algebra::{Algebra, AlgebraKind, Quiver};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::modrep::Module;
use crate::scalar::{random_scalar, Scalar};

fn quiver_of<F: Scalar>(alg: &Algebra<F>) -> Result<Quiver> {
    match alg.kind() {
        AlgebraKind::Path(q) => Ok(q.clone()),
        _ => Err(Error::ShapeMismatch("a path algebra is required".into())),
    }
}

/// Random dimension vector with total between 1 and `max_dim` (0 when
/// `max_dim` is 0).
pub fn random_dims<R: Rng + ?Sized>(vertices: usize, max_dim: usize, rng: &mut R) -> Vec<usize> {
    let mut dims = vec![0; vertices];
    for _ in 0..rng.gen_range(max_dim.min(1)..=max_dim) {
        dims[rng.gen_range(0..vertices)] += 1;
    }
    dims
}

/// A representation of the quiver of a path algebra with entries drawn by
/// [`random_scalar`].
pub fn random_representation<F: Scalar, R: Rng + ?Sized>(
    alg: &Arc<Algebra<F>>,
    dims: &[usize],
    bound: i64,
    rng: &mut R,
) -> Result<Module<F>> {
    let quiver = quiver_of(alg)?;
    let arrows: Vec<Matrix<F>> = quiver
        .arrows()
        .iter()
        .map(|a| Matrix::from_fn(dims[a.target], dims[a.source], |_, _| random_scalar(rng, bound)))
        .collect();
    Module::representation(alg.clone(), dims, &arrows)
}

/// A `K`-representation for `Γ = K ⊗ kQ`, each entry a random element of `K`.
pub fn random_k_representation<F: Scalar, R: Rng + ?Sized>(
    gamma: &Arc<Algebra<F>>,
    dims: &[usize],
    bound: i64,
    rng: &mut R,
) -> Result<Module<F>> {
    let tag = gamma.extension_tag().ok_or(Error::NotExtensionAlgebra)?;
    let quiver = quiver_of(&tag.lambda)?;
    let tower = &tag.tower;
    let mut entry = || tower.elem((0..tower.degree()).map(|_| random_scalar(rng, bound)).collect());
    let arrows = quiver
        .arrows()
        .iter()
        .map(|a| (0..dims[a.target] * dims[a.source]).map(|_| entry()).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Module::k_representation(gamma.clone(), dims, &arrows)
}

/// A random module of total (`K`-)dimension at most `max_dim` over a path
/// algebra or its scalar extension.
pub fn random_module<F: Scalar, R: Rng + ?Sized>(
    alg: &Arc<Algebra<F>>,
    max_dim: usize,
    bound: i64,
    rng: &mut R,
) -> Result<Module<F>> {
    match alg.extension_tag() {
        Some(tag) => {
            let dims = random_dims(quiver_of(&tag.lambda)?.vertices(), max_dim, rng);
            random_k_representation(alg, &dims, bound, rng)
        }
        None => {
            let dims = random_dims(quiver_of(alg)?.vertices(), max_dim, rng);
            random_representation(alg, &dims, bound, rng)
        }
    }
}

/// A module over any algebra with generators: random generator matrices
/// of size `dim` until one satisfies the relations, up to `tries` draws.
pub fn random_generator_module<F: Scalar, R: Rng + ?Sized>(
    alg: &Arc<Algebra<F>>,
    dim: usize,
    tries: usize,
    rng: &mut R,
) -> Option<Module<F>> {
    let g = alg.generators().vectors.len();
    (0..tries).find_map(|_| {
        let gens: Vec<Matrix<F>> = (0..g).map(|_| Matrix::from_fn(dim, dim, |_, _| random_scalar(rng, 1))).collect();
        Module::from_generator_actions(alg.clone(), dim, &gens).ok()
    })
}
