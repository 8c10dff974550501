use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{MPoly, Matrix, PolyMatrix};
use crate::modrep::hom::{for_each_vector, space_size};
use crate::modrep::{HomSpace, Module};
use crate::scalar::{random_scalar, Scalar};
use crate::verdict::{Search, Strategy};

/// The submodule generated by a tuple `x_1..x_i`.
#[derive(Clone, Debug)]
pub struct GeneratorSpan<F: Scalar> {
    pub module: Module<F>,
    pub tuple: Vec<Vec<F>>,
    /// `d × (m·i)`; column `t·m + j` is `ρ(b_j)·x_t`.
    pub phi: Matrix<F>,
    pub span_dim: usize,
}

fn phi_matrix<F: Scalar>(m: &Module<F>, tuple: &[Vec<F>]) -> Matrix<F> {
    let cols: Vec<Vec<F>> = tuple.iter().flat_map(|x| m.action().iter().map(move |a| a.mul_vec(x))).collect();
    Matrix::from_columns(&cols, m.dim())
}

pub fn generated_submodule<F: Scalar>(m: &Module<F>, tuple: &[Vec<F>]) -> Result<GeneratorSpan<F>> {
    if let Some(x) = tuple.iter().find(|x| x.len() != m.dim()) {
        return Err(Error::ShapeMismatch(format!("tuple vector of length {}, module dimension {}", x.len(), m.dim())));
    }
    let phi = phi_matrix(m, tuple);
    let span_dim = phi.rank();
    Ok(GeneratorSpan { module: m.clone(), tuple: tuple.to_vec(), phi, span_dim })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Certainty {
    Exact,
    LowerBound,
}

/// `f_i(M)`: the largest dimension of a submodule generated by `i` elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FInvariant {
    pub i: usize,
    pub value: usize,
    pub certainty: Certainty,
    pub method: Strategy,
    pub note: String,
}

/// `φ_x` with the tuple entries as indeterminates `x{t}_{s}`.
pub fn symbolic_phi<F: Scalar>(m: &Module<F>, i: usize) -> PolyMatrix<F> {
    let (d, nb) = (m.dim(), m.algebra().dim());
    let nv = d * i;
    let vars = (0..i).flat_map(|t| (0..d).map(move |s| format!("x{t}_{s}"))).collect();
    PolyMatrix::from_fn(d, nb * i, vars, |r, c| {
        let (t, j) = (c / nb, c % nb);
        let mut coeffs = vec![F::zero(); nv];
        coeffs[t * d..(t + 1) * d].clone_from_slice(m.act(j).row(r));
        MPoly::linear(&coeffs)
    })
}

fn random_rank<F: Scalar>(m: &Module<F>, i: usize, search: &Search, trials: u64) -> (usize, u64) {
    let d = m.dim();
    let mut rng = search.rng(0xF1 + i as u64);
    let mut best = 0;
    let mut used = 0;
    for t in 0..trials {
        used = t + 1;
        let bound = 2 + (t / 4) as i64;
        let tuple: Vec<Vec<F>> = (0..i).map(|_| (0..d).map(|_| random_scalar(&mut rng, bound)).collect()).collect();
        best = best.max(phi_matrix(m, &tuple).rank());
        if best == d {
            break;
        }
    }
    (best, used)
}

/// Computes `f_i(M)`.
///
/// `Exhaustive` maximizes over every tuple (finite fields). `Symbolic` is
/// the rank of `φ_x` over the rational function field in the tuple
/// entries, which is `f_i` after extending scalars to an infinite field.
/// `Randomized` is the best of seeded samples. `Auto` is exhaustive when
/// the tuple space is small, symbolic otherwise.
pub fn f_invariant<F: Scalar>(m: &Module<F>, i: usize, search: Search) -> FInvariant {
    let d = m.dim();
    let exact = |value, method, note: &str| FInvariant { i, value, certainty: Certainty::Exact, method, note: note.into() };
    if i == 0 || d == 0 {
        return exact(0, search.strategy, "empty tuple or zero module");
    }
    if i >= d {
        return exact(d, search.strategy, "the standard basis generates");
    }
    let size = space_size::<F>(d * i);
    let exhaustive = match search.strategy {
        Strategy::Exhaustive => size.is_some(),
        Strategy::Auto => search.enumerate(size),
        _ => false,
    };
    if exhaustive {
        let mut best = 0;
        let mut buf = vec![vec![F::zero(); d]; i];
        for_each_vector::<F>(d * i, |v| {
            for (t, x) in buf.iter_mut().enumerate() {
                x.clone_from_slice(&v[t * d..(t + 1) * d]);
            }
            best = best.max(phi_matrix(m, &buf).rank());
            best == d
        });
        return exact(best, Strategy::Exhaustive, "maximum over all tuples");
    }
    if search.strategy == Strategy::Randomized {
        let (best, used) = random_rank(m, i, &search, search.trials.max(1));
        let certainty = if best == d { Certainty::Exact } else { Certainty::LowerBound };
        return FInvariant { i, value: best, certainty, method: Strategy::Randomized, note: format!("best of {used} samples") };
    }
    let note = if F::is_finite() {
        "generic rank; equals f_i after extending scalars to an infinite field"
    } else {
        "generic rank; equals f_i over any infinite field, in particular after base change to the algebraic closure"
    };
    // a sampled point of full rank settles it without elimination
    let (best, _) = random_rank(m, i, &search, 4);
    if best == d {
        return exact(d, Strategy::Symbolic, note);
    }
    exact(symbolic_phi(m, i).symbolic_rank(), Strategy::Symbolic, note)
}

/// Rank of a generic element `Σ t_b f_b` of a Hom-space, over the rational
/// function field in the `t_b`.
pub fn hom_generic_rank<F: Scalar>(hom: &HomSpace<F>) -> usize {
    let h = hom.k_dim();
    let (rows, cols) = (hom.target().dim(), hom.source().dim());
    let vars = (0..h).map(|b| format!("t{b}")).collect();
    PolyMatrix::from_fn(rows, cols, vars, |r, c| {
        let coeffs: Vec<F> = hom.basis().iter().map(|f| f.matrix().get(r, c).clone()).collect();
        MPoly::linear(&coeffs)
    })
    .symbolic_rank()
}
