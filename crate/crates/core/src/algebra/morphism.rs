use std::sync::{Arc, OnceLock};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::verdict::Verdict;

/// Why a linear map fails to be an algebra morphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorphismFailure {
    Unit,
    /// `f(b_i b_j) != f(b_i) f(b_j)`
    Product(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismReport {
    pub rank: usize,
    pub bijective: bool,
}

/// A linear map between algebras; column `j` holds the image of source
/// basis element `j`.
#[derive(Clone)]
pub struct AlgebraMorphism<F> {
    source: Arc<Algebra<F>>,
    target: Arc<Algebra<F>>,
    matrix: Matrix<F>,
    checked: OnceLock<Option<MorphismFailure>>,
}

impl<F: Scalar> std::fmt::Debug for AlgebraMorphism<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AlgebraMorphism")
            .field("source", &self.source.kind().label())
            .field("target", &self.target.kind().label())
            .field("matrix", &self.matrix)
            .finish()
    }
}

impl<F: Scalar> AlgebraMorphism<F> {
    pub fn new(source: Arc<Algebra<F>>, target: Arc<Algebra<F>>, matrix: Matrix<F>) -> Result<Self> {
        if matrix.shape() != (target.dim(), source.dim()) {
            return Err(Error::ShapeMismatch(format!(
                "morphism matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        Ok(AlgebraMorphism { source, target, matrix, checked: OnceLock::new() })
    }

    pub fn identity(alg: Arc<Algebra<F>>) -> Self {
        let m = alg.dim();
        AlgebraMorphism::new(alg.clone(), alg, Matrix::identity(m)).unwrap()
    }

    pub fn source(&self) -> &Arc<Algebra<F>> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Algebra<F>> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    pub fn apply(&self, x: &[F]) -> Vec<F> {
        self.matrix.mul_vec(x)
    }

    fn failure(&self) -> Option<MorphismFailure> {
        self.checked
            .get_or_init(|| {
                let s = &self.source;
                let t = &self.target;
                if self.apply(s.unit()) != t.unit() {
                    return Some(MorphismFailure::Unit);
                }
                let images: Vec<Vec<F>> = (0..s.dim()).map(|j| self.matrix.col(j)).collect();
                for i in 0..s.dim() {
                    for j in 0..s.dim() {
                        let mut prod = vec![F::zero(); s.dim()];
                        for (l, c) in s.basis_product(i, j) {
                            prod[*l] = c.clone();
                        }
                        if self.apply(&prod) != t.mul(&images[i], &images[j]) {
                            return Some(MorphismFailure::Product(i, j));
                        }
                    }
                }
                None
            })
            .clone()
    }

    pub fn is_verified(&self) -> bool {
        self.failure().is_none()
    }

    /// Checks the unit and all basis products.
    pub fn verify(&self) -> Verdict<MorphismReport, MorphismFailure> {
        match self.failure() {
            Some(f) => Verdict::Refuted(f),
            None => {
                let rank = self.matrix.rank();
                let bijective = rank == self.source.dim() && rank == self.target.dim();
                Verdict::Proved(MorphismReport { rank, bijective })
            }
        }
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if other.target.as_ref() != self.source.as_ref() {
            return Err(Error::AlgebraMismatch);
        }
        AlgebraMorphism::new(other.source.clone(), self.target.clone(), self.matrix.mul(&other.matrix))
    }
}

impl<F: Scalar> PartialEq for AlgebraMorphism<F> {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix && self.source == other.source && self.target == other.target
    }
}
