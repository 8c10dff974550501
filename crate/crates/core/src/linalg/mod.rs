//! Exact linear algebra: dense matrices, incremental row reduction, and
//! generic rank of polynomial matrices.

mod matrix;
mod mpoly;
mod polymatrix;
mod reduce;
mod span;

pub use matrix::Matrix;
pub use mpoly::{MPoly, Monomial};
pub use polymatrix::{symbolic_rank, PolyMatrix};
pub use reduce::{RowReducer, SparseRow};
pub use span::SpanCoords;

use crate::scalar::Scalar;

pub fn rank<F: Scalar>(m: &Matrix<F>) -> usize {
    m.rank()
}

pub fn nullspace<F: Scalar>(m: &Matrix<F>) -> Vec<Vec<F>> {
    m.nullspace()
}

/// One solution of `m·X = b`, or `None` when the system is inconsistent.
pub fn solve<F: Scalar>(m: &Matrix<F>, b: &Matrix<F>) -> crate::Result<Option<Matrix<F>>> {
    m.solve(b)
}

/// Rank of the columns of `a` and `b` together minus the ranks of each:
/// zero exactly when the column spans meet trivially.
pub fn span_overlap<F: Scalar>(a: &Matrix<F>, b: &Matrix<F>) -> usize {
    a.rank() + b.rank() - Matrix::hstack(&[a, b]).rank()
}
