//! Modules as points of `mod_d`: one `d × d` matrix per algebra basis
//! element. Hom-spaces, isomorphism tests and endomorphism rings.

mod endo;
pub(crate) mod hom;

use std::sync::Arc;

pub use endo::{end_algebra, is_division, is_local, min_poly, radical_char0, RingCertificate, RingProof};
pub use hom::{iso_test, HomSpace, IsoCertificate, ModuleMorphism};

use crate::algebra::{Algebra, AlgebraKind, AlgebraMorphism};
use crate::error::{Error, Result};
use crate::fields::FieldElem;
use crate::linalg::{Matrix, RowReducer, SpanCoords};
use crate::scalar::Scalar;

/// A left module over a finite-dimensional algebra, stored over the base
/// field.
#[derive(Clone)]
pub struct Module<F> {
    algebra: Arc<Algebra<F>>,
    dim: usize,
    action: Arc<Vec<Matrix<F>>>,
    gens: Arc<Vec<Matrix<F>>>,
}

impl<F: Scalar> std::fmt::Debug for Module<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Module")
            .field("algebra", &self.algebra.kind().label())
            .field("dim", &self.dim)
            .field("action", &self.action)
            .finish()
    }
}

impl<F: Scalar> PartialEq for Module<F> {
    /// Equal action matrices over the same algebra (not isomorphism).
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra) && self.action == other.action
    }
}

impl<F: Scalar> Eq for Module<F> {}

pub(crate) fn same_algebra<F: Scalar>(a: &Arc<Algebra<F>>, b: &Arc<Algebra<F>>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

fn combine<F: Scalar>(mats: &[Matrix<F>], coeffs: &[F], d: usize) -> Matrix<F> {
    let mut out = Matrix::zeros(d, d);
    for (m, c) in mats.iter().zip(coeffs) {
        if !c.is_zero() {
            out.add_scaled(m, c);
        }
    }
    out
}

impl<F: Scalar> Module<F> {
    /// Validates `ρ(1) = I` and `ρ(b_i)ρ(b_j) = Σ c_ij^l ρ(b_l)`.
    pub fn new(algebra: Arc<Algebra<F>>, action: Vec<Matrix<F>>) -> Result<Self> {
        let m = algebra.dim();
        if action.len() != m {
            return Err(Error::ShapeMismatch(format!("{} action matrices for an algebra of dimension {m}", action.len())));
        }
        let d = action.first().map_or(0, |a| a.rows());
        if action.iter().any(|a| a.shape() != (d, d)) {
            return Err(Error::ShapeMismatch("action matrices must be square of equal size".into()));
        }
        if !combine(&action, algebra.unit(), d).is_identity() {
            return Err(Error::UnitNotIdentity);
        }
        for i in 0..m {
            for j in 0..m {
                let lhs = action[i].mul(&action[j]);
                let mut rhs = Matrix::zeros(d, d);
                for (l, c) in algebra.basis_product(i, j) {
                    rhs.add_scaled(&action[*l], c);
                }
                if lhs != rhs {
                    return Err(Error::RelationViolated(i, j));
                }
            }
        }
        Ok(Self::new_unchecked(algebra, d, action))
    }

    pub(crate) fn new_unchecked(algebra: Arc<Algebra<F>>, dim: usize, action: Vec<Matrix<F>>) -> Self {
        let gens = algebra.generators().vectors.iter().map(|g| combine(&action, g, dim)).collect();
        Module { algebra, dim, action: Arc::new(action), gens: Arc::new(gens) }
    }

    /// Builds the action from matrices for the algebra's generators, using
    /// the generator words, then validates every relation.
    pub fn from_generator_actions(algebra: Arc<Algebra<F>>, dim: usize, gens: &[Matrix<F>]) -> Result<Self> {
        let g = &algebra.generators();
        if gens.len() != g.vectors.len() {
            return Err(Error::ShapeMismatch(format!("{} generator matrices, expected {}", gens.len(), g.vectors.len())));
        }
        if gens.iter().any(|a| a.shape() != (dim, dim)) {
            return Err(Error::ShapeMismatch("generator matrices must be square of the module dimension".into()));
        }
        let action = g
            .words
            .iter()
            .map(|w| w.iter().fold(Matrix::identity(dim), |acc, &x| acc.mul(&gens[x])))
            .collect();
        Self::new(algebra, action)
    }

    pub fn zero(algebra: Arc<Algebra<F>>) -> Self {
        let m = algebra.dim();
        Self::new_unchecked(algebra, 0, vec![Matrix::zeros(0, 0); m])
    }

    /// The algebra acting on itself by left multiplication.
    pub fn regular(algebra: Arc<Algebra<F>>) -> Self {
        let action = (0..algebra.dim()).map(|i| algebra.left_mult(&algebra.basis_vector(i))).collect();
        Self::new_unchecked(algebra.clone(), algebra.dim(), action)
    }

    /// A representation of the quiver of a path algebra: vertex dimensions
    /// and one `dims[target] × dims[source]` matrix per arrow.
    pub fn representation(algebra: Arc<Algebra<F>>, dims: &[usize], arrows: &[Matrix<F>]) -> Result<Self> {
        let quiver = match algebra.kind() {
            AlgebraKind::Path(q) => q.clone(),
            _ => return Err(Error::ShapeMismatch("representations need a path algebra".into())),
        };
        if dims.len() != quiver.vertices() || arrows.len() != quiver.arrows().len() {
            return Err(Error::ShapeMismatch("one dimension per vertex and one matrix per arrow".into()));
        }
        let offset: Vec<usize> = dims.iter().scan(0, |acc, &x| { let o = *acc; *acc += x; Some(o) }).collect();
        let d: usize = dims.iter().sum();
        let mut basis_mats = Vec::with_capacity(algebra.dim());
        for v in 0..quiver.vertices() {
            let mut e = Matrix::zeros(d, d);
            for r in offset[v]..offset[v] + dims[v] {
                e.set(r, r, F::one());
            }
            basis_mats.push(e);
        }
        for (a, arrow) in quiver.arrows().iter().enumerate() {
            let mat = &arrows[a];
            if mat.shape() != (dims[arrow.target], dims[arrow.source]) {
                return Err(Error::ShapeMismatch(format!("arrow {} needs a {}x{} matrix", arrow.label, dims[arrow.target], dims[arrow.source])));
            }
            let mut full = Matrix::zeros(d, d);
            full.set_block(offset[arrow.target], offset[arrow.source], mat);
            basis_mats.push(full);
        }
        Self::from_basis_generators(algebra, d, basis_mats)
    }

    /// Vertex and arrow matrices, in path-basis order, mapped onto the
    /// algebra's generators (which are standard basis vectors for path
    /// algebras).
    fn from_basis_generators(algebra: Arc<Algebra<F>>, d: usize, basis_mats: Vec<Matrix<F>>) -> Result<Self> {
        let gens: Vec<Matrix<F>> = algebra
            .generators()
            .vectors
            .iter()
            .map(|g| combine(&basis_mats, g, d))
            .collect();
        Self::from_generator_actions(algebra, d, &gens)
    }

    /// A module over `Γ = K ⊗ Λ` from a `K`-linear action: `size` is the
    /// `K`-dimension and `lambda_gens[g]` is the `K`-matrix (row-major) of
    /// the `g`-th generator of `Λ`. The result has `k`-dimension
    /// `n·size`, with `α^i ⊗ λ` acting as `realify(α^i·A_λ)`.
    pub fn from_k_form(gamma: Arc<Algebra<F>>, size: usize, lambda_gens: &[Vec<FieldElem<F>>]) -> Result<Self> {
        let tag = gamma.extension_tag().ok_or(Error::NotExtensionAlgebra)?.clone();
        let lambda = &tag.lambda;
        let tower = &tag.tower;
        let n = tower.degree();
        if lambda_gens.len() != lambda.generators().vectors.len() || lambda_gens.iter().any(|g| g.len() != size * size) {
            return Err(Error::ShapeMismatch("one K-matrix per generator of the base algebra".into()));
        }
        let real: Vec<Matrix<F>> = lambda_gens.iter().map(|g| tower.realify(size, size, g)).collect();
        let d = n * size;
        let lambda_action: Vec<Matrix<F>> = lambda
            .generators()
            .words
            .iter()
            .map(|w| w.iter().fold(Matrix::identity(d), |acc, &x| acc.mul(&real[x])))
            .collect();
        let alpha_diag: Vec<FieldElem<F>> =
            (0..size * size).map(|k| if k % (size + 1) == 0 { tower.generator() } else { tower.zero() }).collect();
        let alpha = tower.realify(size, size, &alpha_diag);
        let mut action = Vec::with_capacity(gamma.dim());
        let mut pw = Matrix::identity(d);
        for _ in 0..n {
            for a in &lambda_action {
                action.push(pw.mul(a));
            }
            pw = pw.mul(&alpha);
        }
        Self::new(gamma, action)
    }

    /// A `K`-representation of the quiver underlying `Γ = K ⊗ kQ`: vertex
    /// `K`-dimensions and row-major `K`-matrices per arrow.
    pub fn k_representation(gamma: Arc<Algebra<F>>, dims: &[usize], arrows: &[Vec<FieldElem<F>>]) -> Result<Self> {
        let tag = gamma.extension_tag().ok_or(Error::NotExtensionAlgebra)?.clone();
        let quiver = match tag.lambda.kind() {
            AlgebraKind::Path(q) => q.clone(),
            _ => return Err(Error::ShapeMismatch("K-representations need a path algebra".into())),
        };
        if dims.len() != quiver.vertices() || arrows.len() != quiver.arrows().len() {
            return Err(Error::ShapeMismatch("one dimension per vertex and one matrix per arrow".into()));
        }
        let tower = &tag.tower;
        let offset: Vec<usize> = dims.iter().scan(0, |acc, &x| { let o = *acc; *acc += x; Some(o) }).collect();
        let d: usize = dims.iter().sum();
        let mut basis_mats: Vec<Vec<FieldElem<F>>> = Vec::new();
        for v in 0..quiver.vertices() {
            let mut e = vec![tower.zero(); d * d];
            for r in offset[v]..offset[v] + dims[v] {
                e[r * d + r] = tower.one();
            }
            basis_mats.push(e);
        }
        for (a, arrow) in quiver.arrows().iter().enumerate() {
            let (rows, cols) = (dims[arrow.target], dims[arrow.source]);
            if arrows[a].len() != rows * cols {
                return Err(Error::ShapeMismatch(format!("arrow {} needs a {rows}x{cols} matrix", arrow.label)));
            }
            let mut full = vec![tower.zero(); d * d];
            for r in 0..rows {
                for c in 0..cols {
                    full[(offset[arrow.target] + r) * d + offset[arrow.source] + c] = arrows[a][r * cols + c].clone();
                }
            }
            basis_mats.push(full);
        }
        let gens: Vec<Vec<FieldElem<F>>> = tag
            .lambda
            .generators()
            .vectors
            .iter()
            .map(|g| {
                let mut out = vec![tower.zero(); d * d];
                for (b, c) in g.iter().enumerate() {
                    if !c.is_zero() {
                        for (o, x) in out.iter_mut().zip(&basis_mats[b]) {
                            *o = tower.add(o, &tower.scale(x, c));
                        }
                    }
                }
                out
            })
            .collect();
        Self::from_k_form(gamma, d, &gens)
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `ρ(b_i)`.
    pub fn act(&self, i: usize) -> &Matrix<F> {
        &self.action[i]
    }

    pub fn action(&self) -> &[Matrix<F>] {
        &self.action
    }

    /// `ρ` of the algebra's generators, in generator order.
    pub fn generator_action(&self) -> &[Matrix<F>] {
        &self.gens
    }

    /// `ρ(x)` for an algebra element in coordinates.
    pub fn act_element(&self, x: &[F]) -> Matrix<F> {
        combine(&self.action, x, self.dim)
    }

    /// `k`-dimension divided by the extension degree, when the algebra is
    /// an extension algebra.
    pub fn k_dim_over_extension(&self) -> Option<usize> {
        self.algebra.extension_tag().map(|t| self.dim / t.degree())
    }

    pub fn check_same_algebra(&self, other: &Self) -> Result<()> {
        if same_algebra(&self.algebra, &other.algebra) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        Self::direct_sum_all(&[self, other])
    }

    pub fn direct_sum_all(parts: &[&Self]) -> Result<Self> {
        let first = parts.first().ok_or_else(|| Error::ShapeMismatch("empty direct sum".into()))?;
        for p in parts {
            first.check_same_algebra(p)?;
        }
        let action = (0..first.algebra.dim())
            .map(|i| Matrix::block_diag(&parts.iter().map(|p| &p.action[i]).collect::<Vec<_>>()))
            .collect();
        let d = parts.iter().map(|p| p.dim).sum();
        Ok(Self::new_unchecked(first.algebra.clone(), d, action))
    }

    /// `self^k`.
    pub fn power(&self, k: usize) -> Self {
        if k == 0 {
            return Self::zero(self.algebra.clone());
        }
        Self::direct_sum_all(&vec![self; k]).expect("same algebra")
    }

    fn closed_under_action(&self, red: &RowReducer<F>, vectors: &[Vec<F>]) -> bool {
        vectors.iter().all(|v| self.gens.iter().all(|g| red.contains(&g.mul_vec(v))))
    }

    /// The submodule spanned by `vectors` (which must be closed under the
    /// action), with its inclusion matrix.
    pub fn submodule(&self, vectors: &[Vec<F>]) -> Result<(Self, Matrix<F>)> {
        let mut red = RowReducer::new(self.dim);
        let mut basis = Vec::new();
        for v in vectors {
            if v.len() != self.dim {
                return Err(Error::ShapeMismatch(format!("vector of length {}, module dimension {}", v.len(), self.dim)));
            }
            if red.insert_dense(v) {
                basis.push(v.clone());
            }
        }
        if !self.closed_under_action(&red, &basis) {
            return Err(Error::NotClosed("vectors do not span a submodule".into()));
        }
        let coords = SpanCoords::new(&basis, self.dim).expect("independent by construction");
        let s = basis.len();
        let action = self
            .action
            .iter()
            .map(|a| {
                let cols: Vec<Vec<F>> =
                    basis.iter().map(|b| coords.coords(&a.mul_vec(b)).expect("closed under the action")).collect();
                Matrix::from_columns(&cols, s)
            })
            .collect();
        let inclusion = Matrix::from_columns(&basis, self.dim);
        Ok((Self::new_unchecked(self.algebra.clone(), s, action), inclusion))
    }

    /// The quotient by the submodule spanned by `vectors`, with the
    /// projection matrix. The quotient basis is the images of the standard
    /// basis vectors outside the pivot columns of the submodule.
    pub fn quotient(&self, vectors: &[Vec<F>]) -> Result<(Self, Matrix<F>)> {
        let mut red = RowReducer::new(self.dim);
        for v in vectors {
            if v.len() != self.dim {
                return Err(Error::ShapeMismatch(format!("vector of length {}, module dimension {}", v.len(), self.dim)));
            }
            red.insert_dense(v);
        }
        if !self.closed_under_action(&red, vectors) {
            return Err(Error::NotClosed("vectors do not span a submodule".into()));
        }
        let pivots: std::collections::BTreeSet<usize> = red.pivot_cols().collect();
        let keep: Vec<usize> = (0..self.dim).filter(|c| !pivots.contains(c)).collect();
        let q = keep.len();
        let project = |v: &[F]| -> Vec<F> {
            let mut w = v.to_vec();
            red.reduce_dense(&mut w);
            keep.iter().map(|&c| w[c].clone()).collect()
        };
        let action = self
            .action
            .iter()
            .map(|a| Matrix::from_columns(&keep.iter().map(|&c| project(&a.col(c))).collect::<Vec<_>>(), q))
            .collect();
        let projection =
            Matrix::from_columns(&(0..self.dim).map(|c| project(&Matrix::<F>::identity(self.dim).col(c))).collect::<Vec<_>>(), q);
        Ok((Self::new_unchecked(self.algebra.clone(), q, action), projection))
    }

    /// `top / bottom` for submodules `bottom ⊆ top` given by spanning
    /// vectors.
    pub fn subquotient(&self, top: &[Vec<F>], bottom: &[Vec<F>]) -> Result<Subquotient<F>> {
        let (sub, inclusion) = self.submodule(top)?;
        let basis: Vec<Vec<F>> = (0..inclusion.cols()).map(|c| inclusion.col(c)).collect();
        let coords = SpanCoords::new(&basis, self.dim).expect("submodule basis is independent");
        let lowered = bottom
            .iter()
            .map(|v| coords.coords(v).ok_or_else(|| Error::NotClosed("bottom is not inside top".into())))
            .collect::<Result<Vec<_>>>()?;
        let (module, projection) = sub.quotient(&lowered)?;
        Ok(Subquotient { module, basis, coords, projection })
    }

    /// The module over the source of `phi` with `a` acting as `ρ(phi(a))`.
    pub fn pullback(&self, phi: &AlgebraMorphism<F>) -> Result<Self> {
        if !same_algebra(phi.target(), &self.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        if !phi.verify().is_proved() {
            return Err(Error::MorphismUnverified);
        }
        let action = (0..phi.source().dim()).map(|a| self.act_element(&phi.matrix().col(a))).collect();
        Ok(Self::new_unchecked(phi.source().clone(), self.dim, action))
    }
}

/// A subquotient together with the map from vectors of the ambient module
/// (lying in the top submodule) to coordinates in the subquotient.
#[derive(Clone, Debug)]
pub struct Subquotient<F: Scalar> {
    pub module: Module<F>,
    basis: Vec<Vec<F>>,
    coords: SpanCoords<F>,
    projection: Matrix<F>,
}

impl<F: Scalar> Subquotient<F> {
    /// An ambient vector whose class is the `q`-th basis vector.
    pub fn lift(&self, q: usize) -> Vec<F> {
        let c = (0..self.projection.cols())
            .find(|&c| (0..self.projection.rows()).all(|r| *self.projection.get(r, c) == if r == q { F::one() } else { F::zero() }))
            .expect("quotient basis vectors are images of top basis vectors");
        self.basis[c].clone()
    }

    /// The class of `v`, or `None` when `v` is outside the top submodule.
    pub fn class_of(&self, v: &[F]) -> Option<Vec<F>> {
        Some(self.projection.mul_vec(&self.coords.coords(v)?))
    }
}

#[cfg(test)]
mod tests;
