use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, RowReducer};
use crate::modrep::Module;
use crate::scalar::{all_elements, random_scalar, Scalar};
use crate::verdict::{Search, Strategy, Verdict};

/// A module homomorphism; `matrix` is `d_target × d_source`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMorphism<F: Scalar> {
    source: Module<F>,
    target: Module<F>,
    matrix: Matrix<F>,
}

impl<F: Scalar> ModuleMorphism<F> {
    /// Checks `f·ρ_source(g) = ρ_target(g)·f` on the algebra's generators.
    pub fn new(source: Module<F>, target: Module<F>, matrix: Matrix<F>) -> Result<Self> {
        source.check_same_algebra(&target)?;
        if matrix.shape() != (target.dim(), source.dim()) {
            return Err(Error::ShapeMismatch(format!(
                "morphism matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        for (g, (a, b)) in source.generator_action().iter().zip(target.generator_action()).enumerate() {
            if matrix.mul(a) != b.mul(&matrix) {
                return Err(Error::NotAMorphism(g));
            }
        }
        Ok(ModuleMorphism { source, target, matrix })
    }

    pub(crate) fn new_unchecked(source: Module<F>, target: Module<F>, matrix: Matrix<F>) -> Self {
        ModuleMorphism { source, target, matrix }
    }

    pub fn identity(m: &Module<F>) -> Self {
        Self::new_unchecked(m.clone(), m.clone(), Matrix::identity(m.dim()))
    }

    pub fn zero(source: &Module<F>, target: &Module<F>) -> Self {
        Self::new_unchecked(source.clone(), target.clone(), Matrix::zeros(target.dim(), source.dim()))
    }

    pub fn source(&self) -> &Module<F> {
        &self.source
    }

    pub fn target(&self) -> &Module<F> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    /// Re-runs the intertwining check.
    pub fn verify(&self) -> bool {
        Self::new(self.source.clone(), self.target.clone(), self.matrix.clone()).is_ok()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if other.target != self.source {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Self::new_unchecked(other.source.clone(), self.target.clone(), self.matrix.mul(&other.matrix)))
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_iso(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_injective()
    }

    /// A homomorphism with `f(x) = y` for each given pair, if one exists.
    pub fn solve_for(source: &Module<F>, target: &Module<F>, values: &[(Vec<F>, Vec<F>)]) -> Result<Option<Self>> {
        let hom = HomSpace::new(source, target)?;
        let h = hom.k_dim();
        let rows = values.len() * target.dim();
        let lhs = Matrix::from_fn(rows, h, |r, b| {
            let (x, _) = &values[r / target.dim()];
            hom.basis()[b].matrix().mul_vec(x)[r % target.dim()].clone()
        });
        let rhs = Matrix::column(values.iter().flat_map(|(_, y)| y.iter().cloned()).collect());
        Ok(lhs.solve(&rhs)?.map(|c| Self::new_unchecked(source.clone(), target.clone(), hom.combination(&c.col(0)))))
    }

    /// The kernel as a submodule of the source, with its inclusion.
    pub fn kernel(&self) -> (Module<F>, Matrix<F>) {
        self.source.submodule(&self.matrix.nullspace()).expect("kernels are submodules")
    }

    /// The image as a submodule of the target, with its inclusion.
    pub fn image(&self) -> (Module<F>, Matrix<F>) {
        let cols: Vec<Vec<F>> = (0..self.matrix.cols()).map(|c| self.matrix.col(c)).collect();
        self.target.submodule(&cols).expect("images are submodules")
    }
}

/// A basis of `Hom(source, target)`.
///
/// Basis element `b` has coordinate 1 at the `b`-th free position of the
/// intertwining equations and 0 at the other free positions, so the
/// coordinates of any homomorphism are its entries at those positions.
#[derive(Clone, Debug)]
pub struct HomSpace<F: Scalar> {
    source: Module<F>,
    target: Module<F>,
    basis: Vec<ModuleMorphism<F>>,
    free: Vec<usize>,
    degree: Option<usize>,
}

impl<F: Scalar> HomSpace<F> {
    /// Solves `f·ρ_A(g) = ρ_B(g)·f` over the generators `g`; the unknown
    /// `f[r][c]` has index `r·d_A + c`.
    pub fn new(a: &Module<F>, b: &Module<F>) -> Result<Self> {
        a.check_same_algebra(b)?;
        let (da, db) = (a.dim(), b.dim());
        let n = da * db;
        let mut red = RowReducer::new(n);
        for (ga, gb) in a.generator_action().iter().zip(b.generator_action()) {
            for r in 0..db {
                for c in 0..da {
                    let mut row: Vec<(usize, F)> = Vec::new();
                    for t in 0..da {
                        let x = ga.get(t, c);
                        if !x.is_zero() {
                            row.push((r * da + t, x.clone()));
                        }
                    }
                    for t in 0..db {
                        let x = gb.get(r, t);
                        if !x.is_zero() {
                            row.push((t * da + c, -x.clone()));
                        }
                    }
                    row.sort_by_key(|e| e.0);
                    let mut merged: Vec<(usize, F)> = Vec::with_capacity(row.len());
                    for (i, x) in row {
                        match merged.last_mut() {
                            Some((j, y)) if *j == i => *y = y.clone() + x,
                            _ => merged.push((i, x)),
                        }
                    }
                    merged.retain(|e| !e.1.is_zero());
                    if !merged.is_empty() {
                        red.insert_sparse(&merged);
                    }
                }
            }
        }
        let pivots: std::collections::BTreeSet<usize> = red.pivot_cols().collect();
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let basis = red
            .nullspace()
            .into_iter()
            .map(|v| ModuleMorphism::new_unchecked(a.clone(), b.clone(), Matrix::from_vec(db, da, v).expect("sized")))
            .collect();
        let degree = a.algebra().extension_tag().map(|t| t.degree());
        Ok(HomSpace { source: a.clone(), target: b.clone(), basis, free, degree })
    }

    pub fn source(&self) -> &Module<F> {
        &self.source
    }

    pub fn target(&self) -> &Module<F> {
        &self.target
    }

    pub fn basis(&self) -> &[ModuleMorphism<F>] {
        &self.basis
    }

    /// Dimension over the base field.
    pub fn k_dim(&self) -> usize {
        self.basis.len()
    }

    /// Dimension over the extension field, for modules over an extension
    /// algebra.
    pub fn ext_dim(&self) -> Option<usize> {
        self.degree.map(|n| self.k_dim() / n)
    }

    /// `Σ c_b basis_b`.
    pub fn combination(&self, coeffs: &[F]) -> Matrix<F> {
        let mut out = Matrix::zeros(self.target.dim(), self.source.dim());
        for (b, c) in self.basis.iter().zip(coeffs) {
            if !c.is_zero() {
                out.add_scaled(b.matrix(), c);
            }
        }
        out
    }

    /// Coordinates of a homomorphism in the basis.
    pub fn coords(&self, f: &Matrix<F>) -> Vec<F> {
        let entries = f.entries();
        self.free.iter().map(|&i| entries[i].clone()).collect()
    }
}

/// Why two modules are not isomorphic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoCertificate {
    DimMismatch(usize, usize),
    /// `dim Hom(P, A) != dim Hom(P, B)` (or the contravariant version) for
    /// the probe `P`, which is one of the two modules.
    HomProbe { probe: &'static str, covariant: bool, left: usize, right: usize },
    /// Every homomorphism was enumerated and none is invertible.
    NoInvertible { checked: u128 },
}

impl fmt::Display for IsoCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoCertificate::DimMismatch(a, b) => write!(f, "dimensions differ: {a} vs {b}"),
            IsoCertificate::HomProbe { probe, covariant: true, left, right } => {
                write!(f, "dim Hom({probe}, A) = {left} but dim Hom({probe}, B) = {right}")
            }
            IsoCertificate::HomProbe { probe, covariant: false, left, right } => {
                write!(f, "dim Hom(A, {probe}) = {left} but dim Hom(B, {probe}) = {right}")
            }
            IsoCertificate::NoInvertible { checked } => {
                write!(f, "none of the {checked} homomorphisms A -> B is invertible")
            }
        }
    }
}

impl IsoCertificate {
    /// Recomputes the certificate's numbers.
    pub fn verify<F: Scalar>(&self, a: &Module<F>, b: &Module<F>) -> bool {
        match *self {
            IsoCertificate::DimMismatch(x, y) => x == a.dim() && y == b.dim() && x != y,
            IsoCertificate::HomProbe { probe, covariant, left, right } => {
                let p = if probe == "A" { a } else { b };
                let dim = |x: &Module<F>, y: &Module<F>| HomSpace::new(x, y).map(|h| h.k_dim()).ok();
                let (l, r) = if covariant { (dim(p, a), dim(p, b)) } else { (dim(a, p), dim(b, p)) };
                left != right && l == Some(left) && r == Some(right)
            }
            IsoCertificate::NoInvertible { .. } => {
                F::is_finite() && iso_test(a, b, Search::new(Strategy::Exhaustive, 0, 0)).is_ok_and(|v| v.is_refuted())
            }
        }
    }
}

/// Number of elements of `F^dim`, if finite.
pub(crate) fn space_size<F: Scalar>(dim: usize) -> Option<u128> {
    let q = F::field_order()? as u128;
    let mut total: u128 = 1;
    for _ in 0..dim {
        total = total.checked_mul(q)?;
    }
    Some(total)
}

/// Calls `f` on every coefficient vector of length `dim` over a finite
/// field, in lexicographic order, until it returns `true`.
pub(crate) fn for_each_vector<F: Scalar>(dim: usize, mut f: impl FnMut(&[F]) -> bool) -> bool {
    let elems = all_elements::<F>().expect("finite field");
    let q = elems.len();
    let mut idx = vec![0usize; dim];
    let mut v: Vec<F> = vec![elems[0].clone(); dim];
    loop {
        if f(&v) {
            return true;
        }
        let mut k = dim;
        loop {
            if k == 0 {
                return false;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < q {
                v[k] = elems[idx[k]].clone();
                break;
            }
            idx[k] = 0;
            v[k] = elems[0].clone();
        }
    }
}

/// Decides whether `a ≅ b`.
///
/// Refutations are certificates: different dimensions, different
/// Hom-dimensions from or to one of the two modules, or (over a finite
/// field, exhaustively) no invertible homomorphism. Proofs carry an
/// invertible homomorphism. Over infinite fields a failed randomized search
/// is `Unknown`.
pub fn iso_test<F: Scalar>(a: &Module<F>, b: &Module<F>, search: Search) -> Result<Verdict<ModuleMorphism<F>, IsoCertificate>> {
    a.check_same_algebra(b)?;
    if a.dim() != b.dim() {
        return Ok(Verdict::Refuted(IsoCertificate::DimMismatch(a.dim(), b.dim())));
    }
    let hom_ab = HomSpace::new(a, b)?;
    for (probe, p) in [("A", a), ("B", b)] {
        let (left, right) = (HomSpace::new(p, a)?.k_dim(), HomSpace::new(p, b)?.k_dim());
        if left != right {
            return Ok(Verdict::Refuted(IsoCertificate::HomProbe { probe, covariant: true, left, right }));
        }
        let (left, right) = (HomSpace::new(a, p)?.k_dim(), HomSpace::new(b, p)?.k_dim());
        if left != right {
            return Ok(Verdict::Refuted(IsoCertificate::HomProbe { probe, covariant: false, left, right }));
        }
    }
    let h = hom_ab.k_dim();
    let wrap = |m: Matrix<F>| ModuleMorphism::new_unchecked(a.clone(), b.clone(), m);
    if a.dim() == 0 {
        return Ok(Verdict::Proved(wrap(Matrix::zeros(0, 0))));
    }
    // a single basis element is often already invertible
    for f in hom_ab.basis() {
        if f.matrix().is_invertible() {
            return Ok(Verdict::Proved(f.clone()));
        }
    }
    let size = space_size::<F>(h);
    if search.enumerate(size) {
        let mut found = None;
        for_each_vector::<F>(h, |c| {
            let m = hom_ab.combination(c);
            if m.is_invertible() {
                found = Some(m);
                true
            } else {
                false
            }
        });
        return Ok(match found {
            Some(m) => Verdict::Proved(wrap(m)),
            None => Verdict::Refuted(IsoCertificate::NoInvertible { checked: size.unwrap_or(0) }),
        });
    }
    let mut rng = search.rng(0x150);
    for t in 0..search.trials {
        let bound = 1 + (t / 8) as i64;
        let coeffs: Vec<F> = (0..h).map(|_| random_scalar(&mut rng, bound)).collect();
        let m = hom_ab.combination(&coeffs);
        if m.is_invertible() {
            return Ok(Verdict::Proved(wrap(m)));
        }
    }
    Ok(Verdict::Unknown(search.effort(search.trials, "no invertible homomorphism among sampled combinations")))
}
