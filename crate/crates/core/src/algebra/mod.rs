//! Finite-dimensional algebras over the base field, given by structure
//! constants, and the built-in constructors.
//!
//! Basis conventions:
//! * path algebras: trivial paths first, then paths by length and
//!   lexicographically by arrow indices in traversal order; the product
//!   `p·q` is "first `q`, then `p`" and is nonzero iff `q` ends where `p`
//!   starts, so modules are quiver representations;
//! * exterior algebras: square-free monomials by degree, then
//!   lexicographically;
//! * tensor extensions `K ⊗ Λ`: index `i·dim(Λ) + j` is `α^i ⊗ λ_j`.

mod morphism;
mod quiver;

use std::sync::Arc;

pub use morphism::{AlgebraMorphism, MorphismFailure, MorphismReport};
pub use quiver::{Arrow, Path, Quiver};

use crate::error::{Error, Result};
use crate::fields::FieldTower;
use crate::linalg::{Matrix, RowReducer, SpanCoords, SparseRow};
use crate::scalar::Scalar;

/// Metadata of `Γ = K ⊗_k Λ`.
#[derive(Clone, Debug)]
pub struct ExtensionTag<F> {
    pub tower: Arc<FieldTower<F>>,
    pub lambda: Arc<Algebra<F>>,
}

impl<F: Scalar> ExtensionTag<F> {
    pub fn degree(&self) -> usize {
        self.tower.degree()
    }

    /// Index of `α^i ⊗ λ_j`.
    pub fn index(&self, i: usize, j: usize) -> usize {
        i * self.lambda.dim() + j
    }
}

#[derive(Clone, Debug)]
pub enum AlgebraKind<F> {
    StructureConstants,
    Path(Quiver),
    Exterior(usize),
    TruncatedPolynomial(usize),
    Field(Arc<FieldTower<F>>),
    MatrixSpan,
    Quotient,
    Extension(ExtensionTag<F>),
}

impl<F> AlgebraKind<F> {
    pub fn label(&self) -> &'static str {
        match self {
            AlgebraKind::StructureConstants => "structure_constants",
            AlgebraKind::Path(_) => "path",
            AlgebraKind::Exterior(_) => "exterior",
            AlgebraKind::TruncatedPolynomial(_) => "truncated_polynomial",
            AlgebraKind::Field(_) => "field",
            AlgebraKind::MatrixSpan => "matrix_span",
            AlgebraKind::Quotient => "quotient",
            AlgebraKind::Extension(_) => "tensor_extension",
        }
    }
}

/// Generators as coordinate vectors, with a word in the generators for
/// every basis element (empty word = unit).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generators<F> {
    pub vectors: Vec<Vec<F>>,
    pub names: Vec<String>,
    pub words: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct Algebra<F> {
    basis_names: Vec<String>,
    unit: Vec<F>,
    table: Vec<SparseRow<F>>,
    generators: Generators<F>,
    kind: AlgebraKind<F>,
}

impl<F: Scalar> PartialEq for Algebra<F> {
    fn eq(&self, other: &Self) -> bool {
        self.unit == other.unit && self.table == other.table
    }
}

impl<F: Scalar> Eq for Algebra<F> {}

fn sparse<F: Scalar>(v: &[F]) -> SparseRow<F> {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

fn unit_vector<F: Scalar>(m: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); m];
    v[i] = F::one();
    v
}

impl<F: Scalar> Algebra<F> {
    /// Validates the table (`table[i][j]` = coordinates of `b_i b_j`) and
    /// the unit.
    pub fn from_structure_constants(table: Vec<Vec<Vec<F>>>, unit: Vec<F>) -> Result<Self> {
        let m = unit.len();
        if table.len() != m || table.iter().any(|r| r.len() != m || r.iter().any(|c| c.len() != m)) {
            return Err(Error::ShapeMismatch(format!("structure constants must be {m}x{m}x{m}")));
        }
        let flat = table.iter().flat_map(|r| r.iter().map(|c| sparse(c))).collect();
        let names = (0..m).map(|i| format!("b{i}")).collect();
        Self::build(names, unit, flat, AlgebraKind::StructureConstants, None)
    }

    fn build(
        basis_names: Vec<String>,
        unit: Vec<F>,
        table: Vec<SparseRow<F>>,
        kind: AlgebraKind<F>,
        generators: Option<Generators<F>>,
    ) -> Result<Self> {
        let m = unit.len();
        let mut alg = Algebra {
            basis_names,
            unit,
            table,
            generators: Generators { vectors: vec![], names: vec![], words: vec![] },
            kind,
        };
        alg.check_unit()?;
        alg.check_associative()?;
        alg.generators = match generators {
            Some(g) => g,
            None => alg.greedy_generators(),
        };
        if alg.generators.words.len() != m {
            return Err(Error::ShapeMismatch("one generator word per basis element".into()));
        }
        for l in 0..m {
            if alg.eval_word(&alg.generators.words[l]) != unit_vector(m, l) {
                return Err(Error::BadGenerators(l));
            }
        }
        Ok(alg)
    }

    fn check_unit(&self) -> Result<()> {
        let m = self.dim();
        for i in 0..m {
            let e = unit_vector(m, i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(Error::UnitLawFails(i));
            }
        }
        Ok(())
    }

    fn check_associative(&self) -> Result<()> {
        let m = self.dim();
        for i in 0..m {
            for j in 0..m {
                let ij = &self.table[i * m + j];
                for l in 0..m {
                    let mut left = vec![F::zero(); m];
                    for (s, c) in ij {
                        for (t, d) in &self.table[s * m + l] {
                            left[*t] = left[*t].clone() + c.clone() * d.clone();
                        }
                    }
                    let mut right = vec![F::zero(); m];
                    for (s, c) in &self.table[j * m + l] {
                        for (t, d) in &self.table[i * m + s] {
                            right[*t] = right[*t].clone() + c.clone() * d.clone();
                        }
                    }
                    if left != right {
                        return Err(Error::NotAssociative(i, j, l));
                    }
                }
            }
        }
        Ok(())
    }

    /// Basis elements that are not exact products of earlier ones become
    /// generators.
    fn greedy_generators(&self) -> Generators<F> {
        let m = self.dim();
        let mut words: Vec<Option<Vec<usize>>> = vec![None; m];
        let mut gens = Generators { vectors: vec![], names: vec![], words: vec![] };
        for l in 0..m {
            let target = vec![(l, F::one())];
            if sparse(&self.unit) == target {
                words[l] = Some(vec![]);
                continue;
            }
            let mut found = None;
            'search: for i in 0..l {
                for j in 0..l {
                    if let (Some(wi), Some(wj)) = (&words[i], &words[j]) {
                        if !wi.is_empty() && !wj.is_empty() && self.table[i * m + j] == target {
                            found = Some([wi.clone(), wj.clone()].concat());
                            break 'search;
                        }
                    }
                }
            }
            words[l] = Some(found.unwrap_or_else(|| {
                gens.vectors.push(unit_vector(m, l));
                gens.names.push(self.basis_names[l].clone());
                vec![gens.vectors.len() - 1]
            }));
        }
        gens.words = words.into_iter().map(Option::unwrap).collect();
        gens
    }

    fn eval_word(&self, word: &[usize]) -> Vec<F> {
        word.iter().fold(self.unit.clone(), |acc, &g| self.mul(&acc, &self.generators.vectors[g]))
    }

    pub fn dim(&self) -> usize {
        self.unit.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim() {
            return Err(Error::ShapeMismatch("one name per basis element".into()));
        }
        for (g, name) in self.generators.vectors.iter().zip(self.generators.names.iter_mut()) {
            let support = sparse(g);
            if let [(l, c)] = support.as_slice() {
                if *c == F::one() && *name == self.basis_names[*l] {
                    *name = names[*l].clone();
                }
            }
        }
        self.basis_names = names;
        Ok(self)
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    pub fn kind(&self) -> &AlgebraKind<F> {
        &self.kind
    }

    pub fn generators(&self) -> &Generators<F> {
        &self.generators
    }

    pub fn extension_tag(&self) -> Option<&ExtensionTag<F>> {
        match &self.kind {
            AlgebraKind::Extension(t) => Some(t),
            _ => None,
        }
    }

    pub fn basis_product(&self, i: usize, j: usize) -> &SparseRow<F> {
        &self.table[i * self.dim() + j]
    }

    /// Dense structure constants, `[i][j]` = coordinates of `b_i b_j`.
    pub fn table(&self) -> Vec<Vec<Vec<F>>> {
        let m = self.dim();
        (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        let mut v = vec![F::zero(); m];
                        for (l, c) in self.basis_product(i, j) {
                            v[*l] = c.clone();
                        }
                        v
                    })
                    .collect()
            })
            .collect()
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        unit_vector(self.dim(), i)
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let m = self.dim();
        let mut out = vec![F::zero(); m];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.clone() * b.clone();
                for (l, c) in &self.table[i * m + j] {
                    out[*l] = out[*l].clone() + ab.clone() * c.clone();
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mult(&self, x: &[F]) -> Matrix<F> {
        let m = self.dim();
        let cols: Vec<Vec<F>> = (0..m).map(|j| self.mul(x, &unit_vector(m, j))).collect();
        Matrix::from_columns(&cols, m)
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_mult(&self, x: &[F]) -> Matrix<F> {
        let m = self.dim();
        let cols: Vec<Vec<F>> = (0..m).map(|j| self.mul(&unit_vector(m, j), x)).collect();
        Matrix::from_columns(&cols, m)
    }

    pub fn is_commutative(&self) -> bool {
        let m = self.dim();
        (0..m).all(|i| (0..i).all(|j| self.table[i * m + j] == self.table[j * m + i]))
    }

    pub fn is_unit_element(&self, x: &[F]) -> bool {
        self.left_mult(x).is_invertible()
    }

    pub fn format_element(&self, x: &[F]) -> String {
        let terms: Vec<String> = x
            .iter()
            .zip(&self.basis_names)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, n)| if c.is_one() { n.clone() } else { format!("{c}*{n}") })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// Path algebra of an acyclic quiver.
pub fn path_algebra<F: Scalar>(quiver: &Quiver) -> Result<Algebra<F>> {
    let paths = quiver.paths()?;
    let nv = quiver.vertices();
    let na = quiver.arrows().len();
    let m = paths.len();
    let index: std::collections::HashMap<&Path, usize> =
        paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut table = Vec::with_capacity(m * m);
    for p in &paths {
        for q in &paths {
            table.push(match quiver.compose(p, q) {
                Some(pq) => vec![(index[&pq], F::one())],
                None => vec![],
            });
        }
    }
    let mut unit = vec![F::zero(); m];
    for u in unit.iter_mut().take(nv) {
        *u = F::one();
    }
    let names = paths.iter().map(|p| quiver.path_name(p)).collect();
    let gen_names = (0..nv)
        .map(|v| format!("e{}", v + 1))
        .chain(quiver.arrows().iter().map(|a| a.label.clone()))
        .collect();
    let vectors = (0..nv + na).map(|g| unit_vector(m, g)).collect();
    let words = paths
        .iter()
        .map(|p| match p {
            Path::Trivial(v) => vec![*v],
            Path::Arrows(a) => a.iter().rev().map(|x| nv + x).collect(),
        })
        .collect();
    Algebra::build(
        names,
        unit,
        table,
        AlgebraKind::Path(quiver.clone()),
        Some(Generators { vectors, names: gen_names, words }),
    )
}

const EXTERIOR_VARS: [char; 4] = ['X', 'Y', 'Z', 'W'];

/// Exterior algebra in 1 to 4 variables.
pub fn exterior_algebra<F: Scalar>(num_vars: usize) -> Result<Algebra<F>> {
    if !(1..=4).contains(&num_vars) {
        return Err(Error::UnsupportedVarCount(num_vars));
    }
    let mut masks: Vec<u32> = (0..1u32 << num_vars).collect();
    masks.sort_by_key(|&s| {
        let vars: Vec<u32> = (0..num_vars as u32).filter(|v| s >> v & 1 == 1).collect();
        (s.count_ones(), vars)
    });
    let index: Vec<usize> = {
        let mut idx = vec![0; masks.len()];
        for (i, &s) in masks.iter().enumerate() {
            idx[s as usize] = i;
        }
        idx
    };
    let m = masks.len();
    let mut table = Vec::with_capacity(m * m);
    for &s in &masks {
        for &t in &masks {
            table.push(if s & t != 0 {
                vec![]
            } else {
                let inversions: u32 =
                    (0..num_vars as u32).filter(|v| s >> v & 1 == 1).map(|v| (t & ((1 << v) - 1)).count_ones()).sum();
                let sign = if inversions % 2 == 0 { F::one() } else { -F::one() };
                vec![(index[(s | t) as usize], sign)]
            });
        }
    }
    let names = masks
        .iter()
        .map(|&s| {
            if s == 0 {
                "1".to_string()
            } else {
                (0..num_vars).filter(|v| s >> v & 1 == 1).map(|v| EXTERIOR_VARS[v]).collect()
            }
        })
        .collect();
    let vectors = (0..num_vars).map(|v| unit_vector(m, index[1 << v])).collect();
    let gen_names = EXTERIOR_VARS[..num_vars].iter().map(|c| c.to_string()).collect();
    let words = masks.iter().map(|&s| (0..num_vars).filter(|v| s >> v & 1 == 1).collect()).collect();
    Algebra::build(
        names,
        unit_vector(m, 0),
        table,
        AlgebraKind::Exterior(num_vars),
        Some(Generators { vectors, names: gen_names, words }),
    )
}

/// `k[x]/(x^n)`.
pub fn truncated_polynomial<F: Scalar>(n: usize) -> Result<Algebra<F>> {
    if n == 0 {
        return Err(Error::ShapeMismatch("truncation degree must be positive".into()));
    }
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            table.push(if i + j < n { vec![(i + j, F::one())] } else { vec![] });
        }
    }
    let names = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    let gens = if n > 1 {
        Generators { vectors: vec![unit_vector(n, 1)], names: vec!["x".into()], words: (0..n).map(|i| vec![0; i]).collect() }
    } else {
        Generators { vectors: vec![], names: vec![], words: vec![vec![]] }
    };
    Algebra::build(names, unit_vector(n, 0), table, AlgebraKind::TruncatedPolynomial(n), Some(gens))
}

/// The extension field `K` as a `k`-algebra, basis `1, α, …, α^(n-1)`.
pub fn field_algebra<F: Scalar>(tower: Arc<FieldTower<F>>) -> Result<Algebra<F>> {
    let n = tower.degree();
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            table.push(sparse(tower.power_of_generator(i + j).coeffs()));
        }
    }
    let g = tower.gen_name().to_string();
    let names = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => g.clone(),
            _ => format!("{g}^{i}"),
        })
        .collect();
    let gens = if n > 1 {
        Generators { vectors: vec![unit_vector(n, 1)], names: vec![g], words: (0..n).map(|i| vec![0; i]).collect() }
    } else {
        Generators { vectors: vec![], names: vec![], words: vec![vec![]] }
    };
    Algebra::build(names, unit_vector(n, 0), table, AlgebraKind::Field(tower), Some(gens))
}

/// `Γ = K ⊗_k Λ` over the base field.
pub fn tensor_extension<F: Scalar>(tower: Arc<FieldTower<F>>, lambda: Arc<Algebra<F>>) -> Result<Algebra<F>> {
    let n = tower.degree();
    let ml = lambda.dim();
    let m = n * ml;
    let mut table = Vec::with_capacity(m * m);
    for i in 0..n {
        for j in 0..ml {
            for k in 0..n {
                for l in 0..ml {
                    let pw = tower.power_of_generator(i + k);
                    let mut row: SparseRow<F> = Vec::new();
                    for (a, ca) in pw.coeffs().iter().enumerate() {
                        if ca.is_zero() {
                            continue;
                        }
                        for (b, cb) in lambda.basis_product(j, l) {
                            row.push((a * ml + b, ca.clone() * cb.clone()));
                        }
                    }
                    table.push(row);
                }
            }
        }
    }
    let g = tower.gen_name().to_string();
    let names = (0..n)
        .flat_map(|i| {
            let g = g.clone();
            lambda.basis_names().iter().map(move |nm| match i {
                0 => nm.clone(),
                1 => format!("{g}*{nm}"),
                _ => format!("{g}^{i}*{nm}"),
            })
        })
        .collect();
    let mut unit = vec![F::zero(); m];
    unit[..ml].clone_from_slice(lambda.unit());

    let lg = lambda.generators();
    let mut vectors: Vec<Vec<F>> = Vec::new();
    let mut gen_names = Vec::new();
    if n > 1 {
        let mut a = vec![F::zero(); m];
        a[ml..2 * ml].clone_from_slice(lambda.unit());
        vectors.push(a);
        gen_names.push(g.clone());
    }
    let shift = vectors.len();
    for (v, nm) in lg.vectors.iter().zip(&lg.names) {
        let mut e = vec![F::zero(); m];
        e[..ml].clone_from_slice(v);
        vectors.push(e);
        gen_names.push(nm.clone());
    }
    let words = (0..n)
        .flat_map(|i| {
            lg.words.iter().map(move |w| {
                std::iter::repeat_n(0, i).chain(w.iter().map(|x| x + shift)).collect::<Vec<usize>>()
            })
        })
        .collect();
    Algebra::build(
        names,
        unit,
        table,
        AlgebraKind::Extension(ExtensionTag { tower, lambda }),
        Some(Generators { vectors, names: gen_names, words }),
    )
}

/// `A ⊗_k B`, index `i·dim(B) + j` for `a_i ⊗ b_j`.
pub fn tensor_product<F: Scalar>(a: &Algebra<F>, b: &Algebra<F>) -> Result<Algebra<F>> {
    let (ma, mb) = (a.dim(), b.dim());
    let m = ma * mb;
    let mut table = Vec::with_capacity(m * m);
    for i in 0..ma {
        for j in 0..mb {
            for k in 0..ma {
                for l in 0..mb {
                    let mut row = Vec::new();
                    for (x, cx) in a.basis_product(i, k) {
                        for (y, cy) in b.basis_product(j, l) {
                            row.push((x * mb + y, cx.clone() * cy.clone()));
                        }
                    }
                    row.sort_by_key(|e| e.0);
                    table.push(row);
                }
            }
        }
    }
    let mut unit = vec![F::zero(); m];
    for (i, x) in a.unit().iter().enumerate() {
        for (j, y) in b.unit().iter().enumerate() {
            unit[i * mb + j] = x.clone() * y.clone();
        }
    }
    let names = a
        .basis_names()
        .iter()
        .flat_map(|x| b.basis_names().iter().map(move |y| format!("{x}(x){y}")))
        .collect();
    Algebra::build(names, unit, table, AlgebraKind::StructureConstants, None)
}

/// Subalgebra of a matrix algebra spanned by `mats` (which must contain
/// the identity in its span and be closed under products).
pub fn from_matrix_basis<F: Scalar>(names: Vec<String>, mats: &[Matrix<F>]) -> Result<Algebra<F>> {
    let size = mats.first().map_or(0, |m| m.rows() * m.cols());
    let vecs: Vec<Vec<F>> = mats.iter().map(|m| m.to_vec()).collect();
    let coords = SpanCoords::new(&vecs, size)
        .ok_or_else(|| Error::NotClosed("matrix basis is linearly dependent".into()))?;
    let n = mats.first().map_or(0, |m| m.rows());
    let unit = coords
        .coords(&Matrix::<F>::identity(n).to_vec())
        .ok_or_else(|| Error::NotClosed("identity is not in the span".into()))?;
    let m = mats.len();
    let mut table = Vec::with_capacity(m * m);
    for (i, a) in mats.iter().enumerate() {
        for (j, b) in mats.iter().enumerate() {
            let c = coords
                .coords(&a.mul(b).to_vec())
                .ok_or_else(|| Error::NotClosed(format!("product of basis elements {i} and {j}")))?;
            table.push(sparse(&c));
        }
    }
    Algebra::build(names, unit, table, AlgebraKind::MatrixSpan, None)
}

/// Quotient by a two-sided ideal spanned by `ideal`; basis = standard basis
/// vectors outside the pivot columns of the ideal. Also returns the
/// projection matrix.
pub fn quotient<F: Scalar>(alg: &Algebra<F>, ideal: &[Vec<F>]) -> Result<(Algebra<F>, Matrix<F>)> {
    let m = alg.dim();
    let mut red = RowReducer::new(m);
    for v in ideal {
        red.insert_dense(v);
    }
    for v in ideal {
        for i in 0..m {
            let e = alg.basis_vector(i);
            if !red.contains(&alg.mul(&e, v)) || !red.contains(&alg.mul(v, &e)) {
                return Err(Error::NotClosed("not a two-sided ideal".into()));
            }
        }
    }
    let pivots: std::collections::BTreeSet<usize> = red.pivot_cols().collect();
    let keep: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
    let project = |v: &[F]| -> Vec<F> {
        let mut w = v.to_vec();
        red.reduce_dense(&mut w);
        keep.iter().map(|&c| w[c].clone()).collect()
    };
    let q = keep.len();
    let mut table = Vec::with_capacity(q * q);
    for &i in &keep {
        for &j in &keep {
            table.push(sparse(&project(&alg.mul(&alg.basis_vector(i), &alg.basis_vector(j)))));
        }
    }
    let unit = project(alg.unit());
    let names = keep.iter().map(|&c| alg.basis_names()[c].clone()).collect();
    let proj_cols: Vec<Vec<F>> = (0..m).map(|i| project(&alg.basis_vector(i))).collect();
    let projection = Matrix::from_columns(&proj_cols, q);
    let quo = Algebra::build(names, unit, table, AlgebraKind::Quotient, None)?;
    Ok((quo, projection))
}

/// The algebra morphism `Φ_φ: α^i ⊗ λ_j ↦ φ(α)^i ⊗ λ_j` of an extension
/// algebra.
pub fn twist_automorphism<F: Scalar>(gamma: &Arc<Algebra<F>>, phi: usize) -> Result<AlgebraMorphism<F>> {
    let tag = gamma.extension_tag().ok_or(Error::NotExtensionAlgebra)?;
    let tower = &tag.tower;
    let beta = tower
        .automorphisms()
        .get(phi)
        .ok_or(Error::IndexOutOfRange { index: phi, len: tower.automorphisms().len() })?;
    let n = tower.degree();
    let ml = tag.lambda.dim();
    let m = gamma.dim();
    let mut mat = Matrix::zeros(m, m);
    let mut pw = tower.one();
    for i in 0..n {
        for j in 0..ml {
            for (a, c) in pw.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    mat.set(a * ml + j, i * ml + j, c.clone());
                }
            }
        }
        pw = tower.mul(&pw, beta);
    }
    let f = AlgebraMorphism::new(gamma.clone(), gamma.clone(), mat)?;
    if !f.verify().is_proved() {
        return Err(Error::MorphismUnverified);
    }
    Ok(f)
}

/// The embedding `Λ → Γ`, `λ_j ↦ 1 ⊗ λ_j`.
pub fn extension_embedding<F: Scalar>(gamma: &Arc<Algebra<F>>) -> Result<AlgebraMorphism<F>> {
    let tag = gamma.extension_tag().ok_or(Error::NotExtensionAlgebra)?;
    let ml = tag.lambda.dim();
    let mat = Matrix::from_fn(gamma.dim(), ml, |r, c| if r == c { F::one() } else { F::zero() });
    AlgebraMorphism::new(tag.lambda.clone(), gamma.clone(), mat)
}

/// Extends images of the elements `1 ⊗ λ_j` of one extension algebra
/// `K`-linearly to a map into another over the same tower:
/// `α^i ⊗ λ_j ↦ (α^i ⊗ 1)·image_j`.
pub fn k_linear_extension<F: Scalar>(
    source: &Arc<Algebra<F>>,
    target: &Arc<Algebra<F>>,
    images: &[Vec<F>],
) -> Result<AlgebraMorphism<F>> {
    let st = source.extension_tag().ok_or(Error::NotExtensionAlgebra)?;
    let tt = target.extension_tag().ok_or(Error::NotExtensionAlgebra)?;
    if st.tower.as_ref() != tt.tower.as_ref() {
        return Err(Error::FieldMismatch);
    }
    if images.len() != st.lambda.dim() || images.iter().any(|v| v.len() != target.dim()) {
        return Err(Error::ShapeMismatch("one target vector per basis element of the source base algebra".into()));
    }
    let n = st.degree();
    let tl = tt.lambda.dim();
    let mut cols = Vec::with_capacity(source.dim());
    for i in 0..n {
        let mut alpha_i = vec![F::zero(); target.dim()];
        let pw = st.tower.power_of_generator(i);
        for (a, c) in pw.coeffs().iter().enumerate() {
            for (b, u) in tt.lambda.unit().iter().enumerate() {
                if !c.is_zero() && !u.is_zero() {
                    alpha_i[a * tl + b] = c.clone() * u.clone();
                }
            }
        }
        for img in images {
            cols.push(target.mul(&alpha_i, img));
        }
    }
    AlgebraMorphism::new(source.clone(), target.clone(), Matrix::from_columns(&cols, target.dim()))
}

#[cfg(test)]
mod tests;
