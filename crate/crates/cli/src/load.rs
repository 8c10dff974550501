//! Turning documents into library objects.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{anyhow, bail, ensure, Context, Result};
use serde::de::DeserializeOwned;
use serde_json::Value;

use moddeg::algebra::{
    exterior_algebra, field_algebra, from_matrix_basis, path_algebra, tensor_extension, truncated_polynomial,
    Algebra, AlgebraKind, Quiver,
};
use moddeg::modrep::{Module, ModuleMorphism};
use moddeg::orders::RiedtmannWitness;
use moddeg::{FieldElem, FieldTower, Matrix, Scalar};

use crate::doc::{
    AlgebraBody, Document, FamilyBody, FieldBody, Kind, MatrixDoc, ModuleBody, ModuleForm, MorphismBody, Ref, Report,
    SequenceBody, SCHEMA_VERSION,
};

pub fn read_document(path: &Path) -> Result<Document<Value>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let doc: Document<Value> =
        serde_json::from_str(&text).with_context(|| format!("{} is not a document", path.display()))?;
    ensure!(
        doc.schema_version == SCHEMA_VERSION,
        "{}: schema_version {} is not supported",
        path.display(),
        doc.schema_version
    );
    Ok(doc)
}

fn typed_body<T: DeserializeOwned>(path: &Path, kind: Kind) -> Result<T> {
    let doc = read_document(path)?;
    ensure!(doc.kind == kind, "{}: expected a {kind} document, found {}", path.display(), doc.kind);
    serde_json::from_value(doc.body).with_context(|| format!("{}: malformed {kind} body", path.display()))
}

/// The document at `path` re-serialized in canonical form.
pub fn canonical_text(path: &Path, kind: Kind) -> Result<String> {
    let body = read_document(path)?.body;
    Ok(match kind {
        Kind::Field => Document::new(kind, serde_json::from_value::<FieldBody>(body)?).to_canonical(),
        Kind::Algebra => Document::new(kind, serde_json::from_value::<AlgebraBody>(body)?).to_canonical(),
        Kind::Module => Document::new(kind, serde_json::from_value::<ModuleBody>(body)?).to_canonical(),
        Kind::Morphism => Document::new(kind, serde_json::from_value::<MorphismBody>(body)?).to_canonical(),
        Kind::Sequence => Document::new(kind, serde_json::from_value::<SequenceBody>(body)?).to_canonical(),
        Kind::Family => Document::new(kind, serde_json::from_value::<FamilyBody>(body)?).to_canonical(),
        Kind::Report => Document::new(kind, serde_json::from_value::<Report>(body)?).to_canonical(),
    })
}

/// The `base` of a document, used to pick the scalar type.
pub fn base_of(path: &Path) -> Result<String> {
    let doc = read_document(path)?;
    doc.body
        .get("base")
        .and_then(Value::as_str)
        .map(String::from)
        .ok_or_else(|| anyhow!("{}: body has no base field", path.display()))
}

fn dir_of(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

fn key(path: &Path) -> PathBuf {
    std::fs::canonicalize(path).unwrap_or_else(|_| path.to_path_buf())
}

fn check_base<F: Scalar>(base: &str) -> Result<()> {
    ensure!(base == F::base_label(), "base {base} where {} was expected", F::base_label());
    Ok(())
}

pub fn scalar<F: Scalar>(s: &str) -> Result<F> {
    F::parse_canonical(s).map_err(|e| anyhow!("bad scalar `{s}`: {e}"))
}

pub fn scalars<F: Scalar>(v: &[String]) -> Result<Vec<F>> {
    v.iter().map(|s| scalar(s)).collect()
}

pub fn matrix<F: Scalar>(doc: &MatrixDoc, rows: usize, cols: usize) -> Result<Matrix<F>> {
    ensure!(doc.len() == rows, "matrix has {} rows, expected {rows}", doc.len());
    let parsed = doc
        .iter()
        .map(|r| {
            ensure!(r.len() == cols, "matrix row has {} entries, expected {cols}", r.len());
            scalars(r)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(parsed, cols)?)
}

/// Loads documents and caches every file it reads, so modules that name the
/// same algebra file share one algebra.
pub struct Loader<F: Scalar> {
    towers: HashMap<PathBuf, Arc<FieldTower<F>>>,
    algebras: HashMap<PathBuf, Arc<Algebra<F>>>,
    modules: HashMap<PathBuf, Module<F>>,
}

impl<F: Scalar> Default for Loader<F> {
    fn default() -> Self {
        Loader { towers: HashMap::new(), algebras: HashMap::new(), modules: HashMap::new() }
    }
}

impl<F: Scalar> Loader<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn tower_file(&mut self, path: &Path) -> Result<Arc<FieldTower<F>>> {
        if let Some(t) = self.towers.get(&key(path)) {
            return Ok(t.clone());
        }
        let body: FieldBody = typed_body(path, Kind::Field)?;
        let t = self.tower_body(&body).with_context(|| format!("in {}", path.display()))?;
        self.towers.insert(key(path), t.clone());
        Ok(t)
    }

    pub fn tower_body(&mut self, b: &FieldBody) -> Result<Arc<FieldTower<F>>> {
        check_base::<F>(&b.base)?;
        let images = b.automorphisms.iter().map(|a| scalars(a)).collect::<Result<Vec<_>>>()?;
        Ok(Arc::new(FieldTower::new(scalars(&b.min_poly)?, b.generator.clone(), images)?))
    }

    fn tower(&mut self, r: &Ref<FieldBody>, dir: &Path) -> Result<Arc<FieldTower<F>>> {
        match r {
            Ref::Path(p) => self.tower_file(&dir.join(p)),
            Ref::Inline(b) => self.tower_body(b),
        }
    }

    pub fn algebra_file(&mut self, path: &Path) -> Result<Arc<Algebra<F>>> {
        if let Some(a) = self.algebras.get(&key(path)) {
            return Ok(a.clone());
        }
        let body: AlgebraBody = typed_body(path, Kind::Algebra)?;
        let a = self.algebra_body(&body, &dir_of(path)).with_context(|| format!("in {}", path.display()))?;
        self.algebras.insert(key(path), a.clone());
        Ok(a)
    }

    fn algebra(&mut self, r: &Ref<AlgebraBody>, dir: &Path) -> Result<Arc<Algebra<F>>> {
        match r {
            Ref::Path(p) => self.algebra_file(&dir.join(p)),
            Ref::Inline(b) => self.algebra_body(b, dir),
        }
    }

    pub fn algebra_body(&mut self, b: &AlgebraBody, dir: &Path) -> Result<Arc<Algebra<F>>> {
        check_base::<F>(b.base())?;
        let alg = match b {
            AlgebraBody::Path { vertices, arrows, .. } => {
                let arrows = arrows.iter().map(|a| (a.source, a.target, a.name.clone())).collect();
                path_algebra(&Quiver::new(*vertices, arrows)?)?
            }
            AlgebraBody::Exterior { vars, .. } => exterior_algebra(*vars)?,
            AlgebraBody::Truncated { n, .. } => truncated_polynomial(*n)?,
            AlgebraBody::Field { tower, .. } => field_algebra(self.tower(tower, dir)?)?,
            AlgebraBody::StructureConstants { names, unit, table, .. } => {
                let table = table
                    .iter()
                    .map(|row| row.iter().map(|c| scalars(c)).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                let alg = Algebra::from_structure_constants(table, scalars(unit)?)?;
                match names {
                    Some(n) => alg.with_names(n.clone())?,
                    None => alg,
                }
            }
            AlgebraBody::MatrixBasis { names, matrices, .. } => {
                let size = matrices.first().map_or(0, Vec::len);
                let mats = matrices.iter().map(|m| matrix(m, size, size)).collect::<Result<Vec<_>>>()?;
                from_matrix_basis(names.clone(), &mats)?
            }
            AlgebraBody::Extension { tower, lambda, .. } => {
                let t = self.tower(tower, dir)?;
                tensor_extension(t, self.algebra(lambda, dir)?)?
            }
        };
        Ok(Arc::new(alg))
    }

    pub fn module_file(&mut self, path: &Path) -> Result<Module<F>> {
        if let Some(m) = self.modules.get(&key(path)) {
            return Ok(m.clone());
        }
        let body: ModuleBody = typed_body(path, Kind::Module)?;
        let m = self.module_body(&body, &dir_of(path)).with_context(|| format!("in {}", path.display()))?;
        self.modules.insert(key(path), m.clone());
        Ok(m)
    }

    fn module(&mut self, r: &Ref<ModuleBody>, dir: &Path) -> Result<Module<F>> {
        match r {
            Ref::Path(p) => self.module_file(&dir.join(p)),
            Ref::Inline(b) => self.module_body(b, dir),
        }
    }

    pub fn module_body(&mut self, b: &ModuleBody, dir: &Path) -> Result<Module<F>> {
        check_base::<F>(&b.base)?;
        let alg = self.algebra(&b.algebra, dir)?;
        let m = match &b.form {
            ModuleForm::Generators { dim, generators } => {
                let gens = generators.iter().map(|g| matrix(g, *dim, *dim)).collect::<Result<Vec<_>>>()?;
                Module::from_generator_actions(alg, *dim, &gens)?
            }
            ModuleForm::Action { dim, action } => {
                let mats = action.iter().map(|g| matrix(g, *dim, *dim)).collect::<Result<Vec<_>>>()?;
                if *dim == 0 {
                    ensure!(mats.len() == alg.dim(), "one action matrix per basis element");
                    Module::zero(alg)
                } else {
                    Module::new(alg, mats)?
                }
            }
            ModuleForm::Representation { dims, arrows } => {
                let AlgebraKind::Path(q) = alg.kind() else { bail!("a representation needs a path algebra") };
                ensure!(dims.len() == q.vertices(), "one dimension per vertex");
                ensure!(arrows.len() == q.arrows().len(), "one matrix per arrow");
                let mats = q
                    .arrows()
                    .iter()
                    .zip(arrows)
                    .map(|(a, m)| matrix(m, dims[a.target], dims[a.source]))
                    .collect::<Result<Vec<_>>>()?;
                Module::representation(alg.clone(), dims, &mats)?
            }
            ModuleForm::KRepresentation { dims, arrows } => {
                let tag = alg.extension_tag().ok_or_else(|| anyhow!("a K-representation needs an extension algebra"))?;
                let AlgebraKind::Path(q) = tag.lambda.kind() else { bail!("a K-representation needs K ⊗ kQ") };
                ensure!(dims.len() == q.vertices(), "one dimension per vertex");
                ensure!(arrows.len() == q.arrows().len(), "one matrix per arrow");
                let tower = tag.tower.clone();
                let mut mats = Vec::new();
                for (a, m) in q.arrows().iter().zip(arrows) {
                    let (rows, cols) = (dims[a.target], dims[a.source]);
                    ensure!(m.len() == rows && m.iter().all(|r| r.len() == cols), "arrow {} needs {rows}x{cols}", a.label);
                    let entries: Vec<FieldElem<F>> = m
                        .iter()
                        .flatten()
                        .map(|c| Ok(tower.elem(scalars(c)?)?))
                        .collect::<Result<_>>()?;
                    mats.push(entries);
                }
                Module::k_representation(alg.clone(), dims, &mats)?
            }
        };
        Ok(m)
    }

    pub fn morphism_file(&mut self, path: &Path) -> Result<ModuleMorphism<F>> {
        let b: MorphismBody = typed_body(path, Kind::Morphism)?;
        check_base::<F>(&b.base)?;
        let dir = dir_of(path);
        let (s, t) = (self.module(&b.source, &dir)?, self.module(&b.target, &dir)?);
        let mat = matrix(&b.matrix, t.dim(), s.dim())?;
        Ok(ModuleMorphism::new(s, t, mat)?)
    }

    pub fn sequence_file(&mut self, path: &Path) -> Result<RiedtmannWitness<F>> {
        let b: SequenceBody = typed_body(path, Kind::Sequence)?;
        check_base::<F>(&b.base)?;
        let dir = dir_of(path);
        let (x, m, n) = (self.module(&b.x, &dir)?, self.module(&b.m, &dir)?, self.module(&b.n, &dir)?);
        let xm = x.dim() + m.dim();
        let g = matrix(&b.g, xm, x.dim())?;
        let h = matrix(&b.h, n.dim(), xm)?;
        Ok(RiedtmannWitness::from_matrices(x, m, n, g, h)?)
    }

    pub fn family_file(&mut self, path: &Path) -> Result<Vec<Module<F>>> {
        let b: FamilyBody = typed_body(path, Kind::Family)?;
        check_base::<F>(&b.base)?;
        let dir = dir_of(path);
        b.members.iter().map(|r| self.module(r, &dir)).collect()
    }

    /// Module documents contribute themselves, family documents their members.
    pub fn modules(&mut self, paths: &[PathBuf]) -> Result<Vec<Module<F>>> {
        let mut out = Vec::new();
        for p in paths {
            match read_document(p)?.kind {
                Kind::Module => out.push(self.module_file(p)?),
                Kind::Family => out.extend(self.family_file(p)?),
                k => bail!("{}: expected a module or family document, found {k}", p.display()),
            }
        }
        Ok(out)
    }
}
