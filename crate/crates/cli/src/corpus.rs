//! The example corpus, written from `moddeg::cases`. Each case directory
//! holds its field and algebra documents, and module documents that refer
//! to them by file name.

use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::Serialize;

use moddeg::algebra::Algebra;
use moddeg::cases;
use moddeg::descent::twist;
use moddeg::modrep::Module;
use moddeg::orders::RiedtmannWitness;
use moddeg::{Rational, Scalar, Search};

use crate::doc::{Document, Kind, Ref};
use crate::encode;

pub const CASES: [&str; 7] = ["kron1", "b2", "threearrow", "kronmin", "cbrt2", "ext2", "ext3"];

/// `crates/cli/corpus` in the source tree.
pub fn default_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

/// Relative path and contents of one corpus file.
pub type CorpusFile = (String, String);

struct CaseWriter {
    case: &'static str,
    algebra_file: &'static str,
    files: Vec<CorpusFile>,
}

impl CaseWriter {
    fn new(case: &'static str, algebra_file: &'static str) -> Self {
        CaseWriter { case, algebra_file, files: Vec::new() }
    }

    fn put<B: Serialize>(&mut self, name: &str, kind: Kind, body: B) {
        self.files.push((format!("{}/{name}", self.case), Document::new(kind, body).to_canonical()));
    }

    fn field<F: Scalar>(&mut self, name: &str, t: &moddeg::FieldTower<F>) {
        self.put(name, Kind::Field, encode::field(t));
    }

    /// An extension algebra whose tower lives in `tower_file`.
    fn extension<F: Scalar>(&mut self, name: &str, gamma: &Algebra<F>, tower_file: &str, lambda: Option<&str>) {
        let mut body = encode::algebra(gamma);
        if let crate::doc::AlgebraBody::Extension { tower, lambda: l, .. } = &mut body {
            *tower = Ref::Path(tower_file.into());
            if let Some(file) = lambda {
                *l = Ref::Path(file.into());
            }
        }
        self.put(name, Kind::Algebra, body);
    }

    fn algebra<F: Scalar>(&mut self, name: &str, alg: &Algebra<F>) {
        self.put(name, Kind::Algebra, encode::algebra(alg));
    }

    fn module_ref<F: Scalar>(&self, m: &Module<F>) -> Ref<crate::doc::ModuleBody> {
        Ref::Inline(Box::new(encode::module_with(m, Ref::Path(self.algebra_file.into()))))
    }

    fn module<F: Scalar>(&mut self, name: &str, m: &Module<F>) {
        let body = encode::module_with(m, Ref::Path(self.algebra_file.into()));
        self.put(name, Kind::Module, body);
    }

    fn sequence<F: Scalar>(&mut self, name: &str, w: &RiedtmannWitness<F>) {
        let body = encode::sequence_with(w, [self.module_ref(&w.x), self.module_ref(&w.m), self.module_ref(&w.n)]);
        self.put(name, Kind::Sequence, body);
    }

    fn family<F: Scalar>(&mut self, name: &str, members: &[&Module<F>]) {
        let body = crate::doc::FamilyBody {
            base: F::base_label(),
            members: members.iter().map(|m| self.module_ref(*m)).collect(),
        };
        self.put(name, Kind::Family, body);
    }
}

fn kron1() -> Result<Vec<CorpusFile>> {
    let c = cases::kron1()?;
    let mut w = CaseWriter::new("kron1", "Gamma.json");
    w.field("K.json", &c.gamma.extension_tag().expect("extension").tower);
    w.extension("Gamma.json", &c.gamma, "K.json", None);
    w.module("M.json", &c.m);
    w.module("N.json", &c.n);
    Ok(w.files)
}

fn b2() -> Result<Vec<CorpusFile>> {
    let c = cases::b2()?;
    let mut w = CaseWriter::new("b2", "Gamma.json");
    w.field("K.json", &cases::gaussian());
    w.algebra("Lambda.json", &c.lambda);
    w.extension("Gamma.json", &c.gamma, "K.json", Some("Lambda.json"));
    for (name, m) in [("S1", &c.s1), ("S2", &c.s2), ("S3", &c.s3), ("I1", &c.i1), ("I3", &c.i3)] {
        w.module(&format!("{name}.json"), m);
    }
    w.module("S2S3.json", &c.s2.direct_sum(&c.s3)?);
    w.module("S2S1.json", &c.s2.direct_sum(&c.s1)?);
    Ok(w.files)
}

fn threearrow() -> Result<Vec<CorpusFile>> {
    let c = cases::three_arrow()?;
    let mut w = CaseWriter::new("threearrow", "Gamma.json");
    w.field("K.json", &cases::gaussian());
    w.extension("Gamma.json", &c.gamma, "K.json", None);
    for (name, m) in [("A", &c.a), ("B", &c.b), ("C", &c.c), ("X", &c.x)] {
        w.module(&format!("{name}.json"), m);
    }
    w.module("AC.json", &c.a.direct_sum(&c.c)?);
    let xc = twist(&c.x, 1)?;
    w.family("probes.json", &[&c.x, &xc]);
    Ok(w.files)
}

fn kronmin() -> Result<Vec<CorpusFile>> {
    let c = cases::kron_min()?;
    let mut w = CaseWriter::new("kronmin", "Gamma.json");
    w.field("K.json", &cases::gaussian());
    w.extension("Gamma.json", &c.gamma, "K.json", None);
    for (name, m) in [("M", &c.m), ("N", &c.n), ("Nprime", &c.n_prime), ("X", &c.x_i)] {
        w.module(&format!("{name}.json"), m);
    }
    Ok(w.files)
}

fn cbrt2() -> Result<Vec<CorpusFile>> {
    let c = cases::cbrt2()?;
    let mut w = CaseWriter::new("cbrt2", "Gamma.json");
    w.field("K.json", &c.tower);
    let mut gamma = encode::algebra(&c.gamma);
    if let crate::doc::AlgebraBody::Extension { tower, lambda, .. } = &mut gamma {
        *tower = Ref::Path("K.json".into());
        *lambda = Ref::Inline(Box::new(crate::doc::AlgebraBody::Field {
            base: Rational::base_label(),
            tower: Ref::Path("K.json".into()),
        }));
    }
    w.put("Gamma.json", Kind::Algebra, gamma);
    w.module("Kpart.json", &c.k_part);
    w.module("L.json", &c.l);
    w.module("R.json", c.decomposition.target());
    Ok(w.files)
}

fn ext2() -> Result<Vec<CorpusFile>> {
    let c = cases::ext2::<Rational>()?;
    let mut w = CaseWriter::new("ext2", "Lambda.json");
    w.algebra("Lambda.json", &c.lambda);
    w.module("R.json", &c.regular);
    w.module("IX.json", c.ideal_x());
    w.module("IY.json", c.ideal_y());
    w.sequence("seq_x.json", &c.witness_x()?);
    w.sequence("seq_square.json", &c.witness_square()?);
    Ok(w.files)
}

fn ext3() -> Result<Vec<CorpusFile>> {
    let c = cases::ext3::<Rational>(Search::default())?;
    let mut w = CaseWriter::new("ext3", "Lambda.json");
    w.algebra("Lambda.json", &c.lambda);
    w.module("rr3.json", &c.rr3);
    w.module("lr2.json", &c.lr2);
    w.module("S.json", &c.s);
    w.module("zr3.json", &c.zr3);
    w.module("lr2_ss.json", &c.lr2_ss()?);
    for (k, step) in c.chain.steps.iter().enumerate() {
        w.sequence(&format!("step{}.json", k + 1), step);
    }
    Ok(w.files)
}

/// Every corpus file, in a fixed order.
pub fn files() -> Result<Vec<CorpusFile>> {
    let mut out = Vec::new();
    for f in [kron1, b2, threearrow, kronmin, cbrt2, ext2, ext3] {
        out.extend(f()?);
    }
    Ok(out)
}

pub fn write(dir: &Path) -> Result<()> {
    for (rel, text) in files()? {
        let path = dir.join(&rel);
        if let Some(parent) = path.parent() {
            std::fs::create_dir_all(parent)?;
        }
        std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}
