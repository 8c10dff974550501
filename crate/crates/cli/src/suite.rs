//! Runs the corpus cases against their expected values.

use std::fmt::Display;
use std::path::{Path, PathBuf};

use anyhow::{bail, ensure, Context, Result};
use serde::{Deserialize, Serialize};

use moddeg::cases;
use moddeg::descent::{restrict, twist};
use moddeg::modrep::{end_algebra, is_local, iso_test, HomSpace, IsoCertificate, Module};
use moddeg::orders::{
    deg_obstruct, f_invariant, hom_generic_rank, minimality_check, riedtmann_search, riedtmann_verify,
    ObstructionConfig, ObstructionReport, Overall,
};
use moddeg::{Fp, Rational, Search, Status, Strategy};

use crate::corpus::CASES;
use crate::load::Loader;

type Q = Rational;

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    /// Asserted by the worked example.
    Example,
    /// Computed independently of the example's text.
    Derived,
    /// Holds by construction.
    Definition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckLine {
    pub case: String,
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub basis: Basis,
    pub pass: bool,
}

struct Checks {
    case: &'static str,
    lines: Vec<CheckLine>,
}

impl Checks {
    fn new(case: &'static str) -> Self {
        Checks { case, lines: Vec::new() }
    }

    fn add(&mut self, name: &str, expected: impl Display, actual: impl Display, basis: Basis) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let pass = expected == actual;
        self.lines.push(CheckLine { case: self.case.into(), name: name.into(), expected, actual, basis, pass });
    }
}

fn iso_status(a: &Module<Q>, b: &Module<Q>, search: Search) -> Result<Status> {
    Ok(iso_test(a, b, search)?.status())
}

fn ext_dim(a: &Module<Q>, b: &Module<Q>) -> Result<usize> {
    HomSpace::new(a, b)?.ext_dim().context("not an extension algebra")
}

fn overall(r: &ObstructionReport) -> String {
    match &r.overall {
        Overall::Consistent => "consistent".into(),
        Overall::Refuted { check, .. } => format!("refuted by {check}"),
    }
}

fn search_status(m: &Module<Q>, n: &Module<Q>, family: &[Module<Q>], search: Search) -> Result<Status> {
    let found = riedtmann_search(m, n, family, search)?;
    Ok(match found.witness() {
        Some(w) if riedtmann_verify(w)?.is_proved() => Status::Proved,
        Some(_) => Status::Refuted,
        None => Status::Unknown,
    })
}

fn kron1(dir: &Path, search: Search) -> Result<Vec<CheckLine>> {
    let mut l = Loader::<Q>::new();
    let (m, n) = (l.module_file(&dir.join("M.json"))?, l.module_file(&dir.join("N.json"))?);
    let mut c = Checks::new("kron1");
    c.add("M ≅ N over Λ", Status::Proved, iso_status(&restrict(&m)?, &restrict(&n)?, search)?, Basis::Example);
    let v = iso_test(&m, &n, search)?;
    c.add("M ≅ N over Γ", Status::Refuted, v.status(), Basis::Example);
    let cert = match v.certificate() {
        Some(cert @ IsoCertificate::HomProbe { .. }) if cert.verify(&m, &n) => "hom_probe".to_string(),
        Some(other) => format!("{other}"),
        None => "none".into(),
    };
    c.add("Γ certificate", "hom_probe", cert, Basis::Derived);
    c.add("M^φ ≅ N over Γ", Status::Proved, iso_status(&twist(&m, 1)?, &n, search)?, Basis::Derived);
    Ok(c.lines)
}

fn b2(dir: &Path, search: Search) -> Result<Vec<CheckLine>> {
    let mut l = Loader::<Q>::new();
    let mut get = |name: &str| l.module_file(&dir.join(format!("{name}.json")));
    let (s1, s2, s3, i1, i3) = (get("S1")?, get("S2")?, get("S3")?, get("I1")?, get("I3")?);
    let r = |m: &Module<Q>| restrict(m);
    let mut c = Checks::new("b2");
    c.add("S1 ≅ S3 over Λ", Status::Proved, iso_status(&r(&s1)?, &r(&s3)?, search)?, Basis::Example);
    c.add("I1 ≅ I3 over Λ", Status::Proved, iso_status(&r(&i1)?, &r(&i3)?, search)?, Basis::Example);
    c.add("S1 ≅ S3 over Γ", Status::Refuted, iso_status(&s1, &s3, search)?, Basis::Derived);
    for (label, m, n, x) in [("I1", &i1, s2.direct_sum(&s3)?, &s3), ("I3", &i3, s2.direct_sum(&s1)?, &s1)] {
        let other = if label == "I1" { "S2⊕S3" } else { "S2⊕S1" };
        let found = search_status(&r(m)?, &r(&n)?, &[r(x)?], search)?;
        c.add(&format!("{label} ≤deg {other} over Λ"), Status::Proved, found, Basis::Example);
        let report = deg_obstruct(m, &n, &ObstructionConfig { search, ..Default::default() })?;
        c.add(&format!("{label} ≤deg {other} over Γ"), "refuted by hom_order", overall(&report), Basis::Example);
    }
    Ok(c.lines)
}

fn threearrow(dir: &Path, search: Search) -> Result<Vec<CheckLine>> {
    let mut l = Loader::<Q>::new();
    let mut get = |name: &str| l.module_file(&dir.join(format!("{name}.json")));
    let (a, b, cc, x, ac) = (get("A")?, get("B")?, get("C")?, get("X")?, get("AC")?);
    let (bphi, xphi) = (twist(&b, 1)?, twist(&x, 1)?);
    let mut c = Checks::new("threearrow");
    c.add("[X, A⊕C]", 1, ext_dim(&x, &ac)?, Basis::Example);
    c.add("[X, B]", 2, ext_dim(&x, &b)?, Basis::Example);
    c.add("[X, B^φ]", 0, ext_dim(&x, &bphi)?, Basis::Derived);
    c.add("[X^φ, B^φ]", 2, ext_dim(&xphi, &bphi)?, Basis::Derived);
    c.add("[X^φ, A⊕C]", 1, ext_dim(&xphi, &ac)?, Basis::Derived);
    c.add("A^φ ≅ A", Status::Proved, iso_status(&twist(&a, 1)?, &a, search)?, Basis::Example);
    c.add("C^φ ≅ C", Status::Proved, iso_status(&twist(&cc, 1)?, &cc, search)?, Basis::Example);
    let found = search_status(&restrict(&b)?, &restrict(&ac)?, &[restrict(&a)?], search)?;
    c.add("B ≤deg A⊕C over Λ", Status::Proved, found, Basis::Example);
    let config = ObstructionConfig { family: vec![x.clone(), xphi], search, ..Default::default() };
    c.add("B ≤deg A⊕C over Γ", "refuted by hom_order", overall(&deg_obstruct(&b, &ac, &config)?), Basis::Example);
    c.add("B^φ ≤deg A⊕C over Γ", "refuted by hom_order", overall(&deg_obstruct(&bphi, &ac, &config)?), Basis::Example);
    Ok(c.lines)
}

fn kronmin(dir: &Path, search: Search) -> Result<Vec<CheckLine>> {
    let mut l = Loader::<Q>::new();
    let mut get = |name: &str| l.module_file(&dir.join(format!("{name}.json")));
    let (m, n, np, x) = (get("M")?, get("N")?, get("Nprime")?, get("X")?);
    let mut c = Checks::new("kronmin");
    c.add("M ≤deg N over Γ (X = X_i)", Status::Proved, search_status(&m, &n, &[x.clone()], search)?, Basis::Example);
    c.add("N ≅ N′ over Λ", Status::Proved, iso_status(&restrict(&n)?, &restrict(&np)?, search)?, Basis::Example);
    c.add("N ≅ N′ over Γ", Status::Refuted, iso_status(&n, &np, search)?, Basis::Example);
    let (end, _) = end_algebra(&x)?;
    c.add("dim End(X_i)", 2, end.dim(), Basis::Derived);
    for (label, t) in [("M", &m), ("N", &n)] {
        let h = HomSpace::new(&x, t)?.k_dim();
        c.add(&format!("[X_i, X_i] divides [X_i, {label}]"), true, h % end.dim() == 0, Basis::Derived);
    }
    let report = minimality_check(&np, &[n.clone()], search)?;
    c.add("End(N′) division", Status::Refuted, report.end_division, Basis::Derived);
    Ok(c.lines)
}

fn cbrt2(dir: &Path, search: Search) -> Result<Vec<CheckLine>> {
    let mut l = Loader::<Q>::new();
    let mut get = |name: &str| l.module_file(&dir.join(format!("{name}.json")));
    let (k, lm, reg) = (get("Kpart")?, get("L")?, get("R")?);
    let mut c = Checks::new("cbrt2");
    let sum = k.direct_sum(&lm)?;
    c.add("K⊗K ≅ K ⊕ L", Status::Proved, iso_status(&sum, &reg, search)?, Basis::Example);
    c.add("dim_ℚ L", 6, lm.dim(), Basis::Example);
    let (end, _) = end_algebra(&lm)?;
    c.add("End(L) local", Status::Proved, is_local(&end, search).status(), Basis::Example);
    let k2 = k.power(2);
    c.add("L ≅ K² over K⊗K", Status::Refuted, iso_status(&lm, &k2, search)?, Basis::Example);
    c.add("L ≅ K² over K", Status::Proved, iso_status(&restrict(&lm)?, &restrict(&k2)?, search)?, Basis::Example);
    Ok(c.lines)
}

fn ext2(dir: &Path, search: Search) -> Result<Vec<CheckLine>> {
    let mut l = Loader::<Q>::new();
    let mut c = Checks::new("ext2");
    for (file, label) in [("seq_x.json", "Λ ≤deg (X)²"), ("seq_square.json", "Λ² ≤deg ((X)⊕(Y))²")] {
        let w = l.sequence_file(&dir.join(file))?;
        c.add(label, Status::Proved, riedtmann_verify(&w)?.status(), Basis::Example);
    }
    let (ix, iy) = (l.module_file(&dir.join("IX.json"))?, l.module_file(&dir.join("IY.json"))?);
    c.add("(X) ≅ (Y)", Status::Refuted, iso_status(&ix, &iy, search)?, Basis::Example);
    Ok(c.lines)
}

fn ext3(dir: &Path, search: Search) -> Result<Vec<CheckLine>> {
    let mut l = Loader::<Q>::new();
    let mut get = |name: &str| l.module_file(&dir.join(format!("{name}.json")));
    let (rr3, lr2, lr2_ss) = (get("rr3")?, get("lr2")?, get("lr2_ss")?);
    let mut c = Checks::new("ext3");
    let built = cases::ext3::<Q>(search)?;
    c.add("rank of right multiplication", 8, built.pair_map.rank(), Basis::Example);
    let hom = HomSpace::new(&lr2, &rr3)?;
    c.add("generic rank Hom(Λ/r², r/r³)", 3, hom_generic_rank(&hom), Basis::Derived);
    let f2 = cases::ext3::<Fp<2>>(search)?;
    let hom2 = HomSpace::new(&f2.lr2, &f2.rr3)?;
    let mut best = 0;
    for bits in 0u32..1 << hom2.k_dim() {
        let coeffs: Vec<Fp<2>> = (0..hom2.k_dim()).map(|b| Fp::new((bits >> b & 1) as u64)).collect();
        best = best.max(hom2.combination(&coeffs).rank());
    }
    c.add("max rank over F_2", 3, best, Basis::Derived);
    for k in 1..=4 {
        let w = l.sequence_file(&dir.join(format!("step{k}.json")))?;
        c.add(&format!("sequence {k}"), Status::Proved, riedtmann_verify(&w)?.status(), Basis::Example);
    }
    c.add("≤vdeg chain with (Z)/r³", true, built.chain.verify(search)?.holds, Basis::Example);
    let sym = search.with_strategy(Strategy::Symbolic);
    c.add("f_1(r/r³)", 3, f_invariant(&rr3, 1, sym).value, Basis::Example);
    c.add("f_1(Λ/r² ⊕ S²)", 4, f_invariant(&lr2_ss, 1, sym).value, Basis::Example);
    let report = deg_obstruct(&rr3, &lr2_ss, &ObstructionConfig { search, ..Default::default() })?;
    c.add("r/r³ ≤deg Λ/r² ⊕ S²", "refuted by f_1", overall(&report), Basis::Example);
    Ok(c.lines)
}

pub fn run_case(name: &str, corpus: &Path, search: Search) -> Result<Vec<CheckLine>> {
    let dir = corpus.join(name);
    ensure!(dir.is_dir(), "corpus case {name} missing under {}", corpus.display());
    match name {
        "kron1" => kron1(&dir, search),
        "b2" => b2(&dir, search),
        "threearrow" => threearrow(&dir, search),
        "kronmin" => kronmin(&dir, search),
        "cbrt2" => cbrt2(&dir, search),
        "ext2" => ext2(&dir, search),
        "ext3" => ext3(&dir, search),
        _ => bail!("unknown case {name}; known: {}", CASES.join(", ")),
    }
}

/// Runs one case or, for `None` or `all`, every case in order.
pub fn run(selector: Option<&str>, corpus: &Path, search: Search) -> Result<Vec<CheckLine>> {
    ensure!(corpus.is_dir(), "corpus directory {} not found", corpus.display());
    let names: Vec<&str> = match selector {
        None | Some("all") => CASES.to_vec(),
        Some(one) => vec![one],
    };
    let mut out = Vec::new();
    for name in names {
        out.extend(run_case(name, corpus, search)?);
    }
    Ok(out)
}

/// `corpus` in the working directory if present, else the source tree copy.
pub fn locate_corpus(explicit: Option<PathBuf>) -> PathBuf {
    explicit.unwrap_or_else(|| {
        let local = PathBuf::from("corpus");
        if local.is_dir() {
            local
        } else {
            crate::corpus::default_dir()
        }
    })
}
