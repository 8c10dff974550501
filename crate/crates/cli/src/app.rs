//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{anyhow, bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use moddeg::algebra::tensor_extension;
use moddeg::descent::{galois_decompose, induce, mu_split, restrict, twist};
use moddeg::modrep::{end_algebra, is_division, is_local, iso_test, HomSpace, Module};
use moddeg::orders::{
    deg_obstruct, enumerate_modules, f_invariant, generated_submodule, hom_order_cmp, riedtmann_search,
    riedtmann_verify, twist_closure_experiment, Certainty, CheckStatus, HomOrderVerdict, ObstructionConfig, Overall,
};
use moddeg::{Fp, Rational, Scalar, Search, Status, Strategy, Verdict};

use crate::doc::{Document, Kind, Report};
use crate::load::{base_of, canonical_text, read_document, scalars, Loader};
use crate::{corpus, emit, encode, suite};

#[derive(Parser, Debug)]
#[command(name = "moddeg", version, about = "Exact computations with modules over finite-dimensional algebras")]
pub struct Cli {
    /// Print the report as a JSON document.
    #[arg(long, global = true)]
    pub json: bool,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 2000)]
    pub trials: u64,
    #[arg(long, global = true, default_value_t = Strategy::Auto)]
    pub strategy: Strategy,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Over {
    /// Restrict both modules to the base algebra first.
    Lambda,
    Gamma,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse a document, build the object it describes and check that it is in canonical form.
    Validate { doc: PathBuf },
    /// Dimension of Hom(M, N).
    Hom { m: PathBuf, n: PathBuf },
    /// Decide whether two modules are isomorphic.
    Iso {
        m: PathBuf,
        n: PathBuf,
        #[arg(long, value_enum, default_value_t = Over::Gamma)]
        over: Over,
    },
    /// Endomorphism ring: dimension, local, division.
    Endo { m: PathBuf },
    /// K ⊗ M over K ⊗ Λ.
    Induce {
        m: PathBuf,
        #[arg(long)]
        tower: PathBuf,
    },
    /// A module over K ⊗ Λ viewed over Λ.
    Restrict { m: PathBuf },
    /// The twist of M by an automorphism of K (index into the automorphism list).
    Twist {
        m: PathBuf,
        #[arg(long)]
        phi: usize,
    },
    /// Split K ⊗ M → M and check μ∘ν = 1.
    MuSplit { m: PathBuf },
    /// K ⊗ M as the sum of the twists of M.
    GaloisDecompose { m: PathBuf },
    /// Largest dimension of a submodule generated by i elements.
    FInv {
        m: PathBuf,
        #[arg(long = "i")]
        i: usize,
    },
    /// Submodule generated by a tuple of vectors, each written `a,b,c`.
    Submodule {
        m: PathBuf,
        #[arg(long, num_args = 1.., required = true)]
        tuple: Vec<String>,
    },
    /// Check a Riedtmann sequence document.
    RiedtmannVerify { seq: PathBuf },
    /// Search for a Riedtmann sequence with X from the family.
    RiedtmannSearch {
        m: PathBuf,
        n: PathBuf,
        #[arg(long, num_args = 1.., required = true)]
        family: Vec<PathBuf>,
    },
    /// Compare Hom-dimensions of M and N against a family of probes.
    HomCmp {
        m: PathBuf,
        n: PathBuf,
        #[arg(long, num_args = 1.., required = true)]
        family: Vec<PathBuf>,
        /// Print the table as CSV.
        #[arg(long)]
        csv: bool,
    },
    /// Necessary conditions for M to degenerate to N.
    DegObstruct {
        m: PathBuf,
        n: PathBuf,
        /// Field documents; f_i is also compared after extending scalars.
        #[arg(long, num_args = 1..)]
        ext: Vec<PathBuf>,
        #[arg(long, num_args = 1..)]
        family: Vec<PathBuf>,
        #[arg(long, default_value_t = 1)]
        f_max: usize,
    },
    /// Isomorphism classes of modules of a given dimension over a finite field.
    Enumerate {
        alg: PathBuf,
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u128,
        #[arg(long, conflicts_with = "dot")]
        csv: bool,
        /// Print the Hom-order on the classes as a Graphviz digraph.
        #[arg(long)]
        dot: bool,
    },
    /// Compare the Hom-orders over Λ and K ⊗ Λ on all small modules.
    TwistClosure {
        alg: PathBuf,
        #[arg(long)]
        tower: PathBuf,
        #[arg(long)]
        dmax: usize,
        #[arg(long, default_value_t = 10_000_000)]
        budget: u128,
    },
    /// Run the example corpus against its expected values.
    Suite {
        /// A case name or `all`.
        #[arg(long)]
        case: Option<String>,
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        csv: bool,
    },
    /// Write the example corpus into a directory.
    WriteCorpus { dir: PathBuf },
}

/// What a command prints, and its exit code.
#[derive(Debug)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

enum Payload {
    Report(Report, i32),
    /// A document or table printed as is.
    Text(String, i32),
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Proved => "proved",
        Status::Refuted => "refuted",
        Status::Unknown => "unknown",
    }
}

fn from_status(command: &str, s: Status) -> (Report, i32) {
    (Report::new(command, status_name(s)), s.exit_code())
}

fn success(command: &str) -> Report {
    Report::new(command, "success")
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Output { stdout: text, stderr: String::new(), code: 0 }
                }
                _ => Output { stdout: String::new(), stderr: text, code: 3 },
            };
        }
    };
    match execute(&cli) {
        Ok(Payload::Text(s, code)) => Output { stdout: s, stderr: String::new(), code },
        Ok(Payload::Report(r, code)) => Output { stdout: render(&r, cli.json), stderr: String::new(), code },
        Err(e) => {
            let budget = e.chain().any(|c| matches!(c.downcast_ref(), Some(moddeg::Error::BudgetExceeded { .. })));
            Output { stdout: String::new(), stderr: format!("error: {e:#}\n"), code: if budget { 2 } else { 3 } }
        }
    }
}

pub fn render(r: &Report, json: bool) -> String {
    if json {
        return Document::new(Kind::Report, r).to_canonical();
    }
    let mut out = format!("{}: {}\n", r.command, r.status);
    for l in &r.lines {
        out.push_str("  ");
        out.push_str(l);
        out.push('\n');
    }
    out
}

fn primary(cmd: &Command) -> Option<&Path> {
    Some(match cmd {
        Command::Validate { doc } => doc,
        Command::Hom { m, .. }
        | Command::Iso { m, .. }
        | Command::Endo { m }
        | Command::Induce { m, .. }
        | Command::Restrict { m }
        | Command::Twist { m, .. }
        | Command::MuSplit { m }
        | Command::GaloisDecompose { m }
        | Command::FInv { m, .. }
        | Command::Submodule { m, .. }
        | Command::RiedtmannSearch { m, .. }
        | Command::HomCmp { m, .. }
        | Command::DegObstruct { m, .. } => m,
        Command::RiedtmannVerify { seq } => seq,
        Command::Enumerate { alg, .. } | Command::TwistClosure { alg, .. } => alg,
        Command::Suite { .. } | Command::WriteCorpus { .. } => return None,
    })
}

fn execute(cli: &Cli) -> Result<Payload> {
    let search = Search::new(cli.strategy, cli.seed, cli.trials);
    match &cli.command {
        Command::Suite { case, corpus, csv } => return run_suite(case.as_deref(), corpus.clone(), *csv, search),
        Command::WriteCorpus { dir } => {
            corpus::write(dir)?;
            let mut r = success("write-corpus");
            r.line(format!("wrote {}", dir.display()));
            return Ok(Payload::Report(r, 0));
        }
        Command::Validate { doc } if read_document(doc)?.kind == Kind::Report => return validate_report(doc),
        _ => {}
    }
    let path = primary(&cli.command).expect("document command");
    match base_of(path)?.as_str() {
        "Q" => exec::<Rational>(&cli.command, search),
        "F_2" => exec::<Fp<2>>(&cli.command, search),
        "F_3" => exec::<Fp<3>>(&cli.command, search),
        "F_5" => exec::<Fp<5>>(&cli.command, search),
        "F_7" => exec::<Fp<7>>(&cli.command, search),
        other => bail!("unsupported base field {other}; use Q, F_2, F_3, F_5 or F_7"),
    }
}

fn run_suite(case: Option<&str>, dir: Option<PathBuf>, csv: bool, search: Search) -> Result<Payload> {
    let dir = suite::locate_corpus(dir);
    let lines = suite::run(case, &dir, search)?;
    let failed = lines.iter().filter(|l| !l.pass).count();
    let code = i32::from(failed > 0);
    if csv {
        return Ok(Payload::Text(emit::checks_csv(&lines), code));
    }
    let mut r = Report::new("suite", if failed == 0 { "pass" } else { "fail" });
    for l in &lines {
        let mark = if l.pass { "ok  " } else { "FAIL" };
        r.line(format!("{mark} {:<10} {}: expected {}, got {}", l.case, l.name, l.expected, l.actual));
    }
    r.line(format!("{} checks, {failed} failed", lines.len()));
    r.data = serde_json::to_value(&lines)?;
    Ok(Payload::Report(r, code))
}

fn validate_report(path: &Path) -> Result<Payload> {
    let doc = read_document(path)?;
    let body: Report = serde_json::from_value(doc.body)?;
    let mut r = success("validate");
    r.line(format!("report of `{}` with status {}", body.command, body.status));
    canonical_line(&mut r, path, &Document::new(Kind::Report, body).to_canonical())?;
    Ok(Payload::Report(r, 0))
}

fn canonical_line(r: &mut Report, path: &Path, canonical: &str) -> Result<()> {
    let text = std::fs::read_to_string(path)?;
    r.line(format!("canonical form: {}", if text == canonical { "yes" } else { "no" }));
    Ok(())
}

fn module_doc<F: Scalar>(m: &Module<F>) -> Payload {
    Payload::Text(Document::new(Kind::Module, encode::module(m)).to_canonical(), 0)
}

fn extension_of<F: Scalar>(l: &mut Loader<F>, tower: &Path, m: &Module<F>) -> Result<Arc<moddeg::algebra::Algebra<F>>> {
    Ok(Arc::new(tensor_extension(l.tower_file(tower)?, m.algebra().clone())?))
}

fn exec<F: Scalar>(cmd: &Command, search: Search) -> Result<Payload> {
    let mut l = Loader::<F>::new();
    Ok(match cmd {
        Command::Validate { doc } => {
            let kind = read_document(doc)?.kind;
            let mut r = success("validate");
            match kind {
                Kind::Field => {
                    let t = l.tower_file(doc)?;
                    r.line(format!("field of degree {} over {}, normal: {}", t.degree(), F::base_label(), t.is_normal()));
                }
                Kind::Algebra => {
                    let a = l.algebra_file(doc)?;
                    r.line(format!("{} algebra of dimension {}", a.kind().label(), a.dim()));
                }
                Kind::Module => {
                    let m = l.module_file(doc)?;
                    r.line(format!("module of dimension {} over a {}-dimensional algebra", m.dim(), m.algebra().dim()));
                }
                Kind::Morphism => {
                    let f = l.morphism_file(doc)?;
                    r.line(format!("homomorphism {} → {} of rank {}", f.source().dim(), f.target().dim(), f.rank()));
                }
                Kind::Sequence => {
                    let w = l.sequence_file(doc)?;
                    let v = riedtmann_verify(&w)?;
                    r.line(format!("sequence with dim X = {}, dim M = {}, exact: {}", w.x.dim(), w.m.dim(), v.is_proved()));
                }
                Kind::Family => {
                    let f = l.family_file(doc)?;
                    r.line(format!("family of {} modules", f.len()));
                }
                Kind::Report => unreachable!("handled before dispatch"),
            }
            canonical_line(&mut r, doc, &canonical_text(doc, kind)?)?;
            Payload::Report(r, 0)
        }
        Command::Hom { m, n } => {
            let (m, n) = (l.module_file(m)?, l.module_file(n)?);
            let h = HomSpace::new(&m, &n)?;
            let mut r = success("hom");
            r.line(format!("dim_k Hom(M, N) = {}", h.k_dim()));
            if let Some(e) = h.ext_dim() {
                r.line(format!("dim_K Hom(M, N) = {e}"));
            }
            r.data = json!({ "k_dim": h.k_dim(), "ext_dim": h.ext_dim() });
            Payload::Report(r, 0)
        }
        Command::Iso { m, n, over } => {
            let (mut m, mut n) = (l.module_file(m)?, l.module_file(n)?);
            if *over == Over::Lambda {
                m = restrict(&m)?;
                n = restrict(&n)?;
            }
            let v = iso_test(&m, &n, search)?;
            let (mut r, code) = from_status("iso", v.status());
            match &v {
                Verdict::Proved(phi) => {
                    r.line("isomorphism found");
                    r.data = json!({ "matrix": encode::matrix(phi.matrix()) });
                }
                Verdict::Refuted(cert) => {
                    r.line(cert.to_string());
                }
                Verdict::Unknown(e) => {
                    r.line(format!("{} ({} trials, seed {})", e.note, e.trials, e.seed));
                }
            }
            Payload::Report(r, code)
        }
        Command::Endo { m } => {
            let m = l.module_file(m)?;
            let (e, _) = end_algebra(&m)?;
            let (local, division) = (is_local(&e, search).status(), is_division(&e, search).status());
            let mut r = success("endo");
            r.line(format!("dim End(M) = {}", e.dim()));
            r.line(format!("local: {local}"));
            r.line(format!("division ring: {division}"));
            r.data = json!({ "dim": e.dim(), "local": status_name(local), "division": status_name(division) });
            Payload::Report(r, 0)
        }
        Command::Induce { m, tower } => {
            let m = l.module_file(m)?;
            let gamma = extension_of(&mut l, tower, &m)?;
            module_doc(&induce(&gamma, &m)?)
        }
        Command::Restrict { m } => module_doc(&restrict(&l.module_file(m)?)?),
        Command::Twist { m, phi } => module_doc(&twist(&l.module_file(m)?, *phi)?),
        Command::MuSplit { m } => {
            let m = l.module_file(m)?;
            let w = mu_split(&m)?;
            let ok = w.verify();
            let (mut r, code) = from_status("mu-split", if ok { Status::Proved } else { Status::Refuted });
            r.line(format!("μ: {} → {}, ν: {} → {}", w.mu.source().dim(), w.mu.target().dim(), w.nu.source().dim(), w.nu.target().dim()));
            r.line(format!("μ∘ν = 1: {ok}"));
            Payload::Report(r, code)
        }
        Command::GaloisDecompose { m } => {
            let m = l.module_file(m)?;
            let g = galois_decompose(&m)?;
            let ok = g.verify();
            let (mut r, code) = from_status("galois-decompose", if ok { Status::Proved } else { Status::Refuted });
            for (k, (t, i)) in g.twists.iter().zip(&g.inclusions).enumerate() {
                r.line(format!("twist {k}: dim {}, inclusion rank {}", t.dim(), i.rank()));
            }
            r.line(format!("assembled map invertible: {}", g.assembled.is_iso()));
            Payload::Report(r, code)
        }
        Command::FInv { m, i } => {
            let m = l.module_file(m)?;
            let f = f_invariant(&m, *i, search);
            let exact = f.certainty == Certainty::Exact;
            let mut r = Report::new("f-inv", if exact { "success" } else { "unknown" });
            r.line(format!("f_{} = {}{}", f.i, f.value, if exact { "" } else { " (lower bound)" }));
            r.line(format!("method: {}; {}", f.method, f.note));
            r.data = serde_json::to_value(&f)?;
            Payload::Report(r, if exact { 0 } else { 2 })
        }
        Command::Submodule { m, tuple } => {
            let m = l.module_file(m)?;
            let vectors = tuple
                .iter()
                .map(|t| scalars::<F>(&t.split(',').map(|s| s.trim().to_string()).collect::<Vec<_>>()))
                .collect::<Result<Vec<_>>>()?;
            let span = generated_submodule(&m, &vectors)?;
            let mut r = success("submodule");
            r.line(format!("dimension of the generated submodule: {}", span.span_dim));
            r.data = json!({ "span_dim": span.span_dim });
            Payload::Report(r, 0)
        }
        Command::RiedtmannVerify { seq } => {
            let w = l.sequence_file(seq)?;
            let v = riedtmann_verify(&w)?;
            let (mut r, code) = from_status("riedtmann-verify", v.status());
            match v.certificate() {
                Some(fail) => r.line(fail.to_string()),
                None => r.line(format!("M ≤deg N with dim X = {}", w.x.dim())),
            };
            Payload::Report(r, code)
        }
        Command::RiedtmannSearch { m, n, family } => {
            let (m, n) = (l.module_file(m)?, l.module_file(n)?);
            let fam = l.modules(family)?;
            let v = riedtmann_search(&m, &n, &fam, search)?;
            let (mut r, code) = from_status("riedtmann-search", v.status());
            match &v {
                Verdict::Proved(w) => {
                    r.line(format!("witness with dim X = {}", w.x.dim()));
                    r.data = serde_json::to_value(Document::new(Kind::Sequence, encode::sequence(w)))?;
                }
                Verdict::Unknown(e) => {
                    r.line(format!("{} ({} trials, seed {})", e.note, e.trials, e.seed));
                }
                Verdict::Refuted(never) => match *never {},
            }
            Payload::Report(r, code)
        }
        Command::HomCmp { m, n, family, csv } => {
            let (m, n) = (l.module_file(m)?, l.module_file(n)?);
            let fam = l.modules(family)?;
            let rep = hom_order_cmp(&m, &n, &fam)?;
            let code = i32::from(rep.verdict != HomOrderVerdict::Consistent);
            if *csv {
                return Ok(Payload::Text(emit::hom_rows_csv(&rep.rows), code));
            }
            let status = if code == 0 { "consistent" } else { "violated" };
            let mut r = Report::new("hom-cmp", status);
            for row in &rep.rows {
                r.line(format!(
                    "probe {}: [X,M] = {}, [X,N] = {}, [M,X] = {}, [N,X] = {}",
                    row.probe, row.into_m, row.into_n, row.from_m, row.from_n
                ));
            }
            r.data = serde_json::to_value(&rep)?;
            Payload::Report(r, code)
        }
        Command::DegObstruct { m, n, ext, family, f_max } => {
            let (m, n) = (l.module_file(m)?, l.module_file(n)?);
            let extensions = ext.iter().map(|t| extension_of(&mut l, t, &m)).collect::<Result<Vec<_>>>()?;
            let config =
                ObstructionConfig { family: l.modules(family)?, f_range: 1..=*f_max, extensions, search };
            let rep = deg_obstruct(&m, &n, &config)?;
            let (status, code) = match &rep.overall {
                Overall::Consistent => ("consistent", 0),
                Overall::Refuted { .. } => ("refuted", 1),
            };
            let mut r = Report::new("deg-obstruct", status);
            for c in &rep.checks {
                let s = match c.status {
                    CheckStatus::Pass => "pass",
                    CheckStatus::Violated => "violated",
                    CheckStatus::Skipped => "skipped",
                };
                r.line(format!("{}: {s} ({})", c.name, c.data));
            }
            if let Overall::Refuted { check, data } = &rep.overall {
                r.line(format!("certificate: {check}, {data}"));
            }
            r.data = serde_json::to_value(&rep)?;
            Payload::Report(r, code)
        }
        Command::Enumerate { alg, dim, budget, csv, dot } => {
            let alg = l.algebra_file(alg)?;
            let space = enumerate_modules(&alg, *dim, *budget)?;
            if *csv {
                let rows: Vec<Vec<String>> = space
                    .classes
                    .iter()
                    .enumerate()
                    .map(|(k, c)| vec![k.to_string(), c.size.to_string(), c.aut_order.to_string()])
                    .collect();
                return Ok(Payload::Text(emit::csv(&["class", "size", "aut_order"], &rows), 0));
            }
            if *dot {
                let reps = space.representatives();
                let mut le = Vec::new();
                for a in &reps {
                    let mut row = Vec::new();
                    for b in &reps {
                        row.push(hom_order_cmp(a, b, &reps)?.verdict == HomOrderVerdict::Consistent);
                    }
                    le.push(row);
                }
                let labels: Vec<String> = (0..reps.len()).map(|k| format!("M{k}")).collect();
                return Ok(Payload::Text(emit::hasse_dot("hom_order", &labels, &le), 0));
            }
            let mut r = success("enumerate");
            r.line(format!("{} structures in {} classes", space.total, space.classes.len()));
            for (k, c) in space.classes.iter().enumerate() {
                r.line(format!("class {k}: size {}, |Aut| = {}", c.size, c.aut_order));
            }
            r.data = json!({
                "total": space.total.to_string(),
                "classes": space.classes.iter().map(|c| json!({
                    "size": c.size.to_string(),
                    "aut_order": c.aut_order.to_string(),
                    "representative": encode::module(&c.representative),
                })).collect::<Vec<_>>(),
            });
            Payload::Report(r, 0)
        }
        Command::TwistClosure { alg, tower, dmax, budget } => {
            let lambda = l.algebra_file(alg)?;
            let gamma = Arc::new(tensor_extension(l.tower_file(tower)?, lambda)?);
            let rep = twist_closure_experiment(&gamma, *dmax, *budget)?;
            let ok = rep.consistent();
            let mut r = Report::new("twist-closure", if ok { "consistent" } else { "violated" });
            r.line(format!("classes over K ⊗ Λ by dimension: {:?}", rep.gamma_classes));
            r.line(format!("classes over Λ by dimension: {:?}", rep.lambda_classes));
            r.line(format!("twist-stable: {}", rep.twist_stable));
            r.line(format!("restriction reflects isomorphism: {}", rep.restriction_reflects_iso));
            r.line(format!("pairs compared: {}, disagreements: {}", rep.pairs, rep.disagreements.len()));
            r.line(format!("[X,M] over Λ = n·[X,M] over K ⊗ Λ: {}", rep.restricted_hom_identity));
            r.line(format!("[K⊗X,K⊗M] = n·[X,M]: {}", rep.induced_hom_identity));
            r.data = serde_json::to_value(&rep)?;
            Payload::Report(r, i32::from(!ok))
        }
        Command::Suite { .. } | Command::WriteCorpus { .. } => return Err(anyhow!("not a document command")),
    })
}
