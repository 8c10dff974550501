use std::path::{Path, PathBuf};
use std::process::Command;

use moddeg_cli::doc::{Document, Kind, Report};
use moddeg_cli::load::{canonical_text, read_document};

struct Run {
    stdout: String,
    stderr: String,
    code: i32,
}

fn corpus(rel: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus").join(rel).to_string_lossy().into_owned()
}

fn moddeg(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_moddeg")).args(args).output().unwrap();
    Run {
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
        code: out.status.code().unwrap(),
    }
}

#[test]
fn exit_codes_follow_the_verdict() {
    let (m, n) = (corpus("kron1/M.json"), corpus("kron1/N.json"));
    let r = moddeg(&["iso", &m, &n]);
    assert_eq!((r.code, r.stdout.lines().next()), (1, Some("iso: refuted")));
    assert_eq!(moddeg(&["iso", "--over", "lambda", &m, &n]).code, 0);
    assert_eq!(moddeg(&["hom", &m, &n]).code, 0);

    let probes = corpus("threearrow/probes.json");
    let r = moddeg(&["hom-cmp", &corpus("threearrow/AC.json"), &corpus("threearrow/B.json"), "--family", &probes]);
    assert_eq!((r.code, r.stdout.lines().next()), (1, Some("hom-cmp: violated")));
    let r = moddeg(&["hom-cmp", &corpus("threearrow/X.json"), &corpus("threearrow/AC.json"), "--family", &probes]);
    assert_eq!(r.code, 0);

    let r = moddeg(&["riedtmann-search", &corpus("threearrow/AC.json"), &corpus("threearrow/B.json"), "--family", &corpus("threearrow/X.json")]);
    assert_eq!((r.code, r.stdout.lines().next()), (2, Some("riedtmann-search: unknown")));
    let r = moddeg(&["riedtmann-search", &corpus("kronmin/M.json"), &corpus("kronmin/N.json"), "--family", &corpus("kronmin/X.json")]);
    assert_eq!(r.code, 0);

    assert_eq!(moddeg(&["riedtmann-verify", &corpus("ext2/seq_square.json")]).code, 0);
    let r = moddeg(&["deg-obstruct", &corpus("ext3/rr3.json"), &corpus("ext3/lr2.json")]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("certificate: dimension"));
}

#[test]
fn input_errors_exit_3() {
    let r = moddeg(&["hom", "missing.json", "missing.json"]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.starts_with("error:"));
    assert_eq!(moddeg(&["frobnicate"]).code, 3);
    assert_eq!(moddeg(&["twist", &corpus("kron1/M.json")]).code, 3);
    assert_eq!(moddeg(&["twist", "--phi", "7", &corpus("kron1/M.json")]).code, 3);
    assert_eq!(moddeg(&["submodule", &corpus("ext3/rr3.json"), "--tuple", "1,0"]).code, 3);
    assert_eq!(moddeg(&["enumerate", &corpus("ext2/Lambda.json"), "--dim", "2"]).code, 3);
    assert_eq!(moddeg(&["--help"]).code, 0);
    assert_eq!(moddeg(&["hom", "--help"]).code, 0);
    assert_eq!(moddeg(&["--version"]).code, 0);
}

#[test]
fn module_outputs_are_valid_documents() {
    let dir = tempfile::tempdir().unwrap();
    let k = corpus("kron1/K.json");
    let m = corpus("kron1/M.json");
    let restricted = dir.path().join("restricted.json");
    let restricted = restricted.to_str().unwrap();
    let cases: [(&str, Vec<&str>); 3] = [
        ("restricted.json", vec!["restrict", &m]),
        ("twisted.json", vec!["twist", "--phi", "1", &m]),
        ("induced.json", vec!["induce", "--tower", &k, restricted]),
    ];
    for (name, args) in cases {
        let r = moddeg(&args);
        assert_eq!(r.code, 0, "{}", r.stderr);
        let path = dir.path().join(name);
        std::fs::write(&path, &r.stdout).unwrap();
        assert_eq!(read_document(&path).unwrap().kind, Kind::Module);
        assert_eq!(canonical_text(&path, Kind::Module).unwrap(), r.stdout);
        let v = moddeg(&["validate", path.to_str().unwrap()]);
        assert_eq!(v.code, 0, "{}", v.stderr);
        assert!(v.stdout.contains("canonical form: yes"));
    }
    let k_dim = |n: &str| {
        let r = moddeg(&["--json", "hom", &m, n]);
        let doc: Document<Report> = serde_json::from_str(&r.stdout).unwrap();
        doc.body.data["k_dim"].as_u64().unwrap()
    };
    let induced = dir.path().join("induced.json");
    let twisted = dir.path().join("twisted.json");
    let split = k_dim(&m) + k_dim(twisted.to_str().unwrap());
    assert_eq!(k_dim(induced.to_str().unwrap()), split);
    let twice = moddeg(&["twist", "--phi", "1", twisted.to_str().unwrap()]);
    let back = dir.path().join("back.json");
    std::fs::write(&back, twice.stdout).unwrap();
    assert_eq!(moddeg(&["iso", &m, back.to_str().unwrap()]).code, 0);
}

#[test]
fn seeded_runs_are_reproducible() {
    let rr3 = corpus("ext3/rr3.json");
    let args = ["f-inv", "--i", "1", &rr3, "--strategy", "randomized", "--seed", "4", "--trials", "50"];
    let a = moddeg(&args);
    assert_eq!(a.code, 2);
    assert_eq!(a.stdout, moddeg(&args).stdout);

    let (m, n, x) = (corpus("kronmin/M.json"), corpus("kronmin/N.json"), corpus("kronmin/X.json"));
    let args = ["--json", "riedtmann-search", &m, &n, "--family", &x, "--strategy", "randomized", "--seed", "9"];
    let a = moddeg(&args);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, moddeg(&args).stdout);
}

#[test]
fn json_reports_parse_back() {
    let r = moddeg(&["--json", "endo", &corpus("b2/S2.json")]);
    assert_eq!(r.code, 0);
    let doc: Document<Report> = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!((doc.kind, doc.body.command.as_str(), doc.body.status.as_str()), (Kind::Report, "endo", "success"));
    assert_eq!(Document::new(Kind::Report, &doc.body).to_canonical(), r.stdout);

    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("report.json");
    std::fs::write(&p, &r.stdout).unwrap();
    assert_eq!(moddeg(&["validate", p.to_str().unwrap()]).code, 0);
}

fn truncated_f2(dir: &Path) -> PathBuf {
    let p = dir.join("trunc.json");
    let body = serde_json::json!({ "base": "F_2", "type": "truncated", "n": 2 });
    std::fs::write(&p, Document::new(Kind::Algebra, body).to_canonical()).unwrap();
    p
}

#[test]
fn enumerate_counts_truncated_modules() {
    let dir = tempfile::tempdir().unwrap();
    let alg = truncated_f2(dir.path());
    let alg = alg.to_str().unwrap();
    let r = moddeg(&["enumerate", alg, "--dim", "2"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("4 structures in 2 classes"), "{}", r.stdout);

    let csv = moddeg(&["enumerate", alg, "--dim", "2", "--csv"]).stdout;
    let mut lines = csv.lines();
    assert!(lines.next().unwrap().contains(','));
    assert_eq!(lines.count(), 2);

    let dot = moddeg(&["enumerate", alg, "--dim", "2", "--dot"]).stdout;
    assert!(dot.starts_with("digraph"));
    assert!(dot.trim_end().ends_with('}'));
    assert_eq!(dot.matches(" -> ").count(), 1);

    assert_eq!(moddeg(&["enumerate", alg, "--dim", "2", "--csv", "--dot"]).code, 3);
    assert_eq!(moddeg(&["enumerate", alg, "--dim", "3", "--budget", "2"]).code, 2);
}

#[test]
fn twist_closure_is_consistent_over_f4() {
    let dir = tempfile::tempdir().unwrap();
    let a2 = dir.path().join("a2.json");
    let body = serde_json::json!({
        "base": "F_2", "type": "path", "vertices": 2,
        "arrows": [{ "source": 0, "target": 1, "name": "a" }]
    });
    std::fs::write(&a2, Document::new(Kind::Algebra, body).to_canonical()).unwrap();
    let f4 = dir.path().join("f4.json");
    let body = serde_json::json!({ "base": "F_2", "min_poly": ["1", "1", "1"], "generator": "w" });
    std::fs::write(&f4, Document::new(Kind::Field, body).to_canonical()).unwrap();
    let r = moddeg(&["twist-closure", a2.to_str().unwrap(), "--tower", f4.to_str().unwrap(), "--dmax", "2"]);
    assert_eq!(r.code, 0, "{}{}", r.stdout, r.stderr);
    assert_eq!(r.stdout.lines().next(), Some("twist-closure: consistent"));
}

#[test]
fn suite_reports_every_case() {
    let r = moddeg(&["suite", "--corpus", &corpus("")]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    let r = moddeg(&["suite", "--case", "b2", "--csv", "--corpus", &corpus("")]);
    let mut lines = r.stdout.lines();
    assert_eq!(lines.next(), Some("case,check,expected,actual,basis,pass"));
    assert!(lines.all(|l| l.starts_with("b2,") && l.ends_with(",true")));
    assert_eq!(moddeg(&["suite", "--case", "nope"]).code, 3);
}

#[test]
fn write_corpus_reproduces_the_shipped_files() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(moddeg(&["write-corpus", dir.path().to_str().unwrap()]).code, 0);
    for (rel, text) in moddeg_cli::corpus::files().unwrap() {
        assert_eq!(std::fs::read_to_string(dir.path().join(&rel)).unwrap(), text);
        assert_eq!(std::fs::read_to_string(corpus(&rel)).unwrap(), text);
    }
}
