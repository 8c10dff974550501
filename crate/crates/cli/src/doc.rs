//! JSON document formats. Every scalar is a decimal string, every matrix a
//! row-major array of rows.

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Field,
    Algebra,
    Module,
    Morphism,
    Sequence,
    Family,
    Report,
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = serde_json::to_value(self).map_err(|_| std::fmt::Error)?;
        f.write_str(s.as_str().unwrap_or("?"))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Document<B> {
    pub kind: Kind,
    pub schema_version: u32,
    pub body: B,
}

impl<B: Serialize> Document<B> {
    pub fn new(kind: Kind, body: B) -> Self {
        Document { kind, schema_version: SCHEMA_VERSION, body }
    }

    /// Pretty JSON with arrays of scalars kept on one line, and a trailing
    /// newline.
    pub fn to_canonical(&self) -> String {
        let mut s = compact_leaf_arrays(&serde_json::to_string_pretty(self).expect("documents serialize"));
        s.push('\n');
        s
    }
}

/// End of the string literal starting at `i` (the index after its closing quote).
fn skip_string(b: &[u8], mut i: usize) -> usize {
    i += 1;
    while b[i] != b'"' {
        i += if b[i] == b'\\' { 2 } else { 1 };
    }
    i + 1
}

/// Rewrites `[\n  "1",\n  "0"\n]` as `["1", "0"]` when the array holds no
/// arrays or objects.
fn compact_leaf_arrays(s: &str) -> String {
    let b = s.as_bytes();
    let mut out = String::with_capacity(s.len());
    let mut i = 0;
    let mut copied = 0;
    while i < b.len() {
        match b[i] {
            b'"' => i = skip_string(b, i),
            b'[' => {
                let mut j = i + 1;
                let mut items = Vec::new();
                let mut start = None;
                let leaf = loop {
                    match b[j] {
                        b'"' => {
                            start.get_or_insert(j);
                            j = skip_string(b, j);
                        }
                        b'[' | b'{' => break false,
                        b']' => {
                            if let Some(st) = start.take() {
                                items.push(s[st..j].trim_end());
                            }
                            break true;
                        }
                        b',' => {
                            if let Some(st) = start.take() {
                                items.push(s[st..j].trim_end());
                            }
                            j += 1;
                        }
                        c if c.is_ascii_whitespace() => j += 1,
                        _ => {
                            start.get_or_insert(j);
                            j += 1;
                        }
                    }
                };
                if leaf {
                    out.push_str(&s[copied..i]);
                    out.push('[');
                    out.push_str(&items.join(", "));
                    out.push(']');
                    i = j + 1;
                    copied = i;
                } else {
                    i += 1;
                }
            }
            _ => i += 1,
        }
    }
    out.push_str(&s[copied..]);
    out
}

pub type Row = Vec<String>;
pub type MatrixDoc = Vec<Row>;
/// A matrix over an extension field: each entry is its coordinate list.
pub type KMatrixDoc = Vec<Vec<Vec<String>>>;

/// A path to another document (relative to the referring file) or the
/// body itself.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Ref<T> {
    Path(String),
    Inline(Box<T>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FieldBody {
    pub base: String,
    /// Coefficients from the constant term up.
    pub min_poly: Row,
    pub generator: String,
    /// Images of the generator; empty means Frobenius powers over a prime
    /// field and the identity alone over the rationals.
    #[serde(default)]
    pub automorphisms: Vec<Row>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArrowDoc {
    pub source: usize,
    pub target: usize,
    pub name: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum AlgebraBody {
    Path {
        base: String,
        vertices: usize,
        arrows: Vec<ArrowDoc>,
    },
    Exterior {
        base: String,
        vars: usize,
    },
    /// `k[x]/(x^n)`.
    Truncated {
        base: String,
        n: usize,
    },
    Field {
        base: String,
        tower: Ref<FieldBody>,
    },
    StructureConstants {
        base: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
        unit: Row,
        /// `table[i][j]` holds the coordinates of `b_i b_j`.
        table: Vec<Vec<Row>>,
    },
    /// The span of square matrices, closed under multiplication.
    MatrixBasis {
        base: String,
        names: Vec<String>,
        matrices: Vec<MatrixDoc>,
    },
    /// `K ⊗ Λ`.
    Extension {
        base: String,
        tower: Ref<FieldBody>,
        lambda: Ref<AlgebraBody>,
    },
}

impl AlgebraBody {
    pub fn base(&self) -> &str {
        match self {
            AlgebraBody::Path { base, .. }
            | AlgebraBody::Exterior { base, .. }
            | AlgebraBody::Truncated { base, .. }
            | AlgebraBody::Field { base, .. }
            | AlgebraBody::StructureConstants { base, .. }
            | AlgebraBody::MatrixBasis { base, .. }
            | AlgebraBody::Extension { base, .. } => base,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum ModuleForm {
    /// One matrix per algebra generator (the written form).
    Generators { dim: usize, generators: Vec<MatrixDoc> },
    /// One matrix per algebra basis element.
    Action { dim: usize, action: Vec<MatrixDoc> },
    /// Quiver representation over a path algebra.
    Representation { dims: Vec<usize>, arrows: Vec<MatrixDoc> },
    /// Representation over the extension field, for `K ⊗ kQ`.
    KRepresentation { dims: Vec<usize>, arrows: Vec<KMatrixDoc> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModuleBody {
    pub base: String,
    pub algebra: Ref<AlgebraBody>,
    #[serde(flatten)]
    pub form: ModuleForm,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MorphismBody {
    pub base: String,
    pub source: Ref<ModuleBody>,
    pub target: Ref<ModuleBody>,
    pub matrix: MatrixDoc,
}

/// `0 → X --g--> X ⊕ M --h--> N → 0`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SequenceBody {
    pub base: String,
    pub x: Ref<ModuleBody>,
    pub m: Ref<ModuleBody>,
    pub n: Ref<ModuleBody>,
    pub g: MatrixDoc,
    pub h: MatrixDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyBody {
    pub base: String,
    pub members: Vec<Ref<ModuleBody>>,
}

/// Output of a command.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub status: String,
    pub lines: Vec<String>,
    #[serde(default)]
    pub data: serde_json::Value,
}

impl Report {
    pub fn new(command: &str, status: impl Into<String>) -> Self {
        Report { command: command.into(), status: status.into(), lines: Vec::new(), data: serde_json::Value::Null }
    }

    pub fn line(&mut self, s: impl Into<String>) -> &mut Self {
        self.lines.push(s.into());
        self
    }
}
