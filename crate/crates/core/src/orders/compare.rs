use std::ops::RangeInclusive;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::Algebra;
use crate::descent::induce;
use crate::error::{Error, Result};
use crate::modrep::{end_algebra, is_division, iso_test, HomSpace, Module};
use crate::orders::subdim::f_invariant;
use crate::scalar::Scalar;
use crate::verdict::{Search, Status, Strategy, Verdict};

/// Hom-dimensions between one probe `X` and the pair `M`, `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HomRow {
    pub probe: usize,
    /// `[X, M]` and `[X, N]`.
    pub into_m: usize,
    pub into_n: usize,
    /// `[M, X]` and `[N, X]`.
    pub from_m: usize,
    pub from_n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HomOrderVerdict {
    /// No probe contradicts `M ≤Hom N`. Only a necessary condition.
    Consistent,
    /// `[X, M] > [X, N]` (covariant) or `[M, X] > [N, X]`.
    Violated { probe: usize, covariant: bool },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomOrderReport {
    pub rows: Vec<HomRow>,
    pub verdict: HomOrderVerdict,
}

/// Compares `M` and `N` against every module of the family, in both
/// variances. Dimensions are over the base field.
pub fn hom_order_cmp<F: Scalar>(m: &Module<F>, n: &Module<F>, family: &[Module<F>]) -> Result<HomOrderReport> {
    m.check_same_algebra(n)?;
    let dim = |a: &Module<F>, b: &Module<F>| HomSpace::new(a, b).map(|h| h.k_dim());
    let mut rows = Vec::with_capacity(family.len());
    let mut verdict = HomOrderVerdict::Consistent;
    for (probe, x) in family.iter().enumerate() {
        x.check_same_algebra(m)?;
        let row = HomRow { probe, into_m: dim(x, m)?, into_n: dim(x, n)?, from_m: dim(m, x)?, from_n: dim(n, x)? };
        if verdict == HomOrderVerdict::Consistent {
            if row.into_m > row.into_n {
                verdict = HomOrderVerdict::Violated { probe, covariant: true };
            } else if row.from_m > row.from_n {
                verdict = HomOrderVerdict::Violated { probe, covariant: false };
            }
        }
        rows.push(row);
    }
    Ok(HomOrderReport { rows, verdict })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Violated,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub data: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Overall {
    Consistent,
    /// `M ≰deg N`, certified by the named check.
    Refuted { check: String, data: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub checks: Vec<Check>,
    pub overall: Overall,
}

impl ObstructionReport {
    fn new(checks: Vec<Check>) -> Self {
        let overall = match checks.iter().find(|c| c.status == CheckStatus::Violated) {
            Some(c) => Overall::Refuted { check: c.name.clone(), data: c.data.clone() },
            None => Overall::Consistent,
        };
        ObstructionReport { checks, overall }
    }

    pub fn is_refuted(&self) -> bool {
        matches!(self.overall, Overall::Refuted { .. })
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Debug)]
pub struct ObstructionConfig<F: Scalar> {
    /// Hom-order probes; `M` and `N` are always added.
    pub family: Vec<Module<F>>,
    pub f_range: RangeInclusive<usize>,
    /// Algebras `K ⊗ Λ` to compare `f_i` after extending scalars.
    pub extensions: Vec<Arc<Algebra<F>>>,
    pub search: Search,
}

impl<F: Scalar> Default for ObstructionConfig<F> {
    fn default() -> Self {
        ObstructionConfig { family: Vec::new(), f_range: 1..=1, extensions: Vec::new(), search: Search::default() }
    }
}

fn check(name: impl Into<String>, status: CheckStatus, data: impl Into<String>) -> Check {
    Check { name: name.into(), status, data: data.into() }
}

/// Necessary conditions for `M ≤deg N`, in order: equal dimension, the
/// Hom-order over the family, strictness `[N, M] < [N, N]` for
/// non-isomorphic modules, and `f_i(M) ≥ f_i(N)` (generic values, also
/// after each listed scalar extension). Any violation refutes `M ≤deg N`.
pub fn deg_obstruct<F: Scalar>(m: &Module<F>, n: &Module<F>, config: &ObstructionConfig<F>) -> Result<ObstructionReport> {
    m.check_same_algebra(n)?;
    let mut checks = Vec::new();
    let dims = format!("{} vs {}", m.dim(), n.dim());
    if m.dim() != n.dim() {
        checks.push(check("dimension", CheckStatus::Violated, dims));
        for name in ["hom_order", "strictness", "f_i"] {
            checks.push(check(name, CheckStatus::Skipped, "dimensions differ"));
        }
        return Ok(ObstructionReport::new(checks));
    }
    checks.push(check("dimension", CheckStatus::Pass, dims));

    let mut family = config.family.clone();
    family.push(m.clone());
    family.push(n.clone());
    let hom = hom_order_cmp(m, n, &family)?;
    checks.push(match hom.verdict {
        HomOrderVerdict::Consistent => {
            check("hom_order", CheckStatus::Pass, format!("consistent over {} probes", family.len()))
        }
        HomOrderVerdict::Violated { probe, covariant } => {
            let r = hom.rows[probe];
            let data = if covariant {
                format!("probe {probe}: [X,M] = {} > {} = [X,N]", r.into_m, r.into_n)
            } else {
                format!("probe {probe}: [M,X] = {} > {} = [N,X]", r.from_m, r.from_n)
            };
            check("hom_order", CheckStatus::Violated, data)
        }
    });

    checks.push(match iso_test(m, n, config.search)? {
        Verdict::Proved(_) => check("strictness", CheckStatus::Pass, "isomorphic"),
        Verdict::Unknown(_) => check("strictness", CheckStatus::Skipped, "isomorphism undecided"),
        Verdict::Refuted(_) => {
            let nm = HomSpace::new(n, m)?.k_dim();
            let nn = HomSpace::new(n, n)?.k_dim();
            let status = if nm >= nn { CheckStatus::Violated } else { CheckStatus::Pass };
            check("strictness", status, format!("[N,M] = {nm}, [N,N] = {nn}"))
        }
    });

    let symbolic = config.search.with_strategy(Strategy::Symbolic);
    let mut f_check = |label: String, a: &Module<F>, b: &Module<F>| {
        for i in config.f_range.clone() {
            let (fa, fb) = (f_invariant(a, i, symbolic).value, f_invariant(b, i, symbolic).value);
            let status = if fa < fb { CheckStatus::Violated } else { CheckStatus::Pass };
            checks.push(check(format!("f_{i}{label}"), status, format!("{fa} vs {fb}")));
        }
    };
    f_check(String::new(), m, n);
    for gamma in &config.extensions {
        let tag = gamma.extension_tag().ok_or(Error::NotExtensionAlgebra)?;
        let label = format!(" over {}", tag.tower.gen_name());
        f_check(label, &induce(gamma, m)?, &induce(gamma, n)?);
    }
    Ok(ObstructionReport::new(checks))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityCandidate {
    pub index: usize,
    pub isomorphic: Status,
    /// `[M, N]`.
    pub hom_mn: usize,
    /// `[M, M]` divides `[M, N]`.
    pub divides: bool,
    /// `N ≤Hom M` over the probes: refuted when a probe separates them,
    /// unknown otherwise, skipped (proved) when `N ≅ M`.
    pub below: Status,
    pub separating_probe: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityReport {
    /// `End(M)` is a division ring.
    pub end_division: Status,
    /// Minimality of `M` in the Hom- and degeneration orders follows from
    /// `End(M)` being a division ring.
    pub theorem_backed: bool,
    pub end_dim: usize,
    pub candidates: Vec<MinimalityCandidate>,
}

/// Evidence for `M` being minimal: whether `End(M)` is a division ring, and
/// for each candidate `N` whether `N ≤Hom M` is contradicted by a probe
/// (family plus `M`).
pub fn minimality_check<F: Scalar>(m: &Module<F>, family: &[Module<F>], search: Search) -> Result<MinimalityReport> {
    for n in family {
        m.check_same_algebra(n)?;
        if n.dim() != m.dim() {
            return Err(Error::DimMismatch(m.dim(), n.dim()));
        }
    }
    let (end, _) = end_algebra(m)?;
    let end_dim = end.dim();
    let end_division = is_division(&end, search).status();
    let mut probes = family.to_vec();
    probes.push(m.clone());
    let mut candidates = Vec::with_capacity(family.len());
    for (index, n) in family.iter().enumerate() {
        let isomorphic = iso_test(n, m, search)?.status();
        let hom_mn = HomSpace::new(m, n)?.k_dim();
        let divides = end_dim > 0 && hom_mn % end_dim == 0;
        let (below, separating_probe) = if isomorphic == Status::Proved {
            (Status::Proved, None)
        } else {
            match hom_order_cmp(n, m, &probes)?.verdict {
                HomOrderVerdict::Violated { probe, .. } => (Status::Refuted, Some(probe)),
                HomOrderVerdict::Consistent => (Status::Unknown, None),
            }
        };
        candidates.push(MinimalityCandidate { index, isomorphic, hom_mn, divides, below, separating_probe });
    }
    Ok(MinimalityReport { end_division, theorem_backed: end_division == Status::Proved, end_dim, candidates })
}
