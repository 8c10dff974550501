use std::convert::Infallible;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::modrep::hom::{for_each_vector, space_size};
use crate::modrep::{iso_test, HomSpace, Module, ModuleMorphism};
use crate::scalar::{random_scalar, Scalar};
use crate::verdict::{Search, Status, Verdict};

/// `0 → X --g--> X ⊕ M --h--> N → 0`, exhibiting `M ≤deg N`.
#[derive(Clone, Debug)]
pub struct RiedtmannWitness<F: Scalar> {
    pub x: Module<F>,
    pub m: Module<F>,
    pub n: Module<F>,
    pub g: ModuleMorphism<F>,
    pub h: ModuleMorphism<F>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RiedtmannFailure {
    DimMismatch { m: usize, n: usize },
    /// A map does not have the expected source or target.
    WrongEndpoints(&'static str),
    NotAMorphism(&'static str),
    NotInjective,
    NotSurjective,
    /// `h∘g ≠ 0`.
    NotComplex,
    /// `image g ≠ kernel h`.
    NotExact,
}

impl std::fmt::Display for RiedtmannFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RiedtmannFailure::DimMismatch { m, n } => write!(f, "dim M = {m} but dim N = {n}"),
            RiedtmannFailure::WrongEndpoints(which) => write!(f, "{which} has the wrong source or target"),
            RiedtmannFailure::NotAMorphism(which) => write!(f, "{which} is not a module homomorphism"),
            RiedtmannFailure::NotInjective => f.write_str("g is not injective"),
            RiedtmannFailure::NotSurjective => f.write_str("h is not surjective"),
            RiedtmannFailure::NotComplex => f.write_str("h∘g is not zero"),
            RiedtmannFailure::NotExact => f.write_str("image of g differs from kernel of h"),
        }
    }
}

impl<F: Scalar> RiedtmannWitness<F> {
    /// Wraps raw matrices; `g` is `(d_X + d_M) × d_X`, `h` is `d_N × (d_X + d_M)`.
    pub fn from_matrices(x: Module<F>, m: Module<F>, n: Module<F>, g: Matrix<F>, h: Matrix<F>) -> Result<Self> {
        let xm = x.direct_sum(&m)?;
        n.check_same_algebra(&xm)?;
        if g.shape() != (xm.dim(), x.dim()) || h.shape() != (n.dim(), xm.dim()) {
            return Err(Error::ShapeMismatch("Riedtmann maps have the wrong shape".into()));
        }
        let g = ModuleMorphism::new_unchecked(x.clone(), xm.clone(), g);
        let h = ModuleMorphism::new_unchecked(xm, n.clone(), h);
        Ok(RiedtmannWitness { x, m, n, g, h })
    }
}

/// Re-checks every condition on a witness.
pub fn riedtmann_verify<F: Scalar>(w: &RiedtmannWitness<F>) -> Result<Verdict<(), RiedtmannFailure>> {
    w.x.check_same_algebra(&w.m)?;
    w.m.check_same_algebra(&w.n)?;
    let fail = |f| Ok(Verdict::Refuted(f));
    if w.m.dim() != w.n.dim() {
        return fail(RiedtmannFailure::DimMismatch { m: w.m.dim(), n: w.n.dim() });
    }
    let xm = w.x.direct_sum(&w.m)?;
    if *w.g.source() != w.x || *w.g.target() != xm {
        return fail(RiedtmannFailure::WrongEndpoints("g"));
    }
    if *w.h.source() != xm || *w.h.target() != w.n {
        return fail(RiedtmannFailure::WrongEndpoints("h"));
    }
    if !w.g.verify() {
        return fail(RiedtmannFailure::NotAMorphism("g"));
    }
    if !w.h.verify() {
        return fail(RiedtmannFailure::NotAMorphism("h"));
    }
    let rg = w.g.rank();
    if rg != w.x.dim() {
        return fail(RiedtmannFailure::NotInjective);
    }
    let rh = w.h.rank();
    if rh != w.n.dim() {
        return fail(RiedtmannFailure::NotSurjective);
    }
    if !w.h.matrix().mul(w.g.matrix()).is_zero() {
        return fail(RiedtmannFailure::NotComplex);
    }
    if rg + rh != xm.dim() {
        return fail(RiedtmannFailure::NotExact);
    }
    Ok(Verdict::Proved(()))
}

/// `0 → U --ι--> V --π--> W → 0`.
#[derive(Clone, Debug)]
pub struct ShortExact<F: Scalar> {
    pub iota: ModuleMorphism<F>,
    pub pi: ModuleMorphism<F>,
}

impl<F: Scalar> ShortExact<F> {
    pub fn new(iota: ModuleMorphism<F>, pi: ModuleMorphism<F>) -> Result<Self> {
        if iota.target() != pi.source() {
            return Err(Error::ShapeMismatch("iota must land in the source of pi".into()));
        }
        Ok(ShortExact { iota, pi })
    }

    /// Completes an injection `ι: U → V` with `π = φ∘(V → V/ιU)`, where
    /// `φ: V/ιU ≅ W` is found by [`iso_test`]. `None` if no isomorphism
    /// is found.
    pub fn from_injection(iota: ModuleMorphism<F>, w: &Module<F>, search: Search) -> Result<Option<Self>> {
        let cols: Vec<Vec<F>> = (0..iota.matrix().cols()).map(|c| iota.matrix().col(c)).collect();
        let (coker, proj) = iota.target().quotient(&cols)?;
        Ok(match iso_test(&coker, w, search)? {
            Verdict::Proved(phi) => {
                let pi = ModuleMorphism::new_unchecked(iota.target().clone(), w.clone(), phi.matrix().mul(&proj));
                Some(ShortExact { iota, pi })
            }
            _ => None,
        })
    }

    pub fn u(&self) -> &Module<F> {
        self.iota.source()
    }

    pub fn v(&self) -> &Module<F> {
        self.iota.target()
    }

    pub fn w(&self) -> &Module<F> {
        self.pi.target()
    }

    pub fn is_exact(&self) -> bool {
        let (ri, rp) = (self.iota.rank(), self.pi.rank());
        self.iota.verify()
            && self.pi.verify()
            && ri == self.u().dim()
            && rp == self.w().dim()
            && self.pi.matrix().mul(self.iota.matrix()).is_zero()
            && ri + rp == self.v().dim()
    }

    /// `0 → U → V ⊕ E → W ⊕ E → 0`.
    pub fn with_summand(&self, e: &Module<F>) -> Result<Self> {
        let ve = self.v().direct_sum(e)?;
        let we = self.w().direct_sum(e)?;
        let iota = Matrix::vstack(&[self.iota.matrix(), &Matrix::zeros(e.dim(), self.u().dim())]);
        let pi = Matrix::block_diag(&[self.pi.matrix(), &Matrix::identity(e.dim())]);
        Ok(ShortExact {
            iota: ModuleMorphism::new_unchecked(self.u().clone(), ve.clone(), iota),
            pi: ModuleMorphism::new_unchecked(ve, we, pi),
        })
    }

    /// The componentwise direct sum of two sequences.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        let u = self.u().direct_sum(other.u())?;
        let v = self.v().direct_sum(other.v())?;
        let w = self.w().direct_sum(other.w())?;
        let iota = Matrix::block_diag(&[self.iota.matrix(), other.iota.matrix()]);
        let pi = Matrix::block_diag(&[self.pi.matrix(), other.pi.matrix()]);
        Ok(ShortExact {
            iota: ModuleMorphism::new_unchecked(u, v.clone(), iota),
            pi: ModuleMorphism::new_unchecked(v, w, pi),
        })
    }

    /// The Riedtmann witness for `V ≤deg U ⊕ W` with `X = U`,
    /// `g = (0, ι)` and `h = 1_U ⊕ π`.
    pub fn riedtmann(&self) -> Result<RiedtmannWitness<F>> {
        let du = self.u().dim();
        let g = Matrix::vstack(&[&Matrix::zeros(du, du), self.iota.matrix()]);
        let h = Matrix::block_diag(&[&Matrix::identity(du), self.pi.matrix()]);
        let n = self.u().direct_sum(self.w())?;
        RiedtmannWitness::from_matrices(self.u().clone(), self.v().clone(), n, g, h)
    }
}

/// Lexicographic or seeded-random coefficient vectors for a Hom basis.
fn coefficient_stream<F: Scalar>(h: usize, search: &Search, salt: u64, budget: u64) -> Vec<Vec<F>> {
    let size = space_size::<F>(h);
    let mut out = Vec::new();
    if search.enumerate(size) && size.is_some_and(|s| s <= budget.max(1) as u128) {
        for_each_vector::<F>(h, |c| {
            if h == 0 || c.iter().any(|x| !x.is_zero()) {
                out.push(c.to_vec());
            }
            false
        });
        return out;
    }
    if h == 0 {
        return vec![Vec::new()];
    }
    let mut rng = search.rng(salt);
    for t in 0..budget {
        let bound = 1 + (t / 16) as i64;
        out.push((0..h).map(|_| random_scalar(&mut rng, bound)).collect());
    }
    out
}

/// Looks for a Riedtmann witness for `M ≤deg N` with `X` taken from the
/// family.
///
/// For each `X`, maps `g = (0, b)` with `b ∈ Hom(X, M)` are tried first,
/// then general `g ∈ Hom(X, X ⊕ M)`. An injective `g` is completed by an
/// isomorphism `coker g ≅ N`. Failure is `Unknown`, never a refutation.
pub fn riedtmann_search<F: Scalar>(
    m: &Module<F>,
    n: &Module<F>,
    family: &[Module<F>],
    search: Search,
) -> Result<Verdict<RiedtmannWitness<F>, Infallible>> {
    m.check_same_algebra(n)?;
    if m.dim() != n.dim() {
        return Err(Error::DimMismatch(m.dim(), n.dim()));
    }
    let per_phase = (search.trials / (2 * family.len().max(1) as u64)).max(1);
    let mut tried = 0u64;
    for (k, x) in family.iter().enumerate() {
        x.check_same_algebra(m)?;
        let xm = x.direct_sum(m)?;
        let dx = x.dim();
        for phase in 0..2 {
            let hom = if phase == 0 { HomSpace::new(x, m)? } else { HomSpace::new(x, &xm)? };
            let salt = 0x5EED ^ ((k as u64) << 8) ^ phase;
            for c in coefficient_stream::<F>(hom.k_dim(), &search, salt, per_phase) {
                tried += 1;
                let b = hom.combination(&c);
                let g = if phase == 0 { Matrix::vstack(&[&Matrix::zeros(dx, dx), &b]) } else { b };
                if g.rank() != dx {
                    continue;
                }
                let cols: Vec<Vec<F>> = (0..dx).map(|c| g.col(c)).collect();
                let (coker, proj) = xm.quotient(&cols)?;
                let iso = iso_test(&coker, n, Search { trials: search.trials.min(200), ..search })?;
                if let Verdict::Proved(phi) = iso {
                    let h = phi.matrix().mul(&proj);
                    let w = RiedtmannWitness::from_matrices(x.clone(), m.clone(), n.clone(), g, h)?;
                    if riedtmann_verify(&w)?.is_proved() {
                        return Ok(Verdict::Proved(w));
                    }
                }
            }
        }
    }
    Ok(Verdict::Unknown(search.effort(tried, "no witness among the tried maps g")))
}

/// A virtual degeneration `M ⊕ Z ≤deg N ⊕ Z` through a chain of Riedtmann
/// steps, each linked to the next by an isomorphism.
#[derive(Clone, Debug)]
pub struct VdegChain<F: Scalar> {
    pub m: Module<F>,
    pub n: Module<F>,
    pub z: Module<F>,
    pub steps: Vec<RiedtmannWitness<F>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    /// Verification of each step.
    pub steps: Vec<Status>,
    /// `M⊕Z ≅ M_1`, `N_k ≅ M_{k+1}`, `N_last ≅ N⊕Z`.
    pub links: Vec<Status>,
    pub holds: bool,
}

impl<F: Scalar> VdegChain<F> {
    pub fn verify(&self, search: Search) -> Result<ChainReport> {
        let start = self.m.direct_sum(&self.z)?;
        let end = self.n.direct_sum(&self.z)?;
        let steps: Vec<Status> =
            self.steps.iter().map(|w| riedtmann_verify(w).map(|v| v.status())).collect::<Result<_>>()?;
        let mut ends = vec![&start];
        for w in &self.steps {
            ends.push(&w.m);
            ends.push(&w.n);
        }
        ends.push(&end);
        let links: Vec<Status> = ends
            .chunks(2)
            .map(|p| iso_test(p[0], p[1], search).map(|v| v.status()))
            .collect::<Result<_>>()?;
        let holds = steps.iter().chain(&links).all(|s| *s == Status::Proved);
        Ok(ChainReport { steps, links, holds })
    }
}
