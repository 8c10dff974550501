use crate::algebra::{from_matrix_basis, quotient, Algebra};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, RowReducer, SpanCoords};
use crate::modrep::hom::{for_each_vector, space_size};
use crate::modrep::{HomSpace, Module};
use crate::scalar::{random_scalar, Scalar};
use crate::verdict::{Search, Verdict};

/// `End(M)` as an algebra whose basis is the Hom-space basis; the product
/// is composition.
pub fn end_algebra<F: Scalar>(m: &Module<F>) -> Result<(Algebra<F>, HomSpace<F>)> {
    let hom = HomSpace::new(m, m)?;
    let mats: Vec<Matrix<F>> = hom.basis().iter().map(|f| f.matrix().clone()).collect();
    let names = (0..mats.len()).map(|i| format!("f{i}")).collect();
    Ok((from_matrix_basis(names, &mats)?, hom))
}

/// Kernel of the trace form `(x, y) ↦ tr(L_x L_y)`, which is the Jacobson
/// radical in characteristic 0.
pub fn radical_char0<F: Scalar>(e: &Algebra<F>) -> Result<Vec<Vec<F>>> {
    if F::CHARACTERISTIC != 0 {
        return Err(Error::WrongCharacteristic);
    }
    let m = e.dim();
    let traces: Vec<F> = (0..m).map(|l| e.left_mult(&e.basis_vector(l)).trace()).collect();
    let form = Matrix::from_fn(m, m, |i, j| {
        e.basis_product(i, j).iter().fold(F::zero(), |acc, (l, c)| acc + c.clone() * traces[*l].clone())
    });
    Ok(form.nullspace())
}

/// Why a ring is a division ring or local.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingProof<F> {
    /// Every element was checked.
    Exhaustive { elements: u128 },
    OneDimensional,
    /// Commutative, with an element whose minimal polynomial is irreducible
    /// of degree `dim`.
    PrimitiveElement { element: Vec<F>, min_poly: Vec<F> },
    /// The non-units form a subspace of this dimension (finite fields).
    NonUnitsFormSubspace { dim: usize },
    /// The quotient by the radical is a division ring.
    DivisionQuotient { radical_dim: usize, quotient: Box<RingProof<F>> },
}

/// Why a ring is not a division ring or not local.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingCertificate<F> {
    ZeroRing,
    /// A nonzero nilpotent element.
    Nilpotent(Vec<F>),
    /// Nonzero `x`, `y` with `x·y = 0`.
    ZeroDivisor { x: Vec<F>, y: Vec<F> },
    /// An element whose minimal polynomial is reducible.
    ReducibleMinPoly { element: Vec<F>, poly: Vec<F> },
    /// Two non-units whose sum is a unit.
    NonUnitSum { x: Vec<F>, y: Vec<F> },
    /// A certificate that the quotient by the radical is not a division ring.
    InQuotient(Box<RingCertificate<F>>),
}

fn is_unit<F: Scalar>(e: &Algebra<F>, x: &[F]) -> bool {
    e.left_mult(x).is_invertible()
}

impl<F: Scalar> RingCertificate<F> {
    /// Re-checks the certificate against `e`.
    pub fn verify(&self, e: &Algebra<F>) -> bool {
        let nonzero = |v: &[F]| v.len() == e.dim() && v.iter().any(|c| !c.is_zero());
        match self {
            RingCertificate::ZeroRing => e.dim() == 0,
            RingCertificate::Nilpotent(x) => {
                nonzero(x) && (0..e.dim()).fold(x.clone(), |acc, _| e.mul(&acc, x)).iter().all(F::is_zero)
            }
            RingCertificate::ZeroDivisor { x, y } => nonzero(x) && nonzero(y) && e.mul(x, y).iter().all(F::is_zero),
            RingCertificate::ReducibleMinPoly { element, poly } => {
                nonzero(element) && min_poly(e, element) == *poly && F::is_irreducible_poly(poly) == Ok(false)
            }
            RingCertificate::NonUnitSum { x, y } => {
                let s: Vec<F> = x.iter().zip(y).map(|(a, b)| a.clone() + b.clone()).collect();
                !is_unit(e, x) && !is_unit(e, y) && is_unit(e, &s)
            }
            RingCertificate::InQuotient(c) => radical_quotient(e).is_ok_and(|(q, _)| c.verify(&q)),
        }
    }
}

/// Monic minimal polynomial of `x` (coefficients low to high).
pub fn min_poly<F: Scalar>(e: &Algebra<F>, x: &[F]) -> Vec<F> {
    let mut powers = vec![e.unit().to_vec()];
    loop {
        let next = e.mul(powers.last().expect("nonempty"), x);
        let coords = SpanCoords::new(&powers, e.dim()).expect("powers below the degree are independent");
        if let Some(c) = coords.coords(&next) {
            let mut p: Vec<F> = c.into_iter().map(|v| -v).collect();
            p.push(F::one());
            return p;
        }
        powers.push(next);
    }
}

fn radical_quotient<F: Scalar>(e: &Algebra<F>) -> Result<(Algebra<F>, usize)> {
    let j = radical_char0(e)?;
    let (q, _) = quotient(e, &j)?;
    Ok((q, j.len()))
}

fn zero_divisor_of<F: Scalar>(e: &Algebra<F>, x: &[F]) -> Option<RingCertificate<F>> {
    let y = e.left_mult(x).nullspace().into_iter().next()?;
    Some(RingCertificate::ZeroDivisor { x: x.to_vec(), y })
}

/// Candidate elements: basis elements, sums of two and of three basis
/// elements, then seeded random small combinations.
fn candidates<F: Scalar>(m: usize, search: &Search) -> Vec<Vec<F>> {
    let unit = |i: usize| {
        let mut v = vec![F::zero(); m];
        v[i] = F::one();
        v
    };
    let mut out: Vec<Vec<F>> = (0..m).map(unit).collect();
    for i in 0..m {
        for j in i + 1..m {
            let mut v = unit(i);
            v[j] = F::one();
            out.push(v.clone());
            for k in j + 1..m {
                let mut w = v.clone();
                w[k] = F::one();
                out.push(w);
            }
        }
    }
    let mut rng = search.rng(0xD1);
    for _ in 0..search.trials.min(200) {
        out.push((0..m).map(|_| random_scalar(&mut rng, 3)).collect());
    }
    out
}

/// Decides whether `e` is a division ring.
///
/// Over a small finite field every element is checked. Otherwise: a
/// nonzero radical or a basis element that is a zero divisor refutes; an
/// element with reducible minimal polynomial refutes; dimension 1 proves;
/// a commutative ring with an element whose minimal polynomial is
/// irreducible of full degree proves.
pub fn is_division<F: Scalar>(e: &Algebra<F>, search: Search) -> Verdict<RingProof<F>, RingCertificate<F>> {
    let m = e.dim();
    if m == 0 {
        return Verdict::Refuted(RingCertificate::ZeroRing);
    }
    let size = space_size::<F>(m);
    if search.enumerate(size) {
        let mut cert = None;
        for_each_vector::<F>(m, |x| {
            if x.iter().all(F::is_zero) {
                return false;
            }
            cert = zero_divisor_of(e, x);
            cert.is_some()
        });
        return match cert {
            Some(c) => Verdict::Refuted(c),
            None => Verdict::Proved(RingProof::Exhaustive { elements: size.unwrap_or(0) }),
        };
    }
    if F::CHARACTERISTIC == 0 {
        if let Some(x) = radical_char0(e).expect("characteristic 0").into_iter().next() {
            return Verdict::Refuted(RingCertificate::Nilpotent(x));
        }
    }
    for i in 0..m {
        if let Some(c) = zero_divisor_of(e, &e.basis_vector(i)) {
            return Verdict::Refuted(c);
        }
    }
    if m == 1 {
        return Verdict::Proved(RingProof::OneDimensional);
    }
    let commutative = e.is_commutative();
    let mut undecided = 0u64;
    let cands = candidates::<F>(m, &search);
    let tried = cands.len() as u64;
    for x in cands {
        let p = min_poly(e, &x);
        match F::is_irreducible_poly(&p) {
            Ok(false) => return Verdict::Refuted(RingCertificate::ReducibleMinPoly { element: x, poly: p }),
            Ok(true) if commutative && p.len() == m + 1 => {
                return Verdict::Proved(RingProof::PrimitiveElement { element: x, min_poly: p })
            }
            Ok(true) => {}
            Err(_) => undecided += 1,
        }
    }
    let note = if commutative {
        format!("no primitive element of full degree found; {undecided} minimal polynomials undecided")
    } else {
        "noncommutative and no zero divisor found".to_string()
    };
    Verdict::Unknown(search.effort(tried, note))
}

/// Decides whether `e` is local (so a module with this endomorphism ring
/// is indecomposable).
///
/// Over a small finite field: local iff the non-units form a subspace.
/// In characteristic 0: local iff the quotient by the radical is a
/// division ring, which is then decided by [`is_division`].
pub fn is_local<F: Scalar>(e: &Algebra<F>, search: Search) -> Verdict<RingProof<F>, RingCertificate<F>> {
    let m = e.dim();
    if m == 0 {
        return Verdict::Refuted(RingCertificate::ZeroRing);
    }
    let size = space_size::<F>(m);
    if search.enumerate(size) {
        let mut nonunits = Vec::new();
        for_each_vector::<F>(m, |x| {
            if !is_unit(e, x) {
                nonunits.push(x.to_vec());
            }
            false
        });
        let mut red = RowReducer::new(m);
        let mut basis = Vec::new();
        for x in &nonunits {
            if red.insert_dense(x) {
                basis.push(x.clone());
            }
        }
        let r = basis.len();
        if Some(nonunits.len() as u128) == space_size::<F>(r) {
            return Verdict::Proved(RingProof::NonUnitsFormSubspace { dim: r });
        }
        // some combination of non-units is a unit; walk its partial sums
        let mut cert = None;
        for_each_vector::<F>(r, |c| {
            let mut s = vec![F::zero(); m];
            for (ci, b) in c.iter().zip(&basis) {
                let y: Vec<F> = b.iter().map(|v| v.clone() * ci.clone()).collect();
                let next: Vec<F> = s.iter().zip(&y).map(|(a, b)| a.clone() + b.clone()).collect();
                if is_unit(e, &next) {
                    cert = Some(RingCertificate::NonUnitSum { x: s, y });
                    return true;
                }
                s = next;
            }
            false
        });
        return Verdict::Refuted(cert.expect("span of the non-units contains a unit"));
    }
    if F::CHARACTERISTIC != 0 {
        return Verdict::Unknown(search.effort(0, "ring too large to enumerate in positive characteristic"));
    }
    let (q, radical_dim) = radical_quotient(e).expect("characteristic 0");
    match is_division(&q, search) {
        Verdict::Proved(p) => Verdict::Proved(RingProof::DivisionQuotient { radical_dim, quotient: Box::new(p) }),
        Verdict::Refuted(c) => Verdict::Refuted(RingCertificate::InQuotient(Box::new(c))),
        Verdict::Unknown(eff) => Verdict::Unknown(eff),
    }
}
