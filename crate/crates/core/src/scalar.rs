//! Base-field scalars.
//!
//! Everything in this crate is generic over a [`Scalar`]: an exact field
//! element type with value semantics. Two families are provided:
//!
//! * [`Rational`], the field of rational numbers, with an inline `i64`
//!   representation that spills to arbitrary precision on overflow;
//! * [`Fp`], the prime field of order `P`, with residues stored in `u64`.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};

/// An exact field element.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Eq
    + Hash
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Characteristic of the field; 0 for the rationals.
    const CHARACTERISTIC: u64;

    /// Short label used in documents: `Q` or `F_p`.
    fn base_label() -> String;

    fn from_i64(n: i64) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// Number of elements for finite fields.
    fn field_order() -> Option<u64> {
        None
    }

    /// Residue in `[0, p)` for prime fields.
    fn residue(&self) -> Option<u64> {
        None
    }

    /// Canonical decimal form, as written into documents.
    fn to_canonical(&self) -> String {
        self.to_string()
    }

    fn parse_canonical(s: &str) -> Result<Self>;

    /// Decides irreducibility of a monic polynomial (coefficients low to high).
    fn is_irreducible_poly(poly: &[Self]) -> Result<bool>;

    /// A rough size used to prefer small pivots; 0 means "as small as it gets".
    fn height(&self) -> u64 {
        0
    }

    fn is_finite() -> bool {
        Self::field_order().is_some()
    }
}

/// Draws a random scalar: uniform over a finite field, or an integer in
/// `[-bound, bound]` over the rationals.
pub fn random_scalar<F: Scalar, R: Rng + ?Sized>(rng: &mut R, bound: i64) -> F {
    match F::field_order() {
        Some(q) => F::from_i64(rng.gen_range(0..q) as i64),
        None => F::from_i64(rng.gen_range(-bound..=bound)),
    }
}

/// All elements of a finite field, in residue order.
pub fn all_elements<F: Scalar>() -> Option<Vec<F>> {
    F::field_order().map(|q| (0..q).map(|r| F::from_i64(r as i64)).collect())
}

// ---------------------------------------------------------------------------
// Prime fields

/// Residue class modulo the prime `P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub const fn new(r: u64) -> Self {
        Fp(r % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + P as u128 - rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        if self.0 == 0 {
            self
        } else {
            Fp(P - self.0)
        }
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in prime field")
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Scalar for Fp<P> {
    const CHARACTERISTIC: u64 = P;

    fn base_label() -> String {
        format!("F_{P}")
    }

    fn from_i64(n: i64) -> Self {
        Fp((n as i128).rem_euclid(P as i128) as u64)
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn field_order() -> Option<u64> {
        Some(P)
    }

    fn residue(&self) -> Option<u64> {
        Some(self.0)
    }

    fn parse_canonical(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Ok(v) = t.parse::<u64>() {
            return Ok(Fp::new(v));
        }
        let v: i128 = t
            .parse()
            .map_err(|_| Error::Parse(format!("bad residue {s:?} for {}", Self::base_label())))?;
        Ok(Fp(v.rem_euclid(P as i128) as u64))
    }

    fn is_irreducible_poly(poly: &[Self]) -> Result<bool> {
        let residues: Vec<u64> = poly.iter().map(|c| c.0).collect();
        Ok(crate::poly::modp::is_irreducible(&residues, P))
    }
}

// ---------------------------------------------------------------------------
// Rationals

/// An exact rational number in lowest terms with positive denominator.
///
/// Values whose numerator and denominator fit in `i64` stay inline; anything
/// larger is kept as a [`BigRational`]. The representation is canonical, so
/// derived equality and hashing are value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64, i64),
    Big(Box<BigRational>),
}

const SMALL_MAX: i128 = i64::MAX as i128;

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    pub fn from_integer(n: i64) -> Self {
        if n == i64::MIN {
            Rational(Repr::Big(Box::new(BigRational::from_integer(BigInt::from(n)))))
        } else {
            Rational(Repr::Small(n, 1))
        }
    }

    fn from_i128(mut n: i128, mut d: i128) -> Self {
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = n.gcd(&d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        if n.abs() <= SMALL_MAX && d <= SMALL_MAX {
            Rational(Repr::Small(n as i64, d as i64))
        } else {
            Rational(Repr::Big(Box::new(BigRational::new_raw(
                BigInt::from(n),
                BigInt::from(d),
            ))))
        }
    }

    /// Normalizes a big rational, demoting it to the inline form when it fits.
    pub fn from_big(r: BigRational) -> Self {
        let r = r.reduced();
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n != i64::MIN {
                return Rational(Repr::Small(n, d));
            }
        }
        Rational(Repr::Big(Box::new(r)))
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(b) => (**b).clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(b) => b.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(b) => b.is_negative(),
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(b) if b.is_integer() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl FromStr for Rational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad rational {s:?}"));
        let t = s.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(Rational::from_big(BigRational::new(n, d)))
    }
}

impl Add for Rational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    return Self::from_i128(*a as i128 + *c as i128, 1);
                }
                Self::from_i128(
                    *a as i128 * *d as i128 + *c as i128 * *b as i128,
                    *b as i128 * *d as i128,
                )
            }
            _ => Self::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl Sub for Rational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for Rational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                Self::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Self::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl Div for Rational {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero rational")
    }
}

impl Neg for Rational {
    type Output = Self;
    fn neg(self) -> Self {
        match self.0 {
            // |n| <= i64::MAX, so negation cannot overflow.
            Repr::Small(n, d) => Rational(Repr::Small(-n, d)),
            Repr::Big(b) => Self::from_big(-*b),
        }
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }
    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }
}

impl Scalar for Rational {
    const CHARACTERISTIC: u64 = 0;

    fn base_label() -> String {
        "Q".to_string()
    }

    fn from_i64(n: i64) -> Self {
        Rational::from_integer(n)
    }

    fn inv(&self) -> Option<Self> {
        match &self.0 {
            Repr::Small(0, _) => None,
            Repr::Small(n, d) => Some(Self::from_i128(*d as i128, *n as i128)),
            Repr::Big(b) => Some(Self::from_big(b.recip())),
        }
    }

    fn parse_canonical(s: &str) -> Result<Self> {
        s.parse()
    }

    fn is_irreducible_poly(poly: &[Self]) -> Result<bool> {
        crate::poly::rational::is_irreducible(poly)
    }

    fn height(&self) -> u64 {
        match &self.0 {
            Repr::Small(n, d) => n.unsigned_abs().max(*d as u64),
            Repr::Big(_) => u64::MAX,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type F5 = Fp<5>;

    #[test]
    fn prime_field_inverse_and_negation() {
        for r in 1..5 {
            let a = F5::new(r);
            assert_eq!(a * a.inv().unwrap(), F5::one());
            assert_eq!(a + (-a), F5::zero());
        }
        assert_eq!(F5::from_i64(-1), F5::new(4));
        assert!(F5::zero().inv().is_none());
    }

    #[test]
    fn large_prime_residues() {
        type Big = Fp<18446744073709551557>;
        let a = Big::from_i64(-3);
        assert_eq!(a.value(), 18446744073709551557 - 3);
        assert_eq!(a * a.inv().unwrap(), Big::one());
    }

    #[test]
    fn rational_canonical_forms() {
        assert_eq!(Rational::new(2, -4).to_string(), "-1/2");
        assert_eq!("6/3".parse::<Rational>().unwrap(), Rational::from_i64(2));
        assert_eq!(Rational::new(1, 3) + Rational::new(2, 3), Rational::one());
        assert!("1/0".parse::<Rational>().is_err());
    }

    #[test]
    fn rational_spills_and_demotes() {
        let big = Rational::from_i64(i64::MAX) * Rational::from_i64(4);
        assert!(matches!(big.0, Repr::Big(_)));
        let back = big / Rational::from_i64(4);
        assert_eq!(back, Rational::from_i64(i64::MAX));
        assert!(matches!(back.0, Repr::Small(..)));
        assert_eq!(Rational::from_i64(i64::MIN).to_string(), i64::MIN.to_string());
    }
}
