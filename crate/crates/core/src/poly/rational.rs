//! Irreducibility of rational polynomials of degree at most 6.
//!
//! Two stages. A modular sieve factors the polynomial modulo small primes
//! (distinct-degree factorization) and intersects the sets of degrees a
//! rational factor could have; an empty intersection proves irreducibility.
//! Otherwise Kronecker's method searches integer factors of degree at most 3
//! by interpolating divisors of values at integer points, discarding
//! candidates above the Mignotte coefficient bound.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly;
use crate::scalar::{Rational, Scalar};

const MAX_DEGREE: usize = 6;
const SIEVE_PRIMES: usize = 60;
const MAX_CANDIDATES: u64 = 20_000_000;

pub fn is_irreducible(poly_in: &[Rational]) -> Result<bool> {
    let f = poly::trim(poly_in.to_vec());
    let n = match poly::degree(&f) {
        None | Some(0) => return Ok(false),
        Some(1) => return Ok(true),
        Some(n) => n,
    };
    if n > MAX_DEGREE {
        return Err(Error::UnsupportedDegree(n));
    }
    let ints = primitive_integer(&f);

    let mut possible: BTreeSet<usize> = (1..n).collect();
    for p in small_primes(SIEVE_PRIMES) {
        let residues: Vec<u64> = ints
            .iter()
            .map(|c| c.mod_floor(&BigInt::from(p)).to_u64().unwrap())
            .collect();
        let Some(pattern) = poly::modp::degree_pattern(&residues, p) else {
            continue;
        };
        let sums = subset_sums(&pattern);
        possible.retain(|d| sums.contains(d));
        if possible.is_empty() {
            return Ok(true);
        }
    }

    let degrees: Vec<usize> = possible.into_iter().filter(|&d| 2 * d <= n).collect();
    for k in degrees {
        if find_factor(&ints, k)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Clears denominators and content.
fn primitive_integer(f: &[Rational]) -> Vec<BigInt> {
    let lcm = f.iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denom()));
    let ints: Vec<BigInt> = f
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &content).collect()
}

fn small_primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut c = 3u64;
    while out.len() < count {
        if (2..).take_while(|d| d * d <= c).all(|d| c % d != 0) {
            out.push(c);
        }
        c += 2;
    }
    out
}

fn subset_sums(parts: &[usize]) -> BTreeSet<usize> {
    let mut sums = BTreeSet::from([0]);
    for &p in parts {
        let next: Vec<usize> = sums.iter().map(|s| s + p).collect();
        sums.extend(next);
    }
    sums
}

fn eval_int(f: &[BigInt], t: i64) -> BigInt {
    let t = BigInt::from(t);
    f.iter().rev().fold(BigInt::zero(), |acc, c| acc * &t + c)
}

fn divisors(v: &BigInt) -> Result<Vec<i64>> {
    let mut n = v
        .abs()
        .to_u64()
        .filter(|&n| n < 1_000_000_000_000_000)
        .ok_or_else(|| Error::Inconclusive("evaluation too large to factor".into()))?;
    let mut primes: Vec<(u64, u32)> = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        if e > 0 {
            primes.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        primes.push((n, 1));
    }
    let mut divs = vec![1i64];
    for (p, e) in primes {
        let mut next = Vec::new();
        for &x in &divs {
            let mut pw = 1i64;
            for _ in 0..=e {
                next.push(x * pw);
                pw *= p as i64;
            }
        }
        divs = next;
    }
    divs.sort_unstable();
    Ok(divs)
}

/// Euclidean-norm based bound on the coefficients of a degree-`k` integer
/// factor.
fn mignotte_bound(f: &[BigInt], k: usize) -> BigInt {
    let norm_sq: BigInt = f.iter().map(|c| c * c).sum();
    let norm = norm_sq.sqrt() + BigInt::one();
    norm << k
}

/// Searches an integer factor of exact degree `k`; returns it low to high.
fn find_factor(f: &[BigInt], k: usize) -> Result<Option<Vec<BigInt>>> {
    // candidate points ordered by how cheap their divisor lists are
    let mut points: Vec<(usize, i64, Vec<i64>)> = Vec::new();
    for t in (0..=12).flat_map(|t: i64| if t == 0 { vec![0] } else { vec![t, -t] }) {
        let v = eval_int(f, t);
        if v.is_zero() {
            // rational root t, so (x - t) divides f; callers try k = 1 first
            if k == 1 {
                return Ok(Some(vec![BigInt::from(-t), BigInt::one()]));
            }
            continue;
        }
        let divs = divisors(&v)?;
        points.push((divs.len(), t, divs));
    }
    points.sort();
    points.truncate(k + 1);
    if points.len() < k + 1 {
        return Err(Error::Inconclusive("not enough evaluation points".into()));
    }

    let xs: Vec<Rational> = points.iter().map(|p| Rational::from_i64(p.1)).collect();
    let basis = lagrange_basis(&xs);
    let bound = mignotte_bound(f, k);
    let f_rat: Vec<Rational> = f
        .iter()
        .map(|c| Rational::from_big(num_rational::BigRational::from_integer(c.clone())))
        .collect();

    let total: u64 = points
        .iter()
        .enumerate()
        .map(|(i, p)| p.2.len() as u64 * if i == 0 { 1 } else { 2 })
        .product();
    if total > MAX_CANDIDATES {
        return Err(Error::Inconclusive(format!(
            "{total} interpolation candidates exceed the search budget"
        )));
    }

    let choices: Vec<Vec<i64>> = points
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let mut c = p.2.clone();
            if i > 0 {
                c.extend(p.2.iter().map(|d| -d));
            }
            c
        })
        .collect();
    let mut idx = vec![0usize; k + 1];
    loop {
        let mut g = vec![Rational::zero(); k + 1];
        for (j, &i) in idx.iter().enumerate() {
            let v = Rational::from_i64(choices[j][i]);
            for (c, b) in g.iter_mut().zip(&basis[j]) {
                *c = c.clone() + v.clone() * b.clone();
            }
        }
        if poly::degree(&g) == Some(k)
            && g.iter().all(|c| c.is_integer() && c.numer().abs() <= bound)
            && poly::rem(&f_rat, &g).is_empty()
        {
            return Ok(Some(g.iter().map(|c| c.numer()).collect()));
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return Ok(None);
            }
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Lagrange basis polynomials (coefficient vectors of length `xs.len()`).
fn lagrange_basis(xs: &[Rational]) -> Vec<Vec<Rational>> {
    let n = xs.len();
    (0..n)
        .map(|j| {
            let mut num = vec![Rational::one()];
            let mut den = Rational::one();
            for (m, xm) in xs.iter().enumerate() {
                if m == j {
                    continue;
                }
                num = poly::mul(&num, &[-xm.clone(), Rational::one()]);
                den = den * (xs[j].clone() - xm.clone());
            }
            let inv = den.inv().expect("distinct points");
            let mut out = poly::scale(&num, &inv);
            out.resize(n, Rational::zero());
            out
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_i64(x)).collect()
    }

    #[test]
    fn classic_cases() {
        assert!(is_irreducible(&q(&[1, 0, 1])).unwrap());
        assert!(is_irreducible(&q(&[-2, 0, 0, 1])).unwrap());
        assert!(!is_irreducible(&q(&[-1, 0, 1])).unwrap());
        assert!(!is_irreducible(&q(&[-8, 0, 0, 1])).unwrap());
    }

    #[test]
    fn reducible_without_rational_roots() {
        // (x^2 + 1)(x^2 + 2)
        assert!(!is_irreducible(&q(&[2, 0, 3, 0, 1])).unwrap());
        // (x^3 - 2)(x^3 - 3)
        assert!(!is_irreducible(&q(&[6, 0, 0, -5, 0, 0, 1])).unwrap());
    }

    #[test]
    fn sextic_with_s3_galois_group() {
        // x^6 + 108, minimal polynomial of a generator of Q(cbrt 2, omega)
        // up to scaling; every Frobenius has cycle type 1^6, 2^3 or 3^2.
        assert!(is_irreducible(&q(&[108, 0, 0, 0, 0, 0, 1])).unwrap());
        // x^4 + 1 is reducible mod every prime but irreducible over Q.
        assert!(is_irreducible(&q(&[1, 0, 0, 0, 1])).unwrap());
    }

    #[test]
    fn degree_limit() {
        assert_eq!(
            is_irreducible(&q(&[1, 0, 0, 0, 0, 0, 0, 1])),
            Err(Error::UnsupportedDegree(7))
        );
    }
}
