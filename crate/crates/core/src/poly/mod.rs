//! Dense univariate polynomials over a [`Scalar`], coefficients low to high.
//!
//! The zero polynomial is the empty vector; every function returns trimmed
//! output.

pub mod modp;
pub mod rational;

use crate::scalar::Scalar;

pub fn trim<F: Scalar>(mut p: Vec<F>) -> Vec<F> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Degree, `None` for the zero polynomial.
pub fn degree<F: Scalar>(p: &[F]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn add<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x.clone() + y.clone(),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        })
        .collect();
    trim(out)
}

pub fn neg<F: Scalar>(a: &[F]) -> Vec<F> {
    a.iter().map(|c| -c.clone()).collect()
}

pub fn sub<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    add(a, &neg(b))
}

pub fn scale<F: Scalar>(a: &[F], s: &F) -> Vec<F> {
    trim(a.iter().map(|c| c.clone() * s.clone()).collect())
}

pub fn mul<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![F::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    trim(out)
}

/// Quotient and remainder. Panics on a zero divisor.
pub fn divrem<F: Scalar>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>) {
    let db = degree(b).expect("polynomial division by zero");
    let lead_inv = b[db].inv().expect("nonzero leading coefficient");
    let mut rem = trim(a.to_vec());
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![F::zero(); rem.len() - db];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let c = rem[dr].clone() * lead_inv.clone();
        let shift = dr - db;
        for (j, bj) in b.iter().enumerate().take(db + 1) {
            rem[shift + j] = rem[shift + j].clone() - c.clone() * bj.clone();
        }
        quot[shift] = c;
        rem = trim(rem);
    }
    (trim(quot), rem)
}

pub fn rem<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    divrem(a, b).1
}

pub fn make_monic<F: Scalar>(a: &[F]) -> Vec<F> {
    match degree(a) {
        None => Vec::new(),
        Some(d) => {
            let inv = a[d].inv().expect("nonzero leading coefficient");
            scale(a, &inv)
        }
    }
}

/// Monic gcd.
pub fn gcd<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    make_monic(&x)
}

/// Extended Euclid: returns `(g, s, t)` with `s a + t b = g`, `g` monic.
pub fn xgcd<F: Scalar>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>, Vec<F>) {
    let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
    let (mut s0, mut s1) = (vec![F::one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![F::one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        let t2 = sub(&t0, &mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    match degree(&r0) {
        None => (r0, s0, t0),
        Some(d) => {
            let inv = r0[d].inv().expect("nonzero");
            (scale(&r0, &inv), scale(&s0, &inv), scale(&t0, &inv))
        }
    }
}

pub fn derivative<F: Scalar>(a: &[F]) -> Vec<F> {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.clone() * F::from_i64(i as i64))
            .collect(),
    )
}

pub fn eval<F: Scalar>(a: &[F], x: &F) -> F {
    a.iter()
        .rev()
        .fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Fp, Rational};

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_i64(x)).collect()
    }

    #[test]
    fn division_identity() {
        let a = q(&[-2, 0, 0, 1]);
        let b = q(&[1, 1]);
        let (quo, r) = divrem(&a, &b);
        assert_eq!(add(&mul(&quo, &b), &r), a);
        assert!(degree(&r).is_none_or(|d| d < 1));
    }

    #[test]
    fn xgcd_bezout() {
        let a = q(&[2, 0, 1]);
        let b = q(&[0, 1, 1]);
        let (g, s, t) = xgcd(&a, &b);
        assert_eq!(add(&mul(&s, &a), &mul(&t, &b)), g);
        assert_eq!(g, q(&[1]));
    }

    #[test]
    fn derivative_in_char_two() {
        type F2 = Fp<2>;
        let p: Vec<F2> = [1, 1, 1].iter().map(|&v| F2::new(v)).collect();
        assert_eq!(derivative(&p), vec![F2::new(1)]);
    }
}
