//! Polynomials over `Z/p` with a runtime modulus, as `u64` residues low to
//! high. Used for irreducibility over prime fields and for the modular
//! degree sieve over the rationals.

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn addm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn subm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + p as u128 - b as u128) % p as u128) as u64
}

fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulm(acc, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    acc
}

fn invm(a: u64, p: u64) -> u64 {
    powm(a, p - 2, p)
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r = trim(a.to_vec());
    let df = f.len() - 1;
    let inv = invm(f[df], p);
    while r.len() > df {
        let dr = r.len() - 1;
        let c = mulm(r[dr], inv, p);
        for (j, &fj) in f.iter().enumerate() {
            let k = dr - df + j;
            r[k] = subm(r[k], mulm(c, fj, p), p);
        }
        r = trim(r);
    }
    r
}

fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = addm(out[i + j], mulm(x, y, p), p);
        }
    }
    trim(out)
}

fn mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    rem(&mul(a, b, p), f, p)
}

fn powmod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = rem(&[1], f, p);
    let mut b = rem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(&acc, &b, f, p);
        }
        b = mulmod(&b, &b, f, p);
        e >>= 1;
    }
    acc
}

fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| subm(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p))
            .collect(),
    )
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    if let Some(&lead) = x.last() {
        let inv = invm(lead, p);
        x.iter_mut().for_each(|c| *c = mulm(*c, inv, p));
    }
    x
}

fn divexact(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut r = trim(a.to_vec());
    let df = f.len() - 1;
    let inv = invm(f[df], p);
    let mut q = vec![0u64; r.len().saturating_sub(df)];
    while r.len() > df {
        let dr = r.len() - 1;
        let c = mulm(r[dr], inv, p);
        q[dr - df] = c;
        for (j, &fj) in f.iter().enumerate() {
            let k = dr - df + j;
            r[k] = subm(r[k], mulm(c, fj, p), p);
        }
        r = trim(r);
    }
    debug_assert!(r.is_empty());
    trim(q)
}

fn derivative(a: &[u64], p: u64) -> Vec<u64> {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulm(c, (i as u64) % p, p))
            .collect(),
    )
}

/// Ben-Or: `f` (leading coefficient nonzero mod p) is irreducible iff it has
/// no common factor with `x^(p^j) - x` for `1 <= j <= deg/2`.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let f = trim(f.iter().map(|c| c % p).collect());
    let n = match f.len() {
        0 | 1 => return false,
        l => l - 1,
    };
    if n == 1 {
        return true;
    }
    let x = vec![0, 1];
    let mut h = x.clone();
    for _ in 1..=n / 2 {
        h = powmod(&h, p, &f, p);
        let g = gcd(&sub(&h, &x, p), &f, p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// Degrees of the irreducible factors of `f` mod `p`, or `None` when `p`
/// divides the leading coefficient or `f` is not squarefree mod `p`.
pub fn degree_pattern(f: &[u64], p: u64) -> Option<Vec<usize>> {
    let f = trim(f.iter().map(|c| c % p).collect());
    if f.len() < 2 {
        return None;
    }
    let df = derivative(&f, p);
    if df.is_empty() || gcd(&f, &df, p).len() != 1 {
        return None;
    }
    let x = vec![0, 1];
    let mut rest = f;
    let mut h = x.clone();
    let mut degrees = Vec::new();
    let mut d = 0;
    while rest.len() > 1 {
        d += 1;
        if 2 * d > rest.len() - 1 {
            degrees.push(rest.len() - 1);
            break;
        }
        h = powmod(&h, p, &rest, p);
        let g = gcd(&sub(&h, &x, p), &rest, p);
        let dg = g.len() - 1;
        if dg > 0 {
            degrees.extend(std::iter::repeat_n(d, dg / d));
            rest = divexact(&rest, &g, p);
            h = rem(&h, &rest, p);
        }
    }
    degrees.sort_unstable();
    Some(degrees)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ben_or_small_cases() {
        // x^2 + x + 1 over F_2 is irreducible, x^2 + 1 = (x+1)^2 is not.
        assert!(is_irreducible(&[1, 1, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1], 2));
        // x^3 - 2 over F_7: 2 is not a cube mod 7.
        assert!(is_irreducible(&[5, 0, 0, 1], 7));
        // x^4 + x + 1 over F_2 is irreducible; x^4 + x^2 + 1 = (x^2+x+1)^2.
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
    }

    #[test]
    fn distinct_degree_pattern() {
        // x^3 - 2 mod 5 = (x - 3)(x^2 + 3x + 4)
        assert_eq!(degree_pattern(&[3, 0, 0, 1], 5), Some(vec![1, 2]));
        // (x^2+1)(x^2+x+1) mod 3: x^2+1 irreducible mod 3, x^2+x+1 = (x-1)^2.
        assert_eq!(degree_pattern(&[1, 1, 2, 1, 1], 3), None);
    }
}
