//! Simple extensions `K = k[x]/(p)` of a base field, their `k`-automorphisms,
//! and the separability idempotent of `K ⊗_k K`.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly;
use crate::scalar::Scalar;

/// An element of a [`FieldTower`]: coordinates in the power basis
/// `1, α, …, α^(n-1)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FieldElem<F> {
    coeffs: Vec<F>,
    key: u64,
}

impl<F: Scalar> FieldElem<F> {
    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// A base field together with one simple extension and a verified list of
/// automorphisms (images of the generator).
#[derive(Clone, Debug)]
pub struct FieldTower<F> {
    min_poly: Vec<F>,
    gen_name: String,
    automorphisms: Vec<FieldElem<F>>,
    normal: bool,
    key: u64,
    /// `α^k` reduced, for `k < 2n - 1`.
    powers: Vec<Vec<F>>,
}

impl<F: Scalar> PartialEq for FieldTower<F> {
    fn eq(&self, other: &Self) -> bool {
        self.min_poly == other.min_poly && self.automorphisms == other.automorphisms
    }
}

impl<F: Scalar> Eq for FieldTower<F> {}

fn tower_key<F: Scalar>(min_poly: &[F]) -> u64 {
    let mut h = DefaultHasher::new();
    F::base_label().hash(&mut h);
    for c in min_poly {
        c.to_canonical().hash(&mut h);
    }
    h.finish()
}

impl<F: Scalar> FieldTower<F> {
    /// Validates `min_poly` (monic, irreducible) and the automorphism images.
    ///
    /// Over a prime field an empty image list is replaced by the Frobenius
    /// powers `α ↦ α^(p^j)`. Over the rationals an empty list means the
    /// identity only.
    pub fn new(
        min_poly: Vec<F>,
        gen_name: impl Into<String>,
        automorphism_images: Vec<Vec<F>>,
    ) -> Result<Self> {
        let min_poly = poly::trim(min_poly);
        let n = match poly::degree(&min_poly) {
            None | Some(0) => return Err(Error::ConstantPolynomial),
            Some(n) => n,
        };
        if !min_poly[n].is_one() {
            return Err(Error::NotMonic);
        }
        if !F::is_irreducible_poly(&min_poly)? {
            return Err(Error::NotIrreducible);
        }
        let key = tower_key(&min_poly);
        let mut powers = Vec::with_capacity(2 * n);
        let mut cur = vec![F::zero(); n];
        cur[0] = F::one();
        for _ in 0..(2 * n).max(2) {
            powers.push(cur.clone());
            cur = times_generator(&cur, &min_poly);
        }
        let mut tower = FieldTower {
            min_poly,
            gen_name: gen_name.into(),
            automorphisms: Vec::new(),
            normal: false,
            key,
            powers,
        };

        let images: Vec<FieldElem<F>> = if automorphism_images.is_empty() {
            if let Some(p) = F::field_order() {
                let mut imgs = vec![tower.generator()];
                for _ in 1..n {
                    let prev = imgs.last().unwrap().clone();
                    imgs.push(tower.pow(&prev, p));
                }
                imgs
            } else {
                vec![tower.generator()]
            }
        } else {
            automorphism_images
                .into_iter()
                .map(|c| tower.elem(c))
                .collect::<Result<_>>()?
        };
        tower.install_automorphisms(images)?;
        Ok(tower)
    }

    fn install_automorphisms(&mut self, images: Vec<FieldElem<F>>) -> Result<()> {
        let n = self.degree();
        if images.len() > n {
            return Err(Error::AutomorphismInvalid(format!(
                "{} images for a degree-{n} extension",
                images.len()
            )));
        }
        for (i, b) in images.iter().enumerate() {
            if !self.eval_min_poly(b).is_zero() {
                return Err(Error::AutomorphismInvalid(format!(
                    "image {i} is not a root of the minimal polynomial"
                )));
            }
            if images[..i].contains(b) {
                return Err(Error::AutomorphismInvalid(format!("image {i} is a duplicate")));
            }
        }
        if !images.contains(&self.generator()) {
            return Err(Error::AutomorphismInvalid("identity is missing".into()));
        }
        self.automorphisms = images;
        self.normal = self.automorphisms.len() == n;
        if self.normal {
            for i in 0..n {
                for j in 0..n {
                    if self.compose_automorphisms(i, j).is_none() {
                        return Err(Error::AutomorphismInvalid(format!(
                            "composition of {i} and {j} is not listed"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn eval_min_poly(&self, b: &FieldElem<F>) -> FieldElem<F> {
        self.min_poly.iter().rev().fold(self.zero(), |acc, c| {
            self.add_unchecked(&self.mul_unchecked(&acc, b), &self.from_base(c.clone()))
        })
    }

    pub fn degree(&self) -> usize {
        self.min_poly.len() - 1
    }

    pub fn min_poly(&self) -> &[F] {
        &self.min_poly
    }

    pub fn gen_name(&self) -> &str {
        &self.gen_name
    }

    pub fn automorphisms(&self) -> &[FieldElem<F>] {
        &self.automorphisms
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }

    /// Index of the identity automorphism.
    pub fn identity_index(&self) -> usize {
        let g = self.generator();
        self.automorphisms.iter().position(|b| *b == g).unwrap()
    }

    /// Builds an element from coordinates, reducing longer inputs mod `p`.
    pub fn elem(&self, coeffs: Vec<F>) -> Result<FieldElem<F>> {
        let n = self.degree();
        let mut c = if coeffs.len() > n {
            poly::rem(&coeffs, &self.min_poly)
        } else {
            coeffs
        };
        c.resize(n, F::zero());
        Ok(FieldElem { coeffs: c, key: self.key })
    }

    pub fn zero(&self) -> FieldElem<F> {
        FieldElem { coeffs: vec![F::zero(); self.degree()], key: self.key }
    }

    pub fn one(&self) -> FieldElem<F> {
        self.from_base(F::one())
    }

    pub fn from_base(&self, c: F) -> FieldElem<F> {
        let mut e = self.zero();
        e.coeffs[0] = c;
        e
    }

    pub fn from_i64(&self, c: i64) -> FieldElem<F> {
        self.from_base(F::from_i64(c))
    }

    /// The generator `α` (equal to the constant `-p_0` in degree 1).
    pub fn generator(&self) -> FieldElem<F> {
        FieldElem { coeffs: self.powers[1].clone(), key: self.key }
    }

    pub fn power_of_generator(&self, k: usize) -> FieldElem<F> {
        match self.powers.get(k) {
            Some(p) => FieldElem { coeffs: p.clone(), key: self.key },
            None => self.pow(&self.generator(), k as u64),
        }
    }

    fn check(&self, a: &FieldElem<F>) -> Result<()> {
        if a.key != self.key || a.coeffs.len() != self.degree() {
            Err(Error::TowerMismatch)
        } else {
            Ok(())
        }
    }

    pub fn arith(&self, a: &FieldElem<F>, b: &FieldElem<F>, op: FieldOp) -> Result<FieldElem<F>> {
        self.check(a)?;
        self.check(b)?;
        Ok(match op {
            FieldOp::Add => self.add_unchecked(a, b),
            FieldOp::Sub => self.sub_unchecked(a, b),
            FieldOp::Mul => self.mul_unchecked(a, b),
            FieldOp::Div => {
                let inv = self.inv(b)?;
                self.mul_unchecked(a, &inv)
            }
        })
    }

    pub fn add(&self, a: &FieldElem<F>, b: &FieldElem<F>) -> FieldElem<F> {
        self.arith(a, b, FieldOp::Add).expect("same tower")
    }

    pub fn sub(&self, a: &FieldElem<F>, b: &FieldElem<F>) -> FieldElem<F> {
        self.arith(a, b, FieldOp::Sub).expect("same tower")
    }

    pub fn mul(&self, a: &FieldElem<F>, b: &FieldElem<F>) -> FieldElem<F> {
        self.arith(a, b, FieldOp::Mul).expect("same tower")
    }

    pub fn neg(&self, a: &FieldElem<F>) -> FieldElem<F> {
        FieldElem { coeffs: a.coeffs.iter().map(|c| -c.clone()).collect(), key: a.key }
    }

    pub fn scale(&self, a: &FieldElem<F>, s: &F) -> FieldElem<F> {
        FieldElem {
            coeffs: a.coeffs.iter().map(|c| c.clone() * s.clone()).collect(),
            key: a.key,
        }
    }

    fn add_unchecked(&self, a: &FieldElem<F>, b: &FieldElem<F>) -> FieldElem<F> {
        FieldElem {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x.clone() + y.clone()).collect(),
            key: self.key,
        }
    }

    fn sub_unchecked(&self, a: &FieldElem<F>, b: &FieldElem<F>) -> FieldElem<F> {
        FieldElem {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x.clone() - y.clone()).collect(),
            key: self.key,
        }
    }

    fn mul_unchecked(&self, a: &FieldElem<F>, b: &FieldElem<F>) -> FieldElem<F> {
        let n = self.degree();
        let mut out = vec![F::zero(); n];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x.clone() * y.clone();
                for (o, p) in out.iter_mut().zip(&self.powers[i + j]) {
                    if !p.is_zero() {
                        *o = o.clone() + xy.clone() * p.clone();
                    }
                }
            }
        }
        FieldElem { coeffs: out, key: self.key }
    }

    /// Inverse via extended Euclid on (a, p).
    pub fn inv(&self, a: &FieldElem<F>) -> Result<FieldElem<F>> {
        self.check(a)?;
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (g, s, _) = poly::xgcd(&poly::trim(a.coeffs.clone()), &self.min_poly);
        debug_assert_eq!(g.len(), 1);
        self.elem(s)
    }

    pub fn pow(&self, a: &FieldElem<F>, mut e: u64) -> FieldElem<F> {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_unchecked(&acc, &base);
            }
            base = self.mul_unchecked(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Evaluates `a` (a polynomial in `α`) at the image of `α` under the
    /// automorphism `phi`.
    pub fn apply_automorphism(&self, phi: usize, a: &FieldElem<F>) -> Result<FieldElem<F>> {
        self.check(a)?;
        let beta = self
            .automorphisms
            .get(phi)
            .ok_or(Error::IndexOutOfRange { index: phi, len: self.automorphisms.len() })?;
        Ok(a.coeffs.iter().rev().fold(self.zero(), |acc, c| {
            self.add_unchecked(&self.mul_unchecked(&acc, beta), &self.from_base(c.clone()))
        }))
    }

    /// Index of `phi ∘ psi` (apply `psi` first), if listed.
    pub fn compose_automorphisms(&self, phi: usize, psi: usize) -> Option<usize> {
        let img = self.apply_automorphism(phi, self.automorphisms.get(psi)?).ok()?;
        self.automorphisms.iter().position(|b| *b == img)
    }

    /// Matrix of multiplication by `a` in the power basis.
    pub fn mult_matrix(&self, a: &FieldElem<F>) -> Matrix<F> {
        let n = self.degree();
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            let col = self.mul_unchecked(a, &self.power_of_generator(j));
            for (i, c) in col.coeffs.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m
    }

    /// The `k`-matrix of a `K`-matrix acting on `K^cols`, in the basis
    /// `α^i e_s` indexed `i·len + s` (powers of `α` major).
    pub fn realify(&self, rows: usize, cols: usize, entries: &[FieldElem<F>]) -> Matrix<F> {
        assert_eq!(entries.len(), rows * cols, "entry count");
        let n = self.degree();
        let mut out = Matrix::zeros(n * rows, n * cols);
        for s in 0..rows {
            for t in 0..cols {
                let z = &entries[s * cols + t];
                if z.is_zero() {
                    continue;
                }
                let l = self.mult_matrix(z);
                for i in 0..n {
                    for j in 0..n {
                        let v = l.get(i, j);
                        if !v.is_zero() {
                            out.set(i * rows + s, j * cols + t, v.clone());
                        }
                    }
                }
            }
        }
        out
    }

    /// All elements of a finite extension, in lexicographic coordinate order.
    pub fn elements(&self) -> Option<Vec<FieldElem<F>>> {
        let base = crate::scalar::all_elements::<F>()?;
        let n = self.degree();
        let mut out = vec![Vec::new()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<F>| {
                    base.iter().map(move |c| {
                        let mut p = prefix.clone();
                        p.push(c.clone());
                        p
                    })
                })
                .collect();
        }
        Some(out.into_iter().map(|c| FieldElem { coeffs: c, key: self.key }).collect())
    }

    pub fn format(&self, a: &FieldElem<F>) -> String {
        let terms: Vec<String> = a
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("{c}*{}", self.gen_name),
                _ => format!("{c}*{}^{i}", self.gen_name),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// Builds the separability idempotent from `q(X) = p(X)/(X - α)`:
    /// `e = Σ_j (q_j / p'(α)) ⊗ α^j`, then verifies it.
    pub fn separability_idempotent(&self) -> Result<SeparabilityIdempotent<F>> {
        let dp = poly::derivative(&self.min_poly);
        if poly::gcd(&self.min_poly, &dp).len() != 1 {
            return Err(Error::NotSeparable);
        }
        let n = self.degree();
        let alpha = self.generator();
        // synthetic division of p(X) by (X - α) over K
        let mut q = vec![self.zero(); n];
        q[n - 1] = self.from_base(self.min_poly[n].clone());
        for k in (1..n).rev() {
            q[k - 1] =
                self.add_unchecked(&self.from_base(self.min_poly[k].clone()), &self.mul_unchecked(&alpha, &q[k]));
        }
        let dp_alpha = dp.iter().rev().fold(self.zero(), |acc, c| {
            self.add_unchecked(&self.mul_unchecked(&acc, &alpha), &self.from_base(c.clone()))
        });
        let dp_inv = self.inv(&dp_alpha)?;
        let mut coeffs = vec![vec![F::zero(); n]; n];
        for (j, qj) in q.iter().enumerate() {
            let c = self.mul_unchecked(qj, &dp_inv);
            for (a, v) in c.coeffs.into_iter().enumerate() {
                coeffs[a][j] = v;
            }
        }
        let e = SeparabilityIdempotent { coeffs };
        e.verify(self)?;
        Ok(e)
    }

    /// Product in `K ⊗_k K`, elements as `n × n` coefficient arrays
    /// (entry `(a, b)` is the coefficient of `α^a ⊗ α^b`).
    pub fn tensor_mul(&self, x: &[Vec<F>], y: &[Vec<F>]) -> Vec<Vec<F>> {
        let n = self.degree();
        let mut out = vec![vec![F::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                if x[i][j].is_zero() {
                    continue;
                }
                for k in 0..n {
                    for l in 0..n {
                        if y[k][l].is_zero() {
                            continue;
                        }
                        let c = x[i][j].clone() * y[k][l].clone();
                        let left = &self.powers[i + k];
                        let right = &self.powers[j + l];
                        for (a, la) in left.iter().enumerate() {
                            if la.is_zero() {
                                continue;
                            }
                            for (b, rb) in right.iter().enumerate() {
                                if !rb.is_zero() {
                                    out[a][b] = out[a][b].clone() + c.clone() * la.clone() * rb.clone();
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// Multiplication map `K ⊗ K → K`.
    pub fn tensor_mu(&self, x: &[Vec<F>]) -> FieldElem<F> {
        let n = self.degree();
        let mut out = self.zero();
        for (a, row) in x.iter().enumerate().take(n) {
            for (b, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    let p = self.power_of_generator(a + b);
                    out = self.add_unchecked(&out, &self.scale(&p, c));
                }
            }
        }
        out
    }
}

/// `α^k` given `α^(k-1)`, reduced modulo the monic `p`.
fn times_generator<F: Scalar>(cur: &[F], p: &[F]) -> Vec<F> {
    let n = p.len() - 1;
    let mut next = vec![F::zero(); n];
    let top = cur[n - 1].clone();
    for i in (1..n).rev() {
        next[i] = cur[i - 1].clone();
    }
    for (i, pi) in p.iter().enumerate().take(n) {
        next[i] = next[i].clone() - top.clone() * pi.clone();
    }
    next
}

/// The idempotent `e ∈ K ⊗_k K` with `μ(e) = 1` and `(x⊗1)e = (1⊗x)e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparabilityIdempotent<F> {
    coeffs: Vec<Vec<F>>,
}

impl<F: Scalar> SeparabilityIdempotent<F> {
    /// Entry `(i, j)`: coefficient of `α^i ⊗ α^j`.
    pub fn coeffs(&self) -> &[Vec<F>] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, j: usize) -> &F {
        &self.coeffs[i][j]
    }

    /// Checks `e·e = e`, `μ(e) = 1` and `(α⊗1)e = (1⊗α)e`.
    pub fn verify(&self, tower: &FieldTower<F>) -> Result<()> {
        let n = tower.degree();
        if tower.tensor_mul(&self.coeffs, &self.coeffs) != self.coeffs {
            return Err(Error::IdempotentCheckFailed("e*e != e".into()));
        }
        if tower.tensor_mu(&self.coeffs) != tower.one() {
            return Err(Error::IdempotentCheckFailed("mu(e) != 1".into()));
        }
        let mut left = vec![vec![F::zero(); n]; n];
        let mut right = vec![vec![F::zero(); n]; n];
        if n > 1 {
            left[1][0] = F::one();
            right[0][1] = F::one();
        } else {
            let a = tower.generator().coeffs[0].clone();
            left[0][0] = a.clone();
            right[0][0] = a;
        }
        if tower.tensor_mul(&left, &self.coeffs) != tower.tensor_mul(&right, &self.coeffs) {
            return Err(Error::IdempotentCheckFailed("(a⊗1)e != (1⊗a)e".into()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};
    use crate::scalar::{Fp, Rational};

    type Q = Rational;
    type F2 = Fp<2>;

    fn q(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| Q::from_i64(x)).collect()
    }

    pub(crate) fn gaussian() -> FieldTower<Q> {
        FieldTower::new(q(&[1, 0, 1]), "i", vec![q(&[0, 1]), q(&[0, -1])]).unwrap()
    }

    #[test]
    fn make_tower_examples() {
        let g = gaussian();
        assert!(g.is_normal());
        assert_eq!(g.degree(), 2);

        let cbrt = FieldTower::new(q(&[-2, 0, 0, 1]), "a", vec![q(&[0, 1])]).unwrap();
        assert!(!cbrt.is_normal());

        let f4 = FieldTower::<F2>::new(vec![F2::new(1), F2::new(1), F2::new(1)], "w", vec![]).unwrap();
        assert_eq!(f4.automorphisms().len(), 2);
        assert!(f4.is_normal());
    }

    #[test]
    fn make_tower_errors() {
        assert_eq!(FieldTower::new(q(&[-1, 0, 1]), "x", vec![]).unwrap_err(), Error::NotIrreducible);
        assert_eq!(FieldTower::new(q(&[1, 0, 2]), "x", vec![]).unwrap_err(), Error::NotMonic);
        assert!(matches!(
            FieldTower::new(q(&[1, 0, 1]), "i", vec![q(&[0, 1]), q(&[1, 1])]),
            Err(Error::AutomorphismInvalid(_))
        ));
        assert!(matches!(
            FieldTower::new(q(&[1, 0, 1]), "i", vec![q(&[0, 1]), q(&[0, 1])]),
            Err(Error::AutomorphismInvalid(_))
        ));
    }

    #[test]
    fn arithmetic_examples() {
        let g = gaussian();
        let i = g.generator();
        assert_eq!(g.mul(&i, &i), g.from_i64(-1));

        let cbrt = FieldTower::new(q(&[-2, 0, 0, 1]), "a", vec![]).unwrap();
        let a = cbrt.generator();
        let a2 = cbrt.mul(&a, &a);
        assert_eq!(cbrt.mul(&a, &a2), cbrt.from_i64(2));

        let f4 = FieldTower::<F2>::new(vec![F2::new(1), F2::new(1), F2::new(1)], "w", vec![]).unwrap();
        let w = f4.generator();
        assert_eq!(f4.arith(&w, &w, FieldOp::Div).unwrap(), f4.one());
        assert_eq!(f4.arith(&w, &f4.zero(), FieldOp::Div).unwrap_err(), Error::DivisionByZero);
        assert_eq!(g.arith(&i, &w_as_q_mismatch(), FieldOp::Add).unwrap_err(), Error::TowerMismatch);
    }

    fn w_as_q_mismatch() -> FieldElem<Q> {
        let other = FieldTower::new(q(&[2, 0, 1]), "s", vec![]).unwrap();
        other.generator()
    }

    #[test]
    fn automorphism_examples() {
        let g = gaussian();
        let z = g.elem(q(&[3, 2])).unwrap();
        assert_eq!(g.apply_automorphism(1, &z).unwrap(), g.elem(q(&[3, -2])).unwrap());
        assert_eq!(g.apply_automorphism(0, &z).unwrap(), z);
        assert!(matches!(g.apply_automorphism(2, &z), Err(Error::IndexOutOfRange { .. })));

        // Frobenius on F_4 agrees with squaring on every element.
        let f4 = FieldTower::<F2>::new(vec![F2::new(1), F2::new(1), F2::new(1)], "w", vec![]).unwrap();
        for x in f4.elements().unwrap() {
            assert_eq!(f4.apply_automorphism(1, &x).unwrap(), f4.mul(&x, &x));
        }
        let w = f4.generator();
        assert_eq!(f4.apply_automorphism(1, &w).unwrap(), f4.elem(vec![F2::new(1), F2::new(1)]).unwrap());
    }

    #[test]
    fn gaussian_idempotent_closed_form() {
        let g = gaussian();
        let e = g.separability_idempotent().unwrap();
        let half = Q::new(1, 2);
        assert_eq!(e.coeffs(), &[vec![half.clone(), Q::zero()], vec![Q::zero(), -half]]);
    }

    #[test]
    fn degree_one_idempotent() {
        let t = FieldTower::new(q(&[-3, 1]), "c", vec![]).unwrap();
        let e = t.separability_idempotent().unwrap();
        assert_eq!(e.coeffs(), &[vec![Q::one()]]);
    }

    /// Independent check over F_4: enumerate all 16 elements of F_4 ⊗ F_4 and
    /// confirm exactly one satisfies the three idempotent conditions.
    #[test]
    fn f4_idempotent_is_the_unique_one() {
        let f4 = FieldTower::<F2>::new(vec![F2::new(1), F2::new(1), F2::new(1)], "w", vec![]).unwrap();
        let e = f4.separability_idempotent().unwrap();
        let mut hits = Vec::new();
        for bits in 0u32..16 {
            let x: Vec<Vec<F2>> = (0..2)
                .map(|i| (0..2).map(|j| F2::new(((bits >> (2 * i + j)) & 1) as u64)).collect())
                .collect();
            let cand = SeparabilityIdempotent { coeffs: x };
            if cand.verify(&f4).is_ok() {
                hits.push(cand);
            }
        }
        assert_eq!(hits, vec![e]);
    }
}
