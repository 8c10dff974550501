use crate::error::{Error, Result};
use crate::linalg::{MPoly, Matrix};
use crate::scalar::Scalar;

/// Matrix with multivariate polynomial entries over a named variable set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix<F> {
    rows: usize,
    cols: usize,
    vars: Vec<String>,
    data: Vec<MPoly<F>>,
}

impl<F: Scalar> PolyMatrix<F> {
    pub fn new(rows: usize, cols: usize, vars: Vec<String>, data: Vec<MPoly<F>>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!("{} entries for {rows}x{cols}", data.len())));
        }
        if data.iter().any(|p| p.nvars() != vars.len()) {
            return Err(Error::ShapeMismatch("entry variable count differs".into()));
        }
        Ok(PolyMatrix { rows, cols, vars, data })
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        vars: Vec<String>,
        mut f: impl FnMut(usize, usize) -> MPoly<F>,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        PolyMatrix::new(rows, cols, vars, data).expect("entries built with the right variable count")
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn get(&self, r: usize, c: usize) -> &MPoly<F> {
        &self.data[r * self.cols + c]
    }

    pub fn eval(&self, point: &[F]) -> Matrix<F> {
        Matrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c).eval(point))
    }

    /// Rank over the rational function field, by fraction-free elimination
    /// with full pivoting (lowest total degree, then row, then column).
    pub fn symbolic_rank(&self) -> usize {
        let (n, m) = (self.rows, self.cols);
        let nv = self.vars.len();
        let mut a: Vec<Vec<MPoly<F>>> =
            (0..n).map(|r| (0..m).map(|c| self.get(r, c).clone()).collect()).collect();
        let mut prev = MPoly::constant(nv, F::one());
        let mut rank = 0;
        for k in 0..n.min(m) {
            let mut best: Option<(u32, usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(k) {
                for (j, p) in row.iter().enumerate().skip(k) {
                    if let Some(d) = p.total_degree() {
                        if best.is_none_or(|b| (d, i, j) < b) {
                            best = Some((d, i, j));
                        }
                    }
                }
            }
            let Some((_, pi, pj)) = best else {
                break;
            };
            a.swap(k, pi);
            for row in a.iter_mut() {
                row.swap(k, pj);
            }
            let pivot = a[k][k].clone();
            for i in k + 1..n {
                let aik = a[i][k].clone();
                for j in k + 1..m {
                    let num = pivot.mul(&a[i][j]).sub(&aik.mul(&a[k][j]));
                    a[i][j] = num.div_exact(&prev).expect("fraction-free step divides exactly");
                }
                a[i][k] = MPoly::zero(nv);
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }
}

/// Free function form of [`PolyMatrix::symbolic_rank`].
pub fn symbolic_rank<F: Scalar>(m: &PolyMatrix<F>) -> usize {
    m.symbolic_rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::scalar::{Fp, Rational};

    type Q = Rational;

    #[test]
    fn single_indeterminate() {
        let m = PolyMatrix::<Q>::new(1, 1, vec!["x".into()], vec![MPoly::var(1, 0)]).unwrap();
        assert_eq!(m.symbolic_rank(), 1);
    }

    #[test]
    fn generic_determinant_nonzero() {
        // ((x, y), (y, x)) has determinant x^2 - y^2, nonzero as a polynomial.
        let x = MPoly::<Q>::var(2, 0);
        let y = MPoly::<Q>::var(2, 1);
        let m = PolyMatrix::new(2, 2, vec!["x".into(), "y".into()], vec![x.clone(), y.clone(), y, x]).unwrap();
        assert_eq!(m.symbolic_rank(), 2);
        assert_eq!(m.eval(&[Q::one(), Q::one()]).rank(), 1);
    }

    #[test]
    fn symmetric_square_over_f2() {
        // over F_2, ((x, y), (y, x)) has determinant (x + y)^2: still rank 2
        type F2 = Fp<2>;
        let x = MPoly::<F2>::var(2, 0);
        let y = MPoly::<F2>::var(2, 1);
        let m = PolyMatrix::new(2, 2, vec!["x".into(), "y".into()], vec![x.clone(), y.clone(), y, x]).unwrap();
        assert_eq!(m.symbolic_rank(), 2);
    }

    #[test]
    fn rank_one_outer_product() {
        let x = MPoly::<Q>::var(2, 0);
        let y = MPoly::<Q>::var(2, 1);
        let m = PolyMatrix::new(
            2,
            2,
            vec!["x".into(), "y".into()],
            vec![x.mul(&x), x.mul(&y), y.mul(&x), y.mul(&y)],
        )
        .unwrap();
        assert_eq!(m.symbolic_rank(), 1);
    }
}
