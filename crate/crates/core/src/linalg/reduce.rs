use crate::scalar::Scalar;

/// Sparse row in column order.
pub type SparseRow<F> = Vec<(usize, F)>;

/// Incremental Gauss–Jordan elimination.
///
/// Rows are inserted one at a time; the stored rows always form a reduced
/// echelon basis of the span of everything inserted (pivot entries 1, zero
/// in every other pivot column). The pivot of a new row is its leftmost
/// surviving nonzero column.
#[derive(Clone, Debug)]
pub struct RowReducer<F> {
    ncols: usize,
    rows: Vec<SparseRow<F>>,
    pivot_of: Vec<Option<usize>>,
}

impl<F: Scalar> RowReducer<F> {
    pub fn new(ncols: usize) -> Self {
        RowReducer { ncols, rows: Vec::new(), pivot_of: vec![None; ncols] }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    /// Reduces `v` against the stored basis in place.
    pub fn reduce_dense(&self, v: &mut [F]) {
        for c in 0..self.ncols {
            if v[c].is_zero() {
                continue;
            }
            if let Some(p) = self.pivot_of[c] {
                let coef = v[c].clone();
                for (j, x) in &self.rows[p] {
                    v[*j] = v[*j].clone() - coef.clone() * x.clone();
                }
            }
        }
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, v: &[F]) -> bool {
        let mut w = v.to_vec();
        self.reduce_dense(&mut w);
        w.iter().all(|x| x.is_zero())
    }

    pub fn insert_dense(&mut self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.ncols, "row width");
        let mut w = v.to_vec();
        self.reduce_dense(&mut w);
        self.install(w)
    }

    pub fn insert_sparse(&mut self, row: &[(usize, F)]) -> bool {
        let mut w = vec![F::zero(); self.ncols];
        for (c, x) in row {
            w[*c] = w[*c].clone() + x.clone();
        }
        self.reduce_dense(&mut w);
        self.install(w)
    }

    fn install(&mut self, w: Vec<F>) -> bool {
        let Some(pc) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[pc].inv().expect("nonzero pivot");
        let new_row: SparseRow<F> = w
            .into_iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| (j, x * inv.clone()))
            .collect();
        for row in &mut self.rows {
            let Ok(idx) = row.binary_search_by_key(&pc, |e| e.0) else {
                continue;
            };
            let coef = row[idx].1.clone();
            *row = axpy(row, &new_row, &coef);
        }
        self.pivot_of[pc] = Some(self.rows.len());
        self.rows.push(new_row);
        true
    }

    pub fn pivot_cols(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r[0].0)
    }

    /// `(pivot column, row)` pairs in insertion order.
    pub fn pivot_rows(&self) -> impl Iterator<Item = (usize, &SparseRow<F>)> + '_ {
        self.rows.iter().map(|r| (r[0].0, r))
    }

    /// Rows sorted by pivot column, densified.
    pub fn dense_rows(&self) -> Vec<Vec<F>> {
        let mut sorted: Vec<&SparseRow<F>> = self.rows.iter().collect();
        sorted.sort_by_key(|r| r[0].0);
        sorted
            .into_iter()
            .map(|r| {
                let mut d = vec![F::zero(); self.ncols];
                for (c, x) in r {
                    d[*c] = x.clone();
                }
                d
            })
            .collect()
    }

    /// Kernel basis of the inserted rows.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        (0..self.ncols)
            .filter(|&c| self.pivot_of[c].is_none())
            .map(|free| {
                let mut v = vec![F::zero(); self.ncols];
                v[free] = F::one();
                for row in &self.rows {
                    if let Ok(idx) = row.binary_search_by_key(&free, |e| e.0) {
                        v[row[0].0] = -row[idx].1.clone();
                    }
                }
                v
            })
            .collect()
    }
}

/// `a - coef * b` for sparse rows.
fn axpy<F: Scalar>(a: &SparseRow<F>, b: &SparseRow<F>, coef: &F) -> SparseRow<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cb = b.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            out.push((cb, -(coef.clone() * b[j].1.clone())));
            j += 1;
        } else {
            let v = a[i].1.clone() - coef.clone() * b[j].1.clone();
            if !v.is_zero() {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
