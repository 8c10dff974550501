use crate::linalg::RowReducer;
use crate::scalar::Scalar;

/// Coordinates with respect to a fixed linearly independent list of vectors.
///
/// Internally the vectors are reduced together with an identity tag block,
/// so every reduced row remembers which combination of inputs produced it.
#[derive(Clone, Debug)]
pub struct SpanCoords<F> {
    len: usize,
    count: usize,
    /// (pivot column, combination of inputs giving the reduced row)
    rows: Vec<(usize, Vec<F>)>,
    reducer: RowReducer<F>,
}

impl<F: Scalar> SpanCoords<F> {
    /// `None` if the vectors are dependent.
    pub fn new(vectors: &[Vec<F>], len: usize) -> Option<Self> {
        let count = vectors.len();
        let mut red = RowReducer::new(len + count);
        for (a, v) in vectors.iter().enumerate() {
            let mut row = v.clone();
            row.extend((0..count).map(|b| if a == b { F::one() } else { F::zero() }));
            red.insert_dense(&row);
        }
        let mut rows = Vec::new();
        for (pc, row) in red.pivot_rows() {
            if pc >= len {
                return None;
            }
            let mut tag = vec![F::zero(); count];
            for (c, x) in row {
                if *c >= len {
                    tag[c - len] = x.clone();
                }
            }
            rows.push((pc, tag));
        }
        let mut reducer = RowReducer::new(len);
        for v in vectors {
            reducer.insert_dense(v);
        }
        Some(SpanCoords { len, count, rows, reducer })
    }

    pub fn dim(&self) -> usize {
        self.count
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reducer.contains(v)
    }

    /// Coefficients `c` with `v = Σ c_a vectors[a]`, or `None` off the span.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        assert_eq!(v.len(), self.len, "vector length");
        if !self.contains(v) {
            return None;
        }
        let mut c = vec![F::zero(); self.count];
        for (pc, tag) in &self.rows {
            let x = &v[*pc];
            if x.is_zero() {
                continue;
            }
            for (ci, t) in c.iter_mut().zip(tag) {
                if !t.is_zero() {
                    *ci = ci.clone() + x.clone() * t.clone();
                }
            }
        }
        Some(c)
    }
}
