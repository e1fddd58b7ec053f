//! Dense row reduction over `Z/p`.

use super::field::PrimeField;

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(field: PrimeField, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [u32] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: u32) {
        self.data[i * self.cols + j] = x;
    }

    pub fn push_row(&mut self, row: &[u32]) {
        assert_eq!(row.len(), self.cols);
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[u32]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    /// Rows `i` and `j` (`i < j`) borrowed together.
    fn two_rows(&mut self, i: usize, j: usize) -> (&mut [u32], &mut [u32]) {
        debug_assert!(i < j);
        let c = self.cols;
        let (lo, hi) = self.data.split_at_mut(j * c);
        (&mut lo[i * c..(i + 1) * c], &mut hi[..c])
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            let (lo, hi) = if i < j { (i, j) } else { (j, i) };
            let (a, b) = self.two_rows(lo, hi);
            a.swap_with_slice(b);
        }
    }

    /// Gaussian elimination to echelon form with unit pivots. With `full`,
    /// entries above pivots are cleared too (reduced echelon form).
    /// Stops early once `stop_at` pivots are found. Returns pivot columns.
    fn eliminate(&mut self, full: bool, stop_at: usize) -> Vec<usize> {
        let f = self.field;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows || pivots.len() >= stop_at {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = f.inv(self.get(r, c));
            f.scale(&mut self.row_mut(r)[c..], inv);
            let start = if full { 0 } else { r + 1 };
            for i in start..self.rows {
                if i == r {
                    continue;
                }
                let e = self.get(i, c);
                if e == 0 {
                    continue;
                }
                let (src, dst) = if i < r {
                    let (a, b) = self.two_rows(i, r);
                    (b, a)
                } else {
                    self.two_rows(r, i)
                };
                f.axpy(&mut dst[c..], &src[c..], f.neg(e));
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate(false, usize::MAX).len()
    }

    /// `min(rank, cap)`, cheaper when the cap is hit early.
    pub fn rank_capped(&self, cap: usize) -> usize {
        self.clone().eliminate(false, cap).len()
    }

    /// Reduced row echelon form in place; drops zero rows. Returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let pivots = self.eliminate(true, usize::MAX);
        self.rows = pivots.len();
        self.data.truncate(self.rows * self.cols);
        pivots
    }

    /// Basis of `{x : self * x = 0}` as the rows of the result.
    pub fn nullspace(&self) -> Matrix {
        let mut m = self.clone();
        let pivots = m.rref();
        let f = self.field;
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut out = Matrix::zeros(f, 0, self.cols);
        let mut v = vec![0u32; self.cols];
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            v.fill(0);
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.get(r, free));
            }
            out.push_row(&v);
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }
}

/// Incrementally built row space in echelon form.
///
/// Every stored row has a unit pivot and is zero at the pivots of the rows
/// stored before it, so reducing in insertion order is exact.
#[derive(Debug, Clone)]
pub struct Echelon {
    field: PrimeField,
    cols: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: PrimeField, cols: usize) -> Self {
        Echelon {
            field,
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Reduce `v` against the stored rows; returns the coefficients used.
    pub fn reduce_with_coeffs(&self, v: &mut [u32]) -> Vec<u32> {
        let f = self.field;
        let mut coeffs = vec![0; self.rows.len()];
        for (k, (row, &pc)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let e = v[pc];
            if e != 0 {
                coeffs[k] = e;
                f.axpy(v, row, f.neg(e));
            }
        }
        coeffs
    }

    pub fn reduce(&self, v: &mut [u32]) {
        let f = self.field;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let e = v[pc];
            if e != 0 {
                f.axpy(v, row, f.neg(e));
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Add `v` to the span; `true` if the rank grew.
    pub fn insert(&mut self, mut v: Vec<u32>) -> bool {
        debug_assert_eq!(v.len(), self.cols);
        self.reduce(&mut v);
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(v[pc]);
        self.field.scale(&mut v, inv);
        self.rows.push(v);
        self.pivots.push(pc);
        true
    }

    pub fn into_matrix(self) -> Matrix {
        Matrix::from_rows(self.field, self.cols, &self.rows)
    }
}
