//! Dense exact linear algebra over the scalar field. Sized for the small
//! systems circuit assembly produces, so no pivoting strategy beyond
//! "first nonzero".

use crate::kfield::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub(crate) fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub(crate) fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix row");
            data.extend(row);
        }
        Mat {
            rows: nrows,
            cols,
            data,
        }
    }

    pub(crate) fn rows(&self) -> usize {
        self.rows
    }

    pub(crate) fn cols(&self) -> usize {
        self.cols
    }

    pub(crate) fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub(crate) fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub(crate) fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub(crate) fn into_row_vecs(self) -> Vec<Vec<Scalar>> {
        let mut out = Vec::with_capacity(self.rows);
        let mut it = self.data.into_iter();
        for _ in 0..self.rows {
            out.push(it.by_ref().take(self.cols).collect());
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// In-place Gauss-Jordan reduction. Afterwards the matrix is in reduced
    /// row echelon form with zero rows dropped; returns the pivot column of
    /// each surviving row (strictly increasing).
    pub(crate) fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.at(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.at(r, c).inv().expect("pivot is nonzero");
            for j in c..self.cols {
                let v = &inv * self.at(r, j);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || self.at(i, c).is_zero() {
                    continue;
                }
                let f = self.at(i, c).clone();
                // Columns left of c are already zero in row r.
                for j in c..self.cols {
                    let v = self.at(i, j) - &(&f * self.at(r, j));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        self.rows = r;
        self.data.truncate(r * self.cols);
        pivots
    }

    /// Canonical RREF basis of the kernel {x : self · x = 0}.
    pub(crate) fn nullspace(&self) -> Mat {
        let mut a = self.clone();
        let pivots = a.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut rows = Vec::new();
        for f in 0..self.cols {
            if is_pivot[f] {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[f] = Scalar::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -a.at(i, f);
            }
            rows.push(v);
        }
        let mut m = Mat::from_rows(rows, self.cols);
        m.rref();
        m
    }

    /// One solution of `self · x = b` (free coordinates zero), or None if
    /// the system is inconsistent.
    pub(crate) fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "rhs length");
        let mut aug = Mat::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = aug.at(i, self.cols).clone();
        }
        Some(x)
    }
}
