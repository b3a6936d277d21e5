//! Dense exact matrices with deterministic Gaussian elimination.
//!
//! Everything here is pivoted on exactness and reproducibility: the reduced
//! row echelon form is canonical over the field, so kernels, solutions and
//! chosen representatives are bit-identical across runs regardless of pivot
//! row heuristics.

use super::field::{FieldSpec, Scalar};

/// Row-major dense matrix over a [`FieldSpec`]. Zero-by-k shapes are valid.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            field,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            data.extend(r);
        }
        Matrix {
            rows: nrows,
            cols: ncols,
            field,
            data,
        }
    }

    /// Test/construction helper from integer literals.
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        Self::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        debug_assert!(r < self.rows && c < self.cols);
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| self.field.is_zero(v))
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    /// Writes `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        assert!(r0 + block.rows <= self.rows && c0 + block.cols <= self.cols);
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.at(r, c).clone());
            }
        }
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let mut out = self.clone();
        for v in out.data.iter_mut() {
            *v = self.field.mul(v, s);
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (v, w) in out.data.iter_mut().zip(other.data.iter()) {
            *v = self.field.add(v, w);
        }
        out
    }

    pub fn matmul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matmul");
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let t = f.mul(a, b);
                    let cur = out.at(i, j);
                    out.set(i, j, f.add(cur, &t));
                }
            }
        }
        out
    }

    /// Vertical stack; all parts must agree on column count and field.
    pub fn vstack(parts: &[&Matrix]) -> Matrix {
        assert!(!parts.is_empty());
        let cols = parts[0].cols;
        let field = parts[0].field;
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for m in parts {
            assert_eq!(m.cols, cols);
            assert_eq!(m.field, field);
            data.extend(m.data.iter().cloned());
        }
        Matrix {
            rows,
            cols,
            field,
            data,
        }
    }

    /// Horizontal concatenation; all parts must agree on row count and field.
    pub fn hconcat(parts: &[&Matrix]) -> Matrix {
        assert!(!parts.is_empty());
        let rows = parts[0].rows;
        let field = parts[0].field;
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut c0 = 0;
        for m in parts {
            assert_eq!(m.rows, rows);
            out.set_block(0, c0, m);
            c0 += m.cols;
        }
        out
    }

    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field, row_idx.len(), col_idx.len());
        for (i, &r) in row_idx.iter().enumerate() {
            for (j, &c) in col_idx.iter().enumerate() {
                out.set(i, j, self.at(r, c).clone());
            }
        }
        out
    }

    /// Rank via forward elimination (no back-substitution).
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let f = self.field;
        let mut m = self.to_row_vecs();
        let mut r = 0;
        for c in 0..self.cols {
            if r == m.len() {
                break;
            }
            let Some(pi) = pick_pivot(&f, &m, r, c) else {
                continue;
            };
            m.swap(r, pi);
            let inv = f.inv(&m[r][c]);
            for j in c..self.cols {
                m[r][j] = f.mul(&m[r][j], &inv);
            }
            for i in (r + 1)..m.len() {
                if !f.is_zero(&m[i][c]) {
                    let factor = m[i][c].clone();
                    for j in c..self.cols {
                        let t = f.mul(&factor, &m[r][j]);
                        m[i][j] = f.sub(&m[i][j], &t);
                    }
                }
            }
            r += 1;
        }
        r
    }

    /// Canonical reduced row echelon form together with its pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        let mut m = self.to_row_vecs();
        let pivots = rref_in_place(&f, &mut m, self.cols);
        (
            Matrix::from_rows_allow_empty(f, m, self.cols),
            pivots,
        )
    }

    /// Basis of the right kernel, columns in reduced echelon form.
    ///
    /// The result has `cols() - rank()` columns and satisfies
    /// `self * kernel_basis(self) = 0`.
    pub fn kernel_basis(&self) -> Matrix {
        let f = self.field;
        let (rref, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(f, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, f.one());
            for (ri, &pc) in pivots.iter().enumerate() {
                let v = rref.at(ri, fc);
                if !f.is_zero(v) {
                    out.set(pc, k, f.neg(v));
                }
            }
        }
        out
    }

    /// Solves `self * x = b` if `b` lies in the column span, returning the
    /// canonical particular solution (free variables set to zero).
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let f = self.field;
        let mut m = self.to_row_vecs();
        for (row, v) in m.iter_mut().zip(b.iter()) {
            row.push(v.clone());
        }
        let aug_cols = self.cols + 1;
        let pivots = rref_in_place(&f, &mut m, aug_cols);
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![f.zero(); self.cols];
        for (ri, &pc) in pivots.iter().enumerate() {
            x[pc] = m[ri][self.cols].clone();
        }
        Some(x)
    }

    /// Determinant of a square matrix by pivoted elimination.
    pub fn determinant(&self) -> Scalar {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let f = self.field;
        if self.rows == 0 {
            return f.one();
        }
        let mut m = self.to_row_vecs();
        let n = self.rows;
        let mut det = f.one();
        for c in 0..n {
            let Some(pi) = (c..n).find(|&i| !f.is_zero(&m[i][c])) else {
                return f.zero();
            };
            if pi != c {
                m.swap(c, pi);
                det = f.neg(&det);
            }
            det = f.mul(&det, &m[c][c]);
            let inv = f.inv(&m[c][c]);
            for i in (c + 1)..n {
                if !f.is_zero(&m[i][c]) {
                    let factor = f.mul(&m[i][c], &inv);
                    for j in c..n {
                        let t = f.mul(&factor, &m[c][j]);
                        m[i][j] = f.sub(&m[i][j], &t);
                    }
                }
            }
        }
        det
    }

    fn to_row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows)
            .map(|r| self.data[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect()
    }

    fn from_rows_allow_empty(field: FieldSpec, rows: Vec<Vec<Scalar>>, cols: usize) -> Matrix {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for r in rows {
            data.extend(r);
        }
        Matrix {
            rows: nrows,
            cols,
            field,
        data,
        }
    }
}

/// Pivot row choice: among candidates with a nonzero entry in column `c`,
/// take the sparsest row (ties to the lowest index). The canonical RREF is
/// independent of this choice; sparsity only limits fill-in.
fn pick_pivot(f: &FieldSpec, m: &[Vec<Scalar>], from_row: usize, c: usize) -> Option<usize> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in m.iter().enumerate().skip(from_row) {
        if f.is_zero(&row[c]) {
            continue;
        }
        let nnz = row.iter().filter(|v| !f.is_zero(v)).count();
        match best {
            Some((_, bn)) if bn <= nnz => {}
            _ => best = Some((i, nnz)),
        }
    }
    best.map(|(i, _)| i)
}

fn rref_in_place(f: &FieldSpec, m: &mut [Vec<Scalar>], cols: usize) -> Vec<usize> {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(pi) = pick_pivot(f, m, r, c) else {
            continue;
        };
        m.swap(r, pi);
        let inv = f.inv(&m[r][c]);
        for j in c..cols {
            if !f.is_zero(&m[r][j]) {
                m[r][j] = f.mul(&m[r][j], &inv);
            }
        }
        for i in 0..nrows {
            if i != r && !f.is_zero(&m[i][c]) {
                let factor = m[i][c].clone();
                for j in c..cols {
                    if !f.is_zero(&m[r][j]) {
                        let t = f.mul(&factor, &m[r][j]);
                        m[i][j] = f.sub(&m[i][j], &t);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(Q, 2).rank(), 2);
        assert_eq!(Matrix::zeros(Q, 3, 4).rank(), 0);
        assert_eq!(Matrix::from_i64(Q, &[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(Matrix::zeros(Q, 0, 5).rank(), 0);
        assert_eq!(Matrix::zeros(Q, 5, 0).rank(), 0);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(Q, 3).kernel_basis().cols(), 0);
        let z = Matrix::zeros(Q, 2, 3);
        assert_eq!(z.kernel_basis().cols(), 3);
        let m = Matrix::from_i64(Q, &[&[1, 1, 0]]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 2);
        assert!(m.matmul(&k).is_zero());
    }

    #[test]
    fn solve_examples() {
        let id = Matrix::identity(Q, 2);
        let b = vec![Q.from_i64(4), Q.from_i64(-1)];
        assert_eq!(id.solve(&b).unwrap(), b);

        let z = Matrix::zeros(Q, 2, 2);
        assert_eq!(z.solve(&b), None);

        let col = Matrix::from_i64(Q, &[&[1], &[1]]);
        let b2 = vec![Q.from_i64(2), Q.from_i64(2)];
        assert_eq!(col.solve(&b2).unwrap(), vec![Q.from_i64(2)]);
    }

    #[test]
    fn determinant_and_submatrix() {
        let m = Matrix::from_i64(Q, &[&[1, 2], &[3, 4]]);
        assert_eq!(m.determinant(), Q.from_i64(-2));
        let f7 = FieldSpec::prime(7).unwrap();
        let m7 = Matrix::from_i64(f7, &[&[1, 2], &[3, 4]]);
        assert_eq!(m7.determinant(), f7.from_i64(-2));
        let s = m.submatrix(&[1], &[0, 1]);
        assert_eq!(s.at(0, 1), &Q.from_i64(4));
    }

    #[test]
    fn rref_is_canonical() {
        let m = Matrix::from_i64(Q, &[&[2, 4, 6], &[1, 2, 4], &[0, 0, 1]]);
        let (r1, p1) = m.rref();
        // Row-permuted input must give the same RREF.
        let m2 = Matrix::from_i64(Q, &[&[0, 0, 1], &[2, 4, 6], &[1, 2, 4]]);
        let (r2, p2) = m2.rref();
        assert_eq!(r1, r2);
        assert_eq!(p1, p2);
    }
}
