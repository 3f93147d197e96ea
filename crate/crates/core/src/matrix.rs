//! Dense linear algebra over GF(p).

use crate::gf::{Fe, FieldCtx};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatError {
    #[error("dimension mismatch: {0}x{1} vs {2}x{3}")]
    DimensionMismatch(usize, usize, usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrices belong to different fields")]
    FieldMismatch,
}

/// Row-major dense matrix over GF(p). Value semantics: every operation
/// returns a fresh matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
    ctx: FieldCtx,
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} over GF({})", self.rows, self.cols, self.ctx.p())?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

impl std::hash::Hash for Mat {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ctx.p().hash(state);
        self.rows.hash(state);
        self.cols.hash(state);
        self.data.hash(state);
    }
}

impl Mat {
    pub fn zeros(ctx: &FieldCtx, rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![0; rows * cols], ctx: ctx.clone() }
    }

    pub fn identity(ctx: &FieldCtx, n: usize) -> Self {
        let mut m = Self::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Build from rows of raw entries; entries are reduced mod p.
    pub fn from_rows(ctx: &FieldCtx, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = if r > 0 { rows[0].len() } else { 0 };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            for &v in row {
                data.push(ctx.reduce_i64(v));
            }
        }
        Mat { rows: r, cols: c, data, ctx: ctx.clone() }
    }

    pub fn from_flat(ctx: &FieldCtx, rows: usize, cols: usize, data: Vec<Fe>) -> Self {
        assert_eq!(data.len(), rows * cols);
        assert!(data.iter().all(|&v| v < ctx.p()));
        Mat { rows, cols, data, ctx: ctx.clone() }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }
    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }
    #[inline]
    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j]
    }
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        debug_assert!(v < self.ctx.p());
        self.data[i * self.cols + j] = v;
    }
    #[inline]
    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn data(&self) -> &[Fe] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(&self.ctx, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn mat_mul(&self, other: &Mat) -> Result<Mat, MatError> {
        if self.ctx != other.ctx {
            return Err(MatError::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(MatError::DimensionMismatch(self.rows, self.cols, other.rows, other.cols));
        }
        let p = self.ctx.p() as u64;
        let mut out = Mat::zeros(&self.ctx, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = 0u64;
                for t in 0..self.cols {
                    acc += self.get(i, t) as u64 * other.get(t, j) as u64;
                }
                out.set(i, j, (acc % p) as Fe);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Mat) -> Result<Mat, MatError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MatError::DimensionMismatch(self.rows, self.cols, other.rows, other.cols));
        }
        let mut out = self.clone();
        for (a, &b) in out.data.iter_mut().zip(&other.data) {
            *a = self.ctx.add(*a, b);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat, MatError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(MatError::DimensionMismatch(self.rows, self.cols, other.rows, other.cols));
        }
        let mut out = self.clone();
        for (a, &b) in out.data.iter_mut().zip(&other.data) {
            *a = self.ctx.sub(*a, b);
        }
        Ok(out)
    }

    pub fn neg(&self) -> Mat {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = self.ctx.neg(*a);
        }
        out
    }

    pub fn scale(&self, s: Fe) -> Mat {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a = self.ctx.mul(*a, s);
        }
        out
    }

    /// Reduced row echelon form with first-nonzero pivot selection.
    /// Returns the reduced matrix and the pivot columns in order.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place(&(0..self.cols).collect::<Vec<_>>());
        (m, pivots)
    }

    /// In-place rref scanning the given column order for pivots.
    /// Returns pivot columns (in scan order).
    pub fn rref_in_place(&mut self, col_order: &[usize]) -> Vec<usize> {
        let ctx = self.ctx.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for &c in col_order {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                self.swap_rows(pr, r);
            }
            let inv = ctx.inv(self.get(r, c)).expect("pivot nonzero");
            for j in 0..self.cols {
                let v = self.get(r, j);
                self.set(r, j, ctx.mul(v, inv));
            }
            for i in 0..self.rows {
                if i != r && self.get(i, c) != 0 {
                    let f = self.get(i, c);
                    for j in 0..self.cols {
                        let v = ctx.sub(self.get(i, j), ctx.mul(f, self.get(r, j)));
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            let (va, vb) = (self.get(a, j), self.get(b, j));
            self.set(a, j, vb);
            self.set(b, j, va);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Result<Mat, MatError> {
        if !self.is_square() {
            return Err(MatError::NotSquare);
        }
        let n = self.rows;
        // augment with identity and reduce
        let mut aug = Mat::zeros(&self.ctx, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let pivots = aug.rref_in_place(&(0..n).collect::<Vec<_>>());
        if pivots.len() < n {
            return Err(MatError::Singular);
        }
        let mut out = Mat::zeros(&self.ctx, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, aug.get(i, n + j));
            }
        }
        Ok(out)
    }

    pub fn is_symmetric(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self.get(i, j) != self.get(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// True iff A A^T = -I.
    pub fn is_antiorthogonal(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let prod = self.mat_mul(&self.transpose()).expect("square");
        prod == Mat::identity(&self.ctx, self.rows).neg()
    }

    /// Horizontal concatenation [self | other].
    pub fn hstack(&self, other: &Mat) -> Result<Mat, MatError> {
        if self.rows != other.rows {
            return Err(MatError::DimensionMismatch(self.rows, self.cols, other.rows, other.cols));
        }
        let mut out = Mat::zeros(&self.ctx, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j));
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j));
            }
        }
        Ok(out)
    }

    /// Copy of the column range `lo..hi`.
    pub fn columns(&self, lo: usize, hi: usize) -> Mat {
        let mut out = Mat::zeros(&self.ctx, self.rows, hi - lo);
        for i in 0..self.rows {
            for j in lo..hi {
                out.set(i, j - lo, self.get(i, j));
            }
        }
        out
    }

    /// 2x2 block assembly [[tl, tr], [bl, br]].
    pub fn block2x2(tl: &Mat, tr: &Mat, bl: &Mat, br: &Mat) -> Mat {
        assert_eq!(tl.rows, tr.rows);
        assert_eq!(bl.rows, br.rows);
        assert_eq!(tl.cols, bl.cols);
        assert_eq!(tr.cols, br.cols);
        let rows = tl.rows + bl.rows;
        let cols = tl.cols + tr.cols;
        let mut out = Mat::zeros(&tl.ctx, rows, cols);
        for i in 0..tl.rows {
            for j in 0..tl.cols {
                out.set(i, j, tl.get(i, j));
            }
            for j in 0..tr.cols {
                out.set(i, tl.cols + j, tr.get(i, j));
            }
        }
        for i in 0..bl.rows {
            for j in 0..bl.cols {
                out.set(tl.rows + i, j, bl.get(i, j));
            }
            for j in 0..br.cols {
                out.set(tl.rows + i, tl.cols + j, br.get(i, j));
            }
        }
        out
    }

    /// Outer product x^T y of two row vectors (as 1xN matrices or slices).
    pub fn outer(ctx: &FieldCtx, x: &[Fe], y: &[Fe]) -> Mat {
        let mut out = Mat::zeros(ctx, x.len(), y.len());
        for (i, &xi) in x.iter().enumerate() {
            for (j, &yj) in y.iter().enumerate() {
                out.set(i, j, ctx.mul(xi, yj));
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Fe]) -> Vec<Fe> {
        assert_eq!(v.len(), self.rows);
        let p = self.ctx.p() as u64;
        (0..self.cols)
            .map(|j| {
                let mut acc = 0u64;
                for (i, &vi) in v.iter().enumerate() {
                    acc += vi as u64 * self.get(i, j) as u64;
                }
                (acc % p) as Fe
            })
            .collect()
    }
}

/// Inner product of two vectors over the matrix's field.
pub fn dot(ctx: &FieldCtx, a: &[Fe], b: &[Fe]) -> Fe {
    assert_eq!(a.len(), b.len());
    let p = ctx.p() as u64;
    let mut acc = 0u64;
    for (&x, &y) in a.iter().zip(b) {
        acc += x as u64 * y as u64;
    }
    (acc % p) as Fe
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldCtx;
    use proptest::prelude::*;

    fn ctx(p: u16) -> FieldCtx {
        FieldCtx::new(p).unwrap()
    }

    #[test]
    fn mul_identity() {
        let f = ctx(7);
        let x = Mat::from_rows(&f, &[vec![1, 2], vec![3, 4]]);
        let i2 = Mat::identity(&f, 2);
        assert_eq!(i2.mat_mul(&x).unwrap(), x);
    }

    #[test]
    fn p_matrix_squares_to_minus_identity() {
        // P = [[1,1],[1,2]] over GF(3): P*P = -I2
        let f = ctx(3);
        let p = Mat::from_rows(&f, &[vec![1, 1], vec![1, 2]]);
        let sq = p.mat_mul(&p).unwrap();
        assert_eq!(sq, Mat::identity(&f, 2).neg());
    }

    #[test]
    fn mul_shape_error() {
        let f = ctx(5);
        let a = Mat::zeros(&f, 2, 3);
        let b = Mat::zeros(&f, 2, 3);
        assert!(matches!(a.mat_mul(&b), Err(MatError::DimensionMismatch(..))));
    }

    #[test]
    fn inverse_examples() {
        let f = ctx(11);
        let i4 = Mat::identity(&f, 4);
        assert_eq!(i4.inverse().unwrap(), i4);
        let two = Mat::from_rows(&f, &[vec![2]]);
        assert_eq!(two.inverse().unwrap(), Mat::from_rows(&f, &[vec![6]]));
        let z = Mat::zeros(&f, 2, 2);
        assert_eq!(z.inverse(), Err(MatError::Singular));
    }

    #[test]
    fn symmetry_checks() {
        let f = ctx(3);
        let e = Mat::from_rows(
            &f,
            &[vec![0, 1, 0, 2], vec![1, 2, 2, 2], vec![0, 2, 0, 1], vec![2, 2, 1, 0]],
        );
        assert!(e.is_symmetric());
        let x = Mat::from_rows(&f, &[vec![0, 1], vec![2, 0]]);
        assert!(!x.is_symmetric());
    }

    #[test]
    fn antiorthogonal_examples() {
        let f5 = ctx(5);
        assert!(Mat::from_rows(&f5, &[vec![2]]).is_antiorthogonal());
        let f7 = ctx(7);
        assert!(!Mat::identity(&f7, 2).is_antiorthogonal());
    }

    #[test]
    fn rank_examples() {
        let f = ctx(19);
        assert_eq!(Mat::identity(&f, 6).rank(), 6);
        assert_eq!(Mat::zeros(&f, 4, 4).rank(), 0);
    }

    proptest! {
        #[test]
        fn transpose_of_product(seed in 0u64..500) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let f = ctx([3u16,7,11,19][rng.gen_range(0..4)]);
            let (m, n, k) = (rng.gen_range(1..5usize), rng.gen_range(1..5usize), rng.gen_range(1..5usize));
            let a = Mat::from_flat(&f, m, n, (0..m*n).map(|_| rng.gen_range(0..f.p())).collect());
            let b = Mat::from_flat(&f, n, k, (0..n*k).map(|_| rng.gen_range(0..f.p())).collect());
            let lhs = a.mat_mul(&b).unwrap().transpose();
            let rhs = b.transpose().mat_mul(&a.transpose()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn inverse_roundtrip(seed in 0u64..500) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let f = ctx([3u16,7,11,19][rng.gen_range(0..4)]);
            let n = rng.gen_range(1..5usize);
            let a = Mat::from_flat(&f, n, n, (0..n*n).map(|_| rng.gen_range(0..f.p())).collect());
            if let Ok(inv) = a.inverse() {
                let i = Mat::identity(&f, n);
                prop_assert_eq!(a.mat_mul(&inv).unwrap(), i.clone());
                prop_assert_eq!(inv.mat_mul(&a).unwrap(), i);
            }
        }
    }

    #[test]
    fn antiorthogonal_implies_inverse_is_neg_transpose() {
        let f = ctx(5);
        let a = Mat::from_rows(&f, &[vec![2]]);
        assert!(a.is_antiorthogonal());
        assert_eq!(a.inverse().unwrap(), a.transpose().neg());
    }
}
