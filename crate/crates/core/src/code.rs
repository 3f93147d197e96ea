//! Linear codes over GF(p): duality predicates, standard form, equivalence
//! transforms, and minimum-distance computation.

use crate::gf::{Fe, FieldCtx};
use crate::matrix::{dot, Mat};
use std::collections::HashMap;
use std::sync::Mutex;
use thiserror::Error;

pub mod distance;

pub use distance::{
    min_distance_bruteforce, min_distance_bz, min_weight_upper, truncated_weight_enum,
    DistanceBound, Effort, WeightWitness,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error("generator matrix does not have full row rank")]
    NotFullRank,
    #[error("right half is not (bordered) circulant")]
    NotCirculant,
    #[error("enumeration budget exceeded")]
    BudgetExceeded,
    #[error("transform length {0} does not match code length {1}")]
    LengthMismatch(usize, usize),
    #[error("gamma entries must square to 1")]
    BadGamma,
}

/// A linear `[n, k]` code over GF(p), held as a full-row-rank generator
/// matrix. Immutable; systematic forms are cached per information set.
pub struct LinearCode {
    gen: Mat,
    sys_cache: Mutex<HashMap<Vec<usize>, Mat>>,
}

impl Clone for LinearCode {
    fn clone(&self) -> Self {
        LinearCode { gen: self.gen.clone(), sys_cache: Mutex::new(HashMap::new()) }
    }
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.gen == other.gen
    }
}
impl Eq for LinearCode {}

impl std::fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{},{}] code over GF({})", self.n(), self.k(), self.ctx().p())
    }
}

impl LinearCode {
    pub fn new(gen: Mat) -> Result<Self, CodeError> {
        if gen.rank() < gen.rows() {
            return Err(CodeError::NotFullRank);
        }
        Ok(LinearCode { gen, sys_cache: Mutex::new(HashMap::new()) })
    }

    /// Build a length-2k code with generator (I_k | a).
    pub fn from_right_half(a: &Mat) -> Result<Self, CodeError> {
        let i = Mat::identity(a.ctx(), a.rows());
        Self::new(i.hstack(a).expect("same rows"))
    }

    #[inline]
    pub fn gen(&self) -> &Mat {
        &self.gen
    }
    #[inline]
    pub fn n(&self) -> usize {
        self.gen.cols()
    }
    #[inline]
    pub fn k(&self) -> usize {
        self.gen.rows()
    }
    #[inline]
    pub fn ctx(&self) -> &FieldCtx {
        self.gen.ctx()
    }

    pub fn codeword(&self, msg: &[Fe]) -> Vec<Fe> {
        self.gen.vec_mul(msg)
    }

    /// True iff n = 2k and every pair of generator rows is orthogonal.
    pub fn is_self_dual(&self) -> bool {
        if self.n() != 2 * self.k() {
            return false;
        }
        let ggt = self.gen.mat_mul(&self.gen.transpose()).expect("shapes");
        ggt == Mat::zeros(self.ctx(), self.k(), self.k())
    }

    /// True iff the generator is (I_k | A) with A symmetric.
    pub fn is_symmetric_standard(&self) -> bool {
        let k = self.k();
        if self.n() != 2 * k {
            return false;
        }
        if self.gen.columns(0, k) != Mat::identity(self.ctx(), k) {
            return false;
        }
        self.right_half().is_symmetric()
    }

    /// The right half A of a standard-form generator (I | A).
    /// Meaningful only when the left half is the identity.
    pub fn right_half(&self) -> Mat {
        self.gen.columns(self.k(), self.n())
    }

    /// Row-reduce onto the given information set, returning the systematic
    /// generator if the set has full rank.
    pub fn systematic_form(&self, info_set: &[usize]) -> Option<Mat> {
        if let Some(m) = self.sys_cache.lock().unwrap().get(info_set) {
            return Some(m.clone());
        }
        let mut m = self.gen.clone();
        let pivots = m.rref_in_place(info_set);
        if pivots.len() < self.k() {
            return None;
        }
        self.sys_cache.lock().unwrap().insert(info_set.to_vec(), m.clone());
        Some(m)
    }

    /// Equivalent code with generator (I_k | A), together with the column
    /// permutation that was applied (new column j holds old column perm[j]).
    pub fn standard_form(&self) -> (LinearCode, Vec<usize>) {
        let (red, pivots) = self.gen.rref();
        let mut perm = pivots.clone();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        perm.extend((0..self.n()).filter(|c| !pivot_set.contains(c)));
        let mut out = Mat::zeros(self.ctx(), self.k(), self.n());
        for i in 0..self.k() {
            for (j, &src) in perm.iter().enumerate() {
                out.set(i, j, red.get(i, src));
            }
        }
        (LinearCode::new(out).expect("row rank preserved"), perm)
    }

    pub fn apply_monomial(&self, t: &MonomialTransform) -> Result<LinearCode, CodeError> {
        if t.len() != self.n() {
            return Err(CodeError::LengthMismatch(t.len(), self.n()));
        }
        let ctx = self.ctx();
        let mut out = Mat::zeros(ctx, self.k(), self.n());
        for i in 0..self.k() {
            for j in 0..self.n() {
                out.set(i, j, ctx.mul(t.gamma[j], self.gen.get(i, t.sigma[j])));
            }
        }
        Ok(LinearCode::new(out).expect("monomial preserves rank"))
    }
}

/// A coordinate permutation composed with a +-1 diagonal scaling.
/// Maps a codeword c to c' with c'[j] = gamma[j] * c[sigma[j]].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialTransform {
    sigma: Vec<usize>,
    gamma: Vec<Fe>,
}

impl MonomialTransform {
    pub fn new(ctx: &FieldCtx, sigma: Vec<usize>, gamma: Vec<Fe>) -> Result<Self, CodeError> {
        let n = sigma.len();
        if gamma.len() != n {
            return Err(CodeError::LengthMismatch(gamma.len(), n));
        }
        let mut seen = vec![false; n];
        for &s in &sigma {
            if s >= n || seen[s] {
                return Err(CodeError::LengthMismatch(s, n));
            }
            seen[s] = true;
        }
        if gamma.iter().any(|&g| g != 1 && g != ctx.p() - 1) {
            return Err(CodeError::BadGamma);
        }
        Ok(MonomialTransform { sigma, gamma })
    }

    pub fn identity(n: usize) -> Self {
        MonomialTransform { sigma: (0..n).collect(), gamma: vec![1; n] }
    }

    pub fn permutation(sigma: Vec<usize>) -> Self {
        let n = sigma.len();
        MonomialTransform { sigma, gamma: vec![1; n] }
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }
}

/// Replace the circulant right half of (I | A) by its column reversal,
/// which is symmetric. For the bordered form the border column is rescaled
/// by gamma so the result stays symmetric; `border` is (alpha, beta, gamma)
/// with gamma^2 = 1.
pub fn symmetrize_double_circulant(
    gen: &Mat,
    bordered: bool,
    border: Option<(Fe, Fe, Fe)>,
) -> Result<Mat, CodeError> {
    let ctx = gen.ctx().clone();
    let k = gen.rows();
    if gen.cols() != 2 * k || gen.columns(0, k) != Mat::identity(&ctx, k) {
        return Err(CodeError::NotCirculant);
    }
    let a = gen.columns(k, 2 * k);
    if !bordered {
        if !is_circulant(&a) {
            return Err(CodeError::NotCirculant);
        }
        let rev = reverse_columns(&a);
        debug_assert!(rev.is_symmetric());
        return Ok(Mat::identity(&ctx, k).hstack(&rev).unwrap());
    }
    let (alpha, beta, gamma) = border.ok_or(CodeError::NotCirculant)?;
    if ctx.mul(gamma, gamma) != 1 {
        return Err(CodeError::BadGamma);
    }
    let ell = k - 1;
    let core = {
        let mut m = Mat::zeros(&ctx, ell, ell);
        for i in 0..ell {
            for j in 0..ell {
                m.set(i, j, a.get(i + 1, j + 1));
            }
        }
        m
    };
    let gb = ctx.mul(gamma, beta);
    let border_ok = a.get(0, 0) == alpha
        && (1..k).all(|j| a.get(0, j) == beta)
        && (1..k).all(|i| a.get(i, 0) == gb);
    if !border_ok || !is_circulant(&core) {
        return Err(CodeError::NotCirculant);
    }
    let rev = reverse_columns(&core);
    let mut out = Mat::zeros(&ctx, k, k);
    out.set(0, 0, ctx.mul(gamma, alpha));
    for j in 1..k {
        out.set(0, j, beta);
        out.set(j, 0, beta);
    }
    for i in 0..ell {
        for j in 0..ell {
            out.set(i + 1, j + 1, rev.get(i, j));
        }
    }
    debug_assert!(out.is_symmetric());
    Ok(Mat::identity(&ctx, k).hstack(&out).unwrap())
}

fn is_circulant(a: &Mat) -> bool {
    let n = a.rows();
    if !a.is_square() {
        return false;
    }
    for i in 1..n {
        for j in 0..n {
            if a.get(i, j) != a.get(0, (j + n - i) % n) {
                return false;
            }
        }
    }
    true
}

fn reverse_columns(a: &Mat) -> Mat {
    let n = a.cols();
    let mut out = Mat::zeros(a.ctx(), a.rows(), n);
    for i in 0..a.rows() {
        for j in 0..n {
            out.set(i, j, a.get(i, n - 1 - j));
        }
    }
    out
}

/// Hamming weight of a vector.
pub fn weight(v: &[Fe]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

/// Self-orthogonality of a single codeword under the standard inner product.
pub fn is_self_orthogonal_word(ctx: &FieldCtx, v: &[Fe]) -> bool {
    dot(ctx, v, v) == 0
}
