//! The two building-up constructions: from a symmetric self-dual code of
//! length 2n, each produces one of length 2n+4 while keeping the right
//! half symmetric.

use crate::code::LinearCode;
use crate::gf::{Fe, FieldCtx};
use crate::matrix::{dot, Mat};
use crate::solutionsets::{PMatrix, SPair};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("parameters fail the construction preconditions: {0}")]
    IneligibleParams(String),
    #[error("beta must be nonzero")]
    BetaZero,
}

fn ineligible<T>(msg: &str) -> Result<T, ConstructError> {
    Err(ConstructError::IneligibleParams(msg.to_string()))
}

/// A codeword (x|y) of a length-2n code, split at the midpoint, with
/// k = x.x. Eligibility for the first construction additionally needs
/// x.y = 0, k != 0, and -1+k, -1-k both squares.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CodewordPair {
    pub x: Vec<Fe>,
    pub y: Vec<Fe>,
    pub k: Fe,
}

impl CodewordPair {
    pub fn from_word(ctx: &FieldCtx, word: &[Fe]) -> CodewordPair {
        let n = word.len() / 2;
        let (x, y) = word.split_at(n);
        CodewordPair {
            x: x.to_vec(),
            y: y.to_vec(),
            k: dot(ctx, x, x),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionAParams {
    pub pair: CodewordPair,
    pub alpha_beta: SPair,
    /// s^2 = -1 + k
    pub s: Fe,
    /// t^2 = -1 - k
    pub t: Fe,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionBParams {
    pub x: Vec<Fe>,
    pub p_mat: PMatrix,
    pub h: Mat,
}

/// Sample random codewords of a symmetric self-dual code and keep those
/// whose halves satisfy the first construction's preconditions.
/// Deterministic given the seed; duplicates are removed.
pub fn eligible_codewords(c: &LinearCode, samples: u64, seed: u64) -> Vec<CodewordPair> {
    let ctx = c.ctx().clone();
    let p = ctx.p();
    let k = c.k();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen: HashSet<Vec<Fe>> = HashSet::new();
    let mut out = Vec::new();
    for _ in 0..samples {
        let msg: Vec<Fe> = (0..k).map(|_| rng.gen_range(0..p)).collect();
        if msg.iter().all(|&m| m == 0) {
            continue;
        }
        let word = c.codeword(&msg);
        if !seen.insert(word.clone()) {
            continue;
        }
        let pair = CodewordPair::from_word(&ctx, &word);
        if pair_eligible(&ctx, &pair) {
            out.push(pair);
        }
    }
    out
}

fn pair_eligible(ctx: &FieldCtx, pair: &CodewordPair) -> bool {
    pair.k != 0
        && dot(ctx, &pair.x, &pair.y) == 0
        && ctx.legendre(ctx.sub(pair.k, 1)) >= 0
        && ctx.legendre(ctx.neg(ctx.add(1, pair.k))) >= 0
}

/// Intermediates of the first construction, exposed for identity checks.
#[derive(Debug, Clone)]
pub struct ConstructionAParts {
    pub b: Mat,
    pub e: Mat,
    pub d: Mat,
    pub code: LinearCode,
}

fn check_standard_base(c: &LinearCode) -> Result<Mat, ConstructError> {
    if !c.is_symmetric_standard() {
        return ineligible("base generator is not (I | A) with A symmetric");
    }
    let a = c.right_half();
    if !a.is_antiorthogonal() {
        return ineligible("right half does not satisfy AA^T = -I");
    }
    Ok(a)
}

/// First construction: from (I_n | A) and an eligible codeword (x|y),
/// produce (I_{n+2} | [[D, B], [B^T, A+E]]).
pub fn construct_a(
    c: &LinearCode,
    params: &ConstructionAParams,
) -> Result<LinearCode, ConstructError> {
    Ok(construct_a_parts(c, params)?.code)
}

pub fn construct_a_parts(
    c: &LinearCode,
    params: &ConstructionAParams,
) -> Result<ConstructionAParts, ConstructError> {
    let ctx = c.ctx().clone();
    let a = check_standard_base(c)?;
    let n = c.k();
    let (x, y, k) = (&params.pair.x, &params.pair.y, params.pair.k);
    if x.len() != n || y.len() != n {
        return ineligible("codeword halves do not match the base dimension");
    }
    if k == 0 || k != dot(&ctx, x, x) {
        return ineligible("k must equal x.x and be nonzero");
    }
    if dot(&ctx, x, y) != 0 {
        return ineligible("x.y must vanish");
    }
    if a.vec_mul(x) != *y {
        return ineligible("(x|y) is not a codeword of the base");
    }
    let SPair { alpha, beta } = params.alpha_beta;
    let one = 1 as Fe;
    if ctx.add(ctx.mul(alpha, alpha), ctx.mul(beta, beta)) != ctx.neg(one) {
        return ineligible("alpha^2 + beta^2 must be -1");
    }
    let (s, t) = (params.s, params.t);
    if ctx.mul(s, s) != ctx.sub(k, 1) {
        return ineligible("s^2 must equal -1 + k");
    }
    if ctx.mul(t, t) != ctx.neg(ctx.add(1, k)) {
        return ineligible("t^2 must equal -1 - k");
    }

    // B = (alpha x + beta y ; beta x - alpha y)
    let row0: Vec<Fe> = x
        .iter()
        .zip(y)
        .map(|(&xi, &yi)| ctx.add(ctx.mul(alpha, xi), ctx.mul(beta, yi)))
        .collect();
    let row1: Vec<Fe> = x
        .iter()
        .zip(y)
        .map(|(&xi, &yi)| ctx.sub(ctx.mul(beta, xi), ctx.mul(alpha, yi)))
        .collect();
    let mut b = Mat::zeros(&ctx, 2, n);
    for j in 0..n {
        b.set(0, j, row0[j]);
        b.set(1, j, row1[j]);
    }

    // E = (1/k)(s x^T x + t y^T y - x^T y - y^T x)
    let kinv = ctx.inv(k).expect("k nonzero");
    let e = Mat::outer(&ctx, x, x)
        .scale(s)
        .add(&Mat::outer(&ctx, y, y).scale(t))
        .unwrap()
        .sub(&Mat::outer(&ctx, x, y))
        .unwrap()
        .sub(&Mat::outer(&ctx, y, x))
        .unwrap()
        .scale(kinv);

    let ape = a.add(&e).unwrap();
    // D = -(1/k^2) B(A+E)B^T BB^T
    let k2inv = ctx.mul(kinv, kinv);
    let bbt = b.mat_mul(&b.transpose()).unwrap();
    let d = b
        .mat_mul(&ape)
        .unwrap()
        .mat_mul(&b.transpose())
        .unwrap()
        .mat_mul(&bbt)
        .unwrap()
        .scale(k2inv)
        .neg();

    let right = Mat::block2x2(&d, &b, &b.transpose(), &ape);
    let code = LinearCode::from_right_half(&right).expect("identity half has full rank");
    Ok(ConstructionAParts { b, e, d, code })
}

/// M = (x ; beta^{-1} x (A - alpha I)); satisfies MA = PM when A^2 = -I.
pub fn build_m(x: &[Fe], a: &Mat, p: &PMatrix) -> Result<Mat, ConstructError> {
    if p.beta == 0 {
        return Err(ConstructError::BetaZero);
    }
    let ctx = a.ctx().clone();
    let n = x.len();
    if a.rows() != n || a.cols() != n {
        return Err(ConstructError::IneligibleParams(
            "x length must match A".to_string(),
        ));
    }
    let binv = ctx.inv(p.beta).expect("beta nonzero");
    let xa = a.vec_mul(x);
    let mut m = Mat::zeros(&ctx, 2, n);
    for j in 0..n {
        m.set(0, j, x[j]);
        let v = ctx.mul(binv, ctx.sub(xa[j], ctx.mul(p.alpha, x[j])));
        m.set(1, j, v);
    }
    Ok(m)
}

/// All symmetric 2x2 H with (H+P)(H-P) = -MM^T and H-P nonsingular, by
/// exhaustive enumeration over the p^3 symmetric candidates in
/// lexicographic (h00, h01, h11) order. Every hit commutes with P.
pub fn solve_h(m: &Mat, p_mat: &PMatrix) -> Vec<Mat> {
    let ctx = m.ctx().clone();
    let p = ctx.p();
    let rhs = m.mat_mul(&m.transpose()).unwrap().neg();
    let pm = &p_mat.mat;
    let mut out = Vec::new();
    for h00 in 0..p {
        for h01 in 0..p {
            for h11 in 0..p {
                let h = Mat::from_flat(&ctx, 2, 2, vec![h00, h01, h01, h11]);
                let hmp = h.sub(pm).unwrap();
                let det = ctx.sub(
                    ctx.mul(hmp.get(0, 0), hmp.get(1, 1)),
                    ctx.mul(hmp.get(0, 1), hmp.get(1, 0)),
                );
                if det == 0 {
                    continue;
                }
                if h.add(pm).unwrap().mat_mul(&hmp).unwrap() == rhs {
                    debug_assert_eq!(
                        h.mat_mul(pm).unwrap(),
                        pm.mat_mul(&h).unwrap()
                    );
                    out.push(h);
                }
            }
        }
    }
    out
}

/// Intermediates of the second construction.
#[derive(Debug, Clone)]
pub struct ConstructionBParts {
    pub m: Mat,
    pub lower_right: Mat,
    pub code: LinearCode,
}

/// Second construction: from (I_n | A), a vector x, P in S_{-I_2}, and a
/// valid H, produce (I_{n+2} | [[H, M], [M^T, A + M^T (H-P)^{-1} M]]).
pub fn construct_b(
    c: &LinearCode,
    params: &ConstructionBParams,
) -> Result<LinearCode, ConstructError> {
    Ok(construct_b_parts(c, params)?.code)
}

pub fn construct_b_parts(
    c: &LinearCode,
    params: &ConstructionBParams,
) -> Result<ConstructionBParts, ConstructError> {
    let a = check_standard_base(c)?;
    let m = build_m(&params.x, &a, &params.p_mat)?;
    let h = &params.h;
    if h.rows() != 2 || h.cols() != 2 || !h.is_symmetric() {
        return ineligible("H must be symmetric 2x2");
    }
    let pm = &params.p_mat.mat;
    let hmp = h.sub(pm).unwrap();
    let hmp_inv = match hmp.inverse() {
        Ok(inv) => inv,
        Err(_) => return ineligible("H - P must be nonsingular"),
    };
    let rhs = m.mat_mul(&m.transpose()).unwrap().neg();
    if h.add(pm).unwrap().mat_mul(&hmp).unwrap() != rhs {
        return ineligible("(H+P)(H-P) must equal -MM^T");
    }
    let lower_right = a
        .add(&m.transpose().mat_mul(&hmp_inv).unwrap().mat_mul(&m).unwrap())
        .unwrap();
    let right = Mat::block2x2(h, &m, &m.transpose(), &lower_right);
    let code = LinearCode::from_right_half(&right).expect("identity half has full rank");
    Ok(ConstructionBParts { m, lower_right, code })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solutionsets::enum_s_minus_i2;

    fn ctx(p: u16) -> FieldCtx {
        FieldCtx::new(p).unwrap()
    }

    fn gf3_8_4_base() -> LinearCode {
        let f = ctx(3);
        let a = Mat::from_rows(
            &f,
            &[
                vec![1, 1, 0, 0],
                vec![1, 2, 0, 0],
                vec![0, 0, 2, 1],
                vec![0, 0, 1, 1],
            ],
        );
        LinearCode::from_right_half(&a).unwrap()
    }

    fn golden_a_params() -> ConstructionAParams {
        let f = ctx(3);
        let pair = CodewordPair::from_word(&f, &[2, 1, 1, 1, 0, 1, 0, 2]);
        assert_eq!(pair.k, 1);
        ConstructionAParams {
            pair,
            alpha_beta: SPair { alpha: 1, beta: 1 },
            s: 0,
            t: 1,
        }
    }

    #[test]
    fn golden_a_intermediates_and_output() {
        let base = gf3_8_4_base();
        let f = base.ctx().clone();
        let parts = construct_a_parts(&base, &golden_a_params()).unwrap();
        assert_eq!(parts.b, Mat::from_rows(&f, &[vec![2, 2, 1, 0], vec![2, 0, 1, 2]]));
        assert_eq!(parts.d, Mat::from_rows(&f, &[vec![2, 1], vec![1, 2]]));
        assert_eq!(
            parts.e,
            Mat::from_rows(
                &f,
                &[
                    vec![0, 1, 0, 2],
                    vec![1, 2, 2, 2],
                    vec![0, 2, 0, 1],
                    vec![2, 2, 1, 0],
                ]
            )
        );
        assert!(parts.code.is_self_dual());
        assert!(parts.code.right_half().is_symmetric());
        assert_eq!(parts.code.n(), 12);
    }

    #[test]
    fn other_sign_of_t_still_self_dual() {
        let base = gf3_8_4_base();
        let mut params = golden_a_params();
        params.t = 2;
        let out = construct_a(&base, &params).unwrap();
        assert!(out.is_self_dual());
        assert!(out.right_half().is_symmetric());
    }

    #[test]
    fn k_zero_pair_rejected() {
        let base = gf3_8_4_base();
        let mut params = golden_a_params();
        params.pair.k = 0;
        assert!(matches!(
            construct_a(&base, &params),
            Err(ConstructError::IneligibleParams(_))
        ));
    }

    #[test]
    fn eligibility_filter_over_gf3() {
        let base = gf3_8_4_base();
        let pairs = eligible_codewords(&base, 200, 1);
        assert!(!pairs.is_empty());
        let f = base.ctx();
        for pair in &pairs {
            // over GF(3): k=1 gives s=0, t=1; k=2 gives -1-k=0 so t=0
            assert!(pair.k == 1 || pair.k == 2);
            assert_eq!(dot(f, &pair.x, &pair.y), 0);
            assert_ne!(pair.k, 0);
        }
        assert!(eligible_codewords(&base, 0, 1).is_empty());
    }

    fn gf19_8_4_base() -> (LinearCode, PMatrix) {
        let f = ctx(19);
        let a = Mat::from_rows(
            &f,
            &[
                vec![18, 13, 0, 0],
                vec![13, 1, 0, 0],
                vec![0, 0, 1, 6],
                vec![0, 0, 6, 18],
            ],
        );
        let p = enum_s_minus_i2(&f)
            .into_iter()
            .find(|p| p.alpha == 18 && p.beta == 6)
            .unwrap();
        (LinearCode::from_right_half(&a).unwrap(), p)
    }

    #[test]
    fn golden_b_m_h_and_output() {
        let (base, p) = gf19_8_4_base();
        let f = base.ctx().clone();
        let x = [1, 6, 9, 6];
        let m = build_m(&x, &base.right_half(), &p).unwrap();
        assert_eq!(m, Mat::from_rows(&f, &[vec![1, 6, 9, 6], vec![13, 1, 9, 9]]));
        // MA = PM
        assert_eq!(
            m.mat_mul(&base.right_half()).unwrap(),
            p.mat.mat_mul(&m).unwrap()
        );
        let hs = solve_h(&m, &p);
        let h_printed = Mat::from_rows(&f, &[vec![9, 12], vec![12, 13]]);
        assert!(hs.contains(&h_printed));
        let params = ConstructionBParams { x: x.to_vec(), p_mat: p, h: h_printed };
        let out = construct_b(&base, &params).unwrap();
        assert!(out.is_self_dual());
        assert!(out.right_half().is_symmetric());
        assert_eq!(out.n(), 12);
    }

    #[test]
    fn build_m_rejects_beta_zero() {
        let f = ctx(5);
        // alpha = 2, beta = 0: 4 + 0 = -1 mod 5
        let p = PMatrix::from_pair(&f, SPair { alpha: 2, beta: 0 });
        let a = Mat::identity(&f, 2).scale(2);
        assert_eq!(build_m(&[1, 0], &a, &p), Err(ConstructError::BetaZero));
    }

    #[test]
    fn build_m_zero_vector_gives_zero() {
        let (base, p) = gf19_8_4_base();
        let m = build_m(&[0, 0, 0, 0], &base.right_half(), &p).unwrap();
        assert_eq!(m, Mat::zeros(base.ctx(), 2, 4));
    }

    #[test]
    fn solve_h_zero_m_forces_h_minus_p() {
        // (H+P)(H-P) = 0 with H-P nonsingular leaves only H = -P; every
        // other symmetric square root of -I_2 commuting with P has H-P
        // singular, since then (H+P)(H-P) = H^2 + I = 0 with H+P != 0.
        let f = ctx(19);
        let p = enum_s_minus_i2(&f).into_iter().next().unwrap();
        let m = Mat::zeros(&f, 2, 4);
        let hs = solve_h(&m, &p);
        assert_eq!(hs, vec![p.mat.neg()]);
        let minus_i = Mat::identity(&f, 2).neg();
        assert_eq!(hs[0].mat_mul(&hs[0]).unwrap(), minus_i);
    }

    #[test]
    fn construct_b_zero_x_block_diagonal() {
        let (base, p) = gf19_8_4_base();
        let f = base.ctx().clone();
        let m = Mat::zeros(&f, 2, 4);
        let h = solve_h(&m, &p).into_iter().next().unwrap();
        let params = ConstructionBParams { x: vec![0; 4], p_mat: p, h: h.clone() };
        let parts = construct_b_parts(&base, &params).unwrap();
        assert_eq!(parts.lower_right, base.right_half());
        let right = parts.code.right_half();
        assert_eq!(right.columns(2, 6).row(0), &[0, 0, 0, 0]);
        assert!(parts.code.is_self_dual());
    }

    #[test]
    fn construct_b_rejects_singular_h_minus_p() {
        let (base, p) = gf19_8_4_base();
        let params = ConstructionBParams {
            x: vec![0; 4],
            h: p.mat.clone(),
            p_mat: p,
        };
        assert!(matches!(
            construct_b(&base, &params),
            Err(ConstructError::IneligibleParams(_))
        ));
    }

    #[test]
    fn construction_a_identities_on_golden_run() {
        let base = gf3_8_4_base();
        let f = base.ctx().clone();
        let parts = construct_a_parts(&base, &golden_a_params()).unwrap();
        let minus_i2 = Mat::identity(&f, 2).neg();
        let minus_in = Mat::identity(&f, 4).neg();
        let ape = base.right_half().add(&parts.e).unwrap();
        // D^2 + BB^T = -I_2
        assert_eq!(
            parts.d.mat_mul(&parts.d).unwrap()
                .add(&parts.b.mat_mul(&parts.b.transpose()).unwrap()).unwrap(),
            minus_i2
        );
        // DB + B(A+E) = 0
        assert_eq!(
            parts.d.mat_mul(&parts.b).unwrap()
                .add(&parts.b.mat_mul(&ape).unwrap()).unwrap(),
            Mat::zeros(&f, 2, 4)
        );
        // B^T B + (A+E)^2 = -I_n
        assert_eq!(
            parts.b.transpose().mat_mul(&parts.b).unwrap()
                .add(&ape.mat_mul(&ape).unwrap()).unwrap(),
            minus_in
        );
    }
}
