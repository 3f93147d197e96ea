//! The two solution sets driving the constructions: pairs with
//! alpha^2 + beta^2 = -1, and symmetric 2x2 matrices squaring to -I.

use crate::gf::{Fe, FieldCtx};
use crate::matrix::Mat;

/// A pair (alpha, beta) with alpha^2 + beta^2 = -1 in GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SPair {
    pub alpha: Fe,
    pub beta: Fe,
}

/// The symmetric matrix [[alpha, beta], [beta, -alpha]]; squares to -I_2,
/// so its inverse is its negation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PMatrix {
    pub alpha: Fe,
    pub beta: Fe,
    pub mat: Mat,
}

impl PMatrix {
    pub fn from_pair(ctx: &FieldCtx, pair: SPair) -> PMatrix {
        let mat = Mat::from_rows(
            ctx,
            &[
                vec![pair.alpha as i64, pair.beta as i64],
                vec![pair.beta as i64, -(pair.alpha as i64)],
            ],
        );
        PMatrix { alpha: pair.alpha, beta: pair.beta, mat }
    }
}

/// All (x, y) with x^2 + y^2 + 1 = 0, in lexicographic order.
/// The count is p - (-1)^((p-1)/2).
pub fn enum_s_minus1(ctx: &FieldCtx) -> Vec<SPair> {
    let p = ctx.p();
    let mut out = Vec::new();
    for x in 0..p {
        let xx = ctx.mul(x, x);
        for y in 0..p {
            if ctx.add(ctx.add(xx, ctx.mul(y, y)), 1) == 0 {
                out.push(SPair { alpha: x, beta: y });
            }
        }
    }
    out
}

/// All symmetric 2x2 matrices P with P^2 = -I_2, in bijection with
/// `enum_s_minus1` via (alpha, beta) -> [[alpha, beta], [beta, -alpha]].
pub fn enum_s_minus_i2(ctx: &FieldCtx) -> Vec<PMatrix> {
    enum_s_minus1(ctx)
        .into_iter()
        .map(|pair| PMatrix::from_pair(ctx, pair))
        .collect()
}
