//! Quadratic-residue double circulant generators. The circulant core
//! carries one value on the diagonal, one at offsets that are nonzero
//! squares mod ell, and one at non-squares; the bordered variant wraps it
//! with a constant border row and column.
//!
//! The literature's S_ell(a, b) labels are reproduced by searching: (a, b)
//! are placed into two of the three core slots (all six arrangements), the
//! remaining slot value and any border scalars are then solved so the
//! right half A satisfies AA^T = -I. All self-dual completions are
//! emitted in a fixed deterministic order. For some labels no placement
//! completes; that is reported as an error rather than guessed around.

use crate::code::LinearCode;
use crate::gf::{Fe, FieldCtx};
use crate::matrix::Mat;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QdcError {
    #[error("invalid spec: {0}")]
    BadSpec(String),
    #[error("no self-dual completion exists for this spec")]
    NoSelfDualCompletion,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QdcSpec {
    pub p: u16,
    pub ell: u16,
    pub a: Fe,
    pub b: Fe,
    pub bordered: bool,
}

/// One self-dual completion: the three core slot values, border scalars
/// (alpha, beta, delta) for the bordered form, and the resulting code.
#[derive(Debug, Clone)]
pub struct QdcCompletion {
    pub diag: Fe,
    pub qr: Fe,
    pub nqr: Fe,
    pub border: Option<(Fe, Fe, Fe)>,
    pub code: LinearCode,
}

fn is_odd_prime(n: u16) -> bool {
    if n < 3 || n % 2 == 0 {
        return false;
    }
    let mut d = 3u32;
    while d * d <= n as u32 {
        if n as u32 % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn residue_offsets(ell: u16) -> Vec<bool> {
    let mut qr = vec![false; ell as usize];
    for x in 1..ell {
        qr[(x as u32 * x as u32 % ell as u32) as usize] = true;
    }
    qr
}

fn circulant_core(ctx: &FieldCtx, ell: usize, qr: &[bool], diag: Fe, r: Fe, n: Fe) -> Mat {
    let mut q = Mat::zeros(ctx, ell, ell);
    for i in 0..ell {
        for j in 0..ell {
            let off = (j + ell - i) % ell;
            let v = if off == 0 {
                diag
            } else if qr[off] {
                r
            } else {
                n
            };
            q.set(i, j, v);
        }
    }
    q
}

/// First row of QQ^T for the circulant core (QQ^T is circulant too).
fn core_correlation(ctx: &FieldCtx, ell: usize, qr: &[bool], diag: Fe, r: Fe, n: Fe) -> Vec<Fe> {
    let row: Vec<Fe> = (0..ell)
        .map(|o| if o == 0 { diag } else if qr[o] { r } else { n })
        .collect();
    (0..ell)
        .map(|j| {
            let mut s = 0 as Fe;
            for t in 0..ell {
                s = ctx.add(s, ctx.mul(row[t], row[(t + ell - j) % ell]));
            }
            s
        })
        .collect()
}

/// All self-dual completions of the spec, in deterministic order:
/// slot arrangements first, then the free value ascending, then border
/// scalars ascending.
pub fn qdc_completions(spec: &QdcSpec) -> Result<Vec<QdcCompletion>, QdcError> {
    let ctx = FieldCtx::new(spec.p).map_err(|e| QdcError::BadSpec(e.to_string()))?;
    if !is_odd_prime(spec.ell) {
        return Err(QdcError::BadSpec(format!("ell = {} is not an odd prime", spec.ell)));
    }
    if spec.a >= spec.p || spec.b >= spec.p {
        return Err(QdcError::BadSpec("a, b must be residues mod p".to_string()));
    }
    let ell = spec.ell as usize;
    let qr = residue_offsets(spec.ell);
    let p = ctx.p();

    // (a, b) into ordered slot pairs of (diag, qr, nqr); the remaining
    // slot takes the searched value c
    let arrangements: [fn(Fe, Fe, Fe) -> (Fe, Fe, Fe); 6] = [
        |a, b, c| (a, b, c),
        |a, b, c| (a, c, b),
        |a, b, c| (b, a, c),
        |a, b, c| (c, a, b),
        |a, b, c| (b, c, a),
        |a, b, c| (c, b, a),
    ];

    let mut out: Vec<QdcCompletion> = Vec::new();
    let mut seen_cores: Vec<(Fe, Fe, Fe)> = Vec::new();
    for arr in arrangements {
        for c in 0..p {
            let (diag, rv, nv) = arr(spec.a, spec.b, c);
            if seen_cores.contains(&(diag, rv, nv)) {
                continue;
            }
            let corr = core_correlation(&ctx, ell, &qr, diag, rv, nv);
            if spec.bordered {
                // need QQ^T = -I - delta^2 J and a border (alpha, beta,
                // delta) with alpha^2 + ell beta^2 = -1, alpha delta +
                // beta sigma = 0
                let off = corr[1];
                if corr[1..].iter().any(|&v| v != off) {
                    continue;
                }
                let d2 = ctx.neg(off);
                if corr[0] != ctx.sub(ctx.neg(1), d2) {
                    continue;
                }
                let row: Vec<Fe> = (0..ell)
                    .map(|o| if o == 0 { diag } else if qr[o] { rv } else { nv })
                    .collect();
                let sigma = row.iter().fold(0 as Fe, |s, &v| ctx.add(s, v));
                let ell_f = ctx.reduce_i64(spec.ell as i64);
                let mut found_border = false;
                for delta in 0..p {
                    if ctx.mul(delta, delta) != d2 {
                        continue;
                    }
                    for beta in 0..p {
                        let a2 = ctx.neg(ctx.add(1, ctx.mul(ell_f, ctx.mul(beta, beta))));
                        for alpha in 0..p {
                            if ctx.mul(alpha, alpha) != a2 {
                                continue;
                            }
                            if ctx.add(ctx.mul(alpha, delta), ctx.mul(beta, sigma)) != 0 {
                                continue;
                            }
                            let q = circulant_core(&ctx, ell, &qr, diag, rv, nv);
                            let mut a_mat = Mat::zeros(&ctx, ell + 1, ell + 1);
                            a_mat.set(0, 0, alpha);
                            for j in 0..ell {
                                a_mat.set(0, j + 1, beta);
                                a_mat.set(j + 1, 0, delta);
                                for i in 0..ell {
                                    a_mat.set(i + 1, j + 1, q.get(i, j));
                                }
                            }
                            debug_assert!(a_mat.is_antiorthogonal());
                            let code = LinearCode::from_right_half(&a_mat)
                                .expect("identity half has full rank");
                            debug_assert!(code.is_self_dual());
                            if !found_border {
                                seen_cores.push((diag, rv, nv));
                                found_border = true;
                            }
                            out.push(QdcCompletion {
                                diag,
                                qr: rv,
                                nqr: nv,
                                border: Some((alpha, beta, delta)),
                                code,
                            });
                        }
                    }
                }
            } else {
                // pure double circulant: QQ^T = -I
                let ok = corr[0] == ctx.neg(1) && corr[1..].iter().all(|&v| v == 0);
                if !ok {
                    continue;
                }
                seen_cores.push((diag, rv, nv));
                let q = circulant_core(&ctx, ell, &qr, diag, rv, nv);
                debug_assert!(q.is_antiorthogonal());
                let code = LinearCode::from_right_half(&q).expect("full rank");
                debug_assert!(code.is_self_dual());
                out.push(QdcCompletion { diag, qr: rv, nqr: nv, border: None, code });
            }
        }
    }
    Ok(out)
}

/// The first self-dual completion for the spec.
pub fn qdc_generator(spec: &QdcSpec) -> Result<LinearCode, QdcError> {
    let mut comps = qdc_completions(spec)?;
    if comps.is_empty() {
        return Err(QdcError::NoSelfDualCompletion);
    }
    Ok(comps.remove(0).code)
}
