//! Seeded randomized search: chain the two constructions upward in length
//! by four per stage, score candidates with the randomized upper bound,
//! deduplicate by weight-distribution fingerprints, and keep the best
//! few codes of each stage as bases for the next.

use crate::code::{min_weight_upper, truncated_weight_enum, LinearCode};
use crate::construct::{
    construct_a, construct_b, eligible_codewords, solve_h, ConstructionAParams,
    ConstructionBParams,
};
use crate::gf::{Fe, FieldCtx};
use crate::matrix::Mat;
use crate::solutionsets::{enum_s_minus1, enum_s_minus_i2, PMatrix, SPair};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::hash_map::DefaultHasher;
use std::collections::HashSet;
use std::hash::{Hash, Hasher};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("trace references unknown base id {0}")]
    UnknownBase(usize),
    #[error("trace step failed to replay: {0}")]
    BadTrace(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MethodSelector {
    A,
    B,
    Both,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub p: u16,
    pub target_length: usize,
    pub target_distance: usize,
    pub seed: u64,
    /// Construction attempts per length stage.
    pub trials_per_stage: u64,
    /// Iterations handed to the randomized upper bound when scoring.
    pub distance_iterations: u64,
    /// Distinct codes retained per stage as bases for the next.
    pub keep: usize,
    pub method: MethodSelector,
}

impl SearchConfig {
    /// Self-dual codes over GF(p) with p = 3 (mod 4) only exist at
    /// lengths divisible by four.
    pub fn is_satisfiable(&self) -> bool {
        self.p % 4 != 3 || self.target_length % 4 == 0
    }
}

/// One construction step, with every parameter recorded so the step
/// replays without randomness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum TraceStep {
    A {
        word: Vec<Fe>,
        alpha: Fe,
        beta: Fe,
        s: Fe,
        t: Fe,
    },
    B {
        x: Vec<Fe>,
        alpha: Fe,
        beta: Fe,
        /// (h00, h01, h11) of the symmetric H
        h: (Fe, Fe, Fe),
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trace {
    pub base_id: usize,
    pub seed: u64,
    pub steps: Vec<TraceStep>,
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub code: LinearCode,
    pub trace: Trace,
    /// Least weight seen while scoring; an upper bound on d.
    pub distance_upper: usize,
    pub fingerprint: Vec<u64>,
}

const FINGERPRINT_BUDGET: u64 = 4_000_000;

/// Monomial-invariant fingerprint: length, distance bound, and truncated
/// weight counts when affordable; falls back to a generator hash so
/// distinct codes are never merged blindly.
pub fn fingerprint(code: &LinearCode, distance_upper: usize) -> Vec<u64> {
    let mut fp = vec![code.n() as u64, distance_upper as u64];
    match truncated_weight_enum(code, distance_upper, FINGERPRINT_BUDGET) {
        Ok(counts) => fp.extend(counts),
        Err(_) => {
            let mut h = DefaultHasher::new();
            code.gen().data().hash(&mut h);
            fp.push(h.finish());
        }
    }
    fp
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E3779B97F4A7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

fn trial_seed(master: u64, stage: u64, trial: u64) -> u64 {
    splitmix64(master ^ splitmix64(stage.wrapping_shl(32) | trial))
}

struct StageCandidate {
    code: LinearCode,
    trace: Trace,
    upper: usize,
    trial: u64,
}

fn attempt_a(
    base: &LinearCode,
    rng: &mut ChaCha8Rng,
    pairs_pool: &[SPair],
    seed: u64,
) -> Option<(LinearCode, TraceStep)> {
    let ctx = base.ctx().clone();
    let words = eligible_codewords(base, 64, seed);
    let pair = words.choose(rng)?.clone();
    let sp = *pairs_pool.choose(rng)?;
    let s_roots = ctx.sqrt(ctx.sub(pair.k, 1));
    let t_roots = ctx.sqrt(ctx.neg(ctx.add(1, pair.k)));
    let s = *s_roots.choose(rng)?;
    let t = *t_roots.choose(rng)?;
    let mut word = pair.x.clone();
    word.extend_from_slice(&pair.y);
    let params = ConstructionAParams { pair, alpha_beta: sp, s, t };
    let code = construct_a(base, &params).ok()?;
    Some((code, TraceStep::A { word, alpha: sp.alpha, beta: sp.beta, s, t }))
}

fn attempt_b(
    base: &LinearCode,
    rng: &mut ChaCha8Rng,
    p_pool: &[PMatrix],
) -> Option<(LinearCode, TraceStep)> {
    let ctx = base.ctx().clone();
    let n = base.k();
    let p_mat = p_pool.choose(rng)?.clone();
    let x: Vec<Fe> = (0..n).map(|_| rng.gen_range(0..ctx.p())).collect();
    let m = crate::construct::build_m(&x, &base.right_half(), &p_mat).ok()?;
    let hs = solve_h(&m, &p_mat);
    let h = hs.choose(rng)?.clone();
    let step = TraceStep::B {
        x: x.clone(),
        alpha: p_mat.alpha,
        beta: p_mat.beta,
        h: (h.get(0, 0), h.get(0, 1), h.get(1, 1)),
    };
    let params = ConstructionBParams { x, p_mat, h };
    let code = construct_b(base, &params).ok()?;
    Some((code, step))
}

/// Breadth-first staged search. Deterministic for a fixed config; trials
/// run in parallel with per-trial seeds and are merged by
/// (distance bound desc, trial index asc) so worker scheduling never
/// changes the output.
pub fn run_search(cfg: &SearchConfig, bases: &[LinearCode]) -> Vec<SearchResult> {
    if !cfg.is_satisfiable() || bases.is_empty() {
        return Vec::new();
    }
    let ctx = match FieldCtx::new(cfg.p) {
        Ok(c) => c,
        Err(_) => return Vec::new(),
    };
    let base_len = bases[0].n();
    if bases.iter().any(|b| b.n() != base_len || b.ctx() != &ctx) {
        return Vec::new();
    }
    if base_len > cfg.target_length || (cfg.target_length - base_len) % 4 != 0 {
        return Vec::new();
    }

    let pairs_pool = enum_s_minus1(&ctx);
    let p_pool: Vec<PMatrix> = enum_s_minus_i2(&ctx)
        .into_iter()
        .filter(|p| p.beta != 0)
        .collect();

    // stage 0: the given bases themselves
    let mut frontier: Vec<StageCandidate> = bases
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let score =
                min_weight_upper(b, cfg.distance_iterations, trial_seed(cfg.seed, 0, i as u64), None);
            StageCandidate {
                code: b.clone(),
                trace: Trace { base_id: i, seed: cfg.seed, steps: Vec::new() },
                upper: score.weight,
                trial: i as u64,
            }
        })
        .collect();

    let mut stage = 1u64;
    let mut len = base_len;
    while len < cfg.target_length {
        let trials: Vec<StageCandidate> = (0..cfg.trials_per_stage)
            .into_par_iter()
            .filter_map(|trial| {
                let seed = trial_seed(cfg.seed, stage, trial);
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let parent = &frontier[(trial as usize) % frontier.len()];
                let use_a = match cfg.method {
                    MethodSelector::A => true,
                    MethodSelector::B => false,
                    MethodSelector::Both => rng.gen_bool(0.5),
                };
                let attempt = if use_a {
                    attempt_a(&parent.code, &mut rng, &pairs_pool, seed)
                } else {
                    attempt_b(&parent.code, &mut rng, &p_pool)
                };
                let (code, step) = attempt?;
                // never trust the builder: re-verify the postconditions
                if !code.is_self_dual() || !code.is_symmetric_standard() {
                    return None;
                }
                let score = min_weight_upper(&code, cfg.distance_iterations, splitmix64(seed), None);
                let mut trace = parent.trace.clone();
                trace.steps.push(step);
                Some(StageCandidate { code, trace, upper: score.weight, trial })
            })
            .collect();

        let mut merged = trials;
        merged.sort_by(|a, b| b.upper.cmp(&a.upper).then(a.trial.cmp(&b.trial)));
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        let mut kept: Vec<StageCandidate> = Vec::new();
        for cand in merged {
            if kept.len() >= cfg.keep {
                break;
            }
            let fp = fingerprint(&cand.code, cand.upper);
            if seen.insert(fp) {
                kept.push(cand);
            }
        }
        if kept.is_empty() {
            return Vec::new();
        }
        frontier = kept;
        len += 4;
        stage += 1;
    }

    let mut out: Vec<SearchResult> = frontier
        .into_iter()
        .map(|c| {
            let fp = fingerprint(&c.code, c.upper);
            SearchResult { code: c.code, trace: c.trace, distance_upper: c.upper, fingerprint: fp }
        })
        .collect();
    out.sort_by(|a, b| b.distance_upper.cmp(&a.distance_upper).then(a.trace.cmp_key(&b.trace)));
    out
}

impl Trace {
    fn cmp_key(&self, other: &Trace) -> std::cmp::Ordering {
        (self.base_id, self.steps.len()).cmp(&(other.base_id, other.steps.len()))
    }
}

/// Rebuild a result's generator from its recorded parameters.
pub fn replay_trace(trace: &Trace, bases: &[LinearCode]) -> Result<LinearCode, SearchError> {
    let mut code = bases
        .get(trace.base_id)
        .cloned()
        .ok_or(SearchError::UnknownBase(trace.base_id))?;
    for step in &trace.steps {
        let ctx = code.ctx().clone();
        code = match step {
            TraceStep::A { word, alpha, beta, s, t } => {
                let pair = crate::construct::CodewordPair::from_word(&ctx, word);
                let params = ConstructionAParams {
                    pair,
                    alpha_beta: SPair { alpha: *alpha, beta: *beta },
                    s: *s,
                    t: *t,
                };
                construct_a(&code, &params).map_err(|e| SearchError::BadTrace(e.to_string()))?
            }
            TraceStep::B { x, alpha, beta, h } => {
                let p_mat = PMatrix::from_pair(&ctx, SPair { alpha: *alpha, beta: *beta });
                let h_mat = Mat::from_flat(&ctx, 2, 2, vec![h.0, h.1, h.1, h.2]);
                let params = ConstructionBParams { x: x.clone(), p_mat, h: h_mat };
                construct_b(&code, &params).map_err(|e| SearchError::BadTrace(e.to_string()))?
            }
        };
    }
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u16) -> FieldCtx {
        FieldCtx::new(p).unwrap()
    }

    fn gf3_base() -> LinearCode {
        let f = ctx(3);
        let a = Mat::from_rows(
            &f,
            &[vec![1, 1, 0, 0], vec![1, 2, 0, 0], vec![0, 0, 2, 1], vec![0, 0, 1, 1]],
        );
        LinearCode::from_right_half(&a).unwrap()
    }

    fn gf19_base() -> LinearCode {
        let f = ctx(19);
        let a = Mat::from_rows(
            &f,
            &[vec![18, 13, 0, 0], vec![13, 1, 0, 0], vec![0, 0, 1, 6], vec![0, 0, 6, 18]],
        );
        LinearCode::from_right_half(&a).unwrap()
    }

    fn cfg(p: u16, target_length: usize, target_distance: usize, seed: u64) -> SearchConfig {
        SearchConfig {
            p,
            target_length,
            target_distance,
            seed,
            trials_per_stage: 400,
            distance_iterations: 20,
            keep: 16,
            method: MethodSelector::Both,
        }
    }

    #[test]
    fn finds_12_6_6_over_gf3() {
        let results = run_search(&cfg(3, 12, 6, 11), &[gf3_base()]);
        assert!(!results.is_empty());
        let best = &results[0];
        assert_eq!(best.code.n(), 12);
        assert!(best.code.is_self_dual());
        assert!(best.code.right_half().is_symmetric());
        assert!(best.distance_upper >= 6, "best upper {}", best.distance_upper);
    }

    #[test]
    fn finds_12_6_7_over_gf19() {
        let mut c = cfg(19, 12, 7, 5);
        c.trials_per_stage = 4000;
        let results = run_search(&c, &[gf19_base()]);
        assert!(!results.is_empty());
        assert!(results[0].distance_upper >= 7, "best upper {}", results[0].distance_upper);
    }

    #[test]
    fn zero_trials_is_empty() {
        let mut c = cfg(3, 12, 6, 1);
        c.trials_per_stage = 0;
        assert!(run_search(&c, &[gf3_base()]).is_empty());
    }

    #[test]
    fn deterministic_runs() {
        let c = cfg(3, 12, 6, 99);
        let r1 = run_search(&c, &[gf3_base()]);
        let r2 = run_search(&c, &[gf3_base()]);
        assert_eq!(r1.len(), r2.len());
        for (a, b) in r1.iter().zip(&r2) {
            assert_eq!(a.code, b.code);
            assert_eq!(a.trace, b.trace);
            assert_eq!(a.fingerprint, b.fingerprint);
        }
    }

    #[test]
    fn traces_replay_to_identical_codes() {
        let bases = [gf3_base()];
        let results = run_search(&cfg(3, 12, 6, 7), &bases);
        assert!(!results.is_empty());
        for r in results.iter().take(4) {
            let replayed = replay_trace(&r.trace, &bases).unwrap();
            assert_eq!(&replayed, &r.code);
        }
    }

    #[test]
    fn empty_trace_replays_to_base() {
        let bases = [gf3_base()];
        let t = Trace { base_id: 0, seed: 0, steps: Vec::new() };
        assert_eq!(replay_trace(&t, &bases).unwrap(), bases[0]);
    }

    #[test]
    fn unknown_base_id_errors() {
        let t = Trace { base_id: 3, seed: 0, steps: Vec::new() };
        assert_eq!(replay_trace(&t, &[gf3_base()]), Err(SearchError::UnknownBase(3)));
    }

    #[test]
    fn unsatisfiable_length_parity_rejected() {
        // p = 3 (mod 4) needs length divisible by 4
        let c = cfg(3, 10, 3, 1);
        assert!(!c.is_satisfiable());
        assert!(run_search(&c, &[gf3_base()]).is_empty());
    }
}
