//! Minimum-distance engines: exhaustive projective enumeration,
//! Brouwer-Zimmermann bounds over disjoint information sets, and a
//! randomized information-set upper bound.

use super::{weight, CodeError, LinearCode};
use crate::gf::Fe;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::collections::HashSet;
use std::sync::atomic::{AtomicUsize, Ordering};

/// Default cap on enumerated projective messages for brute force.
pub const BRUTEFORCE_BUDGET: u64 = 100_000_000;

/// Lower/upper bracket on the minimum distance, with the enumeration
/// effort that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceBound {
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
    pub effort: Effort,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Effort {
    /// Projective codewords enumerated in total.
    pub enumerated: u64,
    /// Largest support weight completed on every information set.
    pub completed_weight: usize,
    /// Ranks of the greedily chosen disjoint information sets.
    pub info_set_ranks: Vec<usize>,
}

/// Result of the randomized upper-bound search: the least weight seen and
/// a codeword realizing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightWitness {
    pub weight: usize,
    pub word: Vec<Fe>,
    pub iterations_used: u64,
}

/// Exact minimum weight by enumerating the projective message space
/// (first nonzero message coordinate fixed to 1), with the default budget.
pub fn min_distance_bruteforce(code: &LinearCode) -> Result<usize, CodeError> {
    min_distance_bruteforce_with_budget(code, BRUTEFORCE_BUDGET)
}

pub fn min_distance_bruteforce_with_budget(
    code: &LinearCode,
    budget: u64,
) -> Result<usize, CodeError> {
    let k = code.k();
    let p = code.ctx().p() as u64;
    // projective message count: sum over first-support f of p^(k-1-f)
    let mut total: u64 = 0;
    for f in 0..k {
        let mut t: u64 = 1;
        for _ in 0..(k - 1 - f) {
            t = t.checked_mul(p).ok_or(CodeError::BudgetExceeded)?;
        }
        total = total.checked_add(t).ok_or(CodeError::BudgetExceeded)?;
    }
    if total > budget {
        return Err(CodeError::BudgetExceeded);
    }

    // Split work by (first support row, coefficient of the next row) so the
    // deepest subtrees are spread across workers.
    let pf = code.ctx().p();
    let mut tasks: Vec<(usize, Option<Fe>)> = Vec::new();
    for f in 0..k {
        if f + 1 < k {
            for c in 0..pf {
                tasks.push((f, Some(c)));
            }
        } else {
            tasks.push((f, None));
        }
    }
    let best = tasks
        .into_par_iter()
        .map(|(f, c2)| {
            let ctx = code.ctx();
            let mut acc: Vec<Fe> = code.gen().row(f).to_vec();
            let start;
            if let Some(c) = c2 {
                let row = code.gen().row(f + 1);
                for (a, &r) in acc.iter_mut().zip(row) {
                    *a = ctx.add(*a, ctx.mul(c, r));
                }
                start = f + 2;
            } else {
                start = f + 1;
            }
            let mut best = usize::MAX;
            dfs_all_coeffs(code, start, &mut acc, &mut best);
            best
        })
        .min()
        .unwrap_or(usize::MAX);
    Ok(best)
}

fn dfs_all_coeffs(code: &LinearCode, depth: usize, acc: &mut [Fe], best: &mut usize) {
    if depth == code.k() {
        let w = weight(acc);
        if w < *best {
            *best = w;
        }
        return;
    }
    let ctx = code.ctx();
    let row = code.gen().row(depth);
    // one pass per coefficient 0..p-1; p increments return acc to its start
    for _ in 0..ctx.p() {
        dfs_all_coeffs(code, depth + 1, acc, best);
        for (a, &r) in acc.iter_mut().zip(row) {
            *a = ctx.add(*a, r);
        }
    }
}

struct InfoSet {
    /// Systematic rows over the full length; row i has a 1 on its pivot
    /// column and 0 on the other pivots of this set.
    rows: Vec<Vec<Fe>>,
    rank: usize,
}

fn greedy_info_sets(code: &LinearCode) -> Vec<InfoSet> {
    let n = code.n();
    let mut used = vec![false; n];
    let mut sets = Vec::new();
    loop {
        let order: Vec<usize> = (0..n).filter(|&c| !used[c]).collect();
        if order.is_empty() {
            break;
        }
        let mut m = code.gen().clone();
        let pivots = m.rref_in_place(&order);
        if pivots.is_empty() {
            break;
        }
        for &c in &pivots {
            used[c] = true;
        }
        let rows = (0..pivots.len()).map(|i| m.row(i).to_vec()).collect();
        sets.push(InfoSet { rows, rank: pivots.len() });
    }
    sets
}

/// Codewords generated by exactly `w` rows of one systematic form, with the
/// first coefficient fixed to 1 (projective reduction).
fn pass_size(rank: usize, w: usize, p: u64) -> u64 {
    let mut combos: u64 = 1;
    for i in 0..w {
        combos = combos.saturating_mul((rank - i) as u64) / (i as u64 + 1);
    }
    let mut scale: u64 = 1;
    for _ in 1..w {
        scale = scale.saturating_mul(p - 1);
    }
    combos.saturating_mul(scale)
}

/// Weight of `v` if it is below `limit`, else None (counting aborts early).
#[inline]
fn weight_below(v: &[Fe], limit: usize) -> Option<usize> {
    let mut w = 0usize;
    for &x in v {
        if x != 0 {
            w += 1;
            if w >= limit {
                return None;
            }
        }
    }
    Some(w)
}

/// One enumeration task: all support sets starting with the fixed prefix,
/// extended by `remaining` more positions chosen from `from..rank`.
fn enum_task(
    set: &InfoSet,
    ctx: &crate::gf::FieldCtx,
    acc: &mut Vec<Fe>,
    from: usize,
    remaining: usize,
    shared_best: &AtomicUsize,
    local_best: &mut usize,
) {
    if remaining == 0 {
        let limit = (*local_best).min(shared_best.load(Ordering::Relaxed));
        if let Some(w) = weight_below(acc, limit) {
            *local_best = w;
            shared_best.fetch_min(w, Ordering::Relaxed);
        }
        return;
    }
    let p = ctx.p();
    for j in from..=(set.rank - remaining) {
        let row = &set.rows[j];
        // coefficients 1..p-1 by repeated addition; a final add cancels
        for _ in 1..p {
            for (a, &r) in acc.iter_mut().zip(row) {
                *a = ctx.add(*a, r);
            }
            enum_task(set, ctx, acc, j + 1, remaining - 1, shared_best, local_best);
        }
        for (a, &r) in acc.iter_mut().zip(row) {
            *a = ctx.add(*a, r);
        }
    }
}

/// Brouwer-Zimmermann distance bounds. Enumerates projective row
/// combinations of each disjoint systematic form in increasing support
/// weight w; after completing w on all sets the lower bound becomes
/// sum_i max(0, w + 1 - (k - r_i)). Stops when lower >= upper, the target
/// is reached, or the next pass would exceed `budget` enumerated words.
pub fn min_distance_bz(code: &LinearCode, target: Option<usize>, budget: u64) -> DistanceBound {
    let k = code.k();
    let n = code.n();
    let p = code.ctx().p() as u64;
    let sets = greedy_info_sets(code);
    let ranks: Vec<usize> = sets.iter().map(|s| s.rank).collect();
    let max_rank = ranks.iter().copied().max().unwrap_or(0);

    let mut upper = n - k + 1; // Singleton
    let mut lower = 1usize.min(upper);
    let mut enumerated: u64 = 0;
    let mut completed = 0usize;
    let shared_best = AtomicUsize::new(upper);
    let mut fully_enumerated = false;

    'outer: for w in 1..=max_rank {
        // refuse the whole weight level unless every set's pass fits
        let level_cost: u64 = sets
            .iter()
            .filter(|s| s.rank >= w)
            .map(|s| pass_size(s.rank, w, p))
            .fold(0u64, |a, b| a.saturating_add(b));
        if enumerated.saturating_add(level_cost) > budget {
            break 'outer;
        }
        for set in sets.iter().filter(|s| s.rank >= w) {
            let ctx = code.ctx().clone();
            // parallelize over the first support position
            let level_best = (0..=(set.rank - w))
                .into_par_iter()
                .map(|f| {
                    let mut acc = set.rows[f].clone();
                    let mut local = usize::MAX;
                    enum_task(set, &ctx, &mut acc, f + 1, w - 1, &shared_best, &mut local);
                    local
                })
                .min()
                .unwrap_or(usize::MAX);
            if level_best < upper {
                upper = level_best;
                shared_best.fetch_min(upper, Ordering::Relaxed);
            }
            enumerated += pass_size(set.rank, w, p);
        }
        completed = w;
        let lb: usize = ranks
            .iter()
            .map(|&r| (w + 1).saturating_sub(k - r))
            .sum();
        if lb > lower {
            lower = lb;
        }
        if w == k && ranks.iter().any(|&r| r == k) {
            fully_enumerated = true;
        }
        if lower >= upper || fully_enumerated {
            break 'outer;
        }
        if let Some(t) = target {
            if lower >= t {
                break 'outer;
            }
        }
    }
    if fully_enumerated {
        lower = upper;
    }
    if lower > upper {
        lower = upper;
    }
    DistanceBound {
        lower,
        upper,
        exact: lower >= upper,
        effort: Effort { enumerated, completed_weight: completed, info_set_ranks: ranks },
    }
}

/// Randomized information-set upper bound. Each iteration reduces the
/// generator onto a random column permutation and scans all messages of
/// weight <= 2. Deterministic for a fixed seed; stops early once `target`
/// is met. With zero iterations, falls back to the Singleton bound.
pub fn min_weight_upper(
    code: &LinearCode,
    iterations: u64,
    seed: u64,
    target: Option<usize>,
) -> WeightWitness {
    let n = code.n();
    let k = code.k();
    let ctx = code.ctx().clone();
    let p = ctx.p();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = WeightWitness { weight: n - k + 1, word: Vec::new(), iterations_used: 0 };

    let consider = |wit: &mut WeightWitness, word: &[Fe]| {
        let w = weight(word);
        if w > 0 && w < wit.weight {
            wit.weight = w;
            wit.word = word.to_vec();
        }
    };

    for it in 0..iterations {
        best.iterations_used = it + 1;
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let mut m = code.gen().clone();
        let pivots = m.rref_in_place(&perm);
        debug_assert_eq!(pivots.len(), k);
        for i in 0..k {
            consider(&mut best, m.row(i));
        }
        let mut buf = vec![0 as Fe; n];
        for i in 0..k {
            for j in (i + 1)..k {
                buf.copy_from_slice(m.row(i));
                for c in 1..p {
                    let _ = c;
                    for (b, &r) in buf.iter_mut().zip(m.row(j)) {
                        *b = ctx.add(*b, r);
                    }
                    consider(&mut best, &buf);
                }
            }
        }
        if let Some(t) = target {
            if best.weight <= t {
                break;
            }
        }
    }
    best
}

/// Exact counts A_w of codewords of weight w for w <= wmax, via
/// Brouwer-Zimmermann enumeration continued until the lower bound on any
/// unseen codeword exceeds wmax. Invariant under monomial transforms.
pub fn truncated_weight_enum(
    code: &LinearCode,
    wmax: usize,
    budget: u64,
) -> Result<Vec<u64>, CodeError> {
    let k = code.k();
    let p = code.ctx().p();
    let ctx = code.ctx().clone();
    let sets = greedy_info_sets(code);
    let ranks: Vec<usize> = sets.iter().map(|s| s.rank).collect();
    let max_rank = ranks.iter().copied().max().unwrap_or(0);

    // canonical (first nonzero scaled to 1) low-weight codewords
    let mut classes: HashSet<Vec<Fe>> = HashSet::new();
    let mut enumerated: u64 = 0;
    let mut covered = false; // all weight <= wmax codewords seen

    let canonicalize = |v: &[Fe]| -> Vec<Fe> {
        let lead = v.iter().copied().find(|&x| x != 0).unwrap();
        let inv = ctx.inv(lead).unwrap();
        v.iter().map(|&x| ctx.mul(inv, x)).collect()
    };

    for w in 1..=max_rank {
        let lb: usize = ranks.iter().map(|&r| w.saturating_sub(k - r)).sum();
        // after completing w-1, every unseen codeword weighs >= lb(w-1)+...;
        // equivalently stop once completing w-1 already covers wmax
        if lb > wmax && w > 1 {
            covered = true;
            break;
        }
        let level_cost: u64 = sets
            .iter()
            .filter(|s| s.rank >= w)
            .map(|s| pass_size(s.rank, w, p as u64))
            .fold(0u64, |a, b| a.saturating_add(b));
        if enumerated.saturating_add(level_cost) > budget {
            return Err(CodeError::BudgetExceeded);
        }
        for set in sets.iter().filter(|s| s.rank >= w) {
            collect_low_weight(set, &ctx, w, wmax, &mut classes, &canonicalize);
            enumerated += pass_size(set.rank, w, p as u64);
        }
        let lb_done: usize = ranks.iter().map(|&r| (w + 1).saturating_sub(k - r)).sum();
        if lb_done > wmax {
            covered = true;
            break;
        }
        if w == k && ranks.iter().any(|&r| r == k) {
            covered = true;
            break;
        }
    }
    if !covered {
        return Err(CodeError::BudgetExceeded);
    }
    let mut counts = vec![0u64; wmax + 1];
    counts[0] = 1;
    for c in &classes {
        let w = weight(c);
        if w <= wmax {
            counts[w] += p as u64 - 1;
        }
    }
    Ok(counts)
}

fn collect_low_weight(
    set: &InfoSet,
    ctx: &crate::gf::FieldCtx,
    w: usize,
    wmax: usize,
    classes: &mut HashSet<Vec<Fe>>,
    canonicalize: &dyn Fn(&[Fe]) -> Vec<Fe>,
) {
    fn rec(
        set: &InfoSet,
        ctx: &crate::gf::FieldCtx,
        acc: &mut Vec<Fe>,
        from: usize,
        remaining: usize,
        wmax: usize,
        classes: &mut HashSet<Vec<Fe>>,
        canonicalize: &dyn Fn(&[Fe]) -> Vec<Fe>,
    ) {
        if remaining == 0 {
            if weight(acc) <= wmax {
                classes.insert(canonicalize(acc));
            }
            return;
        }
        let p = ctx.p();
        for j in from..=(set.rank - remaining) {
            let row = &set.rows[j];
            for _ in 1..p {
                for (a, &r) in acc.iter_mut().zip(row) {
                    *a = ctx.add(*a, r);
                }
                rec(set, ctx, acc, j + 1, remaining - 1, wmax, classes, canonicalize);
            }
            for (a, &r) in acc.iter_mut().zip(row) {
                *a = ctx.add(*a, r);
            }
        }
    }
    for f in 0..=(set.rank - w) {
        let mut acc = set.rows[f].clone();
        rec(set, ctx, &mut acc, f + 1, w - 1, wmax, classes, canonicalize);
    }
}
