mod catalog;
mod matfile;

use catalog::Catalog;
use clap::{Parser, Subcommand};
use serde_json::json;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use symdual::{
    build_m, construct_a, construct_b, eligible_codewords, enum_s_minus1, enum_s_minus_i2,
    min_distance_bz, min_weight_upper, qdc_generator, run_search, solve_h, ConstructionAParams,
    ConstructionBParams, Fe, FieldCtx, LinearCode, Mat, PMatrix, QdcSpec, SPair, SearchConfig,
    Trace, TraceStep,
};

// 0 = success or partial bound, 1 = check failure, 2 = usage/parse error
const EXIT_OK: u8 = 0;
const EXIT_CHECK: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "symdual", version, about = "Symmetric self-dual codes over GF(p)")]
struct Cli {
    /// Pretty-print JSON output
    #[arg(long, global = true)]
    pretty: bool,
    /// Worker threads for distance/search engines
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a generator matrix file: self-dual, symmetric right half, AA^T = -I
    Verify { path: PathBuf },
    /// Minimum distance bounds for a generator matrix file
    Dist {
        path: PathBuf,
        /// Enumerate until the bound is exact
        #[arg(long)]
        exact: bool,
        /// Stop once the lower bound proves d >= target fails, i.e. certify d = target
        #[arg(long)]
        target: Option<usize>,
        /// Enumeration budget in codewords
        #[arg(long)]
        budget: Option<u64>,
        /// Seed for the randomized upper-bound pass
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Randomized information-set iterations before enumeration
        #[arg(long, default_value_t = 0)]
        iterations: u64,
    },
    /// Extend a symmetric self-dual code by 4 using one of the two constructions
    Construct {
        /// A or B
        #[arg(long)]
        method: String,
        /// Base generator matrix file, must be (I | A) with A symmetric
        #[arg(long)]
        base: PathBuf,
        /// Write the matrix here (a .trace.json sidecar is written next to it)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Search for eligible parameters instead of taking them from flags
        #[arg(long)]
        auto: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Method A: full codeword (x|y), comma-separated residues
        #[arg(long)]
        word: Option<String>,
        /// Method B: the eigen-ish row x, comma-separated residues
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        alpha: Option<i64>,
        #[arg(long)]
        beta: Option<i64>,
        /// Method A: s with s^2 = -1 + k
        #[arg(long)]
        s: Option<i64>,
        /// Method A: t with t^2 = -1 - k
        #[arg(long)]
        t: Option<i64>,
        /// Method B: h00,h01,h11 of the symmetric H
        #[arg(long)]
        h: Option<String>,
    },
    /// Run the staged search from a JSON config and store results in the catalog
    Search {
        /// JSON file mirroring the SearchConfig fields
        #[arg(long)]
        config: PathBuf,
        /// Catalog directory (default: $SYMDUAL_CATALOG or ./symdual-catalog)
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Inspect the on-disk catalog
    Catalog {
        #[command(subcommand)]
        cmd: CatalogCmd,
    },
    /// Quadratic double circulant generator
    Qdc {
        #[arg(long)]
        p: u16,
        #[arg(long)]
        ell: u16,
        #[arg(long)]
        a: u16,
        #[arg(long)]
        b: u16,
        #[arg(long)]
        bordered: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Iterations for the reported distance upper bound
        #[arg(long, default_value_t = 2000)]
        iterations: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// List the solution sets S_-1(p) and S_-I2(p)
    EnumSets {
        #[arg(long)]
        p: u16,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    List {
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    Show {
        id: String,
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    Export {
        id: String,
        out: PathBuf,
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
}

fn emit(pretty: bool, v: &serde_json::Value) {
    if pretty {
        println!("{}", serde_json::to_string_pretty(v).unwrap());
    } else {
        println!("{}", serde_json::to_string(v).unwrap());
    }
}

fn usage_err(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn check_err(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_CHECK)
}

fn load_code(path: &Path) -> Result<LinearCode, ExitCode> {
    let mat = matfile::read_matrix(path).map_err(usage_err)?;
    LinearCode::new(mat).map_err(check_err)
}

fn open_catalog(dir: &Option<PathBuf>) -> Result<Catalog, ExitCode> {
    match dir {
        Some(d) => Catalog::open(d),
        None => Catalog::open_default(),
    }
    .map_err(usage_err)
}

fn parse_vec(ctx: &FieldCtx, text: &str) -> Result<Vec<Fe>, String> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map(|v| ctx.reduce_i64(v))
                .map_err(|_| format!("bad entry {t:?}"))
        })
        .collect()
}

fn cmd_verify(pretty: bool, path: &Path) -> ExitCode {
    let mat = match matfile::read_matrix(path) {
        Ok(m) => m,
        Err(e) => return usage_err(e),
    };
    let n = mat.cols();
    let k = mat.rows();
    let code = LinearCode::new(mat);
    let (full_rank, code) = match code {
        Ok(c) => (true, Some(c)),
        Err(_) => (false, None),
    };
    let self_dual = code.as_ref().map(|c| c.is_self_dual()).unwrap_or(false);
    let symmetric = code.as_ref().map(|c| c.is_symmetric_standard()).unwrap_or(false);
    let antiortho = symmetric
        && code
            .as_ref()
            .map(|c| c.right_half().is_antiorthogonal())
            .unwrap_or(false);
    // randomized spot check that the observed distance respects Singleton
    let singleton = match &code {
        Some(c) => min_weight_upper(c, 200, 0, None).weight <= n - k + 1,
        None => false,
    };
    let pass = full_rank && self_dual && symmetric && antiortho && singleton;
    emit(
        pretty,
        &json!({
            "full_rank": full_rank,
            "self_dual": self_dual,
            "symmetric_right_half": symmetric,
            "antiorthogonal": antiortho,
            "singleton_consistent": singleton,
            "pass": pass,
        }),
    );
    if pass {
        ExitCode::from(EXIT_OK)
    } else {
        ExitCode::from(EXIT_CHECK)
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_dist(
    pretty: bool,
    path: &Path,
    exact: bool,
    target: Option<usize>,
    budget: Option<u64>,
    seed: u64,
    iterations: u64,
) -> ExitCode {
    let code = match load_code(path) {
        Ok(c) => c,
        Err(e) => return e,
    };
    let budget = budget.unwrap_or(if exact { u64::MAX / 2 } else { 50_000_000 });
    let witness = min_weight_upper(&code, iterations, seed, target);
    let hint = if iterations > 0 { Some(witness.weight) } else { None };
    let bound = min_distance_bz(&code, target.or(if exact { None } else { hint }), budget);
    let upper = bound.upper.min(witness.weight);
    emit(
        pretty,
        &json!({
            "lower": bound.lower,
            "upper": upper,
            "exact": bound.exact && bound.upper <= upper,
            "effort": {
                "enumerated": bound.effort.enumerated,
                "completed_weight": bound.effort.completed_weight,
                "info_set_ranks": bound.effort.info_set_ranks,
            },
            "seed": seed,
        }),
    );
    ExitCode::from(EXIT_OK)
}

fn auto_a_params(
    base: &LinearCode,
    seed: u64,
) -> Result<ConstructionAParams, String> {
    let ctx = base.ctx().clone();
    let pair = eligible_codewords(base, 20_000, seed)
        .into_iter()
        .next()
        .ok_or("no eligible codeword found")?;
    let alpha_beta = enum_s_minus1(&ctx).into_iter().next().ok_or("S_-1 is empty")?;
    let s = *ctx.sqrt(ctx.sub(pair.k, 1)).first().ok_or("-1+k is not a square")?;
    let t = *ctx
        .sqrt(ctx.neg(ctx.add(1, pair.k)))
        .first()
        .ok_or("-1-k is not a square")?;
    Ok(ConstructionAParams { pair, alpha_beta, s, t })
}

fn auto_b_params(base: &LinearCode, seed: u64) -> Result<ConstructionBParams, String> {
    use rand::{Rng, SeedableRng};
    let ctx = base.ctx().clone();
    let a = base.right_half();
    let p = ctx.p();
    let mats: Vec<PMatrix> = enum_s_minus_i2(&ctx)
        .into_iter()
        .filter(|m| m.beta != 0)
        .collect();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..20_000 {
        let x: Vec<Fe> = (0..base.k()).map(|_| rng.gen_range(0..p)).collect();
        if x.iter().all(|&v| v == 0) {
            continue;
        }
        for pm in &mats {
            let m = match build_m(&x, &a, pm) {
                Ok(m) => m,
                Err(_) => continue,
            };
            if let Some(h) = solve_h(&m, pm).into_iter().next() {
                return Ok(ConstructionBParams { x, p_mat: pm.clone(), h });
            }
        }
    }
    Err("no eligible (x, P, H) found".to_string())
}

#[allow(clippy::too_many_arguments)]
fn cmd_construct(
    method: &str,
    base_path: &Path,
    out: Option<&Path>,
    auto: bool,
    seed: u64,
    word: Option<&str>,
    x: Option<&str>,
    alpha: Option<i64>,
    beta: Option<i64>,
    s: Option<i64>,
    t: Option<i64>,
    h: Option<&str>,
) -> ExitCode {
    let base = match load_code(base_path) {
        Ok(c) => c,
        Err(e) => return e,
    };
    let ctx = base.ctx().clone();
    let (result, step) = match method {
        "A" | "a" => {
            let params = if auto {
                match auto_a_params(&base, seed) {
                    Ok(p) => p,
                    Err(e) => return check_err(e),
                }
            } else {
                let word = match word
                    .ok_or("method A needs --word".to_string())
                    .and_then(|w| parse_vec(&ctx, w))
                {
                    Ok(w) => w,
                    Err(e) => return usage_err(e),
                };
                let (alpha, beta, s, t) = match (alpha, beta, s, t) {
                    (Some(a), Some(b), Some(s), Some(t)) => (a, b, s, t),
                    _ => return usage_err("method A needs --alpha --beta --s --t"),
                };
                ConstructionAParams {
                    pair: symdual::CodewordPair::from_word(&ctx, &word),
                    alpha_beta: SPair {
                        alpha: ctx.reduce_i64(alpha),
                        beta: ctx.reduce_i64(beta),
                    },
                    s: ctx.reduce_i64(s),
                    t: ctx.reduce_i64(t),
                }
            };
            let step = TraceStep::A {
                word: params
                    .pair
                    .x
                    .iter()
                    .chain(params.pair.y.iter())
                    .copied()
                    .collect(),
                alpha: params.alpha_beta.alpha,
                beta: params.alpha_beta.beta,
                s: params.s,
                t: params.t,
            };
            (construct_a(&base, &params).map_err(|e| e.to_string()), step)
        }
        "B" | "b" => {
            let params = if auto {
                match auto_b_params(&base, seed) {
                    Ok(p) => p,
                    Err(e) => return check_err(e),
                }
            } else {
                let x = match x.ok_or("method B needs --x".to_string()).and_then(|v| parse_vec(&ctx, v)) {
                    Ok(v) => v,
                    Err(e) => return usage_err(e),
                };
                let (alpha, beta) = match (alpha, beta) {
                    (Some(a), Some(b)) => (ctx.reduce_i64(a), ctx.reduce_i64(b)),
                    _ => return usage_err("method B needs --alpha --beta"),
                };
                let h = match h.ok_or("method B needs --h h00,h01,h11".to_string()).and_then(|v| parse_vec(&ctx, v)) {
                    Ok(v) if v.len() == 3 => v,
                    Ok(_) => return usage_err("--h takes exactly three entries"),
                    Err(e) => return usage_err(e),
                };
                ConstructionBParams {
                    x,
                    p_mat: PMatrix::from_pair(&ctx, SPair { alpha, beta }),
                    h: Mat::from_flat(&ctx, 2, 2, vec![h[0], h[1], h[1], h[2]]),
                }
            };
            let step = TraceStep::B {
                x: params.x.clone(),
                alpha: params.p_mat.alpha,
                beta: params.p_mat.beta,
                h: (params.h.get(0, 0), params.h.get(0, 1), params.h.get(1, 1)),
            };
            (construct_b(&base, &params).map_err(|e| e.to_string()), step)
        }
        other => return usage_err(format!("unknown method {other:?}, expected A or B")),
    };
    let code = match result {
        Ok(c) => c,
        Err(e) => return check_err(e),
    };
    let text = matfile::format_matrix(code.gen());
    print!("{text}");
    if let Some(out) = out {
        if let Err(e) = std::fs::write(out, &text) {
            return check_err(e);
        }
        let trace = Trace { base_id: 0, seed, steps: vec![step] };
        let sidecar = out.with_extension("trace.json");
        let body = serde_json::to_string_pretty(&trace).unwrap();
        if let Err(e) = std::fs::write(sidecar, body + "\n") {
            return check_err(e);
        }
    }
    ExitCode::from(EXIT_OK)
}

fn default_bases(p: u16) -> Result<Vec<LinearCode>, String> {
    let ctx = FieldCtx::new(p).map_err(|e| e.to_string())?;
    let id = Mat::identity(&ctx, 2);
    enum_s_minus_i2(&ctx)
        .into_iter()
        .map(|pm| {
            let gen = id.hstack(&pm.mat).map_err(|e| e.to_string())?;
            LinearCode::new(gen).map_err(|e| e.to_string())
        })
        .collect()
}

fn cmd_search(pretty: bool, config_path: &Path, catalog_dir: &Option<PathBuf>) -> ExitCode {
    let text = match std::fs::read_to_string(config_path) {
        Ok(t) => t,
        Err(e) => return usage_err(e),
    };
    let cfg: SearchConfig = match serde_json::from_str(&text) {
        Ok(c) => c,
        Err(e) => return usage_err(format!("bad config: {e}")),
    };
    let bases = match default_bases(cfg.p) {
        Ok(b) => b,
        Err(e) => return usage_err(e),
    };
    let cat = match open_catalog(catalog_dir) {
        Ok(c) => c,
        Err(e) => return e,
    };
    let results = run_search(&cfg, &bases);
    let mut out = Vec::new();
    for r in &results {
        match cat.add(&r.code, r.distance_upper, false, r.fingerprint.clone(), Some(r.trace.clone())) {
            Ok((rec, added)) => out.push(json!({
                "id": rec.id,
                "n": rec.n,
                "k": rec.k,
                "distance_upper": r.distance_upper,
                "added": added,
            })),
            Err(e) => return check_err(e),
        }
    }
    emit(
        pretty,
        &json!({ "seed": cfg.seed, "found": results.len(), "records": out }),
    );
    ExitCode::from(EXIT_OK)
}

fn cmd_catalog(pretty: bool, cmd: &CatalogCmd) -> ExitCode {
    match cmd {
        CatalogCmd::List { catalog } => {
            let cat = match open_catalog(catalog) {
                Ok(c) => c,
                Err(e) => return e,
            };
            let records = match cat.records() {
                Ok(r) => r,
                Err(e) => return check_err(e),
            };
            let mut ok = Vec::new();
            let mut bad = Vec::new();
            for r in records {
                match r {
                    Ok(rec) => ok.push(serde_json::to_value(&rec).unwrap()),
                    Err(e) => bad.push(e),
                }
            }
            emit(pretty, &json!({ "records": ok, "corrupt_lines": bad }));
            if bad.is_empty() {
                ExitCode::from(EXIT_OK)
            } else {
                ExitCode::from(EXIT_CHECK)
            }
        }
        CatalogCmd::Show { id, catalog } => {
            let cat = match open_catalog(catalog) {
                Ok(c) => c,
                Err(e) => return e,
            };
            let records = match cat.records() {
                Ok(r) => r,
                Err(e) => return check_err(e),
            };
            let rec = records.into_iter().flatten().find(|r| r.id == *id);
            let rec = match rec {
                Some(r) => r,
                None => return check_err(format!("record {id} not found")),
            };
            match cat.load_code(id) {
                Ok(code) => {
                    let mut v = serde_json::to_value(&rec).unwrap();
                    v["matrix"] = json!(matfile::format_matrix(code.gen()));
                    emit(pretty, &v);
                    ExitCode::from(EXIT_OK)
                }
                Err(e) => check_err(e),
            }
        }
        CatalogCmd::Export { id, out, catalog } => {
            let cat = match open_catalog(catalog) {
                Ok(c) => c,
                Err(e) => return e,
            };
            match cat.export(id, out) {
                Ok(()) => ExitCode::from(EXIT_OK),
                Err(e) => check_err(e),
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_qdc(
    pretty: bool,
    p: u16,
    ell: u16,
    a: Fe,
    b: Fe,
    bordered: bool,
    out: Option<&Path>,
    iterations: u64,
    seed: u64,
) -> ExitCode {
    let spec = QdcSpec { p, ell, a, b, bordered };
    let code = match qdc_generator(&spec) {
        Ok(c) => c,
        Err(e) => return check_err(e),
    };
    let witness = min_weight_upper(&code, iterations, seed, None);
    let text = matfile::format_matrix(code.gen());
    if let Some(out) = out {
        if let Err(e) = std::fs::write(out, &text) {
            return check_err(e);
        }
    }
    let mut report = json!({
        "p": p,
        "ell": ell,
        "a": a,
        "b": b,
        "bordered": bordered,
        "n": code.n(),
        "k": code.k(),
        "self_dual": code.is_self_dual(),
        "distance_upper": witness.weight,
        "seed": seed,
    });
    if out.is_none() {
        report["matrix"] = json!(text);
    }
    emit(pretty, &report);
    ExitCode::from(EXIT_OK)
}

fn cmd_enum_sets(p: u16) -> ExitCode {
    let ctx = match FieldCtx::new(p) {
        Ok(c) => c,
        Err(e) => return usage_err(e),
    };
    let pairs = enum_s_minus1(&ctx);
    println!("S_-1({p}): {} pairs", pairs.len());
    for pr in &pairs {
        println!("  ({}, {})", pr.alpha, pr.beta);
    }
    let mats = enum_s_minus_i2(&ctx);
    println!("S_-I2({p}): {} matrices", mats.len());
    for m in &mats {
        println!(
            "  [[{}, {}], [{}, {}]]",
            m.mat.get(0, 0),
            m.mat.get(0, 1),
            m.mat.get(1, 0),
            m.mat.get(1, 1)
        );
    }
    ExitCode::from(EXIT_OK)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        // ignore the error if a pool already exists (tests call main twice)
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match &cli.cmd {
        Cmd::Verify { path } => cmd_verify(cli.pretty, path),
        Cmd::Dist { path, exact, target, budget, seed, iterations } => {
            cmd_dist(cli.pretty, path, *exact, *target, *budget, *seed, *iterations)
        }
        Cmd::Construct {
            method,
            base,
            out,
            auto,
            seed,
            word,
            x,
            alpha,
            beta,
            s,
            t,
            h,
        } => cmd_construct(
            method,
            base,
            out.as_deref(),
            *auto,
            *seed,
            word.as_deref(),
            x.as_deref(),
            *alpha,
            *beta,
            *s,
            *t,
            h.as_deref(),
        ),
        Cmd::Search { config, catalog } => cmd_search(cli.pretty, config, catalog),
        Cmd::Catalog { cmd } => cmd_catalog(cli.pretty, cmd),
        Cmd::Qdc { p, ell, a, b, bordered, out, iterations, seed } => cmd_qdc(
            cli.pretty,
            *p,
            *ell,
            *a,
            *b,
            *bordered,
            out.as_deref(),
            *iterations,
            *seed,
        ),
        Cmd::EnumSets { p } => cmd_enum_sets(*p),
    }
}
