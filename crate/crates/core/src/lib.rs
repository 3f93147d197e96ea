//! Symmetric self-dual codes over prime fields GF(p).
//!
//! Construction of self-dual codes with symmetric standard generators,
//! exact and randomized minimum-distance computation, quadratic-residue
//! double circulant generators, and seeded randomized search drivers.

pub mod builtin;
pub mod code;
pub mod construct;
pub mod gf;
pub mod matrix;
pub mod qdc;
pub mod search;
pub mod solutionsets;

pub use builtin::{builtin, builtin_codes, BuiltinCode};
pub use code::{
    min_distance_bruteforce, min_distance_bz, min_weight_upper, truncated_weight_enum, CodeError,
    DistanceBound, LinearCode, MonomialTransform, WeightWitness,
};
pub use construct::{
    build_m, construct_a, construct_b, eligible_codewords, solve_h, CodewordPair, ConstructError,
    ConstructionAParams, ConstructionBParams,
};
pub use gf::{Fe, FieldCtx, GfError};
pub use matrix::{Mat, MatError};
pub use qdc::{qdc_completions, qdc_generator, QdcCompletion, QdcError, QdcSpec};
pub use search::{
    replay_trace, run_search, MethodSelector, SearchConfig, SearchError, SearchResult, Trace,
    TraceStep,
};
pub use solutionsets::{enum_s_minus1, enum_s_minus_i2, PMatrix, SPair};
