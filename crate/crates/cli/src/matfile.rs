//! The on-disk matrix format.
//!
//! Line 1: `symdual-matrix v1`
//! Line 2: `p=<int> n=<int> k=<int>`
//! Then k lines of n space-separated decimal residues.
//! Lines starting with `#` are comments; a trailing newline is required.

use std::path::Path;
use symdual::{FieldCtx, Mat};
use thiserror::Error;

pub const MAGIC: &str = "symdual-matrix v1";

#[derive(Debug, Error)]
pub enum FileError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("parse error: {0}")]
    Parse(String),
}

fn parse_err<T>(msg: impl Into<String>) -> Result<T, FileError> {
    Err(FileError::Parse(msg.into()))
}

pub fn parse_matrix(text: &str) -> Result<Mat, FileError> {
    if !text.ends_with('\n') {
        return parse_err("missing trailing newline");
    }
    let mut lines = text.lines().filter(|l| !l.trim_start().starts_with('#'));
    match lines.next() {
        Some(l) if l.trim_end() == MAGIC => {}
        other => return parse_err(format!("bad magic line: {:?}", other)),
    }
    let header = match lines.next() {
        Some(l) => l,
        None => return parse_err("missing header line"),
    };
    let mut p: Option<u16> = None;
    let mut n: Option<usize> = None;
    let mut k: Option<usize> = None;
    for field in header.split_whitespace() {
        let (key, val) = match field.split_once('=') {
            Some(kv) => kv,
            None => return parse_err(format!("bad header field {field:?}")),
        };
        match key {
            "p" => p = Some(val.parse().map_err(|_| FileError::Parse(format!("bad p={val}")))?),
            "n" => n = Some(val.parse().map_err(|_| FileError::Parse(format!("bad n={val}")))?),
            "k" => k = Some(val.parse().map_err(|_| FileError::Parse(format!("bad k={val}")))?),
            _ => return parse_err(format!("unknown header key {key:?}")),
        }
    }
    let (p, n, k) = match (p, n, k) {
        (Some(p), Some(n), Some(k)) => (p, n, k),
        _ => return parse_err("header must define p, n, and k"),
    };
    let ctx = FieldCtx::new(p).map_err(|e| FileError::Parse(e.to_string()))?;
    let mut data = Vec::with_capacity(n * k);
    for row in 0..k {
        let line = match lines.next() {
            Some(l) => l,
            None => return parse_err(format!("expected {k} rows, got {row}")),
        };
        let mut count = 0;
        for tok in line.split_whitespace() {
            let v: u16 = tok
                .parse()
                .map_err(|_| FileError::Parse(format!("row {row}: bad entry {tok:?}")))?;
            if v >= p {
                return parse_err(format!("row {row}: entry {v} not reduced mod {p}"));
            }
            data.push(v);
            count += 1;
        }
        if count != n {
            return parse_err(format!("row {row}: expected {n} entries, got {count}"));
        }
    }
    if lines.next().is_some() {
        return parse_err(format!("trailing data after {k} rows"));
    }
    Ok(Mat::from_flat(&ctx, k, n, data))
}

pub fn format_matrix(m: &Mat) -> String {
    let mut out = String::new();
    out.push_str(MAGIC);
    out.push('\n');
    out.push_str(&format!("p={} n={} k={}\n", m.ctx().p(), m.cols(), m.rows()));
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn read_matrix(path: &Path) -> Result<Mat, FileError> {
    parse_matrix(&std::fs::read_to_string(path)?)
}
