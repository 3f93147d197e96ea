//! On-disk code catalog: a directory of matrix files plus an append-only
//! JSON-lines index. Record ids are content hashes of the canonical
//! matrix file bytes, so identical codes deduplicate for free.

use crate::matfile::{format_matrix, parse_matrix};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};
use symdual::{LinearCode, Trace};
use thiserror::Error;

pub const CATALOG_ENV: &str = "SYMDUAL_CATALOG";
const INDEX_FILE: &str = "index.jsonl";

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("record {0} not found")]
    NotFound(String),
    #[error("record {id} is corrupted: {reason}")]
    Corrupt { id: String, reason: String },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogRecord {
    pub id: String,
    pub p: u16,
    pub n: usize,
    pub k: usize,
    pub distance: usize,
    /// "exact" when certified, "upper-only" otherwise
    pub certification: String,
    pub fingerprint: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Trace>,
}

pub struct Catalog {
    dir: PathBuf,
}

pub fn content_id(matrix_bytes: &str) -> String {
    let mut h = Sha256::new();
    h.update(matrix_bytes.as_bytes());
    format!("{:x}", h.finalize())
}

impl Catalog {
    pub fn open(dir: &Path) -> Result<Catalog, CatalogError> {
        std::fs::create_dir_all(dir)?;
        Ok(Catalog { dir: dir.to_path_buf() })
    }

    /// Directory from SYMDUAL_CATALOG, or ./symdual-catalog.
    pub fn open_default() -> Result<Catalog, CatalogError> {
        let dir = std::env::var_os(CATALOG_ENV)
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from("symdual-catalog"));
        Catalog::open(&dir)
    }

    fn index_path(&self) -> PathBuf {
        self.dir.join(INDEX_FILE)
    }

    fn matrix_path(&self, id: &str) -> PathBuf {
        self.dir.join(format!("{id}.mat"))
    }

    /// Store a code. Returns the record and whether it was newly added
    /// (false when the id already existed).
    pub fn add(
        &self,
        code: &LinearCode,
        distance: usize,
        certified: bool,
        fingerprint: Vec<u64>,
        trace: Option<Trace>,
    ) -> Result<(CatalogRecord, bool), CatalogError> {
        let bytes = format_matrix(code.gen());
        let id = content_id(&bytes);
        let record = CatalogRecord {
            id: id.clone(),
            p: code.ctx().p(),
            n: code.n(),
            k: code.k(),
            distance,
            certification: if certified { "exact" } else { "upper-only" }.to_string(),
            fingerprint,
            trace,
        };
        if self.records()?.iter().any(|r| match r {
            Ok(rec) => rec.id == id,
            Err(_) => false,
        }) {
            return Ok((record, false));
        }
        std::fs::write(self.matrix_path(&id), &bytes)?;
        let mut line = serde_json::to_string(&record).expect("record serializes");
        line.push('\n');
        use std::io::Write;
        let mut f = std::fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(self.index_path())?;
        f.write_all(line.as_bytes())?;
        Ok((record, true))
    }

    /// All index records; unparseable lines are surfaced, not dropped.
    pub fn records(&self) -> Result<Vec<Result<CatalogRecord, String>>, CatalogError> {
        let path = self.index_path();
        if !path.exists() {
            return Ok(Vec::new());
        }
        let text = std::fs::read_to_string(path)?;
        Ok(text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| serde_json::from_str::<CatalogRecord>(l).map_err(|e| e.to_string()))
            .collect())
    }

    /// Load and re-verify a record's matrix: content hash must match the
    /// id and the code must still be self-dual.
    pub fn load_code(&self, id: &str) -> Result<LinearCode, CatalogError> {
        let path = self.matrix_path(id);
        if !path.exists() {
            return Err(CatalogError::NotFound(id.to_string()));
        }
        let bytes = std::fs::read_to_string(&path)?;
        if content_id(&bytes) != id {
            return Err(CatalogError::Corrupt {
                id: id.to_string(),
                reason: "content hash mismatch".to_string(),
            });
        }
        let mat = parse_matrix(&bytes).map_err(|e| CatalogError::Corrupt {
            id: id.to_string(),
            reason: e.to_string(),
        })?;
        let code = LinearCode::new(mat).map_err(|e| CatalogError::Corrupt {
            id: id.to_string(),
            reason: e.to_string(),
        })?;
        if !code.is_self_dual() {
            return Err(CatalogError::Corrupt {
                id: id.to_string(),
                reason: "matrix no longer verifies self-dual".to_string(),
            });
        }
        Ok(code)
    }

    pub fn export(&self, id: &str, out: &Path) -> Result<(), CatalogError> {
        let code = self.load_code(id)?;
        std::fs::write(out, format_matrix(code.gen()))?;
        Ok(())
    }
}
