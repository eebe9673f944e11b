//! Versioned JSON cache of root-system tables.
//!
//! Integers are written as decimal strings and rationals as `"p/q"` so that
//! readers in other languages never round through floating point.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{RootSystem, RootType};
use crate::error::{Error, Result};

pub const CACHE_FORMAT_VERSION: u32 = 1;

/// Environment variable naming the cache directory.
pub const CACHE_ENV_VAR: &str = "CUPPRV_CACHE_DIR";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemTables {
    pub format_version: u32,
    pub type_label: String,
    pub rank: String,
    pub simple_roots: Vec<Vec<String>>,
    pub positive_roots: Vec<Vec<String>>,
    pub positive_roots_simple_coeffs: Vec<Vec<String>>,
    pub cartan_matrix: Vec<Vec<String>>,
    pub rho: Vec<String>,
    pub form: Vec<Vec<String>>,
}

fn strings(v: &[i64]) -> Vec<String> {
    v.iter().map(i64::to_string).collect()
}

impl RootSystemTables {
    pub fn from_root_system(rs: &RootSystem) -> Self {
        RootSystemTables {
            format_version: CACHE_FORMAT_VERSION,
            type_label: rs.root_type().to_string(),
            rank: rs.rank().to_string(),
            simple_roots: rs
                .simple_roots()
                .iter()
                .map(|w| strings(w.coords()))
                .collect(),
            positive_roots: rs
                .positive_roots()
                .iter()
                .map(|r| strings(r.weight.coords()))
                .collect(),
            positive_roots_simple_coeffs: rs
                .positive_roots()
                .iter()
                .map(|r| strings(&r.coeffs))
                .collect(),
            cartan_matrix: rs.cartan().iter().map(|r| strings(r)).collect(),
            rho: strings(rs.rho().coords()),
            form: rs
                .form_matrix()
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|x| format!("{}/{}", x.numer(), x.denom()))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("tables serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Cache(e.to_string()))
    }

    pub fn file_name(root_type: RootType, rank: usize) -> String {
        format!("rootsys-{root_type}{rank}-v{CACHE_FORMAT_VERSION}.json")
    }
}

impl RootSystem {
    /// Loads the root system from `dir`, writing the cache file when it is
    /// missing. A cache file that disagrees with the freshly built tables is
    /// rejected.
    pub fn load_or_build(
        dir: &Path,
        root_type: RootType,
        rank: usize,
    ) -> Result<(RootSystem, PathBuf)> {
        let rs = RootSystem::new(root_type, rank)?;
        let expected = RootSystemTables::from_root_system(&rs);
        let path = dir.join(RootSystemTables::file_name(root_type, rank));
        if path.exists() {
            let text = fs::read_to_string(&path).map_err(|e| Error::Cache(e.to_string()))?;
            let cached = RootSystemTables::from_json(&text)?;
            if cached.format_version != CACHE_FORMAT_VERSION {
                return Err(Error::Cache(format!(
                    "{} has format version {}, expected {CACHE_FORMAT_VERSION}",
                    path.display(),
                    cached.format_version
                )));
            }
            if cached != expected {
                return Err(Error::Cache(format!(
                    "{} does not match the built tables",
                    path.display()
                )));
            }
        } else {
            fs::create_dir_all(dir).map_err(|e| Error::Cache(e.to_string()))?;
            fs::write(&path, expected.to_json()).map_err(|e| Error::Cache(e.to_string()))?;
        }
        Ok((rs, path))
    }
}
