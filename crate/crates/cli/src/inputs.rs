//! Resolution of command arguments into files, fixtures and quandles, with a
//! record of everything read.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use sha2::{Digest, Sha256};

use qhom_core::catalog::{self, fixtures};
use qhom_core::quandle::{parse_quandle, FiniteQuandle, QuandleFile, RackTable};

use crate::error::{CliError, CliResult};

/// Reads inputs and remembers a SHA-256 digest of each one.
#[derive(Debug, Default)]
pub struct Inputs {
    digests: Mutex<BTreeMap<String, String>>,
    overrides: BTreeMap<String, PathBuf>,
}

fn digest(text: &str) -> String {
    format!("{:x}", Sha256::digest(text.as_bytes()))
}

impl Inputs {
    pub fn new() -> Self {
        Self::default()
    }

    /// Catalog keys served from the given table files instead.
    pub fn with_overrides(overrides: BTreeMap<String, PathBuf>) -> Self {
        Inputs {
            digests: Mutex::default(),
            overrides,
        }
    }

    pub fn digests(&self) -> BTreeMap<String, String> {
        self.digests.lock().unwrap().clone()
    }

    fn record(&self, name: String, text: &str) {
        self.digests.lock().unwrap().insert(name, digest(text));
    }

    /// A file on disk, or else a bundled fixture of the same file name.
    pub fn read(&self, path: &Path) -> CliResult<String> {
        if path.exists() {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
            self.record(path.display().to_string(), &text);
            return Ok(text);
        }
        let name = path.file_name().and_then(|n| n.to_str()).unwrap_or_default();
        match fixtures::get(name) {
            Some(text) if path.parent().is_none_or(|p| p.as_os_str().is_empty()) => {
                self.record(format!("fixture:{name}"), text);
                Ok(text.to_string())
            }
            _ => Err(CliError::input(format!("{}: no such file or fixture", path.display()))),
        }
    }

    fn table_file(&self, path: &Path) -> CliResult<QuandleFile> {
        let text = self.read(path)?;
        parse_quandle(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
    }

    /// The operation table behind `source`, axioms unchecked.
    pub fn raw_table(&self, source: &str) -> CliResult<QuandleFile> {
        if let Some(path) = self.file_source(source) {
            return self.table_file(&path);
        }
        let q = catalog::lookup(source)?;
        self.record(format!("catalog:{source}"), source);
        Ok(QuandleFile {
            rows: q.rows(),
            labels: q.labels().map(<[String]>::to_vec),
        })
    }

    fn file_source(&self, source: &str) -> Option<PathBuf> {
        if let Some(p) = self.overrides.get(source) {
            return Some(p.clone());
        }
        let p = Path::new(source);
        p.is_file().then(|| p.to_path_buf())
    }

    pub fn rack(&self, source: &str) -> CliResult<RackTable> {
        let f = self.raw_table(source)?;
        let rack = RackTable::new(f.rows).map_err(|e| CliError::input(format!("{source}: {e}")))?;
        match f.labels {
            Some(l) => Ok(rack.with_labels(l)?),
            None => Ok(rack),
        }
    }

    pub fn quandle(&self, source: &str) -> CliResult<FiniteQuandle> {
        FiniteQuandle::from_rack(self.rack(source)?)
            .map_err(|e| CliError::input(format!("{source}: {e}")))
    }
}
