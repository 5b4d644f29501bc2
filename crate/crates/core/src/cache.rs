//! On-disk report cache keyed by the canonical input.

use crate::poly::Polynomial;
use crate::verdict::{Options, SCHEMA_VERSION, TOOL_VERSION};
use sha2::{Digest, Sha256};
use std::io::{self, Write};
use std::path::{Path, PathBuf};

/// One file per key; entries are written once via rename, so concurrent
/// readers never see a partial report.
#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: impl AsRef<Path>) -> io::Result<Self> {
        std::fs::create_dir_all(dir.as_ref())?;
        Ok(Cache { dir: dir.as_ref().to_path_buf() })
    }

    /// Hex sha256 of the canonical text of `f` (sorted terms), the variable
    /// order, the options and the tool version.
    pub fn key(f: &Polynomial, vars: &[String], opts: &Options) -> String {
        let mut h = Sha256::new();
        h.update(format!("lct/{TOOL_VERSION}/schema{SCHEMA_VERSION}\n"));
        h.update(vars.join(","));
        h.update("\n");
        h.update(f.to_text(vars));
        h.update("\n");
        h.update(serde_json::to_string(opts).expect("options serialize"));
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn get(&self, key: &str) -> Option<String> {
        std::fs::read_to_string(self.path(key)).ok()
    }

    pub fn put(&self, key: &str, json: &str) -> io::Result<()> {
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(json.as_bytes())?;
        tmp.persist(self.path(key)).map_err(|e| e.error)?;
        Ok(())
    }
}
