use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::CliError;

/// Results keyed by the code version and the full configuration.
pub struct Cache {
    dir: Option<PathBuf>,
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Cache { dir }
    }

    fn path(dir: &Path, key: &serde_json::Value) -> PathBuf {
        let mut h = Sha256::new();
        h.update(concat!(env!("CARGO_PKG_NAME"), " ", env!("CARGO_PKG_VERSION"), "\n"));
        h.update(key.to_string());
        let hex: String = h.finalize().iter().map(|b| format!("{b:02x}")).collect();
        dir.join(format!("{hex}.out"))
    }

    /// The stored bytes for `key`, or `compute()` stored under it.
    pub fn get_or_compute(
        &self,
        key: serde_json::Value,
        compute: impl FnOnce() -> Result<Vec<u8>, CliError>,
    ) -> Result<Vec<u8>, CliError> {
        let Some(dir) = &self.dir else {
            return compute();
        };
        let path = Self::path(dir, &key);
        if let Ok(bytes) = fs::read(&path) {
            return Ok(bytes);
        }
        let bytes = compute()?;
        fs::create_dir_all(dir)?;
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        fs::File::create(&tmp)?.write_all(&bytes)?;
        fs::rename(&tmp, &path)?;
        Ok(bytes)
    }
}
