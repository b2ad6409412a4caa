//! Content-addressed JSON cache. Keys are the SHA-256 of the operation name,
//! its canonical arguments and a version tag; files are replaced atomically.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Bump when any cached computation changes its output.
pub const VERSION: &str = concat!("macllt-", env!("CARGO_PKG_VERSION"), "-1");

#[derive(Serialize, Deserialize)]
struct Record<T> {
    version: String,
    op: String,
    args: String,
    value: T,
}

pub struct Cache {
    dir: Option<PathBuf>,
    version: String,
    memory: Mutex<HashMap<String, String>>,
}

impl Cache {
    /// A cache rooted at `dir`. When the directory cannot be created the
    /// cache warns once and keeps entries in memory only.
    pub fn new(dir: Option<PathBuf>) -> Self {
        Self::with_version(dir, VERSION)
    }

    pub fn with_version(dir: Option<PathBuf>, version: &str) -> Self {
        let dir = dir.and_then(|d| match fs::create_dir_all(&d) {
            Ok(()) => Some(d),
            Err(e) => {
                eprintln!(
                    "warning: cache directory {} unusable ({e}); caching in memory only",
                    d.display()
                );
                None
            }
        });
        Cache {
            dir,
            version: version.to_string(),
            memory: Mutex::new(HashMap::new()),
        }
    }

    pub fn in_memory() -> Self {
        Self::new(None)
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn key(&self, op: &str, args: &str) -> String {
        let mut h = Sha256::new();
        for part in [self.version.as_str(), op, args] {
            h.update((part.len() as u64).to_le_bytes());
            h.update(part.as_bytes());
        }
        hex::encode(h.finalize())
    }

    fn path(&self, key: &str) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(format!("{key}.json")))
    }

    /// Cached value, or `None` when absent, corrupt or from another version.
    pub fn get<T: DeserializeOwned>(&self, op: &str, args: &str) -> Option<T> {
        let key = self.key(op, args);
        let text = match self.path(&key) {
            Some(p) => fs::read_to_string(p).ok(),
            None => None,
        }
        .or_else(|| self.memory.lock().expect("cache lock").get(&key).cloned())?;
        let rec: Record<T> = serde_json::from_str(&text).ok()?;
        (rec.version == self.version && rec.op == op && rec.args == args).then_some(rec.value)
    }

    pub fn put<T: Serialize>(&self, op: &str, args: &str, value: &T) {
        let key = self.key(op, args);
        let rec = Record {
            version: self.version.clone(),
            op: op.to_string(),
            args: args.to_string(),
            value,
        };
        let text = serde_json::to_string(&rec).expect("cache records serialize");
        if let (Some(dir), Some(path)) = (&self.dir, self.path(&key)) {
            let written = tempfile::NamedTempFile::new_in(dir)
                .and_then(|mut f| {
                    f.write_all(text.as_bytes())?;
                    Ok(f)
                })
                .and_then(|f| f.persist(&path).map_err(|e| e.error));
            match written {
                Ok(_) => return,
                Err(e) => eprintln!("warning: cache write to {} failed ({e})", path.display()),
            }
        }
        self.memory.lock().expect("cache lock").insert(key, text);
    }

    pub fn get_or_compute<T, E>(
        &self,
        op: &str,
        args: &str,
        compute: impl FnOnce() -> Result<T, E>,
    ) -> Result<T, E>
    where
        T: Serialize + DeserializeOwned,
    {
        if let Some(v) = self.get(op, args) {
            return Ok(v);
        }
        let v = compute()?;
        self.put(op, args, &v);
        Ok(v)
    }
}
