//! On-disk result cache keyed by a digest of the run description.

use std::fs;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const ENV_CACHE_DIR: &str = "TORIC_CACHE_DIR";

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Entry {
    pub text: String,
    pub csv: Option<String>,
}

pub struct Store {
    dir: PathBuf,
}

pub fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

impl Store {
    /// The flag wins over the environment; no directory means no cache.
    pub fn open(flag: Option<PathBuf>) -> Option<Store> {
        let dir = flag.or_else(|| std::env::var_os(ENV_CACHE_DIR).map(PathBuf::from))?;
        Some(Store { dir })
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// A missing or unreadable entry is a miss.
    pub fn get(&self, key: &str) -> Option<Entry> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        serde_json::from_str(&text).ok()
    }

    /// Best effort: a cache that cannot be written is skipped.
    pub fn put(&self, key: &str, entry: &Entry) {
        if fs::create_dir_all(&self.dir).is_err() {
            return;
        }
        let tmp = self.dir.join(format!("{key}.tmp"));
        let body = serde_json::to_string(entry).expect("cache entries serialize");
        if fs::write(&tmp, body).is_ok() {
            let _ = fs::rename(&tmp, self.path(key));
        }
    }
}
