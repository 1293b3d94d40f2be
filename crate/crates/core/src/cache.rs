//! Checksummed on-disk cache for deterministic, expensive-to-rebuild tables.
//!
//! Each entry is one JSON file holding the payload as a string next to its
//! SHA-256 digest. A missing, unreadable or corrupted entry is treated as a
//! miss and rebuilt; the cache never changes an answer.

use std::env;
use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::Result;

/// Overrides the default cache location.
pub const CACHE_DIR_ENV: &str = "DIMDATA_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct Envelope {
    key: String,
    sha256: String,
    payload: String,
}

#[derive(Clone, Debug, Default)]
pub struct DiskCache {
    dir: Option<PathBuf>,
}

impl DiskCache {
    pub fn disabled() -> Self {
        Self { dir: None }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        Self {
            dir: Some(dir.into()),
        }
    }

    /// `$DIMDATA_CACHE_DIR`, else `$XDG_CACHE_HOME/dimdata`, else
    /// `$HOME/.cache/dimdata`; disabled if none is set.
    pub fn from_env() -> Self {
        let dir = env::var_os(CACHE_DIR_ENV)
            .map(PathBuf::from)
            .or_else(|| env::var_os("XDG_CACHE_HOME").map(|p| PathBuf::from(p).join("dimdata")))
            .or_else(|| env::var_os("HOME").map(|p| PathBuf::from(p).join(".cache").join("dimdata")));
        Self { dir }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn is_enabled(&self) -> bool {
        self.dir.is_some()
    }

    fn path_for(&self, key: &str) -> Option<PathBuf> {
        let safe: String = key
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '.' { c } else { '_' })
            .collect();
        self.dir.as_ref().map(|d| d.join(format!("{safe}.json")))
    }

    pub fn load<T: DeserializeOwned>(&self, key: &str) -> Option<T> {
        let path = self.path_for(key)?;
        let text = fs::read_to_string(path).ok()?;
        let env: Envelope = serde_json::from_str(&text).ok()?;
        if env.key != key || env.sha256 != digest(&env.payload) {
            return None;
        }
        serde_json::from_str(&env.payload).ok()
    }

    pub fn store<T: Serialize>(&self, key: &str, value: &T) -> Result<()> {
        let Some(path) = self.path_for(key) else {
            return Ok(());
        };
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent)?;
        }
        let payload = serde_json::to_string(value)?;
        let env = Envelope {
            key: key.to_string(),
            sha256: digest(&payload),
            payload,
        };
        // write-then-rename so concurrent readers never see a torn file
        let tmp = path.with_extension(format!("json.{}.tmp", std::process::id()));
        fs::write(&tmp, serde_json::to_vec(&env)?)?;
        fs::rename(&tmp, &path)?;
        Ok(())
    }

    /// Returns the cached value for `key`, building and storing it on a miss.
    /// Store failures are ignored: the cache is an optimisation only.
    pub fn get_or_build<T, F>(&self, key: &str, build: F) -> T
    where
        T: Serialize + DeserializeOwned,
        F: FnOnce() -> T,
    {
        if let Some(v) = self.load(key) {
            return v;
        }
        let v = build();
        let _ = self.store(key, &v);
        v
    }
}

fn digest(payload: &str) -> String {
    hex::encode(Sha256::digest(payload.as_bytes()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::at(dir.path());
        let v: Vec<i64> = cache.get_or_build("k", || vec![1, 2, 3]);
        assert_eq!(v, vec![1, 2, 3]);
        assert_eq!(cache.load::<Vec<i64>>("k"), Some(vec![1, 2, 3]));

        // tamper with the payload but keep the old digest
        let path = dir.path().join("k.json");
        let text = fs::read_to_string(&path).unwrap().replace("[1,2,3]", "[1,2,4]");
        fs::write(&path, text).unwrap();
        assert_eq!(cache.load::<Vec<i64>>("k"), None);
        let v: Vec<i64> = cache.get_or_build("k", || vec![1, 2, 3]);
        assert_eq!(v, vec![1, 2, 3]);

        fs::write(&path, "not json").unwrap();
        assert_eq!(cache.load::<Vec<i64>>("k"), None);
    }

    #[test]
    fn disabled_cache_always_builds() {
        let cache = DiskCache::disabled();
        let mut calls = 0;
        for _ in 0..2 {
            let _: u8 = cache.get_or_build("x", || {
                calls += 1;
                7
            });
        }
        assert_eq!(calls, 2);
    }
}
