//! On-disk profile cache under `MODLAB_CACHE`, keyed by a content hash of
//! the ring and the module.

use std::path::PathBuf;

use modlab_core::module::Module;
use sha2::{Digest, Sha256};

use crate::error::{HarnessError, Result};
use crate::profile::{profile_module, PropertyReport};

pub const ENV: &str = "MODLAB_CACHE";

pub fn key(m: &Module) -> String {
    let mut h = Sha256::new();
    h.update(m.ring().fingerprint());
    h.update(m.fingerprint());
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

pub struct ProfileCache {
    dir: Option<PathBuf>,
}

impl ProfileCache {
    pub fn from_env() -> Self {
        ProfileCache {
            dir: std::env::var_os(ENV).map(PathBuf::from),
        }
    }

    pub fn at(dir: impl Into<PathBuf>) -> Self {
        ProfileCache {
            dir: Some(dir.into()),
        }
    }

    fn path(&self, m: &Module) -> Option<PathBuf> {
        self.dir
            .as_ref()
            .map(|d| d.join(format!("profile-{}.json", key(m))))
    }

    /// Cached profile if present and readable, otherwise computed and stored.
    pub fn profile(&self, ring_id: &str, m: &Module) -> Result<PropertyReport> {
        let Some(path) = self.path(m) else {
            return profile_module(ring_id, m);
        };
        if let Ok(text) = std::fs::read_to_string(&path) {
            if let Ok(r) = serde_json::from_str::<PropertyReport>(&text) {
                if r.module.ring == ring_id {
                    return Ok(r);
                }
            }
        }
        let r = profile_module(ring_id, m)?;
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir).map_err(|e| HarnessError::io(dir, e))?;
        }
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, serde_json::to_vec_pretty(&r)?)
            .map_err(|e| HarnessError::io(&tmp, e))?;
        std::fs::rename(&tmp, &path).map_err(|e| HarnessError::io(&path, e))?;
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::builtin;
    use modlab_core::module::regular_module;

    #[test]
    fn round_trip() {
        let dir = std::env::temp_dir().join(format!("modlab-cache-test-{}", std::process::id()));
        let cache = ProfileCache::at(&dir);
        let m = regular_module(&builtin("Z4").unwrap());
        let a = cache.profile("Z4", &m).unwrap();
        assert!(dir.join(format!("profile-{}.json", key(&m))).exists());
        let b = cache.profile("Z4", &m).unwrap();
        assert_eq!(a, b);
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
