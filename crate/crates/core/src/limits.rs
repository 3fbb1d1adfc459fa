//! Process-wide size limits.
//!
//! All enumerations are exhaustive, so every entry point that could blow up
//! checks against these bounds and reports `SizeLimitExceeded` instead.

use std::sync::RwLock;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_ring: usize,
    pub max_module: usize,
    pub max_end: usize,
    pub max_lattice_nodes: usize,
    /// Upper bound on the number of homomorphisms collected by `hom_set`.
    pub max_homs: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_ring: 4096,
            max_module: 4096,
            max_end: 1 << 16,
            max_lattice_nodes: 20_000,
            max_homs: 1 << 16,
        }
    }
}

static LIMITS: RwLock<Limits> = RwLock::new(Limits {
    max_ring: 4096,
    max_module: 4096,
    max_end: 1 << 16,
    max_lattice_nodes: 20_000,
    max_homs: 1 << 16,
});

pub fn limits() -> Limits {
    *LIMITS.read().unwrap_or_else(|e| e.into_inner())
}

pub fn set_limits(l: Limits) {
    *LIMITS.write().unwrap_or_else(|e| e.into_inner()) = l;
}
