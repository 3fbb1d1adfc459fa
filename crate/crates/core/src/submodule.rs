use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use crate::bitset::BitSet;

/// An action-closed subgroup of a finite module, stored canonically as the
/// sorted list of its element codes.
#[derive(Clone)]
pub struct Submodule {
    pub(crate) parent: u64,
    pub(crate) elems: Vec<u32>,
    pub(crate) bits: BitSet,
    /// Additive generators, each enlarging the span of the previous ones.
    pub(crate) gens: Vec<u32>,
}

impl Submodule {
    pub(crate) fn from_parts(
        parent: u64,
        mut elems: Vec<u32>,
        bits: BitSet,
        gens: Vec<u32>,
    ) -> Self {
        elems.sort_unstable();
        Submodule {
            parent,
            elems,
            bits,
            gens,
        }
    }

    pub fn parent_id(&self) -> u64 {
        self.parent
    }

    pub fn elements(&self) -> &[u32] {
        &self.elems
    }

    pub fn additive_generators(&self) -> &[u32] {
        &self.gens
    }

    pub fn key(&self) -> &BitSet {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_zero(&self) -> bool {
        self.elems.len() == 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        self.bits.contains(x as usize)
    }

    pub fn is_subset(&self, other: &Submodule) -> bool {
        self.elems.len() <= other.elems.len() && self.bits.is_subset(&other.bits)
    }
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.bits == other.bits
    }
}

impl Eq for Submodule {}

impl Hash for Submodule {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.parent.hash(state);
        self.bits.hash(state);
    }
}

impl PartialOrd for Submodule {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by size, then lexicographically by element codes.
impl Ord for Submodule {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parent
            .cmp(&other.parent)
            .then(self.elems.len().cmp(&other.elems.len()))
            .then_with(|| self.elems.cmp(&other.elems))
    }
}

impl std::fmt::Debug for Submodule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Submodule{:?}", self.elems)
    }
}
