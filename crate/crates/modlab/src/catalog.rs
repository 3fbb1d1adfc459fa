//! Bounded catalogs of modules: every quotient of `R^n` for `n` up to the
//! generator bound, up to isomorphism, closed under direct summands.

use std::sync::Arc;

use modlab_core::error::AlgebraError;
use modlab_core::hom::{is_isomorphic, iso_invariants};
use modlab_core::lattice::submodules;
use modlab_core::module::{
    direct_sum, quotient, regular_module, sub_as_module, zero_module, Module,
};
use modlab_core::ring::FiniteRing;
use modlab_core::structure::is_direct_summand;
use serde::Serialize;

use crate::error::{HarnessError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Policy {
    pub max_generators: usize,
    pub max_size: usize,
}

impl Default for Policy {
    fn default() -> Self {
        Policy {
            max_generators: 2,
            max_size: 256,
        }
    }
}

impl Policy {
    pub fn validate(&self) -> Result<()> {
        let lim = modlab_core::limits::limits();
        if self.max_size == 0 || self.max_size > lim.max_module {
            return Err(HarnessError::InvalidConfig(format!(
                "max size {} outside 1..={}",
                self.max_size, lim.max_module
            )));
        }
        if self.max_generators > 8 {
            return Err(HarnessError::InvalidConfig(format!(
                "generator bound {} is above 8",
                self.max_generators
            )));
        }
        Ok(())
    }
}

pub struct ModuleCatalog {
    pub ring_id: String,
    pub ring: Arc<FiniteRing>,
    pub policy: Policy,
    /// Sorted by size, ties in discovery order.
    pub modules: Vec<Module>,
    /// Candidates dropped for exceeding limits.
    pub skipped: Vec<String>,
}

impl ModuleCatalog {
    /// Catalog index of a module isomorphic to `m`.
    pub fn find(&self, m: &Module) -> Result<Option<usize>> {
        for (i, c) in self.modules.iter().enumerate() {
            if is_isomorphic(c, m)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }
}

type Invariants = (usize, Vec<u32>, Vec<usize>);

struct Unique {
    modules: Vec<(Module, Invariants)>,
}

impl Unique {
    fn insert(&mut self, m: Module) -> Result<bool> {
        let inv = iso_invariants(&m);
        for (c, ci) in &self.modules {
            if *ci == inv && is_isomorphic(c, &m)? {
                return Ok(false);
            }
        }
        self.modules.push((m, inv));
        Ok(true)
    }
}

fn limit_note(what: &str, e: AlgebraError) -> Result<String> {
    match e {
        AlgebraError::SizeLimitExceeded { .. } => Ok(format!("{what}: {e}")),
        other => Err(other.into()),
    }
}

pub fn enumerate_modules(
    ring_id: &str,
    ring: &Arc<FiniteRing>,
    policy: Policy,
) -> Result<ModuleCatalog> {
    policy.validate()?;
    let mut uniq = Unique {
        modules: Vec::new(),
    };
    let mut skipped = Vec::new();
    uniq.insert(zero_module(ring))?;
    let reg = regular_module(ring);
    let mut free = zero_module(ring);
    for n in 1..=policy.max_generators {
        free = direct_sum(&free, &reg)?.module;
        let lattice = match submodules(&free) {
            Ok(l) => l,
            Err(e) => {
                skipped.push(limit_note(&format!("R^{n}"), e)?);
                break;
            }
        };
        let mut too_big = 0;
        for k in lattice.nodes() {
            if free.size() / k.len() > policy.max_size {
                too_big += 1;
                continue;
            }
            uniq.insert(quotient(&free, k)?.0)?;
        }
        if too_big > 0 {
            skipped.push(format!(
                "R^{n}: {too_big} quotients above size {}",
                policy.max_size
            ));
        }
    }
    // summands of summands are summands, so one pass in discovery order closes the set
    let mut i = 0;
    while i < uniq.modules.len() {
        let m = uniq.modules[i].0.clone();
        match submodules(&m) {
            Ok(lat) => {
                for a in lat.nodes() {
                    if is_direct_summand(&m, a)?.is_some() {
                        uniq.insert(sub_as_module(&m, a)?.module)?;
                    }
                }
            }
            Err(e) => skipped.push(limit_note("summand closure", e)?),
        }
        i += 1;
    }
    let mut modules: Vec<Module> = uniq.modules.into_iter().map(|(m, _)| m).collect();
    modules.sort_by_key(|m| m.size());
    Ok(ModuleCatalog {
        ring_id: ring_id.to_string(),
        ring: ring.clone(),
        policy,
        modules,
        skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::builtin;

    fn sizes(id: &str, n: usize) -> Vec<usize> {
        let p = Policy {
            max_generators: n,
            max_size: 256,
        };
        let c = enumerate_modules(id, &builtin(id).unwrap(), p).unwrap();
        c.modules.iter().map(|m| m.size()).collect()
    }

    #[test]
    fn one_generator_catalogs() {
        assert_eq!(sizes("F3", 1), vec![1, 3]);
        assert_eq!(sizes("Z4", 1), vec![1, 2, 4]);
    }

    #[test]
    fn two_generator_catalog_over_z8() {
        let ring = builtin("Z8").unwrap();
        let c = enumerate_modules("Z8", &ring, Policy::default()).unwrap();
        // Z/a ⊕ Z/b with a ≤ b in {1, 2, 4, 8}
        assert_eq!(c.modules.len(), 10);
        let target = crate::fixtures::zmod(&ring, &[2, 8]);
        assert!(c.find(&target).unwrap().is_some());
        for (i, a) in c.modules.iter().enumerate() {
            for b in &c.modules[i + 1..] {
                assert!(!is_isomorphic(a, b).unwrap());
            }
        }
    }

    #[test]
    fn summand_closure_over_product_ring() {
        // S, the Z/4 block and its quotient Z/2 must all appear
        let ring = builtin("F2xZ4").unwrap();
        let c = enumerate_modules(
            "F2xZ4",
            &ring,
            Policy {
                max_generators: 1,
                max_size: 256,
            },
        )
        .unwrap();
        let s: Vec<usize> = c.modules.iter().map(|m| m.size()).collect();
        assert_eq!(s, vec![1, 2, 2, 4, 4, 8]);
    }

    #[test]
    fn policy_bounds() {
        let bad = Policy {
            max_generators: 2,
            max_size: 0,
        };
        assert!(bad.validate().is_err());
    }
}
