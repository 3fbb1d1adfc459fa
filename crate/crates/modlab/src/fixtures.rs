//! Named modules used by the example suites and the acceptance checks.

use std::sync::Arc;

use modlab_core::module::{regular_module, sub_as_module, FiniteModule, Module};
use modlab_core::ring::FiniteRing;

use crate::error::Result;

/// `Z/m_1 ⊕ … ⊕ Z/m_t` over a cyclic ring, acted on by scalars.
pub fn zmod(ring: &Arc<FiniteRing>, orders: &[u32]) -> Module {
    let t = orders.len();
    let id: Vec<Vec<u32>> = (0..t)
        .map(|i| (0..t).map(|j| u32::from(i == j)).collect())
        .collect();
    FiniteModule::new(ring.clone(), orders.to_vec(), vec![id; ring.rank()])
        .expect("scalar action on a cyclic ring")
}

/// The cyclic summand `e R` of the regular module for a ring element `e`.
pub fn principal(ring: &Arc<FiniteRing>, e: u32) -> Result<Module> {
    let reg = regular_module(ring);
    let span = reg.span(&[e]);
    Ok(sub_as_module(&reg, &span)?.module)
}
