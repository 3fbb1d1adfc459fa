#![allow(dead_code)]

use std::sync::Arc;

use modlab_core::module::{direct_sum, regular_module, sub_as_module, FiniteModule, Module};
use modlab_core::ring::{build_ring, FiniteRing, RingSpec};

pub fn cyclic(n: u32) -> Arc<FiniteRing> {
    build_ring(&RingSpec::Cyclic(n)).unwrap()
}

pub fn f2z4() -> Arc<FiniteRing> {
    build_ring(&RingSpec::Product(
        Box::new(RingSpec::Cyclic(2)),
        Box::new(RingSpec::Cyclic(4)),
    ))
    .unwrap()
}

pub fn t2f2() -> Arc<FiniteRing> {
    build_ring(&RingSpec::UpperTriangular2x2(2)).unwrap()
}

pub fn rings() -> Vec<Arc<FiniteRing>> {
    vec![cyclic(4), cyclic(8), cyclic(3), cyclic(6), f2z4(), t2f2()]
}

/// `Z/m_1 ⊕ … ⊕ Z/m_t` over a cyclic ring.
pub fn zmod(ring: &Arc<FiniteRing>, orders: &[u32]) -> Module {
    let t = orders.len();
    let id: Vec<Vec<u32>> = (0..t)
        .map(|i| (0..t).map(|j| u32::from(i == j)).collect())
        .collect();
    FiniteModule::new(ring.clone(), orders.to_vec(), vec![id]).unwrap()
}

/// The simple block `S` and the `Z/4` block of `F2 × Z/4`.
pub fn blocks() -> (Module, Module) {
    let r = f2z4();
    let reg = regular_module(&r);
    let s = sub_as_module(&reg, &reg.span(&[reg.encode(&[1, 0])]))
        .unwrap()
        .module;
    let b = sub_as_module(&reg, &reg.span(&[reg.encode(&[0, 1])]))
        .unwrap()
        .module;
    (s, b)
}

pub fn sum(a: &Module, b: &Module) -> Module {
    direct_sum(a, b).unwrap().module
}
