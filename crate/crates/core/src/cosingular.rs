//! The cosingular radical `Z̄(M)`, its iterate `Z̄²(M)` and the resulting
//! classification.

use serde::Serialize;

use crate::error::Result;
use crate::module::Module;
use crate::sections::Sections;
use crate::submodule::Submodule;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CosingularClass {
    /// `Z̄(M) = 0`; the zero module lands here.
    Cosingular,
    /// `Z̄(M) = M ≠ 0`.
    Noncosingular,
    Mixed,
}

#[derive(Debug, Clone)]
pub struct CosingularProfile {
    pub zbar: Submodule,
    pub zbar2: Submodule,
    pub class: CosingularClass,
    /// Submodules `N` with `M/N` small.
    pub small_quotient_witnesses: Vec<Submodule>,
}

/// `Z̄(M)`: the intersection of all `N` with `M/N` a small module.
pub fn zbar(m: &Module) -> Result<Submodule> {
    let sec = Sections::new(m)?;
    let z = sec.zbar(0, sec.top())?;
    Ok(sec.lattice().node(z).clone())
}

/// `Z̄(Z̄(M))`, as a submodule of `M`.
pub fn zbar2(m: &Module) -> Result<Submodule> {
    let sec = Sections::new(m)?;
    let z = sec.zbar2(0, sec.top())?;
    Ok(sec.lattice().node(z).clone())
}

pub fn classify(m: &Module) -> Result<CosingularProfile> {
    let sec = Sections::new(m)?;
    let lat = sec.lattice();
    let top = lat.top();
    let z = sec.zbar(0, top)?;
    let z2 = sec.zbar2(0, top)?;
    let mut witnesses = Vec::new();
    for x in 0..lat.len() {
        if sec.small_module(x, top)? {
            witnesses.push(lat.node(x).clone());
        }
    }
    let class = if z == 0 {
        CosingularClass::Cosingular
    } else if z == top {
        CosingularClass::Noncosingular
    } else {
        CosingularClass::Mixed
    };
    Ok(CosingularProfile {
        zbar: lat.node(z).clone(),
        zbar2: lat.node(z2).clone(),
        class,
        small_quotient_witnesses: witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{direct_sum, regular_module, sub_as_module, zero_module, FiniteModule};
    use crate::ring::{build_ring, FiniteRing, RingSpec};
    use std::sync::Arc;

    fn zmod(ring: &Arc<FiniteRing>, orders: &[u32]) -> Module {
        let t = orders.len();
        let id: Vec<Vec<u32>> = (0..t)
            .map(|i| (0..t).map(|j| u32::from(i == j)).collect())
            .collect();
        FiniteModule::new(ring.clone(), orders.to_vec(), vec![id]).unwrap()
    }

    #[test]
    fn z4_regular() {
        let r = build_ring(&RingSpec::Cyclic(4)).unwrap();
        let m = regular_module(&r);
        assert_eq!(zbar(&m).unwrap().elements(), &[0, 2]);
        assert!(zbar2(&m).unwrap().is_zero());
        assert_eq!(classify(&m).unwrap().class, CosingularClass::Mixed);
    }

    #[test]
    fn z2_z8() {
        let r = build_ring(&RingSpec::Cyclic(8)).unwrap();
        let m = zmod(&r, &[2, 8]);
        let z = zbar(&m).unwrap();
        assert_eq!(z, m.span(&[m.encode(&[0, 4])]));
        assert!(zbar2(&m).unwrap().is_zero());
        let p = classify(&m).unwrap();
        assert_eq!(p.class, CosingularClass::Mixed);
    }

    #[test]
    fn product_ring() {
        let r = build_ring(&RingSpec::Product(
            Box::new(RingSpec::Cyclic(2)),
            Box::new(RingSpec::Cyclic(4)),
        ))
        .unwrap();
        let reg = regular_module(&r);
        let s = sub_as_module(&reg, &reg.span(&[reg.encode(&[1, 0])]))
            .unwrap()
            .module;
        assert_eq!(classify(&s).unwrap().class, CosingularClass::Noncosingular);
        let z = zbar(&reg).unwrap();
        assert_eq!(z, reg.span(&[reg.encode(&[1, 0]), reg.encode(&[0, 2])]));
        assert_eq!(zbar2(&reg).unwrap(), reg.span(&[reg.encode(&[1, 0])]));
        let sum = direct_sum(&s, &s).unwrap().module;
        assert_eq!(zbar2(&sum).unwrap().len(), 4);
    }

    #[test]
    fn semisimple_and_zero() {
        let f3 = build_ring(&RingSpec::Cyclic(3)).unwrap();
        let m = zmod(&f3, &[3, 3]);
        assert_eq!(zbar(&m).unwrap().len(), 9);
        let z = zero_module(&f3);
        assert!(zbar2(&z).unwrap().is_zero());
        assert_eq!(classify(&z).unwrap().class, CosingularClass::Cosingular);
    }
}
