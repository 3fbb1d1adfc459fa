//! JSON descriptions of rings and modules. Coordinates are little-endian in
//! basis order.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::module::{FiniteModule, Module};
use crate::ring::FiniteRing;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingDescription {
    pub orders: Vec<u32>,
    pub constants: Vec<Vec<Vec<u32>>>,
    pub one: Vec<u32>,
}

impl RingDescription {
    pub fn of(ring: &FiniteRing) -> Self {
        RingDescription {
            orders: ring.orders().to_vec(),
            constants: ring.constants().to_vec(),
            one: ring.one_coords().to_vec(),
        }
    }

    pub fn build(&self, name: &str) -> Result<Arc<FiniteRing>> {
        FiniteRing::new(
            name,
            self.orders.clone(),
            self.constants.clone(),
            self.one.clone(),
        )
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| AlgebraError::Description(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleDescription {
    /// Ring identifier, resolved by the caller.
    pub ring: String,
    pub orders: Vec<u32>,
    pub action: Vec<Vec<Vec<u32>>>,
}

impl ModuleDescription {
    pub fn of(m: &Module) -> Self {
        ModuleDescription {
            ring: m.ring().name().to_string(),
            orders: m.orders().to_vec(),
            action: m.action().to_vec(),
        }
    }

    pub fn build(&self, ring: &Arc<FiniteRing>) -> Result<Module> {
        FiniteModule::new(ring.clone(), self.orders.clone(), self.action.clone())
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| AlgebraError::Description(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::regular_module;
    use crate::ring::{build_ring, RingSpec};

    #[test]
    fn ring_roundtrip() {
        let r = build_ring(&RingSpec::UpperTriangular2x2(2)).unwrap();
        let d = RingDescription::of(&r);
        let text = serde_json::to_string(&d).unwrap();
        let back = RingDescription::parse(&text).unwrap().build("T").unwrap();
        assert!(back.same_ring(&r));
    }

    #[test]
    fn module_roundtrip() {
        let r = build_ring(&RingSpec::Cyclic(4)).unwrap();
        let m = regular_module(&r);
        let d = ModuleDescription::of(&m);
        let text = serde_json::to_string(&d).unwrap();
        assert_eq!(text, r#"{"ring":"Z/4","orders":[4],"action":[[[1]]]}"#);
        let back = ModuleDescription::parse(&text).unwrap().build(&r).unwrap();
        assert_eq!(*back, *m);
        assert!(ModuleDescription::parse("{").is_err());
    }
}
