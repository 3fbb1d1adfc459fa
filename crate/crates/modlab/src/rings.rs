//! The built-in ring set. Together the six rings cover `Z̄² = 0`
//! (`Z4`, `Z8`), `Z̄²` a proper nonzero summand (`F2xZ4`), semisimple
//! rings (`F3`, `Z6`) and a noncommutative ring (`T2F2`).

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use modlab_core::lattice::{jacobson, submodules};
use modlab_core::module::regular_module;
use modlab_core::ring::{build_ring, FiniteRing, RingSpec};
use modlab_core::structure::basic_idempotents;
use serde::Serialize;

use crate::error::{HarnessError, Result};

pub const BUILTIN: [&str; 6] = ["Z4", "Z8", "F3", "Z6", "F2xZ4", "T2F2"];

fn spec(id: &str) -> Option<RingSpec> {
    let cyclic = |n| Box::new(RingSpec::Cyclic(n));
    Some(match id {
        "Z4" => RingSpec::Cyclic(4),
        "Z8" => RingSpec::Cyclic(8),
        "F3" => RingSpec::Cyclic(3),
        "Z6" => RingSpec::Cyclic(6),
        "F2xZ4" => RingSpec::Product(cyclic(2), cyclic(4)),
        "T2F2" => RingSpec::UpperTriangular2x2(2),
        _ => return None,
    })
}

/// The ring behind a built-in id. Repeated calls share one instance so
/// that per-ring caches are reused.
pub fn builtin(id: &str) -> Result<Arc<FiniteRing>> {
    static RINGS: OnceLock<Mutex<BTreeMap<String, Arc<FiniteRing>>>> = OnceLock::new();
    let spec = spec(id).ok_or_else(|| HarnessError::UnknownRing(id.to_string()))?;
    let mut map = RINGS
        .get_or_init(Default::default)
        .lock()
        .unwrap_or_else(|e| e.into_inner());
    if let Some(r) = map.get(id) {
        return Ok(r.clone());
    }
    let r = build_ring(&spec)?;
    map.insert(id.to_string(), r.clone());
    Ok(r)
}

/// Expands `all` and validates every id.
pub fn resolve(ids: &[String]) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for id in ids {
        if id == "all" {
            out.extend(BUILTIN.iter().map(|s| s.to_string()));
        } else if spec(id).is_some() {
            out.push(id.clone());
        } else {
            return Err(HarnessError::UnknownRing(id.clone()));
        }
    }
    out.dedup();
    Ok(out)
}

#[derive(Debug, Serialize)]
pub struct RingSummary {
    pub id: String,
    pub name: String,
    pub size: usize,
    pub orders: Vec<u32>,
    pub commutative: bool,
    pub jacobson_size: usize,
    pub basic_idempotents: usize,
    pub right_ideals: usize,
    pub constants: Vec<Vec<Vec<u32>>>,
    pub one: Vec<u32>,
}

pub fn describe(id: &str) -> Result<RingSummary> {
    let r = builtin(id)?;
    Ok(RingSummary {
        id: id.to_string(),
        name: r.name().to_string(),
        size: r.size(),
        orders: r.orders().to_vec(),
        commutative: r.is_commutative(),
        jacobson_size: jacobson(&r)?.len(),
        basic_idempotents: basic_idempotents(&r)?.len(),
        right_ideals: submodules(&regular_module(&r))?.len(),
        constants: r.constants().to_vec(),
        one: r.one_coords().to_vec(),
    })
}
