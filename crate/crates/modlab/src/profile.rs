//! Per-module property reports.

use std::collections::BTreeMap;

use modlab_core::cosingular::CosingularClass;
use modlab_core::error::AlgebraError;
use modlab_core::module::Module;
use modlab_core::structure::{is_injective, is_small_module};
use modlab_core::ttheory::{Analysis, Status};
use serde::{Deserialize, Serialize};

use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleInfo {
    pub ring: String,
    pub fingerprint: String,
    pub size: usize,
    pub orders: Vec<u32>,
}

impl ModuleInfo {
    pub fn of(ring_id: &str, m: &Module) -> Self {
        ModuleInfo {
            ring: ring_id.to_string(),
            fingerprint: m.fingerprint_hex(),
            size: m.size(),
            orders: m.orders().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosingularSummary {
    pub zbar_size: usize,
    pub zbar2_size: usize,
    pub class: String,
}

/// Submodule-level predicates, one row per lattice node.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubmoduleRow {
    pub size: usize,
    pub small: bool,
    pub t_small: bool,
    pub summand: bool,
    pub coclosed: bool,
    pub t_coclosed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub module: ModuleInfo,
    /// Definitional values keyed by predicate identifier.
    pub predicates: BTreeMap<String, Status>,
    /// Alternative characterisations, in the order of their statements.
    pub cross_checks: BTreeMap<String, Vec<bool>>,
    pub cosingular: Option<CosingularSummary>,
    pub lattice_size: Option<usize>,
    pub end_size: Option<usize>,
    pub submodules: Vec<SubmoduleRow>,
    /// Violated consistency rules; empty for a healthy report.
    pub flags: Vec<String>,
}

pub const PREDICATES: [&str; 17] = [
    "amply_supplemented",
    "cosingular",
    "dual_baer",
    "injective",
    "k",
    "lifting",
    "noncosingular",
    "regular",
    "semisimple",
    "small_module",
    "sssp_in_zbar2",
    "strongly_t_k",
    "t_dual_baer",
    "t_k",
    "t_lifting",
    "zbar2_summand",
    "zbar2_semisimple",
];

fn status(r: std::result::Result<bool, AlgebraError>) -> Result<Status> {
    Ok(Status::from_result(r)?)
}

fn class_name(c: CosingularClass) -> &'static str {
    match c {
        CosingularClass::Cosingular => "cosingular",
        CosingularClass::Noncosingular => "noncosingular",
        CosingularClass::Mixed => "mixed",
    }
}

/// Evaluates every predicate; limit breaches leave `unevaluated` entries.
pub fn profile_module(ring_id: &str, m: &Module) -> Result<PropertyReport> {
    match Analysis::new(m) {
        Ok(an) => profile_analysis(ring_id, &an),
        Err(AlgebraError::SizeLimitExceeded { .. }) => Ok(PropertyReport {
            module: ModuleInfo::of(ring_id, m),
            predicates: PREDICATES
                .iter()
                .map(|p| (p.to_string(), Status::Unevaluated))
                .collect(),
            cross_checks: BTreeMap::new(),
            cosingular: None,
            lattice_size: None,
            end_size: None,
            submodules: Vec::new(),
            flags: Vec::new(),
        }),
        Err(e) => Err(e.into()),
    }
}

pub fn profile_analysis(ring_id: &str, an: &Analysis) -> Result<PropertyReport> {
    let m = an.module();
    let top = an.top();
    let sec = an.sections();
    let mut p = BTreeMap::new();
    let mut put = |k: &str, v: Status| {
        p.insert(k.to_string(), v);
    };
    let b = |x: bool| if x { Status::True } else { Status::False };
    let noncos = an.noncosingular();
    let class = if top == 0 || an.zbar() == 0 {
        CosingularClass::Cosingular
    } else if noncos {
        CosingularClass::Noncosingular
    } else {
        CosingularClass::Mixed
    };
    put("amply_supplemented", b(an.amply_supplemented()));
    put("cosingular", b(class == CosingularClass::Cosingular));
    put("noncosingular", b(noncos));
    put("dual_baer", status(an.dual_baer())?);
    put("t_dual_baer", status(an.tdual_baer())?);
    put("injective", status(is_injective(m))?);
    put("small_module", status(is_small_module(m))?);
    put("lifting", b(an.lifting()));
    put("t_lifting", b(an.tlifting()?));
    put("regular", b(an.regular()));
    put("semisimple", b(an.semisimple()));
    put("sssp_in_zbar2", b(an.sssp_in_zbar2()));
    put("zbar2_summand", b(an.summand(an.zbar2())));
    put("zbar2_semisimple", b(sec.semisimple(0, an.zbar2())));
    let kc = an.k_class().map(Some).or_else(|e| match e {
        AlgebraError::SizeLimitExceeded { .. } => Ok(None),
        e => Err(e),
    })?;
    let kv = |f: fn(&modlab_core::ttheory::KClass) -> bool| {
        kc.as_ref().map_or(Status::Unevaluated, |k| b(f(k)))
    };
    put("k", kv(|k| k.k));
    put("t_k", kv(|k| k.t_k));
    put("strongly_t_k", kv(|k| k.strongly_t_k));

    let mut cross = BTreeMap::new();
    cross.insert("t_lifting".to_string(), an.tlifting_routes()?.to_vec());
    cross.insert(
        "lifting".to_string(),
        vec![an.lifting(), an.lifting_by_coclosed()],
    );
    if let Ok(r) = an.tdual_baer_routes() {
        cross.insert("t_dual_baer".to_string(), r.to_vec());
    }

    let mut rows = Vec::new();
    for a in an.nodes() {
        rows.push(SubmoduleRow {
            size: an.node(a).len(),
            small: an.small(a),
            t_small: an.tsmall(a)?,
            summand: an.summand(a),
            coclosed: an.coclosed(a),
            t_coclosed: an.tcoclosed(a)?,
        });
    }

    let mut flags = Vec::new();
    let is = |k: &str| p.get(k) == Some(&Status::True);
    if is("lifting") && !is("t_lifting") {
        flags.push("lifting but not t_lifting".to_string());
    }
    if is("amply_supplemented") && is("t_lifting") && p["t_dual_baer"] == Status::False {
        flags.push("t_lifting but not t_dual_baer".to_string());
    }
    if noncos {
        if let Some(i) = rows.iter().position(|r| r.small != r.t_small) {
            flags.push(format!(
                "noncosingular with t_small != small at submodule {i}"
            ));
        }
    }

    Ok(PropertyReport {
        module: ModuleInfo::of(ring_id, m),
        cosingular: Some(CosingularSummary {
            zbar_size: an.node(an.zbar()).len(),
            zbar2_size: an.node(an.zbar2()).len(),
            class: class_name(class).to_string(),
        }),
        lattice_size: Some(sec.lattice().len()),
        end_size: an.end_ring().ok().map(|e| e.len()),
        predicates: p,
        cross_checks: cross,
        submodules: rows,
        flags,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::zmod;
    use crate::rings::builtin;
    use modlab_core::module::{regular_module, zero_module};

    fn get(r: &PropertyReport, k: &str) -> Status {
        r.predicates[k]
    }

    #[test]
    fn lifting_examples() {
        let z8 = builtin("Z8").unwrap();
        let r = profile_module("Z8", &zmod(&z8, &[2, 8])).unwrap();
        assert_eq!(get(&r, "lifting"), Status::False);
        assert_eq!(get(&r, "t_lifting"), Status::True);
        assert_eq!(get(&r, "amply_supplemented"), Status::True);
        assert!(r.flags.is_empty());
        assert_eq!(r.lattice_size, Some(11));
    }

    #[test]
    fn zero_module_is_vacuous() {
        let r = profile_module("Z4", &zero_module(&builtin("Z4").unwrap())).unwrap();
        for k in PREDICATES {
            assert_eq!(get(&r, k), Status::True, "{k}");
        }
    }

    #[test]
    fn regular_z4() {
        let r = profile_module("Z4", &regular_module(&builtin("Z4").unwrap())).unwrap();
        assert_eq!(get(&r, "dual_baer"), Status::False);
        assert_eq!(get(&r, "t_dual_baer"), Status::True);
        let c = r.cosingular.unwrap();
        assert_eq!(
            (c.zbar_size, c.zbar2_size, c.class.as_str()),
            (2, 1, "mixed")
        );
    }
}
