//! Cross-checks of fast paths against definitional computations.

use modlab_core::cosingular::zbar;
use modlab_core::hom::hom_set;
use modlab_core::lattice::{is_small, is_small_scan, submodules};
use modlab_core::module::{direct_sum, quotient, regular_module, Module};
use modlab_core::structure::{is_direct_summand, is_small_module, summand_idempotent};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::catalog::ModuleCatalog;
use crate::error::Result;
use crate::rings::{self, BUILTIN};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleCheck {
    /// `A ⊆ Rad M` against the definitional scan over proper submodules.
    Small,
    /// Complement scan against an idempotent endomorphism with image `A`.
    Summand,
    /// `Z̄(M) ⊆ Ker g` for every `g` into a small catalog module.
    Zbar,
}

impl std::str::FromStr for OracleCheck {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "small" => Ok(OracleCheck::Small),
            "summand" => Ok(OracleCheck::Summand),
            "zbar" => Ok(OracleCheck::Zbar),
            _ => Err(format!(
                "unknown check `{s}` (expected small, summand or zbar)"
            )),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub check: OracleCheck,
    pub seed: u64,
    pub catalog_cases: usize,
    pub random_cases: usize,
    pub mismatches: Vec<String>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// A random quotient of `R^n`, `n ≤ 2`, over a random built-in ring.
pub fn random_module(rng: &mut ChaCha8Rng) -> Result<(String, Module)> {
    let id = BUILTIN[rng.gen_range(0..BUILTIN.len())];
    let reg = regular_module(&rings::builtin(id)?);
    let free = if rng.gen_bool(0.5) {
        reg
    } else {
        direct_sum(&reg, &reg)?.module
    };
    let gens: Vec<u32> = (0..rng.gen_range(0..3))
        .map(|_| rng.gen_range(0..free.size() as u32))
        .collect();
    let k = free.span(&gens);
    Ok((id.to_string(), quotient(&free, &k)?.0))
}

fn check_pair(
    check: OracleCheck,
    ring: &str,
    m: &Module,
    a_index: usize,
    out: &mut Vec<String>,
) -> Result<()> {
    let lat = submodules(m)?;
    let a = lat.node(a_index);
    let (fast, slow) = match check {
        OracleCheck::Small => (is_small(m, a)?, is_small_scan(m, a)?),
        OracleCheck::Summand => (
            is_direct_summand(m, a)?.is_some(),
            summand_idempotent(m, a)?.is_some(),
        ),
        OracleCheck::Zbar => unreachable!("not a pair check"),
    };
    if fast != slow {
        out.push(format!(
            "{ring} module {} submodule {:?}: fast path {fast}, definition {slow}",
            m.fingerprint_hex(),
            a.elements()
        ));
    }
    Ok(())
}

fn zbar_against(
    ring: &str,
    m: &Module,
    targets: &[Module],
    out: &mut Vec<String>,
) -> Result<usize> {
    let z = zbar(m)?;
    let mut cases = 0;
    for l in targets {
        for g in hom_set(m, l)? {
            cases += 1;
            if !z.additive_generators().iter().all(|&x| g.apply(x) == 0) {
                out.push(format!(
                    "{ring} module {} hom {:?}: zbar not in kernel",
                    m.fingerprint_hex(),
                    g.images()
                ));
            }
        }
    }
    Ok(cases)
}

/// Runs `check` on every catalog case and on `samples` random cases drawn
/// from a ChaCha stream seeded with `seed`.
pub fn run_oracle(
    check: OracleCheck,
    catalogs: &[ModuleCatalog],
    samples: usize,
    seed: u64,
) -> Result<OracleReport> {
    let mut mismatches = Vec::new();
    let mut catalog_cases = 0;
    let small_targets = |c: &ModuleCatalog| -> Result<Vec<Module>> {
        let mut v = Vec::new();
        for m in &c.modules {
            if is_small_module(m)? {
                v.push(m.clone());
            }
        }
        Ok(v)
    };
    for c in catalogs {
        match check {
            OracleCheck::Zbar => {
                let targets = small_targets(c)?;
                for m in &c.modules {
                    catalog_cases += zbar_against(&c.ring_id, m, &targets, &mut mismatches)?;
                }
            }
            _ => {
                for m in &c.modules {
                    for a in 0..submodules(m)?.len() {
                        catalog_cases += 1;
                        check_pair(check, &c.ring_id, m, a, &mut mismatches)?;
                    }
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random_cases = 0;
    for _ in 0..samples {
        let (ring, m) = random_module(&mut rng)?;
        match check {
            OracleCheck::Zbar => {
                let Some(c) = catalogs.iter().find(|c| c.ring_id == ring) else {
                    continue;
                };
                random_cases += zbar_against(&ring, &m, &small_targets(c)?, &mut mismatches)?;
            }
            _ => {
                let n = submodules(&m)?.len();
                random_cases += 1;
                check_pair(check, &ring, &m, rng.gen_range(0..n), &mut mismatches)?;
            }
        }
    }
    Ok(OracleReport {
        check,
        seed,
        catalog_cases,
        random_cases,
        mismatches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{enumerate_modules, Policy};

    #[test]
    fn small_checks_on_one_ring() {
        let ring = rings::builtin("Z4").unwrap();
        let c = enumerate_modules("Z4", &ring, Policy::default()).unwrap();
        for check in [OracleCheck::Small, OracleCheck::Summand, OracleCheck::Zbar] {
            let r = run_oracle(check, std::slice::from_ref(&c), 20, 7).unwrap();
            assert!(r.passed(), "{:?}", r.mismatches);
            assert!(r.catalog_cases > 0);
        }
    }

    #[test]
    fn seeded_modules_repeat() {
        let a = random_module(&mut ChaCha8Rng::seed_from_u64(3)).unwrap();
        let b = random_module(&mut ChaCha8Rng::seed_from_u64(3)).unwrap();
        assert_eq!(a.0, b.0);
        assert_eq!(a.1.fingerprint(), b.1.fingerprint());
    }
}
