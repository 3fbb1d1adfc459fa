//! Predicates on sections `Y/N` of a module, expressed through node indices
//! of the ambient submodule lattice. Submodules of `Y/N` are the nodes of the
//! interval `[N, Y]`, so quotients, submodules and subquotients share one
//! lattice and one set of memo tables.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::bitset::BitSet;
use crate::error::Result;
use crate::lattice::{jacobson, radical_of, submodules, SubmoduleLattice};
use crate::module::{subquotient, Module};
use crate::structure::is_small_module;

#[derive(Default)]
pub(crate) struct SectionMemo {
    small_module: Mutex<HashMap<(usize, usize), bool>>,
    zbar: Mutex<HashMap<(usize, usize), usize>>,
    rad: Mutex<HashMap<(usize, usize), usize>>,
}

/// Section engine over the lattice of one module.
#[derive(Clone)]
pub struct Sections {
    module: Module,
    lat: Arc<SubmoduleLattice>,
    j_gens: Vec<u32>,
}

impl Sections {
    pub fn new(m: &Module) -> Result<Self> {
        let lat = submodules(m)?;
        let j = jacobson(m.ring())?;
        Ok(Sections {
            module: m.clone(),
            lat,
            j_gens: j.additive_generators().to_vec(),
        })
    }

    pub fn module(&self) -> &Module {
        &self.module
    }

    pub fn lattice(&self) -> &SubmoduleLattice {
        &self.lat
    }

    pub fn top(&self) -> usize {
        self.lat.top()
    }

    fn memo(&self) -> &SectionMemo {
        &self.module.cache.sections
    }

    /// Nodes of `[lo, hi]`.
    pub fn interval(&self, lo: usize, hi: usize) -> Vec<usize> {
        self.lat.interval(lo, hi)
    }

    /// `Y·J + N`, the preimage of `Rad(Y/N)`.
    pub fn rad(&self, lo: usize, hi: usize) -> usize {
        if let Some(&r) = self.memo().rad.lock().expect("memo lock").get(&(lo, hi)) {
            return r;
        }
        let yj = radical_of(&self.module, self.lat.node(hi), &self.j_gens);
        let r = self
            .lat
            .join(self.lat.locate(&yj).expect("radical is a node"), lo);
        self.memo()
            .rad
            .lock()
            .expect("memo lock")
            .insert((lo, hi), r);
        r
    }

    /// `A/N ≪ Y/N` via the radical.
    pub fn small_in(&self, a: usize, lo: usize, hi: usize) -> bool {
        self.lat.leq(a, self.rad(lo, hi))
    }

    /// `A/N ≪ Y/N` by scanning every proper submodule of `Y/N`.
    pub fn small_in_scan(&self, a: usize, lo: usize, hi: usize) -> bool {
        self.interval(lo, hi)
            .into_iter()
            .filter(|&x| x != hi)
            .all(|x| self.lat.join(a, x) != hi)
    }

    /// Whether the module `Y/N` is small in its injective hull.
    pub fn small_module(&self, lo: usize, hi: usize) -> Result<bool> {
        if lo == hi {
            return Ok(true);
        }
        if let Some(&v) = self
            .memo()
            .small_module
            .lock()
            .expect("memo lock")
            .get(&(lo, hi))
        {
            return Ok(v);
        }
        let q = subquotient(&self.module, self.lat.node(hi), self.lat.node(lo))?;
        let v = is_small_module(&q)?;
        self.memo()
            .small_module
            .lock()
            .expect("memo lock")
            .insert((lo, hi), v);
        Ok(v)
    }

    /// Preimage of `Z̄(Y/N)`: the meet of all `X ∈ [N, Y]` with `Y/X` small.
    pub fn zbar(&self, lo: usize, hi: usize) -> Result<usize> {
        if lo == hi {
            return Ok(lo);
        }
        if let Some(&z) = self.memo().zbar.lock().expect("memo lock").get(&(lo, hi)) {
            return Ok(z);
        }
        let mut bits: BitSet = self.lat.node(hi).key().clone();
        for x in self.interval(lo, hi) {
            if self.small_module(x, hi)? {
                bits = bits.intersection(self.lat.node(x).key());
            }
        }
        let z = self.lat.locate(&self.module.submodule_from_bits(bits))?;
        self.memo()
            .zbar
            .lock()
            .expect("memo lock")
            .insert((lo, hi), z);
        Ok(z)
    }

    /// Preimage of `Z̄²(Y/N)`.
    pub fn zbar2(&self, lo: usize, hi: usize) -> Result<usize> {
        let z = self.zbar(lo, hi)?;
        self.zbar(lo, z)
    }

    pub fn noncosingular(&self, lo: usize, hi: usize) -> Result<bool> {
        Ok(self.zbar(lo, hi)? == hi)
    }

    pub fn cosingular(&self, lo: usize, hi: usize) -> Result<bool> {
        Ok(self.zbar(lo, hi)? == lo)
    }

    /// `A/N ≪_t Y/N`: whenever `Z̄²` lies in `A + B` it lies in `B`.
    pub fn tsmall(&self, a: usize, lo: usize, hi: usize) -> Result<bool> {
        let z = self.zbar2(lo, hi)?;
        Ok(self
            .interval(lo, hi)
            .into_iter()
            .all(|b| !self.lat.leq(z, self.lat.join(a, b)) || self.lat.leq(z, b)))
    }

    /// A complement of `A/N` in `Y/N`, if any.
    pub fn complement(&self, a: usize, lo: usize, hi: usize) -> Option<usize> {
        self.interval(lo, hi)
            .into_iter()
            .find(|&b| self.lat.join(a, b) == hi && self.lat.meet(a, b) == lo)
    }

    pub fn is_summand(&self, a: usize, lo: usize, hi: usize) -> bool {
        self.complement(a, lo, hi).is_some()
    }

    /// Direct summands of `Y/N`.
    pub fn summands(&self, lo: usize, hi: usize) -> Vec<usize> {
        self.interval(lo, hi)
            .into_iter()
            .filter(|&a| self.is_summand(a, lo, hi))
            .collect()
    }

    /// No proper `C' ∈ [N, C)` has `C/C'` small in `Y/C'`.
    pub fn coclosed(&self, c: usize, lo: usize, hi: usize) -> bool {
        self.interval(lo, c)
            .into_iter()
            .filter(|&x| x != c)
            .all(|x| !self.small_in(c, x, hi))
    }

    /// No proper `C' ∈ [N, C)` has `C/C'` t-small in `Y/C'`.
    pub fn tcoclosed(&self, c: usize, lo: usize, hi: usize) -> Result<bool> {
        for x in self.interval(lo, c) {
            if x != c && self.tsmall(c, x, hi)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// First `A` without a summand `D ⊆ A` making `A/D` small in `Y/D`.
    pub fn lifting_failure(&self, lo: usize, hi: usize) -> Option<usize> {
        let summands = self.summands(lo, hi);
        self.interval(lo, hi).into_iter().find(|&a| {
            !summands
                .iter()
                .any(|&d| self.lat.leq(d, a) && self.small_in(a, d, hi))
        })
    }

    pub fn lifting(&self, lo: usize, hi: usize) -> bool {
        self.lifting_failure(lo, hi).is_none()
    }

    /// First `A` without a summand `D ⊆ A` making `A/D` t-small in `Y/D`.
    pub fn tlifting_failure(&self, lo: usize, hi: usize) -> Result<Option<usize>> {
        let summands = self.summands(lo, hi);
        for a in self.interval(lo, hi) {
            let mut ok = false;
            for &d in &summands {
                if self.lat.leq(d, a) && self.tsmall(a, d, hi)? {
                    ok = true;
                    break;
                }
            }
            if !ok {
                return Ok(Some(a));
            }
        }
        Ok(None)
    }

    pub fn tlifting(&self, lo: usize, hi: usize) -> Result<bool> {
        Ok(self.tlifting_failure(lo, hi)?.is_none())
    }

    /// Whether `X/N` supplements `B/N` in `Y/N`.
    pub fn supplement(&self, x: usize, b: usize, lo: usize, hi: usize) -> bool {
        self.lat.join(x, b) == hi && self.small_in(self.lat.meet(x, b), lo, x)
    }

    /// First pair `(A, B)` with `A + B = Y` such that `A` contains no
    /// supplement of `B`.
    pub fn ample_failure(&self, lo: usize, hi: usize) -> Option<(usize, usize)> {
        let iv = self.interval(lo, hi);
        for &a in &iv {
            for &b in &iv {
                if self.lat.join(a, b) != hi {
                    continue;
                }
                let found = self
                    .interval(lo, a)
                    .into_iter()
                    .any(|x| self.supplement(x, b, lo, hi));
                if !found {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn amply_supplemented(&self, lo: usize, hi: usize) -> bool {
        self.ample_failure(lo, hi).is_none()
    }

    /// Preimage of `Soc(Y/N)`.
    pub fn socle(&self, lo: usize, hi: usize) -> usize {
        let iv = self.interval(lo, hi);
        let atoms = iv
            .iter()
            .copied()
            .filter(|&x| x != lo && iv.iter().all(|&y| y == lo || y == x || !self.lat.leq(y, x)));
        atoms.fold(lo, |acc, x| self.lat.join(acc, x))
    }

    pub fn semisimple(&self, lo: usize, hi: usize) -> bool {
        self.socle(lo, hi) == hi
    }
}
