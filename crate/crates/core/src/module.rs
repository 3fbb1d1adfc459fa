//! Finite right modules over finite rings and the basic constructions on
//! them: spans, sums, intersections, quotients, submodules viewed as
//! modules, direct sums and regular modules.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use sha2::{Digest, Sha256};

use crate::bitset::BitSet;
use crate::error::{AlgebraError, Result};
use crate::group::{MixedRadix, Polycyclic};
use crate::hom::{EndRing, ModuleHom};
use crate::lattice::SubmoduleLattice;
use crate::limits::limits;
use crate::ring::FiniteRing;
use crate::sections::SectionMemo;
use crate::structure::Hull;
use crate::submodule::Submodule;

pub type Module = Arc<FiniteModule>;

pub struct FiniteModule {
    ring: Arc<FiniteRing>,
    radix: MixedRadix,
    /// `action[b][j][l]`: coordinate `l` of `f_j · e_b`.
    action: Vec<Vec<Vec<u32>>>,
    act: Vec<Vec<u32>>,
    id: u64,
    fingerprint: [u8; 32],
    pub(crate) cache: ModuleCache,
}

#[derive(Default)]
pub(crate) struct ModuleCache {
    pub generators: OnceLock<Vec<u32>>,
    pub lattice: OnceLock<Result<Arc<SubmoduleLattice>>>,
    pub end_ring: OnceLock<Result<Arc<EndRing>>>,
    pub radical: OnceLock<Result<Submodule>>,
    pub hull: OnceLock<Result<Hull>>,
    pub sections: SectionMemo,
}

impl fmt::Debug for FiniteModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteModule")
            .field("ring", &self.ring.name())
            .field("orders", &self.radix.orders())
            .field("action", &self.action)
            .finish()
    }
}

impl PartialEq for FiniteModule {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint
    }
}

impl Eq for FiniteModule {}

impl FiniteModule {
    /// Validates the action matrices and builds the module.
    pub fn new(
        ring: Arc<FiniteRing>,
        orders: Vec<u32>,
        action: Vec<Vec<Vec<u32>>>,
    ) -> Result<Module> {
        let t = orders.len();
        let k = ring.rank();
        if orders.contains(&0) {
            return Err(AlgebraError::InvalidModule(
                "component orders must be positive".into(),
            ));
        }
        let size = orders
            .iter()
            .try_fold(1usize, |acc, &d| acc.checked_mul(d as usize))
            .unwrap_or(usize::MAX);
        let lim = limits().max_module;
        if size > lim {
            return Err(AlgebraError::limit("module", lim, size));
        }
        let radix = MixedRadix::new(&orders)
            .ok_or_else(|| AlgebraError::InvalidModule("module too large".into()))?;
        if action.len() != k {
            return Err(AlgebraError::InvalidModule(format!(
                "expected {k} action matrices, got {}",
                action.len()
            )));
        }
        for a in &action {
            if a.len() != t || a.iter().any(|row| row.len() != t) {
                return Err(AlgebraError::InvalidModule(format!(
                    "action matrices must be {t}x{t}"
                )));
            }
        }
        for (b, a) in action.iter().enumerate() {
            for j in 0..t {
                for l in 0..t {
                    if (u64::from(orders[j]) * u64::from(a[j][l])) % u64::from(orders[l]) != 0 {
                        return Err(AlgebraError::InvalidModule(format!(
                            "action of e{b} is not well defined on coordinate {j}"
                        )));
                    }
                }
            }
        }
        let action: Vec<Vec<Vec<u32>>> = action
            .into_iter()
            .map(|a| {
                a.into_iter()
                    .map(|row| row.iter().zip(&orders).map(|(&x, &m)| x % m).collect())
                    .collect()
            })
            .collect();
        let act: Vec<Vec<u32>> = action
            .iter()
            .map(|a| {
                let rows: Vec<u32> = a.iter().map(|row| radix.encode(row)).collect();
                (0..size as u32)
                    .map(|x| {
                        let c = radix.decode(x);
                        c.iter().zip(&rows).fold(0, |acc, (&cj, &r)| {
                            radix.add(acc, radix.scale(r, u64::from(cj)))
                        })
                    })
                    .collect()
            })
            .collect();
        // compatibility with ring multiplication and unitality, checked on unit vectors
        for i in 0..k {
            for j in 0..k {
                let prod = &ring.constants()[i][j];
                for u in 0..t {
                    let x = radix.unit(u);
                    let lhs = act[j][act[i][x as usize] as usize];
                    let rhs = prod.iter().enumerate().fold(0, |acc, (l, &c)| {
                        radix.add(acc, radix.scale(act[l][x as usize], u64::from(c)))
                    });
                    if lhs != rhs {
                        return Err(AlgebraError::InvalidModule(format!(
                            "action does not respect the product e{i}*e{j}"
                        )));
                    }
                }
            }
        }
        for u in 0..t {
            let x = radix.unit(u);
            let img = ring
                .one_coords()
                .iter()
                .enumerate()
                .fold(0, |acc, (l, &c)| {
                    radix.add(acc, radix.scale(act[l][x as usize], u64::from(c)))
                });
            if img != x {
                return Err(AlgebraError::InvalidModule(
                    "identity does not act as identity".into(),
                ));
            }
        }
        let mut hasher = Sha256::new();
        hasher.update(b"module");
        hasher.update(ring.fingerprint());
        hasher.update((t as u64).to_le_bytes());
        for v in orders.iter().chain(action.iter().flatten().flatten()) {
            hasher.update(v.to_le_bytes());
        }
        let fingerprint: [u8; 32] = hasher.finalize().into();
        let id = u64::from_le_bytes(fingerprint[..8].try_into().expect("8 bytes"));
        Ok(Arc::new(FiniteModule {
            ring,
            radix,
            action,
            act,
            id,
            fingerprint,
            cache: ModuleCache::default(),
        }))
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn radix(&self) -> &MixedRadix {
        &self.radix
    }

    pub fn orders(&self) -> &[u32] {
        self.radix.orders()
    }

    pub fn rank(&self) -> usize {
        self.radix.rank()
    }

    pub fn size(&self) -> usize {
        self.radix.size()
    }

    pub fn action(&self) -> &[Vec<Vec<u32>>] {
        &self.action
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn fingerprint(&self) -> &[u8; 32] {
        &self.fingerprint
    }

    pub fn fingerprint_hex(&self) -> String {
        self.fingerprint
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }

    pub fn exponent(&self) -> u64 {
        self.radix.exponent()
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.size() as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.radix.add(a, b)
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.radix.neg(a)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.radix.add(a, self.radix.neg(b))
    }

    pub fn scale(&self, a: u32, k: u64) -> u32 {
        self.radix.scale(a, k)
    }

    pub fn unit(&self, j: usize) -> u32 {
        self.radix.unit(j)
    }

    pub fn units(&self) -> Vec<u32> {
        (0..self.rank())
            .map(|j| self.unit(j))
            .filter(|&u| u != 0)
            .collect()
    }

    #[inline]
    pub fn act_basis(&self, x: u32, b: usize) -> u32 {
        self.act[b][x as usize]
    }

    /// `x · r` for a ring element code `r`.
    pub fn act(&self, x: u32, r: u32) -> u32 {
        let rc = self.ring.coords(r);
        rc.iter().enumerate().fold(0, |acc, (b, &c)| {
            if c == 0 {
                acc
            } else {
                self.radix
                    .add(acc, self.radix.scale(self.act[b][x as usize], u64::from(c)))
            }
        })
    }

    pub fn coords(&self, x: u32) -> Vec<u32> {
        self.radix.decode(x)
    }

    pub fn encode(&self, coords: &[u32]) -> u32 {
        self.radix.encode(coords)
    }

    fn check_parent(&self, a: &Submodule) -> Result<()> {
        if a.parent != self.id {
            Err(AlgebraError::ParentMismatch)
        } else {
            Ok(())
        }
    }

    pub fn zero_submodule(&self) -> Submodule {
        let mut bits = BitSet::new(self.size());
        bits.insert(0);
        Submodule::from_parts(self.id, vec![0], bits, vec![])
    }

    pub fn whole(&self) -> Submodule {
        self.additive_span(None, &self.units())
    }

    /// Additive subgroup generated by `base` and `gens`.
    pub(crate) fn additive_span(&self, base: Option<&Submodule>, gens: &[u32]) -> Submodule {
        let (mut elems, mut bits, mut kept) = match base {
            Some(b) => (b.elems.clone(), b.bits.clone(), b.gens.clone()),
            None => {
                let mut bits = BitSet::new(self.size());
                bits.insert(0);
                (vec![0u32], bits, Vec::new())
            }
        };
        for &h in gens {
            if bits.contains(h as usize) {
                continue;
            }
            kept.push(h);
            let base_len = elems.len();
            let mut cur = h;
            while !bits.contains(cur as usize) {
                for i in 0..base_len {
                    let x = self.radix.add(elems[i], cur);
                    bits.insert(x as usize);
                    elems.push(x);
                }
                cur = self.radix.add(cur, h);
            }
        }
        Submodule::from_parts(self.id, elems, bits, kept)
    }

    fn action_images(&self, gens: &[u32]) -> Vec<u32> {
        let k = self.ring.rank();
        let mut out = Vec::with_capacity(gens.len() * (k + 1));
        for &g in gens {
            out.push(g);
            for b in 0..k {
                out.push(self.act[b][g as usize]);
            }
        }
        out
    }

    /// Smallest submodule containing `gens`.
    pub fn span(&self, gens: &[u32]) -> Submodule {
        self.additive_span(None, &self.action_images(gens))
    }

    pub fn cyclic(&self, x: u32) -> Submodule {
        self.span(&[x])
    }

    /// `a + span(gens)`.
    pub fn extend(&self, a: &Submodule, gens: &[u32]) -> Result<Submodule> {
        self.check_parent(a)?;
        Ok(self.additive_span(Some(a), &self.action_images(gens)))
    }

    pub fn sum(&self, a: &Submodule, b: &Submodule) -> Result<Submodule> {
        self.check_parent(a)?;
        self.check_parent(b)?;
        let (big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
        Ok(self.additive_span(Some(big), &small.gens))
    }

    pub fn intersect(&self, a: &Submodule, b: &Submodule) -> Result<Submodule> {
        self.check_parent(a)?;
        self.check_parent(b)?;
        Ok(self.submodule_from_bits(a.bits.intersection(&b.bits)))
    }

    /// Rebuilds a submodule (with additive generators) from a closed element set.
    pub(crate) fn submodule_from_bits(&self, bits: BitSet) -> Submodule {
        let mut out = self.zero_submodule();
        for x in bits.iter() {
            if !out.contains(x as u32) {
                out = self.additive_span(Some(&out), &[x as u32]);
            }
        }
        debug_assert_eq!(out.bits, bits);
        out
    }

    /// Validates that `elems` is closed under addition and the ring action.
    pub fn submodule_from_elements(&self, elems: &[u32]) -> Result<Submodule> {
        let mut bits = BitSet::new(self.size());
        for &x in elems {
            if x as usize >= self.size() {
                return Err(AlgebraError::NotSubmodule);
            }
            bits.insert(x as usize);
        }
        if !bits.contains(0) {
            return Err(AlgebraError::NotSubmodule);
        }
        let s = self.span(&bits.iter().map(|x| x as u32).collect::<Vec<_>>());
        if s.bits != bits {
            return Err(AlgebraError::NotSubmodule);
        }
        Ok(s)
    }

    pub fn is_submodule_of_self(&self, a: &Submodule) -> bool {
        a.parent == self.id
    }

    /// A small generating set, chosen greedily by largest span increment.
    pub fn generators(&self) -> &[u32] {
        self.cache.generators.get_or_init(|| {
            let mut gens = Vec::new();
            let mut cur = self.zero_submodule();
            while cur.len() < self.size() {
                let mut best: Option<(usize, u32, Submodule)> = None;
                for x in self.elements() {
                    if cur.contains(x) {
                        continue;
                    }
                    let s = self.additive_span(Some(&cur), &self.action_images(&[x]));
                    if best.as_ref().is_none_or(|b| s.len() > b.0) {
                        best = Some((s.len(), x, s));
                    }
                }
                let (_, x, s) = best.expect("proper span misses some element");
                gens.push(x);
                cur = s;
            }
            gens
        })
    }

    /// The elementary-divisor multiset of the additive group.
    pub fn additive_invariants(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for &m in self.orders() {
            let mut n = m;
            let mut p = 2;
            while n > 1 {
                if n % p == 0 {
                    let mut q = 1;
                    while n % p == 0 {
                        n /= p;
                        q *= p;
                    }
                    out.push(q);
                }
                p += 1;
            }
        }
        out.sort_unstable();
        out
    }
}

/// The module `R_R`.
pub fn regular_module(ring: &Arc<FiniteRing>) -> Module {
    ring.cache
        .regular
        .get_or_init(|| {
            let k = ring.rank();
            let action = (0..k)
                .map(|b| (0..k).map(|j| ring.constants()[j][b].clone()).collect())
                .collect();
            FiniteModule::new(ring.clone(), ring.orders().to_vec(), action)
                .expect("regular module of a valid ring is valid")
        })
        .clone()
}

pub fn zero_module(ring: &Arc<FiniteRing>) -> Module {
    FiniteModule::new(ring.clone(), vec![], vec![vec![]; ring.rank()]).expect("zero module")
}

pub struct DirectSum {
    pub module: Module,
    pub injections: [ModuleHom; 2],
    pub projections: [ModuleHom; 2],
}

pub fn direct_sum(m: &Module, n: &Module) -> Result<DirectSum> {
    if !m.ring.same_ring(&n.ring) {
        return Err(AlgebraError::RingMismatch);
    }
    let (tm, tn) = (m.rank(), n.rank());
    let t = tm + tn;
    let orders: Vec<u32> = m.orders().iter().chain(n.orders()).copied().collect();
    let action = (0..m.ring.rank())
        .map(|b| {
            let mut a = vec![vec![0u32; t]; t];
            for (row, src) in a[..tm].iter_mut().zip(&m.action[b]) {
                row[..tm].copy_from_slice(src);
            }
            for (row, src) in a[tm..].iter_mut().zip(&n.action[b]) {
                row[tm..].copy_from_slice(src);
            }
            a
        })
        .collect();
    let s = FiniteModule::new(m.ring.clone(), orders, action)?;
    let inj_m = ModuleHom::from_images(m.clone(), s.clone(), (0..tm).map(|j| s.unit(j)).collect());
    let inj_n = ModuleHom::from_images(
        n.clone(),
        s.clone(),
        (0..tn).map(|j| s.unit(tm + j)).collect(),
    );
    let pr_m = ModuleHom::from_images(
        s.clone(),
        m.clone(),
        (0..t).map(|j| if j < tm { m.unit(j) } else { 0 }).collect(),
    );
    let pr_n = ModuleHom::from_images(
        s.clone(),
        n.clone(),
        (0..t)
            .map(|j| if j >= tm { n.unit(j - tm) } else { 0 })
            .collect(),
    );
    Ok(DirectSum {
        module: s,
        injections: [inj_m, inj_n],
        projections: [pr_m, pr_n],
    })
}

/// Quotient `M/A` with its canonical projection.
pub fn quotient(m: &Module, a: &Submodule) -> Result<(Module, ModuleHom)> {
    if a.parent != m.id {
        return Err(AlgebraError::NotSubmodule);
    }
    let t = m.rank();
    let e = m.exponent();
    let mut rows: Vec<Vec<u64>> = a
        .gens
        .iter()
        .map(|&g| m.coords(g).into_iter().map(u64::from).collect())
        .collect();
    for (j, &mj) in m.orders().iter().enumerate() {
        let mut r = vec![0u64; t];
        r[j] = u64::from(mj) % e;
        rows.push(r);
    }
    let d = crate::zdiag::diagonalize(&rows, t, e);
    let q_orders: Vec<u32> = d.moduli.iter().map(|&x| x as u32).collect();
    let q = q_orders.len();
    let action = (0..m.ring.rank())
        .map(|b| {
            (0..q)
                .map(|i| {
                    // u_i · e_b = Σ_j lift[i][j] (f_j · e_b), then project
                    let mut img = vec![0u64; t];
                    for j in 0..t {
                        let c = d.lift[i][j];
                        if c == 0 {
                            continue;
                        }
                        for (acc, &x) in img.iter_mut().zip(&m.action[b][j]) {
                            *acc += c * u64::from(x);
                        }
                    }
                    d.coords(&img).into_iter().map(|x| x as u32).collect()
                })
                .collect()
        })
        .collect();
    let qm = FiniteModule::new(m.ring.clone(), q_orders, action)?;
    let images = (0..t)
        .map(|j| {
            let mut unit = vec![0u64; t];
            unit[j] = 1;
            qm.encode(
                &d.coords(&unit)
                    .into_iter()
                    .map(|x| x as u32)
                    .collect::<Vec<_>>(),
            )
        })
        .collect();
    let proj = ModuleHom::from_images(m.clone(), qm.clone(), images);
    debug_assert!(proj.validate().is_ok());
    Ok((qm, proj))
}

/// A submodule viewed as a module in its own right.
pub struct Embedded {
    pub module: Module,
    pub inclusion: ModuleHom,
    local: HashMap<u32, u32>,
}

impl Embedded {
    /// Code in the embedded module of a parent element lying in the submodule.
    pub fn local(&self, x: u32) -> Option<u32> {
        self.local.get(&x).copied()
    }

    /// Transports a parent submodule contained in the embedded one.
    pub fn restrict(&self, a: &Submodule) -> Result<Submodule> {
        let gens = a
            .gens
            .iter()
            .map(|&g| self.local(g).ok_or(AlgebraError::NotSubmodule))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.module.additive_span(None, &gens))
    }
}

pub fn sub_as_module(m: &Module, a: &Submodule) -> Result<Embedded> {
    if a.parent != m.id {
        return Err(AlgebraError::NotSubmodule);
    }
    let gens: Vec<usize> = a.gens.iter().map(|&g| g as usize).collect();
    let pc = Polycyclic::build(m.radix(), &gens);
    let e = m.exponent();
    let d = pc.decompose(e);
    let orders: Vec<u32> = d.moduli.iter().map(|&x| x as u32).collect();
    let basis: Vec<u32> = d
        .lift
        .iter()
        .map(|l| {
            l.iter()
                .zip(&a.gens)
                .fold(0, |acc, (&c, &g)| m.add(acc, m.scale(g, c)))
        })
        .collect();
    let local_radix = MixedRadix::new(&orders).expect("submodule fits");
    let local_code = |x: u32| -> u32 {
        let ex: Vec<u64> = pc
            .exps(x as usize)
            .expect("element of submodule")
            .iter()
            .map(|&c| u64::from(c))
            .collect();
        local_radix.encode(
            &d.coords(&ex)
                .into_iter()
                .map(|c| c as u32)
                .collect::<Vec<_>>(),
        )
    };
    let action = (0..m.ring.rank())
        .map(|b| {
            basis
                .iter()
                .map(|&u| local_radix.decode(local_code(m.act_basis(u, b))))
                .collect()
        })
        .collect();
    let sub = FiniteModule::new(m.ring.clone(), orders, action)?;
    let local: HashMap<u32, u32> = a.elems.iter().map(|&x| (x, local_code(x))).collect();
    let inclusion = ModuleHom::from_images(sub.clone(), m.clone(), basis);
    debug_assert!(inclusion.validate().is_ok());
    Ok(Embedded {
        module: sub,
        inclusion,
        local,
    })
}

/// The subquotient `Y/N` for submodules `N ⊆ Y` of `M`.
pub fn subquotient(m: &Module, y: &Submodule, n: &Submodule) -> Result<Module> {
    if !n.is_subset(y) {
        return Err(AlgebraError::NotSubmodule);
    }
    if n.is_zero() {
        return Ok(sub_as_module(m, y)?.module);
    }
    if y.len() == m.size() {
        return Ok(quotient(m, n)?.0);
    }
    let emb = sub_as_module(m, y)?;
    let local_n = emb.restrict(n)?;
    Ok(quotient(&emb.module, &local_n)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_ring, RingSpec};

    fn z(n: u32) -> Arc<FiniteRing> {
        build_ring(&RingSpec::Cyclic(n)).unwrap()
    }

    pub(crate) fn zmod_module(ring: &Arc<FiniteRing>, orders: &[u32]) -> Module {
        let t = orders.len();
        let id: Vec<Vec<u32>> = (0..t)
            .map(|i| (0..t).map(|j| u32::from(i == j)).collect())
            .collect();
        FiniteModule::new(ring.clone(), orders.to_vec(), vec![id]).unwrap()
    }

    #[test]
    fn regular_z4() {
        let r = z(4);
        let m = regular_module(&r);
        assert_eq!(m.size(), 4);
        assert_eq!(m.span(&[2]).elements(), &[0, 2]);
        assert!(m.span(&[]).is_zero());
    }

    #[test]
    fn regular_field_is_simple() {
        let m = regular_module(&z(3));
        assert_eq!(m.size(), 3);
        for x in 1..3 {
            assert_eq!(m.cyclic(x).len(), 3);
        }
    }

    #[test]
    fn span_in_z2_z4() {
        let r = z(4);
        let m = zmod_module(&r, &[2, 4]);
        let x = m.encode(&[1, 2]);
        let s = m.span(&[x]);
        assert_eq!(s.len(), 2);
        // sum with 0 ⊕ 2Z/4 gives <(1,0),(0,2)> of size 4
        let b = m.span(&[m.encode(&[0, 2])]);
        let sum = m.sum(&s, &b).unwrap();
        assert_eq!(sum.len(), 4);
        let expect = m.span(&[m.encode(&[1, 0]), m.encode(&[0, 2])]);
        assert_eq!(sum, expect);
    }

    #[test]
    fn direct_sum_sizes() {
        let r = z(8);
        let a = zmod_module(&r, &[2]);
        let b = zmod_module(&r, &[8]);
        let s = direct_sum(&a, &b).unwrap();
        assert_eq!(s.module.size(), 16);
        for h in s.injections.iter().chain(&s.projections) {
            h.validate().unwrap();
        }
        let other = regular_module(&z(4));
        assert!(matches!(
            direct_sum(&a, &other),
            Err(AlgebraError::RingMismatch)
        ));
    }

    #[test]
    fn quotient_examples() {
        let r = z(8);
        let m = zmod_module(&r, &[2, 8]);
        let a = m.span(&[m.encode(&[0, 2])]);
        let (q, p) = quotient(&m, &a).unwrap();
        assert_eq!(q.size(), 4);
        assert_eq!(q.additive_invariants(), vec![2, 2]);
        assert_eq!(p.kernel(), a);
        assert_eq!(p.image().len(), q.size());
        let (q0, _) = quotient(&m, &m.zero_submodule()).unwrap();
        assert_eq!(q0.size(), 16);
        let (qm, _) = quotient(&m, &m.whole()).unwrap();
        assert_eq!(qm.size(), 1);
    }

    #[test]
    fn submodule_validation() {
        let m = zmod_module(&z(4), &[4]);
        assert!(m.submodule_from_elements(&[0, 2]).is_ok());
        assert_eq!(
            m.submodule_from_elements(&[0, 1]),
            Err(AlgebraError::NotSubmodule)
        );
        assert_eq!(
            m.submodule_from_elements(&[2]),
            Err(AlgebraError::NotSubmodule)
        );
    }

    #[test]
    fn embedded_submodule() {
        let m = zmod_module(&z(8), &[2, 8]);
        let y = m.span(&[m.encode(&[1, 2])]);
        let emb = sub_as_module(&m, &y).unwrap();
        assert_eq!(emb.module.size(), y.len());
        assert_eq!(emb.inclusion.image(), y);
        assert!(emb.inclusion.kernel().is_zero());
        let n = m.span(&[m.encode(&[0, 4])]);
        let sq = subquotient(&m, &y, &n).unwrap();
        assert_eq!(sq.size(), y.len() / n.len());
    }

    #[test]
    fn invalid_action_rejected() {
        let r = z(4);
        // x·1 = 2x on Z/4 is not unital
        let err = FiniteModule::new(r.clone(), vec![4], vec![vec![vec![2]]]).unwrap_err();
        assert!(matches!(err, AlgebraError::InvalidModule(_)));
        // Z/2 coordinate mapped into Z/4 coordinate with odd coefficient
        let err = FiniteModule::new(r, vec![2, 4], vec![vec![vec![1, 1], vec![0, 1]]]).unwrap_err();
        assert!(matches!(err, AlgebraError::InvalidModule(_)));
    }
}
