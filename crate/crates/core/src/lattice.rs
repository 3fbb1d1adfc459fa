//! Submodule lattices and the basic relative predicates: small, essential,
//! radical and socle.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::bitset::BitSet;
use crate::error::{AlgebraError, Result};
use crate::limits::limits;
use crate::module::{regular_module, Module};
use crate::ring::FiniteRing;
use crate::submodule::Submodule;

/// All submodules of a module in canonical order: by size, then by sorted
/// element codes. Node 0 is the zero submodule and the last node is the
/// whole module.
pub struct SubmoduleLattice {
    module: Module,
    nodes: Vec<Submodule>,
    index: HashMap<BitSet, usize>,
    /// `below[i]`: nodes contained in node `i`.
    below: Vec<BitSet>,
    /// `above[i]`: nodes containing node `i`.
    above: Vec<BitSet>,
    cyclic: Vec<usize>,
    joins: OnceLock<Vec<u32>>,
    meets: OnceLock<Vec<u32>>,
}

const TABLE_LIMIT: usize = 1024;

impl std::fmt::Debug for SubmoduleLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SubmoduleLattice")
            .field("nodes", &self.nodes.len())
            .finish()
    }
}

/// Hasse diagram of a lattice: node sizes and upper covers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HasseDiagram {
    pub sizes: Vec<usize>,
    pub covers: Vec<Vec<usize>>,
}

/// The cached submodule lattice of `m`.
pub fn submodules(m: &Module) -> Result<Arc<SubmoduleLattice>> {
    m.cache
        .lattice
        .get_or_init(|| SubmoduleLattice::build(m).map(Arc::new))
        .clone()
}

impl SubmoduleLattice {
    fn build(m: &Module) -> Result<Self> {
        let lim = limits().max_lattice_nodes;
        let mut seen: HashMap<BitSet, Submodule> = HashMap::new();
        let mut cyclics: Vec<Submodule> = Vec::new();
        for x in m.elements() {
            let c = m.cyclic(x);
            if !seen.contains_key(&c.bits) {
                seen.insert(c.bits.clone(), c.clone());
                cyclics.push(c);
            }
            if seen.len() > lim {
                return Err(AlgebraError::limit("submodule lattice", lim, seen.len()));
            }
        }
        let zero = m.zero_submodule();
        seen.entry(zero.bits.clone()).or_insert(zero.clone());
        let mut queue: Vec<Submodule> = seen.values().cloned().collect();
        queue.sort();
        while let Some(x) = queue.pop() {
            for c in &cyclics {
                if c.is_subset(&x) {
                    continue;
                }
                let y = m.sum(&x, c)?;
                if !seen.contains_key(&y.bits) {
                    seen.insert(y.bits.clone(), y.clone());
                    if seen.len() > lim {
                        return Err(AlgebraError::limit("submodule lattice", lim, seen.len()));
                    }
                    queue.push(y);
                }
            }
        }
        let mut nodes: Vec<Submodule> = seen.into_values().collect();
        nodes.sort();
        let n = nodes.len();
        let index: HashMap<BitSet, usize> = nodes
            .iter()
            .enumerate()
            .map(|(i, s)| (s.bits.clone(), i))
            .collect();
        let mut below = vec![BitSet::new(n); n];
        let mut above = vec![BitSet::new(n); n];
        for i in 0..n {
            for j in 0..=i {
                if nodes[j].len() <= nodes[i].len() && nodes[j].is_subset(&nodes[i]) {
                    below[i].insert(j);
                    above[j].insert(i);
                }
            }
        }
        let mut cyclic: Vec<usize> = cyclics.iter().map(|c| index[&c.bits]).collect();
        cyclic.sort_unstable();
        Ok(SubmoduleLattice {
            module: m.clone(),
            nodes,
            index,
            below,
            above,
            cyclic,
            joins: OnceLock::new(),
            meets: OnceLock::new(),
        })
    }

    pub fn module(&self) -> &Module {
        &self.module
    }

    pub fn nodes(&self) -> &[Submodule] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, i: usize) -> &Submodule {
        &self.nodes[i]
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn index_of(&self, a: &Submodule) -> Option<usize> {
        if a.parent != self.module.id() {
            return None;
        }
        self.index.get(&a.bits).copied()
    }

    /// Node index of a submodule of the lattice's module.
    pub fn locate(&self, a: &Submodule) -> Result<usize> {
        if a.parent != self.module.id() {
            return Err(AlgebraError::ParentMismatch);
        }
        self.index
            .get(&a.bits)
            .copied()
            .ok_or(AlgebraError::NotSubmodule)
    }

    /// Nodes spanned by a single element.
    pub fn cyclic_nodes(&self) -> &[usize] {
        &self.cyclic
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below[b].contains(a)
    }

    pub fn below(&self, a: usize) -> &BitSet {
        &self.below[a]
    }

    pub fn above(&self, a: usize) -> &BitSet {
        &self.above[a]
    }

    /// Nodes `x` with `lo ≤ x ≤ hi`, in canonical order.
    pub fn interval(&self, lo: usize, hi: usize) -> Vec<usize> {
        self.below[hi]
            .intersection(&self.above[lo])
            .iter()
            .collect()
    }

    fn join_uncached(&self, a: usize, b: usize) -> usize {
        if self.leq(a, b) {
            return b;
        }
        if self.leq(b, a) {
            return a;
        }
        let s = self
            .module
            .sum(&self.nodes[a], &self.nodes[b])
            .expect("same parent");
        self.index[&s.bits]
    }

    fn meet_uncached(&self, a: usize, b: usize) -> usize {
        if self.leq(a, b) {
            return a;
        }
        if self.leq(b, a) {
            return b;
        }
        self.index[&self.nodes[a].bits.intersection(&self.nodes[b].bits)]
    }

    fn table(&self, f: impl Fn(usize, usize) -> usize) -> Vec<u32> {
        let n = self.len();
        let mut t = vec![0u32; n * n];
        for a in 0..n {
            for b in a..n {
                let v = f(a, b) as u32;
                t[a * n + b] = v;
                t[b * n + a] = v;
            }
        }
        t
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        let n = self.len();
        if n <= TABLE_LIMIT {
            self.joins
                .get_or_init(|| self.table(|x, y| self.join_uncached(x, y)))[a * n + b]
                as usize
        } else {
            self.join_uncached(a, b)
        }
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        let n = self.len();
        if n <= TABLE_LIMIT {
            self.meets
                .get_or_init(|| self.table(|x, y| self.meet_uncached(x, y)))[a * n + b]
                as usize
        } else {
            self.meet_uncached(a, b)
        }
    }

    /// Upper covers of a node.
    pub fn covers(&self, a: usize) -> Vec<usize> {
        let ups: Vec<usize> = self.above[a].iter().filter(|&b| b != a).collect();
        ups.iter()
            .copied()
            .filter(|&b| !ups.iter().any(|&c| c != b && self.leq(c, b)))
            .collect()
    }

    pub fn hasse(&self) -> HasseDiagram {
        HasseDiagram {
            sizes: self.nodes.iter().map(Submodule::len).collect(),
            covers: (0..self.len()).map(|i| self.covers(i)).collect(),
        }
    }

    /// Minimal nonzero nodes.
    pub fn atoms(&self) -> Vec<usize> {
        self.covers(0)
    }

    /// Maximal proper nodes.
    pub fn coatoms(&self) -> Vec<usize> {
        let top = self.top();
        (0..top).filter(|&i| self.covers(i) == [top]).collect()
    }
}

/// Jacobson radical of a ring as a submodule of its regular module: the
/// intersection of the maximal right ideals.
pub fn jacobson(ring: &Arc<FiniteRing>) -> Result<Submodule> {
    ring.cache
        .jacobson
        .get_or_init(|| {
            let reg = regular_module(ring);
            let lat = submodules(&reg)?;
            let mut bits = lat.node(lat.top()).bits.clone();
            for c in lat.coatoms() {
                bits = bits.intersection(&lat.node(c).bits);
            }
            Ok(reg.submodule_from_bits(bits))
        })
        .clone()
}

/// `M·J`, the radical of a finite module.
pub fn radical(m: &Module) -> Result<Submodule> {
    m.cache
        .radical
        .get_or_init(|| {
            let j = jacobson(m.ring())?;
            Ok(radical_of(m, &m.whole(), j.additive_generators()))
        })
        .clone()
}

/// `A·J` for a submodule `A`, given additive generators of `J`.
pub(crate) fn radical_of(m: &Module, a: &Submodule, j_gens: &[u32]) -> Submodule {
    let prods: Vec<u32> = a
        .additive_generators()
        .iter()
        .flat_map(|&x| j_gens.iter().map(move |&r| (x, r)))
        .map(|(x, r)| m.act(x, r))
        .collect();
    m.span(&prods)
}

/// Sum of all small submodules, by the definitional scan.
pub fn radical_by_small_sum(m: &Module) -> Result<Submodule> {
    let lat = submodules(m)?;
    let mut acc = m.zero_submodule();
    for i in 0..lat.len() {
        if is_small_scan_node(&lat, i) {
            acc = m.sum(&acc, lat.node(i))?;
        }
    }
    Ok(acc)
}

/// Sum of all simple submodules.
pub fn socle(m: &Module) -> Result<Submodule> {
    let lat = submodules(m)?;
    let mut acc = m.zero_submodule();
    for a in lat.atoms() {
        acc = m.sum(&acc, lat.node(a))?;
    }
    Ok(acc)
}

/// `A ≪ M`, decided by containment in the radical.
pub fn is_small(m: &Module, a: &Submodule) -> Result<bool> {
    if a.parent != m.id() {
        return Err(AlgebraError::ParentMismatch);
    }
    Ok(a.is_subset(&radical(m)?))
}

/// `A ≪ M`, decided by scanning every proper submodule.
pub fn is_small_scan(m: &Module, a: &Submodule) -> Result<bool> {
    let lat = submodules(m)?;
    let i = lat.locate(a)?;
    Ok(is_small_scan_node(&lat, i))
}

fn is_small_scan_node(lat: &SubmoduleLattice, a: usize) -> bool {
    let top = lat.top();
    (0..top).all(|b| lat.join(a, b) != top)
}

/// `A ≤_e M`: `A` meets every nonzero cyclic submodule.
pub fn is_essential(m: &Module, a: &Submodule) -> Result<bool> {
    if a.parent != m.id() {
        return Err(AlgebraError::ParentMismatch);
    }
    let lat = submodules(m)?;
    Ok(lat.cyclic_nodes().iter().filter(|&&c| c != 0).all(|&c| {
        lat.node(c)
            .elements()
            .iter()
            .any(|&x| x != 0 && a.contains(x))
    }))
}

/// All idempotent elements of a ring, in code order.
pub fn idempotents(ring: &FiniteRing) -> &[u32] {
    ring.cache
        .idempotents
        .get_or_init(|| ring.elements().filter(|&x| ring.mul(x, x) == x).collect())
}
