//! Module homomorphisms, exhaustive hom-set enumeration, isomorphism
//! testing and endomorphism rings.

use std::collections::HashMap;
use std::fmt;
use std::ops::ControlFlow;
use std::sync::{Arc, OnceLock};

use crate::bitset::BitSet;
use crate::error::{AlgebraError, Result};
use crate::group::{AdditiveGroup, Polycyclic};
use crate::limits::limits;
use crate::module::{regular_module, Module};
use crate::ring::FiniteRing;
use crate::submodule::Submodule;
use crate::zdiag::Diagonal;

/// A right-linear map, stored as the images of the source's basis vectors.
#[derive(Clone)]
pub struct ModuleHom {
    source: Module,
    target: Module,
    images: Vec<u32>,
}

impl fmt::Debug for ModuleHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ModuleHom")
            .field("matrix", &self.matrix())
            .finish()
    }
}

impl PartialEq for ModuleHom {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.images == other.images
    }
}

impl Eq for ModuleHom {}

impl ModuleHom {
    /// Builds a map from its matrix; row `j` holds the target coordinates of
    /// the image of basis vector `j`.
    pub fn new(source: Module, target: Module, rows: &[Vec<u32>]) -> Result<Self> {
        if rows.len() != source.rank() || rows.iter().any(|r| r.len() != target.rank()) {
            return Err(AlgebraError::InvalidHom(format!(
                "matrix must be {}x{}",
                source.rank(),
                target.rank()
            )));
        }
        let images = rows.iter().map(|r| target.encode(r)).collect();
        Self::try_from_images(source, target, images)
    }

    pub fn try_from_images(source: Module, target: Module, images: Vec<u32>) -> Result<Self> {
        let h = ModuleHom {
            source,
            target,
            images,
        };
        h.validate()?;
        Ok(h)
    }

    pub(crate) fn from_images(source: Module, target: Module, images: Vec<u32>) -> Self {
        debug_assert_eq!(images.len(), source.rank());
        ModuleHom {
            source,
            target,
            images,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        if !s.ring().same_ring(t.ring()) {
            return Err(AlgebraError::RingMismatch);
        }
        if self.images.len() != s.rank() || self.images.iter().any(|&y| y as usize >= t.size()) {
            return Err(AlgebraError::InvalidHom(
                "image list does not match the source basis".into(),
            ));
        }
        for (j, &m) in s.orders().iter().enumerate() {
            if t.scale(self.images[j], u64::from(m)) != 0 {
                return Err(AlgebraError::InvalidHom(format!(
                    "not well defined on coordinate {j}"
                )));
            }
        }
        for b in 0..s.ring().rank() {
            for j in 0..s.rank() {
                let lhs = self.apply(s.act_basis(s.unit(j), b));
                let rhs = t.act_basis(self.images[j], b);
                if lhs != rhs {
                    return Err(AlgebraError::InvalidHom(format!(
                        "does not commute with the action of e{b}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn identity(m: &Module) -> Self {
        Self::from_images(
            m.clone(),
            m.clone(),
            (0..m.rank()).map(|j| m.unit(j)).collect(),
        )
    }

    pub fn zero(source: &Module, target: &Module) -> Self {
        Self::from_images(source.clone(), target.clone(), vec![0; source.rank()])
    }

    pub fn source(&self) -> &Module {
        &self.source
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    /// Target codes of the images of the source basis vectors.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn matrix(&self) -> Vec<Vec<u32>> {
        self.images.iter().map(|&y| self.target.coords(y)).collect()
    }

    #[inline]
    pub fn apply(&self, x: u32) -> u32 {
        let s = self.source.radix();
        let t = self.target.radix();
        let mut acc = 0;
        for (j, &y) in self.images.iter().enumerate() {
            let c = s.coord(x, j);
            if c != 0 {
                acc = t.add(acc, t.scale(y, u64::from(c)));
            }
        }
        acc
    }

    pub fn image(&self) -> Submodule {
        self.target.additive_span(None, &self.images)
    }

    /// Image of a submodule of the source.
    pub fn image_of(&self, a: &Submodule) -> Result<Submodule> {
        if a.parent != self.source.id() {
            return Err(AlgebraError::ParentMismatch);
        }
        let imgs: Vec<u32> = a.gens.iter().map(|&g| self.apply(g)).collect();
        Ok(self.target.additive_span(None, &imgs))
    }

    /// Preimage of a submodule of the target.
    pub fn preimage(&self, b: &Submodule) -> Result<Submodule> {
        if b.parent != self.target.id() {
            return Err(AlgebraError::ParentMismatch);
        }
        let mut bits = BitSet::new(self.source.size());
        for x in self.source.elements() {
            if b.contains(self.apply(x)) {
                bits.insert(x as usize);
            }
        }
        Ok(self.source.submodule_from_bits(bits))
    }

    pub fn kernel(&self) -> Submodule {
        let zero = self.target.zero_submodule();
        self.preimage(&zero).expect("zero submodule of the target")
    }

    pub fn kernel_image(&self) -> (Submodule, Submodule) {
        (self.kernel(), self.image())
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleHom) -> Result<ModuleHom> {
        if other.target != self.source {
            return Err(AlgebraError::InvalidHom("maps are not composable".into()));
        }
        Ok(Self::from_images(
            other.source.clone(),
            self.target.clone(),
            other.images.iter().map(|&y| self.apply(y)).collect(),
        ))
    }

    pub fn add(&self, other: &ModuleHom) -> Result<ModuleHom> {
        if self.source != other.source || self.target != other.target {
            return Err(AlgebraError::InvalidHom(
                "maps have different domains".into(),
            ));
        }
        Ok(Self::from_images(
            self.source.clone(),
            self.target.clone(),
            self.images
                .iter()
                .zip(&other.images)
                .map(|(&a, &b)| self.target.add(a, b))
                .collect(),
        ))
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.source.size()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.target.size()
    }

    pub fn is_idempotent(&self) -> bool {
        self.source == self.target && self.images.iter().all(|&y| self.apply(y) == y)
    }
}

/// Search data for maps out of `m`: images of a generating set determine the
/// map, subject to the relations of a polycyclic presentation.
struct HomSearch {
    gen_count: usize,
    /// Entry `j`: generator index and ring basis element (`None` for the generator itself).
    entries: Vec<(usize, Option<usize>)>,
    pc: Polycyclic,
    /// Exponent vectors of the source basis vectors.
    unit_exps: Vec<Vec<u32>>,
    /// Relations checked once generator `i` is fixed.
    checks: Vec<Vec<usize>>,
}

impl HomSearch {
    fn new(m: &Module) -> Self {
        let gens = m.generators();
        let k = m.ring().rank();
        let mut entries = Vec::new();
        let mut codes = Vec::new();
        for (i, &g) in gens.iter().enumerate() {
            entries.push((i, None));
            codes.push(g as usize);
            for b in 0..k {
                entries.push((i, Some(b)));
                codes.push(m.act_basis(g, b) as usize);
            }
        }
        let pc = Polycyclic::build(m.radix(), &codes);
        let unit_exps = (0..m.rank())
            .map(|j| {
                pc.exps(m.unit(j) as usize)
                    .expect("generators span the module")
                    .to_vec()
            })
            .collect();
        let mut checks = vec![Vec::new(); gens.len()];
        for (j, &(i, _)) in entries.iter().enumerate() {
            checks[i].push(j);
        }
        HomSearch {
            gen_count: gens.len(),
            entries,
            pc,
            unit_exps,
            checks,
        }
    }

    fn value(n: &Module, y: &[u32], entry: (usize, Option<usize>)) -> u32 {
        match entry.1 {
            None => y[entry.0],
            Some(b) => n.act_basis(y[entry.0], b),
        }
    }

    fn relation_holds(&self, n: &Module, vals: &[u32], j: usize) -> bool {
        let lhs = n.scale(vals[j], self.pc.rel_orders[j]);
        let rhs = self.pc.power_rels[j]
            .iter()
            .enumerate()
            .take(j)
            .fold(0, |acc, (l, &c)| {
                if c == 0 {
                    acc
                } else {
                    n.add(acc, n.scale(vals[l], c))
                }
            });
        lhs == rhs
    }

    fn images(&self, n: &Module, vals: &[u32]) -> Vec<u32> {
        self.unit_exps
            .iter()
            .map(|ex| {
                ex.iter().enumerate().fold(0, |acc, (l, &c)| {
                    if c == 0 {
                        acc
                    } else {
                        n.add(acc, n.scale(vals[l], u64::from(c)))
                    }
                })
            })
            .collect()
    }

    /// Calls `visit` with the basis images of every hom `m → n`.
    fn run<F>(&self, n: &Module, mut visit: F)
    where
        F: FnMut(Vec<u32>) -> ControlFlow<()>,
    {
        let mut y = vec![0u32; self.gen_count];
        let mut vals = vec![0u32; self.entries.len()];
        let _ = self.descend(n, 0, &mut y, &mut vals, &mut visit);
    }

    fn descend<F>(
        &self,
        n: &Module,
        i: usize,
        y: &mut [u32],
        vals: &mut [u32],
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(Vec<u32>) -> ControlFlow<()>,
    {
        if i == self.gen_count {
            return visit(self.images(n, vals));
        }
        for cand in n.elements() {
            y[i] = cand;
            for &j in &self.checks[i] {
                vals[j] = Self::value(n, y, self.entries[j]);
            }
            if self.checks[i]
                .iter()
                .all(|&j| self.relation_holds(n, vals, j))
            {
                self.descend(n, i + 1, y, vals, visit)?;
            }
        }
        ControlFlow::Continue(())
    }
}

fn check_same_ring(m: &Module, n: &Module) -> Result<()> {
    if m.ring().same_ring(n.ring()) {
        Ok(())
    } else {
        Err(AlgebraError::RingMismatch)
    }
}

/// All right-linear maps `m → n`.
pub fn hom_set(m: &Module, n: &Module) -> Result<Vec<ModuleHom>> {
    check_same_ring(m, n)?;
    let lim = limits().max_homs;
    let mut out = Vec::new();
    let mut overflow = false;
    HomSearch::new(m).run(n, |images| {
        if out.len() == lim {
            overflow = true;
            return ControlFlow::Break(());
        }
        out.push(ModuleHom::from_images(m.clone(), n.clone(), images));
        ControlFlow::Continue(())
    });
    if overflow {
        return Err(AlgebraError::limit("hom set", lim, lim + 1));
    }
    Ok(out)
}

/// `|Hom(m, n)|` without materialising the maps.
pub fn hom_count(m: &Module, n: &Module) -> Result<usize> {
    check_same_ring(m, n)?;
    let mut count = 0usize;
    HomSearch::new(m).run(n, |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    Ok(count)
}

/// Finds a map satisfying `pred`, in enumeration order.
pub fn find_hom(
    m: &Module,
    n: &Module,
    mut pred: impl FnMut(&ModuleHom) -> bool,
) -> Result<Option<ModuleHom>> {
    check_same_ring(m, n)?;
    let mut found = None;
    HomSearch::new(m).run(n, |images| {
        let h = ModuleHom::from_images(m.clone(), n.clone(), images);
        if pred(&h) {
            found = Some(h);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(found)
}

fn action_image_sizes(m: &Module) -> Vec<usize> {
    (0..m.ring().rank())
        .map(|b| {
            let mut seen = BitSet::new(m.size());
            m.elements()
                .filter(|&x| seen.insert(m.act_basis(x, b) as usize))
                .count()
        })
        .collect()
}

/// Cheap isomorphism invariants; equal for isomorphic modules.
pub fn iso_invariants(m: &Module) -> (usize, Vec<u32>, Vec<usize>) {
    (m.size(), m.additive_invariants(), action_image_sizes(m))
}

/// Returns an isomorphism `m → n` if one exists.
pub fn find_isomorphism(m: &Module, n: &Module) -> Result<Option<ModuleHom>> {
    check_same_ring(m, n)?;
    if iso_invariants(m) != iso_invariants(n) {
        return Ok(None);
    }
    let size = n.size();
    find_hom(m, n, |h| h.image().len() == size)
}

pub fn is_isomorphic(m: &Module, n: &Module) -> Result<bool> {
    Ok(find_isomorphism(m, n)?.is_some())
}

/// All endomorphisms of a module with ring structure `φψ = φ ∘ ψ`.
pub struct EndRing {
    module: Module,
    elements: Vec<ModuleHom>,
    index: HashMap<Vec<u32>, usize>,
    presentation: OnceLock<Result<EndPresentation>>,
}

/// `End(M)` as a finite ring, with element tables in both directions.
pub struct EndPresentation {
    pub ring: Arc<FiniteRing>,
    /// Ring code to endomorphism index.
    pub to_end: Vec<usize>,
    /// Endomorphism index to ring code.
    pub to_code: Vec<u32>,
}

impl fmt::Debug for EndRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EndRing")
            .field("size", &self.elements.len())
            .finish()
    }
}

/// Cached endomorphism ring.
pub fn end_ring(m: &Module) -> Result<Arc<EndRing>> {
    m.cache
        .end_ring
        .get_or_init(|| {
            let lim = limits().max_end;
            let mut elements = Vec::new();
            let mut overflow = false;
            HomSearch::new(m).run(m, |images| {
                if elements.len() == lim {
                    overflow = true;
                    return ControlFlow::Break(());
                }
                elements.push(ModuleHom::from_images(m.clone(), m.clone(), images));
                ControlFlow::Continue(())
            });
            if overflow {
                return Err(AlgebraError::limit("endomorphism ring", lim, lim + 1));
            }
            elements.sort_by(|a, b| a.images.cmp(&b.images));
            let index = elements
                .iter()
                .enumerate()
                .map(|(i, h)| (h.images.clone(), i))
                .collect();
            Ok(Arc::new(EndRing {
                module: m.clone(),
                elements,
                index,
                presentation: OnceLock::new(),
            }))
        })
        .clone()
}

struct EndGroup<'a>(&'a EndRing);

impl AdditiveGroup for EndGroup<'_> {
    fn capacity(&self) -> usize {
        self.0.len()
    }
    fn zero(&self) -> usize {
        self.0.zero()
    }
    fn add(&self, a: usize, b: usize) -> usize {
        self.0.add(a, b)
    }
}

impl EndRing {
    pub fn module(&self) -> &Module {
        &self.module
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[ModuleHom] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> &ModuleHom {
        &self.elements[i]
    }

    pub fn index_of(&self, h: &ModuleHom) -> Option<usize> {
        self.index.get(&h.images).copied()
    }

    pub fn zero(&self) -> usize {
        self.index[&vec![0u32; self.module.rank()]]
    }

    pub fn identity(&self) -> usize {
        self.index_of(&ModuleHom::identity(&self.module))
            .expect("identity is an endomorphism")
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let s = self.elements[a]
            .add(&self.elements[b])
            .expect("same module");
        self.index[&s.images]
    }

    /// `φ_a ∘ φ_b`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let c = self.elements[a]
            .compose(&self.elements[b])
            .expect("same module");
        self.index[&c.images]
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.elements[i].is_idempotent())
            .collect()
    }

    /// Ring presentation of `End(M)`, built on first use.
    pub fn presentation(&self) -> Result<&EndPresentation> {
        self.presentation
            .get_or_init(|| self.build_presentation())
            .as_ref()
            .map_err(Clone::clone)
    }

    fn build_presentation(&self) -> Result<EndPresentation> {
        let lim = limits().max_ring;
        if self.len() > lim {
            return Err(AlgebraError::limit(
                "endomorphism ring presentation",
                lim,
                self.len(),
            ));
        }
        let group = EndGroup(self);
        let mut span = BitSet::new(self.len());
        let mut span_elems = vec![self.zero()];
        span.insert(self.zero());
        let mut gens = Vec::new();
        for x in 0..self.len() {
            if span.contains(x) {
                continue;
            }
            gens.push(x);
            let base = span_elems.len();
            let mut cur = x;
            while !span.contains(cur) {
                for i in 0..base {
                    let y = group.add(span_elems[i], cur);
                    span.insert(y);
                    span_elems.push(y);
                }
                cur = group.add(cur, x);
            }
        }
        let pc = Polycyclic::build(&group, &gens);
        let d: Diagonal = pc.decompose(self.module.exponent());
        let orders: Vec<u32> = d.moduli.iter().map(|&x| x as u32).collect();
        let coords = |x: usize| -> Vec<u32> {
            let ex: Vec<u64> = pc
                .exps(x)
                .expect("in span")
                .iter()
                .map(|&c| u64::from(c))
                .collect();
            d.coords(&ex).into_iter().map(|c| c as u32).collect()
        };
        let basis: Vec<usize> = d
            .lift
            .iter()
            .map(|l| {
                l.iter().zip(&gens).fold(self.zero(), |acc, (&c, &g)| {
                    (0..c).fold(acc, |a, _| self.add(a, g))
                })
            })
            .collect();
        let constants = basis
            .iter()
            .map(|&a| basis.iter().map(|&b| coords(self.mul(a, b))).collect())
            .collect();
        let one = coords(self.identity());
        let ring = FiniteRing::new(
            format!(
                "End[{}]",
                self.module.fingerprint_hex().get(..12).unwrap_or("")
            ),
            orders,
            constants,
            one,
        )?;
        let mut to_end = vec![usize::MAX; ring.size()];
        let mut to_code = vec![0u32; self.len()];
        for (x, slot) in to_code.iter_mut().enumerate() {
            let code = ring.radix().encode(&coords(x));
            to_end[code as usize] = x;
            *slot = code;
        }
        debug_assert!(to_end.iter().all(|&x| x != usize::MAX));
        Ok(EndPresentation {
            ring,
            to_end,
            to_code,
        })
    }

    /// Right ideals of `End(M)` as index sets, with their additive generators.
    pub fn right_ideals(&self) -> Result<Vec<EndIdeal>> {
        let p = self.presentation()?;
        let reg = regular_module(&p.ring);
        let lat = crate::lattice::submodules(&reg)?;
        Ok(lat
            .nodes()
            .iter()
            .map(|node| EndIdeal {
                members: node
                    .elements()
                    .iter()
                    .map(|&c| p.to_end[c as usize])
                    .collect(),
                generators: node
                    .additive_generators()
                    .iter()
                    .map(|&c| p.to_end[c as usize])
                    .collect(),
            })
            .collect())
    }
}

/// A right ideal of an endomorphism ring given by endomorphism indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndIdeal {
    pub members: Vec<usize>,
    /// Additive generators; sums of images over the ideal reduce to these.
    pub generators: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::{direct_sum, zero_module, FiniteModule};
    use crate::ring::{build_ring, RingSpec};

    fn zmod(ring: &Arc<FiniteRing>, orders: &[u32]) -> Module {
        let t = orders.len();
        let id: Vec<Vec<u32>> = (0..t)
            .map(|i| (0..t).map(|j| u32::from(i == j)).collect())
            .collect();
        FiniteModule::new(ring.clone(), orders.to_vec(), vec![id]).unwrap()
    }

    /// All additive maps on basis images that commute with the action.
    fn brute_force_count(m: &Module, n: &Module) -> usize {
        let t = m.rank();
        let total = n.size().pow(t as u32);
        (0..total)
            .filter(|&code| {
                let mut c = code;
                let images = (0..t)
                    .map(|_| {
                        let y = (c % n.size()) as u32;
                        c /= n.size();
                        y
                    })
                    .collect();
                ModuleHom::try_from_images(m.clone(), n.clone(), images).is_ok()
            })
            .count()
    }

    #[test]
    fn hom_counts_over_z4() {
        let r = build_ring(&RingSpec::Cyclic(4)).unwrap();
        let z2 = zmod(&r, &[2]);
        let z4 = zmod(&r, &[4]);
        assert_eq!(hom_count(&z2, &z4).unwrap(), 2);
        assert_eq!(brute_force_count(&z2, &z4), 2);
        let m = zmod(&r, &[2, 4]);
        assert_eq!(end_ring(&m).unwrap().len(), 32);
        assert_eq!(brute_force_count(&m, &m), 32);
        assert_eq!(hom_count(&m, &zero_module(&r)).unwrap(), 1);
        let z = zero_module(&r);
        assert_eq!(end_ring(&z).unwrap().len(), 1);
    }

    #[test]
    fn block_orthogonality() {
        let r = build_ring(&RingSpec::Product(
            Box::new(RingSpec::Cyclic(2)),
            Box::new(RingSpec::Cyclic(4)),
        ))
        .unwrap();
        let reg = regular_module(&r);
        let s = reg.span(&[reg.encode(&[1, 0])]);
        let b = reg.span(&[reg.encode(&[0, 1])]);
        let s_mod = crate::module::sub_as_module(&reg, &s).unwrap().module;
        let b_mod = crate::module::sub_as_module(&reg, &b).unwrap().module;
        assert_eq!(hom_count(&s_mod, &b_mod).unwrap(), 1);
        assert_eq!(brute_force_count(&s_mod, &b_mod), 1);
        let sum = direct_sum(&s_mod, &b_mod).unwrap().module;
        assert!(is_isomorphic(&reg, &sum).unwrap());
    }

    #[test]
    fn kernel_image_of_doubling() {
        let r = build_ring(&RingSpec::Cyclic(4)).unwrap();
        let m = regular_module(&r);
        let f = ModuleHom::new(m.clone(), m.clone(), &[vec![2]]).unwrap();
        let (k, i) = f.kernel_image();
        assert_eq!(k.elements(), &[0, 2]);
        assert_eq!(i.elements(), &[0, 2]);
        let id = ModuleHom::identity(&m);
        assert!(id.kernel().is_zero());
        assert_eq!(id.image().len(), 4);
        let z = ModuleHom::zero(&m, &m);
        assert_eq!(z.kernel().len(), 4);
        assert!(z.image().is_zero());
    }

    #[test]
    fn end_presentation_of_z4() {
        let r = build_ring(&RingSpec::Cyclic(4)).unwrap();
        let m = regular_module(&r);
        let e = end_ring(&m).unwrap();
        let p = e.presentation().unwrap();
        assert_eq!(p.ring.size(), 4);
        assert!(p.ring.is_commutative());
        assert_eq!(e.right_ideals().unwrap().len(), 3);
    }

    #[test]
    fn isomorphism_rejects_different_groups() {
        let r = build_ring(&RingSpec::Cyclic(4)).unwrap();
        let a = zmod(&r, &[2, 2]);
        let b = zmod(&r, &[4]);
        assert!(!is_isomorphic(&a, &b).unwrap());
        assert!(is_isomorphic(&a, &a).unwrap());
    }

    #[test]
    fn invalid_matrix_rejected() {
        let r = build_ring(&RingSpec::Cyclic(4)).unwrap();
        let z2 = zmod(&r, &[2]);
        let z4 = zmod(&r, &[4]);
        assert!(ModuleHom::new(z2.clone(), z4.clone(), &[vec![1]]).is_err());
        assert!(ModuleHom::new(z2, z4, &[vec![2]]).is_ok());
    }
}
