//! The t-notions built on `Z̄²(M)`: t-small, t-coclosed, t-lifting, t-dual
//! Baer and the K-type properties, each with the alternative
//! characterisations used for cross-checking.

use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Result};
use crate::hom::{end_ring, EndIdeal, EndRing};
use crate::module::{sub_as_module, Module};
use crate::sections::Sections;
use crate::submodule::Submodule;

/// Outcome of a predicate that may exceed configured limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    True,
    False,
    Unevaluated,
}

impl Status {
    /// Maps limit breaches to `Unevaluated` and passes other errors through.
    pub fn from_result(r: Result<bool>) -> Result<Status> {
        match r {
            Ok(true) => Ok(Status::True),
            Ok(false) => Ok(Status::False),
            Err(AlgebraError::SizeLimitExceeded { .. }) => Ok(Status::Unevaluated),
            Err(e) => Err(e),
        }
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Status::True => Some(true),
            Status::False => Some(false),
            Status::Unevaluated => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EndoKind {
    RightIdeal,
    DSet,
    TSet,
    Arbitrary,
}

/// A set of endomorphisms, by index into the endomorphism ring.
#[derive(Debug, Clone)]
pub struct EndoSubset {
    pub end_ring: Arc<EndRing>,
    pub members: Vec<usize>,
    pub kind: EndoKind,
}

impl EndoSubset {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Closed under addition and under composition `φ ∘ s` for all `s`.
    pub fn is_right_ideal(&self) -> bool {
        let e = &self.end_ring;
        let set: std::collections::HashSet<usize> = self.members.iter().copied().collect();
        self.members.iter().all(|&a| {
            self.members.iter().all(|&b| set.contains(&e.add(a, b)))
                && (0..e.len()).all(|s| set.contains(&e.mul(a, s)))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KClass {
    pub k: bool,
    pub t_k: bool,
    pub strongly_t_k: bool,
}

struct EndData {
    end: Arc<EndRing>,
    /// `Im φ` as a lattice node.
    image: Vec<usize>,
    /// `φ(Z̄²(M))` as a lattice node.
    z2_image: Vec<usize>,
    ideals: OnceLock<Result<Vec<EndIdeal>>>,
}

/// Everything needed to evaluate the predicates on one module, computed
/// lazily and shared between them.
pub struct Analysis {
    sec: Sections,
    z: usize,
    z2: usize,
    end: OnceLock<Result<EndData>>,
}

impl Analysis {
    pub fn new(m: &Module) -> Result<Self> {
        let sec = Sections::new(m)?;
        let top = sec.top();
        let z = sec.zbar(0, top)?;
        let z2 = sec.zbar(0, z)?;
        Ok(Analysis {
            sec,
            z,
            z2,
            end: OnceLock::new(),
        })
    }

    pub fn sections(&self) -> &Sections {
        &self.sec
    }

    pub fn module(&self) -> &Module {
        self.sec.module()
    }

    pub fn top(&self) -> usize {
        self.sec.top()
    }

    pub fn zbar(&self) -> usize {
        self.z
    }

    pub fn zbar2(&self) -> usize {
        self.z2
    }

    pub fn node(&self, i: usize) -> &Submodule {
        self.sec.lattice().node(i)
    }

    pub fn nodes(&self) -> std::ops::Range<usize> {
        0..self.sec.lattice().len()
    }

    pub fn locate(&self, a: &Submodule) -> Result<usize> {
        self.sec.lattice().locate(a)
    }

    fn join(&self, a: usize, b: usize) -> usize {
        self.sec.lattice().join(a, b)
    }

    fn meet(&self, a: usize, b: usize) -> usize {
        self.sec.lattice().meet(a, b)
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        self.sec.lattice().leq(a, b)
    }

    fn end_data(&self) -> Result<&EndData> {
        self.end
            .get_or_init(|| {
                let end = end_ring(self.module())?;
                let lat = self.sec.lattice();
                let z2 = self.node(self.z2);
                let mut image = Vec::with_capacity(end.len());
                let mut z2_image = Vec::with_capacity(end.len());
                for phi in end.elements() {
                    image.push(lat.locate(&phi.image())?);
                    z2_image.push(lat.locate(&phi.image_of(z2)?)?);
                }
                Ok(EndData {
                    end,
                    image,
                    z2_image,
                    ideals: OnceLock::new(),
                })
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn end_ring(&self) -> Result<Arc<EndRing>> {
        Ok(self.end_data()?.end.clone())
    }

    /// Lattice node of `φ(A)`.
    pub fn image_node(&self, phi: usize, a: usize) -> Result<usize> {
        let d = self.end_data()?;
        let img = d.end.get(phi).image_of(self.node(a))?;
        self.locate(&img)
    }

    fn ideals(&self) -> Result<&[EndIdeal]> {
        let d = self.end_data()?;
        d.ideals
            .get_or_init(|| d.end.right_ideals())
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    /// Distinct nodes of the form `φ(Z̄²(M))`.
    pub fn z2_images(&self) -> Result<Vec<usize>> {
        let mut v = self.end_data()?.z2_image.clone();
        v.sort_unstable();
        v.dedup();
        Ok(v)
    }

    /// Distinct nodes of the form `Im φ`.
    pub fn images(&self) -> Result<Vec<usize>> {
        let mut v = self.end_data()?.image.clone();
        v.sort_unstable();
        v.dedup();
        Ok(v)
    }

    /// Submodules invariant under every endomorphism.
    pub fn fully_invariant(&self) -> Result<Vec<usize>> {
        let n = self.end_data()?.end.len();
        let mut out = Vec::new();
        for a in self.nodes() {
            let mut inv = true;
            for phi in 0..n {
                if !self.leq(self.image_node(phi, a)?, a) {
                    inv = false;
                    break;
                }
            }
            if inv {
                out.push(a);
            }
        }
        Ok(out)
    }

    // ---- basic structure ----

    pub fn small(&self, a: usize) -> bool {
        self.sec.small_in(a, 0, self.top())
    }

    pub fn summand(&self, a: usize) -> bool {
        self.sec.is_summand(a, 0, self.top())
    }

    pub fn coclosed(&self, c: usize) -> bool {
        self.sec.coclosed(c, 0, self.top())
    }

    pub fn lifting(&self) -> bool {
        self.sec.lifting(0, self.top())
    }

    pub fn lifting_by_coclosed(&self) -> bool {
        self.amply_supplemented() && self.nodes().all(|c| !self.coclosed(c) || self.summand(c))
    }

    pub fn amply_supplemented(&self) -> bool {
        self.sec.amply_supplemented(0, self.top())
    }

    pub fn noncosingular(&self) -> bool {
        self.z == self.top()
    }

    pub fn semisimple(&self) -> bool {
        self.sec.semisimple(0, self.top())
    }

    /// Every cyclic submodule is a summand.
    pub fn regular(&self) -> bool {
        self.sec
            .lattice()
            .cyclic_nodes()
            .iter()
            .all(|&c| self.summand(c))
    }

    /// Summands inside `Z̄²(M)` are closed under sums.
    pub fn sssp_in_zbar2(&self) -> bool {
        let d: Vec<usize> = self
            .sec
            .summands(0, self.top())
            .into_iter()
            .filter(|&a| self.leq(a, self.z2))
            .collect();
        d.iter()
            .all(|&a| d.iter().all(|&b| self.summand(self.join(a, b))))
    }

    // ---- t-small ----

    pub fn tsmall(&self, a: usize) -> Result<bool> {
        self.sec.tsmall(a, 0, self.top())
    }

    /// `[definition, A∩Z̄² ≪ Z̄², A∩Z̄² ≪ M, Z̄²(A) = 0]`.
    pub fn tsmall_routes(&self, a: usize) -> Result<[bool; 4]> {
        let cut = self.meet(a, self.z2);
        Ok([
            self.tsmall(a)?,
            self.sec.small_in(cut, 0, self.z2),
            self.small(cut),
            self.sec.zbar2(0, a)? == 0,
        ])
    }

    // ---- t-coclosed ----

    pub fn tcoclosed(&self, c: usize) -> Result<bool> {
        self.sec.tcoclosed(c, 0, self.top())
    }

    /// Some `S` makes `C` minimal with `Z̄² ⊆ C + S`.
    pub fn minimal_for_zbar2(&self, c: usize) -> bool {
        let z2 = self.z2;
        let below: Vec<usize> = self
            .sec
            .interval(0, c)
            .into_iter()
            .filter(|&x| x != c)
            .collect();
        self.nodes().any(|s| {
            self.leq(z2, self.join(c, s)) && below.iter().all(|&x| !self.leq(z2, self.join(x, s)))
        })
    }

    /// `[minimality, definition, coclosed in Z̄², coclosed in M inside Z̄², noncosingular]`.
    pub fn tcoclosed_routes(&self, c: usize) -> Result<[bool; 5]> {
        let inside = self.leq(c, self.z2);
        Ok([
            self.minimal_for_zbar2(c),
            self.tcoclosed(c)?,
            inside && self.sec.coclosed(c, 0, self.z2),
            inside && self.coclosed(c),
            self.sec.noncosingular(0, c)?,
        ])
    }

    // ---- t-lifting ----

    pub fn tlifting(&self) -> Result<bool> {
        self.sec.tlifting(0, self.top())
    }

    /// The seven characterisations of t-lifting, in order.
    pub fn tlifting_routes(&self) -> Result<[bool; 7]> {
        let top = self.top();
        let summands = self.sec.summands(0, top);
        let is_summand = |x: usize| summands.binary_search(&x).is_ok();
        let r1 = self.tlifting()?;
        let mut r2 = true;
        for a in self.nodes() {
            let mut found = false;
            'outer: for &n in summands.iter().filter(|&&n| self.leq(n, a)) {
                for n2 in self.sec.interval(0, a) {
                    if self.join(n, n2) == a && self.meet(n, n2) == 0 && self.tsmall(n2)? {
                        found = true;
                        break 'outer;
                    }
                }
            }
            if !found {
                r2 = false;
                break;
            }
        }
        let mut r3 = true;
        for c in self.nodes() {
            if self.tcoclosed(c)? && !is_summand(c) {
                r3 = false;
                break;
            }
        }
        let mut r4 = true;
        let mut r5 = true;
        for a in self.nodes() {
            let ok = is_summand(self.sec.zbar2(0, a)?);
            r4 &= ok;
            if self.coclosed(a) {
                r5 &= ok;
            }
        }
        let r6 = is_summand(self.z2) && self.sec.lifting(0, self.z2);
        let r7 = self.sec.interval(0, self.z2).into_iter().all(|a| {
            summands
                .iter()
                .any(|&n| self.leq(n, a) && self.sec.small_in(a, n, top))
        });
        Ok([r1, r2, r3, r4, r5, r6, r7])
    }

    // ---- endomorphism subsets ----

    /// `D_S(N)`: endomorphisms with image in `N`.
    pub fn d_set(&self, n: usize) -> Result<EndoSubset> {
        let d = self.end_data()?;
        Ok(EndoSubset {
            end_ring: d.end.clone(),
            members: (0..d.end.len())
                .filter(|&p| self.leq(d.image[p], n))
                .collect(),
            kind: EndoKind::DSet,
        })
    }

    /// `T_S(N)`: endomorphisms mapping `Z̄²(M)` into `N`.
    pub fn t_set(&self, n: usize) -> Result<EndoSubset> {
        let d = self.end_data()?;
        Ok(EndoSubset {
            end_ring: d.end.clone(),
            members: (0..d.end.len())
                .filter(|&p| self.leq(d.z2_image[p], n))
                .collect(),
            kind: EndoKind::TSet,
        })
    }

    /// `T_S(N) = T_S(0)`.
    pub fn t_premise(&self, n: usize) -> Result<bool> {
        Ok(self
            .z2_images()?
            .into_iter()
            .all(|v| v == 0 || !self.leq(v, n)))
    }

    /// `D_S(N) = 0`.
    pub fn d_premise(&self, n: usize) -> Result<bool> {
        Ok(self
            .images()?
            .into_iter()
            .all(|v| v == 0 || !self.leq(v, n)))
    }

    /// `T_S(C)(Z̄²(M)) = Σ_{φ ∈ T_S(C)} φ(Z̄²(M))`.
    pub fn t_span(&self, c: usize) -> Result<usize> {
        Ok(self
            .z2_images()?
            .into_iter()
            .filter(|&v| self.leq(v, c))
            .fold(0, |acc, v| self.join(acc, v)))
    }

    // ---- dual Baer ----

    /// Right ideals of the endomorphism ring.
    pub fn right_ideals(&self) -> Result<&[EndIdeal]> {
        self.ideals()
    }

    /// For each right ideal `I`: `(Σ_{φ∈I} Im φ, I(Z̄²(M)))` as lattice nodes.
    pub fn ideal_images(&self) -> Result<Vec<(usize, usize)>> {
        let d = self.end_data()?;
        Ok(self
            .ideals()?
            .iter()
            .map(|ideal| {
                ideal.generators.iter().fold((0, 0), |(a, b), &g| {
                    (self.join(a, d.image[g]), self.join(b, d.z2_image[g]))
                })
            })
            .collect())
    }

    /// A right ideal `I` with `Σ_{φ∈I} Im φ` not a summand.
    pub fn dual_baer_witness(&self) -> Result<Option<EndIdeal>> {
        let sums = self.ideal_images()?;
        let bad = sums.iter().position(|&(s, _)| !self.summand(s));
        bad.map(|i| self.ideals().map(|v| v[i].clone())).transpose()
    }

    pub fn dual_baer(&self) -> Result<bool> {
        Ok(self.dual_baer_witness()?.is_none())
    }

    /// A right ideal `I` with `I(Z̄²(M))` not a summand.
    pub fn tdual_baer_witness(&self) -> Result<Option<EndIdeal>> {
        let sums = self.ideal_images()?;
        let bad = sums.iter().position(|&(_, s)| !self.summand(s));
        bad.map(|i| self.ideals().map(|v| v[i].clone())).transpose()
    }

    pub fn tdual_baer(&self) -> Result<bool> {
        Ok(self.tdual_baer_witness()?.is_none())
    }

    /// The module `Z̄²(M)` on its own.
    pub fn zbar2_module(&self) -> Result<Module> {
        Ok(sub_as_module(self.module(), self.node(self.z2))?.module)
    }

    /// Join-closure of the single images `φ(Z̄²(M))`.
    pub fn z2_image_sums(&self) -> Result<Vec<usize>> {
        let mut set = self.z2_images()?;
        let mut i = 0;
        while i < set.len() {
            let a = set[i];
            for j in 0..=i {
                let s = self.join(a, set[j]);
                if !set.contains(&s) {
                    set.push(s);
                }
            }
            i += 1;
        }
        set.sort_unstable();
        Ok(set)
    }

    /// The four characterisations of t-dual Baer, in order.
    pub fn tdual_baer_routes(&self) -> Result<[bool; 4]> {
        let r1 = self.tdual_baer()?;
        let r2 = self.summand(self.z2) && Analysis::new(&self.zbar2_module()?)?.dual_baer()?;
        let r3 = self.sssp_in_zbar2() && self.z2_images()?.into_iter().all(|v| self.summand(v));
        let r4 = self.z2_image_sums()?.into_iter().all(|v| self.summand(v));
        Ok([r1, r2, r3, r4])
    }

    // ---- K-type properties ----

    pub fn k_class(&self) -> Result<KClass> {
        let mut k = true;
        let mut t_k = true;
        let mut strongly = true;
        for n in self.nodes() {
            if k && self.d_premise(n)? && !self.small(n) {
                k = false;
            }
            if self.t_premise(n)? {
                if t_k && !self.tsmall(n)? {
                    t_k = false;
                }
                if strongly && !self.small(n) {
                    strongly = false;
                }
            }
        }
        Ok(KClass {
            k,
            t_k,
            strongly_t_k: strongly,
        })
    }

    /// t-K restricted to `N ⊆ Z̄²(M)` with smallness as conclusion.
    pub fn t_k_inside_zbar2(&self) -> Result<bool> {
        for n in self.sec.interval(0, self.z2) {
            if self.t_premise(n)? && !self.small(n) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `[t-lifting, t-dual Baer ∧ t-K, t-dual Baer ∧ C = T_S(C)(Z̄²), t-dual Baer ∧ (T_S(C)=T_S(0) ⇒ C=0)]`
    /// with `C` ranging over t-coclosed submodules.
    pub fn tlifting_endo_routes(&self) -> Result<[bool; 4]> {
        let tdb = self.tdual_baer()?;
        let kc = self.k_class()?;
        let mut span_ok = true;
        let mut premise_ok = true;
        for c in self.nodes() {
            if !self.tcoclosed(c)? {
                continue;
            }
            span_ok &= self.t_span(c)? == c;
            if self.t_premise(c)? && c != 0 {
                premise_ok = false;
            }
        }
        Ok([
            self.tlifting()?,
            tdb && kc.t_k,
            tdb && span_ok,
            tdb && premise_ok,
        ])
    }

    /// `[noncosingular lifting, t-dual Baer ∧ strongly t-K, …]` with `C`
    /// ranging over coclosed submodules.
    pub fn noncosingular_lifting_routes(&self) -> Result<[bool; 4]> {
        let tdb = self.tdual_baer()?;
        let kc = self.k_class()?;
        let mut span_ok = true;
        let mut premise_ok = true;
        for c in self.nodes() {
            if !self.coclosed(c) {
                continue;
            }
            span_ok &= self.t_span(c)? == c;
            if self.t_premise(c)? && c != 0 {
                premise_ok = false;
            }
        }
        Ok([
            self.noncosingular() && self.lifting(),
            tdb && kc.strongly_t_k,
            tdb && span_ok,
            tdb && premise_ok,
        ])
    }
}

pub fn is_tsmall(m: &Module, a: &Submodule) -> Result<bool> {
    let an = Analysis::new(m)?;
    an.tsmall(an.locate(a)?)
}

pub fn is_tcoclosed(m: &Module, c: &Submodule) -> Result<bool> {
    let an = Analysis::new(m)?;
    an.tcoclosed(an.locate(c)?)
}

pub fn is_tlifting(m: &Module) -> Result<bool> {
    Analysis::new(m)?.tlifting()
}

pub fn d_set(m: &Module, n: &Submodule) -> Result<EndoSubset> {
    let an = Analysis::new(m)?;
    an.d_set(an.locate(n)?)
}

pub fn t_set(m: &Module, n: &Submodule) -> Result<EndoSubset> {
    let an = Analysis::new(m)?;
    an.t_set(an.locate(n)?)
}

pub fn is_dual_baer(m: &Module) -> Result<Status> {
    Status::from_result(Analysis::new(m)?.dual_baer())
}

pub fn is_tdual_baer(m: &Module) -> Result<Status> {
    Status::from_result(Analysis::new(m)?.tdual_baer())
}

pub fn has_sssp_in_zbar2(m: &Module) -> Result<bool> {
    Ok(Analysis::new(m)?.sssp_in_zbar2())
}

pub fn is_regular(m: &Module) -> Result<bool> {
    Ok(Analysis::new(m)?.regular())
}

pub fn is_semisimple(m: &Module) -> Result<bool> {
    Ok(Analysis::new(m)?.semisimple())
}

pub fn k_module_class(m: &Module) -> Result<KClass> {
    Analysis::new(m)?.k_class()
}
