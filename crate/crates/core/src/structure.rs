//! Direct summands, supplements, lifting, character duality, projective
//! covers, injective hulls and the small-module predicate.

use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::hom::{end_ring, find_hom, hom_count, ModuleHom};
use crate::lattice::{idempotents, jacobson, radical, submodules};
use crate::module::{direct_sum, regular_module, sub_as_module, zero_module, FiniteModule, Module};
use crate::ring::FiniteRing;
use crate::sections::Sections;
use crate::submodule::Submodule;

/// The character module `Hom(M, Q/Z)` as a right module over the opposite
/// ring. Basis character `j` sends basis vector `l` to `δ_jl / m_j`.
pub fn character_dual(m: &Module) -> Result<Module> {
    let ord = m.orders();
    let t = ord.len();
    let action = m
        .action()
        .iter()
        .map(|a| {
            (0..t)
                .map(|j| {
                    (0..t)
                        .map(|l| {
                            let v = u64::from(a[l][j]) * u64::from(ord[l]) / u64::from(ord[j]);
                            (v % u64::from(ord[l])) as u32
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    FiniteModule::new(m.ring().opposite(), ord.to_vec(), action)
}

/// Images of the dual map `D(N) → D(M)` of `f: M → N`, on the dual bases.
fn dual_images(f: &ModuleHom, dual_source: &Module) -> Vec<u32> {
    let ms = f.source().orders();
    let nt = f.target().orders();
    let mat = f.matrix();
    (0..nt.len())
        .map(|k| {
            let row: Vec<u32> = (0..ms.len())
                .map(|j| {
                    let v = u64::from(mat[j][k]) * u64::from(ms[j]) / u64::from(nt[k]);
                    (v % u64::from(ms[j])) as u32
                })
                .collect();
            dual_source.encode(&row)
        })
        .collect()
}

/// `D(f): D(N) → D(M)`, precomposition with `f`.
pub fn dual_hom(f: &ModuleHom) -> Result<ModuleHom> {
    let ds = character_dual(f.source())?;
    let dt = character_dual(f.target())?;
    let images = dual_images(f, &ds);
    ModuleHom::try_from_images(dt, ds, images)
}

/// One primitive idempotent for each isomorphism class of simple modules.
pub fn basic_idempotents(ring: &Arc<FiniteRing>) -> Result<Vec<u32>> {
    ring.cache
        .basic_idempotents
        .get_or_init(|| {
            let idem = idempotents(ring);
            let j = jacobson(ring)?;
            let primitive: Vec<u32> = idem
                .iter()
                .copied()
                .filter(|&e| {
                    e != 0
                        && !idem.iter().any(|&f| {
                            f != 0 && f != e && ring.mul(e, f) == f && ring.mul(f, e) == f
                        })
                })
                .collect();
            let equivalent = |e: u32, f: u32| {
                ring.elements()
                    .any(|r| !j.contains(ring.mul(ring.mul(e, r), f)))
            };
            let mut reps: Vec<u32> = Vec::new();
            for e in primitive {
                if !reps.iter().any(|&r| equivalent(r, e)) {
                    reps.push(e);
                }
            }
            if reps.is_empty() && ring.size() > 1 {
                return Err(AlgebraError::IdempotentSearchExceeded);
            }
            Ok(reps)
        })
        .clone()
}

/// `eR` as a module, with the ring codes of its basis.
pub fn principal_projective(ring: &Arc<FiniteRing>, e: u32) -> Result<(Module, Vec<u32>)> {
    if let Some(v) = ring.cache.projectives.lock().expect("cache lock").get(&e) {
        return Ok(v.clone());
    }
    let reg = regular_module(ring);
    let emb = sub_as_module(&reg, &reg.span(&[e]))?;
    let v = (emb.module.clone(), emb.inclusion.images().to_vec());
    ring.cache
        .projectives
        .lock()
        .expect("cache lock")
        .insert(e, v.clone());
    Ok(v)
}

#[derive(Debug, Clone)]
pub struct ProjectiveCover {
    pub module: Module,
    /// Surjection with small kernel.
    pub map: ModuleHom,
    /// Idempotent and generator for each indecomposable summand `eR`.
    pub tops: Vec<(u32, u32)>,
}

/// Projective cover `⊕ e_i R → M`, `e_i r ↦ x_i r`, with the `x_i` lifting
/// a basis of the top `M/MJ`.
pub fn projective_cover(m: &Module) -> Result<ProjectiveCover> {
    let ring = m.ring();
    let mut y = radical(m)?;
    let basics = basic_idempotents(ring)?;
    let mut tops = Vec::new();
    for &e in &basics {
        while y.len() < m.size() {
            let Some(v) = m.elements().find(|&v| !y.contains(v) && m.act(v, e) == v) else {
                break;
            };
            y = m.extend(&y, &[v])?;
            tops.push((e, v));
        }
    }
    debug_assert_eq!(y.len(), m.size());
    let mut module = zero_module(ring);
    let mut images = Vec::new();
    for &(e, v) in &tops {
        let (pe, basis) = principal_projective(ring, e)?;
        module = if module.size() == 1 {
            pe
        } else {
            direct_sum(&module, &pe)?.module
        };
        images.extend(basis.iter().map(|&u| m.act(v, u)));
    }
    let map = ModuleHom::from_images(module.clone(), m.clone(), images);
    debug_assert!(map.validate().is_ok() && map.is_surjective());
    Ok(ProjectiveCover { module, map, tops })
}

#[derive(Debug, Clone)]
pub struct Hull {
    pub module: Module,
    /// Essential embedding of the original module.
    pub embedding: ModuleHom,
}

/// Injective hull `E(M) = D(P(D(M)))` with the embedding `D(π)`.
pub fn injective_hull(m: &Module) -> Result<Hull> {
    m.cache
        .hull
        .get_or_init(|| {
            let d = character_dual(m)?;
            let cover = projective_cover(&d)?;
            let e = character_dual(&cover.module)?;
            // D(D(M)) has the data of M, so the dual of π starts at M itself
            let images = dual_images(&cover.map, &e);
            let embedding = ModuleHom::try_from_images(m.clone(), e.clone(), images)?;
            Ok(Hull {
                module: e,
                embedding,
            })
        })
        .clone()
}

/// `M` is small in its injective hull.
pub fn is_small_module(m: &Module) -> Result<bool> {
    let ring = m.ring();
    if let Some(&v) = ring
        .cache
        .small_modules
        .lock()
        .expect("cache lock")
        .get(m.fingerprint())
    {
        return Ok(v);
    }
    let v = if m.size() == 1 {
        true
    } else {
        let hull = injective_hull(m)?;
        hull.embedding.image().is_subset(&radical(&hull.module)?)
    };
    ring.cache
        .small_modules
        .lock()
        .expect("cache lock")
        .insert(*m.fingerprint(), v);
    Ok(v)
}

/// A right ideal of `R` (lattice node of `R_R`) as a module, with the ring
/// codes of its basis.
pub fn right_ideal_module(ring: &Arc<FiniteRing>, node: usize) -> Result<(Module, Vec<u32>)> {
    if let Some(v) = ring
        .cache
        .right_ideal_modules
        .lock()
        .expect("cache lock")
        .get(&node)
    {
        return Ok(v.clone());
    }
    let reg = regular_module(ring);
    let lat = submodules(&reg)?;
    let emb = sub_as_module(&reg, lat.node(node))?;
    let v = (emb.module.clone(), emb.inclusion.images().to_vec());
    ring.cache
        .right_ideal_modules
        .lock()
        .expect("cache lock")
        .insert(node, v.clone());
    Ok(v)
}

/// A map from a right ideal that does not extend to `R`.
#[derive(Debug, Clone)]
pub struct BaerWitness {
    pub ideal: Submodule,
    pub hom: ModuleHom,
}

/// Baer test: restriction `Hom(R, M) → Hom(I, M)` is onto for every right
/// ideal `I`, checked by `|Hom(I, M)|·|ann_M(I)| = |M|`.
pub fn baer_witness(m: &Module) -> Result<Option<BaerWitness>> {
    let ring = m.ring();
    let reg = regular_module(ring);
    let lat = submodules(&reg)?;
    for node in 0..lat.top() {
        let (im, basis) = right_ideal_module(ring, node)?;
        let count = hom_count(&im, m)?;
        let gens = lat.node(node).additive_generators();
        let ann = m
            .elements()
            .filter(|&x| gens.iter().all(|&r| m.act(x, r) == 0))
            .count();
        if count * ann != m.size() {
            let restricted: HashSet<Vec<u32>> = m
                .elements()
                .map(|x| basis.iter().map(|&u| m.act(x, u)).collect())
                .collect();
            let hom = find_hom(&im, m, |h| !restricted.contains(h.images()))?
                .expect("a surplus hom exists when the counts differ");
            return Ok(Some(BaerWitness {
                ideal: lat.node(node).clone(),
                hom,
            }));
        }
    }
    Ok(None)
}

pub fn is_injective(m: &Module) -> Result<bool> {
    Ok(baer_witness(m)?.is_none())
}

/// A complement of `A` in `M`, if `A` is a direct summand.
pub fn is_direct_summand(m: &Module, a: &Submodule) -> Result<Option<Submodule>> {
    let sec = Sections::new(m)?;
    let lat = sec.lattice();
    let i = lat.locate(a)?;
    Ok(sec.complement(i, 0, lat.top()).map(|b| lat.node(b).clone()))
}

/// An idempotent endomorphism with image `A`, found by scanning `End(M)`.
pub fn summand_idempotent(m: &Module, a: &Submodule) -> Result<Option<ModuleHom>> {
    if a.parent_id() != m.id() {
        return Err(AlgebraError::ParentMismatch);
    }
    let end = end_ring(m)?;
    Ok(end
        .idempotents()
        .into_iter()
        .map(|i| end.get(i))
        .find(|e| e.image() == *a)
        .cloned())
}

/// `M = A ⊕ B` with the projections onto the parts.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub parts: Vec<Submodule>,
    pub witness: Option<Vec<ModuleHom>>,
}

/// Two-part decomposition `M = A ⊕ B` with orthogonal idempotents.
pub fn decomposition(m: &Module, a: &Submodule, b: &Submodule) -> Result<Decomposition> {
    let zero = m.intersect(a, b)?;
    if !zero.is_zero() || m.sum(a, b)?.len() != m.size() {
        return Err(AlgebraError::NotSubmodule);
    }
    let project = |onto: &Submodule, along: &Submodule| -> ModuleHom {
        let images = (0..m.rank())
            .map(|j| {
                let u = m.unit(j);
                *onto
                    .elements()
                    .iter()
                    .find(|&&x| along.contains(m.sub(u, x)))
                    .expect("unique component")
            })
            .collect();
        ModuleHom::from_images(m.clone(), m.clone(), images)
    };
    let ea = project(a, b);
    let eb = project(b, a);
    Ok(Decomposition {
        parts: vec![a.clone(), b.clone()],
        witness: Some(vec![ea, eb]),
    })
}

/// `M = X + Y` with `X ∩ Y ≪ X`.
pub fn is_supplement(m: &Module, x: &Submodule, y: &Submodule) -> Result<bool> {
    let sec = Sections::new(m)?;
    let lat = sec.lattice();
    Ok(sec.supplement(lat.locate(x)?, lat.locate(y)?, 0, lat.top()))
}

pub fn supplements_of(m: &Module, y: &Submodule) -> Result<Vec<Submodule>> {
    let sec = Sections::new(m)?;
    let lat = sec.lattice();
    let yi = lat.locate(y)?;
    Ok((0..lat.len())
        .filter(|&x| sec.supplement(x, yi, 0, lat.top()))
        .map(|x| lat.node(x).clone())
        .collect())
}

pub fn is_amply_supplemented(m: &Module) -> Result<bool> {
    let sec = Sections::new(m)?;
    Ok(sec.amply_supplemented(0, sec.top()))
}

pub fn is_coclosed(m: &Module, c: &Submodule) -> Result<bool> {
    let sec = Sections::new(m)?;
    let ci = sec.lattice().locate(c)?;
    Ok(sec.coclosed(ci, 0, sec.top()))
}

/// Every submodule `A` contains a summand `N` with `A/N ≪ M/N`.
pub fn is_lifting(m: &Module) -> Result<bool> {
    let sec = Sections::new(m)?;
    Ok(sec.lifting(0, sec.top()))
}

/// Amply supplemented and every coclosed submodule is a summand.
pub fn is_lifting_by_coclosed(m: &Module) -> Result<bool> {
    let sec = Sections::new(m)?;
    let top = sec.top();
    Ok(sec.amply_supplemented(0, top)
        && (0..=top).all(|c| !sec.coclosed(c, 0, top) || sec.is_summand(c, 0, top)))
}
