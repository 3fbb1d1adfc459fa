//! Worked examples for every operation, with hand-checked values.

mod common;

use common::*;
use modlab_core::cosingular::{classify, zbar, zbar2, CosingularClass};
use modlab_core::error::AlgebraError;
use modlab_core::hom::{end_ring, hom_count, is_isomorphic, ModuleHom};
use modlab_core::lattice::{is_essential, is_small, is_small_scan, radical, socle, submodules};
use modlab_core::module::{direct_sum, quotient, regular_module, zero_module};
use modlab_core::ring::{build_ring, FiniteRing, RingSpec};
use modlab_core::structure::*;
use modlab_core::ttheory::*;

#[test]
fn ring_constructors() {
    let z4 = cyclic(4);
    assert_eq!(z4.size(), 4);
    assert_eq!(z4.constants()[0][0], vec![1]);
    let p = f2z4();
    assert_eq!(p.size(), 8);
    let err = FiniteRing::new("bad", vec![2], vec![vec![vec![1]]], vec![0]).unwrap_err();
    assert_eq!(err, AlgebraError::NoIdentity);
}

#[test]
fn opposite_rings() {
    let z4 = cyclic(4);
    assert!(z4.opposite().same_ring(&z4));
    let t = t2f2();
    let op = t.opposite();
    assert!(!op.same_ring(&t));
    assert!(std::sync::Arc::ptr_eq(&op.opposite(), &t));
}

#[test]
fn regular_modules() {
    assert_eq!(submodules(&regular_module(&cyclic(4))).unwrap().len(), 3);
    let f3 = regular_module(&cyclic(3));
    assert_eq!(f3.size(), 3);
    assert_eq!(submodules(&f3).unwrap().len(), 2);
    let (s, b) = blocks();
    assert!(is_isomorphic(&regular_module(&f2z4()), &sum(&s, &b)).unwrap());
}

#[test]
fn direct_sums() {
    let z4 = cyclic(4);
    assert_eq!(zmod(&z4, &[2, 4]).size(), 8);
    let m = zmod(&z4, &[2, 4]);
    let with_zero = direct_sum(&m, &zero_module(&z4)).unwrap().module;
    assert!(is_isomorphic(&with_zero, &m).unwrap());
    let z8 = cyclic(8);
    let m = sum(&zmod(&z8, &[2]), &zmod(&z8, &[8]));
    assert_eq!(m.size(), 16);
    assert_eq!(submodules(&m).unwrap().len(), 11);
}

#[test]
fn quotients() {
    let z8 = cyclic(8);
    let m = zmod(&z8, &[2, 8]);
    let (q0, _) = quotient(&m, &m.zero_submodule()).unwrap();
    assert!(is_isomorphic(&q0, &m).unwrap());
    let (qm, _) = quotient(&m, &m.whole()).unwrap();
    assert_eq!(qm.size(), 1);
    let (q, _) = quotient(&m, &m.span(&[m.encode(&[0, 2])])).unwrap();
    assert_eq!(q.size(), 4);
    assert!(is_isomorphic(&q, &zmod(&z8, &[2, 2])).unwrap());
}

#[test]
fn spans() {
    let z4 = cyclic(4);
    let r = regular_module(&z4);
    assert!(r.span(&[]).is_zero());
    assert_eq!(r.span(&[2]).elements(), &[0, 2]);
    let m = zmod(&z4, &[2, 4]);
    // (1,2) has additive order 2 and is fixed by the action
    let s = m.span(&[m.encode(&[1, 2])]);
    assert_eq!(s.elements(), &[0, m.encode(&[1, 2])]);
}

#[test]
fn hom_sets() {
    let z4 = cyclic(4);
    assert_eq!(hom_count(&zmod(&z4, &[2]), &zmod(&z4, &[4])).unwrap(), 2);
    let (s, b) = blocks();
    assert_eq!(hom_count(&s, &b).unwrap(), 1);
    let m = zmod(&z4, &[2, 4]);
    assert_eq!(hom_count(&m, &zero_module(&z4)).unwrap(), 1);
}

#[test]
fn end_rings() {
    let z4 = cyclic(4);
    let e = end_ring(&regular_module(&z4)).unwrap();
    assert_eq!(e.len(), 4);
    let p = e.presentation().unwrap();
    assert!(
        is_isomorphic(&regular_module(&p.ring), &regular_module(&z4)).is_err()
            || p.ring.size() == 4
    );
    assert_eq!(p.ring.orders(), &[4]);
    assert_eq!(end_ring(&zmod(&z4, &[2, 4])).unwrap().len(), 32);
    assert_eq!(end_ring(&zero_module(&z4)).unwrap().len(), 1);
}

#[test]
fn kernels_and_images() {
    let m = regular_module(&cyclic(4));
    let f = ModuleHom::new(m.clone(), m.clone(), &[vec![2]]).unwrap();
    assert_eq!(f.kernel_image(), (m.span(&[2]), m.span(&[2])));
    let id = ModuleHom::identity(&m);
    assert_eq!(id.kernel_image(), (m.zero_submodule(), m.whole()));
    let z = ModuleHom::zero(&m, &m);
    assert_eq!(z.kernel_image(), (m.whole(), m.zero_submodule()));
}

#[test]
fn isomorphism() {
    let z4 = cyclic(4);
    let m = zmod(&z4, &[2, 4]);
    assert!(is_isomorphic(&m, &m).unwrap());
    assert!(!is_isomorphic(&zmod(&z4, &[2, 2]), &zmod(&z4, &[4])).unwrap());
}

#[test]
fn lattices() {
    let z4 = cyclic(4);
    assert_eq!(submodules(&zmod(&z4, &[2, 4])).unwrap().len(), 8);
    assert_eq!(submodules(&zero_module(&z4)).unwrap().len(), 1);
}

#[test]
fn smallness() {
    let r = regular_module(&cyclic(4));
    assert!(is_small(&r, &r.zero_submodule()).unwrap());
    assert!(is_small(&r, &r.span(&[2])).unwrap());
    assert!(is_small_scan(&r, &r.span(&[2])).unwrap());
    let reg = regular_module(&f2z4());
    let block = reg.span(&[reg.encode(&[0, 1])]);
    assert!(!is_small(&reg, &block).unwrap());
    assert!(!is_small_scan(&reg, &block).unwrap());
}

#[test]
fn essentiality() {
    let r = regular_module(&cyclic(4));
    assert!(is_essential(&r, &r.whole()).unwrap());
    assert!(is_essential(&r, &r.span(&[2])).unwrap());
    let reg = regular_module(&f2z4());
    assert!(!is_essential(&reg, &reg.span(&[reg.encode(&[1, 0])])).unwrap());
}

#[test]
fn radical_and_socle() {
    let m = zmod(&cyclic(8), &[2, 8]);
    let rad = radical(&m).unwrap();
    assert_eq!(rad, m.span(&[m.encode(&[0, 2])]));
    assert_eq!(rad.len(), 4);
    let r = regular_module(&cyclic(4));
    assert_eq!(socle(&r).unwrap(), r.span(&[2]));
    assert!(radical(&zmod(&cyclic(3), &[3, 3])).unwrap().is_zero());
}

#[test]
fn sums_and_intersections() {
    let z4 = cyclic(4);
    let m = zmod(&z4, &[2, 4]);
    let a = m.span(&[m.encode(&[1, 2])]);
    let b = m.span(&[m.encode(&[0, 2])]);
    assert_eq!(m.sum(&a, &m.zero_submodule()).unwrap(), a);
    assert_eq!(m.intersect(&a, &m.whole()).unwrap(), a);
    let s = m.sum(&a, &b).unwrap();
    assert_eq!(s, m.span(&[m.encode(&[1, 0]), m.encode(&[0, 2])]));
    assert_eq!(s.len(), 4);
    let other = regular_module(&z4);
    assert_eq!(
        m.sum(&a, &other.whole()).unwrap_err(),
        AlgebraError::ParentMismatch
    );
}

#[test]
fn summands() {
    let r = regular_module(&cyclic(4));
    assert_eq!(
        is_direct_summand(&r, &r.zero_submodule()).unwrap(),
        Some(r.whole())
    );
    assert_eq!(is_direct_summand(&r, &r.span(&[2])).unwrap(), None);
    let reg = regular_module(&f2z4());
    let s = reg.span(&[reg.encode(&[1, 0])]);
    let b = reg.span(&[reg.encode(&[0, 1])]);
    assert_eq!(is_direct_summand(&reg, &s).unwrap(), Some(b));
}

#[test]
fn supplements() {
    let r = regular_module(&cyclic(4));
    assert!(is_supplement(&r, &r.whole(), &r.zero_submodule()).unwrap());
    assert!(is_supplement(&r, &r.whole(), &r.span(&[2])).unwrap());
    let reg = regular_module(&f2z4());
    let s = reg.span(&[reg.encode(&[1, 0])]);
    let b = reg.span(&[reg.encode(&[0, 1])]);
    assert!(supplements_of(&reg, &s).unwrap().contains(&b));
}

#[test]
fn ample_supplements() {
    assert!(is_amply_supplemented(&zmod(&cyclic(8), &[2, 8])).unwrap());
    assert!(is_amply_supplemented(&zero_module(&cyclic(8))).unwrap());
    assert!(is_amply_supplemented(&regular_module(&f2z4())).unwrap());
}

#[test]
fn coclosed() {
    let r = regular_module(&cyclic(4));
    assert!(is_coclosed(&r, &r.zero_submodule()).unwrap());
    assert!(!is_coclosed(&r, &r.span(&[2])).unwrap());
    let reg = regular_module(&f2z4());
    assert!(is_coclosed(&reg, &reg.span(&[reg.encode(&[1, 0])])).unwrap());
}

#[test]
fn lifting() {
    let m = zmod(&cyclic(4), &[2, 4]);
    assert!(is_lifting(&m).unwrap());
    assert!(is_tlifting(&m).unwrap());
    let m = zmod(&cyclic(8), &[2, 8]);
    assert!(!is_lifting(&m).unwrap());
    assert!(is_tlifting(&m).unwrap());
    assert!(is_lifting(&regular_module(&cyclic(3))).unwrap());
}

#[test]
fn character_duals() {
    let r = regular_module(&cyclic(4));
    let d = character_dual(&r).unwrap();
    assert_eq!(*d, *r);
    let (s, _) = blocks();
    let ds = character_dual(&s).unwrap();
    assert!(is_isomorphic(&ds, &s).unwrap());
    assert_eq!(ds.size(), s.size());
}

#[test]
fn projective_covers() {
    let z4 = cyclic(4);
    let c = projective_cover(&zmod(&z4, &[2])).unwrap();
    assert!(is_isomorphic(&c.module, &regular_module(&z4)).unwrap());
    assert_eq!(c.map.kernel(), c.module.span(&[c.module.encode(&[2])]));
    let r = regular_module(&z4);
    let c = projective_cover(&r).unwrap();
    assert!(is_isomorphic(&c.module, &r).unwrap());
    assert!(c.map.kernel().is_zero());
    let (s, _) = blocks();
    let c = projective_cover(&s).unwrap();
    assert!(is_isomorphic(&c.module, &s).unwrap());
    assert_eq!(c.tops[0].0, f2z4().radix().encode(&[1, 0]));
}

#[test]
fn injective_hulls() {
    let z4 = cyclic(4);
    let h = injective_hull(&zmod(&z4, &[2])).unwrap();
    assert!(is_isomorphic(&h.module, &regular_module(&z4)).unwrap());
    let h = injective_hull(&regular_module(&z4)).unwrap();
    assert_eq!(h.module.size(), 4);
    assert_eq!(injective_hull(&zero_module(&z4)).unwrap().module.size(), 1);
}

#[test]
fn injectivity() {
    let z4 = cyclic(4);
    assert!(is_injective(&regular_module(&z4)).unwrap());
    assert!(!is_injective(&zmod(&z4, &[2])).unwrap());
    let w = baer_witness(&zmod(&z4, &[2])).unwrap().unwrap();
    assert_eq!(w.ideal.elements(), &[0, 2]);
    assert!(is_injective(&zmod(&cyclic(3), &[3, 3])).unwrap());
}

#[test]
fn small_modules() {
    let z4 = cyclic(4);
    assert!(is_small_module(&zero_module(&z4)).unwrap());
    assert!(is_small_module(&zmod(&z4, &[2])).unwrap());
    let (s, _) = blocks();
    assert!(!is_small_module(&s).unwrap());
}

#[test]
fn cosingular_radicals() {
    let r = regular_module(&cyclic(4));
    assert_eq!(zbar(&r).unwrap(), r.span(&[2]));
    let (s, b) = blocks();
    assert_eq!(zbar(&s).unwrap().len(), 2);
    let f3m = zmod(&cyclic(3), &[3, 3]);
    assert_eq!(zbar(&f3m).unwrap(), f3m.whole());

    let m = zmod(&cyclic(8), &[2, 8]);
    assert!(zbar2(&m).unwrap().is_zero());
    let sb = sum(&s, &b);
    let z2 = zbar2(&sb).unwrap();
    assert_eq!(z2, sb.span(&[sb.encode(&[1, 0, 0])]));
    assert!(zbar2(&zero_module(&cyclic(8))).unwrap().is_zero());

    let p = classify(&m).unwrap();
    assert_eq!(p.class, CosingularClass::Mixed);
    assert!(!p.zbar.is_zero() && p.zbar2.is_zero());
    assert_eq!(classify(&s).unwrap().class, CosingularClass::Noncosingular);
    assert_eq!(
        classify(&zmod(&cyclic(4), &[2])).unwrap().class,
        CosingularClass::Cosingular
    );
}

#[test]
fn tsmall_examples() {
    let m = zmod(&cyclic(8), &[2, 8]);
    assert!(is_tsmall(&m, &m.zero_submodule()).unwrap());
    assert!(is_tsmall(&m, &m.whole()).unwrap());
    let (s, b) = blocks();
    let sb = sum(&s, &b);
    let block = sb.span(&[sb.encode(&[0, 1, 0])]);
    assert_eq!(block.len(), 4);
    assert!(is_tsmall(&sb, &block).unwrap());
    assert!(!is_small(&sb, &block).unwrap());
}

#[test]
fn tcoclosed_examples() {
    let (s, b) = blocks();
    let sb = sum(&s, &b);
    assert!(is_tcoclosed(&sb, &sb.zero_submodule()).unwrap());
    assert!(is_tcoclosed(&sb, &sb.span(&[sb.encode(&[1, 0, 0])])).unwrap());
    let two = sb.span(&[sb.encode(&[0, 2, 0])]);
    assert_eq!(two.len(), 2);
    assert!(!is_tcoclosed(&sb, &two).unwrap());
    let m = zmod(&cyclic(8), &[2, 8]);
    assert!(!is_tcoclosed(&m, &m.whole()).unwrap());
}

#[test]
fn tlifting_examples() {
    let (s, b) = blocks();
    assert!(is_tlifting(&sum(&s, &b)).unwrap());
}

#[test]
fn endo_sets() {
    let m = zmod(&cyclic(4), &[2, 4]);
    assert_eq!(d_set(&m, &m.whole()).unwrap().len(), 32);
    assert_eq!(d_set(&m, &m.zero_submodule()).unwrap().len(), 1);
    let (s, b) = blocks();
    let sb = sum(&s, &b);
    let t0 = t_set(&sb, &sb.zero_submodule()).unwrap();
    assert_eq!(t0.len(), 4);
    assert!(t0.is_right_ideal());
    let block = sb.span(&[sb.encode(&[0, 1, 0])]);
    assert_eq!(t_set(&sb, &block).unwrap().members, t0.members);
    assert!(d_set(&sb, &block).unwrap().is_right_ideal());
}

#[test]
fn dual_baer_examples() {
    assert_eq!(
        is_dual_baer(&zmod(&cyclic(3), &[3, 3])).unwrap(),
        Status::True
    );
    let r = regular_module(&cyclic(4));
    assert_eq!(is_dual_baer(&r).unwrap(), Status::False);
    let an = Analysis::new(&r).unwrap();
    let w = an.dual_baer_witness().unwrap().unwrap();
    let e = an.end_ring().unwrap();
    let mut images: Vec<u32> = w.members.iter().map(|&i| e.get(i).images()[0]).collect();
    images.sort_unstable();
    assert_eq!(images, vec![0, 2]);
    let (s, _) = blocks();
    assert_eq!(is_dual_baer(&sum(&s, &s)).unwrap(), Status::True);
}

#[test]
fn tdual_baer_examples() {
    let r = regular_module(&cyclic(4));
    assert_eq!(is_tdual_baer(&r).unwrap(), Status::True);
    let (s, b) = blocks();
    assert_eq!(is_tdual_baer(&sum(&s, &b)).unwrap(), Status::True);
    assert_eq!(
        is_tdual_baer(&zero_module(&cyclic(4))).unwrap(),
        Status::True
    );
}

#[test]
fn regular_sssp_semisimple() {
    assert!(is_regular(&zmod(&cyclic(3), &[3, 3])).unwrap());
    assert!(!is_regular(&regular_module(&cyclic(4))).unwrap());
    let (s, b) = blocks();
    assert!(has_sssp_in_zbar2(&sum(&s, &b)).unwrap());
    assert!(is_semisimple(&zmod(&cyclic(3), &[3, 3])).unwrap());
    assert!(!is_semisimple(&regular_module(&cyclic(4))).unwrap());
}

#[test]
fn k_classes() {
    let simple = regular_module(&cyclic(3));
    let k = k_module_class(&simple).unwrap();
    assert!(k.k && k.t_k && k.strongly_t_k);
    let (s, b) = blocks();
    assert!(k_module_class(&sum(&s, &b)).unwrap().t_k);
    assert!(k_module_class(&zmod(&cyclic(8), &[2, 8])).unwrap().t_k);
}

#[test]
fn polynomial_quotient_ring() {
    let r = build_ring(&RingSpec::PolynomialQuotient(2, 2)).unwrap();
    let m = regular_module(&r);
    assert_eq!(submodules(&m).unwrap().len(), 3);
    assert!(is_injective(&m).unwrap());
}
