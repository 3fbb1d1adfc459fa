//! Finite unital rings given by an additive cyclic decomposition and
//! multiplication structure constants.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock, Weak};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{AlgebraError, Result};
use crate::group::MixedRadix;
use crate::limits::limits;
use crate::module::FiniteModule;
use crate::submodule::Submodule;

/// Ring constructors used by the built-in catalog and by descriptions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RingSpec {
    Cyclic(u32),
    Product(Box<RingSpec>, Box<RingSpec>),
    StructureConstants {
        orders: Vec<u32>,
        constants: Vec<Vec<Vec<u32>>>,
        one: Vec<u32>,
    },
    UpperTriangular2x2(u32),
    /// `Z/p[x]/(x^n)`.
    PolynomialQuotient(u32, u32),
}

pub struct FiniteRing {
    name: String,
    radix: MixedRadix,
    constants: Vec<Vec<Vec<u32>>>,
    basis_products: Vec<Vec<u32>>,
    one: Vec<u32>,
    one_code: u32,
    fingerprint: [u8; 32],
    mul_table: Option<Vec<u32>>,
    opposite: OnceLock<Arc<FiniteRing>>,
    opposite_of: Weak<FiniteRing>,
    pub(crate) cache: RingCache,
}

/// A right ideal as a module, with the ring codes of its basis.
pub(crate) type EmbeddedIdeal = (Arc<FiniteModule>, Vec<u32>);

#[derive(Default)]
pub(crate) struct RingCache {
    pub regular: OnceLock<Arc<FiniteModule>>,
    pub jacobson: OnceLock<Result<Submodule>>,
    pub idempotents: OnceLock<Vec<u32>>,
    pub basic_idempotents: OnceLock<Result<Vec<u32>>>,
    /// `eR` for an idempotent code `e`, with the ring codes of its basis.
    pub projectives: Mutex<HashMap<u32, EmbeddedIdeal>>,
    /// Right ideal (by lattice node) as a module, with the ring codes of its basis.
    pub right_ideal_modules: Mutex<HashMap<usize, EmbeddedIdeal>>,
    /// Smallness of modules keyed by fingerprint.
    pub small_modules: Mutex<HashMap<[u8; 32], bool>>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("name", &self.name)
            .field("orders", &self.radix.orders())
            .field("one", &self.one)
            .finish()
    }
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint
    }
}

impl Eq for FiniteRing {}

impl FiniteRing {
    /// Validates and builds a ring from raw structure constants.
    pub fn new(
        name: impl Into<String>,
        orders: Vec<u32>,
        constants: Vec<Vec<Vec<u32>>>,
        one: Vec<u32>,
    ) -> Result<Arc<Self>> {
        Self::build(name.into(), orders, constants, one, Weak::new()).map(Arc::new)
    }

    fn build(
        name: String,
        orders: Vec<u32>,
        constants: Vec<Vec<Vec<u32>>>,
        one: Vec<u32>,
        opposite_of: Weak<FiniteRing>,
    ) -> Result<Self> {
        let k = orders.len();
        if orders.contains(&0) {
            return Err(AlgebraError::IllFormedConstants(
                "component orders must be positive".into(),
            ));
        }
        let size = orders
            .iter()
            .try_fold(1usize, |acc, &d| acc.checked_mul(d as usize))
            .unwrap_or(usize::MAX);
        let lim = limits().max_ring;
        if size > lim {
            return Err(AlgebraError::limit("ring", lim, size));
        }
        let radix = MixedRadix::new(&orders)
            .ok_or_else(|| AlgebraError::IllFormedConstants("ring too large".into()))?;
        if constants.len() != k || constants.iter().any(|row| row.len() != k) {
            return Err(AlgebraError::IllFormedConstants(format!(
                "expected a {k}x{k} table of products"
            )));
        }
        if one.len() != k {
            return Err(AlgebraError::IllFormedConstants(
                "identity has the wrong number of coordinates".into(),
            ));
        }
        for (i, row) in constants.iter().enumerate() {
            for (j, prod) in row.iter().enumerate() {
                if prod.len() != k {
                    return Err(AlgebraError::IllFormedConstants(format!(
                        "product e{i}*e{j} has the wrong number of coordinates"
                    )));
                }
                for (l, &c) in prod.iter().enumerate() {
                    let dl = u64::from(orders[l]);
                    let c = u64::from(c);
                    if (u64::from(orders[i]) * c) % dl != 0 || (u64::from(orders[j]) * c) % dl != 0
                    {
                        return Err(AlgebraError::IllFormedConstants(format!(
                            "product e{i}*e{j} is not compatible with the additive orders"
                        )));
                    }
                }
            }
        }
        let constants: Vec<Vec<Vec<u32>>> = constants
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|p| p.iter().zip(&orders).map(|(&c, &d)| c % d).collect())
                    .collect()
            })
            .collect();
        let one: Vec<u32> = one.iter().zip(&orders).map(|(&c, &d)| c % d).collect();
        let basis_products = constants
            .iter()
            .map(|row| row.iter().map(|p| radix.encode(p)).collect())
            .collect();
        let one_code = radix.encode(&one);
        let mut hasher = Sha256::new();
        hasher.update(b"ring");
        for v in orders
            .iter()
            .chain(constants.iter().flatten().flatten())
            .chain(&one)
        {
            hasher.update(v.to_le_bytes());
        }
        hasher.update((k as u64).to_le_bytes());
        let fingerprint: [u8; 32] = hasher.finalize().into();
        let mut ring = FiniteRing {
            name,
            radix,
            constants,
            basis_products,
            one,
            one_code,
            fingerprint,
            mul_table: None,
            opposite: OnceLock::new(),
            opposite_of,
            cache: RingCache::default(),
        };
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    let (ei, ej, el) = (ring.basis(i), ring.basis(j), ring.basis(l));
                    if ring.mul_slow(ring.mul_slow(ei, ej), el)
                        != ring.mul_slow(ei, ring.mul_slow(ej, el))
                    {
                        return Err(AlgebraError::NonAssociative(i, j, l));
                    }
                }
            }
        }
        for i in 0..k {
            let ei = ring.basis(i);
            if ring.mul_slow(ring.one_code, ei) != ei || ring.mul_slow(ei, ring.one_code) != ei {
                return Err(AlgebraError::NoIdentity);
            }
        }
        if size <= 1024 {
            let mut table = vec![0u32; size * size];
            for a in 0..size {
                for b in 0..size {
                    table[a * size + b] = ring.mul_slow(a as u32, b as u32);
                }
            }
            ring.mul_table = Some(table);
        }
        Ok(ring)
    }

    pub fn name(&self) -> &str {
        &self.name
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

    pub fn constants(&self) -> &[Vec<Vec<u32>>] {
        &self.constants
    }

    pub fn one_coords(&self) -> &[u32] {
        &self.one
    }

    pub fn one(&self) -> u32 {
        self.one_code
    }

    pub fn fingerprint(&self) -> &[u8; 32] {
        &self.fingerprint
    }

    pub fn same_ring(&self, other: &FiniteRing) -> bool {
        self.fingerprint == other.fingerprint
    }

    /// Code of basis element `e_i`.
    pub fn basis(&self, i: usize) -> u32 {
        self.radix.unit(i)
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.radix.add(a, b)
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.radix.neg(a)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.radix.add(a, self.radix.neg(b))
    }

    pub fn coords(&self, a: u32) -> Vec<u32> {
        self.radix.decode(a)
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.size() as u32
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.mul_table {
            Some(t) => t[a as usize * self.size() + b as usize],
            None => self.mul_slow(a, b),
        }
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let ca = self.radix.decode(a);
        let cb = self.radix.decode(b);
        let mut acc = 0u32;
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let p = self
                    .radix
                    .scale(self.basis_products[i][j], u64::from(x) * u64::from(y));
                acc = self.radix.add(acc, p);
            }
        }
        acc
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.rank()).all(|i| (0..i).all(|j| self.constants[i][j] == self.constants[j][i]))
    }

    /// Ring with the same additive data and reversed multiplication.
    ///
    /// The opposite of an opposite ring is the original `Arc` while it is alive.
    pub fn opposite(self: &Arc<Self>) -> Arc<FiniteRing> {
        if let Some(orig) = self.opposite_of.upgrade() {
            return orig;
        }
        self.opposite
            .get_or_init(|| {
                let k = self.rank();
                let constants = (0..k)
                    .map(|i| (0..k).map(|j| self.constants[j][i].clone()).collect())
                    .collect();
                let name = match self.name.strip_suffix("^op") {
                    Some(base) => base.to_string(),
                    None => format!("{}^op", self.name),
                };
                Arc::new(
                    FiniteRing::build(
                        name,
                        self.orders().to_vec(),
                        constants,
                        self.one.clone(),
                        Arc::downgrade(self),
                    )
                    .expect("opposite of a valid ring is valid"),
                )
            })
            .clone()
    }
}

/// Builds a ring from a constructor description.
pub fn build_ring(spec: &RingSpec) -> Result<Arc<FiniteRing>> {
    let (name, orders, constants, one) = raw_parts(spec)?;
    FiniteRing::new(name, orders, constants, one)
}

type RawRing = (String, Vec<u32>, Vec<Vec<Vec<u32>>>, Vec<u32>);

fn raw_parts(spec: &RingSpec) -> Result<RawRing> {
    Ok(match spec {
        RingSpec::Cyclic(n) => {
            if *n == 0 {
                return Err(AlgebraError::IllFormedConstants("Z/0 is not finite".into()));
            }
            (
                format!("Z/{n}"),
                vec![*n],
                vec![vec![vec![1 % n]]],
                vec![1 % n],
            )
        }
        RingSpec::Product(a, b) => {
            let (na, oa, ca, ia) = raw_parts(a)?;
            let (nb, ob, cb, ib) = raw_parts(b)?;
            let (ka, kb) = (oa.len(), ob.len());
            let k = ka + kb;
            let mut constants = vec![vec![vec![0u32; k]; k]; k];
            for i in 0..ka {
                for j in 0..ka {
                    constants[i][j][..ka].copy_from_slice(&ca[i][j]);
                }
            }
            for i in 0..kb {
                for j in 0..kb {
                    constants[ka + i][ka + j][ka..].copy_from_slice(&cb[i][j]);
                }
            }
            let orders = oa.into_iter().chain(ob).collect();
            let one = ia.into_iter().chain(ib).collect();
            (format!("{na}x{nb}"), orders, constants, one)
        }
        RingSpec::StructureConstants {
            orders,
            constants,
            one,
        } => (
            "custom".to_string(),
            orders.clone(),
            constants.clone(),
            one.clone(),
        ),
        RingSpec::UpperTriangular2x2(p) => {
            // basis e11, e12, e22
            let mut c = vec![vec![vec![0u32; 3]; 3]; 3];
            c[0][0][0] = 1;
            c[0][1][1] = 1;
            c[1][2][1] = 1;
            c[2][2][2] = 1;
            (format!("T2(F{p})"), vec![*p; 3], c, vec![1, 0, 1])
        }
        RingSpec::PolynomialQuotient(p, n) => {
            let n = *n as usize;
            if n == 0 {
                return Err(AlgebraError::IllFormedConstants(
                    "x^0 quotient is the zero ring".into(),
                ));
            }
            let mut c = vec![vec![vec![0u32; n]; n]; n];
            for i in 0..n {
                for j in 0..n {
                    if i + j < n {
                        c[i][j][i + j] = 1;
                    }
                }
            }
            let mut one = vec![0u32; n];
            one[0] = 1;
            (format!("F{p}[x]/(x^{n})"), vec![*p; n], c, one)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_four() {
        let r = build_ring(&RingSpec::Cyclic(4)).unwrap();
        assert_eq!(r.size(), 4);
        assert_eq!(r.constants()[0][0], vec![1]);
        assert_eq!(r.mul(2, 3), 2);
        assert_eq!(r.mul(2, 2), 0);
    }

    #[test]
    fn product_is_componentwise() {
        let r = build_ring(&RingSpec::Product(
            Box::new(RingSpec::Cyclic(2)),
            Box::new(RingSpec::Cyclic(4)),
        ))
        .unwrap();
        assert_eq!(r.size(), 8);
        let x = r.radix().encode(&[1, 3]);
        let y = r.radix().encode(&[1, 2]);
        assert_eq!(r.coords(r.mul(x, y)), vec![1, 2]);
        assert_eq!(r.one_coords(), &[1, 1]);
    }

    #[test]
    fn missing_identity_rejected() {
        // e1*e1 = e1 + e2 on Z/2 x Z/2, identity claimed to be e1
        let err = FiniteRing::new(
            "bad",
            vec![2, 2],
            vec![vec![vec![1, 1], vec![0, 0]], vec![vec![0, 0], vec![0, 0]]],
            vec![1, 0],
        )
        .unwrap_err();
        assert!(matches!(
            err,
            AlgebraError::NoIdentity | AlgebraError::NonAssociative(..)
        ));
        let err = FiniteRing::new("bad", vec![2], vec![vec![vec![1]]], vec![0]).unwrap_err();
        assert_eq!(err, AlgebraError::NoIdentity);
    }

    #[test]
    fn non_associative_rejected() {
        // e0 = 1, e1*e1 = e2, e1*e2 = 0, e2*e1 = e0 ... breaks (e1 e1) e1 = e1 (e1 e1)
        let mut c = vec![vec![vec![0u32; 3]; 3]; 3];
        for (i, row) in c.iter_mut().enumerate() {
            row[0][i] = 1;
        }
        for (i, cell) in c[0].iter_mut().enumerate() {
            cell[i] = 1;
        }
        c[1][1][2] = 1;
        c[2][1][0] = 1;
        let err = FiniteRing::new("bad", vec![2, 2, 2], c, vec![1, 0, 0]).unwrap_err();
        assert!(matches!(err, AlgebraError::NonAssociative(..)));
    }

    #[test]
    fn ill_formed_orders_rejected() {
        // e*e = e in Z/4 with order mismatch: Z/2 basis with product landing in Z/4 coordinate 1
        let err = FiniteRing::new(
            "bad",
            vec![2, 4],
            vec![vec![vec![1, 1], vec![0, 0]], vec![vec![0, 0], vec![0, 1]]],
            vec![1, 1],
        )
        .unwrap_err();
        assert!(matches!(err, AlgebraError::IllFormedConstants(_)));
    }

    #[test]
    fn opposite_involution() {
        let z4 = build_ring(&RingSpec::Cyclic(4)).unwrap();
        assert_eq!(*z4.opposite(), *z4);
        let t = build_ring(&RingSpec::UpperTriangular2x2(2)).unwrap();
        let op = t.opposite();
        assert_ne!(op.constants(), t.constants());
        assert!(!t.is_commutative());
        let back = op.opposite();
        assert!(Arc::ptr_eq(&back, &t));
        // explicit table comparison: e11*e12 = e12 in T, zero in T^op
        assert_eq!(t.constants()[0][1], vec![0, 1, 0]);
        assert_eq!(op.constants()[0][1], vec![0, 0, 0]);
    }

    #[test]
    fn polynomial_quotient() {
        let r = build_ring(&RingSpec::PolynomialQuotient(2, 3)).unwrap();
        assert_eq!(r.size(), 8);
        let x = r.basis(1);
        assert_eq!(r.mul(r.mul(x, x), x), 0);
        assert_ne!(r.mul(x, x), 0);
    }

    #[test]
    fn size_limit() {
        let err = build_ring(&RingSpec::Cyclic(5000)).unwrap_err();
        assert!(matches!(err, AlgebraError::SizeLimitExceeded { .. }));
    }
}
