//! Mixed-radix element codes and polycyclic presentations of finite
//! abelian groups.

use crate::zdiag::{diagonalize, lcm, Diagonal};

/// The additive group `Z/m_1 × … × Z/m_t` with little-endian integer codes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedRadix {
    orders: Vec<u32>,
    strides: Vec<u32>,
    size: usize,
}

impl MixedRadix {
    /// Returns `None` when the group order does not fit the code space.
    pub fn new(orders: &[u32]) -> Option<Self> {
        let mut strides = Vec::with_capacity(orders.len());
        let mut size: u64 = 1;
        for &m in orders {
            if m == 0 {
                return None;
            }
            strides.push(size as u32);
            size = size.checked_mul(u64::from(m))?;
            if size > u64::from(u32::MAX) {
                return None;
            }
        }
        Some(MixedRadix {
            orders: orders.to_vec(),
            strides,
            size: size as usize,
        })
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |a, &m| lcm(a, u64::from(m)))
    }

    pub fn encode(&self, coords: &[u32]) -> u32 {
        coords
            .iter()
            .zip(&self.orders)
            .zip(&self.strides)
            .map(|((&c, &m), &s)| (c % m) * s)
            .sum()
    }

    /// Encodes arbitrary integer coordinates, reducing each modulo its order.
    pub fn encode_i64(&self, coords: &[i64]) -> u32 {
        coords
            .iter()
            .zip(&self.orders)
            .zip(&self.strides)
            .map(|((&c, &m), &s)| (c.rem_euclid(i64::from(m)) as u32) * s)
            .sum()
    }

    pub fn decode(&self, mut code: u32) -> Vec<u32> {
        self.orders
            .iter()
            .map(|&m| {
                let c = code % m;
                code /= m;
                c
            })
            .collect()
    }

    #[inline]
    pub fn coord(&self, code: u32, i: usize) -> u32 {
        (code / self.strides[i]) % self.orders[i]
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let mut out = 0;
        for i in 0..self.orders.len() {
            let m = self.orders[i];
            let s = self.strides[i];
            out += ((a / s % m + b / s % m) % m) * s;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        let mut out = 0;
        for i in 0..self.orders.len() {
            let m = self.orders[i];
            let s = self.strides[i];
            out += ((m - a / s % m) % m) * s;
        }
        out
    }

    pub fn scale(&self, a: u32, k: u64) -> u32 {
        let mut out = 0;
        for i in 0..self.orders.len() {
            let m = u64::from(self.orders[i]);
            let s = self.strides[i];
            out += (((u64::from(a / s) % m) * (k % m)) % m) as u32 * s;
        }
        out
    }

    /// Unit vector code for basis position `i`.
    pub fn unit(&self, i: usize) -> u32 {
        if self.orders[i] == 1 {
            0
        } else {
            self.strides[i]
        }
    }
}

/// A finite abelian group whose elements are indexed by `0..capacity`.
pub trait AdditiveGroup {
    fn capacity(&self) -> usize;
    fn zero(&self) -> usize;
    fn add(&self, a: usize, b: usize) -> usize;
}

impl AdditiveGroup for MixedRadix {
    fn capacity(&self) -> usize {
        self.size
    }
    fn zero(&self) -> usize {
        0
    }
    fn add(&self, a: usize, b: usize) -> usize {
        MixedRadix::add(self, a as u32, b as u32) as usize
    }
}

const ABSENT: u32 = u32::MAX;

/// Subgroup generated by an ordered list of elements, with the canonical
/// exponent vector of every element.
///
/// For each generator `h_j`, `rel_orders[j]` is its order modulo the span of
/// the earlier generators and `power_rels[j]` are the canonical exponents of
/// `rel_orders[j]·h_j`. These relations present the subgroup completely.
#[derive(Debug, Clone)]
pub struct Polycyclic {
    pub gens: Vec<usize>,
    pub rel_orders: Vec<u64>,
    pub power_rels: Vec<Vec<u64>>,
    pub elems: Vec<usize>,
    slot: Vec<u32>,
    exps: Vec<u32>,
}

impl Polycyclic {
    pub fn build<G: AdditiveGroup + ?Sized>(group: &G, gens: &[usize]) -> Self {
        let s = gens.len();
        let mut slot = vec![ABSENT; group.capacity()];
        let zero = group.zero();
        let mut elems = vec![zero];
        let mut exps = vec![0u32; s];
        slot[zero] = 0;
        let mut rel_orders = Vec::with_capacity(s);
        let mut power_rels = Vec::with_capacity(s);
        for (j, &h) in gens.iter().enumerate() {
            let base = elems.len();
            let mut cur = h;
            let mut k: u32 = 1;
            while slot[cur] == ABSENT {
                for i in 0..base {
                    let x = group.add(elems[i], cur);
                    slot[x] = elems.len() as u32;
                    let start = exps.len();
                    exps.extend_from_within(i * s..(i + 1) * s);
                    exps[start + j] = k;
                    elems.push(x);
                }
                cur = group.add(cur, h);
                k += 1;
            }
            rel_orders.push(u64::from(k));
            let at = slot[cur] as usize;
            power_rels.push(
                exps[at * s..(at + 1) * s]
                    .iter()
                    .map(|&c| u64::from(c))
                    .collect(),
            );
        }
        Polycyclic {
            gens: gens.to_vec(),
            rel_orders,
            power_rels,
            elems,
            slot,
            exps,
        }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.slot[x] != ABSENT
    }

    pub fn exps(&self, x: usize) -> Option<&[u32]> {
        let at = self.slot[x];
        if at == ABSENT {
            None
        } else {
            let s = self.gens.len();
            Some(&self.exps[at as usize * s..(at as usize + 1) * s])
        }
    }

    /// Generators that enlarged the span.
    pub fn essential_gens(&self) -> Vec<usize> {
        self.gens
            .iter()
            .zip(&self.rel_orders)
            .filter(|(_, &o)| o > 1)
            .map(|(&g, _)| g)
            .collect()
    }

    /// Relation rows `o_j e_j - power_rels[j]` reduced modulo `exponent`.
    pub fn relation_rows(&self, exponent: u64) -> Vec<Vec<u64>> {
        let s = self.gens.len();
        (0..s)
            .map(|j| {
                let mut row: Vec<u64> = self.power_rels[j]
                    .iter()
                    .map(|&c| (exponent - c % exponent) % exponent)
                    .collect();
                row[j] = (row[j] + self.rel_orders[j]) % exponent;
                row
            })
            .collect()
    }

    /// Cyclic decomposition of the generated subgroup.
    pub fn decompose(&self, exponent: u64) -> Diagonal {
        diagonalize(&self.relation_rows(exponent), self.gens.len(), exponent)
    }
}
