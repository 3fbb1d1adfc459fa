//! Diagonal normal form of integer relation matrices over `Z/E`.
//!
//! A finite abelian group presented as `Z^n / (rows + E·Z^n)` is brought to
//! the form `⊕ Z/d_i` by unimodular row and column operations. Only the
//! column transform is tracked: it gives the coordinates of the original
//! generators in the new cyclic basis, and its inverse expresses each new
//! basis element as a combination of the original generators.

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagonal {
    /// Orders of the cyclic factors, all greater than one.
    pub moduli: Vec<u64>,
    /// `proj[j][i]`: coordinate `i` of original generator `j`.
    pub proj: Vec<Vec<u64>>,
    /// `lift[i][j]`: coefficient of original generator `j` in new basis element `i`.
    pub lift: Vec<Vec<u64>>,
}

impl Diagonal {
    pub fn order(&self) -> u64 {
        self.moduli.iter().product()
    }

    /// New coordinates of the integer combination `x` of original generators.
    pub fn coords(&self, x: &[u64]) -> Vec<u64> {
        (0..self.moduli.len())
            .map(|i| {
                let d = self.moduli[i];
                x.iter()
                    .zip(&self.proj)
                    .fold(0u64, |acc, (&xj, row)| (acc + (xj % d) * row[i]) % d)
            })
            .collect()
    }
}

pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, s, t) = ext_gcd(b, a.rem_euclid(b));
        (g, t, s - (a.div_euclid(b)) * t)
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

struct Work {
    w: Vec<Vec<i64>>,
    v: Vec<Vec<i64>>,
    vinv: Vec<Vec<i64>>,
    e: i64,
}

impl Work {
    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for row in self.w.iter_mut().chain(self.v.iter_mut()) {
            row.swap(a, b);
        }
        self.vinv.swap(a, b);
    }

    fn row_reduce(&mut self, t: usize, i: usize) {
        let e = self.e;
        let a = self.w[t][t];
        let b = self.w[i][t];
        if a != 0 && b % a == 0 {
            let q = b / a;
            let (top, bottom) = self.w.split_at_mut(i);
            for (x, y) in bottom[0].iter_mut().zip(&top[t]) {
                *x = (*x - q * y).rem_euclid(e);
            }
            return;
        }
        let (g, s, u) = ext_gcd(a, b);
        let (p, q) = (-b / g, a / g);
        let rt = self.w[t].clone();
        let ri = self.w[i].clone();
        for c in 0..rt.len() {
            self.w[t][c] = (s * rt[c] + u * ri[c]).rem_euclid(e);
            self.w[i][c] = (p * rt[c] + q * ri[c]).rem_euclid(e);
        }
    }

    fn col_reduce(&mut self, t: usize, j: usize) {
        let e = self.e;
        let a = self.w[t][t];
        let b = self.w[t][j];
        if a != 0 && b % a == 0 {
            let q = b / a;
            for row in self.w.iter_mut().chain(self.v.iter_mut()) {
                row[j] = (row[j] - q * row[t]).rem_euclid(e);
            }
            // inverse: row_t += q row_j
            let rj = self.vinv[j].clone();
            for (x, y) in self.vinv[t].iter_mut().zip(&rj) {
                *x = (*x + q * y).rem_euclid(e);
            }
            return;
        }
        let (g, s, u) = ext_gcd(a, b);
        let (ag, bg) = (a / g, b / g);
        for row in self.w.iter_mut().chain(self.v.iter_mut()) {
            let (ct, cj) = (row[t], row[j]);
            row[t] = (s * ct + u * cj).rem_euclid(e);
            row[j] = (-bg * ct + ag * cj).rem_euclid(e);
        }
        let rt = self.vinv[t].clone();
        let rj = self.vinv[j].clone();
        for c in 0..rt.len() {
            self.vinv[t][c] = (ag * rt[c] + bg * rj[c]).rem_euclid(e);
            self.vinv[j][c] = (-u * rt[c] + s * rj[c]).rem_euclid(e);
        }
    }
}

/// Diagonalises `Z^ncols / (rows + exponent·Z^ncols)`.
///
/// `exponent` must annihilate the presented group.
pub fn diagonalize(rows: &[Vec<u64>], ncols: usize, exponent: u64) -> Diagonal {
    assert!(exponent >= 1);
    let e = exponent as i64;
    let identity = |n: usize| -> Vec<Vec<i64>> {
        (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j) % e).collect())
            .collect()
    };
    let mut work = Work {
        w: rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), ncols);
                r.iter().map(|&x| (x % exponent) as i64).collect()
            })
            .collect(),
        v: identity(ncols),
        vinv: identity(ncols),
        e,
    };
    let m = work.w.len();
    let mut t = 0;
    while t < m && t < ncols {
        let mut best: Option<(u64, i64, usize, usize)> = None;
        for i in t..m {
            for j in t..ncols {
                let x = work.w[i][j];
                if x != 0 {
                    let key = (gcd(x as u64, exponent), x, i, j);
                    if best.is_none_or(|b| (key.0, key.1) < (b.0, b.1)) {
                        best = Some(key);
                    }
                }
            }
        }
        let Some((_, _, bi, bj)) = best else { break };
        work.w.swap(t, bi);
        work.swap_cols(t, bj);
        loop {
            for i in t + 1..m {
                if work.w[i][t] != 0 {
                    work.row_reduce(t, i);
                }
            }
            for j in t + 1..ncols {
                if work.w[t][j] != 0 {
                    work.col_reduce(t, j);
                }
            }
            if (t + 1..m).all(|i| work.w[i][t] == 0) {
                break;
            }
        }
        t += 1;
    }
    let mut moduli = Vec::new();
    let mut kept = Vec::new();
    for i in 0..ncols {
        let d = if i < t {
            gcd(work.w[i][i] as u64, exponent)
        } else {
            exponent
        };
        if d > 1 {
            moduli.push(d);
            kept.push(i);
        }
    }
    let proj = (0..ncols)
        .map(|j| {
            kept.iter()
                .zip(&moduli)
                .map(|(&i, &d)| (work.v[j][i] as u64) % d)
                .collect()
        })
        .collect();
    let lift = kept
        .iter()
        .map(|&i| work.vinv[i].iter().map(|&x| x as u64).collect())
        .collect();
    Diagonal { moduli, proj, lift }
}
