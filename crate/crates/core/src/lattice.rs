//! Lattices `L ⊆ Z^m` containing `N·Z^m`, kept in triangular form with
//! entries reduced mod `N`. Finite abelian groups `Z^m / L` are handled
//! through these: indices, canonical coset representatives, enumeration and
//! elementary divisors.

use crate::numth::{ext_gcd, factorize};

#[derive(Clone, Debug)]
pub struct ModLattice {
    m: usize,
    modulus: i64,
    /// `rows[i]` has zeros before column `i` and pivot `rows[i][i]` dividing `N`.
    rows: Vec<Vec<i64>>,
    saturated: bool,
}

impl ModLattice {
    /// The lattice `N·Z^m`.
    pub fn new(m: usize, modulus: u64) -> ModLattice {
        let n = modulus.max(1) as i64;
        let rows = (0..m)
            .map(|i| {
                let mut r = vec![0; m];
                r[i] = n;
                r
            })
            .collect();
        ModLattice { m, modulus: n, rows, saturated: true }
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn modulus(&self) -> u64 {
        self.modulus as u64
    }

    fn insert(&mut self, v: &[i64]) {
        let n = self.modulus;
        let mut v: Vec<i64> = v.iter().map(|x| x.rem_euclid(n)).collect();
        for i in 0..self.m {
            let b = v[i].rem_euclid(n);
            v[i] = b;
            if b == 0 {
                continue;
            }
            let r = &self.rows[i];
            let a = r[i];
            let (g, s, t) = ext_gcd(a, b);
            let (ag, bg) = (a / g, b / g);
            let mut new_row = vec![0; self.m];
            let mut rest = vec![0; self.m];
            for j in i..self.m {
                let (rj, vj) = (r[j] as i128, v[j] as i128);
                new_row[j] = ((s as i128 * rj + t as i128 * vj).rem_euclid(n as i128)) as i64;
                rest[j] = ((ag as i128 * vj - bg as i128 * rj).rem_euclid(n as i128)) as i64;
            }
            new_row[i] = g;
            rest[i] = 0;
            self.rows[i] = new_row;
            v = rest;
        }
    }

    /// Adds a generator.
    pub fn add(&mut self, v: &[i64]) {
        assert_eq!(v.len(), self.m);
        self.insert(v);
        self.saturated = false;
    }

    /// Makes the triangular rows a basis of the whole lattice: for each row,
    /// the multiple killing its pivot mod `N` is fed back in.
    fn saturate(&mut self) {
        if self.saturated {
            return;
        }
        for i in 0..self.m {
            let p = self.rows[i][i];
            let k = self.modulus / p;
            let w: Vec<i64> = self.rows[i].iter().map(|x| (x * k) % self.modulus).collect();
            self.insert(&w);
        }
        self.saturated = true;
    }

    pub fn pivots(&mut self) -> Vec<i64> {
        self.saturate();
        (0..self.m).map(|i| self.rows[i][i]).collect()
    }

    pub fn basis(&mut self) -> Vec<Vec<i64>> {
        self.saturate();
        self.rows.clone()
    }

    /// `[Z^m : L]`, or `None` on overflow.
    pub fn index(&mut self) -> Option<u128> {
        self.pivots().iter().try_fold(1u128, |acc, &p| acc.checked_mul(p as u128))
    }

    /// Canonical representative of `v + L`, with `0 <= v_i < pivot_i`.
    pub fn reduce(&mut self, v: &[i64]) -> Vec<i64> {
        self.saturate();
        let n = self.modulus as i128;
        let mut v: Vec<i128> = v.iter().map(|&x| (x as i128).rem_euclid(n)).collect();
        for i in 0..self.m {
            let p = self.rows[i][i] as i128;
            let q = v[i].div_euclid(p);
            if q != 0 {
                for j in i..self.m {
                    v[j] = (v[j] - q * self.rows[i][j] as i128).rem_euclid(n);
                }
            }
            v[i] = v[i].rem_euclid(p);
        }
        v.into_iter().map(|x| x as i64).collect()
    }

    pub fn contains(&mut self, v: &[i64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v ∈ L` in the triangular basis, reduced mod `N`
    /// (exact up to `N·L`).
    pub fn coords_of(&mut self, v: &[i64]) -> Option<Vec<i64>> {
        self.saturate();
        let n = self.modulus as i128;
        let mut v: Vec<i128> = v.iter().map(|&x| (x as i128).rem_euclid(n)).collect();
        let mut c = vec![0i64; self.m];
        for i in 0..self.m {
            let p = self.rows[i][i] as i128;
            if v[i] % p != 0 {
                return None;
            }
            let q = v[i] / p;
            c[i] = q as i64;
            for j in i..self.m {
                v[j] = (v[j] - q * self.rows[i][j] as i128).rem_euclid(n);
            }
        }
        Some(c)
    }

    /// Exact integer coordinates of `v ∈ L` in the triangular basis.
    pub fn exact_coords(&mut self, v: &[i64]) -> Option<Vec<i128>> {
        self.saturate();
        let mut v: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        let mut c = vec![0i128; self.m];
        for i in 0..self.m {
            let p = self.rows[i][i] as i128;
            if v[i] % p != 0 {
                return None;
            }
            let q = v[i] / p;
            c[i] = q;
            for j in i..self.m {
                v[j] -= q * self.rows[i][j] as i128;
            }
        }
        Some(c)
    }

    /// All canonical representatives of `Z^m / L`, in lexicographic order.
    pub fn quotient_elements(&mut self) -> Vec<Vec<i64>> {
        let p = self.pivots();
        mixed_radix(&p)
    }

    /// Elementary divisors of `Z^m / L` (prime powers, ascending).
    pub fn elementary_divisors(&mut self) -> Vec<u64> {
        let n = self.modulus as u64;
        let mut out = Vec::new();
        for (p, k) in factorize(n) {
            // rank_j = number of cyclic factors of order >= p^j.
            let mut sizes = vec![1u128];
            let mut pj = 1u64;
            for _ in 0..k {
                pj *= p;
                let mut l = self.clone();
                for i in 0..self.m {
                    let mut e = vec![0; self.m];
                    e[i] = pj as i64;
                    l.add(&e);
                }
                sizes.push(l.index().expect("index fits"));
            }
            let ranks: Vec<u32> = sizes.windows(2).map(|w| ilog(w[1] / w[0], p)).collect();
            for (j, &r) in ranks.iter().enumerate() {
                let next = ranks.get(j + 1).copied().unwrap_or(0);
                for _ in 0..r - next {
                    out.push(p.pow(j as u32 + 1));
                }
            }
        }
        out.sort();
        out
    }
}

fn ilog(mut x: u128, p: u64) -> u32 {
    let mut k = 0;
    while x > 1 {
        x /= p as u128;
        k += 1;
    }
    k
}

/// All vectors `v` with `0 <= v_i < bounds_i`, lexicographic.
pub fn mixed_radix(bounds: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::with_capacity(bounds.len())];
    for &b in bounds {
        let mut next = Vec::with_capacity(out.len() * b as usize);
        for v in &out {
            for x in 0..b {
                let mut w = v.clone();
                w.push(x);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// Kernel of `x ↦ Σ x_i·col_i` from `Z^m` into `Z^k / L_B`, where `L_B` is
/// the diagonal lattice of `target_divisors`; `modulus` must annihilate both
/// sides. Returned as a lattice in `Z^m` containing `modulus·Z^m`.
pub fn kernel(columns: &[Vec<i64>], target_divisors: &[u64], modulus: u64) -> ModLattice {
    let m = columns.len();
    let k = target_divisors.len();
    let mut big = ModLattice::new(k + m, modulus);
    for (i, col) in columns.iter().enumerate() {
        let mut v = vec![0; k + m];
        v[..k].copy_from_slice(col);
        v[k + i] = 1;
        big.add(&v);
    }
    for (j, &d) in target_divisors.iter().enumerate() {
        let mut v = vec![0; k + m];
        v[j] = d as i64;
        big.add(&v);
    }
    let mut ker = ModLattice::new(m, modulus);
    for row in big.basis().into_iter().skip(k) {
        ker.add(&row[k..]);
    }
    ker
}
