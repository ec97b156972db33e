//! Free bases over the prime subring `Z/n`.

use super::{Elem, Ring};
use crate::error::{Error, Result};
use crate::numth::prime_power;
use std::collections::HashSet;

#[derive(Clone, Debug)]
pub struct FreeBasis {
    pub modulus: u64,
    pub basis: Vec<Elem>,
    coords: Vec<Vec<u64>>,
}

impl FreeBasis {
    /// Lifts a greedy `F_p`-basis of `R/pR` and checks `|R| = n^d`.
    pub fn find(ring: &Ring) -> Result<FreeBasis> {
        let n = ring.characteristic();
        let (p, _) = prime_power(n)
            .ok_or_else(|| Error::pre(format!("characteristic {n} is not a prime power, no free basis over Z/{n}")))?;
        let mut span: HashSet<Elem> = ring.elements().map(|r| ring.scale(p, r)).collect();
        let mut basis = Vec::new();
        for x in ring.elements() {
            if span.len() == ring.size() {
                break;
            }
            if span.contains(&x) {
                continue;
            }
            basis.push(x);
            let old: Vec<Elem> = span.iter().copied().collect();
            let mut jx = x;
            for _ in 1..p {
                for &s in &old {
                    span.insert(ring.add(s, jx));
                }
                jx = ring.add(jx, x);
            }
        }
        let d = basis.len() as u32;
        if (n as u128).pow(d) != ring.size() as u128 {
            return Err(Error::pre(format!("{} is not free over Z/{n}", ring.describe())));
        }
        let mut coords = vec![Vec::new(); ring.size()];
        let mut filled = 0usize;
        let total = ring.size();
        for code in 0..total as u64 {
            let mut c = vec![0u64; d as usize];
            let mut r = code;
            for i in (0..d as usize).rev() {
                c[i] = r % n;
                r /= n;
            }
            let x = ring.sum(c.iter().zip(&basis).map(|(&ci, &b)| ring.scale(ci, b)));
            if coords[x.0 as usize].is_empty() || d == 0 {
                filled += 1;
            }
            coords[x.0 as usize] = c;
        }
        if filled != total {
            return Err(Error::pre(format!("{} is not free over Z/{n}", ring.describe())));
        }
        Ok(FreeBasis { modulus: n, basis, coords })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coords(&self, x: Elem) -> &[u64] {
        &self.coords[x.0 as usize]
    }

    pub fn combine(&self, ring: &Ring, c: &[u64]) -> Elem {
        ring.sum(c.iter().zip(&self.basis).map(|(&ci, &b)| ring.scale(ci, b)))
    }
}
