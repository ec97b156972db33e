//! Literal enumeration of `Cⁿ`, independent of the linear path.

use super::{Cochain, Complex};
use crate::error::Result;
use std::collections::{BTreeSet, HashSet};

#[derive(Clone, Debug)]
pub struct OracleResult {
    pub degree: usize,
    pub cocycles: Vec<Cochain>,
    pub coboundaries: BTreeSet<Cochain>,
    /// Least cocycle of each coset of `Bⁿ`, ascending.
    pub representatives: Vec<Cochain>,
}

impl OracleResult {
    pub fn z_order(&self) -> u128 {
        self.cocycles.len() as u128
    }

    pub fn b_order(&self) -> u128 {
        self.coboundaries.len() as u128
    }

    pub fn h_order(&self) -> u128 {
        self.representatives.len() as u128
    }
}

pub(crate) fn bruteforce(cx: &Complex, n: usize, cap: u128) -> Result<OracleResult> {
    let one = cx.identity(n + 1);
    let cocycles: Vec<Cochain> = cx.cochains(n, cap)?.into_iter().filter(|f| cx.coboundary_unchecked(f) == one).collect();
    let coboundaries: BTreeSet<Cochain> = if n == 0 {
        BTreeSet::from([cx.identity(0)])
    } else {
        cx.cochains(n - 1, cap)?.iter().map(|u| cx.coboundary_unchecked(u)).collect()
    };
    let mut covered: HashSet<Cochain> = HashSet::new();
    let mut representatives = Vec::new();
    // cochains() is lexicographic, so the first uncovered cocycle is least.
    for z in &cocycles {
        if covered.contains(z) {
            continue;
        }
        representatives.push(z.clone());
        covered.extend(coboundaries.iter().map(|b| cx.mul(z, b)));
    }
    Ok(OracleResult { degree: n, cocycles, coboundaries, representatives })
}
