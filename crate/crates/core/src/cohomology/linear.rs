//! Cohomology by linear algebra over finite abelian groups: `Cⁿ` is
//! coordinatized by the unit-group generators of each cut ideal, and `δ`
//! becomes an integer matrix modulo a common exponent.

use super::{Cochain, Complex};
use crate::error::{Error, Result};
use crate::lattice::{kernel, ModLattice};
use crate::numth::lcm;
use crate::ring::UnitGroup;
use serde::Serialize;
use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

#[derive(Clone, Debug, Serialize)]
pub struct CohomologyGroup {
    pub degree: usize,
    pub z_order: u128,
    pub b_order: u128,
    pub h_order: u128,
    /// Elementary divisors of `Hⁿ`.
    pub divisors: Vec<u64>,
    /// Least cocycle of each class, sorted; absent past the cap.
    #[serde(skip)]
    pub representatives: Option<Vec<Cochain>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Generator coordinates of `Cⁿ`: `(tuple code, generator index)` with divisors.
pub(crate) struct Coords {
    pub groups: Vec<Arc<UnitGroup>>,
    pub slots: Vec<(usize, usize)>,
    pub divisors: Vec<u64>,
}

impl Coords {
    pub fn new(cx: &Complex, n: usize) -> Coords {
        let groups = cx.unit_groups(n);
        let mut slots = Vec::new();
        let mut divisors = Vec::new();
        for (t, u) in groups.iter().enumerate() {
            for (j, &d) in u.divisors.iter().enumerate() {
                slots.push((t, j));
                divisors.push(d);
            }
        }
        Coords { groups, slots, divisors }
    }

    pub fn of(&self, f: &Cochain) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.slots.len());
        for (u, &v) in self.groups.iter().zip(&f.values) {
            out.extend(u.coords(v).expect("unit").iter().map(|&c| c as i64));
        }
        out
    }

    pub fn cochain(&self, cx: &Complex, n: usize, c: &[i64]) -> Cochain {
        let r = &*cx.pa.ring;
        let mut k = 0;
        let values = self
            .groups
            .iter()
            .map(|u| {
                let m = u.generators.len();
                let e: Vec<u64> = c[k..k + m].iter().zip(&u.divisors).map(|(&x, &d)| x.rem_euclid(d as i64) as u64).collect();
                k += m;
                u.from_coords(r, &e)
            })
            .collect();
        Cochain { degree: n, values }
    }

    /// The cochain with generator `slot` at one tuple, identity elsewhere.
    fn basis(&self, cx: &Complex, n: usize, slot: usize) -> Cochain {
        let mut c = vec![0; self.slots.len()];
        c[slot] = 1;
        self.cochain(cx, n, &c)
    }

    fn exponent(&self) -> u64 {
        self.divisors.iter().fold(1, |a, &d| lcm(a, d))
    }

    fn diagonal(&self, modulus: u64) -> ModLattice {
        let m = self.slots.len();
        let mut l = ModLattice::new(m, modulus);
        for (i, &d) in self.divisors.iter().enumerate() {
            let mut v = vec![0; m];
            v[i] = d as i64;
            l.add(&v);
        }
        l
    }
}

/// Columns of `δⁿ` in generator coordinates.
fn delta_columns(cx: &Complex, n: usize, src: &Coords, dst: &Coords) -> Vec<Vec<i64>> {
    (0..src.slots.len()).map(|s| dst.of(&cx.coboundary_unchecked(&src.basis(cx, n, s)))).collect()
}

fn order_of(l: &mut ModLattice) -> Result<u128> {
    l.index().ok_or_else(|| Error::Cap { what: "lattice index".into(), size: u128::MAX, cap: u128::MAX })
}

pub(crate) fn cohomology(cx: &Complex, n: usize, cap: u128) -> Result<CohomologyGroup> {
    let here = Coords::new(cx, n);
    let next = Coords::new(cx, n + 1);
    let prev = (n > 0).then(|| Coords::new(cx, n - 1));
    let modulus = [Some(&here), Some(&next), prev.as_ref()].into_iter().flatten().fold(1, |a, c| lcm(a, c.exponent()));
    let m = here.slots.len();

    let mut diag = here.diagonal(modulus);
    let c_order = order_of(&mut diag)?;
    let mut z = kernel(&delta_columns(cx, n, &here, &next), &next.divisors, modulus);
    let mut b = here.diagonal(modulus);
    if let Some(prev) = &prev {
        for col in delta_columns(cx, n - 1, prev, &here) {
            b.add(&col);
        }
    }
    let (z_index, b_index) = (order_of(&mut z)?, order_of(&mut b)?);
    let z_order = c_order / z_index;
    let b_order = c_order / b_index;
    let h_order = b_index / z_index;

    // Hⁿ = Z/B, rewritten in the coordinates of Z's triangular basis.
    let mut h = ModLattice::new(m, modulus);
    let n_rows = (0..m).map(|i| {
        let mut v = vec![0; m];
        v[i] = modulus as i64;
        v
    });
    for row in b.basis().into_iter().chain(n_rows) {
        let c = z.exact_coords(&row).expect("coboundaries are cocycles");
        h.add(&c.iter().map(|&x| x.rem_euclid(modulus as i128) as i64).collect::<Vec<_>>());
    }
    let divisors = h.elementary_divisors();

    let (representatives, note) = if z_order <= cap {
        (Some(representatives(cx, n, &here, &mut z, &mut b)), None)
    } else {
        (None, Some(format!("|Z^{n}| = {z_order} exceeds the enumeration cap {cap}; representatives omitted")))
    };
    Ok(CohomologyGroup { degree: n, z_order, b_order, h_order, divisors, representatives, note })
}

/// Lexicographically least cocycle in each class.
fn representatives(cx: &Complex, n: usize, here: &Coords, z: &mut ModLattice, b: &mut ModLattice) -> Vec<Cochain> {
    let box_reduce = |v: &[i64]| -> Vec<i64> { v.iter().zip(&here.divisors).map(|(&x, &d)| x.rem_euclid(d as i64)).collect() };
    // Z/L_A as a subgroup of ⊕ Z/d_i, closed under each basis row of Z.
    let mut seen: HashSet<Vec<i64>> = HashSet::from([vec![0; here.slots.len()]]);
    let mut elems: Vec<Vec<i64>> = vec![vec![0; here.slots.len()]];
    for row in z.basis() {
        let row = box_reduce(&row);
        let mut frontier = elems.clone();
        loop {
            let mut fresh = Vec::new();
            for v in &frontier {
                let w = box_reduce(&v.iter().zip(&row).map(|(a, b)| a + b).collect::<Vec<_>>());
                if seen.insert(w.clone()) {
                    fresh.push(w);
                }
            }
            if fresh.is_empty() {
                break;
            }
            elems.extend(fresh.iter().cloned());
            frontier = fresh;
        }
    }
    let mut best: BTreeMap<Vec<i64>, Cochain> = BTreeMap::new();
    for v in elems {
        let f = here.cochain(cx, n, &v);
        let key = b.reduce(&v);
        match best.get(&key) {
            Some(g) if g.values <= f.values => {}
            _ => {
                best.insert(key, f);
            }
        }
    }
    let mut reps: Vec<Cochain> = best.into_values().collect();
    reps.sort();
    reps
}

/// Membership test for `Bⁿ` without enumerating `Cⁿ⁻¹`.
pub struct Boundaries {
    coords: Coords,
    lattice: ModLattice,
}

impl Boundaries {
    pub(crate) fn new(cx: &Complex, n: usize) -> Boundaries {
        assert!(n > 0, "B^0 is trivial");
        let here = Coords::new(cx, n);
        let prev = Coords::new(cx, n - 1);
        let modulus = lcm(here.exponent(), prev.exponent());
        let mut lattice = here.diagonal(modulus);
        for col in delta_columns(cx, n - 1, &prev, &here) {
            lattice.add(&col);
        }
        Boundaries { coords: here, lattice }
    }

    /// `f ∈ Bⁿ`; `f` must be a valid cochain.
    pub fn contains(&mut self, f: &Cochain) -> bool {
        let v = self.coords.of(f);
        self.lattice.contains(&v)
    }
}
