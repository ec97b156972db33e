//! `PicS` as a semilattice of finite abelian groups. The concrete layer has
//! one trivial group per idempotent; the symbolic layer takes arbitrary
//! groups and structural maps.

use crate::error::{Error, Result};
use crate::report::{first_violation, ValidationReport};
use crate::ring::Ring;
use serde::Serialize;
use std::collections::BTreeMap;

/// Integer matrix `rows = target coordinates`, `cols = source coordinates`.
pub type Matrix = Vec<Vec<i64>>;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PicSElement {
    pub comp: usize,
    pub a: Vec<u64>,
}

#[derive(Clone, Debug)]
pub struct PicSMonoid {
    pub labels: Vec<String>,
    /// `meet[e][f]` is the component of `ef`.
    pub meet: Vec<Vec<usize>>,
    /// Elementary divisors of each component group.
    pub groups: Vec<Vec<u64>>,
    /// `ε_{e,f}` for `e > f`.
    pub eps: BTreeMap<(usize, usize), Matrix>,
    pub top: usize,
    pub bottom: usize,
}

pub(crate) fn apply_matrix(m: &Matrix, x: &[u64], target: &[u64]) -> Vec<u64> {
    target
        .iter()
        .enumerate()
        .map(|(j, &d)| {
            let s: i128 = m[j].iter().zip(x).map(|(&c, &v)| c as i128 * v as i128).sum();
            s.rem_euclid(d as i128) as u64
        })
        .collect()
}

pub(crate) fn identity_matrix(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| (i == j) as i64).collect()).collect()
}

impl PicSMonoid {
    /// Concrete `PicS(R)`: components are the idempotents of `R`, every
    /// `Pic(Re)` is trivial.
    pub fn concrete(r: &Ring) -> PicSMonoid {
        let ids = r.idempotents().to_vec();
        let pos = |x| ids.iter().position(|&e| e == x).expect("idempotents close under product");
        let meet = ids.iter().map(|&e| ids.iter().map(|&f| pos(r.mul(e, f))).collect()).collect();
        let labels = ids.iter().map(|&e| format!("[R{}]", r.show(e))).collect();
        let top = pos(r.one());
        let bottom = pos(r.zero());
        let n = ids.len();
        let mut eps = BTreeMap::new();
        for e in 0..n {
            for f in 0..n {
                if e != f && r.mul(ids[e], ids[f]) == ids[f] {
                    eps.insert((e, f), Vec::new());
                }
            }
        }
        PicSMonoid { labels, meet, groups: vec![Vec::new(); n], eps, top, bottom }
    }

    /// Validates the semilattice and the structural maps, then builds.
    pub fn symbolic(labels: Vec<String>, meet: Vec<Vec<usize>>, groups: Vec<Vec<u64>>, eps: BTreeMap<(usize, usize), Matrix>) -> Result<PicSMonoid> {
        let n = labels.len();
        if n == 0 || meet.len() != n || meet.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) || groups.len() != n {
            return Err(Error::malformed("meet table and groups must match the component list"));
        }
        if groups.iter().flatten().any(|&d| d < 2) {
            return Err(Error::malformed("group divisors must be at least 2"));
        }
        for e in 0..n {
            if meet[e][e] != e {
                return Err(Error::malformed(format!("meet is not idempotent at {}", labels[e])));
            }
            for f in 0..n {
                if meet[e][f] != meet[f][e] {
                    return Err(Error::malformed(format!("meet is not commutative at ({},{})", labels[e], labels[f])));
                }
                for h in 0..n {
                    if meet[meet[e][f]][h] != meet[e][meet[f][h]] {
                        return Err(Error::malformed(format!("meet is not associative at ({},{},{})", labels[e], labels[f], labels[h])));
                    }
                }
            }
        }
        let top = (0..n).find(|&e| (0..n).all(|f| meet[e][f] == f)).ok_or_else(|| Error::malformed("no top component"))?;
        let bottom = (0..n).find(|&e| (0..n).all(|f| meet[e][f] == e)).ok_or_else(|| Error::malformed("no bottom component"))?;
        if !groups[bottom].is_empty() {
            return Err(Error::malformed(format!("the bottom component {} must carry the trivial group", labels[bottom])));
        }
        let m = PicSMonoid { labels, meet, groups, eps, top, bottom };
        for e in 0..n {
            for f in 0..n {
                if e == f || !m.leq(f, e) {
                    if m.eps.contains_key(&(e, f)) {
                        return Err(Error::malformed(format!("eps_({},{}) given but {} is not below {}", m.labels[e], m.labels[f], m.labels[f], m.labels[e])));
                    }
                    continue;
                }
                let mat = m.eps.get(&(e, f)).ok_or_else(|| Error::malformed(format!("missing eps_({},{})", m.labels[e], m.labels[f])))?;
                if mat.len() != m.groups[f].len() || mat.iter().any(|row| row.len() != m.groups[e].len()) {
                    return Err(Error::malformed(format!("eps_({},{}) has the wrong shape", m.labels[e], m.labels[f])));
                }
                // each generator's order must be killed by the image
                for (i, &d) in m.groups[e].iter().enumerate() {
                    let mut unit = vec![0u64; m.groups[e].len()];
                    unit[i] = 1;
                    let img = apply_matrix(mat, &unit, &m.groups[f]);
                    if img.iter().zip(&m.groups[f]).any(|(&v, &t)| (v as u128 * d as u128) % t as u128 != 0) {
                        return Err(Error::malformed(format!("eps_({},{}) is not a homomorphism", m.labels[e], m.labels[f])));
                    }
                }
            }
        }
        for e in 0..n {
            for f in 0..n {
                for h in 0..n {
                    if !(m.leq(f, e) && m.leq(h, f)) {
                        continue;
                    }
                    for x in m.component_elements(e) {
                        let two = m.eps_apply(f, h, &m.eps_apply(e, f, &x));
                        if two != m.eps_apply(e, h, &x) {
                            return Err(Error::malformed(format!(
                                "eps_({},{}) eps_({},{}) != eps_({},{}) at {:?}",
                                m.labels[f], m.labels[h], m.labels[e], m.labels[f], m.labels[e], m.labels[h], x
                            )));
                        }
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn components(&self) -> usize {
        self.labels.len()
    }

    /// `f ≤ e` in the semilattice.
    pub fn leq(&self, f: usize, e: usize) -> bool {
        self.meet[e][f] == f
    }

    pub fn eps_apply(&self, e: usize, f: usize, x: &[u64]) -> Vec<u64> {
        if e == f {
            return x.to_vec();
        }
        apply_matrix(&self.eps[&(e, f)], x, &self.groups[f])
    }

    pub fn component_elements(&self, e: usize) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new()];
        for &d in &self.groups[e] {
            out = out.into_iter().flat_map(|v: Vec<u64>| (0..d).map(move |k| [v.clone(), vec![k]].concat())).collect();
        }
        out
    }

    pub fn elements(&self) -> Vec<PicSElement> {
        (0..self.components()).flat_map(|e| self.component_elements(e).into_iter().map(move |a| PicSElement { comp: e, a })).collect()
    }

    /// The class `[e]`: identity of its component.
    pub fn idem(&self, e: usize) -> PicSElement {
        PicSElement { comp: e, a: vec![0; self.groups[e].len()] }
    }

    pub fn one(&self) -> PicSElement {
        self.idem(self.top)
    }

    pub fn zero(&self) -> PicSElement {
        self.idem(self.bottom)
    }

    /// `(e,a)(f,b) = (ef, ε_{e,ef}(a) + ε_{f,ef}(b))`.
    pub fn mul(&self, x: &PicSElement, y: &PicSElement) -> PicSElement {
        let c = self.meet[x.comp][y.comp];
        let (a, b) = (self.eps_apply(x.comp, c, &x.a), self.eps_apply(y.comp, c, &y.a));
        let a = a.iter().zip(&b).zip(&self.groups[c]).map(|((&u, &v), &d)| (u + v) % d).collect();
        PicSElement { comp: c, a }
    }

    pub fn star(&self, x: &PicSElement) -> PicSElement {
        let a = x.a.iter().zip(&self.groups[x.comp]).map(|(&u, &d)| (d - u) % d).collect();
        PicSElement { comp: x.comp, a }
    }

    pub fn show(&self, x: &PicSElement) -> String {
        if x.a.iter().all(|&v| v == 0) {
            self.labels[x.comp].clone()
        } else {
            format!("({}, {:?})", self.labels[x.comp], x.a)
        }
    }

    /// Commutative inverse monoid with zero, checked on all elements.
    pub fn verify(&self) -> ValidationReport {
        let els = self.elements();
        let pairs: Vec<(&PicSElement, &PicSElement)> = els.iter().flat_map(|x| els.iter().map(move |y| (x, y))).collect();
        let mut rep = ValidationReport::new();
        rep.record("commutative", first_violation(pairs.iter(), |&&(x, y)| self.mul(x, y) == self.mul(y, x), |&&(x, y)| format!("{} {}", self.show(x), self.show(y))));
        rep.record(
            "associative",
            first_violation(pairs.iter().flat_map(|&(x, y)| els.iter().map(move |z| (x, y, z))), |&(x, y, z)| {
                self.mul(&self.mul(x, y), z) == self.mul(x, &self.mul(y, z))
            }, |&(x, y, z)| format!("{} {} {}", self.show(x), self.show(y), self.show(z))),
        );
        let one = self.one();
        let zero = self.zero();
        rep.record("identity", first_violation(els.iter(), |x| self.mul(&one, x) == **x, |x| self.show(x)));
        rep.record("zero absorbs", first_violation(els.iter(), |x| self.mul(&zero, x) == zero, |x| self.show(x)));
        rep.record(
            "x x* x = x and x* x x* = x*",
            first_violation(els.iter(), |x| {
                let s = self.star(x);
                self.mul(&self.mul(x, &s), x) == **x && self.mul(&self.mul(&s, x), &s) == s
            }, |x| self.show(x)),
        );
        let idems: Vec<&PicSElement> = els.iter().filter(|x| self.mul(x, x) == **x).collect();
        rep.record(
            "idempotents are the component identities",
            first_violation(idems.iter(), |x| x.a.iter().all(|&v| v == 0), |x| self.show(x)),
        );
        rep.record(
            "inverses unique",
            first_violation(els.iter(), |x| {
                els.iter().filter(|y| self.mul(&self.mul(x, y), x) == **x && self.mul(&self.mul(y, x), y) == **y).count() == 1
            }, |x| self.show(x)),
        );
        rep.record(
            "units = component of the identity",
            first_violation(els.iter(), |x| els.iter().any(|y| self.mul(x, y) == one) == (x.comp == self.top), |x| self.show(x)),
        );
        rep
    }
}
