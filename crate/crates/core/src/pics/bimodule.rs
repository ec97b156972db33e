//! Classes of the twisted bimodules `_g(Re)` with `e ≤ 1_{g⁻¹}`, their
//! product rule, and a brute-force tensor-product oracle for the rule.

use super::rep::RepTarget;
use crate::action::PartialAction;
use crate::lattice::ModLattice;
use crate::ring::Elem;
use std::collections::HashMap;

/// `(g, e)`: the set `Re` with `r∗m = α_{g⁻¹}(r1_g)m` and `m·r = mr`.
pub type Twisted = (usize, Elem);

pub struct TwistedIdempotents<'a> {
    pub pa: &'a PartialAction,
}

impl<'a> TwistedIdempotents<'a> {
    pub fn new(pa: &'a PartialAction) -> Self {
        TwistedIdempotents { pa }
    }

    pub fn elements(&self) -> Vec<Twisted> {
        let (r, grp) = (&*self.pa.ring, &*self.pa.group);
        grp.elements()
            .flat_map(|g| {
                let dom = self.pa.one(grp.inv(g));
                r.idempotents().iter().filter(move |&&e| r.mul(e, dom) == e).map(move |&e| (g, e)).collect::<Vec<_>>()
            })
            .collect()
    }

    /// `r∗m` in `_g(Re)`.
    pub fn left(&self, g: usize, r: Elem, m: Elem) -> Elem {
        let ring = &*self.pa.ring;
        ring.mul(self.pa.cut(self.pa.group.inv(g), r), m)
    }
}

impl RepTarget for TwistedIdempotents<'_> {
    type El = Twisted;

    fn one(&self) -> Twisted {
        (0, self.pa.ring.one())
    }

    /// `(g,e)(h,f) = (gh, α_{h⁻¹}(e1_h)f)`.
    fn mul(&self, &(g, e): &Twisted, &(h, f): &Twisted) -> Twisted {
        let (r, grp) = (&*self.pa.ring, &*self.pa.group);
        (grp.mul(g, h), r.mul(self.pa.cut(grp.inv(h), e), f))
    }

    /// Same idempotent and the same left action on it.
    fn same(&self, &(g, e): &Twisted, &(h, f): &Twisted) -> bool {
        e == f && (g == h || self.pa.ring.elements().all(|r| self.left(g, r, e) == self.left(h, r, e)))
    }

    fn show(&self, &(g, e): &Twisted) -> String {
        format!("({}, {})", self.pa.label(g), self.pa.ring.show(e))
    }
}

#[derive(Clone, Debug)]
pub struct TensorOutcome {
    /// `|M ⊗_R N|` as computed from generators and relations.
    pub size: usize,
    pub rule: Twisted,
    /// A bimodule isomorphism `Rk → M ⊗_R N` exists.
    pub matches: bool,
}

/// Builds `_g(Re) ⊗_R _h(Rf)` as the free abelian group on pairs modulo
/// biadditivity and balancing, then searches for a bimodule isomorphism with
/// the bimodule the product rule predicts.
pub fn tensor_oracle(pa: &PartialAction, x: Twisted, y: Twisted) -> TensorOutcome {
    let rule = TwistedIdempotents::new(pa).mul(&x, &y);
    tensor_matches(pa, x, y, rule)
}

/// As [`tensor_oracle`] but against an arbitrary claimed product.
pub fn tensor_matches(pa: &PartialAction, x: Twisted, y: Twisted, rule: Twisted) -> TensorOutcome {
    let tw = TwistedIdempotents::new(pa);
    let ring = &*pa.ring;
    let ((g, e), (h, f)) = (x, y);
    let m1 = ring.ideal(e).elements;
    let m2 = ring.ideal(f).elements;
    let p1: HashMap<Elem, usize> = m1.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let p2: HashMap<Elem, usize> = m2.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let dim = m1.len() * m2.len();
    let gen = |a: Elem, b: Elem| p1[&a] * m2.len() + p2[&b];
    let mut lat = ModLattice::new(dim, ring.characteristic());
    let rel = |lat: &mut ModLattice, plus: &[usize], minus: &[usize]| {
        let mut v = vec![0i64; dim];
        for &i in plus {
            v[i] += 1;
        }
        for &i in minus {
            v[i] -= 1;
        }
        lat.add(&v);
    };
    for &a in &m1 {
        for &a2 in &m1 {
            for &b in &m2 {
                rel(&mut lat, &[gen(ring.add(a, a2), b)], &[gen(a, b), gen(a2, b)]);
            }
        }
    }
    for &a in &m1 {
        for &b in &m2 {
            for &b2 in &m2 {
                rel(&mut lat, &[gen(a, ring.add(b, b2))], &[gen(a, b), gen(a, b2)]);
            }
            for r in ring.elements() {
                rel(&mut lat, &[gen(ring.mul(a, r), b)], &[gen(a, tw.left(h, r, b))]);
            }
        }
    }
    let reps = lat.quotient_elements();
    let act = |lat: &mut ModLattice, v: &[i64], op: &dyn Fn(Elem, Elem) -> (Elem, Elem)| {
        let mut out = vec![0i64; dim];
        for (i, &c) in v.iter().enumerate() {
            if c != 0 {
                let (a, b) = op(m1[i / m2.len()], m2[i % m2.len()]);
                out[gen(a, b)] += c;
            }
        }
        lat.reduce(&out)
    };
    let (gh, k) = rule;
    let target = ring.ideal(k).elements;
    let mut matches = false;
    if target.len() == reps.len() {
        'cand: for t in &reps {
            // φ(k r) = t·r
            let mut phi: HashMap<Elem, Vec<i64>> = HashMap::new();
            for r in ring.elements() {
                let img = act(&mut lat, t, &|a, b| (a, ring.mul(b, r)));
                if phi.insert(ring.mul(k, r), img.clone()).is_some_and(|old| old != img) {
                    continue 'cand;
                }
            }
            let mut imgs: Vec<&Vec<i64>> = phi.values().collect();
            imgs.sort();
            imgs.dedup();
            if imgs.len() != target.len() {
                continue;
            }
            for &m in &target {
                for r in ring.elements() {
                    let lhs = phi[&tw.left(gh, r, m)].clone();
                    let rhs = act(&mut lat, &phi[&m], &|a, b| (tw.left(g, r, a), b));
                    if lhs != rhs {
                        continue 'cand;
                    }
                }
            }
            matches = true;
            break;
        }
    }
    TensorOutcome { size: reps.len(), rule, matches }
}
