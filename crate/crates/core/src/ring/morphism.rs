//! Candidate ring morphisms between ideals, stored as value tables.

use super::{Elem, Ring};
use crate::error::{Error, Result};
use crate::report::ValidationReport;
use std::collections::BTreeMap;

/// The ideal of `ring` generated by the idempotent `identity`.
#[derive(Clone, Copy, Debug)]
pub struct Carrier<'a> {
    pub ring: &'a Ring,
    pub identity: Elem,
}

impl<'a> Carrier<'a> {
    pub fn whole(ring: &'a Ring) -> Self {
        Carrier { ring, identity: ring.one() }
    }

    pub fn elements(&self) -> Vec<Elem> {
        self.ring.ideal(self.identity).elements
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.ring.in_ideal(x, self.identity)
    }
}

#[derive(Clone, Debug)]
pub struct RingMorphism<'a> {
    pub source: Carrier<'a>,
    pub target: Carrier<'a>,
    pub table: BTreeMap<Elem, Elem>,
    /// Whether bijectivity is part of the claim.
    pub bijective: bool,
}

impl<'a> RingMorphism<'a> {
    pub fn from_fn(source: Carrier<'a>, target: Carrier<'a>, f: impl Fn(Elem) -> Elem, bijective: bool) -> Self {
        let table = source.elements().into_iter().map(|x| (x, f(x))).collect();
        RingMorphism { source, target, table, bijective }
    }

    pub fn apply(&self, x: Elem) -> Option<Elem> {
        self.table.get(&x).copied()
    }
}

/// Checks additivity, multiplicativity, unitality, codomain membership and
/// (when claimed) bijectivity, reporting a witness for each violation.
pub fn check_morphism(m: &RingMorphism<'_>) -> Result<ValidationReport> {
    let src = m.source.elements();
    if let Some(x) = src.iter().find(|x| !m.table.contains_key(x)) {
        return Err(Error::pre(format!("table misses source element {}", m.source.ring.show(*x))));
    }
    let (s, t) = (m.source.ring, m.target.ring);
    let f = |x: Elem| m.table[&x];
    let mut rep = ValidationReport::new();
    rep.record(
        "codomain",
        src.iter().find(|&&x| !m.target.contains(f(x))).map(|&x| format!("{} -> {}", s.show(x), t.show(f(x)))),
    );
    let mut add_fail = None;
    let mut mul_fail = None;
    'outer: for &a in &src {
        for &b in &src {
            if add_fail.is_none() && f(s.add(a, b)) != t.add(f(a), f(b)) {
                add_fail = Some(format!("({}, {})", s.show(a), s.show(b)));
            }
            if mul_fail.is_none() && f(s.mul(a, b)) != t.mul(f(a), f(b)) {
                mul_fail = Some(format!("({}, {})", s.show(a), s.show(b)));
            }
            if add_fail.is_some() && mul_fail.is_some() {
                break 'outer;
            }
        }
    }
    rep.record("additivity", add_fail);
    rep.record("multiplicativity", mul_fail);
    let one = f(m.source.identity);
    rep.record(
        "unitality",
        (one != m.target.identity).then(|| format!("{} -> {} (expected {})", s.show(m.source.identity), t.show(one), t.show(m.target.identity))),
    );
    if m.bijective {
        let mut seen = BTreeMap::new();
        let mut fail = None;
        for &x in &src {
            if let Some(prev) = seen.insert(f(x), x) {
                fail = Some(format!("{} and {} both map to {}", s.show(prev), s.show(x), t.show(f(x))));
                break;
            }
        }
        let tgt = m.target.elements();
        if fail.is_none() && seen.len() != tgt.len() {
            let missing = tgt.into_iter().find(|y| !seen.contains_key(y)).map(|y| t.show(y)).unwrap_or_default();
            fail = Some(format!("{missing} not in the image"));
        }
        rep.record("bijectivity", fail);
    }
    Ok(rep)
}
