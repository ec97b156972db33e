//! Unital (twisted) partial actions of finite groups on finite rings.
//!
//! `α_g` is stored as a full value table on `D_{g⁻¹}`; `cut(g, x)` is the
//! total map `x ↦ α_g(x·1_{g⁻¹})` that most formulas use.

mod doc;
mod fixtures;
mod galois;
mod restrict;
mod subring;
mod tensor;
mod twisting;

pub use doc::{content_hash, ActionDoc, AlphaEntry, CoordsDoc, LoadedExtension, TwistEntry};
pub use fixtures::*;
pub use galois::{check_galois_coordinates, find_galois_coordinates, GaloisCoordinates, GaloisExtension};
pub use restrict::restrict_global_action;
pub use subring::Subring;
pub use tensor::{tensor_extensions, TensorExtension};
pub use twisting::validate_twisting;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::report::{first_violation, ValidationReport};
use crate::ring::{check_morphism, Carrier, Elem, Ring, RingMorphism};
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct PartialAction {
    pub ring: Arc<Ring>,
    pub group: Arc<FiniteGroup>,
    ones: Vec<Elem>,
    /// `tables[g][x]` is `α_g(x)` for `x ∈ D_{g⁻¹}`.
    tables: Vec<Vec<Option<Elem>>>,
}

impl PartialAction {
    /// Builds from explicit tables, checking that `1_g` are idempotents, each
    /// table covers exactly `D_{g⁻¹}` and lands in `D_g`.
    pub fn new(ring: Arc<Ring>, group: Arc<FiniteGroup>, ones: Vec<Elem>, tables: Vec<Vec<(Elem, Elem)>>) -> Result<PartialAction> {
        let n = group.order();
        if ones.len() != n || tables.len() != n {
            return Err(Error::malformed(format!("expected data for {n} group elements")));
        }
        for (g, &e) in ones.iter().enumerate() {
            if !ring.is_idempotent(e) {
                return Err(Error::malformed(format!("1_{} = {} is not idempotent", group.label(g), ring.show(e))));
            }
        }
        let mut dense = Vec::with_capacity(n);
        for (g, pairs) in tables.into_iter().enumerate() {
            let dom = ones[group.inv(g)];
            let mut t = vec![None; ring.size()];
            for (src, dst) in pairs {
                if !ring.in_ideal(src, dom) {
                    return Err(Error::malformed(format!(
                        "alpha_{} given on {} outside D_{}",
                        group.label(g),
                        ring.show(src),
                        group.label(group.inv(g))
                    )));
                }
                if !ring.in_ideal(dst, ones[g]) {
                    return Err(Error::malformed(format!(
                        "alpha_{}({}) = {} lies outside D_{}",
                        group.label(g),
                        ring.show(src),
                        ring.show(dst),
                        group.label(g)
                    )));
                }
                if t[src.0 as usize].replace(dst).is_some_and(|old| old != dst) {
                    return Err(Error::malformed(format!("alpha_{} has two values at {}", group.label(g), ring.show(src))));
                }
            }
            if let Some(x) = ring.ideal(dom).elements.into_iter().find(|x| t[x.0 as usize].is_none()) {
                return Err(Error::malformed(format!("alpha_{} missing a value at {}", group.label(g), ring.show(x))));
            }
            dense.push(t);
        }
        Ok(PartialAction { ring, group, ones, tables: dense })
    }

    /// Builds from a rule `(g, x) ↦ α_g(x)` evaluated on each `D_{g⁻¹}`.
    pub fn from_fn(ring: Arc<Ring>, group: Arc<FiniteGroup>, ones: Vec<Elem>, f: impl Fn(usize, Elem) -> Elem) -> Result<PartialAction> {
        let tables = group
            .elements()
            .map(|g| ring.ideal(ones[group.inv(g)]).elements.into_iter().map(|x| (x, f(g, x))).collect())
            .collect();
        PartialAction::new(ring, group, ones, tables)
    }

    /// Global action: every `1_g = 1`.
    pub fn global(ring: Arc<Ring>, group: Arc<FiniteGroup>, f: impl Fn(usize, Elem) -> Elem) -> Result<PartialAction> {
        let ones = vec![ring.one(); group.order()];
        PartialAction::from_fn(ring, group, ones, f)
    }

    /// The trivial group acting on `ring`.
    pub fn trivial(ring: Arc<Ring>) -> PartialAction {
        PartialAction::global(ring, Arc::new(FiniteGroup::trivial()), |_, x| x).expect("trivial action")
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    #[inline]
    pub fn one(&self, g: usize) -> Elem {
        self.ones[g]
    }

    pub fn ones(&self) -> &[Elem] {
        &self.ones
    }

    /// `α_g(x)` for `x ∈ D_{g⁻¹}`.
    #[inline]
    pub fn alpha(&self, g: usize, x: Elem) -> Elem {
        self.tables[g][x.0 as usize].unwrap_or_else(|| panic!("alpha_{g} applied outside its domain"))
    }

    /// `α_g(x·1_{g⁻¹})`.
    #[inline]
    pub fn cut(&self, g: usize, x: Elem) -> Elem {
        self.alpha(g, self.ring.mul(x, self.ones[self.group.inv(g)]))
    }

    /// Table pairs `(x, α_g(x))` over `D_{g⁻¹}`, canonical order.
    pub fn table(&self, g: usize) -> Vec<(Elem, Elem)> {
        self.tables[g].iter().enumerate().filter_map(|(i, v)| v.map(|y| (Elem(i as u32), y))).collect()
    }

    /// Replaces `α_g` by another table on the same domain (used to build
    /// deliberately broken instances).
    pub fn with_alpha(&self, g: usize, f: impl Fn(Elem) -> Elem) -> PartialAction {
        let mut out = self.clone();
        for (i, v) in out.tables[g].iter_mut().enumerate() {
            if v.is_some() {
                *v = Some(f(Elem(i as u32)));
            }
        }
        out
    }

    pub fn label(&self, g: usize) -> &str {
        self.group.label(g)
    }

    /// Axioms (i)–(iii) plus the composition identity and its idempotent form.
    pub fn validate(&self) -> ValidationReport {
        let (r, grp) = (&*self.ring, &*self.group);
        let n = grp.order();
        let mut rep = ValidationReport::new();
        rep.record(
            "(i) 1_1 = 1",
            (self.ones[0] != r.one()).then(|| format!("1_1 = {}", r.show(self.ones[0]))),
        );
        rep.record(
            "(i) alpha_1 = id",
            first_violation(r.elements(), |&x| self.alpha(0, x) == x, |&x| format!("alpha_1({}) = {}", r.show(x), r.show(self.alpha(0, x)))),
        );
        for g in 0..n {
            let m = RingMorphism::from_fn(
                Carrier { ring: r, identity: self.ones[grp.inv(g)] },
                Carrier { ring: r, identity: self.ones[g] },
                |x| self.alpha(g, x),
                true,
            );
            let sub = check_morphism(&m).expect("table covers its domain");
            for c in sub.checks {
                rep.record(format!("alpha_{} {}", grp.label(g), c.name), c.witness);
            }
        }
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|g| (0..n).map(move |h| (g, h))).collect();
        let show_gh = |&(g, h): &(usize, usize)| format!("(g,h) = ({},{})", grp.label(g), grp.label(h));
        rep.record(
            "(ii) alpha_g(D_g^-1 D_h) = D_g D_gh",
            first_violation(
                pairs.iter(),
                |&&(g, h)| {
                    let src = r.mul(self.ones[grp.inv(g)], self.ones[h]);
                    let dst = r.mul(self.ones[g], self.ones[grp.mul(g, h)]);
                    let mut img: Vec<Elem> = r.ideal(src).elements.iter().map(|&x| self.alpha(g, x)).collect();
                    img.sort();
                    img.dedup();
                    img == r.ideal(dst).elements
                },
                |p| show_gh(p),
            ),
        );
        rep.record(
            "(iii) alpha_g alpha_h = alpha_gh on D_h^-1 D_(gh)^-1",
            first_violation(
                pairs.iter(),
                |&&(g, h)| {
                    let gh = grp.mul(g, h);
                    let dom = r.mul(self.ones[grp.inv(h)], self.ones[grp.inv(gh)]);
                    r.ideal(dom).elements.iter().all(|&x| {
                        let y = self.alpha(h, x);
                        r.in_ideal(y, self.ones[grp.inv(g)]) && self.alpha(g, y) == self.alpha(gh, x)
                    })
                },
                |p| show_gh(p),
            ),
        );
        rep.record(
            "composition identity alpha_g(alpha_h(y1_h^-1)1_g^-1) = alpha_gh(y1_(gh)^-1)1_g",
            first_violation(
                pairs.iter(),
                |&&(g, h)| {
                    let gh = grp.mul(g, h);
                    r.elements().all(|y| self.cut(g, self.cut(h, y)) == r.mul(self.cut(gh, y), self.ones[g]))
                },
                |p| show_gh(p),
            ),
        );
        rep.record(
            "alpha_g(1_h 1_g^-1) = 1_g 1_gh",
            first_violation(
                pairs.iter(),
                |&&(g, h)| self.cut(g, self.ones[h]) == r.mul(self.ones[g], self.ones[grp.mul(g, h)]),
                |p| show_gh(p),
            ),
        );
        rep
    }

    /// `Rᵅ = { r : α_g(r1_{g⁻¹}) = r1_g ∀g }`.
    pub fn invariants(&self) -> Vec<Elem> {
        let r = &*self.ring;
        r.elements().filter(|&x| self.group.elements().all(|g| self.cut(g, x) == r.mul(x, self.ones[g]))).collect()
    }

    pub fn is_invariant(&self, x: Elem) -> bool {
        self.group.elements().all(|g| self.cut(g, x) == self.ring.mul(x, self.ones[g]))
    }

    pub fn invariant_subring(&self) -> Subring {
        Subring::new(self.ring.clone(), self.invariants()).expect("invariants form a subring")
    }

    /// `tr(x) = Σ_g α_g(x1_{g⁻¹})`.
    pub fn trace(&self, x: Elem) -> Elem {
        self.ring.sum(self.group.elements().map(|g| self.cut(g, x)))
    }
}

#[cfg(test)]
mod tests;
