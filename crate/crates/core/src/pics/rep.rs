//! Partial representations: the axioms, `Φ₀`, and `Φ_f = fΦ₀` in the
//! combined monoid of pairs `(g, P)` standing for `P ⊗ _g(D_{g⁻¹})`.

use super::action::PicSAction;
use super::bimodule::{Twisted, TwistedIdempotents};
use super::monoid::PicSElement;
use crate::action::PartialAction;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::report::{first_violation, ValidationReport};

/// A monoid that partial representations can land in.
pub trait RepTarget {
    type El: Clone;
    fn one(&self) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    /// Equality of the classes the elements stand for.
    fn same(&self, a: &Self::El, b: &Self::El) -> bool;
    fn show(&self, a: &Self::El) -> String;
}

/// Partial representation axioms: both triple identities on all pairs
/// and `Φ(1) = 1`.
pub fn validate_partial_rep<M: RepTarget>(m: &M, grp: &FiniteGroup, phi: &[M::El]) -> ValidationReport {
    let mut rep = ValidationReport::new();
    if phi.len() != grp.order() {
        rep.fail("defined on G", format!("{} values for {} elements", phi.len(), grp.order()));
        return rep;
    }
    let pairs = || grp.elements().flat_map(|g| grp.elements().map(move |h| (g, h)));
    let show = |&(g, h): &(usize, usize)| format!("(g,h) = ({},{})", grp.label(g), grp.label(h));
    rep.record(
        "(i) Phi(g^-1)Phi(g)Phi(h) = Phi(g^-1)Phi(gh)",
        first_violation(pairs(), |&(g, h)| {
            let gi = &phi[grp.inv(g)];
            m.same(&m.mul(&m.mul(gi, &phi[g]), &phi[h]), &m.mul(gi, &phi[grp.mul(g, h)]))
        }, show),
    );
    rep.record(
        "(ii) Phi(g)Phi(h)Phi(h^-1) = Phi(gh)Phi(h^-1)",
        first_violation(pairs(), |&(g, h)| {
            let hi = &phi[grp.inv(h)];
            m.same(&m.mul(&m.mul(&phi[g], &phi[h]), hi), &m.mul(&phi[grp.mul(g, h)], hi))
        }, show),
    );
    rep.record("(iii) Phi(1) = 1", (!m.same(&phi[0], &m.one())).then(|| format!("Phi(1) = {}", m.show(&phi[0]))));
    rep
}

/// `Φ₀(g) = (g, 1_{g⁻¹})`.
pub fn phi0(pa: &PartialAction) -> Vec<Twisted> {
    pa.group.elements().map(|g| (g, pa.one(pa.group.inv(g)))).collect()
}

/// `Φ₀(g)Φ₀(g⁻¹) = (1, 1_g)` for every `g`, on top of the axioms.
pub fn check_phi0(pa: &PartialAction) -> ValidationReport {
    let m = TwistedIdempotents::new(pa);
    let grp = &*pa.group;
    let phi = phi0(pa);
    let mut rep = validate_partial_rep(&m, grp, &phi);
    rep.record(
        "Phi(g)Phi(g^-1) = [D_g]",
        first_violation(grp.elements(), |&g| m.same(&m.mul(&phi[g], &phi[grp.inv(g)]), &(0, pa.one(g))), |&g| grp.label(g).to_string()),
    );
    rep
}

/// `(g, P)` with `P ∈ X_g`.
pub type Combined = (usize, PicSElement);

pub struct CombinedMonoid<'a> {
    pub act: &'a PicSAction,
}

impl RepTarget for CombinedMonoid<'_> {
    type El = Combined;

    fn one(&self) -> Combined {
        (0, self.act.monoid.one())
    }

    /// `(g,P)(h,Q) = (gh, P α*_g(Q[D_{g⁻¹}]) [D_{gh}])`.
    fn mul(&self, (g, p): &Combined, (h, q): &Combined) -> Combined {
        let (m, grp) = (&self.act.monoid, &*self.act.group);
        let gh = grp.mul(*g, *h);
        let moved = self.act.apply(*g, &m.mul(q, &self.act.d(grp.inv(*g)))).expect("cut into X_g^-1");
        (gh, m.mul(&m.mul(p, &moved), &self.act.d(gh)))
    }

    fn same(&self, (g, p): &Combined, (h, q): &Combined) -> bool {
        p == q && (g == h || p.comp == self.act.monoid.bottom)
    }

    fn show(&self, (g, p): &Combined) -> String {
        format!("({}, {})", self.act.group.label(*g), self.act.monoid.show(p))
    }
}

impl CombinedMonoid<'_> {
    /// `[E]` as `(1, [E])`.
    pub fn class(&self, x: &PicSElement) -> Combined {
        (0, x.clone())
    }
}

/// `Φ₀(g) = (g, [D_g])` in the combined monoid.
pub fn phi0_combined(act: &PicSAction) -> Vec<Combined> {
    act.group.elements().map(|g| (g, act.d(g))).collect()
}

/// `Φ_f(g) = f(g)Φ₀(g)`.
pub fn phi_f(act: &PicSAction, f: &[PicSElement]) -> Result<Vec<Combined>> {
    if !act.is_cocycle(f) {
        return Err(Error::pre("f is not a PicS 1-cocycle"));
    }
    Ok(act.group.elements().map(|g| (g, f[g].clone())).collect())
}

/// Axioms, `Φ(g)Φ(g⁻¹) = [D_g]`, and for `Φ₀` also `Φ₀(g)[D_h] = [D_{gh}]Φ₀(g)`.
pub fn check_rep(act: &PicSAction, phi: &[Combined], is_phi0: bool) -> ValidationReport {
    let m = CombinedMonoid { act };
    let grp = &*act.group;
    let mut rep = validate_partial_rep(&m, grp, phi);
    rep.record(
        "Phi(g)Phi(g^-1) = [D_g]",
        first_violation(grp.elements(), |&g| m.same(&m.mul(&phi[g], &phi[grp.inv(g)]), &m.class(&act.d(g))), |&g| grp.label(g).to_string()),
    );
    if is_phi0 {
        rep.record(
            "Phi0(g)[D_h] = [D_gh]Phi0(g)",
            first_violation(grp.elements().flat_map(|g| grp.elements().map(move |h| (g, h))), |&(g, h)| {
                m.same(&m.mul(&phi[g], &m.class(&act.d(h))), &m.mul(&m.class(&act.d(grp.mul(g, h))), &phi[g]))
            }, |&(g, h)| format!("(g,h) = ({},{})", grp.label(g), grp.label(h))),
        );
    }
    rep
}
