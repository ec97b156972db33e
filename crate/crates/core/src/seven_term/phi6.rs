//! `φ₆`: a `PicS` 1-cocycle and isomorphisms `χ_{g,h}: J_g ⊗ J_h → D_g ⊗ J_gh`,
//! encoded by `ρ` on free generators, give the 3-cocycle `δ²(ρ⁻¹)`.
//!
//! The loop around the associativity square is also evaluated step by step
//! on words `c·u_{g₁} ⊗ ⋯ ⊗ u_{gₖ}`, so the closed form is checked against
//! an independent computation.

use crate::action::PartialAction;
use crate::cohomology::{Cochain, Complex};
use crate::error::{Error, Result};
use crate::pics::{alpha_star, PicSElement};
use crate::report::{first_violation, ValidationReport};
use crate::ring::Elem;

struct Word<'a> {
    pa: &'a PartialAction,
    coeff: Elem,
    slots: Vec<usize>,
}

impl Word<'_> {
    /// Moves `r`, sitting just before slot `pos`, to the front:
    /// `u_k r = α_k(r1_{k⁻¹}) u_k`.
    fn to_front(&self, mut r: Elem, pos: usize) -> Elem {
        for k in (0..pos).rev() {
            r = self.pa.cut(self.slots[k], r);
        }
        r
    }

    /// `u_a ⊗ u_b ↦ ρ(a,b) u_{ab}` at slots `pos, pos+1`.
    fn merge(&mut self, rho: &Cochain, pos: usize) {
        let (a, b) = (self.slots[pos], self.slots[pos + 1]);
        let n = self.pa.order();
        let c = self.to_front(rho.values[a * n + b], pos);
        self.coeff = self.pa.ring.mul(self.coeff, c);
        self.slots.splice(pos..pos + 2, [self.pa.group.mul(a, b)]);
    }

    /// `u_{ab} ↦ ρ(a,b)⁻¹ u_a ⊗ u_b` at slot `pos`.
    fn split(&mut self, rho_inv: &Cochain, pos: usize, a: usize, b: usize) {
        assert_eq!(self.slots[pos], self.pa.group.mul(a, b));
        let n = self.pa.order();
        let c = self.to_front(rho_inv.values[a * n + b], pos);
        self.coeff = self.pa.ring.mul(self.coeff, c);
        self.slots.splice(pos..pos + 1, [a, b]);
    }
}

/// The counterclockwise loop at `(g,h,l)`: split along `g·(hl)` then `h·l`,
/// merge along `(gh)·l`. The swap and regrouping steps of the diagram are
/// identities on these words.
pub fn phi6_loop(pa: &PartialAction, rho: &Cochain, g: usize, h: usize, l: usize) -> Elem {
    let cx = Complex::new(pa);
    let rho_inv = cx.inverse(rho);
    let grp = &*pa.group;
    let (hl, ghl) = (grp.mul(h, l), grp.mul(grp.mul(g, h), l));
    let mut w = Word { pa, coeff: cx.cut(&[g, h, l]), slots: vec![ghl] };
    w.split(&rho_inv, 0, g, hl);
    w.split(&rho_inv, 1, h, l);
    w.merge(rho, 0);
    w.merge(rho, 0);
    debug_assert_eq!(w.slots, vec![ghl]);
    w.coeff
}

#[derive(Clone, Debug)]
pub struct Phi6Result {
    pub rho: Cochain,
    pub omega: Cochain,
    pub report: ValidationReport,
}

/// `ω = δ²(ρ⁻¹)`; `rho = None` is the auto mode `ρ = 1`. `f`, when given,
/// must be a concrete `PicS` 1-cocycle.
pub fn phi6(pa: &PartialAction, f: Option<&[PicSElement]>, rho: Option<&Cochain>) -> Result<Phi6Result> {
    let cx = Complex::new(pa);
    if let Some(f) = f {
        if !alpha_star(pa).is_cocycle(f) {
            return Err(Error::pre("f is not a PicS 1-cocycle"));
        }
    }
    let rho = rho.cloned().unwrap_or_else(|| cx.identity(2));
    if rho.degree != 2 {
        return Err(Error::pre("rho must be a 2-cochain"));
    }
    cx.check(&rho)?;
    let omega = cx.coboundary_unchecked(&cx.inverse(&rho));
    let mut rep = ValidationReport::new();
    let grp = &*pa.group;
    rep.record(
        "loop evaluation = delta2(rho^-1)",
        first_violation(cx.tuples(3), |t| phi6_loop(pa, &rho, t[0], t[1], t[2]) == omega.values[grp.tuple_code(t)], |t| grp.show_tuple(t)),
    );
    let d3 = cx.coboundary_unchecked(&omega);
    rep.record("delta3 omega = identity", (d3 != cx.identity(4)).then(|| {
        let c = (0..d3.values.len()).find(|&c| d3.values[c] != cx.identity(4).values[c]).unwrap_or(0);
        grp.show_tuple(&grp.tuple(4, c))
    }));
    rep.record("omega in B^3", (!cx.boundaries(3).contains(&omega)).then(|| omega.show(pa)));
    Ok(Phi6Result { rho, omega, report: rep })
}

/// `ρ ↦ σρ` changes `ω` by `δ²(σ⁻¹)`.
pub fn check_phi6_class_change(pa: &PartialAction, rho: &Cochain, sigma: &Cochain) -> Result<bool> {
    let cx = Complex::new(pa);
    let w = phi6(pa, None, Some(rho))?.omega;
    let w2 = phi6(pa, None, Some(&cx.mul(sigma, rho)))?.omega;
    Ok(w2 == cx.mul(&cx.coboundary(&cx.inverse(sigma))?, &w))
}
