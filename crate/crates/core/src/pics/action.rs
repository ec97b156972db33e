//! The partial action `α*` of `G` on `PicS`, its invariants and 1-cocycles.

use super::monoid::{apply_matrix, identity_matrix, Matrix, PicSElement, PicSMonoid};
use crate::action::PartialAction;
use crate::error::{check_cap, Error, Result};
use crate::group::FiniteGroup;
use crate::report::{first_violation, ValidationReport};
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct PicSAction {
    pub monoid: PicSMonoid,
    pub group: Arc<FiniteGroup>,
    /// Component of `[D_g]`; `X_g` is everything below it.
    pub domains: Vec<usize>,
    /// `comps[g][e]` is the image component of `e ≤ [D_{g⁻¹}]`.
    pub comps: Vec<Vec<Option<usize>>>,
    /// Group part `A_e → A_{α*_g(e)}` on the same domain.
    pub mats: Vec<Vec<Option<Matrix>>>,
}

impl PicSAction {
    /// `α*` on the concrete `PicS(R)`: components move by `e ↦ α_g(e)`.
    pub fn concrete(pa: &PartialAction) -> PicSAction {
        let r = &*pa.ring;
        let monoid = PicSMonoid::concrete(r);
        let ids = r.idempotents().to_vec();
        let pos = |x| ids.iter().position(|&e| e == x).expect("alpha maps idempotents to idempotents");
        let grp = pa.group.clone();
        let domains = grp.elements().map(|g| pos(pa.one(g))).collect();
        let comps = grp
            .elements()
            .map(|g| {
                let dom = pa.one(grp.inv(g));
                ids.iter().map(|&e| (r.mul(e, dom) == e).then(|| pos(pa.alpha(g, e)))).collect()
            })
            .collect::<Vec<Vec<Option<usize>>>>();
        let mats = comps.iter().map(|row| row.iter().map(|c| c.map(|_| Vec::new())).collect()).collect();
        PicSAction { monoid, group: grp, domains, comps, mats }
    }

    /// Symbolic action from component maps and group matrices; missing
    /// matrices default to the identity where the groups match.
    pub fn symbolic(monoid: PicSMonoid, group: Arc<FiniteGroup>, domains: Vec<usize>, comps: Vec<Vec<Option<usize>>>, mats: Vec<Vec<Option<Matrix>>>) -> Result<PicSAction> {
        let (n, c) = (group.order(), monoid.components());
        if domains.len() != n || comps.len() != n || mats.len() != n {
            return Err(Error::malformed(format!("expected action data for {n} group elements")));
        }
        for g in 0..n {
            let dom = domains[group.inv(g)];
            if domains[g] >= c || comps[g].len() != c || mats[g].len() != c {
                return Err(Error::malformed(format!("action data for {} has the wrong size", group.label(g))));
            }
            for e in 0..c {
                match (comps[g][e], &mats[g][e]) {
                    (Some(t), Some(m)) => {
                        if !monoid.leq(e, dom) {
                            return Err(Error::malformed(format!("alpha*_{} given on {} outside X_{}", group.label(g), monoid.labels[e], group.label(group.inv(g)))));
                        }
                        if t >= c || m.len() != monoid.groups[t].len() || m.iter().any(|r| r.len() != monoid.groups[e].len()) {
                            return Err(Error::malformed(format!("alpha*_{} on {} has the wrong shape", group.label(g), monoid.labels[e])));
                        }
                    }
                    (None, None) => {
                        if monoid.leq(e, dom) {
                            return Err(Error::malformed(format!("alpha*_{} missing on {}", group.label(g), monoid.labels[e])));
                        }
                    }
                    _ => return Err(Error::malformed(format!("alpha*_{} on {} needs both a component and a matrix", group.label(g), monoid.labels[e]))),
                }
            }
        }
        Ok(PicSAction { monoid, group, domains, comps, mats })
    }

    /// Trivial action of `group` with `X_g` everything.
    pub fn trivial(monoid: PicSMonoid, group: Arc<FiniteGroup>) -> PicSAction {
        let c = monoid.components();
        let n = group.order();
        let comps = vec![(0..c).map(Some).collect(); n];
        let mats = vec![(0..c).map(|e| Some(identity_matrix(monoid.groups[e].len()))).collect(); n];
        PicSAction { domains: vec![monoid.top; n], monoid, group, comps, mats }
    }

    /// `[D_g]`.
    pub fn d(&self, g: usize) -> PicSElement {
        self.monoid.idem(self.domains[g])
    }

    pub fn in_domain(&self, g: usize, x: &PicSElement) -> bool {
        self.monoid.leq(x.comp, self.domains[self.group.inv(g)])
    }

    pub fn apply(&self, g: usize, x: &PicSElement) -> Result<PicSElement> {
        if !self.in_domain(g, x) {
            return Err(Error::pre(format!(
                "{} lies outside X_{}",
                self.monoid.show(x),
                self.group.label(self.group.inv(g))
            )));
        }
        let t = self.comps[g][x.comp].expect("domain checked");
        let m = self.mats[g][x.comp].as_ref().expect("domain checked");
        Ok(PicSElement { comp: t, a: apply_matrix(m, &x.a, &self.monoid.groups[t]) })
    }

    fn ap(&self, g: usize, x: &PicSElement) -> PicSElement {
        self.apply(g, x).expect("caller checks the domain")
    }

    /// Partial-action axioms on `PicS`, exhaustively.
    pub fn validate(&self) -> ValidationReport {
        let (m, grp) = (&self.monoid, &*self.group);
        let els = m.elements();
        let mut rep = ValidationReport::new();
        rep.record("X_1 = PicS and alpha*_1 = id", first_violation(els.iter(), |x| self.in_domain(0, x) && self.ap(0, x) == **x, |x| m.show(x)));
        rep.record(
            "alpha*_g([D_g^-1]) = [D_g]",
            first_violation(grp.elements(), |&g| self.ap(g, &self.d(grp.inv(g))) == self.d(g), |&g| grp.label(g).to_string()),
        );
        let dom = |g: usize| els.iter().filter(|x| self.in_domain(g, x)).collect::<Vec<_>>();
        rep.record(
            "alpha*_g multiplicative on X_g^-1",
            first_violation(grp.elements().flat_map(|g| { let d = dom(g); d.iter().flat_map(|&x| d.iter().map(move |&y| (g, x, y))).collect::<Vec<_>>() }), |&(g, x, y)| {
                self.ap(g, &m.mul(x, y)) == m.mul(&self.ap(g, x), &self.ap(g, y))
            }, |&(g, x, y)| format!("g = {}, {} {}", grp.label(g), m.show(x), m.show(y))),
        );
        rep.record(
            "alpha*_g: X_g^-1 -> X_g bijective",
            first_violation(grp.elements(), |&g| {
                let mut img: Vec<PicSElement> = dom(g).into_iter().map(|x| self.ap(g, x)).collect();
                img.sort();
                img.dedup();
                let mut target: Vec<PicSElement> = dom(grp.inv(g)).into_iter().cloned().collect();
                target.sort();
                img == target
            }, |&g| grp.label(g).to_string()),
        );
        rep.record(
            "alpha*_g alpha*_h extends to alpha*_gh",
            first_violation(
                grp.elements().flat_map(|g| grp.elements().map(move |h| (g, h))).flat_map(|(g, h)| els.iter().map(move |x| (g, h, x))),
                |&(g, h, x)| {
                    if !self.in_domain(h, x) {
                        return true;
                    }
                    let y = self.ap(h, x);
                    if !self.in_domain(g, &y) {
                        return true;
                    }
                    let gh = grp.mul(g, h);
                    self.in_domain(gh, x) && self.ap(g, &y) == self.ap(gh, x)
                },
                |&(g, h, x)| format!("g = {}, h = {}, x = {}", grp.label(g), grp.label(h), m.show(x)),
            ),
        );
        rep
    }

    /// `x` with `α*_g(x[D_{g⁻¹}]) = x[D_g]` for every `g`.
    pub fn is_invariant(&self, x: &PicSElement) -> bool {
        self.group.elements().all(|g| {
            let cut = self.monoid.mul(x, &self.d(self.group.inv(g)));
            self.ap(g, &cut) == self.monoid.mul(x, &self.d(g))
        })
    }

    pub fn invariants(&self) -> Vec<PicSElement> {
        self.monoid.elements().into_iter().filter(|x| self.is_invariant(x)).collect()
    }

    /// The invariants form an inverse submonoid containing `0`.
    pub fn check_invariants(&self) -> ValidationReport {
        let m = &self.monoid;
        let inv = self.invariants();
        let mut rep = ValidationReport::new();
        rep.record("contains 0 and 1", (!inv.contains(&m.zero()) || !inv.contains(&m.one())).then(|| "missing".to_string()));
        rep.record(
            "closed under product",
            first_violation(inv.iter().flat_map(|x| inv.iter().map(move |y| (x, y))), |&(x, y)| inv.contains(&m.mul(x, y)), |&(x, y)| format!("{} {}", m.show(x), m.show(y))),
        );
        rep.record("closed under star", first_violation(inv.iter(), |x| inv.contains(&m.star(x)), |x| m.show(x)));
        rep
    }

    /// All `f` with `f(g) ∈ U(X_g)` and `f(gh)[D_g] = f(g) α*_g(f(h)[D_{g⁻¹}])`.
    pub fn cocycles(&self, cap: u128) -> Result<Vec<Vec<PicSElement>>> {
        let grp = &*self.group;
        let choices: Vec<Vec<PicSElement>> = grp
            .elements()
            .map(|g| {
                let c = self.domains[g];
                self.monoid.component_elements(c).into_iter().map(|a| PicSElement { comp: c, a }).collect()
            })
            .collect();
        let size = choices.iter().map(|c| c.len() as u128).product();
        check_cap("PicS 1-cochains", size, cap)?;
        let mut out = Vec::new();
        let mut f: Vec<PicSElement> = choices.iter().map(|c| c[0].clone()).collect();
        let mut idx = vec![0usize; grp.order()];
        loop {
            if self.is_cocycle(&f) {
                out.push(f.clone());
            }
            let mut k = grp.order();
            loop {
                if k == 0 {
                    return Ok(out);
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    f[k] = choices[k][idx[k]].clone();
                    break;
                }
                idx[k] = 0;
                f[k] = choices[k][0].clone();
            }
        }
    }

    pub fn is_cocycle(&self, f: &[PicSElement]) -> bool {
        let (m, grp) = (&self.monoid, &*self.group);
        f.len() == grp.order()
            && grp.elements().all(|g| f[g].comp == self.domains[g])
            && grp.elements().all(|g| {
                grp.elements().all(|h| {
                    let lhs = m.mul(&f[grp.mul(g, h)], &self.d(g));
                    let moved = self.ap(g, &m.mul(&f[h], &self.d(grp.inv(g))));
                    lhs == m.mul(&f[g], &moved)
                })
            })
    }
}

/// Concrete `PicS(R)` with `α*` of `pa`.
pub fn alpha_star(pa: &PartialAction) -> PicSAction {
    PicSAction::concrete(pa)
}

pub fn pics_invariants(pa: &PartialAction) -> Vec<PicSElement> {
    PicSAction::concrete(pa).invariants()
}

pub fn z1_pics(act: &PicSAction, cap: u128) -> Result<Vec<Vec<PicSElement>>> {
    act.cocycles(cap)
}
