//! `φ₃`: from twisted-linear bijections `ψ_g: D_g → D_{g⁻¹}` (the case
//! `E = R`) to a 2-cocycle `ω` read off `ψ_{(gh)⁻¹}ψ⁻¹_{h⁻¹}ψ⁻¹_{g⁻¹}`.

use crate::action::PartialAction;
use crate::cohomology::{Cochain, Complex};
use crate::error::{check_cap, Error, Result};
use crate::report::ValidationReport;
use crate::ring::Elem;
use std::collections::HashMap;

#[derive(Clone, Debug)]
pub struct PsiFamily {
    /// `ψ_g` as a table on `D_g`.
    pub tables: Vec<HashMap<Elem, Elem>>,
}

impl PsiFamily {
    /// `ψ_g = u_g·α_{g⁻¹}` with `u_g ∈ U(D_{g⁻¹})`.
    pub fn from_units(pa: &PartialAction, u: &[Elem]) -> Result<PsiFamily> {
        let (r, grp) = (&*pa.ring, &*pa.group);
        if u.len() != grp.order() {
            return Err(Error::malformed(format!("expected {} units", grp.order())));
        }
        for g in grp.elements() {
            if !r.units(pa.one(grp.inv(g))).contains(u[g]) {
                return Err(Error::pre(format!("u_{} = {} is not a unit of D_{}", grp.label(g), r.show(u[g]), grp.label(grp.inv(g)))));
            }
        }
        let tables = grp
            .elements()
            .map(|g| r.ideal(pa.one(g)).elements.into_iter().map(|x| (x, r.mul(u[g], pa.alpha(grp.inv(g), x)))).collect())
            .collect();
        Ok(PsiFamily { tables })
    }

    /// Every unit family, canonical order.
    pub fn all_units(pa: &PartialAction, cap: u128) -> Result<Vec<Vec<Elem>>> {
        let grp = &*pa.group;
        let groups: Vec<Vec<Elem>> = grp
            .elements()
            .map(|g| {
                let mut e = pa.ring.units(pa.one(grp.inv(g))).elements.clone();
                e.sort();
                e
            })
            .collect();
        check_cap("psi families", groups.iter().map(|g| g.len() as u128).product(), cap)?;
        let mut out = vec![Vec::new()];
        for g in groups {
            out = out.into_iter().flat_map(|v: Vec<Elem>| g.iter().map(move |&x| [v.clone(), vec![x]].concat())).collect();
        }
        Ok(out)
    }

    /// Twisted linearity `ψ_g(rx) = α_{g⁻¹}(r1_g)ψ_g(x)` and bijectivity onto `D_{g⁻¹}`.
    pub fn validate(&self, pa: &PartialAction) -> ValidationReport {
        let (r, grp) = (&*pa.ring, &*pa.group);
        let mut rep = ValidationReport::new();
        let mut lin = None;
        let mut bij = None;
        for g in grp.elements() {
            let t = &self.tables[g];
            let dom = r.ideal(pa.one(g)).elements;
            if t.len() != dom.len() || dom.iter().any(|x| !t.contains_key(x)) {
                bij.get_or_insert(format!("psi_{} is not defined on D_{}", grp.label(g), grp.label(g)));
                continue;
            }
            let mut img: Vec<Elem> = t.values().copied().collect();
            img.sort();
            img.dedup();
            let mut target = r.ideal(pa.one(grp.inv(g))).elements;
            target.sort();
            if img != target {
                bij.get_or_insert(format!("psi_{}", grp.label(g)));
            }
            'lin: for s in r.elements() {
                for &x in &dom {
                    if t[&r.mul(s, x)] != r.mul(pa.cut(grp.inv(g), s), t[&x]) {
                        lin = Some(format!("psi_{}({} {})", grp.label(g), r.show(s), r.show(x)));
                        break 'lin;
                    }
                }
            }
            if lin.is_some() {
                break;
            }
        }
        rep.record("psi_g bijective D_g -> D_g^-1", bij);
        rep.record("psi_g(rx) = alpha_g^-1(r 1_g) psi_g(x)", lin);
        rep
    }
}

#[derive(Clone, Debug)]
pub struct Phi3Result {
    pub omega: Cochain,
    pub report: ValidationReport,
}

pub fn phi3(pa: &PartialAction, psi: &PsiFamily) -> Result<Phi3Result> {
    let (r, grp) = (&*pa.ring, &*pa.group);
    let valid = psi.validate(pa);
    if let Some(c) = valid.failures().next() {
        return Err(Error::pre(format!("{}: {}", c.name, c.witness.clone().unwrap_or_default())));
    }
    let inverse: Vec<HashMap<Elem, Elem>> = psi.tables.iter().map(|t| t.iter().map(|(&x, &y)| (y, x)).collect()).collect();
    let n = grp.order();
    let mut values = Vec::with_capacity(n * n);
    let mut scalar = None;
    for g in 0..n {
        for h in 0..n {
            let gh = grp.mul(g, h);
            let composite = |x: Elem| -> Option<Elem> {
                let y = inverse[grp.inv(g)].get(&x)?;
                let z = inverse[grp.inv(h)].get(y)?;
                psi.tables[grp.inv(gh)].get(z).copied()
            };
            let cut = r.mul(pa.one(g), pa.one(gh));
            let w = composite(cut).ok_or_else(|| Error::pre("composite leaves the domains"))?;
            if scalar.is_none() {
                if let Some(x) = r.ideal(cut).elements.into_iter().find(|&x| composite(x) != Some(r.mul(w, x))) {
                    scalar = Some(format!("(g,h) = ({},{}), x = {}", grp.label(g), grp.label(h), r.show(x)));
                }
            }
            values.push(w);
        }
    }
    let omega = Cochain { degree: 2, values };
    let cx = Complex::new(pa);
    let mut rep = valid;
    rep.record("composite is multiplication by omega_g,h", scalar);
    let ok = cx.check(&omega).is_ok() && cx.is_cocycle(&omega)?;
    rep.record("omega in Z^2", (!ok).then(|| omega.show(pa)));
    Ok(Phi3Result { omega, report: rep })
}

/// `w` with `ω(u') = ω(u)·δ¹w`: `w_g = u_{g⁻¹} u'^{-1}_{g⁻¹}`.
pub fn phi3_change_witness(pa: &PartialAction, u: &[Elem], u2: &[Elem]) -> Cochain {
    let (r, grp) = (&*pa.ring, &*pa.group);
    let values = grp
        .elements()
        .map(|g| {
            let gi = grp.inv(g);
            r.mul(u[gi], r.inv_in(u2[gi], pa.one(g)).expect("unit of D_g"))
        })
        .collect();
    Cochain { degree: 1, values }
}
