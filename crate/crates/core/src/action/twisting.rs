use super::PartialAction;
use crate::cohomology::Cochain;
use crate::error::{Error, Result};
use crate::report::{first_violation, ValidationReport};

/// Axioms (iv)–(v) and the derived identity `α_g(ω_{g⁻¹,g}) = ω_{g,g⁻¹}`.
pub fn validate_twisting(pa: &PartialAction, w: &Cochain) -> Result<ValidationReport> {
    let (r, grp) = (&*pa.ring, &*pa.group);
    let n = grp.order();
    if w.degree != 2 || w.values.len() != n * n {
        return Err(Error::pre("twisting must be a 2-cochain"));
    }
    let om = |g: usize, h: usize| w.values[g * n + h];
    let cut = |g: usize, h: usize| r.mul(pa.one(g), pa.one(grp.mul(g, h)));
    for g in 0..n {
        for h in 0..n {
            if !r.in_ideal(om(g, h), cut(g, h)) {
                return Err(Error::pre(format!(
                    "omega({},{}) = {} lies outside D_g D_gh",
                    grp.label(g),
                    grp.label(h),
                    r.show(om(g, h))
                )));
            }
        }
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|g| (0..n).map(move |h| (g, h))).collect();
    let mut rep = ValidationReport::new();
    rep.record(
        "omega_g,h unit of D_g D_gh",
        first_violation(pairs.iter(), |&&(g, h)| r.units(cut(g, h)).contains(om(g, h)), |&&(g, h)| {
            format!("omega({},{}) = {}", grp.label(g), grp.label(h), r.show(om(g, h)))
        }),
    );
    rep.record(
        "(iv) omega_1,g = omega_g,1 = 1_g",
        first_violation(0..n, |&g| om(0, g) == pa.one(g) && om(g, 0) == pa.one(g), |&g| format!("g = {}", grp.label(g))),
    );
    let mut fail = None;
    'outer: for g in 0..n {
        for h in 0..n {
            for l in 0..n {
                let lhs = r.mul(pa.cut(g, om(h, l)), om(g, grp.mul(h, l)));
                let rhs = r.mul(om(g, h), om(grp.mul(g, h), l));
                if lhs != rhs {
                    fail = Some(format!(
                        "(g,h,l) = ({},{},{}): {} != {}",
                        grp.label(g),
                        grp.label(h),
                        grp.label(l),
                        r.show(lhs),
                        r.show(rhs)
                    ));
                    break 'outer;
                }
            }
        }
    }
    rep.record("(v) alpha_g(1_g^-1 omega_h,l) omega_g,hl = omega_g,h omega_gh,l", fail);
    rep.record(
        "alpha_g(omega_g^-1,g) = omega_g,g^-1",
        first_violation(0..n, |&g| pa.cut(g, om(grp.inv(g), g)) == om(g, grp.inv(g)), |&g| format!("g = {}", grp.label(g))),
    );
    Ok(rep)
}
