use super::PartialAction;
use crate::error::{Error, Result};
use crate::ring::Elem;
use std::collections::HashMap;
use std::sync::Arc;

/// Restriction of a global action `β` on `S` to `R = Se`: `1_g = e·β_g(e)`
/// and `α_g = β_g` on `D_{g⁻¹}`. The result is built, not trusted: callers
/// validate it like any other action.
pub fn restrict_global_action(global: &PartialAction, e: Elem) -> Result<PartialAction> {
    let s = &*global.ring;
    if global.ones().iter().any(|&o| o != s.one()) {
        return Err(Error::pre("restriction needs a global action (all 1_g = 1)"));
    }
    if !s.is_idempotent(e) {
        return Err(Error::pre(format!("{} is not idempotent", s.show(e))));
    }
    let (r, embed) = s.corner(e)?;
    let back: HashMap<Elem, Elem> = embed.iter().enumerate().map(|(i, &x)| (x, Elem(i as u32))).collect();
    let grp = global.group.clone();
    let ones: Vec<Elem> = grp.elements().map(|g| back[&s.mul(e, global.alpha(g, e))]).collect();
    let r = Arc::new(r);
    let tables = grp
        .elements()
        .map(|g| {
            r.ideal(ones[grp.inv(g)])
                .elements
                .into_iter()
                .map(|x| {
                    let y = global.alpha(g, embed[x.0 as usize]);
                    back.get(&y).copied().map(|y| (x, y)).ok_or_else(|| Error::pre("restricted map leaves Se"))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    PartialAction::new(r, grp, ones, tables)
}
