//! `j: R ⋆_α G → End_{Rᵅ}(R)`, `j(Σ r_g δ_g)(r) = Σ r_g α_g(r 1_{g⁻¹})`.

use super::CrossedProduct;
use crate::action::PartialAction;
use crate::error::{check_cap, Result};
use crate::report::ValidationReport;
use crate::ring::{Elem, FreeBasis, Ring};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Debug)]
pub struct JMap {
    pub skew: CrossedProduct,
    /// `j(x)` as a value table on `R`, for every element `x`.
    pub images: BTreeMap<Vec<Elem>, Vec<Elem>>,
    /// `End_{Rᵅ}(R)`, enumerated independently of `j`.
    pub endomorphisms: BTreeSet<Vec<Elem>>,
    pub report: ValidationReport,
}

fn apply(pa: &PartialAction, x: &[Elem], r: Elem) -> Elem {
    pa.ring.sum(x.iter().enumerate().map(|(g, &c)| pa.ring.mul(c, pa.cut(g, r))))
}

/// Additive maps `R → R` that are `Rᵅ`-linear, found from all images of a
/// free basis over the prime subring.
fn endomorphisms(r: &Ring, scalars: &[Elem], cap: u128) -> Result<BTreeSet<Vec<Elem>>> {
    let b = FreeBasis::find(r)?;
    let d = b.dim();
    check_cap("End candidates", (r.size() as u128).saturating_pow(d as u32), cap)?;
    let mut out = BTreeSet::new();
    let mut idx = vec![0u32; d];
    loop {
        let table: Vec<Elem> = r
            .elements()
            .map(|x| r.sum(b.coords(x).iter().zip(&idx).map(|(&c, &i)| r.scale(c, Elem(i)))))
            .collect();
        if scalars.iter().all(|&s| r.elements().all(|x| table[r.mul(s, x).0 as usize] == r.mul(s, table[x.0 as usize]))) {
            out.insert(table);
        }
        let mut k = d;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            idx[k] += 1;
            if (idx[k] as usize) < r.size() {
                break;
            }
            idx[k] = 0;
        }
    }
}

pub fn j_map(pa: &PartialAction, cap: u128) -> Result<JMap> {
    let skew = CrossedProduct::skew(pa.clone());
    check_cap("R*G", skew.size(), cap)?;
    let r = &*pa.ring;
    let scalars = pa.invariants();
    let ends = endomorphisms(r, &scalars, cap)?;
    let images: BTreeMap<Vec<Elem>, Vec<Elem>> =
        skew.elements().into_iter().map(|x| {
            let t = r.elements().map(|y| apply(pa, &x, y)).collect();
            (x, t)
        }).collect();
    let mut rep = ValidationReport::new();
    rep.record(
        "j lands in End_R^alpha(R)",
        images.iter().find(|(_, t)| !ends.contains(*t)).map(|(x, _)| skew.show(x)),
    );
    let distinct: BTreeSet<&Vec<Elem>> = images.values().collect();
    let mut collision = None;
    if distinct.len() != images.len() {
        let mut seen = BTreeMap::new();
        for (x, t) in &images {
            if let Some(y) = seen.insert(t, x) {
                collision = Some(format!("j({}) = j({})", skew.show(y), skew.show(x)));
                break;
            }
        }
    }
    rep.record("j injective", collision);
    rep.record(
        "|R*G| = |End_R^alpha(R)|",
        (images.len() != ends.len()).then(|| format!("{} != {}", images.len(), ends.len())),
    );
    let image_set: BTreeSet<Vec<Elem>> = images.values().cloned().collect();
    rep.record("j image equals End_R^alpha(R)", (image_set != ends).then(|| "tables differ".to_string()));
    let mons = skew.monomials();
    let mut fail = None;
    'outer: for &(g, a) in &mons {
        for &(h, b) in &mons {
            let (x, y) = (skew.monomial(g, a), skew.monomial(h, b));
            let xy = skew.mul(&x, &y);
            if let Some(z) = r.elements().find(|&z| apply(pa, &xy, z) != apply(pa, &x, apply(pa, &y, z))) {
                fail = Some(format!("j({}·{}) at {}", skew.show(&x), skew.show(&y), r.show(z)));
                break 'outer;
            }
        }
    }
    rep.record("j multiplicative", fail);
    Ok(JMap { skew, images, endomorphisms: ends, report: rep })
}
