//! Isomorphisms between crossed products: from coboundaries, the converse
//! search, and the opposite algebra.

use super::{CrossedProduct, MonomialMap};
use crate::action::PartialAction;
use crate::cohomology::{Cochain, Complex};
use crate::error::{check_cap, Error, Result};
use crate::ring::Elem;

/// `a_g δ_g ↦ a_g u_g δ_g` from `R ⋆_{α,ω} G` to `R ⋆_{α,ω̃} G`, given
/// `ω = ω̃ · δ¹u`.
pub fn iso_from_coboundary(src: &CrossedProduct, dst: &CrossedProduct, u: &Cochain) -> Result<MonomialMap> {
    let pa = &src.pa;
    let cx = Complex::new(pa);
    let du = cx.coboundary(u)?;
    let want = cx.mul(&dst.omega, &du);
    let n = pa.order();
    if let Some(c) = (0..n * n).find(|&c| want.values[c] != src.omega.values[c]) {
        return Err(Error::pre(format!(
            "omega != omega~ * delta1(u) at (g,h) = ({},{})",
            pa.label(c / n),
            pa.label(c % n)
        )));
    }
    let r = pa.ring.clone();
    Ok(MonomialMap::from_fn(src, (0..n).collect(), |g, a| r.mul(a, u.values[g])))
}

/// Reads `u_g` off a diagonal map as the image of `1_g δ_g`.
pub fn recover_cochain(pa: &PartialAction, map: &MonomialMap) -> Cochain {
    Cochain { degree: 1, values: (0..pa.order()).map(|g| map.tables[g][&pa.one(g)]).collect() }
}

/// First `u ∈ C¹` (canonical order) with `ω = 1_α · δ¹u`.
pub fn detect_trivial_class(pa: &PartialAction, omega: &Cochain, cap: u128) -> Result<Option<Cochain>> {
    Complex::new(pa).is_coboundary(omega, cap)
}

/// Searches maps `a_g δ_g ↦ a_g c_g δ_g` with `c_g` ranging over all of
/// `D_g` for a unital, multiplicative, bijective one from `src` to `dst`.
pub fn find_diagonal_iso(src: &CrossedProduct, dst: &CrossedProduct, cap: u128) -> Result<Option<MonomialMap>> {
    let pa = &src.pa;
    let r = &*pa.ring;
    let n = pa.order();
    let ideals: Vec<Vec<Elem>> = (0..n).map(|g| r.ideal(pa.one(g)).elements).collect();
    check_cap("diagonal candidates", ideals.iter().map(|i| i.len() as u128).product(), cap)?;
    let mut idx = vec![0usize; n];
    loop {
        let c: Vec<Elem> = (0..n).map(|g| ideals[g][idx[g]]).collect();
        let map = MonomialMap::from_fn(src, (0..n).collect(), |g, a| r.mul(a, c[g]));
        if map.check(src, dst, false, None).is_ok() {
            return Ok(Some(map));
        }
        let mut k = n;
        loop {
            if k == 0 {
                return Ok(None);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < ideals[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// `φ(r_g δ_g) = α_{g⁻¹}(r_g ω_{g,g⁻¹}) δ_{g⁻¹}`, an anti-isomorphism from
/// `R ⋆_{α,ω} G` onto `R ⋆_{α,ω⁻¹} G` when `ω` is a twisting (normalized).
/// Returns the target and the map.
pub fn opposite_iso(cp: &CrossedProduct) -> (CrossedProduct, MonomialMap) {
    let pa = &cp.pa;
    let (r, grp) = (&*pa.ring, &*pa.group);
    let inv = CrossedProduct { pa: pa.clone(), omega: Complex::new(pa).inverse(&cp.omega) };
    let perm = (0..pa.order()).map(|g| grp.inv(g)).collect();
    let map = MonomialMap::from_fn(cp, perm, |g, a| pa.alpha(grp.inv(g), r.mul(a, cp.w(g, grp.inv(g)))));
    (inv, map)
}
