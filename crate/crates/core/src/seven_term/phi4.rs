//! `φ₄: cls(ω) ↦ [R ⋆_{α,ω} G]`, with classes compared through coboundary
//! detection against the trivial twisting.

use crate::action::{tensor_extensions, GaloisExtension};
use crate::cohomology::{Cochain, Complex};
use crate::crossed::{iso_from_coboundary, j_map, tensor_twisting, CrossedProduct};
use crate::error::{Error, Result};
use crate::report::ValidationReport;

#[derive(Clone, Debug)]
pub struct Phi4Record {
    /// `R ⋆_{α,ω} G` is isomorphic to the skew group ring.
    pub trivial: bool,
    /// `u` with `ω = δ¹u`, when the search space was within the cap.
    pub witness: Option<Cochain>,
    pub report: ValidationReport,
}

pub fn phi4(ext: &GaloisExtension, omega: &Cochain, cap: u128) -> Result<Phi4Record> {
    let pa = &ext.action;
    let cx = Complex::new(pa);
    if omega.degree != 2 || !cx.is_cocycle(omega)? {
        return Err(Error::pre("omega is not a 2-cocycle"));
    }
    let cp = CrossedProduct::new(pa.clone(), omega.clone())?;
    let mut rep = ValidationReport::new();
    rep.extend("", cp.check_associativity());
    let searchable = cx.order(1) <= cap;
    let witness = if searchable { cx.is_coboundary(omega, cap)? } else { None };
    let trivial = match &witness {
        Some(_) => true,
        None if searchable => false,
        None => cx.boundaries(2).contains(omega),
    };
    if let Some(u) = &witness {
        let skew = CrossedProduct::skew(pa.clone());
        let iso = iso_from_coboundary(&cp, &skew, u)?;
        rep.extend("iso to R*G: ", iso.check(&cp, &skew, false, None));
    }
    if *omega == cx.identity(2) && cp.size() <= cap {
        let j = j_map(pa, cap)?;
        rep.extend("", j.report);
    }
    Ok(Phi4Record { trivial, witness, report: rep })
}

/// `ω ⊗ ω̃` against `ωω̃ ⊗ 1` on `R ⊗ R` with `G × G`, and `ω ⊗ ω⁻¹`
/// against the trivial twisting. Needs `Rᵅ` to be the prime subring.
pub fn check_phi4_homomorphism(ext: &GaloisExtension, w1: &Cochain, w2: &Cochain, cap: u128) -> Result<ValidationReport> {
    let te = tensor_extensions(ext, ext)?;
    let pa = &ext.action;
    let cx = Complex::new(pa);
    let big = Complex::new(&te.ext.action);
    let one = cx.identity(2);
    let lhs = tensor_twisting(&te, w1, w2);
    let rhs = tensor_twisting(&te, &cx.mul(w1, w2), &one);
    let mut bounds = big.boundaries(2);
    let mut rep = ValidationReport::new();
    let ratio = big.mul(&lhs, &big.inverse(&rhs));
    rep.record("omega (x) omega~ ~ omega omega~ (x) 1", (!bounds.contains(&ratio)).then(|| ratio.show(&te.ext.action)));
    let inv = tensor_twisting(&te, w1, &cx.inverse(w1));
    rep.record("omega (x) omega^-1 ~ 1", (!bounds.contains(&inv)).then(|| inv.show(&te.ext.action)));
    if big.order(1) <= cap {
        let found = big.is_coboundary(&ratio, cap)?;
        rep.record("explicit witness for omega (x) omega~ ~ omega omega~ (x) 1", found.is_none().then(|| "none found".to_string()));
    }
    Ok(rep)
}
