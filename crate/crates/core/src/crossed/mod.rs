//! Partial skew group rings and twisted partial crossed products
//! `R ⋆_{α,ω} G`. An element is a coefficient vector indexed by `G` with
//! entry `g` in `D_g`.

mod iso;
mod jmap;
mod map;
mod square;
mod tensor;

pub use iso::{detect_trivial_class, find_diagonal_iso, iso_from_coboundary, opposite_iso, recover_cochain};
pub use jmap::{j_map, JMap};
pub use map::MonomialMap;
pub use square::{eta_iso, galois_idempotents, IdempotentFamily, TensorSquareModel};
pub use tensor::{tensor_crossed, tensor_twisting, TensorCrossed};

use crate::action::PartialAction;
use crate::cohomology::{Cochain, Complex};
use crate::error::{Error, Result};
use crate::report::ValidationReport;
use crate::ring::Elem;

/// Monomials enumerated exhaustively in associativity checks up to this many triples.
const TRIPLE_CAP: usize = 2_000_000;

#[derive(Clone, Debug)]
pub struct CrossedProduct {
    pub pa: PartialAction,
    /// 2-cochain with `ω_{g,h} ∈ U(D_g D_gh)`.
    pub omega: Cochain,
}

impl CrossedProduct {
    /// Checks that `ω` is a 2-cochain; associativity is not assumed.
    pub fn new(pa: PartialAction, omega: Cochain) -> Result<CrossedProduct> {
        if omega.degree != 2 {
            return Err(Error::pre("crossed products need a 2-cochain"));
        }
        Complex::new(&pa).check(&omega)?;
        Ok(CrossedProduct { pa, omega })
    }

    /// The skew group ring `R ⋆_α G`.
    pub fn skew(pa: PartialAction) -> CrossedProduct {
        let omega = Cochain::identity(&pa, 2);
        CrossedProduct { pa, omega }
    }

    pub fn order(&self) -> usize {
        self.pa.order()
    }

    pub fn w(&self, g: usize, h: usize) -> Elem {
        self.omega.values[g * self.order() + h]
    }

    pub fn zero(&self) -> Vec<Elem> {
        vec![self.pa.ring.zero(); self.order()]
    }

    /// `ω_{1,1}⁻¹ δ₁`, which is `1δ₁` for normalized `ω`.
    pub fn one(&self) -> Vec<Elem> {
        let mut x = self.zero();
        x[0] = self.pa.ring.inv_in(self.w(0, 0), self.pa.ring.one()).expect("omega(1,1) is a unit");
        x
    }

    pub fn monomial(&self, g: usize, r: Elem) -> Vec<Elem> {
        let mut x = self.zero();
        x[g] = r;
        x
    }

    /// Checks coefficient membership `x_g ∈ D_g`.
    pub fn check_element(&self, x: &[Elem]) -> Result<()> {
        if x.len() != self.order() {
            return Err(Error::pre(format!("element needs {} coefficients", self.order())));
        }
        for (g, &c) in x.iter().enumerate() {
            if !self.pa.ring.in_ideal(c, self.pa.one(g)) {
                return Err(Error::pre(format!("coefficient {} of delta_{} lies outside D_{}", self.pa.ring.show(c), self.pa.label(g), self.pa.label(g))));
            }
        }
        Ok(())
    }

    pub fn add(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        a.iter().zip(b).map(|(&x, &y)| self.pa.ring.add(x, y)).collect()
    }

    /// `(r_gδ_g)(r'_hδ_h) = r_g α_g(r'_h 1_{g⁻¹}) ω_{g,h} δ_{gh}`, bilinearly.
    pub fn mul(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        let (r, grp) = (&*self.pa.ring, &*self.pa.group);
        let mut out = self.zero();
        for (g, &x) in a.iter().enumerate().filter(|(_, &x)| x != r.zero()) {
            for (h, &y) in b.iter().enumerate().filter(|(_, &y)| y != r.zero()) {
                let gh = grp.mul(g, h);
                let term = r.mul(r.mul(x, self.pa.cut(g, y)), self.w(g, h));
                out[gh] = r.add(out[gh], term);
            }
        }
        out
    }

    pub fn multiply(&self, a: &[Elem], b: &[Elem]) -> Result<Vec<Elem>> {
        self.check_element(a)?;
        self.check_element(b)?;
        Ok(self.mul(a, b))
    }

    /// All monomials `r δ_g`, `r ∈ D_g`, grouped by `g`.
    pub fn monomials(&self) -> Vec<(usize, Elem)> {
        let r = &*self.pa.ring;
        (0..self.order()).flat_map(|g| r.ideal(self.pa.one(g)).elements.into_iter().map(move |x| (g, x))).collect()
    }

    /// `|R ⋆ G| = Π |D_g|`.
    pub fn size(&self) -> u128 {
        (0..self.order()).map(|g| self.pa.ring.ideal(self.pa.one(g)).len() as u128).product()
    }

    /// Every element, coefficient-lexicographic.
    pub fn elements(&self) -> Vec<Vec<Elem>> {
        let mut out = vec![Vec::new()];
        for g in 0..self.order() {
            let ideal = self.pa.ring.ideal(self.pa.one(g)).elements;
            out = out.into_iter().flat_map(|v: Vec<Elem>| ideal.iter().map(move |&c| [v.clone(), vec![c]].concat())).collect();
        }
        out
    }

    pub fn show(&self, x: &[Elem]) -> String {
        let r = &*self.pa.ring;
        let terms: Vec<String> = x
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != r.zero())
            .map(|(g, &c)| format!("{}·d_{}", r.show(c), self.pa.label(g)))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// `(ab)c = a(bc)` on monomials, exhaustive over all coefficients when
    /// affordable and over `1_g δ_g` otherwise. Names the first bad triple.
    pub fn check_associativity(&self) -> ValidationReport {
        let grp = &*self.pa.group;
        let n = self.order();
        let mons = self.monomials();
        let exhaustive = mons.len().saturating_pow(3) <= TRIPLE_CAP;
        let per_g: Vec<Vec<Elem>> = (0..n)
            .map(|g| mons.iter().filter(|m| m.0 == g).map(|m| m.1).filter(|&c| exhaustive || c == self.pa.one(g)).collect())
            .collect();
        let mut fail = None;
        'outer: for g in 0..n {
            for h in 0..n {
                for l in 0..n {
                    for &a in &per_g[g] {
                        for &b in &per_g[h] {
                            for &c in &per_g[l] {
                                let (x, y, z) = (self.monomial(g, a), self.monomial(h, b), self.monomial(l, c));
                                let lhs = self.mul(&self.mul(&x, &y), &z);
                                let rhs = self.mul(&x, &self.mul(&y, &z));
                                if lhs != rhs {
                                    fail = Some(format!(
                                        "(g,h,l) = {}: ({})·({})·({}) gives {} vs {}",
                                        grp.show_tuple(&[g, h, l]),
                                        self.show(&x),
                                        self.show(&y),
                                        self.show(&z),
                                        self.show(&lhs),
                                        self.show(&rhs)
                                    ));
                                    break 'outer;
                                }
                            }
                        }
                    }
                }
            }
        }
        let mut rep = ValidationReport::new();
        rep.record(if exhaustive { "associativity on all monomials" } else { "associativity on 1_g delta_g" }, fail);
        let one = self.one();
        rep.record(
            "identity element",
            mons.iter().map(|&(g, c)| self.monomial(g, c)).find(|x| self.mul(&one, x) != *x || self.mul(x, &one) != *x).map(|x| self.show(&x)),
        );
        rep
    }

    /// Coefficients as `(group index, element JSON)` pairs for nonzero terms.
    pub fn to_json(&self, x: &[Elem]) -> serde_json::Value {
        let r = &*self.pa.ring;
        serde_json::Value::Array(
            x.iter()
                .enumerate()
                .filter(|(_, &c)| c != r.zero())
                .map(|(g, &c)| serde_json::json!([g, r.to_json(c)]))
                .collect(),
        )
    }

    pub fn from_json(&self, v: &serde_json::Value) -> Result<Vec<Elem>> {
        let bad = || Error::Parse(format!("crossed product element must be [[g, coefficient], ...], got {v}"));
        let mut x = self.zero();
        for term in v.as_array().ok_or_else(bad)? {
            let pair = term.as_array().filter(|p| p.len() == 2).ok_or_else(bad)?;
            let g = pair[0].as_u64().filter(|&g| (g as usize) < self.order()).ok_or_else(bad)? as usize;
            let c = self.pa.ring.from_json(&pair[1])?;
            x[g] = self.pa.ring.add(x[g], c);
        }
        self.check_element(&x)?;
        Ok(x)
    }
}
