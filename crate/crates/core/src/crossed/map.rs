//! Additive maps between crossed products that send each `D_g δ_g` into a
//! single `D_{π(g)} δ_{π(g)}`: `a δ_g ↦ φ_g(a) δ_{π(g)}`.

use super::CrossedProduct;
use crate::report::{first_violation, ValidationReport};
use crate::ring::Elem;
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Debug)]
pub struct MonomialMap {
    pub perm: Vec<usize>,
    /// `tables[g]` maps `D_g` into `D_{perm[g]}`.
    pub tables: Vec<BTreeMap<Elem, Elem>>,
}

impl MonomialMap {
    pub fn from_fn(src: &CrossedProduct, perm: Vec<usize>, f: impl Fn(usize, Elem) -> Elem) -> MonomialMap {
        let r = &*src.pa.ring;
        let tables = (0..src.order()).map(|g| r.ideal(src.pa.one(g)).elements.into_iter().map(|a| (a, f(g, a))).collect()).collect();
        MonomialMap { perm, tables }
    }

    pub fn apply(&self, dst: &CrossedProduct, x: &[Elem]) -> Vec<Elem> {
        let r = &*dst.pa.ring;
        let mut out = dst.zero();
        for (g, &a) in x.iter().enumerate() {
            let t = self.perm[g];
            out[t] = r.add(out[t], self.tables[g][&a]);
        }
        out
    }

    /// Inverse, when every coefficient table and `π` are bijective.
    pub fn inverse(&self) -> Option<MonomialMap> {
        let n = self.perm.len();
        let mut perm = vec![usize::MAX; n];
        for (g, &t) in self.perm.iter().enumerate() {
            if perm[t] != usize::MAX {
                return None;
            }
            perm[t] = g;
        }
        let mut tables = vec![BTreeMap::new(); n];
        for (g, table) in self.tables.iter().enumerate() {
            for (&a, &b) in table {
                if tables[self.perm[g]].insert(b, a).is_some() {
                    return None;
                }
            }
        }
        Some(MonomialMap { perm, tables })
    }

    /// Additivity, codomain, bijectivity, unitality and (anti-)multiplicativity
    /// on all monomial pairs; optionally left `R`-linearity or `Rᵅ`-linearity.
    pub fn check(&self, src: &CrossedProduct, dst: &CrossedProduct, anti: bool, linear_over: Option<&[Elem]>) -> ValidationReport {
        let (rs, rd) = (&*src.pa.ring, &*dst.pa.ring);
        let n = src.order();
        let mut rep = ValidationReport::new();
        rep.record(
            "codomain",
            first_violation(0..n, |&g| self.tables[g].values().all(|&b| rd.in_ideal(b, dst.pa.one(self.perm[g]))), |&g| {
                format!("image of D_{} delta_{}", src.pa.label(g), src.pa.label(g))
            }),
        );
        rep.record(
            "additivity",
            first_violation(0..n, |&g| {
                let t = &self.tables[g];
                t.keys().all(|&a| t.keys().all(|&b| t[&rs.add(a, b)] == rd.add(t[&a], t[&b])))
            }, |&g| format!("on D_{}", src.pa.label(g))),
        );
        let bij = (0..n).all(|g| {
            let img: BTreeSet<Elem> = self.tables[g].values().copied().collect();
            img.len() == self.tables[g].len() && img.len() == rd.ideal(dst.pa.one(self.perm[g])).len()
        }) && self.perm.iter().collect::<BTreeSet<_>>().len() == n;
        rep.record("bijectivity", (!bij).then(|| "some D_g delta_g is not mapped onto its target".to_string()));
        let one_img = self.apply(dst, &src.one());
        rep.record(
            "unitality",
            (one_img != dst.one()).then(|| format!("1 maps to {}", dst.show(&one_img))),
        );
        let mons = src.monomials();
        let mut fail = None;
        'outer: for &(g, a) in &mons {
            for &(h, b) in &mons {
                let (x, y) = (src.monomial(g, a), src.monomial(h, b));
                let lhs = self.apply(dst, &src.mul(&x, &y));
                let (fx, fy) = (self.apply(dst, &x), self.apply(dst, &y));
                let rhs = if anti { dst.mul(&fy, &fx) } else { dst.mul(&fx, &fy) };
                if lhs != rhs {
                    fail = Some(format!("{} and {}: {} vs {}", src.show(&x), src.show(&y), dst.show(&lhs), dst.show(&rhs)));
                    break 'outer;
                }
            }
        }
        rep.record(if anti { "anti-multiplicativity" } else { "multiplicativity" }, fail);
        if let Some(scalars) = linear_over {
            rep.record(
                "linearity",
                first_violation(mons.iter(), |&&(g, a)| scalars.iter().all(|&s| self.tables[g][&rs.mul(s, a)] == rd.mul(s, self.tables[g][&a])), |&&(g, a)| {
                    format!("at {}", src.show(&src.monomial(g, a)))
                }),
            );
        }
        rep
    }
}
