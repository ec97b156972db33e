//! `Rᵉ = R ⊗_{Rᵅ} R` for a Galois extension, modelled as `Π_g D_g` via
//! `ψ(x ⊗ y) = (x α_g(y 1_{g⁻¹}))_g`.

use super::CrossedProduct;
use crate::action::{tensor_extensions, GaloisExtension, PartialAction};
use crate::error::Result;
use crate::report::{first_violation, ValidationReport};
use crate::ring::Elem;
use std::collections::BTreeSet;

#[derive(Clone, Debug)]
pub struct TensorSquareModel {
    pub pa: PartialAction,
}

impl TensorSquareModel {
    pub fn new(ext: &GaloisExtension) -> TensorSquareModel {
        TensorSquareModel { pa: ext.action.clone() }
    }

    pub fn order(&self) -> usize {
        self.pa.order()
    }

    /// `ψ(x ⊗ y)`.
    pub fn pure(&self, x: Elem, y: Elem) -> Vec<Elem> {
        let r = &*self.pa.ring;
        (0..self.order()).map(|g| r.mul(x, self.pa.cut(g, y))).collect()
    }

    pub fn one(&self) -> Vec<Elem> {
        self.pa.ones().to_vec()
    }

    pub fn zero(&self) -> Vec<Elem> {
        vec![self.pa.ring.zero(); self.order()]
    }

    pub fn add(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        a.iter().zip(b).map(|(&x, &y)| self.pa.ring.add(x, y)).collect()
    }

    pub fn mul(&self, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        a.iter().zip(b).map(|(&x, &y)| self.pa.ring.mul(x, y)).collect()
    }

    pub fn elements(&self) -> Vec<Vec<Elem>> {
        let mut out = vec![Vec::new()];
        for g in 0..self.order() {
            let ideal = self.pa.ring.ideal(self.pa.one(g)).elements;
            out = out.into_iter().flat_map(|v: Vec<Elem>| ideal.iter().map(move |&c| [v.clone(), vec![c]].concat())).collect();
        }
        out
    }

    /// When `Rᵅ` is the prime subring, compares the model with the literal
    /// tensor ring `R ⊗ R`: `b_i ⊗ b_j ↦ ψ(b_i ⊗ b_j)` must be a ring
    /// isomorphism.
    pub fn check_against_tensor(&self, ext: &GaloisExtension) -> Result<ValidationReport> {
        let te = tensor_extensions(ext, ext)?;
        let t = te.ext.ring();
        let r = &*self.pa.ring;
        let (b1, b2) = (&te.basis1, &te.basis2);
        let d2 = b2.dim();
        let image = |z: Elem| -> Vec<Elem> {
            let c = t.algebra_coords(z).expect("tensor ring element");
            c.iter().enumerate().fold(self.zero(), |acc, (ij, &k)| {
                let p = self.pure(b1.basis[ij / d2], b2.basis[ij % d2]);
                self.add(&acc, &p.iter().map(|&v| r.scale(k, v)).collect::<Vec<_>>())
            })
        };
        let table: Vec<Vec<Elem>> = t.elements().map(image).collect();
        let mut rep = ValidationReport::new();
        let distinct: BTreeSet<&Vec<Elem>> = table.iter().collect();
        rep.record(
            "psi bijective from R (x) R",
            (distinct.len() != t.size() || t.size() != self.elements().len()).then(|| format!("{} images for {} tensors", distinct.len(), t.size())),
        );
        rep.record(
            "psi multiplicative",
            first_violation(t.elements().flat_map(|a| t.elements().map(move |b| (a, b))), |&(a, b)| {
                table[t.mul(a, b).0 as usize] == self.mul(&table[a.0 as usize], &table[b.0 as usize])
            }, |&(a, b)| format!("{} * {}", t.show(a), t.show(b))),
        );
        rep.record("psi unital", (table[t.one().0 as usize] != self.one()).then(|| "1 (x) 1 does not map to 1".to_string()));
        rep.record(
            "psi on pure tensors",
            first_violation(r.elements().flat_map(|x| r.elements().map(move |y| (x, y))), |&(x, y)| table[te.pure(x, y).0 as usize] == self.pure(x, y), |&(x, y)| {
                format!("{} (x) {}", r.show(x), r.show(y))
            }),
        );
        Ok(rep)
    }
}

#[derive(Clone, Debug)]
pub struct IdempotentFamily {
    pub e: Vec<Vec<Elem>>,
    pub report: ValidationReport,
}

/// `e_g = ψ⁻¹(v_{g⁻¹})` with `v_h` the indicator of `h` valued `1_h`;
/// orthogonality, `Σ e_g = 1` and `(1 ⊗ α_g(x1_{g⁻¹}))e_g = (x ⊗ 1)e_g` are
/// checked exhaustively.
pub fn galois_idempotents(model: &TensorSquareModel) -> IdempotentFamily {
    let pa = &model.pa;
    let (r, grp) = (&*pa.ring, &*pa.group);
    let n = model.order();
    let e: Vec<Vec<Elem>> = (0..n)
        .map(|g| {
            let mut v = model.zero();
            v[grp.inv(g)] = pa.one(grp.inv(g));
            v
        })
        .collect();
    let mut rep = ValidationReport::new();
    rep.record(
        "e_g idempotent",
        first_violation(0..n, |&g| model.mul(&e[g], &e[g]) == e[g], |&g| format!("g = {}", pa.label(g))),
    );
    rep.record(
        "e_g e_h = 0 for g != h",
        first_violation((0..n).flat_map(|g| (0..n).map(move |h| (g, h))).filter(|(g, h)| g != h), |&(g, h)| model.mul(&e[g], &e[h]) == model.zero(), |&(g, h)| {
            format!("(g,h) = ({},{})", pa.label(g), pa.label(h))
        }),
    );
    let total = e.iter().fold(model.zero(), |acc, v| model.add(&acc, v));
    rep.record("sum of e_g = 1", (total != model.one()).then(|| format!("sum = {total:?}")));
    rep.record(
        "(1 (x) alpha_g(x 1_g^-1)) e_g = (x (x) 1) e_g",
        first_violation((0..n).flat_map(|g| r.elements().map(move |x| (g, x))), |&(g, x)| {
            model.mul(&model.pure(r.one(), pa.cut(g, x)), &e[g]) == model.mul(&model.pure(x, r.one()), &e[g])
        }, |&(g, x)| format!("g = {}, x = {}", pa.label(g), r.show(x))),
    );
    IdempotentFamily { e, report: rep }
}

/// `η(Σ r_g δ_g) = Σ (r_g ⊗ 1) e_{g⁻¹}` on every element, with round-trip checks.
pub fn eta_iso(model: &TensorSquareModel, cp: &CrossedProduct) -> (Vec<(Vec<Elem>, Vec<Elem>)>, ValidationReport) {
    let fam = galois_idempotents(model);
    let pa = &model.pa;
    let (r, grp) = (&*pa.ring, &*pa.group);
    let eta = |x: &[Elem]| {
        x.iter().enumerate().fold(model.zero(), |acc, (g, &c)| model.add(&acc, &model.mul(&model.pure(c, r.one()), &fam.e[grp.inv(g)])))
    };
    // The component at g of η(x) is the coefficient of δ_g.
    let eta_inv = |v: &[Elem]| v.to_vec();
    let mons: Vec<Vec<Elem>> = cp.monomials().into_iter().map(|(g, c)| cp.monomial(g, c)).collect();
    let pairs: Vec<(Vec<Elem>, Vec<Elem>)> = cp.elements().into_iter().map(|x| {
        let v = eta(&x);
        (x, v)
    }).collect();
    let mut rep = ValidationReport::new();
    rep.record("eta^-1 eta = id on R*G", pairs.iter().find(|(x, v)| eta_inv(v) != *x).map(|(x, _)| cp.show(x)));
    let all = model.elements();
    rep.record(
        "eta eta^-1 = id on R^e",
        all.iter().find(|v| eta(&eta_inv(v)) != **v).map(|v| format!("{v:?}")),
    );
    rep.record(
        "eta left R-linear",
        first_violation(mons.iter().flat_map(|m| r.elements().map(move |s| (m, s))), |&(m, s)| {
            let sm: Vec<Elem> = m.iter().map(|&c| r.mul(s, c)).collect();
            eta(&sm) == model.mul(&model.pure(s, r.one()), &eta(m))
        }, |&(m, s)| format!("{} times {}", r.show(s), cp.show(m))),
    );
    rep.record(
        "r (x) s = eta(sum_g r alpha_g(s 1_g^-1) delta_g)",
        first_violation(r.elements().flat_map(|x| r.elements().map(move |y| (x, y))), |&(x, y)| {
            let sum: Vec<Elem> = (0..model.order()).map(|g| r.mul(x, pa.cut(g, y))).collect();
            eta(&sum) == model.pure(x, y)
        }, |&(x, y)| format!("{} (x) {}", r.show(x), r.show(y))),
    );
    (pairs, rep)
}
