//! `φ₁: H¹ → Pic(Rᵅ)` through the invariant modules `R_f^G`, and
//! `φ₂: Pic(Rᵅ) → PicS(R)^{α*} ∩ Pic(R)`.

use crate::action::{GaloisExtension, PartialAction};
use crate::cohomology::{Cochain, Complex};
use crate::error::{Error, Result};
use crate::pics::{alpha_star, Matrix, PicSAction, PicSElement};
use crate::report::{first_violation, ValidationReport};
use crate::ring::Elem;
use std::collections::BTreeSet;

#[derive(Clone, Debug)]
pub struct InvariantModuleResult {
    /// `R_f^G` in canonical order.
    pub elements: Vec<Elem>,
    /// `m` with `Rᵅ → R_f^G, s ↦ sm` bijective.
    pub generator: Option<Elem>,
    /// `a` with `f = δ⁰a`, when one exists.
    pub coboundary_of: Option<Elem>,
    /// Concrete layer: `Pic(Rᵅ)` is trivial, so a free module has the trivial class.
    pub class: &'static str,
    pub report: ValidationReport,
}

/// `{ r : f(g)α_g(r1_{g⁻¹}) = 1_g r for all g }`.
pub fn invariant_module(pa: &PartialAction, f: &Cochain) -> Vec<Elem> {
    let r = &*pa.ring;
    r.elements()
        .filter(|&x| pa.group.elements().all(|g| r.mul(f.values[g], pa.cut(g, x)) == r.mul(pa.one(g), x)))
        .collect()
}

fn span(pa: &PartialAction, scalars: &[Elem], m: Elem) -> BTreeSet<Elem> {
    scalars.iter().map(|&s| pa.ring.mul(s, m)).collect()
}

/// First `m` (trying `1` first) with `Rᵅm = module` and `s ↦ sm` injective.
fn free_generator(pa: &PartialAction, scalars: &[Elem], module: &[Elem]) -> Option<Elem> {
    let target: BTreeSet<Elem> = module.iter().copied().collect();
    let one = pa.ring.one();
    let order = std::iter::once(one).filter(|x| target.contains(x)).chain(module.iter().copied().filter(|&x| x != one));
    order.into_iter().find(|&m| span(pa, scalars, m) == target && target.len() == scalars.len())
}

pub fn phi1(ext: &GaloisExtension, f: &Cochain) -> Result<InvariantModuleResult> {
    let pa = &ext.action;
    let r = &*pa.ring;
    let cx = Complex::new(pa);
    if f.degree != 1 || !cx.is_cocycle(f)? {
        return Err(Error::pre("f is not a 1-cocycle"));
    }
    let elements = invariant_module(pa, f);
    let scalars = pa.invariants();
    let mut rep = ValidationReport::new();
    let set: BTreeSet<Elem> = elements.iter().copied().collect();
    rep.record(
        "closed under addition",
        first_violation(elements.iter().flat_map(|&a| elements.iter().map(move |&b| (a, b))), |&(a, b)| set.contains(&r.add(a, b)), |&(a, b)| {
            format!("{} + {}", r.show(a), r.show(b))
        }),
    );
    rep.record(
        "closed under R^alpha scaling",
        first_violation(scalars.iter().flat_map(|&s| elements.iter().map(move |&m| (s, m))), |&(s, m)| set.contains(&r.mul(s, m)), |&(s, m)| {
            format!("{} * {}", r.show(s), r.show(m))
        }),
    );
    let generator = free_generator(pa, &scalars, &elements);
    rep.record("free of rank 1 over R^alpha", generator.is_none().then(|| format!("{} elements, no free generator", elements.len())));
    let coboundary_of = cx.is_coboundary(f, u128::MAX)?.map(|a| a.values[0]);
    if let Some(a) = coboundary_of {
        let scaled: BTreeSet<Elem> = elements.iter().map(|&m| r.mul(a, m)).collect();
        let inv: BTreeSet<Elem> = scalars.iter().copied().collect();
        rep.record("a R_f^G = R^alpha for f = delta0(a)", (scaled != inv).then(|| format!("a = {}", r.show(a))));
    }
    Ok(InvariantModuleResult { elements, generator, coboundary_of, class: "trivial", report: rep })
}

/// `generator(f)·generator(f')` generates `R_{ff'}^G`, for all pairs.
pub fn check_phi1_multiplicative(ext: &GaloisExtension, cocycles: &[Cochain]) -> Result<ValidationReport> {
    let pa = &ext.action;
    let cx = Complex::new(pa);
    let scalars = pa.invariants();
    let gens = cocycles.iter().map(|f| phi1(ext, f).map(|p| p.generator)).collect::<Result<Vec<_>>>()?;
    let mut rep = ValidationReport::new();
    let mut fail = None;
    'outer: for (i, f) in cocycles.iter().enumerate() {
        for (j, f2) in cocycles.iter().enumerate() {
            let (Some(m), Some(m2)) = (gens[i], gens[j]) else {
                fail = Some(format!("no generator for cocycle {}", if gens[i].is_none() { i } else { j }));
                break 'outer;
            };
            let prod = cx.mul(f, f2);
            let target: BTreeSet<Elem> = invariant_module(pa, &prod).into_iter().collect();
            if span(pa, &scalars, pa.ring.mul(m, m2)) != target {
                fail = Some(format!("f = {}, f' = {}", f.show(pa), f2.show(pa)));
                break 'outer;
            }
        }
    }
    rep.record("generator(f) generator(f') generates R_ff'^G", fail);
    Ok(rep)
}

#[derive(Clone, Debug)]
pub struct Phi2Result {
    pub image: PicSElement,
    pub report: ValidationReport,
}

/// Concrete layer: the only class `[Rᵅ]` goes to `[R]`.
pub fn phi2(ext: &GaloisExtension) -> Phi2Result {
    let act = alpha_star(&ext.action);
    let image = act.monoid.one();
    let mut rep = ValidationReport::new();
    rep.record("image in Pic(R)", (image.comp != act.monoid.top).then(|| act.monoid.show(&image)));
    rep.record("image alpha*-invariant", (!act.is_invariant(&image)).then(|| act.monoid.show(&image)));
    Phi2Result { image, report: rep }
}

/// Symbolic layer: `Pic(Rᵅ) = ⊕ Z/dᵢ` mapped into the units component by a
/// supplied scalar-extension matrix; each image must be invariant.
pub fn phi2_symbolic(act: &PicSAction, source: &[u64], matrix: &Matrix) -> Result<(Vec<(Vec<u64>, PicSElement)>, ValidationReport)> {
    let m = &act.monoid;
    let target = &m.groups[m.top];
    if matrix.len() != target.len() || matrix.iter().any(|row| row.len() != source.len()) {
        return Err(Error::malformed("scalar-extension matrix has the wrong shape"));
    }
    let mut xs = vec![Vec::new()];
    for &d in source {
        xs = xs.into_iter().flat_map(|v: Vec<u64>| (0..d).map(move |k| [v.clone(), vec![k]].concat())).collect();
    }
    let apply = |x: &[u64]| -> PicSElement {
        let a = target
            .iter()
            .enumerate()
            .map(|(j, &d)| (matrix[j].iter().zip(x).map(|(&c, &v)| c as i128 * v as i128).sum::<i128>()).rem_euclid(d as i128) as u64)
            .collect();
        PicSElement { comp: m.top, a }
    };
    let images: Vec<(Vec<u64>, PicSElement)> = xs.iter().map(|x| (x.clone(), apply(x))).collect();
    let mut rep = ValidationReport::new();
    rep.record(
        "well-defined homomorphism",
        first_violation(source.iter().enumerate(), |&(i, &d)| {
            let mut e = vec![0; source.len()];
            e[i] = d;
            apply(&e) == m.one()
        }, |&(i, _)| format!("generator {i}")),
    );
    rep.record("image alpha*-invariant", first_violation(images.iter(), |(_, y)| act.is_invariant(y), |(x, y)| format!("{:?} -> {}", x, m.show(y))));
    Ok((images, rep))
}
