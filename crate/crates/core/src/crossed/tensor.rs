//! `(R ⋆_{α,ω} G) ⊗_k (S ⋆_{θ,ω̃} H) ≅ (R ⊗_k S) ⋆ (G × H)` with twisting
//! `ω ⊗ ω̃`, via `ξ(a_g δ_g ⊗ b_h δ'_h) = (a_g ⊗ b_h) ε_{(g,h)}`.

use super::CrossedProduct;
use crate::action::{tensor_extensions, GaloisExtension, TensorExtension};
use crate::cohomology::Cochain;
use crate::error::Result;
use crate::report::ValidationReport;
use crate::ring::Elem;

#[derive(Debug)]
pub struct TensorCrossed {
    pub tensor: TensorExtension,
    pub cp: CrossedProduct,
    /// Multiplicativity and bijectivity of `ξ`.
    pub report: ValidationReport,
}

/// `(ω ⊗ ω̃)((g,h),(g',h')) = ω(g,g') ⊗ ω̃(h,h')`.
pub fn tensor_twisting(te: &TensorExtension, w1: &Cochain, w2: &Cochain) -> Cochain {
    let (n1, n2) = (w1.values.len().isqrt(), te.order2);
    let n = n1 * n2;
    let values = (0..n * n)
        .map(|c| {
            let (a, b) = (c / n, c % n);
            let (g, h, g2, h2) = (a / n2, a % n2, b / n2, b % n2);
            te.pure(w1.values[g * n1 + g2], w2.values[h * n2 + h2])
        })
        .collect();
    Cochain { degree: 2, values }
}

pub fn tensor_crossed(e1: &GaloisExtension, w1: &Cochain, e2: &GaloisExtension, w2: &Cochain) -> Result<TensorCrossed> {
    let cp1 = CrossedProduct::new(e1.action.clone(), w1.clone())?;
    let cp2 = CrossedProduct::new(e2.action.clone(), w2.clone())?;
    let te = tensor_extensions(e1, e2)?;
    let omega = tensor_twisting(&te, w1, w2);
    let cp = CrossedProduct::new(te.ext.action.clone(), omega)?;
    let xi = |g: usize, a: Elem, h: usize, b: Elem| cp.monomial(te.pair(g, h), te.pure(a, b));
    let (m1, m2) = (cp1.monomials(), cp2.monomials());
    let mut rep = ValidationReport::new();
    let mut fail = None;
    'outer: for &(g, a) in &m1 {
        for &(h, b) in &m2 {
            let x = xi(g, a, h, b);
            for &(g2, a2) in &m1 {
                let p1 = cp1.mul(&cp1.monomial(g, a), &cp1.monomial(g2, a2));
                let g12 = e1.action.group.mul(g, g2);
                for &(h2, b2) in &m2 {
                    let p2 = cp2.mul(&cp2.monomial(h, b), &cp2.monomial(h2, b2));
                    let h12 = e2.action.group.mul(h, h2);
                    let lhs = xi(g12, p1[g12], h12, p2[h12]);
                    let rhs = cp.mul(&x, &xi(g2, a2, h2, b2));
                    if lhs != rhs {
                        fail = Some(format!(
                            "({}) (x) ({}) times ({}) (x) ({})",
                            cp1.show(&cp1.monomial(g, a)),
                            cp2.show(&cp2.monomial(h, b)),
                            cp1.show(&cp1.monomial(g2, a2)),
                            cp2.show(&cp2.monomial(h2, b2))
                        ));
                        break 'outer;
                    }
                }
            }
        }
    }
    rep.record("xi multiplicative on monomial pairs", fail);
    // ξ sends the product basis onto spanning pure tensors, so it is
    // bijective iff the k-ranks match.
    let k = te.basis1.modulus as u128;
    let rank = |mut s: u128| {
        let mut d = 0u64;
        while s > 1 {
            s /= k;
            d += 1;
        }
        d
    };
    let (r1, r2, r) = (rank(cp1.size()), rank(cp2.size()), rank(cp.size()));
    rep.record("xi bijective (rank count)", (r1 * r2 != r).then(|| format!("{r1} * {r2} != {r}")));
    let one = xi(0, cp1.one()[0], 0, cp2.one()[0]);
    rep.record("xi unital", (one != cp.one()).then(|| cp.show(&one)));
    Ok(TensorCrossed { tensor: te, cp, report: rep })
}
