//! Tensor products of partial Galois extensions over a common prime base.

use super::{GaloisCoordinates, GaloisExtension, PartialAction};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::ring::{Algebra, Elem, FreeBasis, Ring};
use std::sync::Arc;

/// `R₁ ⊗_k R₂` with the `G×H` action, plus the data to form pure tensors.
#[derive(Debug)]
pub struct TensorExtension {
    pub ext: GaloisExtension,
    pub basis1: FreeBasis,
    pub basis2: FreeBasis,
    /// Group sizes, for `(g, h) ↦ g·|H| + h`.
    pub order2: usize,
}

impl TensorExtension {
    /// The pure tensor `x ⊗ y`.
    pub fn pure(&self, x: Elem, y: Elem) -> Elem {
        pure_tensor(self.ext.ring(), &self.basis1, &self.basis2, x, y)
    }

    pub fn pair(&self, g: usize, h: usize) -> usize {
        g * self.order2 + h
    }
}

fn pure_tensor(t: &Ring, b1: &FreeBasis, b2: &FreeBasis, x: Elem, y: Elem) -> Elem {
    let n = b1.modulus;
    let (cx, cy) = (b1.coords(x), b2.coords(y));
    let c: Vec<u64> = cx.iter().flat_map(|&a| cy.iter().map(move |&b| (a * b) % n)).collect();
    t.algebra_elem(&c).expect("tensor coordinates")
}

/// The base must be the prime subring of both rings, and both rings free
/// over it; otherwise the construction is refused.
pub fn tensor_extensions(e1: &GaloisExtension, e2: &GaloisExtension) -> Result<TensorExtension> {
    let (r1, r2) = (e1.ring(), e2.ring());
    let (n1, n2) = (r1.characteristic(), r2.characteristic());
    if n1 != n2 {
        return Err(Error::pre(format!("invariant subrings differ: characteristics {n1} and {n2}")));
    }
    if !e1.invariants.is_prime_subring() || !e2.invariants.is_prime_subring() {
        return Err(Error::pre(format!("invariant subrings differ from the common base Z/{n1}")));
    }
    let b1 = FreeBasis::find(r1)?;
    let b2 = FreeBasis::find(r2)?;
    let (d1, d2) = (b1.dim(), b2.dim());
    let d = d1 * d2;
    let mut consts = vec![0u64; d * d * d];
    for i in 0..d1 {
        for j in 0..d2 {
            for k in 0..d1 {
                for l in 0..d2 {
                    let p1 = b1.coords(r1.mul(b1.basis[i], b1.basis[k]));
                    let p2 = b2.coords(r2.mul(b2.basis[j], b2.basis[l]));
                    let (a, b) = (i * d2 + j, k * d2 + l);
                    for (u, &cu) in p1.iter().enumerate() {
                        for (v, &cv) in p2.iter().enumerate() {
                            consts[(a * d + b) * d + u * d2 + v] = (cu * cv) % n1;
                        }
                    }
                }
            }
        }
    }
    let one: Vec<u64> = b1.coords(r1.one()).iter().flat_map(|&a| b2.coords(r2.one()).iter().map(move |&b| (a * b) % n1)).collect();
    let t = Arc::new(Ring::algebra(Algebra { modulus: n1, dim: d, consts, one })?);
    let (pa1, pa2) = (&e1.action, &e2.action);
    let grp = Arc::new(FiniteGroup::product(&pa1.group, &pa2.group));
    let nh = pa2.order();
    let ones: Vec<Elem> = grp.elements().map(|gh| pure_tensor(&t, &b1, &b2, pa1.one(gh / nh), pa2.one(gh % nh))).collect();
    let action = PartialAction::from_fn(t.clone(), grp, ones, |gh, x| {
        let (g, h) = (gh / nh, gh % nh);
        let c = t.algebra_coords(x).expect("algebra element");
        t.sum(c.iter().enumerate().filter(|(_, &ci)| ci != 0).map(|(ij, &ci)| {
            let (i, j) = (ij / d2, ij % d2);
            let img = pure_tensor(&t, &b1, &b2, pa1.cut(g, b1.basis[i]), pa2.cut(h, b2.basis[j]));
            t.scale(ci, img)
        }))
    })?;
    let (c1, c2) = (&e1.coords, &e2.coords);
    let mut x = Vec::new();
    let mut y = Vec::new();
    for i in 0..c1.x.len() {
        for j in 0..c2.x.len() {
            x.push(pure_tensor(&t, &b1, &b2, c1.x[i], c2.x[j]));
            y.push(pure_tensor(&t, &b1, &b2, c1.y[i], c2.y[j]));
        }
    }
    let ext = GaloisExtension::new(action, Some(GaloisCoordinates { x, y }), 0)?;
    Ok(TensorExtension { ext, basis1: b1, basis2: b2, order2: nh })
}
