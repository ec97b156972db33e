//! Canonical actions used across tests, examples and the CLI.

use super::{restrict_global_action, GaloisCoordinates, GaloisExtension, PartialAction};
use crate::cohomology::Cochain;
use crate::group::FiniteGroup;
use crate::ring::{Elem, FactorDesc, Ring};
use std::sync::Arc;

fn gf4() -> Ring {
    Ring::quotient(2, &[1, 1, 1]).expect("GF(4)")
}

/// EX-A: `C2 = {1, σ}` acting on `GF(4)` by Frobenius.
pub fn ex_a() -> PartialAction {
    let r = Arc::new(gf4());
    let g = Arc::new(FiniteGroup::cyclic(2).with_labels(&["1", "σ"]));
    let rr = r.clone();
    PartialAction::global(r, g, move |g, x| if g == 0 { x } else { rr.mul(x, x) }).expect("EX-A")
}

/// EX-B: `C3` on `F2×F2` with `1_g = (1,0)`, `1_{g²} = (0,1)` and
/// `α_g(0,a) = (a,0)`, `α_{g²}(a,0) = (0,a)`.
pub fn ex_b() -> PartialAction {
    let r = Arc::new(Ring::product(&[FactorDesc::Zmod { modulus: 2 }, FactorDesc::Zmod { modulus: 2 }]).expect("F2xF2"));
    let g = Arc::new(FiniteGroup::cyclic(3));
    let ones = vec![r.el("[1,1]"), r.el("[1,0]"), r.el("[0,1]")];
    // (a,b) is encoded as 2a + b.
    let swap = |x: Elem| Elem(((x.0 & 1) << 1) | (x.0 >> 1));
    PartialAction::from_fn(r, g, ones, move |g, x| if g == 0 { x } else { swap(x) }).expect("EX-B")
}

/// `C3` cyclically permuting the coordinates of `F2³`: `β_g(a,b,c) = (b,c,a)`.
pub fn c3_on_f2_cubed() -> PartialAction {
    let r = Arc::new(Ring::product(&vec![FactorDesc::Zmod { modulus: 2 }; 3]).expect("F2^3"));
    let g = Arc::new(FiniteGroup::cyclic(3));
    let rot = |x: Elem| {
        let (a, b, c) = ((x.0 >> 2) & 1, (x.0 >> 1) & 1, x.0 & 1);
        Elem((b << 2) | (c << 1) | a)
    };
    PartialAction::global(r, g, move |g, x| (0..g).fold(x, |y, _| rot(y))).expect("C3 on F2^3")
}

/// EX-B obtained by restricting [`c3_on_f2_cubed`] to `e = (1,1,0)`.
pub fn ex_b_by_restriction() -> PartialAction {
    let s = c3_on_f2_cubed();
    let e = s.ring.el("[1,1,0]");
    restrict_global_action(&s, e).expect("restriction")
}

/// `C2×C2` permuting the factors of `GF(4)^4` regularly, restricted to
/// `e = (1,1,1,0)`: a genuinely partial action on a 3-factor ring.
pub fn klein_on_gf4_cubed() -> PartialAction {
    let f = FactorDesc::Quotient { p: 2, poly: vec![1, 1, 1] };
    let s = Arc::new(Ring::product(&vec![f; 4]).expect("GF(4)^4"));
    let k = Arc::new(FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)));
    // factor m of β_g(x) is factor g^-1 m = g xor m of x
    let beta = |g: usize, x: Elem| {
        let d: Vec<u32> = (0..4).map(|m| (x.0 >> (2 * (3 - m))) & 3).collect();
        Elem((0..4).fold(0, |acc, m| (acc << 2) | d[g ^ m]))
    };
    let global = PartialAction::global(s.clone(), k, beta).expect("Klein on GF(4)^4");
    restrict_global_action(&global, s.el("[[1],[1],[1],[0]]")).expect("restriction")
}

/// `C2` acting trivially on `F3`: not Galois, and `H²` is nontrivial.
pub fn trivial_c2_on_f3() -> PartialAction {
    let r = Arc::new(Ring::zmod(3).expect("F3"));
    PartialAction::global(r, Arc::new(FiniteGroup::cyclic(2)), |_, x| x).expect("trivial C2")
}

/// `F2` over itself with the trivial group.
pub fn trivial_extension() -> PartialAction {
    PartialAction::trivial(Arc::new(Ring::zmod(2).expect("F2")))
}

/// `ω` equal to `1_g 1_gh` except `ω(g,h) = value`.
pub fn twisting_with(pa: &PartialAction, g: usize, h: usize, value: Elem) -> Cochain {
    let mut w = Cochain::identity(pa, 2);
    w.values[g * pa.order() + h] = value;
    w
}

/// EX-A as a Galois extension, coordinates found by search.
pub fn ex_a_galois() -> GaloisExtension {
    GaloisExtension::new(ex_a(), None, 2).expect("EX-A is Galois")
}

pub fn ex_b_galois() -> GaloisExtension {
    let pa = ex_b();
    let (p, q) = (pa.ring.el("[1,0]"), pa.ring.el("[0,1]"));
    GaloisExtension::new(pa, Some(GaloisCoordinates { x: vec![p, q], y: vec![p, q] }), 2).expect("EX-B is Galois")
}

pub fn trivial_galois() -> GaloisExtension {
    GaloisExtension::new(trivial_extension(), None, 1).expect("trivial extension")
}
