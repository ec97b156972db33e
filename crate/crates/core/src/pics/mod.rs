//! The inverse monoid `PicS(R)`, the partial action `α*` on it, and partial
//! representations of `G` built from it.

mod action;
mod bimodule;
mod doc;
mod monoid;
mod rep;

#[cfg(test)]
mod tests;

pub use action::{alpha_star, pics_invariants, z1_pics, PicSAction};
pub use bimodule::{tensor_matches, tensor_oracle, TensorOutcome, Twisted, TwistedIdempotents};
pub use doc::{AlphaStarDoc, AlphaStarEntry, MapEntry, PicSDoc};
pub use monoid::{Matrix, PicSElement, PicSMonoid};
pub use rep::{check_phi0, check_rep, phi0, phi0_combined, phi_f, validate_partial_rep, Combined, CombinedMonoid, RepTarget};

use crate::ring::Ring;

/// Concrete `PicS(R)`.
pub fn pics(r: &Ring) -> PicSMonoid {
    PicSMonoid::concrete(r)
}
