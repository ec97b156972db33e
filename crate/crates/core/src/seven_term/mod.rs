//! The computable maps of the seven-term sequence and the composite probes.

mod composites;
mod phi12;
mod phi3;
mod phi4;
mod phi6;


pub use composites::{verify_composites, Probe, SequenceReport, EMPIRICAL_NOTE};
pub use phi12::{check_phi1_multiplicative, invariant_module, phi1, phi2, phi2_symbolic, InvariantModuleResult, Phi2Result};
pub use phi3::{phi3, phi3_change_witness, Phi3Result, PsiFamily};
pub use phi4::{check_phi4_homomorphism, phi4, Phi4Record};
pub use phi6::{check_phi6_class_change, phi6, phi6_loop, Phi6Result};
