//! Partial Galois theory over finite commutative rings.
//!
//! Rings are finite and every structure is handled by exhaustive enumeration
//! over encoded elements, so every claim a function makes is checkable.

pub mod action;
pub mod cli;
pub mod cohomology;
pub mod crossed;
pub mod error;
pub mod group;
pub mod lattice;
pub mod numth;
pub mod pics;
pub mod report;
pub mod ring;
pub mod seven_term;

pub use error::{Error, Result};
pub use report::{Check, ValidationReport};
