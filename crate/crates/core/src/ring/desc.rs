//! JSON ring descriptions.

use super::{Algebra, Ring};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FactorDesc {
    Zmod { modulus: u64 },
    /// `F_p[x]/(poly)`, coefficients low to high.
    Quotient { p: u64, poly: Vec<u64> },
}

/// Free `Z/n`-algebra; `structure[i][j]` is the coordinate vector of `b_i b_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDesc {
    pub modulus: u64,
    pub structure: Vec<Vec<Vec<u64>>>,
    pub one: Vec<u64>,
}

/// Either `{"factors": [...]}` or `{"algebra": {...}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingDesc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<FactorDesc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraDesc>,
}

impl RingDesc {
    pub fn build(&self) -> Result<Ring> {
        match (&self.factors, &self.algebra) {
            (Some(f), None) => Ring::product(f),
            (None, Some(a)) => {
                let dim = a.one.len();
                if a.structure.len() != dim || a.structure.iter().any(|row| row.len() != dim || row.iter().any(|v| v.len() != dim)) {
                    return Err(Error::malformed("algebra structure must be dim x dim x dim"));
                }
                let consts = a.structure.iter().flatten().flatten().copied().collect();
                Ring::algebra(Algebra { modulus: a.modulus, dim, consts, one: a.one.clone() })
            }
            _ => Err(Error::malformed("ring needs exactly one of \"factors\" or \"algebra\"")),
        }
    }
}

/// Parses and builds a ring from JSON text.
pub fn build_ring(text: &str) -> Result<Ring> {
    let desc: RingDesc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    desc.build()
}
