//! Side documents that refer to an extension by its content hash.

use crate::action::PartialAction;
use crate::cohomology::{Cochain, Complex};
use crate::error::{Error, Result};
use crate::ring::Elem;
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainEntry {
    pub tuple: Vec<usize>,
    pub value: Value,
}

/// Cochain (also used for `ρ`); missing tuples take the cut identity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CochainDoc {
    pub extension_hash: String,
    pub degree: usize,
    pub values: Vec<CochainEntry>,
}

/// Units `u_g ∈ U(D_{g⁻¹})` defining `ψ_g = u_g α_{g⁻¹}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PsiDoc {
    pub extension_hash: String,
    pub units: Vec<Value>,
}

fn check_hash(found: &str, expected: &str) -> Result<()> {
    if found != expected {
        return Err(Error::Parse(format!("document refers to extension {found}, input is {expected}")));
    }
    Ok(())
}

impl CochainDoc {
    pub fn parse(text: &str) -> Result<CochainDoc> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("cochain document: {e}")))
    }

    pub fn build(&self, pa: &PartialAction, hash: &str) -> Result<Cochain> {
        check_hash(&self.extension_hash, hash)?;
        let grp = &*pa.group;
        let mut f = Cochain::identity(pa, self.degree);
        let mut seen = vec![false; f.values.len()];
        for e in &self.values {
            if e.tuple.len() != self.degree || e.tuple.iter().any(|&g| g >= grp.order()) {
                return Err(Error::malformed(format!("tuple {:?} is not in G^{}", e.tuple, self.degree)));
            }
            let c = grp.tuple_code(&e.tuple);
            if std::mem::replace(&mut seen[c], true) {
                return Err(Error::malformed(format!("tuple {:?} given twice", e.tuple)));
            }
            f.values[c] = pa.ring.from_json(&e.value)?;
        }
        Complex::new(pa).check(&f)?;
        Ok(f)
    }

    pub fn from_cochain(pa: &PartialAction, f: &Cochain, hash: &str) -> CochainDoc {
        let grp = &*pa.group;
        let values = (0..f.values.len())
            .map(|c| CochainEntry { tuple: grp.tuple(f.degree, c), value: pa.ring.to_json(f.values[c]) })
            .collect();
        CochainDoc { extension_hash: hash.to_string(), degree: f.degree, values }
    }
}

impl PsiDoc {
    pub fn parse(text: &str) -> Result<PsiDoc> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("psi document: {e}")))
    }

    pub fn build(&self, pa: &PartialAction, hash: &str) -> Result<Vec<Elem>> {
        check_hash(&self.extension_hash, hash)?;
        self.units.iter().map(|v| pa.ring.from_json(v)).collect()
    }
}
