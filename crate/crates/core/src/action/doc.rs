//! JSON extension documents: ring, group, action and optional twisting and
//! coordinates.

use super::{GaloisCoordinates, PartialAction};
use crate::cohomology::Cochain;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupDesc};
use crate::ring::{Ring, RingDesc};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlphaEntry {
    pub g: usize,
    pub one_g: Value,
    pub alpha: Vec<(Value, Value)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwistEntry {
    pub g: usize,
    pub h: usize,
    pub value: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoordsDoc {
    pub x: Vec<Value>,
    pub y: Vec<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionDoc {
    pub ring: RingDesc,
    pub group: GroupDesc,
    pub action: Vec<AlphaEntry>,
    /// Missing pairs default to `1_g 1_gh`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub twisting: Option<Vec<TwistEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coordinates: Option<CoordsDoc>,
}

/// A parsed extension document.
#[derive(Clone, Debug)]
pub struct LoadedExtension {
    pub action: PartialAction,
    pub twisting: Option<Cochain>,
    pub coords: Option<GaloisCoordinates>,
}

/// SHA-256 (hex) of the sorted-key re-serialization of a JSON document.
pub fn content_hash(doc: &Value) -> String {
    // serde_json maps are ordered by key, so to_string is canonical.
    hex::encode(Sha256::digest(doc.to_string().as_bytes()))
}

impl ActionDoc {
    pub fn parse(text: &str) -> Result<ActionDoc> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("serializable")
    }

    pub fn hash(&self) -> String {
        content_hash(&self.to_value())
    }

    pub fn build(&self) -> Result<LoadedExtension> {
        let ring = Arc::new(self.ring.build()?);
        let group = Arc::new(FiniteGroup::from_desc(&self.group)?);
        let n = group.order();
        let mut ones = vec![None; n];
        let mut tables = vec![Vec::new(); n];
        for entry in &self.action {
            if entry.g >= n {
                return Err(Error::malformed(format!("action entry for g = {} outside a group of order {n}", entry.g)));
            }
            if ones[entry.g].is_some() {
                return Err(Error::malformed(format!("two action entries for g = {}", entry.g)));
            }
            ones[entry.g] = Some(ring.from_json(&entry.one_g)?);
            tables[entry.g] = entry
                .alpha
                .iter()
                .map(|(s, d)| Ok((ring.from_json(s)?, ring.from_json(d)?)))
                .collect::<Result<Vec<_>>>()?;
        }
        let ones = ones
            .into_iter()
            .enumerate()
            .map(|(g, o)| o.ok_or_else(|| Error::malformed(format!("no action entry for g = {g}"))))
            .collect::<Result<Vec<_>>>()?;
        let action = PartialAction::new(ring.clone(), group.clone(), ones, tables)?;
        let twisting = match &self.twisting {
            None => None,
            Some(entries) => {
                let mut w = Cochain::identity(&action, 2);
                for t in entries {
                    if t.g >= n || t.h >= n {
                        return Err(Error::malformed(format!("twisting entry ({},{}) outside the group", t.g, t.h)));
                    }
                    w.values[t.g * n + t.h] = ring.from_json(&t.value)?;
                }
                Some(w)
            }
        };
        let coords = match &self.coordinates {
            None => None,
            Some(c) => Some(GaloisCoordinates {
                x: c.x.iter().map(|v| ring.from_json(v)).collect::<Result<_>>()?,
                y: c.y.iter().map(|v| ring.from_json(v)).collect::<Result<_>>()?,
            }),
        };
        Ok(LoadedExtension { action, twisting, coords })
    }

    /// Document for an action; fails for rings without a description.
    pub fn from_action(pa: &PartialAction, twisting: Option<&Cochain>, coords: Option<&GaloisCoordinates>) -> Result<ActionDoc> {
        let r: &Ring = &pa.ring;
        let ring = r.desc().ok_or_else(|| Error::pre(format!("{} has no JSON description", r.describe())))?;
        let grp = &pa.group;
        let n = grp.order();
        let action = grp
            .elements()
            .map(|g| AlphaEntry {
                g,
                one_g: r.to_json(pa.one(g)),
                alpha: pa.table(g).into_iter().map(|(s, d)| (r.to_json(s), r.to_json(d))).collect(),
            })
            .collect();
        let twisting = twisting.map(|w| {
            (0..n * n)
                .map(|c| TwistEntry { g: c / n, h: c % n, value: r.to_json(w.values[c]) })
                .collect()
        });
        let coordinates = coords.map(|c| CoordsDoc {
            x: c.x.iter().map(|&v| r.to_json(v)).collect(),
            y: c.y.iter().map(|&v| r.to_json(v)).collect(),
        });
        Ok(ActionDoc { ring, group: grp.desc(), action, twisting, coordinates })
    }
}
