//! JSON form of a symbolic `PicS` with an optional `α*`.

use super::action::PicSAction;
use super::monoid::{Matrix, PicSMonoid};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupDesc};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapEntry {
    pub from: usize,
    pub to: usize,
    pub matrix: Matrix,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlphaStarEntry {
    pub g: usize,
    pub maps: Vec<MapEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlphaStarDoc {
    pub group: GroupDesc,
    /// Component of `[D_g]` per group element.
    pub domains: Vec<usize>,
    /// Elements without an entry act as the identity on every component.
    #[serde(default)]
    pub maps: Vec<AlphaStarEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PicSDoc {
    pub components: Vec<String>,
    pub meet: Vec<Vec<usize>>,
    pub groups: Vec<Vec<u64>>,
    /// `ε_{e,f}` for `e > f`.
    #[serde(default)]
    pub eps: Vec<MapEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<AlphaStarDoc>,
}

impl PicSDoc {
    pub fn parse(text: &str) -> Result<PicSDoc> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("PicS document: {e}")))
    }

    pub fn monoid(&self) -> Result<PicSMonoid> {
        let mut eps = BTreeMap::new();
        for m in &self.eps {
            if eps.insert((m.from, m.to), m.matrix.clone()).is_some() {
                return Err(Error::malformed(format!("eps_({},{}) given twice", m.from, m.to)));
            }
        }
        PicSMonoid::symbolic(self.components.clone(), self.meet.clone(), self.groups.clone(), eps)
    }

    /// The monoid, and `α*` when the document has one.
    pub fn build(&self) -> Result<(PicSMonoid, Option<PicSAction>)> {
        let monoid = self.monoid()?;
        let Some(a) = &self.action else { return Ok((monoid, None)) };
        let group = Arc::new(FiniteGroup::from_desc(&a.group)?);
        let (n, c) = (group.order(), monoid.components());
        if a.domains.len() != n || a.domains.iter().any(|&d| d >= c) {
            return Err(Error::malformed("domains must name one component per group element"));
        }
        let mut comps = vec![vec![None; c]; n];
        let mut mats = vec![vec![None; c]; n];
        let given: Vec<usize> = a.maps.iter().map(|m| m.g).collect();
        for g in 0..n {
            if !given.contains(&g) {
                let dom = a.domains[group.inv(g)];
                for e in (0..c).filter(|&e| monoid.leq(e, dom)) {
                    comps[g][e] = Some(e);
                    mats[g][e] = Some(super::monoid::identity_matrix(monoid.groups[e].len()));
                }
            }
        }
        for entry in &a.maps {
            if entry.g >= n {
                return Err(Error::malformed(format!("alpha* entry for unknown group element {}", entry.g)));
            }
            for m in &entry.maps {
                if m.from >= c {
                    return Err(Error::malformed(format!("alpha* map from unknown component {}", m.from)));
                }
                if comps[entry.g][m.from].replace(m.to).is_some() {
                    return Err(Error::malformed(format!("alpha*_{} given twice on {}", entry.g, m.from)));
                }
                mats[entry.g][m.from] = Some(m.matrix.clone());
            }
        }
        let act = PicSAction::symbolic(monoid.clone(), group, a.domains.clone(), comps, mats)?;
        Ok((monoid, Some(act)))
    }
}
