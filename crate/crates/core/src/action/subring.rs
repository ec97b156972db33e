use crate::error::{Error, Result};
use crate::ring::{Elem, Ring};
use std::collections::HashMap;
use std::sync::Arc;

/// A subring as a ring in its own right, with its inclusion.
#[derive(Debug)]
pub struct Subring {
    pub parent: Arc<Ring>,
    pub ring: Ring,
    /// `embed[i]` is the parent element of subring element `i`.
    pub embed: Vec<Elem>,
    index: HashMap<Elem, Elem>,
}

impl Subring {
    pub fn new(parent: Arc<Ring>, mut elements: Vec<Elem>) -> Result<Subring> {
        elements.sort();
        elements.dedup();
        let index: HashMap<Elem, Elem> = elements.iter().enumerate().map(|(i, &x)| (x, Elem(i as u32))).collect();
        let look = |x: Elem| index.get(&x).map(|e| e.0).ok_or_else(|| Error::pre(format!("{} escapes the subring", parent.show(x))));
        let n = elements.len();
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for &a in &elements {
            for &b in &elements {
                add.push(look(parent.add(a, b))?);
                mul.push(look(parent.mul(a, b))?);
            }
        }
        let one = Elem(look(parent.one())?);
        if !index.contains_key(&parent.zero()) {
            return Err(Error::pre("zero is not in the subring"));
        }
        let ring = Ring::from_tables(n as u32, add, mul, one)?;
        Ok(Subring { parent, ring, embed: elements, index })
    }

    pub fn elements(&self) -> &[Elem] {
        &self.embed
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.index.contains_key(&x)
    }

    /// Subring element for a parent element.
    pub fn local(&self, x: Elem) -> Option<Elem> {
        self.index.get(&x).copied()
    }

    pub fn len(&self) -> usize {
        self.embed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.embed.is_empty()
    }

    /// Whether the subring is exactly the prime subring `Z·1`.
    pub fn is_prime_subring(&self) -> bool {
        self.embed.len() as u64 == self.parent.characteristic()
    }

    /// Whether this subring is a field.
    pub fn is_field(&self) -> bool {
        let r = &self.ring;
        r.size() > 1 && r.units(r.one()).order() == r.size() - 1
    }
}
