//! Partial group cohomology with values in `T = Rt` for an invariant
//! idempotent `t` (usually `t = 1`).
//!
//! An n-cochain stores one value per n-tuple, indexed by the tuple's
//! mixed-radix code; degree 0 stores a single unit of `T`.

mod linear;
mod oracle;

pub use linear::{Boundaries, CohomologyGroup};
pub use oracle::OracleResult;

use crate::action::PartialAction;
use crate::error::{check_cap, Error, Result};
use crate::ring::{Elem, Ring, UnitGroup};
use std::sync::Arc;

/// Full enumeration is allowed up to this many cochains.
pub const DEFAULT_CAP: u128 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cochain {
    pub degree: usize,
    pub values: Vec<Elem>,
}

impl Cochain {
    /// `(g₁,…,gₙ) ↦ 1_{g₁}1_{g₁g₂}⋯1_{g₁⋯gₙ}` with `T = R`.
    pub fn identity(pa: &PartialAction, n: usize) -> Cochain {
        Complex::new(pa).identity(n)
    }

    pub fn at(&self, pa: &PartialAction, tuple: &[usize]) -> Elem {
        debug_assert_eq!(tuple.len(), self.degree);
        self.values[pa.group.tuple_code(tuple)]
    }

    pub fn show(&self, pa: &PartialAction) -> String {
        let grp = &pa.group;
        (0..self.values.len())
            .map(|c| format!("{} -> {}", grp.show_tuple(&grp.tuple(self.degree, c)), pa.ring.show(self.values[c])))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// The cochain complex of `pa` with coefficients in `Rt`.
#[derive(Clone, Debug)]
pub struct Complex<'a> {
    pub pa: &'a PartialAction,
    pub t: Elem,
}

impl<'a> Complex<'a> {
    pub fn new(pa: &'a PartialAction) -> Complex<'a> {
        Complex { pa, t: pa.ring.one() }
    }

    /// Coefficients in the ideal `Rt`; `t` must be an α-invariant idempotent.
    pub fn with_coefficients(pa: &'a PartialAction, t: Elem) -> Result<Complex<'a>> {
        if !pa.ring.is_idempotent(t) || !pa.is_invariant(t) {
            return Err(Error::pre(format!("{} is not an invariant idempotent", pa.ring.show(t))));
        }
        Ok(Complex { pa, t })
    }

    fn ring(&self) -> &Ring {
        &self.pa.ring
    }

    /// `t·1_{g₁}1_{g₁g₂}⋯1_{g₁⋯gₙ}`.
    pub fn cut(&self, tuple: &[usize]) -> Elem {
        let (r, grp) = (self.ring(), &self.pa.group);
        let mut acc = self.t;
        let mut prefix = 0;
        for &g in tuple {
            prefix = grp.mul(prefix, g);
            acc = r.mul(acc, self.pa.one(prefix));
        }
        acc
    }

    pub fn tuple_count(&self, n: usize) -> usize {
        self.pa.group.tuple_count(n)
    }

    pub fn tuples(&self, n: usize) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.tuple_count(n)).map(move |c| self.pa.group.tuple(n, c))
    }

    /// Unit group of each tuple's cut ideal, in tuple order.
    pub fn unit_groups(&self, n: usize) -> Vec<Arc<UnitGroup>> {
        self.tuples(n).map(|t| self.ring().units(self.cut(&t))).collect()
    }

    pub fn identity(&self, n: usize) -> Cochain {
        Cochain { degree: n, values: self.tuples(n).map(|t| self.cut(&t)).collect() }
    }

    /// `|Cⁿ|` (saturating).
    pub fn order(&self, n: usize) -> u128 {
        self.unit_groups(n).iter().fold(1u128, |acc, u| acc.saturating_mul(u.order() as u128))
    }

    /// Checks `f(τ) ∈ U(cut(τ))` for every tuple.
    pub fn check(&self, f: &Cochain) -> Result<()> {
        if f.values.len() != self.tuple_count(f.degree) {
            return Err(Error::pre(format!("{}-cochain needs {} values", f.degree, self.tuple_count(f.degree))));
        }
        for (c, &v) in f.values.iter().enumerate() {
            let t = self.pa.group.tuple(f.degree, c);
            if !self.ring().units(self.cut(&t)).contains(v) {
                return Err(Error::pre(format!(
                    "value {} at {} is not a unit of its cut ideal",
                    self.ring().show(v),
                    self.pa.group.show_tuple(&t)
                )));
            }
        }
        Ok(())
    }

    pub fn mul(&self, f: &Cochain, g: &Cochain) -> Cochain {
        assert_eq!(f.degree, g.degree);
        Cochain { degree: f.degree, values: f.values.iter().zip(&g.values).map(|(&a, &b)| self.ring().mul(a, b)).collect() }
    }

    /// Pointwise inverse inside each cut ideal.
    pub fn inverse(&self, f: &Cochain) -> Cochain {
        let values = self
            .tuples(f.degree)
            .zip(&f.values)
            .map(|(t, &v)| self.ring().inv_in(v, self.cut(&t)).expect("cochain value is a unit"))
            .collect();
        Cochain { degree: f.degree, values }
    }

    /// `δⁿ` of a cochain assumed valid.
    pub fn coboundary_unchecked(&self, f: &Cochain) -> Cochain {
        let (r, grp, pa) = (self.ring(), &*self.pa.group, self.pa);
        let n = f.degree;
        let inv = |v: Elem, tuple: &[usize]| r.inv_in(v, self.cut(tuple)).expect("cochain value is a unit");
        let values = self
            .tuples(n + 1)
            .map(|g| {
                let mut acc = pa.cut(g[0], f.at(pa, &g[1..]));
                for i in 0..n {
                    let mut merged = g.clone();
                    merged[i] = grp.mul(g[i], g[i + 1]);
                    merged.remove(i + 1);
                    let v = f.at(pa, &merged);
                    acc = r.mul(acc, if i % 2 == 0 { inv(v, &merged) } else { v });
                }
                let last = f.at(pa, &g[..n]);
                // sign (−1)^{n+1}
                r.mul(acc, if n % 2 == 0 { inv(last, &g[..n]) } else { last })
            })
            .collect();
        Cochain { degree: n + 1, values }
    }

    pub fn coboundary(&self, f: &Cochain) -> Result<Cochain> {
        self.check(f)?;
        Ok(self.coboundary_unchecked(f))
    }

    pub fn is_cocycle(&self, f: &Cochain) -> Result<bool> {
        Ok(self.coboundary(f)? == self.identity(f.degree + 1))
    }

    /// All cochains of degree `n`, lexicographic in their values.
    pub fn cochains(&self, n: usize, cap: u128) -> Result<Vec<Cochain>> {
        check_cap(&format!("C^{n}"), self.order(n), cap)?;
        let mut out = vec![Vec::new()];
        for u in self.unit_groups(n) {
            let mut units = u.elements.clone();
            units.sort();
            out = out.into_iter().flat_map(|v: Vec<Elem>| units.iter().map(move |&x| [v.clone(), vec![x]].concat())).collect();
        }
        Ok(out.into_iter().map(|values| Cochain { degree: n, values }).collect())
    }

    /// First `u` in canonical order with `δu = f`.
    pub fn is_coboundary(&self, f: &Cochain, cap: u128) -> Result<Option<Cochain>> {
        if f.degree == 0 {
            return Err(Error::pre("degree 0 cochains are not coboundaries of anything"));
        }
        self.check(f)?;
        Ok(self.cochains(f.degree - 1, cap)?.into_iter().find(|u| &self.coboundary_unchecked(u) == f))
    }

    /// Uniform random cochain.
    pub fn random(&self, n: usize, rng: &mut impl rand::Rng) -> Cochain {
        let values = self.unit_groups(n).iter().map(|u| u.elements[rng.gen_range(0..u.elements.len())]).collect();
        Cochain { degree: n, values }
    }

    pub fn cohomology(&self, n: usize, cap: u128) -> Result<CohomologyGroup> {
        linear::cohomology(self, n, cap)
    }

    /// Linear-algebra membership test for `Bⁿ`, `n ≥ 1`.
    pub fn boundaries(&self, n: usize) -> Boundaries {
        Boundaries::new(self, n)
    }

    pub fn oracle(&self, n: usize, cap: u128) -> Result<OracleResult> {
        oracle::bruteforce(self, n, cap)
    }
}

/// `δⁿf` with coefficients in `R`.
pub fn coboundary(pa: &PartialAction, f: &Cochain) -> Result<Cochain> {
    Complex::new(pa).coboundary(f)
}

pub fn is_cocycle(pa: &PartialAction, f: &Cochain) -> Result<bool> {
    Complex::new(pa).is_cocycle(f)
}

pub fn is_coboundary(pa: &PartialAction, f: &Cochain) -> Result<Option<Cochain>> {
    Complex::new(pa).is_coboundary(f, DEFAULT_CAP)
}

pub fn cohomology_group(pa: &PartialAction, n: usize) -> Result<CohomologyGroup> {
    Complex::new(pa).cohomology(n, DEFAULT_CAP)
}

pub fn bruteforce_oracle(pa: &PartialAction, n: usize) -> Result<OracleResult> {
    Complex::new(pa).oracle(n, DEFAULT_CAP)
}
