//! Finite commutative unital rings with elements encoded as integers.
//!
//! Three presentations share one interface: products of local factors
//! (`Z/p^k` or `F_p[x]/(f)`), algebras over `Z/n` given by structure constants
//! (used for tensor products), and explicit tables (used for subrings).
//! Element codes order tuples lexicographically, first coordinate most
//! significant, so iterating `0..size` is the canonical enumeration.

mod basis;
mod desc;
mod morphism;
mod units;

pub use basis::FreeBasis;
pub use desc::{build_ring, AlgebraDesc, FactorDesc, RingDesc};
pub use morphism::{check_morphism, Carrier, RingMorphism};
pub use units::{Ideal, UnitGroup};

use crate::error::{Error, Result};
use crate::numth::{is_prime, prime_power};
use crate::report::ValidationReport;
use rand::{Rng as _, SeedableRng};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

/// Largest ring handled at all.
pub const MAX_RING_SIZE: u64 = 1 << 20;
/// Largest local factor; its tables are precomputed.
pub const MAX_FACTOR_SIZE: u64 = 1024;
/// Rings up to this size cache full addition and multiplication tables.
const TABLE_CACHE_SIZE: u64 = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Elem(pub u32);

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

struct Factor {
    desc: FactorDesc,
    q: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    is_field: bool,
}

impl Factor {
    fn build(desc: &FactorDesc) -> Result<Factor> {
        let (q, add, mul): (u64, Vec<u32>, Vec<u32>) = match desc {
            FactorDesc::Zmod { modulus } => {
                let m = *modulus;
                if m == 0 {
                    return Err(Error::malformed("zero modulus"));
                }
                if prime_power(m).is_none() {
                    return Err(Error::malformed(format!("modulus {m} is not a prime power, so Z/{m} is not local")));
                }
                if m > MAX_FACTOR_SIZE {
                    return Err(Error::malformed(format!("factor of size {m} exceeds {MAX_FACTOR_SIZE}")));
                }
                let mut add = Vec::with_capacity((m * m) as usize);
                let mut mul = Vec::with_capacity((m * m) as usize);
                for a in 0..m {
                    for b in 0..m {
                        add.push(((a + b) % m) as u32);
                        mul.push(((a * b) % m) as u32);
                    }
                }
                (m, add, mul)
            }
            FactorDesc::Quotient { p, poly } => {
                let p = *p;
                if !is_prime(p) {
                    return Err(Error::malformed(format!("quotient base {p} is not prime")));
                }
                if poly.len() < 2 {
                    return Err(Error::malformed("quotient polynomial must have degree >= 1"));
                }
                if poly[poly.len() - 1] % p != 1 {
                    return Err(Error::malformed("non-monic polynomial"));
                }
                let d = poly.len() - 1;
                let q = (p as u128).pow(d as u32);
                if q > MAX_FACTOR_SIZE as u128 {
                    return Err(Error::malformed(format!("factor of size {q} exceeds {MAX_FACTOR_SIZE}")));
                }
                let q = q as u64;
                let f: Vec<u64> = poly.iter().map(|c| c % p).collect();
                let coeffs = |mut x: u64| -> Vec<u64> {
                    (0..d).map(|_| {
                        let c = x % p;
                        x /= p;
                        c
                    }).collect()
                };
                let encode = |c: &[u64]| -> u64 { c.iter().rev().fold(0, |acc, &ci| acc * p + ci) };
                let polymul = |a: &[u64], b: &[u64]| -> Vec<u64> {
                    let mut prod = vec![0u64; 2 * d];
                    for (i, &ai) in a.iter().enumerate() {
                        for (j, &bj) in b.iter().enumerate() {
                            prod[i + j] = (prod[i + j] + ai * bj) % p;
                        }
                    }
                    for k in (d..2 * d).rev() {
                        let c = prod[k];
                        if c != 0 {
                            for (i, &fi) in f.iter().enumerate().take(d) {
                                prod[k - d + i] = (prod[k - d + i] + (p - c) * fi) % p;
                            }
                            prod[k] = 0;
                        }
                    }
                    prod.truncate(d);
                    prod
                };
                let all: Vec<Vec<u64>> = (0..q).map(coeffs).collect();
                let mut add = Vec::with_capacity((q * q) as usize);
                let mut mul = Vec::with_capacity((q * q) as usize);
                for a in &all {
                    for b in &all {
                        let s: Vec<u64> = a.iter().zip(b).map(|(x, y)| (x + y) % p).collect();
                        add.push(encode(&s) as u32);
                        mul.push(encode(&polymul(a, b)) as u32);
                    }
                }
                (q, add, mul)
            }
        };
        let qq = q as usize;
        let neg = (0..qq)
            .map(|a| (0..qq).find(|&b| add[a * qq + b] == 0).expect("additive inverse") as u32)
            .collect();
        let one = match desc {
            FactorDesc::Zmod { .. } => 1 % q as u32,
            FactorDesc::Quotient { .. } => 1,
        };
        let is_field = q > 1 && (1..qq).all(|a| (0..qq).any(|b| mul[a * qq + b] == one));
        Ok(Factor { desc: desc.clone(), q: q as u32, add, mul, neg, is_field })
    }

    fn show(&self, r: u32) -> String {
        match &self.desc {
            FactorDesc::Zmod { .. } => r.to_string(),
            FactorDesc::Quotient { p, poly } => {
                let d = poly.len() - 1;
                let mut x = r as u64;
                let mut terms = Vec::new();
                for i in 0..d {
                    let c = x % p;
                    x /= p;
                    if c == 0 {
                        continue;
                    }
                    let mono = match i {
                        0 => String::new(),
                        1 => "x".to_string(),
                        _ => format!("x^{i}"),
                    };
                    terms.push(match (c, i) {
                        (_, 0) => c.to_string(),
                        (1, _) => mono,
                        _ => format!("{c}{mono}"),
                    });
                }
                if terms.is_empty() {
                    "0".to_string()
                } else {
                    terms.reverse();
                    terms.join("+")
                }
            }
        }
    }
}

/// A commutative algebra over `Z/n`, free with basis `b_0..b_{dim-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub modulus: u64,
    pub dim: usize,
    /// `consts[(i*dim + j)*dim + k]` is the `b_k` coefficient of `b_i b_j`.
    pub consts: Vec<u64>,
    pub one: Vec<u64>,
}

enum Backend {
    Product { factors: Vec<Factor>, place: Vec<u32> },
    Algebra(Algebra),
    Table { add: Vec<u32>, mul: Vec<u32> },
}

pub struct Ring {
    backend: Backend,
    size: u32,
    one: Elem,
    neg: Vec<u32>,
    add_t: Option<Vec<u32>>,
    mul_t: Option<Vec<u32>>,
    idempotents: OnceLock<Vec<Elem>>,
    units: Mutex<HashMap<Elem, Arc<UnitGroup>>>,
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({}, {} elements)", self.describe(), self.size)
    }
}

impl Ring {
    /// Product of local factors.
    pub fn product(descs: &[FactorDesc]) -> Result<Ring> {
        if descs.is_empty() {
            return Err(Error::malformed("ring needs at least one factor"));
        }
        let factors = descs.iter().map(Factor::build).collect::<Result<Vec<_>>>()?;
        let total: u64 = factors.iter().try_fold(1u64, |acc, f| acc.checked_mul(f.q as u64)).unwrap_or(u64::MAX);
        if total > MAX_RING_SIZE {
            return Err(Error::malformed(format!("ring of size {total} exceeds {MAX_RING_SIZE}")));
        }
        let mut place = vec![1u32; factors.len()];
        for i in (0..factors.len().saturating_sub(1)).rev() {
            place[i] = place[i + 1] * factors[i + 1].q;
        }
        let one = factors.iter().zip(&place).map(|(f, pl)| (1 % f.q) * pl).sum();
        Ring::finish(Backend::Product { factors, place }, total as u32, Elem(one))
    }

    pub fn zmod(n: u64) -> Result<Ring> {
        Ring::product(&[FactorDesc::Zmod { modulus: n }])
    }

    /// `F_p[x]/(poly)`, coefficients low to high.
    pub fn quotient(p: u64, poly: &[u64]) -> Result<Ring> {
        Ring::product(&[FactorDesc::Quotient { p, poly: poly.to_vec() }])
    }

    /// Free `Z/n`-algebra from structure constants; axioms are checked.
    pub fn algebra(alg: Algebra) -> Result<Ring> {
        let n = alg.modulus;
        if n < 2 || prime_power(n).is_none() {
            return Err(Error::malformed("algebra modulus must be a prime power"));
        }
        if alg.consts.len() != alg.dim.pow(3) || alg.one.len() != alg.dim {
            return Err(Error::malformed("structure constants have the wrong shape"));
        }
        let size = (n as u128).pow(alg.dim as u32);
        if size > MAX_RING_SIZE as u128 {
            return Err(Error::malformed(format!("algebra of size {size} exceeds {MAX_RING_SIZE}")));
        }
        let one = Elem(encode_coords(&alg.one, n) as u32);
        let ring = Ring::finish(Backend::Algebra(alg), size as u32, one)?;
        let report = ring.verify_axioms();
        if !report.is_ok() {
            let c = report.failures().next().expect("failure");
            return Err(Error::malformed(format!("algebra fails {}: {}", c.name, c.witness.clone().unwrap_or_default())));
        }
        Ok(ring)
    }

    /// Ring given by full tables on `0..size`.
    pub fn from_tables(size: u32, add: Vec<u32>, mul: Vec<u32>, one: Elem) -> Result<Ring> {
        let n = size as usize;
        if add.len() != n * n || mul.len() != n * n {
            return Err(Error::malformed("table size mismatch"));
        }
        Ring::finish(Backend::Table { add, mul }, size, one)
    }

    fn finish(backend: Backend, size: u32, one: Elem) -> Result<Ring> {
        let mut ring = Ring {
            backend,
            size,
            one,
            neg: Vec::new(),
            add_t: None,
            mul_t: None,
            idempotents: OnceLock::new(),
            units: Mutex::new(HashMap::new()),
        };
        if (size as u64) <= TABLE_CACHE_SIZE {
            if !matches!(ring.backend, Backend::Table { .. }) {
                let n = size;
                let mut add = Vec::with_capacity((n * n) as usize);
                let mut mul = Vec::with_capacity((n * n) as usize);
                for a in 0..n {
                    for b in 0..n {
                        add.push(ring.raw_add(a, b));
                        mul.push(ring.raw_mul(a, b));
                    }
                }
                ring.add_t = Some(add);
                ring.mul_t = Some(mul);
            }
        }
        ring.neg = (0..size).map(|a| ring.raw_neg(a)).collect();
        Ok(ring)
    }

    fn digits(&self, mut x: u32) -> Vec<u32> {
        match &self.backend {
            Backend::Product { factors, .. } => {
                let mut out = vec![0; factors.len()];
                for (i, f) in factors.iter().enumerate().rev() {
                    out[i] = x % f.q;
                    x /= f.q;
                }
                out
            }
            Backend::Algebra(a) => {
                let n = a.modulus as u32;
                let mut out = vec![0; a.dim];
                for i in (0..a.dim).rev() {
                    out[i] = x % n;
                    x /= n;
                }
                out
            }
            Backend::Table { .. } => vec![x],
        }
    }

    fn raw_add(&self, a: u32, b: u32) -> u32 {
        match &self.backend {
            Backend::Product { factors, place } => {
                let (da, db) = (self.digits(a), self.digits(b));
                factors.iter().enumerate().map(|(i, f)| f.add[(da[i] * f.q + db[i]) as usize] * place[i]).sum()
            }
            Backend::Algebra(alg) => {
                let n = alg.modulus;
                let (da, db) = (self.digits(a), self.digits(b));
                let s: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (*x as u64 + *y as u64) % n).collect();
                encode_coords(&s, n) as u32
            }
            Backend::Table { add, .. } => add[(a * self.size + b) as usize],
        }
    }

    fn raw_mul(&self, a: u32, b: u32) -> u32 {
        match &self.backend {
            Backend::Product { factors, place } => {
                let (da, db) = (self.digits(a), self.digits(b));
                factors.iter().enumerate().map(|(i, f)| f.mul[(da[i] * f.q + db[i]) as usize] * place[i]).sum()
            }
            Backend::Algebra(alg) => {
                let (n, d) = (alg.modulus, alg.dim);
                let (da, db) = (self.digits(a), self.digits(b));
                let mut out = vec![0u64; d];
                for i in 0..d {
                    if da[i] == 0 {
                        continue;
                    }
                    for j in 0..d {
                        if db[j] == 0 {
                            continue;
                        }
                        let c = (da[i] as u64 * db[j] as u64) % n;
                        for (k, o) in out.iter_mut().enumerate() {
                            *o = (*o + c * alg.consts[(i * d + j) * d + k]) % n;
                        }
                    }
                }
                encode_coords(&out, n) as u32
            }
            Backend::Table { mul, .. } => mul[(a * self.size + b) as usize],
        }
    }

    fn raw_neg(&self, a: u32) -> u32 {
        match &self.backend {
            Backend::Product { factors, place } => {
                let da = self.digits(a);
                factors.iter().enumerate().map(|(i, f)| f.neg[da[i] as usize] * place[i]).sum()
            }
            Backend::Algebra(alg) => {
                let n = alg.modulus;
                let s: Vec<u64> = self.digits(a).iter().map(|x| (n - *x as u64) % n).collect();
                encode_coords(&s, n) as u32
            }
            Backend::Table { .. } => (0..self.size).find(|&b| self.raw_add(a, b) == 0).expect("additive inverse"),
        }
    }

    pub fn size(&self) -> usize {
        self.size as usize
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.size).map(Elem)
    }

    pub fn zero(&self) -> Elem {
        Elem(0)
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.add_t {
            Some(t) => Elem(t[(a.0 * self.size + b.0) as usize]),
            None => Elem(self.raw_add(a.0, b.0)),
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.mul_t {
            Some(t) => Elem(t[(a.0 * self.size + b.0) as usize]),
            None => Elem(self.raw_mul(a.0, b.0)),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.neg[a.0 as usize])
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// `a^k` with `a^0 = 1`.
    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        self.pow_in(a, k, self.one)
    }

    /// `a^k` inside the ideal with identity `e`, so `a^0 = e`.
    pub fn pow_in(&self, a: Elem, mut k: u64, e: Elem) -> Elem {
        let mut acc = e;
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn sum<I: IntoIterator<Item = Elem>>(&self, items: I) -> Elem {
        items.into_iter().fold(self.zero(), |a, b| self.add(a, b))
    }

    pub fn prod<I: IntoIterator<Item = Elem>>(&self, items: I) -> Elem {
        items.into_iter().fold(self.one, |a, b| self.mul(a, b))
    }

    /// `k·a` for an integer `k >= 0`.
    pub fn scale(&self, k: u64, a: Elem) -> Elem {
        let mut acc = self.zero();
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    /// Additive order of 1.
    pub fn characteristic(&self) -> u64 {
        let mut x = self.one;
        let mut n = 1;
        while x != self.zero() {
            x = self.add(x, self.one);
            n += 1;
        }
        n
    }

    pub fn is_idempotent(&self, e: Elem) -> bool {
        self.mul(e, e) == e
    }

    /// All idempotents in canonical order.
    pub fn idempotents(&self) -> &[Elem] {
        self.idempotents.get_or_init(|| self.elements().filter(|&e| self.is_idempotent(e)).collect())
    }

    /// `x` lies in the ideal generated by the idempotent `e`.
    pub fn in_ideal(&self, x: Elem, e: Elem) -> bool {
        self.mul(x, e) == x
    }

    pub fn ideal(&self, e: Elem) -> Ideal {
        Ideal::new(self, e)
    }

    /// Unit group of the ideal `Re` (cached per idempotent).
    pub fn units(&self, e: Elem) -> Arc<UnitGroup> {
        if let Some(u) = self.units.lock().expect("unit cache").get(&e) {
            return u.clone();
        }
        let u = Arc::new(UnitGroup::of_ideal(self, e));
        self.units.lock().expect("unit cache").insert(e, u.clone());
        u
    }

    /// Inverse of `x` inside `Re`, if `x` is a unit there.
    pub fn inv_in(&self, x: Elem, e: Elem) -> Option<Elem> {
        self.units(e).inv(x)
    }

    /// The ring `Re` with identity `e`, plus its inclusion into this ring.
    /// Product rings cut by a 0/1 idempotent stay products of factors.
    pub fn corner(&self, e: Elem) -> Result<(Ring, Vec<Elem>)> {
        if let Backend::Product { factors, place } = &self.backend {
            let d = self.digits(e.0);
            if d.iter().all(|&x| x <= 1) && d.contains(&1) {
                let sel: Vec<usize> = (0..d.len()).filter(|&i| d[i] == 1).collect();
                let descs: Vec<FactorDesc> = sel.iter().map(|&i| factors[i].desc.clone()).collect();
                let sub = Ring::product(&descs)?;
                let embed = sub
                    .elements()
                    .map(|x| Elem(sel.iter().zip(sub.digits(x.0)).map(|(&i, r)| r * place[i]).sum()))
                    .collect();
                return Ok((sub, embed));
            }
        }
        let elements = self.ideal(e).elements;
        let index: HashMap<Elem, u32> = elements.iter().enumerate().map(|(i, &x)| (x, i as u32)).collect();
        let n = elements.len();
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for &a in &elements {
            for &b in &elements {
                add.push(index[&self.add(a, b)]);
                mul.push(index[&self.mul(a, b)]);
            }
        }
        let sub = Ring::from_tables(n as u32, add, mul, Elem(index[&e]))?;
        Ok((sub, elements))
    }

    /// Description that rebuilds this ring (`None` for table rings).
    pub fn desc(&self) -> Option<RingDesc> {
        match &self.backend {
            Backend::Product { factors, .. } => Some(RingDesc { factors: Some(factors.iter().map(|f| f.desc.clone()).collect()), algebra: None }),
            Backend::Algebra(a) => {
                let d = a.dim;
                let structure = (0..d)
                    .map(|i| (0..d).map(|j| a.consts[(i * d + j) * d..(i * d + j + 1) * d].to_vec()).collect())
                    .collect();
                Some(RingDesc { factors: None, algebra: Some(AlgebraDesc { modulus: a.modulus, structure, one: a.one.clone() }) })
            }
            Backend::Table { .. } => None,
        }
    }

    pub fn local_factor_count(&self) -> Option<usize> {
        match &self.backend {
            Backend::Product { factors, .. } => Some(factors.len()),
            _ => None,
        }
    }

    /// Whether each quotient factor is a field (`None` for zmod factors).
    pub fn quotient_fields(&self) -> Vec<Option<bool>> {
        match &self.backend {
            Backend::Product { factors, .. } => factors
                .iter()
                .map(|f| match f.desc {
                    FactorDesc::Quotient { .. } => Some(f.is_field),
                    FactorDesc::Zmod { .. } => None,
                })
                .collect(),
            _ => Vec::new(),
        }
    }

    pub fn describe(&self) -> String {
        match &self.backend {
            Backend::Product { factors, .. } => factors
                .iter()
                .map(|f| match &f.desc {
                    FactorDesc::Zmod { modulus } => format!("Z/{modulus}"),
                    FactorDesc::Quotient { p, poly } => format!("F{p}[x]/({})", poly_string(poly)),
                })
                .collect::<Vec<_>>()
                .join(" x "),
            Backend::Algebra(a) => format!("Z/{}-algebra of rank {}", a.modulus, a.dim),
            Backend::Table { .. } => format!("table ring of order {}", self.size),
        }
    }

    /// Human-readable element.
    pub fn show(&self, x: Elem) -> String {
        match &self.backend {
            Backend::Product { factors, .. } => {
                let d = self.digits(x.0);
                let parts: Vec<String> = factors.iter().zip(&d).map(|(f, r)| f.show(*r)).collect();
                if parts.len() == 1 {
                    parts.into_iter().next().expect("one part")
                } else {
                    format!("({})", parts.join(","))
                }
            }
            Backend::Algebra(_) => {
                let d: Vec<String> = self.digits(x.0).iter().map(|c| c.to_string()).collect();
                format!("[{}]", d.join(","))
            }
            Backend::Table { .. } => format!("#{}", x.0),
        }
    }

    /// JSON form: per factor a residue (zmod) or coefficient array (quotient);
    /// algebra elements are coordinate arrays; table elements are indices.
    pub fn to_json(&self, x: Elem) -> serde_json::Value {
        use serde_json::Value;
        match &self.backend {
            Backend::Product { factors, .. } => {
                let d = self.digits(x.0);
                Value::Array(
                    factors
                        .iter()
                        .zip(&d)
                        .map(|(f, &r)| match &f.desc {
                            FactorDesc::Zmod { .. } => Value::from(r),
                            FactorDesc::Quotient { p, poly } => {
                                let mut r = r as u64;
                                Value::Array(
                                    (0..poly.len() - 1)
                                        .map(|_| {
                                            let c = r % p;
                                            r /= p;
                                            Value::from(c)
                                        })
                                        .collect(),
                                )
                            }
                        })
                        .collect(),
                )
            }
            Backend::Algebra(_) => Value::Array(self.digits(x.0).into_iter().map(Value::from).collect()),
            Backend::Table { .. } => Value::from(x.0),
        }
    }

    pub fn from_json(&self, v: &serde_json::Value) -> Result<Elem> {
        let bad = || Error::Parse(format!("bad element {v} for {}", self.describe()));
        match &self.backend {
            Backend::Product { factors, place } => {
                let arr = v.as_array().ok_or_else(bad)?;
                if arr.len() != factors.len() {
                    return Err(bad());
                }
                let mut code = 0u32;
                for ((f, pl), item) in factors.iter().zip(place).zip(arr) {
                    let r = match &f.desc {
                        FactorDesc::Zmod { modulus } => {
                            let r = item.as_i64().ok_or_else(bad)?;
                            r.rem_euclid(*modulus as i64) as u32
                        }
                        FactorDesc::Quotient { p, poly } => {
                            let cs = item.as_array().ok_or_else(bad)?;
                            if cs.len() > poly.len() - 1 {
                                return Err(bad());
                            }
                            let mut r = 0u64;
                            for c in cs.iter().rev() {
                                let c = c.as_i64().ok_or_else(bad)?.rem_euclid(*p as i64) as u64;
                                r = r * p + c;
                            }
                            r as u32
                        }
                    };
                    code += r * pl;
                }
                Ok(Elem(code))
            }
            Backend::Algebra(a) => {
                let arr = v.as_array().ok_or_else(bad)?;
                if arr.len() != a.dim {
                    return Err(bad());
                }
                let cs = arr
                    .iter()
                    .map(|c| c.as_i64().map(|c| c.rem_euclid(a.modulus as i64) as u64).ok_or_else(bad))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Elem(encode_coords(&cs, a.modulus) as u32))
            }
            Backend::Table { .. } => {
                let i = v.as_u64().ok_or_else(bad)?;
                if i >= self.size as u64 {
                    return Err(bad());
                }
                Ok(Elem(i as u32))
            }
        }
    }

    /// Parses JSON element text; panics on bad input (fixtures and tests).
    pub fn el(&self, text: &str) -> Elem {
        let v: serde_json::Value = serde_json::from_str(text).expect("element JSON");
        self.from_json(&v).expect("element")
    }

    /// Algebra coordinates of an element (algebra backend only).
    pub fn algebra_coords(&self, x: Elem) -> Option<Vec<u64>> {
        match &self.backend {
            Backend::Algebra(_) => Some(self.digits(x.0).into_iter().map(u64::from).collect()),
            _ => None,
        }
    }

    pub fn algebra_elem(&self, coords: &[u64]) -> Option<Elem> {
        match &self.backend {
            Backend::Algebra(a) if coords.len() == a.dim => {
                let cs: Vec<u64> = coords.iter().map(|c| c % a.modulus).collect();
                Some(Elem(encode_coords(&cs, a.modulus) as u32))
            }
            _ => None,
        }
    }

    /// Commutativity, associativity, distributivity and identity; exhaustive
    /// for small rings, sampled with a fixed seed otherwise.
    pub fn verify_axioms(&self) -> ValidationReport {
        let n = self.size;
        let triples: Vec<(Elem, Elem, Elem)> = if (n as u64).pow(3) <= 1 << 18 {
            let mut v = Vec::new();
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        v.push((Elem(a), Elem(b), Elem(c)));
                    }
                }
            }
            v
        } else {
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
            (0..20_000)
                .map(|_| (Elem(rng.gen_range(0..n)), Elem(rng.gen_range(0..n)), Elem(rng.gen_range(0..n))))
                .collect()
        };
        let show3 = |t: &(Elem, Elem, Elem)| format!("({}, {}, {})", self.show(t.0), self.show(t.1), self.show(t.2));
        let mut rep = ValidationReport::new();
        rep.record(
            "commutativity",
            crate::report::first_violation(triples.iter(), |t| self.mul(t.0, t.1) == self.mul(t.1, t.0) && self.add(t.0, t.1) == self.add(t.1, t.0), |t| show3(t)),
        );
        rep.record(
            "associativity",
            crate::report::first_violation(
                triples.iter(),
                |t| {
                    self.mul(self.mul(t.0, t.1), t.2) == self.mul(t.0, self.mul(t.1, t.2))
                        && self.add(self.add(t.0, t.1), t.2) == self.add(t.0, self.add(t.1, t.2))
                },
                |t| show3(t),
            ),
        );
        rep.record(
            "distributivity",
            crate::report::first_violation(
                triples.iter(),
                |t| self.mul(t.0, self.add(t.1, t.2)) == self.add(self.mul(t.0, t.1), self.mul(t.0, t.2)),
                |t| show3(t),
            ),
        );
        rep.record(
            "identity",
            crate::report::first_violation(self.elements(), |&a| self.mul(a, self.one) == a && self.add(a, self.zero()) == a && self.add(a, self.neg(a)) == self.zero(), |a| self.show(*a)),
        );
        rep
    }
}

fn poly_string(poly: &[u64]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in poly.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{i}"),
        };
        terms.push(match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}{mono}"),
        });
    }
    terms.join("+")
}

fn encode_coords(c: &[u64], n: u64) -> u64 {
    c.iter().fold(0, |acc, &x| acc * n + x)
}

#[cfg(test)]
mod tests;
