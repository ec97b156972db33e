//! Ideals cut by idempotents and their unit groups.

use super::{Elem, Ring};
use crate::numth::factorize;
use std::collections::HashMap;

/// The ideal `Re` of an idempotent `e`; `e` is its identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    pub generator: Elem,
    pub elements: Vec<Elem>,
}

impl Ideal {
    pub fn new(ring: &Ring, e: Elem) -> Ideal {
        let mut elements: Vec<Elem> = ring.elements().filter(|&x| ring.mul(x, e) == x).collect();
        elements.dedup();
        Ideal { generator: e, elements }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Units of an ideal `Re`, with a basis of cyclic factors of prime-power order.
#[derive(Clone, Debug)]
pub struct UnitGroup {
    pub identity: Elem,
    pub elements: Vec<Elem>,
    inverse: HashMap<Elem, Elem>,
    /// Elementary divisors, one per generator.
    pub divisors: Vec<u64>,
    pub generators: Vec<Elem>,
    coords: HashMap<Elem, Vec<u64>>,
}

impl UnitGroup {
    pub(super) fn of_ideal(ring: &Ring, e: Elem) -> UnitGroup {
        let ideal = Ideal::new(ring, e);
        let bound = ideal.len();
        let mut elements = Vec::new();
        let mut inverse = HashMap::new();
        let mut order = HashMap::new();
        for &x in &ideal.elements {
            let mut y = x;
            for k in 1..=bound {
                if y == e {
                    elements.push(x);
                    inverse.insert(x, ring.pow_in(x, k as u64 - 1, e));
                    order.insert(x, k as u64);
                    break;
                }
                y = ring.mul(y, x);
            }
        }
        let (divisors, generators) = decompose(ring, e, &elements, &order);
        let mut coords = HashMap::new();
        let mut stack: Vec<(Vec<u64>, Elem)> = vec![(Vec::new(), e)];
        while let Some((c, x)) = stack.pop() {
            let i = c.len();
            if i == generators.len() {
                coords.insert(x, c);
                continue;
            }
            let mut y = x;
            for k in 0..divisors[i] {
                let mut ck = c.clone();
                ck.push(k);
                stack.push((ck, y));
                y = ring.mul(y, generators[i]);
            }
        }
        debug_assert_eq!(coords.len(), elements.len());
        UnitGroup { identity: e, elements, inverse, divisors, generators, coords }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.inverse.contains_key(&x)
    }

    pub fn inv(&self, x: Elem) -> Option<Elem> {
        self.inverse.get(&x).copied()
    }

    /// Exponents of `x` with respect to `generators`.
    pub fn coords(&self, x: Elem) -> Option<&[u64]> {
        self.coords.get(&x).map(|v| v.as_slice())
    }

    pub fn from_coords(&self, ring: &Ring, c: &[u64]) -> Elem {
        self.generators
            .iter()
            .zip(c)
            .fold(self.identity, |acc, (&g, &k)| ring.mul(acc, ring.pow_in(g, k, self.identity)))
    }

    /// Exponent of the group (lcm of the divisors).
    pub fn exponent(&self) -> u64 {
        self.divisors.iter().fold(1, |a, &d| crate::numth::lcm(a, d))
    }
}

/// Basis of a finite abelian group by p-primary order analysis.
fn decompose(ring: &Ring, e: Elem, elements: &[Elem], order: &HashMap<Elem, u64>) -> (Vec<u64>, Vec<Elem>) {
    let n = elements.len() as u64;
    let mut divisors = Vec::new();
    let mut generators = Vec::new();
    for (p, _) in factorize(n) {
        let sylow: Vec<Elem> = elements.iter().copied().filter(|x| is_power_of(order[x], p)).collect();
        // Subgroup built so far, with coordinates in the chosen basis.
        let mut sub: HashMap<Elem, Vec<u64>> = HashMap::from([(e, Vec::new())]);
        let mut basis: Vec<(Elem, u64)> = Vec::new();
        while sub.len() < sylow.len() {
            let coset_order = |x: Elem| -> (u64, Elem) {
                let mut q = 1;
                let mut y = x;
                while !sub.contains_key(&y) {
                    y = ring.pow_in(y, p, e);
                    q *= p;
                }
                (q, y)
            };
            let (mut best, mut best_q, mut best_y) = (e, 0, e);
            for &x in &sylow {
                let (q, y) = coset_order(x);
                if q > best_q {
                    (best, best_q, best_y) = (x, q, y);
                }
            }
            let cs = sub[&best_y].clone();
            let mut x = best;
            for (i, &c) in cs.iter().enumerate() {
                debug_assert_eq!(c % best_q, 0, "coefficient divisible by coset order");
                let (b, ob) = basis[i];
                let k = (ob - (c / best_q) % ob) % ob;
                x = ring.mul(x, ring.pow_in(b, k, e));
            }
            let old: Vec<(Elem, Vec<u64>)> = sub.iter().map(|(k, v)| (*k, v.clone())).collect();
            let mut power = e;
            let mut grown = HashMap::with_capacity(old.len() * best_q as usize);
            for k in 0..best_q {
                for (h, c) in &old {
                    let mut c = c.clone();
                    c.push(k);
                    grown.insert(ring.mul(*h, power), c);
                }
                power = ring.mul(power, x);
            }
            sub = grown;
            basis.push((x, best_q));
        }
        for (g, q) in basis {
            generators.push(g);
            divisors.push(q);
        }
    }
    debug_assert_eq!(divisors.iter().product::<u64>(), n.max(1));
    (divisors, generators)
}

fn is_power_of(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}
