//! Partial Galois coordinate systems and Galois extensions.

use super::{PartialAction, Subring};
use crate::error::{check_cap, Error, Result};
use crate::report::ValidationReport;
use crate::ring::{Elem, FreeBasis, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisCoordinates {
    pub x: Vec<Elem>,
    pub y: Vec<Elem>,
}

impl GaloisCoordinates {
    /// `Σ x_i α_g(y_i 1_{g⁻¹})`.
    pub fn sum_at(&self, pa: &PartialAction, g: usize) -> Elem {
        let r = &*pa.ring;
        r.sum(self.x.iter().zip(&self.y).map(|(&x, &y)| r.mul(x, pa.cut(g, y))))
    }
}

/// Per-g evaluation of `Σ x_i α_g(y_i 1_{g⁻¹}) = δ_{1,g}`.
pub fn check_galois_coordinates(pa: &PartialAction, c: &GaloisCoordinates) -> Result<ValidationReport> {
    if c.x.is_empty() {
        return Err(Error::pre("empty coordinate lists"));
    }
    if c.x.len() != c.y.len() {
        return Err(Error::pre("coordinate lists differ in length"));
    }
    let r = &*pa.ring;
    let mut rep = ValidationReport::new();
    for g in pa.group.elements() {
        let s = c.sum_at(pa, g);
        let want = if g == 0 { r.one() } else { r.zero() };
        rep.record(
            format!("coordinate sum at {}", pa.label(g)),
            (s != want).then(|| format!("sum = {} but expected {}", r.show(s), r.show(want))),
        );
    }
    Ok(rep)
}

/// Budget for brute-force `y` searches in non-prime characteristic.
const Y_SEARCH_CAP: u128 = 1_000_000;

/// Searches `m = 1..=m_max`; `x` runs over nondecreasing tuples in canonical
/// order and `y` is solved exactly (free variables set to zero over `F_p`,
/// lexicographically least otherwise). Returns the first system found.
pub fn find_galois_coordinates(pa: &PartialAction, m_max: usize) -> Option<GaloisCoordinates> {
    let r = &*pa.ring;
    let p = r.characteristic();
    let field_basis = if crate::numth::is_prime(p) { FreeBasis::find(r).ok() } else { None };
    for m in 1..=m_max {
        let mut xs = vec![0u32; m];
        loop {
            let x: Vec<Elem> = xs.iter().map(|&i| Elem(i)).collect();
            let y = match &field_basis {
                Some(b) => solve_linear(pa, b, &x),
                None => solve_brute(pa, &x),
            };
            if let Some(y) = y {
                return Some(GaloisCoordinates { x, y });
            }
            if !next_nondecreasing(&mut xs, r.size() as u32) {
                break;
            }
        }
    }
    None
}

fn next_nondecreasing(xs: &mut [u32], n: u32) -> bool {
    let m = xs.len();
    for i in (0..m).rev() {
        if xs[i] + 1 < n {
            let v = xs[i] + 1;
            for x in xs.iter_mut().skip(i) {
                *x = v;
            }
            return true;
        }
    }
    false
}

/// Solves `Σ x_i α_g(y_i 1_{g⁻¹}) = δ_{1,g}` for `y` over `F_p`.
fn solve_linear(pa: &PartialAction, b: &FreeBasis, x: &[Elem]) -> Option<Vec<Elem>> {
    let r = &*pa.ring;
    let p = b.modulus as i64;
    let d = b.dim();
    let n = pa.order();
    let unknowns = x.len() * d;
    let eqs = n * d;
    // Column (i, j): effect of y_i = b_j.
    let mut mat = vec![vec![0i64; unknowns + 1]; eqs];
    for (i, &xi) in x.iter().enumerate() {
        for j in 0..d {
            for g in 0..n {
                let v = r.mul(xi, pa.cut(g, b.basis[j]));
                for (k, &c) in b.coords(v).iter().enumerate() {
                    mat[g * d + k][i * d + j] = c as i64;
                }
            }
        }
    }
    for (k, &c) in b.coords(r.one()).iter().enumerate() {
        mat[k][unknowns] = c as i64;
    }
    let sol = crate::action::galois::rref_solve(&mut mat, unknowns, p)?;
    Some((0..x.len()).map(|i| b.combine(r, &sol[i * d..(i + 1) * d].iter().map(|&c| c as u64).collect::<Vec<_>>())).collect())
}

/// Gaussian elimination over `F_p` on an augmented matrix; free variables 0.
pub(crate) fn rref_solve(mat: &mut [Vec<i64>], unknowns: usize, p: i64) -> Option<Vec<i64>> {
    let inv = |a: i64| -> i64 {
        let (_, s, _) = crate::numth::ext_gcd(a.rem_euclid(p), p);
        s.rem_euclid(p)
    };
    let rows = mat.len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..unknowns {
        let Some(pr) = (row..rows).find(|&i| mat[i][col].rem_euclid(p) != 0) else { continue };
        mat.swap(row, pr);
        let iv = inv(mat[row][col]);
        for c in 0..=unknowns {
            mat[row][c] = (mat[row][c] * iv).rem_euclid(p);
        }
        for i in 0..rows {
            if i != row && mat[i][col] != 0 {
                let f = mat[i][col];
                for c in 0..=unknowns {
                    mat[i][c] = (mat[i][c] - f * mat[row][c]).rem_euclid(p);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    if mat[row..].iter().any(|r| r[unknowns].rem_euclid(p) != 0) {
        return None;
    }
    let mut sol = vec![0; unknowns];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = mat[i][unknowns];
    }
    Some(sol)
}

fn solve_brute(pa: &PartialAction, x: &[Elem]) -> Option<Vec<Elem>> {
    let r = &*pa.ring;
    let total = (r.size() as u128).checked_pow(x.len() as u32).unwrap_or(u128::MAX);
    if check_cap("coordinate search", total, Y_SEARCH_CAP).is_err() {
        return None;
    }
    let mut ys = vec![0u32; x.len()];
    loop {
        let y: Vec<Elem> = ys.iter().map(|&i| Elem(i)).collect();
        let c = GaloisCoordinates { x: x.to_vec(), y };
        if pa.group.elements().all(|g| c.sum_at(pa, g) == if g == 0 { r.one() } else { r.zero() }) {
            return Some(c.y);
        }
        let mut i = x.len();
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            ys[i] += 1;
            if (ys[i] as usize) < r.size() {
                break;
            }
            ys[i] = 0;
        }
    }
}

/// A partial Galois extension with its invariants, coordinates and a
/// trace-one witness.
#[derive(Debug)]
pub struct GaloisExtension {
    pub action: PartialAction,
    pub invariants: Subring,
    pub coords: GaloisCoordinates,
    pub trace_one: Elem,
}

impl GaloisExtension {
    /// Uses `coords` when given (they must check), else searches up to `m_max`.
    pub fn new(action: PartialAction, coords: Option<GaloisCoordinates>, m_max: usize) -> Result<GaloisExtension> {
        let coords = match coords {
            Some(c) => {
                let rep = check_galois_coordinates(&action, &c)?;
                if let Some(f) = rep.failures().next() {
                    return Err(Error::pre(format!("{}: {}", f.name, f.witness.clone().unwrap_or_default())));
                }
                c
            }
            None => find_galois_coordinates(&action, m_max)
                .ok_or_else(|| Error::pre(format!("no Galois coordinate system with m <= {m_max}")))?,
        };
        let invariants = action.invariant_subring();
        let r: &Ring = &action.ring;
        let trace_one = r
            .elements()
            .find(|&c| action.trace(c) == r.one())
            .ok_or_else(|| Error::pre("no element of trace 1"))?;
        Ok(GaloisExtension { action, invariants, coords, trace_one })
    }

    pub fn ring(&self) -> &Ring {
        &self.action.ring
    }
}
