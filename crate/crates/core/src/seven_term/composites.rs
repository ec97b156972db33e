//! Empirical probes that consecutive maps of the sequence compose to the
//! trivial class on a given extension.

use super::{phi1, phi3, phi3_change_witness, phi4, phi6, PsiFamily};
use crate::action::GaloisExtension;
use crate::cohomology::{Cochain, Complex};
use crate::error::Result;
use crate::pics::{alpha_star, z1_pics};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;

pub const EMPIRICAL_NOTE: &str = "empirical: a pass is evidence, not proof";

/// Crossed products whose isomorphism to the skew ring is checked in full.
const ISO_CHECKS: usize = 8;
/// Random `ρ` tried in the `φ₆` probe besides `ρ = 1`.
const RHO_SAMPLES: usize = 16;

#[derive(Clone, Debug, Serialize)]
pub struct Probe {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SequenceReport {
    pub probes: Vec<Probe>,
    pub note: &'static str,
}

impl SequenceReport {
    pub fn passed(&self) -> bool {
        self.probes.iter().all(|p| p.passed)
    }
}

fn probe(name: &str, witness: Option<String>, detail: String) -> Probe {
    Probe { name: name.to_string(), passed: witness.is_none(), witness, detail }
}

fn cocycles1(cx: &Complex, cap: u128) -> Result<Vec<Cochain>> {
    let mut out = Vec::new();
    for f in cx.cochains(1, cap)? {
        if cx.is_cocycle(&f)? {
            out.push(f);
        }
    }
    Ok(out)
}

pub fn verify_composites(ext: &GaloisExtension, cap: u128) -> Result<SequenceReport> {
    let pa = &ext.action;
    let r = &*pa.ring;
    let cx = Complex::new(pa);
    let mut probes = Vec::new();

    // (a) R ⊗ R_f^G ≅ R: the generator of R_f^G is a unit of R.
    let z1 = cocycles1(&cx, cap)?;
    let mut bad = None;
    for f in &z1 {
        let res = phi1(ext, f)?;
        match res.generator {
            Some(m) if res.report.is_ok() && r.units(r.one()).contains(m) => {}
            _ => {
                bad = Some(format!("f = {}", f.show(pa)));
                break;
            }
        }
    }
    probes.push(probe("phi2 o phi1 = [R]", bad, format!("{} cocycles in Z^1", z1.len())));

    // (b) every ψ family for E = R gives a coboundary, with witness δ¹(u_{g⁻¹}⁻¹).
    let units = PsiFamily::all_units(pa, cap)?;
    let base: Vec<_> = pa.group.elements().map(|g| pa.one(pa.group.inv(g))).collect();
    let mut bounds = cx.boundaries(2);
    let mut omegas = BTreeMap::new();
    let mut bad = None;
    for u in &units {
        let res = phi3(pa, &PsiFamily::from_units(pa, u)?)?;
        let w = phi3_change_witness(pa, &base, u);
        let explicit = cx.coboundary(&w)? == res.omega;
        if !res.report.is_ok() || !explicit || !bounds.contains(&res.omega) {
            bad = Some(format!("u = [{}]", u.iter().map(|&x| r.show(x)).collect::<Vec<_>>().join(", ")));
            break;
        }
        omegas.entry(res.omega).or_insert(w);
    }
    probes.push(probe("phi3 o phi2 in B^2", bad, format!("{} psi families, {} distinct omega", units.len(), omegas.len())));

    // (c) each such ω gives a trivial crossed-product class.
    let mut bad = None;
    let skew_cap = if cx.order(1) <= cap { cap } else { 0 };
    for (i, (omega, w)) in omegas.iter().enumerate() {
        let ok = if i < ISO_CHECKS {
            let rec = phi4(ext, omega, skew_cap)?;
            rec.trivial && rec.report.is_ok()
        } else {
            cx.coboundary(w)? == *omega
        };
        if !ok {
            bad = Some(format!("omega = {}", omega.show(pa)));
            break;
        }
    }
    probes.push(probe(
        "phi4 o phi3 trivial",
        bad,
        format!("{} classes, crossed-product isomorphisms verified for {}", omegas.len(), omegas.len().min(ISO_CHECKS)),
    ));

    // (d) the concrete PicS 1-cocycle gives coboundaries for ρ = 1 and sampled ρ.
    let act = alpha_star(pa);
    let fs = z1_pics(&act, cap)?;
    let mut bad = (fs.len() != 1).then(|| format!("{} PicS 1-cocycles", fs.len()));
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let rhos: Vec<Option<Cochain>> = std::iter::once(None).chain((0..RHO_SAMPLES).map(|_| Some(cx.random(2, &mut rng)))).collect();
    if bad.is_none() {
        for rho in &rhos {
            let res = phi6(pa, Some(&fs[0]), rho.as_ref())?;
            if !res.report.is_ok() {
                bad = Some(format!("rho = {}", res.rho.show(pa)));
                break;
            }
        }
    }
    probes.push(probe("phi6 on z1_pics in B^3", bad, format!("rho = 1 and {RHO_SAMPLES} seeded random rho")));

    Ok(SequenceReport { probes, note: EMPIRICAL_NOTE })
}
