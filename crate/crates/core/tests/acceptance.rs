//! Acceptance criteria. Each criterion prints one PASS/FAIL line with its
//! wall time against its budget; any failure makes the target exit nonzero.

use partial_galois::action::*;
use partial_galois::cohomology::{Cochain, Complex, DEFAULT_CAP};
use partial_galois::crossed::*;
use partial_galois::pics::*;
use partial_galois::ring::Elem;
use partial_galois::seven_term::*;
use partial_galois::ValidationReport;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok(rep: &ValidationReport, what: &str) -> Result<(), String> {
    match rep.failures().next() {
        None => Ok(()),
        Some(c) => Err(format!("{what}: {} ({})", c.name, c.witness.as_deref().unwrap_or(""))),
    }
}

fn err(e: partial_galois::Error) -> String {
    e.to_string()
}

fn c1_ex_b() -> Outcome {
    let ext = ex_b_galois();
    let pa = &ext.action;
    let r = &*pa.ring;
    ok(&pa.validate(), "axioms")?;
    let inv: BTreeSet<Elem> = pa.invariants().into_iter().collect();
    ensure(inv == BTreeSet::from([r.zero(), r.one()]), || format!("R^alpha has {} elements", inv.len()))?;
    // {0, 1} with 1 + 1 = 0 is F2
    ensure(r.add(r.one(), r.one()) == r.zero(), || "1 + 1 != 0".into())?;
    let (p, q) = (r.el("[1,0]"), r.el("[0,1]"));
    let coords = GaloisCoordinates { x: vec![p, q], y: vec![p, q] };
    ok(&check_galois_coordinates(pa, &coords).map_err(err)?, "coordinates")?;
    // tr(x) = Σ_g α_g(x 1_{g⁻¹}), summed from the value tables
    let tr = |x: Elem| r.sum((0..pa.order()).map(|g| pa.alpha(g, r.mul(x, pa.one(pa.group.inv(g))))));
    ensure(tr(p) == r.one(), || format!("tr((1,0)) = {}", r.show(tr(p))))?;
    ensure(r.elements().all(|x| pa.trace(x) == tr(x) && pa.is_invariant(tr(x))), || "trace disagrees".into())?;
    Ok("R^alpha = F2, tr((1,0)) = 1".into())
}

fn c2_j_map() -> Outcome {
    for (name, pa) in [("EX-A", ex_a()), ("EX-B", ex_b())] {
        let j = j_map(&pa, DEFAULT_CAP).map_err(err)?;
        ok(&j.report, name)?;
        ensure(j.skew.size() == 16 && j.images.len() == 16 && j.endomorphisms.len() == 16, || {
            format!("{name}: |R*G| = {}, |End| = {}", j.skew.size(), j.endomorphisms.len())
        })?;
        let image: BTreeSet<Vec<Elem>> = j.images.values().cloned().collect();
        ensure(image == j.endomorphisms, || format!("{name}: image differs from End_R^alpha(R)"))?;
        for a in j.images.keys() {
            for b in j.images.keys() {
                let ab = &j.images[&j.skew.mul(a, b)];
                let (ja, jb) = (&j.images[a], &j.images[b]);
                ensure(pa.ring.elements().all(|x| ab[x.0 as usize] == ja[jb[x.0 as usize].0 as usize]), || format!("{name}: j not multiplicative"))?;
            }
        }
    }
    Ok("|R*G| = 16 = |End| on EX-A and EX-B".into())
}

fn dd_identity(pa: &PartialAction, fs: impl Iterator<Item = Cochain>) -> Result<usize, String> {
    let cx = Complex::new(pa);
    let mut count = 0;
    for f in fs {
        let n = f.degree;
        let dd = cx.coboundary(&cx.coboundary(&f).map_err(err)?).map_err(err)?;
        ensure(dd == Cochain::identity(pa, n + 2), || format!("delta{} delta{} of {} is {}", n + 1, n, f.show(pa), dd.show(pa)))?;
        count += 1;
    }
    Ok(count)
}

fn c3_delta_delta() -> Outcome {
    let mut exhaustive = 0;
    for pa in [ex_a(), ex_b()] {
        let cx = Complex::new(&pa);
        for n in 0..=2 {
            exhaustive += dd_identity(&pa, cx.cochains(n, DEFAULT_CAP).map_err(err)?.into_iter())?;
        }
    }
    let k = klein_on_gf4_cubed();
    ensure(k.ring.local_factor_count() == Some(3), || "Klein fixture is not on a 3-factor ring".into())?;
    let cx = Complex::new(&k);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut random = 0;
    for n in 0..=2 {
        let fs: Vec<Cochain> = (0..10_000).map(|_| cx.random(n, &mut rng)).collect();
        random += dd_identity(&k, fs.into_iter())?;
    }
    Ok(format!("{exhaustive} exhaustive and {random} random cochains"))
}

fn c4_cohomology() -> Outcome {
    let pa = ex_a();
    let cx = Complex::new(&pa);
    let h1 = cx.cohomology(1, DEFAULT_CAP).map_err(err)?;
    let h2 = cx.cohomology(2, DEFAULT_CAP).map_err(err)?;
    ensure((h1.z_order, h1.b_order, h1.h_order, h2.h_order) == (3, 3, 1, 1), || {
        format!("|Z1| = {}, |B1| = {}, |H1| = {}, |H2| = {}", h1.z_order, h1.b_order, h1.h_order, h2.h_order)
    })?;
    for (n, h) in [(1, &h1), (2, &h2)] {
        let o = cx.oracle(n, DEFAULT_CAP).map_err(err)?;
        ensure((o.z_order(), o.b_order(), o.h_order()) == (h.z_order, h.b_order, h.h_order), || format!("degree {n}: oracle disagrees"))?;
        ensure(h.representatives.as_ref() == Some(&o.representatives), || format!("degree {n}: representatives disagree"))?;
    }
    Ok("|Z1| = 3, |B1| = 3, |H1| = 1, |H2| = 1".into())
}

fn c5_associativity() -> Outcome {
    let pa = ex_a();
    let x = pa.ring.el("[[0,1]]");
    let bad = twisting_with(&pa, 1, 1, x);
    ensure(!validate_twisting(&pa, &bad).map_err(err)?.is_ok(), || "omega(σ,σ) = x accepted".into())?;
    let cp = CrossedProduct::new(pa.clone(), bad).map_err(err)?;
    let rep = cp.check_associativity();
    let c = rep.failures().next().ok_or("associativity passed for omega(σ,σ) = x")?;
    let w = c.witness.clone().unwrap_or_default();
    ensure(w.starts_with("(g,h,l) = (σ,σ,σ)"), || format!("witness {w}"))?;
    let good = twisting_with(&pa, 1, 1, pa.ring.one());
    ok(&validate_twisting(&pa, &good).map_err(err)?, "omega = 1")?;
    ok(&CrossedProduct::new(pa.clone(), good).map_err(err)?.check_associativity(), "omega = 1")?;
    Ok(format!("rejected at {w}"))
}

fn c6_idempotents() -> Outcome {
    let ext = ex_b_galois();
    let model = TensorSquareModel::new(&ext);
    ok(&model.check_against_tensor(&ext).map_err(err)?, "tensor square model")?;
    let fam = galois_idempotents(&model);
    ok(&fam.report, "e_g family")?;
    let n = model.order();
    for g in 0..n {
        for h in 0..n {
            let p = model.mul(&fam.e[g], &fam.e[h]);
            let want = if g == h { fam.e[g].clone() } else { model.zero() };
            ensure(p == want, || format!("e_{g} e_{h}"))?;
        }
    }
    let cp = CrossedProduct::skew(ext.action.clone());
    let (pairs, rep) = eta_iso(&model, &cp);
    ok(&rep, "eta")?;
    ensure(pairs.len() == 16, || format!("eta on {} elements", pairs.len()))?;
    Ok("e_g checks and eta on all 16 elements of R*G".into())
}

fn c7_coboundary_isos() -> Outcome {
    let pa = ex_a();
    let cx = Complex::new(&pa);
    let skew = CrossedProduct::skew(pa.clone());
    let all: Vec<Elem> = pa.ring.elements().collect();
    let b2: BTreeSet<Cochain> = cx.cochains(1, DEFAULT_CAP).map_err(err)?.iter().map(|u| cx.coboundary(u).unwrap()).collect();
    for w in &b2 {
        let u = detect_trivial_class(&pa, w, DEFAULT_CAP).map_err(err)?.ok_or_else(|| format!("no witness for {}", w.show(&pa)))?;
        ensure(&cx.coboundary(&u).map_err(err)? == w, || "witness is not a primitive".into())?;
        let cp = CrossedProduct::new(pa.clone(), w.clone()).map_err(err)?;
        let iso = iso_from_coboundary(&cp, &skew, &u).map_err(err)?;
        ok(&iso.check(&cp, &skew, false, Some(&all)), "iso")?;
        let inv = iso.inverse().ok_or("iso has no inverse")?;
        ok(&inv.check(&skew, &cp, false, Some(&all)), "inverse")?;
        for x in cp.elements() {
            ensure(inv.apply(&cp, &iso.apply(&skew, &x)) == x, || "inverse does not undo iso".into())?;
        }
        ensure(recover_cochain(&pa, &iso) == u, || "u not recovered".into())?;
    }
    Ok(format!("{} coboundaries", b2.len()))
}

fn c8_tensor() -> Outcome {
    let (a, b) = (ex_a_galois(), ex_b_galois());
    let te = tensor_extensions(&a, &b).map_err(err)?;
    let pa = &te.ext.action;
    ok(&pa.validate(), "EX-A (x) EX-B axioms")?;
    let (ca, cb) = (&a.coords, &b.coords);
    let mut x = Vec::new();
    let mut y = Vec::new();
    for i in 0..ca.x.len() {
        for j in 0..cb.x.len() {
            x.push(te.pure(ca.x[i], cb.x[j]));
            y.push(te.pure(ca.y[i], cb.y[j]));
        }
    }
    let product = GaloisCoordinates { x, y };
    ok(&check_galois_coordinates(pa, &product).map_err(err)?, "product coordinates")?;
    let tc = tensor_crossed(&a, &Cochain::identity(&a.action, 2), &b, &Cochain::identity(&b.action, 2)).map_err(err)?;
    ok(&tc.report, "xi")?;
    ensure(tc.report.get("xi multiplicative on monomial pairs").is_some(), || "xi multiplicativity not checked".into())?;
    Ok(format!("|R| = {}, |G| = {}", pa.ring.size(), pa.order()))
}

fn c9_pics() -> Outcome {
    let b = ex_b();
    let m = pics(&b.ring);
    ensure(m.elements().len() == 4, || format!("|PicS(F2xF2)| = {}", m.elements().len()))?;
    ok(&m.verify(), "PicS")?;
    let els = m.elements();
    ensure(els.iter().all(|x| m.mul(x, &m.zero()) == m.zero()), || "no zero".into())?;
    let act = alpha_star(&b);
    for g in 0..b.order() {
        let img = act.apply(g, &act.d(b.group.inv(g))).map_err(err)?;
        ensure(img == act.d(g), || format!("alpha*_{g}([D_g^-1]) = {}", m.show(&img)))?;
    }
    let inv: BTreeSet<PicSElement> = pics_invariants(&b).into_iter().collect();
    ensure(inv == BTreeSet::from([m.zero(), m.one()]), || format!("{} invariants", inv.len()))?;
    let mut pairs = 0;
    for pa in [ex_a(), ex_b()] {
        let tw = TwistedIdempotents::new(&pa);
        let els = tw.elements();
        for &x in &els {
            for &y in &els {
                let o = tensor_oracle(&pa, x, y);
                ensure(o.matches, || format!("{} (x) {}", tw.show(&x), tw.show(&y)))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("tensor oracle on {pairs} pairs"))
}

fn c10_partial_reps() -> Outcome {
    let mut count = 0;
    for pa in [ex_a(), ex_b()] {
        ok(&check_phi0(&pa), "Phi0 on twisted idempotents")?;
        let act = alpha_star(&pa);
        ok(&check_rep(&act, &phi0_combined(&act), true), "Phi0")?;
        for f in z1_pics(&act, DEFAULT_CAP).map_err(err)? {
            let rep = check_rep(&act, &phi_f(&act, &f).map_err(err)?, false);
            ok(&rep, "Phi_f")?;
            for name in ["(i) Phi(g^-1)Phi(g)Phi(h) = Phi(g^-1)Phi(gh)", "(ii) Phi(g)Phi(h)Phi(h^-1) = Phi(gh)Phi(h^-1)", "(iii) Phi(1) = 1", "Phi(g)Phi(g^-1) = [D_g]"] {
                ensure(rep.get(name).is_some(), || format!("{name} not checked"))?;
            }
            count += 1;
        }
    }
    Ok(format!("Phi0 and {count} Phi_f"))
}

fn c11_phi1() -> Outcome {
    let ext = ex_a_galois();
    let pa = &ext.action;
    let r = &*pa.ring;
    let cx = Complex::new(pa);
    let x = r.el("[[0,1]]");
    let x2 = r.mul(x, x);
    let f = cx.coboundary(&Cochain { degree: 0, values: vec![x] }).map_err(err)?;
    let res = phi1(&ext, &f).map_err(err)?;
    ok(&res.report, "phi1")?;
    let got: BTreeSet<Elem> = res.elements.iter().copied().collect();
    ensure(got == BTreeSet::from([r.zero(), x2]), || format!("R_f^G = {:?}", res.elements.iter().map(|&e| r.show(e)).collect::<Vec<_>>()))?;
    ensure(res.generator == Some(x2), || "generator is not x^2".into())?;
    let z1: Vec<Cochain> = cx.cochains(1, DEFAULT_CAP).map_err(err)?.into_iter().filter(|f| cx.is_cocycle(f).unwrap()).collect();
    ok(&check_phi1_multiplicative(&ext, &z1).map_err(err)?, "multiplicativity")?;
    Ok(format!("R_f^G = {{0, x^2}}, multiplicative over {} cocycles", z1.len()))
}

fn c12_phi3() -> Outcome {
    let pa = ex_a();
    let cx = Complex::new(&pa);
    let families = PsiFamily::all_units(&pa, DEFAULT_CAP).map_err(err)?;
    ensure(families.len() == 9, || format!("{} families", families.len()))?;
    let mut omegas = Vec::new();
    for u in &families {
        let res = phi3(&pa, &PsiFamily::from_units(&pa, u).map_err(err)?).map_err(err)?;
        ok(&res.report, "phi3")?;
        ensure(cx.is_cocycle(&res.omega).map_err(err)?, || "omega not in Z2".into())?;
        omegas.push(res.omega);
    }
    let mut pairs = 0;
    for (i, u) in families.iter().enumerate() {
        for (j, u2) in families.iter().enumerate() {
            let w = phi3_change_witness(&pa, u, u2);
            ensure(cx.mul(&omegas[i], &cx.coboundary(&w).map_err(err)?) == omegas[j], || format!("families {i} and {j}"))?;
            pairs += 1;
        }
    }
    Ok(format!("{} families, {pairs} witnessed pairs", families.len()))
}

fn c13_phi6() -> Outcome {
    let pa = ex_a();
    let cx = Complex::new(&pa);
    let rhos = cx.cochains(2, DEFAULT_CAP).map_err(err)?;
    let id4 = Cochain::identity(&pa, 4);
    let mut omegas = Vec::new();
    for rho in &rhos {
        let res = phi6(&pa, None, Some(rho)).map_err(err)?;
        ok(&res.report, "phi6")?;
        ensure(res.omega == cx.coboundary(&cx.inverse(rho)).map_err(err)?, || "omega != delta2(rho^-1)".into())?;
        ensure(cx.coboundary(&res.omega).map_err(err)? == id4, || "delta3 omega != 1".into())?;
        omegas.push(res.omega);
    }
    let mut pairs = 0;
    for (i, rho) in rhos.iter().enumerate() {
        for sigma in &rhos {
            let moved = phi6(&pa, None, Some(&cx.mul(sigma, rho))).map_err(err)?.omega;
            let witness = cx.coboundary(&cx.inverse(sigma)).map_err(err)?;
            ensure(moved == cx.mul(&omegas[i], &witness), || "class changed under rho -> sigma rho".into())?;
            pairs += 1;
        }
    }
    Ok(format!("{} rho, {pairs} pairs", rhos.len()))
}

fn c14_composites() -> Outcome {
    let te = tensor_extensions(&ex_a_galois(), &ex_b_galois()).map_err(err)?;
    let mut summary = Vec::new();
    for (name, ext) in [("EX-A", ex_a_galois()), ("EX-B", ex_b_galois()), ("EX-A (x) EX-B", te.ext)] {
        let rep = verify_composites(&ext, DEFAULT_CAP).map_err(err)?;
        ensure(rep.probes.len() == 4, || format!("{name}: {} probes", rep.probes.len()))?;
        if let Some(p) = rep.probes.iter().find(|p| !p.passed) {
            return Err(format!("{name}: {} ({})", p.name, p.witness.as_deref().unwrap_or("")));
        }
        summary.push(name);
    }
    Ok(format!("4 probes on {}", summary.join(", ")))
}

fn main() {
    let criteria: [(&str, u64, fn() -> Outcome); 14] = [
        ("EX-B axioms, invariants, coordinates, trace", 1, c1_ex_b),
        ("j map bijective and multiplicative", 1, c2_j_map),
        ("delta delta = 1", 30, c3_delta_delta),
        ("cohomology of EX-A, linear vs oracle", 5, c4_cohomology),
        ("associativity iff 2-cocycle", 1, c5_associativity),
        ("Galois idempotents and eta", 1, c6_idempotents),
        ("coboundary isomorphisms on EX-A", 5, c7_coboundary_isos),
        ("tensor product of extensions and xi", 30, c8_tensor),
        ("PicS, alpha*, invariants, tensor oracle", 10, c9_pics),
        ("partial representations Phi0 and Phi_f", 1, c10_partial_reps),
        ("phi1 on EX-A", 1, c11_phi1),
        ("phi3 choice independence", 5, c12_phi3),
        ("phi6 cocycle and class independence", 10, c13_phi6),
        ("composite probes", 120, c14_composites),
    ];
    let total = Instant::now();
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        let outcome = match outcome {
            Ok(_) if t > Duration::from_secs(*budget) => Err(format!("took {:.2} s, budget {budget} s", t.as_secs_f64())),
            o => o,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({:.3} s, budget {budget} s): {detail}", i + 1, t.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({:.3} s, budget {budget} s): {why}", i + 1, t.as_secs_f64());
            }
        }
    }
    println!("acceptance: {} of {} passed in {:.2} s", criteria.len() - failed, criteria.len(), total.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
