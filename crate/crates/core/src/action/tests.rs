use super::*;

#[test]
fn ex_a_and_ex_b_validate() {
    for pa in [ex_a(), ex_b(), c3_on_f2_cubed(), klein_on_gf4_cubed(), trivial_c2_on_f3(), trivial_extension()] {
        let rep = pa.validate();
        assert!(rep.is_ok(), "{:?}", rep.failures().collect::<Vec<_>>());
    }
}

#[test]
fn zero_map_breaks_ex_b() {
    let pa = ex_b();
    let bad = pa.with_alpha(1, |_| pa.ring.zero());
    let rep = bad.validate();
    assert!(!rep.is_ok());
    assert!(rep.failed("(ii) alpha_g(D_g^-1 D_h) = D_g D_gh").is_some());
}

#[test]
fn restriction_reproduces_ex_b() {
    let (a, b) = (ex_b(), ex_b_by_restriction());
    assert_eq!(a.ones(), b.ones());
    for g in 0..3 {
        assert_eq!(a.table(g), b.table(g));
    }
    let s = c3_on_f2_cubed();
    let whole = restrict_global_action(&s, s.ring.one()).unwrap();
    assert_eq!(whole.ones(), s.ones());
    let zero = restrict_global_action(&s, s.ring.zero()).unwrap();
    assert_eq!(zero.ring.size(), 1);
    assert!(zero.validate().is_ok());
}

#[test]
fn invariants_and_trace() {
    let a = ex_a();
    assert_eq!(a.invariants(), vec![a.ring.zero(), a.ring.one()]);
    assert_eq!(a.trace(a.ring.el("[[0,1]]")), a.ring.one());
    let b = ex_b();
    assert_eq!(b.invariants(), vec![b.ring.el("[0,0]"), b.ring.el("[1,1]")]);
    assert_eq!(b.trace(b.ring.el("[1,0]")), b.ring.one());
    assert!(b.ring.elements().all(|x| b.is_invariant(b.trace(x))));
}

#[test]
fn galois_coordinates() {
    let b = ex_b();
    let (p, q) = (b.ring.el("[1,0]"), b.ring.el("[0,1]"));
    let c = GaloisCoordinates { x: vec![p, q], y: vec![p, q] };
    assert!(check_galois_coordinates(&b, &c).unwrap().is_ok());
    // canonical order puts (0,1) before (1,0)
    assert_eq!(find_galois_coordinates(&b, 2), Some(GaloisCoordinates { x: vec![q, p], y: vec![q, p] }));

    let a = ex_a();
    let one = GaloisCoordinates { x: vec![a.ring.one()], y: vec![a.ring.one()] };
    let rep = check_galois_coordinates(&a, &one).unwrap();
    assert!(rep.failed("coordinate sum at σ").is_some());
    let found = find_galois_coordinates(&a, 2).unwrap();
    assert!(check_galois_coordinates(&a, &found).unwrap().is_ok());

    let t = trivial_extension();
    assert_eq!(find_galois_coordinates(&t, 1).unwrap().x, vec![t.ring.one()]);
    assert!(find_galois_coordinates(&trivial_c2_on_f3(), 3).is_none());
    assert!(check_galois_coordinates(&a, &GaloisCoordinates { x: vec![], y: vec![] }).is_err());
}

#[test]
fn twisting_examples() {
    let a = ex_a();
    let x = a.ring.el("[[0,1]]");
    let bad = validate_twisting(&a, &twisting_with(&a, 1, 1, x)).unwrap();
    let v = bad.failed("(v) alpha_g(1_g^-1 omega_h,l) omega_g,hl = omega_g,h omega_gh,l").unwrap();
    assert!(v.witness.as_deref().unwrap().starts_with("(g,h,l) = (σ,σ,σ)"));
    assert!(validate_twisting(&a, &twisting_with(&a, 1, 1, a.ring.one())).unwrap().is_ok());
    let b = ex_b();
    assert!(validate_twisting(&b, &crate::cohomology::Cochain::identity(&b, 2)).unwrap().is_ok());
}

#[test]
fn tensor_products() {
    let (a, b) = (ex_a_galois(), ex_b_galois());
    let bb = tensor_extensions(&b, &b).unwrap();
    assert_eq!(bb.ext.ring().size(), 16);
    assert_eq!(bb.ext.action.order(), 9);
    assert_eq!(bb.ext.coords.x.len(), 4);
    assert!(bb.ext.action.validate().is_ok());
    assert!(bb.ext.invariants.is_prime_subring());
    let ab = tensor_extensions(&a, &b).unwrap();
    assert!(ab.ext.action.validate().is_ok());
    assert_eq!(ab.ext.invariants.len(), 2);
    let at = tensor_extensions(&a, &trivial_galois()).unwrap();
    assert_eq!(at.ext.ring().size(), 4);
    let f3 = GaloisExtension::new(PartialAction::trivial(std::sync::Arc::new(crate::ring::Ring::zmod(3).unwrap())), None, 1).unwrap();
    assert!(tensor_extensions(&a, &f3).is_err());
}

#[test]
fn documents_round_trip() {
    for pa in [ex_a(), ex_b(), klein_on_gf4_cubed()] {
        let doc = ActionDoc::from_action(&pa, None, None).unwrap();
        let text = serde_json::to_string(&doc).unwrap();
        let back = ActionDoc::parse(&text).unwrap().build().unwrap();
        assert_eq!(back.action.ones(), pa.ones());
        for g in 0..pa.order() {
            assert_eq!(back.action.table(g), pa.table(g));
        }
    }
    assert!(ActionDoc::parse("{\"ring\":1}").is_err());
}
