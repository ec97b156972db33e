use super::*;

fn f2xf2() -> Ring {
    Ring::product(&[FactorDesc::Zmod { modulus: 2 }, FactorDesc::Zmod { modulus: 2 }]).unwrap()
}

fn gf4() -> Ring {
    Ring::quotient(2, &[1, 1, 1]).unwrap()
}

/// Units found by searching for inverses, independent of the power method.
fn units_by_search(r: &Ring, e: Elem) -> Vec<Elem> {
    let ideal: Vec<Elem> = r.elements().filter(|&x| r.mul(x, e) == x).collect();
    ideal.iter().copied().filter(|&x| ideal.iter().any(|&y| r.mul(x, y) == e)).collect()
}

#[test]
fn zmod4_basics() {
    let r = Ring::zmod(4).unwrap();
    assert_eq!(r.size(), 4);
    assert_eq!(r.show(r.one()), "1");
    assert_eq!(r.idempotents(), &[Elem(0), Elem(1)]);
    let u = r.units(r.one());
    assert_eq!(u.elements, vec![Elem(1), Elem(3)]);
    assert_eq!(u.divisors, vec![2]);
    assert_eq!(r.characteristic(), 4);
}

#[test]
fn gf4_is_a_field_with_cyclic_units() {
    let r = gf4();
    assert_eq!(r.size(), 4);
    assert!(r.verify_axioms().is_ok());
    assert_eq!(r.quotient_fields(), vec![Some(true)]);
    let u = r.units(r.one());
    assert_eq!(u.order(), 3);
    assert_eq!(u.divisors, vec![3]);
    assert_eq!(u.elements, units_by_search(&r, r.one()));
    let x = r.el("[[0,1]]");
    assert_eq!(r.show(x), "x");
    assert_eq!(r.show(r.mul(x, x)), "x+1");
    assert_eq!(r.idempotents().len(), 2);
}

#[test]
fn f2xf2_idempotents_and_ideal_units() {
    let r = f2xf2();
    let idem: Vec<String> = r.idempotents().iter().map(|&e| r.show(e)).collect();
    assert_eq!(idem, vec!["(0,0)", "(0,1)", "(1,0)", "(1,1)"]);
    let e = r.el("[1,0]");
    let u = r.units(e);
    assert_eq!(u.elements, vec![e]);
    assert_eq!(r.ideal(e).elements, vec![Elem(0), e]);
}

#[test]
fn reducible_quotient_is_reported() {
    let r = Ring::quotient(2, &[0, 1, 1]).unwrap();
    assert_eq!(r.quotient_fields(), vec![Some(false)]);
    assert_eq!(r.idempotents().len(), 4);
    assert!(r.verify_axioms().is_ok());
}

#[test]
fn build_errors() {
    assert!(matches!(Ring::zmod(0), Err(Error::Malformed(_))));
    assert!(matches!(Ring::zmod(6), Err(Error::Malformed(_))));
    assert!(matches!(Ring::quotient(2, &[1, 1, 0]), Err(Error::Malformed(_))));
    assert!(matches!(build_ring("{\"factors\": []}"), Err(Error::Malformed(_))));
    assert!(matches!(build_ring("{\"factors\": [{\"kind\": \"zmod\"}]}"), Err(Error::Parse(_))));
    let r = build_ring(r#"{"factors":[{"kind":"zmod","modulus":4},{"kind":"quotient","p":2,"poly":[1,1,1]}]}"#).unwrap();
    assert_eq!(r.size(), 16);
    assert_eq!(r.idempotents().len(), 4);
}

#[test]
fn json_round_trip_and_desc() {
    let r = build_ring(r#"{"factors":[{"kind":"zmod","modulus":9},{"kind":"quotient","p":3,"poly":[2,2,1]}]}"#).unwrap();
    for x in r.elements() {
        assert_eq!(r.from_json(&r.to_json(x)).unwrap(), x);
    }
    let again = r.desc().unwrap().build().unwrap();
    assert_eq!(again.size(), r.size());
}

#[test]
fn unit_structure_of_larger_rings() {
    // Z/8 units are C2 x C2; Z/9 units are C6 = C2 x C3.
    let r = Ring::zmod(8).unwrap();
    let u = r.units(r.one());
    let mut d = u.divisors.clone();
    d.sort();
    assert_eq!(d, vec![2, 2]);
    let r = Ring::zmod(9).unwrap();
    let u = r.units(r.one());
    assert_eq!(u.order(), 6);
    for &x in &u.elements {
        let c = u.coords(x).unwrap().to_vec();
        assert_eq!(u.from_coords(&r, &c), x);
        assert_eq!(r.mul(x, u.inv(x).unwrap()), r.one());
    }
}

#[test]
fn morphism_checks() {
    let r = f2xf2();
    let swap = |x: Elem| {
        let v = r.to_json(x);
        let a = v.as_array().unwrap();
        r.from_json(&serde_json::json!([a[1], a[0]])).unwrap()
    };
    let m = RingMorphism::from_fn(Carrier::whole(&r), Carrier::whole(&r), swap, true);
    assert!(check_morphism(&m).unwrap().is_ok());
    let zero = RingMorphism::from_fn(Carrier::whole(&r), Carrier::whole(&r), |_| Elem(0), false);
    let rep = check_morphism(&zero).unwrap();
    assert!(rep.failed("unitality").is_some());
    assert!(rep.get("additivity").unwrap().passed);
    let mut partial = m.clone();
    partial.table.remove(&Elem(3));
    assert!(check_morphism(&partial).is_err());
}

#[test]
fn free_basis_over_prime_subring() {
    let r = gf4();
    let b = FreeBasis::find(&r).unwrap();
    assert_eq!(b.dim(), 2);
    for x in r.elements() {
        assert_eq!(b.combine(&r, b.coords(x)), x);
    }
    let z4f = Ring::product(&[FactorDesc::Zmod { modulus: 4 }, FactorDesc::Zmod { modulus: 2 }]).unwrap();
    assert!(FreeBasis::find(&z4f).is_err());
}

#[test]
fn algebra_backend_matches_product() {
    // F2 x F2 as the F2-algebra with orthogonal idempotent basis.
    let alg = Algebra { modulus: 2, dim: 2, consts: vec![1, 0, 0, 0, 0, 0, 0, 1], one: vec![1, 1] };
    let r = Ring::algebra(alg).unwrap();
    assert_eq!(r.idempotents().len(), 4);
    assert_eq!(r.units(r.one()).order(), 1);
    let bad = Algebra { modulus: 2, dim: 2, consts: vec![0, 1, 0, 0, 0, 0, 0, 1], one: vec![1, 1] };
    assert!(Ring::algebra(bad).is_err());
}

mod props {
    use super::*;
    use proptest::prelude::*;

    fn factor() -> impl Strategy<Value = FactorDesc> {
        prop_oneof![
            prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9]).prop_map(|m| FactorDesc::Zmod { modulus: m }),
            Just(FactorDesc::Quotient { p: 2, poly: vec![1, 1, 1] }),
            Just(FactorDesc::Quotient { p: 2, poly: vec![1, 1, 0, 1] }),
            Just(FactorDesc::Quotient { p: 3, poly: vec![1, 0, 1] }),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn ring_invariants(fs in prop::collection::vec(factor(), 1..=3)) {
            let r = Ring::product(&fs).unwrap();
            prop_assert!(r.verify_axioms().is_ok());
            prop_assert_eq!(r.idempotents().len(), 1 << fs.len());
            let idem = r.idempotents();
            for &e in idem {
                for &f in idem {
                    prop_assert_eq!(r.mul(e, f), r.mul(f, e));
                    prop_assert!(r.is_idempotent(r.mul(e, f)));
                }
                let u = r.units(e);
                // Units miss at least 0 unless the ideal is the zero ring.
                prop_assert!(u.order() < r.ideal(e).len() || e == r.zero());
                for &x in &u.elements {
                    prop_assert_eq!(r.mul(x, u.inv(x).unwrap()), e);
                }
                prop_assert_eq!(u.elements.clone(), units_by_search(&r, e));
                prop_assert_eq!(u.divisors.iter().product::<u64>() as usize, u.order());
            }
        }
    }
}
