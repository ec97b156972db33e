use super::*;
use crate::action::*;
use crate::cohomology::DEFAULT_CAP;
use crate::group::FiniteGroup;
use crate::ring::{FactorDesc, Ring};
use std::collections::BTreeMap;
use std::sync::Arc;

fn chain_c2() -> PicSMonoid {
    let mut eps = BTreeMap::new();
    eps.insert((0, 1), vec![]);
    PicSMonoid::symbolic(vec!["1".into(), "0".into()], vec![vec![0, 1], vec![1, 1]], vec![vec![2], vec![]], eps).unwrap()
}

#[test]
fn concrete_pics_shapes() {
    let f2sq = Ring::product(&[FactorDesc::Zmod { modulus: 2 }, FactorDesc::Zmod { modulus: 2 }]).unwrap();
    let m = pics(&f2sq);
    assert_eq!(m.elements().len(), 4);
    assert!(m.verify().is_ok());
    assert_eq!(f2sq.idempotents()[m.bottom], f2sq.zero());
    assert_eq!(f2sq.idempotents()[m.top], f2sq.one());
    for r in [Ring::zmod(4).unwrap(), Ring::quotient(2, &[1, 1, 1]).unwrap()] {
        let m = pics(&r);
        assert_eq!(m.components(), 2);
        assert!(m.verify().is_ok());
    }
}

#[test]
fn symbolic_chain() {
    let m = chain_c2();
    assert_eq!(m.elements().len(), 3);
    assert!(m.verify().is_ok());
    let x = PicSElement { comp: 0, a: vec![1] };
    assert_eq!(m.mul(&x, &x), m.one());
    assert_eq!(m.star(&x), x);
    assert_eq!(m.mul(&x, &m.zero()), m.zero());
}

#[test]
fn broken_eps_composition_rejected() {
    // chain top > mid > low > bot, C2 above bot; eps_(top,low) = 0 breaks functoriality
    let meet = (0..4).map(|i| (0..4).map(|j: usize| i.max(j)).collect()).collect::<Vec<Vec<usize>>>();
    let groups = vec![vec![2], vec![2], vec![2], vec![]];
    let mut eps = BTreeMap::new();
    eps.insert((0, 1), vec![vec![1]]);
    eps.insert((1, 2), vec![vec![1]]);
    eps.insert((0, 2), vec![vec![0]]);
    for e in 0..3 {
        eps.insert((e, 3), vec![]);
    }
    let labels: Vec<String> = ["top", "mid", "low", "bot"].iter().map(|s| s.to_string()).collect();
    let err = PicSMonoid::symbolic(labels.clone(), meet.clone(), groups.clone(), eps.clone()).unwrap_err();
    assert!(err.to_string().contains("eps_(mid,low) eps_(top,mid) != eps_(top,low)"), "{err}");
    eps.insert((0, 2), vec![vec![1]]);
    assert!(PicSMonoid::symbolic(labels.clone(), meet.clone(), groups.clone(), eps.clone()).unwrap().verify().is_ok());
    let mut g2 = groups;
    g2[3] = vec![2];
    for e in 0..3 {
        eps.insert((e, 3), vec![vec![1]]);
    }
    assert!(PicSMonoid::symbolic(labels, meet, g2, eps).unwrap_err().to_string().contains("bottom"));
}

#[test]
fn non_homomorphic_eps_rejected() {
    // C2 -> C3 sending the generator to 1 is not a homomorphism
    let meet = (0..3).map(|i| (0..3).map(|j: usize| i.max(j)).collect()).collect();
    let mut eps = BTreeMap::new();
    eps.insert((0, 1), vec![vec![1]]);
    eps.insert((0, 2), vec![]);
    eps.insert((1, 2), vec![]);
    let labels = vec!["1".into(), "e".into(), "0".into()];
    let err = PicSMonoid::symbolic(labels, meet, vec![vec![2], vec![3], vec![]], eps).unwrap_err();
    assert!(err.to_string().contains("not a homomorphism"), "{err}");
}

#[test]
fn alpha_star_on_ex_b() {
    let pa = ex_b();
    let act = alpha_star(&pa);
    assert!(act.validate().is_ok(), "{:?}", act.validate().failures().collect::<Vec<_>>());
    let ids = pa.ring.idempotents().to_vec();
    let comp = |s: &str| ids.iter().position(|&e| e == pa.ring.el(s)).unwrap();
    for g in 0..3 {
        assert_eq!(act.apply(g, &act.d(pa.group.inv(g))).unwrap(), act.d(g));
    }
    let x = act.monoid.idem(comp("[0,1]"));
    assert_eq!(act.apply(1, &x).unwrap(), act.monoid.idem(comp("[1,0]")));
    assert!(act.apply(1, &act.monoid.one()).is_err());
    for x in act.monoid.elements() {
        assert_eq!(act.apply(0, &x).unwrap(), x);
    }
    let inv = pics_invariants(&pa);
    assert_eq!(inv, vec![act.monoid.idem(comp("[0,0]")), act.monoid.idem(comp("[1,1]"))]);
    assert!(act.check_invariants().is_ok());
}

#[test]
fn invariants_of_ex_a_and_trivial_group() {
    let act = alpha_star(&ex_a());
    assert_eq!(act.invariants().len(), act.monoid.elements().len());
    let act = alpha_star(&trivial_extension());
    assert_eq!(act.invariants().len(), 2);
}

#[test]
fn z1_concrete_is_singleton() {
    for pa in [ex_a(), ex_b(), klein_on_gf4_cubed(), trivial_extension()] {
        let act = alpha_star(&pa);
        let z = z1_pics(&act, DEFAULT_CAP).unwrap();
        let expected: Vec<PicSElement> = pa.group.elements().map(|g| act.d(g)).collect();
        assert_eq!(z, vec![expected]);
    }
}

#[test]
fn z1_symbolic_counts_homomorphisms() {
    let act = PicSAction::trivial(chain_c2(), Arc::new(FiniteGroup::cyclic(2)));
    assert!(act.validate().is_ok());
    let z = z1_pics(&act, DEFAULT_CAP).unwrap();
    assert_eq!(z.len(), 2);
    // C3 has no nontrivial homomorphism to C2
    let act = PicSAction::trivial(chain_c2(), Arc::new(FiniteGroup::cyclic(3)));
    assert_eq!(z1_pics(&act, DEFAULT_CAP).unwrap().len(), 1);
    let act = PicSAction::trivial(chain_c2(), Arc::new(FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2))));
    assert_eq!(z1_pics(&act, DEFAULT_CAP).unwrap().len(), 4);
}

#[test]
fn twisted_rule_matches_tensor_oracle() {
    for pa in [ex_a(), ex_b()] {
        let tw = TwistedIdempotents::new(&pa);
        let els = tw.elements();
        for &x in &els {
            for &y in &els {
                let out = tensor_oracle(&pa, x, y);
                assert!(out.matches, "{} {} -> {} (tensor has {} elements)", tw.show(&x), tw.show(&y), tw.show(&out.rule), out.size);
            }
        }
    }
}

#[test]
fn tensor_oracle_rejects_wrong_products() {
    let pa = ex_b();
    let (p, q) = (pa.ring.el("[1,0]"), pa.ring.el("[0,1]"));
    // (g,(0,1))(1,1) is (g,(0,1)); the same-size bimodule (g,(1,0)) has the wrong left action
    assert!(tensor_oracle(&pa, (1, q), (0, pa.ring.one())).matches);
    assert!(!tensor_matches(&pa, (1, q), (0, pa.ring.one()), (1, p)).matches);
    assert!(!tensor_matches(&pa, (1, q), (0, pa.ring.one()), (0, q)).matches);
    let a = ex_a();
    assert!(!tensor_matches(&a, (1, a.ring.one()), (1, a.ring.one()), (1, a.ring.one())).matches);
}

#[test]
fn phi0_partial_representation() {
    for pa in [ex_a(), ex_b(), klein_on_gf4_cubed(), trivial_extension()] {
        let rep = check_phi0(&pa);
        assert!(rep.is_ok(), "{:?}", rep.failures().collect::<Vec<_>>());
        let act = alpha_star(&pa);
        let rep = check_rep(&act, &phi0_combined(&act), true);
        assert!(rep.is_ok(), "{:?}", rep.failures().collect::<Vec<_>>());
    }
    let pa = ex_b();
    let tw = TwistedIdempotents::new(&pa);
    let phi = phi0(&pa);
    assert_eq!(phi[0], (0, pa.ring.one()));
    assert_eq!(tw.mul(&phi[1], &phi[2]), (0, pa.one(1)));
    // Φ₀(g)Φ₀(g) = (g², α_{g⁻¹}(1_{g⁻¹}1_g)1_{g⁻¹}) = (g², 0)
    assert_eq!(tw.mul(&phi[1], &phi[1]), (2, pa.ring.zero()));
}

#[test]
fn broken_representations_flagged() {
    let pa = ex_b();
    let tw = TwistedIdempotents::new(&pa);
    let ones = vec![tw.one(); 3];
    assert!(validate_partial_rep(&tw, &pa.group, &ones).is_ok());
    let mut phi = phi0(&pa);
    phi[0] = (0, pa.ring.zero());
    let rep = validate_partial_rep(&tw, &pa.group, &phi);
    assert!(rep.failed("(iii) Phi(1) = 1").is_some());
    let mut phi = phi0(&pa);
    phi[1] = (1, pa.ring.zero());
    assert!(!validate_partial_rep(&tw, &pa.group, &phi).is_ok());
}

#[test]
fn combined_monoid_matches_twisted_rule() {
    // (g,e) corresponds to (g, [R α_g(e)])
    for pa in [ex_a(), ex_b(), klein_on_gf4_cubed()] {
        let act = alpha_star(&pa);
        let cm = CombinedMonoid { act: &act };
        let tw = TwistedIdempotents::new(&pa);
        let ids = pa.ring.idempotents().to_vec();
        let to = |&(g, e): &Twisted| (g, act.monoid.idem(ids.iter().position(|&i| i == pa.alpha(g, e)).unwrap()));
        for x in tw.elements() {
            for y in tw.elements() {
                assert!(cm.same(&to(&tw.mul(&x, &y)), &cm.mul(&to(&x), &to(&y))));
            }
        }
    }
}

#[test]
fn phi_f_on_symbolic_layer() {
    let act = PicSAction::trivial(chain_c2(), Arc::new(FiniteGroup::cyclic(2)));
    for f in z1_pics(&act, DEFAULT_CAP).unwrap() {
        let phi = phi_f(&act, &f).unwrap();
        let rep = check_rep(&act, &phi, false);
        assert!(rep.is_ok(), "{:?}", rep.failures().collect::<Vec<_>>());
    }
    let bad = vec![act.monoid.one(), act.monoid.zero()];
    assert!(phi_f(&act, &bad).is_err());
}

#[test]
fn symbolic_document_round_trip() {
    let text = r#"{
        "components": ["1", "0"],
        "meet": [[0, 1], [1, 1]],
        "groups": [[2], []],
        "eps": [{"from": 0, "to": 1, "matrix": []}],
        "action": {"group": {"order": 2, "table": [[0, 1], [1, 0]]}, "domains": [0, 0],
                   "maps": [{"g": 1, "maps": [{"from": 0, "to": 0, "matrix": [[1]]}, {"from": 1, "to": 1, "matrix": []}]}]}
    }"#;
    let doc = PicSDoc::parse(text).unwrap();
    let (m, act) = doc.build().unwrap();
    assert_eq!(m.elements().len(), 3);
    let act = act.unwrap();
    assert!(act.validate().is_ok());
    assert_eq!(z1_pics(&act, DEFAULT_CAP).unwrap().len(), 2);
    assert!(PicSDoc::parse(r#"{"components": [], "bogus": 1}"#).is_err());
    let bad = text.replace(r#""matrix": [[1]]"#, r#""matrix": [[0]]"#);
    let (_, act) = PicSDoc::parse(&bad).unwrap().build().unwrap();
    assert!(!act.unwrap().validate().is_ok());
}

#[test]
fn non_action_on_pics_flagged() {
    // a swap of the two C2 classes that is not multiplicative: send [R] to the nontrivial class
    let m = chain_c2();
    let g = Arc::new(FiniteGroup::cyclic(2));
    let comps = vec![vec![Some(0), Some(1)]; 2];
    let mut mats = vec![vec![Some(vec![vec![1]]), Some(vec![])]; 2];
    let act = PicSAction::symbolic(m.clone(), g.clone(), vec![0, 0], comps.clone(), mats.clone()).unwrap();
    assert!(act.validate().is_ok());
    mats[1][0] = Some(vec![vec![0]]);
    let act = PicSAction::symbolic(m, g, vec![0, 0], comps, mats).unwrap();
    let rep = act.validate();
    assert!(rep.failed("alpha*_g: X_g^-1 -> X_g bijective").is_some());
}
