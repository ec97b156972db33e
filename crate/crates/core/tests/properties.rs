//! Property tests over a family of small partial actions: `C2` swapping two
//! copies of a local ring next to a fixed factor, restricted to an idempotent.

use partial_galois::action::{restrict_global_action, validate_twisting, PartialAction};
use partial_galois::cohomology::{Cochain, Complex};
use partial_galois::crossed::CrossedProduct;
use partial_galois::group::FiniteGroup;
use partial_galois::pics::{alpha_star, check_phi0, pics, tensor_oracle, PicSAction, PicSMonoid, TwistedIdempotents};
use partial_galois::ring::{Elem, FactorDesc, Ring};
use partial_galois::seven_term::{phi3, phi3_change_witness, phi6, PsiFamily};
use proptest::prelude::*;
use std::collections::BTreeMap;
use std::sync::Arc;

const SIZES: [u32; 4] = [2, 3, 4, 4];

fn local(i: usize) -> FactorDesc {
    match i {
        0 => FactorDesc::Zmod { modulus: 2 },
        1 => FactorDesc::Zmod { modulus: 3 },
        2 => FactorDesc::Zmod { modulus: 4 },
        _ => FactorDesc::Quotient { p: 2, poly: vec![1, 1, 1] },
    }
}

fn swap_action(a: usize, b: usize, cut: [bool; 3]) -> PartialAction {
    let s = Arc::new(Ring::product(&[local(a), local(a), local(b)]).unwrap());
    let (sa, sb) = (SIZES[a], SIZES[b]);
    let swap = move |x: Elem| {
        let c = x.0 % sb;
        let rest = x.0 / sb;
        Elem(((rest % sa) * sa + rest / sa) * sb + c)
    };
    let global = PartialAction::global(s, Arc::new(FiniteGroup::cyclic(2)), move |g, x| if g == 0 { x } else { swap(x) }).unwrap();
    let e = Elem(((cut[0] as u32) * sa + cut[1] as u32) * sb + cut[2] as u32);
    restrict_global_action(&global, e).unwrap()
}

fn units(r: &Ring, e: Elem) -> Vec<Elem> {
    let ideal = r.ideal(e).elements;
    ideal.iter().copied().filter(|&x| ideal.iter().any(|&y| r.mul(x, y) == e)).collect()
}

fn pick<T: Copy>(xs: &[T], i: usize) -> T {
    xs[i % xs.len()]
}

fn action_strategy() -> impl Strategy<Value = (usize, usize, [bool; 3])> {
    (0usize..4, 0usize..4, proptest::array::uniform3(any::<bool>()))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn restriction_keeps_axioms_and_unit_identity((a, b, cut) in action_strategy()) {
        let pa = swap_action(a, b, cut);
        prop_assert!(pa.validate().is_ok());
        let r = &*pa.ring;
        let grp = &*pa.group;
        for g in grp.elements() {
            for h in grp.elements() {
                let lhs = pa.alpha(g, r.mul(pa.one(h), pa.one(grp.inv(g))));
                prop_assert_eq!(lhs, r.mul(pa.one(g), pa.one(grp.mul(g, h))));
            }
        }
        for x in r.elements() {
            prop_assert!(pa.is_invariant(pa.trace(x)));
        }
    }

    #[test]
    fn associativity_iff_twisting((a, b, cut) in action_strategy(), pair in 0usize..4, k in any::<usize>()) {
        let pa = swap_action(a, b, cut);
        let r = &*pa.ring;
        let (g, h) = (pair / 2, pair % 2);
        let cut_gh = r.mul(pa.one(g), pa.one(pa.group.mul(g, h)));
        let us: Vec<Elem> = units(r, cut_gh).into_iter().filter(|&u| u != cut_gh).collect();
        prop_assume!(!us.is_empty());
        let mut w = Cochain::identity(&pa, 2);
        w.values[g * 2 + h] = pick(&us, k);
        let cp = CrossedProduct::new(pa.clone(), w.clone()).unwrap();
        let assoc = cp.check_associativity().is_ok();
        prop_assert_eq!(assoc, Complex::new(&pa).is_cocycle(&w).unwrap());
        let normalized = (0..2).all(|l| w.values[l] == pa.one(l) && w.values[2 * l] == pa.one(l));
        if normalized {
            prop_assert_eq!(assoc, validate_twisting(&pa, &w).unwrap().is_ok());
        } else {
            prop_assert!(!validate_twisting(&pa, &w).unwrap().is_ok());
        }
    }

    #[test]
    fn concrete_pics_is_an_inverse_monoid((a, b, _cut) in action_strategy()) {
        let r = Ring::product(&[local(a), local(b)]).unwrap();
        let m = pics(&r);
        prop_assert_eq!(m.elements().len(), 4);
        prop_assert!(m.verify().is_ok());
    }

    #[test]
    fn alpha_star_is_a_partial_action_with_phi0((a, b, cut) in action_strategy()) {
        let pa = swap_action(a, b, cut);
        prop_assert!(alpha_star(&pa).validate().is_ok());
        prop_assert!(check_phi0(&pa).is_ok());
    }

    #[test]
    fn twisted_rule_matches_tensor_oracle((a, b, cut) in action_strategy(), i in any::<usize>(), j in any::<usize>()) {
        let pa = swap_action(a, b, cut);
        prop_assume!(pa.ring.size() <= 16);
        let tw = TwistedIdempotents::new(&pa);
        let els = tw.elements();
        let (x, y) = (pick(&els, i), pick(&els, j));
        prop_assert!(tensor_oracle(&pa, x, y).matches);
    }

    #[test]
    fn phi3_cocycle_and_choice_independence((a, b, cut) in action_strategy(), i in proptest::array::uniform4(any::<usize>())) {
        let pa = swap_action(a, b, cut);
        let r = &*pa.ring;
        let cx = Complex::new(&pa);
        let family = |k: usize| -> Vec<Elem> { (0..2).map(|g| pick(&units(r, pa.one(pa.group.inv(g))), i[2 * k + g])).collect() };
        let (u, u2) = (family(0), family(1));
        let w = phi3(&pa, &PsiFamily::from_units(&pa, &u).unwrap()).unwrap();
        let w2 = phi3(&pa, &PsiFamily::from_units(&pa, &u2).unwrap()).unwrap();
        prop_assert!(w.report.is_ok() && w2.report.is_ok());
        prop_assert!(cx.is_cocycle(&w.omega).unwrap());
        let d = cx.coboundary(&phi3_change_witness(&pa, &u, &u2)).unwrap();
        prop_assert_eq!(cx.mul(&w.omega, &d), w2.omega);
    }

    #[test]
    fn phi6_is_a_coboundary_three_cocycle((a, b, cut) in action_strategy(), seed in any::<u64>()) {
        use rand::SeedableRng;
        let pa = swap_action(a, b, cut);
        let cx = Complex::new(&pa);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let rho = cx.random(2, &mut rng);
        let res = phi6(&pa, None, Some(&rho)).unwrap();
        prop_assert!(res.report.is_ok());
        prop_assert_eq!(res.omega.clone(), cx.coboundary(&cx.inverse(&rho)).unwrap());
        prop_assert_eq!(cx.coboundary(&res.omega).unwrap(), cx.identity(4));
    }

    #[test]
    fn symbolic_chains_are_inverse_monoids(top in 2u64..7, mid in 2u64..7, k in any::<u64>(), flip in any::<bool>()) {
        // ε(1) = t with top·t ≡ 0 mod mid
        let hom: Vec<u64> = (0..mid).filter(|t| (top * t) % mid == 0).collect();
        let t = hom[(k % hom.len() as u64) as usize];
        let labels = vec!["R".to_string(), "e".to_string(), "0".to_string()];
        let meet = vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 2, 2]];
        let groups = vec![vec![top], vec![mid], vec![]];
        let mut eps = BTreeMap::new();
        eps.insert((0, 1), vec![vec![t as i64]]);
        eps.insert((0, 2), vec![]);
        eps.insert((1, 2), vec![]);
        let m = PicSMonoid::symbolic(labels, meet, groups, eps).unwrap();
        prop_assert!(m.verify().is_ok());
        let grp = Arc::new(FiniteGroup::cyclic(2));
        // σ acts on [Re] by ±1
        let sign = if flip { mid as i64 - 1 } else { 1 };
        let comps = vec![vec![Some(0), Some(1), Some(2)], vec![None, Some(1), Some(2)]];
        let mats = vec![
            vec![Some(vec![vec![1]]), Some(vec![vec![1]]), Some(vec![])],
            vec![None, Some(vec![vec![sign]]), Some(vec![])],
        ];
        let act = PicSAction::symbolic(m, grp, vec![0, 1], comps, mats).unwrap();
        prop_assert!(act.validate().is_ok());
    }
}

/// Associativity cannot see normalization: with `D_σ = 0`, `ω(1,1) = 2` over
/// `F3` is a cocycle, the crossed product is associative with identity
/// `2δ₁`, yet `ω` is not a twisting.
#[test]
fn unnormalized_cocycle_is_associative_but_not_a_twisting() {
    let pa = swap_action(1, 0, [true, false, false]);
    assert_eq!(pa.one(1), pa.ring.zero());
    let mut w = Cochain::identity(&pa, 2);
    let two = pa.ring.add(pa.one(0), pa.one(0));
    w.values[0] = two;
    let cp = CrossedProduct::new(pa.clone(), w.clone()).unwrap();
    assert!(cp.check_associativity().is_ok());
    assert_eq!(cp.one(), cp.monomial(0, two));
    assert!(Complex::new(&pa).is_cocycle(&w).unwrap());
    let rep = validate_twisting(&pa, &w).unwrap();
    assert_eq!(rep.failures().count(), 1);
    assert!(rep.failures().next().unwrap().name.starts_with("(iv)"));
}
