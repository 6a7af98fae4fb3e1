use knotframe::topology::{
    alpha_nu, bundle_mul, check_toughandtechnical, condition_star, euler_realizable, nu_equivalent,
    Alphabet, BundleGroupElement, FgAbelianGroup, ManifoldDescriptor, ManifoldFlags, NuOutcome,
    Rule, StarOutcome, TtOutcome, Word, WordPair,
};
use knotframe::Sign;
use proptest::prelude::*;

/// Doubling image found by trying every element of a finite group.
fn doubles(g: &FgAbelianGroup) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = g
        .elements()
        .unwrap()
        .iter()
        .map(|a| {
            g.reduce(&a.iter().map(|x| 2 * x).collect::<Vec<_>>())
                .unwrap()
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

#[test]
fn euler_realizable_matches_exhaustive_search() {
    for factors in [
        vec![2],
        vec![4],
        vec![6],
        vec![2, 4],
        vec![3, 5],
        vec![8, 2, 3],
    ] {
        let g = FgAbelianGroup::new(factors);
        let image = doubles(&g);
        for e in g.elements().unwrap() {
            assert_eq!(
                euler_realizable(&e, &g).unwrap(),
                image.contains(&e),
                "{e:?} in {g:?}"
            );
        }
    }
    let z = FgAbelianGroup::new(vec![0]);
    for e in -20..=20 {
        assert_eq!(euler_realizable(&[e], &z).unwrap(), e % 2 == 0);
    }
}

fn word_strategy(rank: u32, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((1..=rank as i32, any::<bool>()), 0..=max_len)
        .prop_map(|v| Word::new(v.into_iter().map(|(g, inv)| if inv { -g } else { g })))
}

fn alphabet() -> Alphabet {
    Alphabet::new(vec![Sign::Plus, Sign::Minus, Sign::Plus])
}

fn element_strategy() -> impl Strategy<Value = BundleGroupElement> {
    (-6i64..=6, word_strategy(3, 6))
        .prop_map(|(k, w)| BundleGroupElement::new(k, w, &alphabet()).unwrap())
}

proptest! {
    #[test]
    fn doubles_are_realizable(x in prop::collection::vec(-30i64..30, 3)) {
        let g = FgAbelianGroup::new(vec![0, 4, 7]);
        let e: Vec<i64> = x.iter().map(|v| 2 * v).collect();
        prop_assert!(euler_realizable(&e, &g).unwrap());
    }

    #[test]
    fn bundle_group_laws(a in element_strategy(), b in element_strategy(), c in element_strategy()) {
        let ab_c = bundle_mul(&bundle_mul(&a, &b).unwrap(), &c).unwrap();
        let a_bc = bundle_mul(&a, &bundle_mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        let e = BundleGroupElement::identity(&alphabet());
        prop_assert_eq!(bundle_mul(&a, &e).unwrap(), a.clone());
        prop_assert_eq!(bundle_mul(&e, &a).unwrap(), a.clone());
        let eps = |w: &Word| alphabet().epsilon(w);
        prop_assert_eq!(eps(&a.base().mul(b.base())), eps(a.base()) * eps(b.base()));
        let f = BundleGroupElement::fiber(&alphabet());
        let wf = bundle_mul(&BundleGroupElement::new(0, a.base().clone(), &alphabet()).unwrap(), &f).unwrap();
        prop_assert_eq!(wf.fiber_exponent(), eps(a.base()).value());
    }

    #[test]
    fn witnesses_hold_for_commuting_pairs(g in word_strategy(3, 4), p in 1i64..=3, q in -3i64..=3, a in -5i64..=5, b in -5i64..=5) {
        let g = g.cyclic_reduce();
        prop_assume!(!g.is_empty());
        let alphabet = alphabet();
        let (u, v) = (g.pow(p), g.pow(q));
        let (eu, ev) = (alphabet.epsilon(&u).value(), alphabet.epsilon(&v).value());
        // a (1 - eps(v)) = b (1 - eps(u)) makes the pair commute.
        let (a, b) = match (eu, ev) {
            (1, 1) => (a, b),
            (1, _) => (0, b),
            (_, 1) => (a, 0),
            _ => (a, a),
        };
        let alpha = BundleGroupElement::new(a, u, &alphabet).unwrap();
        let beta = BundleGroupElement::new(b, v, &alphabet).unwrap();
        match check_toughandtechnical(&alpha, &beta, 6).unwrap() {
            TtOutcome::Witness(w) => {
                prop_assert!(w.n != 0);
                let lhs = beta.pow(w.n);
                let fj = BundleGroupElement::fiber(&alphabet).pow(w.j);
                let rhs = bundle_mul(&alpha.pow(w.i), &fj).unwrap();
                prop_assert_eq!(lhs, rhs);
            }
            TtOutcome::NoWitnessFound { .. } => prop_assert!(false, "no witness"),
        }
    }

    #[test]
    fn alpha_nu_is_a_class_invariant(x in word_strategy(3, 5), y in word_strategy(3, 5), g in word_strategy(3, 4), swap in any::<bool>()) {
        let p = WordPair(x, y);
        let mut q = p.conjugated(&g);
        if swap {
            q = q.swapped();
        }
        prop_assert_eq!(alpha_nu(&p), alpha_nu(&q));
        prop_assert_eq!(nu_equivalent(&p, &q, 3, 4), NuOutcome::Equal);
    }
}

#[test]
fn descriptor_rules() {
    let z = FgAbelianGroup::new(vec![0]);
    let torsion = ManifoldDescriptor::new(
        FgAbelianGroup::new(vec![6]),
        vec![2],
        ManifoldFlags::default(),
        vec![],
    )
    .unwrap();
    assert!(matches!(
        condition_star(&torsion),
        Ok(StarOutcome::Holds(_))
    ));
    let parallel = ManifoldDescriptor::new(
        z,
        vec![2],
        ManifoldFlags {
            parallelizable_contact: Some(true),
            ..Default::default()
        },
        vec![],
    )
    .unwrap();
    assert_eq!(
        condition_star(&parallel),
        Ok(StarOutcome::Holds(Rule::Parallelizable))
    );
}
