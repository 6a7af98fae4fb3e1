use std::collections::BTreeMap;

use knotframe::framed::{
    apply_move, random_move, self_linking, shift_framing, FramedDiagram, KnotDiagram, Level, Visit,
};
use knotframe::fronts::{FrontEvent, FrontWord, Orientation, OrientedFront};
use knotframe::vassiliev::{
    alternating_sum, extend_invariant, is_order_at_most, make_kinked_singular, resolve,
    roundtrip_check, verify_main_identity, InvariantLadder, ResolutionAssignment,
    SingularFramedDiagram, ZMod,
};
use knotframe::Sign;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Skein recursion: split on the first double point, forcing it positive and
/// negative directly on the Gauss code.
fn oracle(x: &dyn Fn(&FramedDiagram) -> i64, k: &FramedDiagram, marked: &[u32]) -> i64 {
    let Some((&c, rest)) = marked.split_first() else {
        return x(k);
    };
    let force = |want: Sign| {
        if k.diagram().sign_of(c) == Some(want) {
            k.clone()
        } else {
            FramedDiagram::new(k.diagram().change_crossing(c).unwrap(), k.offset())
        }
    };
    oracle(x, &force(Sign::Plus), rest) - oracle(x, &force(Sign::Minus), rest)
}

fn trefoil() -> FramedDiagram {
    let p = Sign::Plus;
    let d = KnotDiagram::new(vec![
        Visit::new(1, Level::Over, p),
        Visit::new(2, Level::Under, p),
        Visit::new(3, Level::Over, p),
        Visit::new(1, Level::Under, p),
        Visit::new(2, Level::Over, p),
        Visit::new(3, Level::Under, p),
    ])
    .unwrap();
    FramedDiagram::new(d, 0)
}

fn scrambled(seed: u64, steps: usize) -> FramedDiagram {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut k = if seed.is_multiple_of(2) {
        trefoil()
    } else {
        FramedDiagram::new(KnotDiagram::unknot(), 1)
    };
    for _ in 0..steps {
        k = apply_move(&k, random_move(&k, &mut rng)).unwrap();
    }
    k
}

type Invariant = (&'static str, Box<dyn Fn(&FramedDiagram) -> i64>);

fn invariants() -> Vec<Invariant> {
    vec![
        ("self-linking", Box::new(self_linking)),
        ("self-linking squared", Box::new(|k| self_linking(k).pow(2))),
        ("writhe cubed", Box::new(|k| k.diagram().writhe().pow(3))),
        (
            "crossings",
            Box::new(|k| k.diagram().crossing_count() as i64),
        ),
        ("constant", Box::new(|_| 3)),
    ]
}

fn polynomial_ladder(coeffs: &[i64], cutoff: i64, depth: i64) -> InvariantLadder<i64> {
    let eval = |r: i64| coeffs.iter().rev().fold(0, |acc, c| acc * r + c);
    let values = (0..depth)
        .map(|k| (cutoff - 2 * k, eval(cutoff - 2 * k)))
        .collect();
    InvariantLadder::new("poly", cutoff, values).unwrap()
}

proptest! {
    #[test]
    fn alternating_sum_matches_skein_oracle(seed in any::<u64>(), d in 0usize..=4, pick in any::<u64>()) {
        let k = scrambled(seed, 12);
        let crossings = k.diagram().crossings();
        let d = d.min(crossings.len());
        let mut rng = ChaCha8Rng::seed_from_u64(pick);
        let mut marked = crossings.clone();
        for i in 0..d {
            let j = rng.random_range(i..marked.len());
            marked.swap(i, j);
        }
        marked.truncate(d);
        let s = SingularFramedDiagram::from_marked(&k, &marked).unwrap();
        for (name, x) in invariants() {
            let expected = oracle(x.as_ref(), s.framed(), s.marked());
            prop_assert_eq!(alternating_sum(x.as_ref(), &s), expected, "{}", name);
        }
    }

    #[test]
    fn polynomial_degree_law(n in 0usize..5, coeffs in prop::collection::vec(-5i64..=5, 1..=6), cutoff in -3i64..=3) {
        let degree = coeffs.len() - 1;
        let ladder = polynomial_ladder(&coeffs, cutoff, n as i64 + 2).with_top(cutoff + 8);
        if degree <= n {
            let e = extend_invariant(&ladder, n).unwrap();
            let direct = polynomial_ladder(&coeffs, cutoff + 8, n as i64 + 6);
            prop_assert_eq!(e.values(), direct.values());
        } else if degree == n + 1 && coeffs[degree] != 0 {
            prop_assert_eq!(verify_main_identity(&ladder, n), Ok(false));
        }
    }

    #[test]
    fn kinked_singular_reproduces_main_identity(seed in any::<u64>(), n in 0usize..4) {
        // A framing-dependent invariant of order n: sl^n.
        let x = |k: &FramedDiagram| self_linking(k).pow(n as u32);
        let k = scrambled(seed, 6);
        let s = make_kinked_singular(&k, n + 1);
        prop_assert_eq!(alternating_sum(x, &s), 0);
        // 0 = v(K) + sum (-1)^i C(n+1, i) v(K^{-2i})
        let mut total = x(&k);
        let mut binom = 1i64;
        for i in 1..=n as i64 + 1 {
            binom = binom * (n as i64 + 2 - i) / i;
            let sign = if i % 2 == 0 { 1 } else { -1 };
            total += sign * binom * x(&shift_framing(&k, -2 * i));
        }
        prop_assert_eq!(total, 0);
    }

    #[test]
    fn filtration_is_monotone(seed in any::<u64>(), n in 0usize..3) {
        // An (n+2)-point diagram's alternating sum is the difference of the
        // sums over its two (n+1)-point resolutions at the first double point.
        let k = scrambled(seed, 10);
        let crossings = k.diagram().crossings();
        prop_assume!(crossings.len() >= n + 2);
        let marked = &crossings[..n + 2];
        let higher = SingularFramedDiagram::from_marked(&k, marked).unwrap();
        let lower: Vec<SingularFramedDiagram> = [Sign::Plus, Sign::Minus]
            .into_iter()
            .map(|first| {
                let mut signs = vec![Sign::Plus; n + 2];
                signs[0] = first;
                let r = resolve(&higher, &ResolutionAssignment::new(signs)).unwrap();
                SingularFramedDiagram::from_marked(&r, &marked[1..]).unwrap()
            })
            .collect();
        for (name, x) in invariants() {
            if is_order_at_most(x.as_ref(), n, &lower).unwrap() {
                prop_assert!(is_order_at_most(x.as_ref(), n + 1, std::slice::from_ref(&higher)).unwrap(), "{}", name);
            }
        }
    }
}

#[test]
fn binomial_identity_on_constant_ladders() {
    for n in 0..=5 {
        let ladder = polynomial_ladder(&[7], 0, n as i64 + 1).with_top(10);
        let e = extend_invariant(&ladder, n).unwrap();
        assert!(e.values().values().all(|&v| v == 7));
        assert_eq!(verify_main_identity(&e, n), Ok(true));
    }
}

#[test]
fn kinked_resolutions_are_reframings() {
    let k = trefoil();
    let s = make_kinked_singular(&k, 3);
    for mask in 0..8u64 {
        let a = ResolutionAssignment::from_mask(3, mask);
        let r = resolve(&s, &a).unwrap();
        let negatives = mask.count_ones() as i64;
        assert_eq!(self_linking(&r), self_linking(&k) - 2 * negatives);
    }
}

#[test]
fn zmod_values() {
    let x = |k: &FramedDiagram| ZMod::<4>::new(self_linking(k));
    let s = make_kinked_singular(&trefoil(), 1);
    assert_eq!(alternating_sum(x, &s), ZMod::new(2));
    let s2 = make_kinked_singular(&trefoil(), 2);
    assert_eq!(alternating_sum(x, &s2), ZMod::new(0));
}

#[test]
fn roundtrip_on_fronts() {
    use FrontEvent::{Crossing as X, LeftCusp as L, RightCusp as R};
    let fronts = vec![
        OrientedFront::new(FrontWord::new(vec![L(1), R(1)]), Orientation::Forward).unwrap(),
        OrientedFront::new(
            FrontWord::new(vec![L(1), L(1), X(2), X(2), X(2), R(1), R(1)]),
            Orientation::Forward,
        )
        .unwrap(),
    ];
    assert_eq!(roundtrip_check(self_linking, &fronts, 1, -8, 4), Ok(true));
    assert_eq!(
        roundtrip_check(|_: &FramedDiagram| 1i64, &fronts, 3, -8, 4),
        Ok(true)
    );
    assert_eq!(
        roundtrip_check(
            |k: &FramedDiagram| self_linking(k).pow(2),
            &fronts,
            1,
            -8,
            4
        ),
        Ok(false)
    );
    assert_eq!(
        roundtrip_check(
            |k: &FramedDiagram| self_linking(k).pow(2),
            &fronts,
            2,
            -8,
            4
        ),
        Ok(true)
    );
    let values: BTreeMap<i64, i64> = BTreeMap::from([(1, 1), (-1, -1)]);
    let l = InvariantLadder::new("trefoil", 1, values).unwrap();
    assert_eq!(extend_invariant(&l, 1).unwrap().value(3), Some(&3));
}
