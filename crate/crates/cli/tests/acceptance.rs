//! Acceptance criteria, one line each. Every comparison is exact integer or
//! structural equality; the only tolerances are the wall-clock limits below.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use knotframe::framed::{
    apply_move, delta_i, delta_i_filtered, random_move, self_linking, shift_framing, FramedDiagram,
};
use knotframe::fronts::{
    applicable_moves, bennequin, front_move, front_to_framed, rotation_number,
};
use knotframe::topology::{
    alpha_nu, bundle_mul, check_toughandtechnical, condition_star, euler_realizable,
    BundleGroupElement, FgAbelianGroup, Rule, StarOutcome, TtOutcome, WordPair,
};
use knotframe::vassiliev::{
    alternating_sum, extend_invariant, is_order_at_most, ladder_from_front, roundtrip_check,
    verify_main_identity, InvariantLadder, SingularFramedDiagram,
};
use knotframe_cli::corpus::Corpus;
use knotframe_cli::suite::{commuting_pair, random_element, random_word, suite_alphabet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FAST: Duration = Duration::from_secs(1);
const BUNDLE_LIMIT: Duration = Duration::from_secs(5);
const SEED: u64 = 20;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn constant_ladder(_: &Corpus) -> Outcome {
    let start = Instant::now();
    let mut pass = true;
    for n in 1..=5usize {
        let coefficient_sum: i64 = (1..=n as i64 + 1)
            .map(|i| {
                if i % 2 == 1 {
                    binomial(n as i64 + 1, i)
                } else {
                    -binomial(n as i64 + 1, i)
                }
            })
            .sum();
        pass &= coefficient_sum == 1;
        let values: BTreeMap<i64, i64> = (0..=n as i64).map(|k| (-2 * k, 5)).collect();
        let ladder = InvariantLadder::new("constant", 0, values)
            .unwrap()
            .with_top(12);
        let e = extend_invariant(&ladder, n).unwrap();
        pass &= e.values().len() == n + 7 && e.values().values().all(|&v| v == 5);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..100 {
        let (a, b) = (rng.random_range(-50..=50), rng.random_range(-50..=50));
        let ladder = InvariantLadder::new("pair", 0, BTreeMap::from([(0, a), (-2, b)])).unwrap();
        pass &= extend_invariant(&ladder, 1).unwrap().value(2) == Some(&(2 * a - b));
    }
    let t = start.elapsed();
    outcome(
        pass && t < FAST,
        format!("n=1..5 constant 5 preserved; v(2)=2v(0)-v(-2) on 100 pairs; {t:?}"),
    )
}

fn main_identity(c: &Corpus) -> Outcome {
    let start = Instant::now();
    let mut pass = true;
    let mut notes = Vec::new();
    for name in ["unknot", "trefoil"] {
        let front = c.front(name).unwrap();
        let k = front_to_framed(front);
        let ladder = ladder_from_front(self_linking, front, name, -8);
        let cutoff = ladder.cutoff();
        // every rung from -8 (or -7) up to the cutoff, each equal to its index
        let expected: BTreeMap<i64, i64> = (-8..=cutoff)
            .filter(|r| (cutoff - r) % 2 == 0)
            .map(|r| (r, r))
            .collect();
        pass &= ladder.values() == &expected;
        let e = extend_invariant(&ladder.clone().with_top(cutoff + 8), 1).unwrap();
        for (&r, &v) in e.values() {
            pass &= v == self_linking(&shift_framing(&k, r - cutoff));
        }
        pass &= verify_main_identity(&e, 1) == Ok(true);
        let rt = roundtrip_check(self_linking, std::slice::from_ref(front), 1, -8, 4);
        pass &= rt == Ok(true);
        notes.push(format!(
            "{name}: rungs {}..{}",
            e.values().keys().next().unwrap(),
            e.top()
        ));
    }
    let t = start.elapsed();
    outcome(pass && t < FAST, format!("{}; {t:?}", notes.join(", ")))
}

/// Second enumeration: walk the resolutions in Gray-code order, flipping one
/// crossing of the diagram at a time.
fn gray_sum(x: impl Fn(&FramedDiagram) -> i64, s: &SingularFramedDiagram) -> i64 {
    let marked = s.marked();
    let mut k = s.framed().clone();
    let mut total = x(&k);
    let mut negatives = 0;
    for step in 1u64..(1 << marked.len()) {
        let bit = step.trailing_zeros() as usize;
        let c = marked[bit];
        let flipped_to_negative = k.diagram().sign_of(c).unwrap().is_plus();
        k = FramedDiagram::new(k.diagram().change_crossing(c).unwrap(), k.offset());
        negatives += if flipped_to_negative { 1 } else { -1 };
        total += if negatives % 2 == 0 { x(&k) } else { -x(&k) };
    }
    total
}

fn order_test(c: &Corpus) -> Outcome {
    let mut pass = true;
    let mut one = Vec::new();
    let mut two = Vec::new();
    for s in &c.singular {
        let s = &s.value;
        let a: i64 = alternating_sum(self_linking, s);
        let b = gray_sum(self_linking, s);
        pass &= a == b;
        match s.double_point_count() {
            1 => one.push(s.clone()),
            2 => two.push(s.clone()),
            _ => {}
        }
    }
    pass &= one.len() + two.len() >= 10 && !one.is_empty() && !two.is_empty();
    pass &= two.iter().all(|s| gray_sum(self_linking, s) == 0);
    pass &= one.iter().any(|s| gray_sum(self_linking, s) != 0);
    let le1 = is_order_at_most(self_linking, 1, &two);
    let le0 = is_order_at_most(self_linking, 0, &one);
    pass &= le1 == Ok(true) && le0 == Ok(false);
    outcome(
        pass,
        format!(
            "{} one-point and {} two-point fixtures; order<=1 {:?}, order<=0 {:?}; both enumerations agree",
            one.len(),
            two.len(),
            le1,
            le0
        ),
    )
}

fn stabilization(c: &Corpus) -> Outcome {
    let start = Instant::now();
    let mut pass = true;
    let mut count = 0;
    for base in ["unknot", "trefoil"] {
        let f = c.front(base).unwrap();
        let (tb, r) = (bennequin(f), rotation_number(f));
        let entries: Vec<_> = c.grid.iter().filter(|g| g.base == base).collect();
        pass &= entries.len() == 15;
        for g in entries {
            count += 1;
            pass &= bennequin(&g.front) == tb - (g.i + g.j) as i64;
            pass &= rotation_number(&g.front) == r + g.i as i64 - g.j as i64;
        }
    }
    let t = start.elapsed();
    outcome(
        pass && t < FAST,
        format!("{count} grid fronts with i+j<=4; {t:?}"),
    )
}

fn move_invariance(c: &Corpus) -> Outcome {
    let mut pass = true;
    let mut front_moves = 0;
    for f in c
        .fronts
        .iter()
        .map(|f| &f.value)
        .chain(c.grid.iter().map(|g| &g.front))
    {
        let before = (bennequin(f), rotation_number(f));
        for (mv, site) in applicable_moves(f) {
            front_moves += 1;
            let g = front_move(f, mv, site).unwrap();
            pass &= (bennequin(&g), rotation_number(&g)) == before;
        }
    }
    let mut framed_moves = 0;
    let mut changes = 0;
    for (i, k0) in c.framed.iter().enumerate() {
        let sl = self_linking(&k0.value);
        let mut rng = ChaCha8Rng::seed_from_u64(SEED + i as u64);
        let mut k = k0.value.clone();
        for _ in 0..50 {
            k = apply_move(&k, random_move(&k, &mut rng)).unwrap();
            framed_moves += 1;
            pass &= self_linking(&k) == sl;
        }
        // now mix in crossing changes
        for _ in 0..50 {
            let crossings = k.diagram().crossings();
            if !crossings.is_empty() && rng.random_bool(0.3) {
                let c = crossings[rng.random_range(0..crossings.len())];
                k = FramedDiagram::new(k.diagram().change_crossing(c).unwrap(), k.offset());
                changes += 1;
            } else {
                k = apply_move(&k, random_move(&k, &mut rng)).unwrap();
            }
            pass &= (self_linking(&k) - sl).rem_euclid(2) == 0;
        }
    }
    outcome(
        pass,
        format!(
            "{front_moves} front moves; {framed_moves} framed moves over {} fixtures; parity kept across {changes} crossing changes",
            c.framed.len()
        ),
    )
}

/// All elements of `Z/m1 + ... + Z/mk`, written independently of the
/// library's enumeration.
fn all_elements(factors: &[i64]) -> Vec<Vec<i64>> {
    factors.iter().fold(vec![vec![]], |acc, &m| {
        acc.iter()
            .flat_map(|prefix| {
                (0..m).map(move |v| {
                    let mut e = prefix.clone();
                    e.push(v);
                    e
                })
            })
            .collect()
    })
}

fn euler(_: &Corpus) -> Outcome {
    let mut pass = true;
    let mut checked = 0;
    for factors in [vec![2i64], vec![4], vec![6], vec![2, 4]] {
        let g = FgAbelianGroup::new(factors.iter().map(|&m| m as u64).collect());
        let elements = all_elements(&factors);
        let doubles: Vec<Vec<i64>> = elements
            .iter()
            .map(|a| a.iter().zip(&factors).map(|(x, m)| (2 * x) % m).collect())
            .collect();
        for e in &elements {
            checked += 1;
            pass &= euler_realizable(e, &g) == Ok(doubles.contains(e));
        }
    }
    let z = FgAbelianGroup::new(vec![0]);
    for e in -50i64..=50 {
        checked += 1;
        pass &= euler_realizable(&[e], &z) == Ok(e % 2 == 0);
    }
    outcome(
        pass,
        format!("{checked} classes over Z/2, Z/4, Z/6, Z/2+Z/4 and Z"),
    )
}

fn condition(c: &Corpus) -> Outcome {
    let expected = [
        (
            "s1xs2",
            StarOutcome::Fails {
                rule: Rule::InterpretationII,
                torus: 0,
            },
        ),
        ("tight", StarOutcome::Holds(Rule::Tight)),
        ("torsion", StarOutcome::Holds(Rule::Torsion)),
        ("atoroidal", StarOutcome::Holds(Rule::Atoroidal)),
    ];
    let mut pass = true;
    let mut notes = Vec::new();
    for (name, want) in expected {
        let got = c.descriptor(name).map(condition_star);
        pass &= got == Some(Ok(want));
        let shown = match got {
            Some(Ok(StarOutcome::Holds(r))) => format!("Holds({r})"),
            Some(Ok(StarOutcome::Fails { rule, .. })) => format!("Fails({rule})"),
            other => format!("{other:?}"),
        };
        notes.push(format!("{name}={shown}"));
    }
    outcome(pass, notes.join(", "))
}

fn bundles(_: &Corpus) -> Outcome {
    let start = Instant::now();
    let alphabet = suite_alphabet();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut pass = true;
    for _ in 0..1000 {
        let [a, b, x] = [0; 3].map(|_| random_element(&mut rng, &alphabet, 6));
        let ab = bundle_mul(&a, &b).unwrap();
        pass &=
            bundle_mul(&ab, &x).unwrap() == bundle_mul(&a, &bundle_mul(&b, &x).unwrap()).unwrap();
        pass &=
            alphabet.epsilon(ab.base()) == alphabet.epsilon(a.base()) * alphabet.epsilon(b.base());
    }
    let mut witnesses = 0;
    for _ in 0..100 {
        let (alpha, beta) = commuting_pair(&mut rng, &alphabet);
        pass &= bundle_mul(&alpha, &beta).unwrap() == bundle_mul(&beta, &alpha).unwrap();
        if let Ok(TtOutcome::Witness(w)) = check_toughandtechnical(&alpha, &beta, 6) {
            let f = BundleGroupElement::fiber(&alphabet);
            // re-evaluate beta^n and alpha^i f^j by repeated multiplication
            let power = |e: &BundleGroupElement, n: i64| {
                let step = if n < 0 { e.inverse() } else { e.clone() };
                (0..n.abs()).fold(BundleGroupElement::identity(&alphabet), |acc, _| {
                    bundle_mul(&acc, &step).unwrap()
                })
            };
            let lhs = power(&beta, w.n);
            let rhs = bundle_mul(&power(&alpha, w.i), &power(&f, w.j)).unwrap();
            if w.n != 0 && lhs == rhs {
                witnesses += 1;
            }
        }
    }
    pass &= witnesses == 100;
    let t = start.elapsed();
    outcome(
        pass && t < BUNDLE_LIMIT,
        format!("1000 triples associative and eps-multiplicative; {witnesses}/100 witnesses verified at N=6; {t:?}"),
    )
}

fn alpha_nu_and_delta(c: &Corpus) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut pass = true;
    for _ in 0..500 {
        let p = WordPair(random_word(&mut rng, 3, 5), random_word(&mut rng, 3, 5));
        let mut q = p.conjugated(&random_word(&mut rng, 3, 4));
        if rng.random_bool(0.5) {
            q = q.swapped();
        }
        pass &= alpha_nu(&p) == alpha_nu(&q);
        // trivial loops stay trivial: the value is 1 exactly when both are nontrivial
        pass &= alpha_nu(&q) == u8::from(!p.0.is_empty() && !p.1.is_empty());
    }
    let gamma4 = c.path("gamma4").unwrap();
    let filtered = delta_i_filtered(gamma4, |s| {
        s.loops.as_ref().is_some_and(|l| alpha_nu(l) == 1)
    });
    pass &= filtered == 0 && gamma4.crossing_changes().count() == 1;
    let homotopy = c.path("homotopy").unwrap();
    let d = delta_i(homotopy);
    pass &= d.abs() == 1 && homotopy.crossing_changes().count() == 1;
    outcome(
        pass,
        format!("500 conjugation/swap samples; gamma4 filtered delta = {filtered}; homotopy delta = {d}"),
    )
}

type Criterion = (&'static str, fn(&Corpus) -> Outcome);

fn main() -> ExitCode {
    let corpus = Corpus::bundled();
    let criteria: [Criterion; 9] = [
        ("ladder extension coefficients", constant_ladder),
        ("main identity round trip", main_identity),
        ("order test by two enumerations", order_test),
        ("stabilization relations", stabilization),
        ("move invariance", move_invariance),
        ("Euler class realizability", euler),
        ("condition star on descriptors", condition),
        ("bundle group and commuting powers", bundles),
        ("alpha-nu and discriminant counts", alpha_nu_and_delta),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check(&corpus);
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!("criterion {} {status}: {name} ({})", i + 1, o.detail);
        failed += usize::from(!o.pass);
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
