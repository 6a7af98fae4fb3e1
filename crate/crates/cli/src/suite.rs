//! The corpus property suite.
//!
//! Checks run in a fixed order and every random choice comes from a
//! ChaCha generator seeded from the run seed and the check's position, so a
//! report depends only on the corpus and the seed.

use std::fmt;

use knotframe::framed::{
    apply_move, apply_move_with_inverse, delta_i, delta_i_filtered, framed_homotopic_parity,
    framing_obstruction, ladder_classes, random_move, self_linking, shift_framing, CrossingChange,
    DoublePointSnapshot, FramedDiagram, FramingCount, FramingLadder, MoveSequence, PathEvent,
    RungClasses,
};
use knotframe::fronts::{
    applicable_moves, bennequin, front_move, front_to_framed, kink_move, rotation_number,
};
use knotframe::topology::{
    alpha_nu, bundle_mul, check_toughandtechnical, condition_star, euler_realizable, nu_equivalent,
    Alphabet, BundleGroupElement, FgAbelianGroup, NuOutcome, StarOutcome, TtOutcome, Word,
    WordPair,
};
use knotframe::vassiliev::{
    alternating_sum, extend_invariant, is_order_at_most, make_kinked_singular, roundtrip_check,
    verify_main_identity, SingularFramedDiagram,
};
use knotframe::Sign;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::corpus::Corpus;
use crate::schema::{DescriptorJson, FramedJson, FrontJson, LadderJson, PathJson, SingularJson};

/// Upper bound on random moves applied to one fixture.
pub const MOVES_PER_FIXTURE: usize = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    pub values: Map<String, Value>,
    /// Short tag of the property being checked.
    pub cites: &'static str,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl RunReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    /// One JSON object per check, then a summary object.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&serde_json::to_string(c).expect("report serializes"));
            out.push('\n');
        }
        let summary = json!({
            "seed": self.seed,
            "pass": self.count(Status::Pass),
            "fail": self.count(Status::Fail),
            "skip": self.count(Status::Skip),
        });
        out.push_str(&summary.to_string());
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let values = Value::Object(c.values.clone());
            out.push_str(&format!(
                "{} {} [{}] {}\n",
                c.status, c.name, c.cites, values
            ));
        }
        out.push_str(&format!(
            "seed {}: {} passed, {} failed, {} skipped\n",
            self.seed,
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skip)
        ));
        out
    }
}

struct Runner {
    seed: u64,
    checks: Vec<CheckResult>,
}

impl Runner {
    /// Generator for the next check, independent of how many random values
    /// earlier checks consumed.
    fn rng(&self) -> ChaCha8Rng {
        let stream = self.checks.len() as u64;
        ChaCha8Rng::seed_from_u64(self.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ stream)
    }

    fn push(&mut self, name: impl Into<String>, cites: &'static str, ok: bool, values: Value) {
        self.record(
            name,
            cites,
            if ok { Status::Pass } else { Status::Fail },
            values,
        );
    }

    fn record(
        &mut self,
        name: impl Into<String>,
        cites: &'static str,
        status: Status,
        values: Value,
    ) {
        let values = match values {
            Value::Object(m) => m,
            other => Map::from_iter([("value".to_string(), other)]),
        };
        self.checks.push(CheckResult {
            name: name.into(),
            status,
            values,
            cites,
        });
    }
}

pub fn run_suite(corpus: &Corpus, seed: u64) -> RunReport {
    let mut r = Runner {
        seed,
        checks: Vec::new(),
    };
    fronts_checks(&mut r, corpus);
    framed_checks(&mut r, corpus);
    path_checks(&mut r, corpus);
    vassiliev_checks(&mut r, corpus);
    topology_checks(&mut r, corpus);
    schema_checks(&mut r, corpus);
    RunReport {
        seed,
        checks: r.checks,
    }
}

fn fronts_checks(r: &mut Runner, c: &Corpus) {
    for f in &c.fronts {
        let s = f.value.summary();
        let (tb, rot) = (bennequin(&f.value), rotation_number(&f.value));
        let rev = f.value.reversed();
        let ok = tb == s.writhe - s.cusp_count as i64 / 2
            && bennequin(&rev) == tb
            && rotation_number(&rev) == -rot;
        r.push(
            format!("fronts.invariants/{}", f.name),
            "front-invariants",
            ok,
            json!({"tb": tb, "r": rot}),
        );
    }
    for base in &c.fronts {
        let entries: Vec<_> = c.grid.iter().filter(|g| g.base == base.name).collect();
        if entries.is_empty() {
            continue;
        }
        let (tb, rot) = (bennequin(&base.value), rotation_number(&base.value));
        let bad: Vec<String> = entries
            .iter()
            .filter(|g| {
                bennequin(&g.front) != tb - (g.i + g.j) as i64
                    || rotation_number(&g.front) != rot + g.i as i64 - g.j as i64
            })
            .map(|g| format!("{},{}", g.i, g.j))
            .collect();
        r.push(
            format!("fronts.stabilization/{}", base.name),
            "stabilization-shift",
            bad.is_empty(),
            json!({"grid": entries.len(), "failing": bad}),
        );
    }
    for f in &c.fronts {
        let before = (bennequin(&f.value), rotation_number(&f.value));
        let moves = applicable_moves(&f.value);
        let mut bad = Vec::new();
        for &(mv, site) in &moves {
            match front_move(&f.value, mv, site) {
                Ok(g) if (bennequin(&g), rotation_number(&g)) == before => {}
                _ => bad.push(format!("{mv:?}@{site}")),
            }
        }
        r.push(
            format!("fronts.moves/{}", f.name),
            "front-move-invariance",
            bad.is_empty(),
            json!({"moves": moves.len(), "failing": bad}),
        );
    }
    for f in &c.fronts {
        let tb = bennequin(&f.value);
        let sl = self_linking(&front_to_framed(&f.value));
        let kinked = self_linking(&front_to_framed(&kink_move(&f.value)));
        r.push(
            format!("fronts.to-framed/{}", f.name),
            "contact-framing",
            sl == tb && kinked == tb - 2,
            json!({"sl": sl, "sl_after_kink": kinked}),
        );
    }
}

fn framed_checks(r: &mut Runner, c: &Corpus) {
    for k in &c.framed {
        let mut rng = r.rng();
        let sl = self_linking(&k.value);
        let mut cur = k.value.clone();
        let mut ok = true;
        for _ in 0..MOVES_PER_FIXTURE {
            let mv = random_move(&cur, &mut rng);
            match apply_move_with_inverse(&cur, mv) {
                Ok((next, inverse)) => {
                    ok &= self_linking(&next) == sl
                        && apply_move(&next, inverse).as_ref() == Ok(&cur);
                    cur = next;
                }
                Err(_) => ok = false,
            }
        }
        r.push(
            format!("framed.random-moves/{}", k.name),
            "self-linking-invariance",
            ok,
            json!({"sl": sl, "moves": MOVES_PER_FIXTURE, "final_crossings": cur.diagram().crossing_count()}),
        );
    }
    for k in &c.framed {
        let mut rng = r.rng();
        let path = crossing_change_walk(&k.value, &mut rng, MOVES_PER_FIXTURE);
        let (end, start) = (self_linking(path.end()), self_linking(&k.value));
        let d = delta_i(&path);
        let back = path.reversed();
        let ok = (end - start).rem_euclid(2) == 0
            && end - start == 2 * d
            && back.end() == &k.value
            && delta_i(&back) == -d;
        r.push(
            format!("framed.parity/{}", k.name),
            "framed-homotopy-parity",
            ok,
            json!({"sl_start": start, "sl_end": end, "delta_i": d}),
        );
    }
    for k in &c.framed {
        let mut ok = true;
        for i in -3i64..=3 {
            let ki = shift_framing(&k.value, i);
            ok &= framing_obstruction(&ki, &k.value) == Ok(i);
            ok &= framing_obstruction(&k.value, &ki) == Ok(-i);
            ok &= framed_homotopic_parity(&ki, &k.value) == Ok(i % 2 == 0);
            for j in -3i64..=3 {
                let kj = shift_framing(&k.value, j);
                let sum = framing_obstruction(&ki, &kj)
                    .and_then(|a| Ok(a + framing_obstruction(&kj, &k.value)?));
                ok &= sum == framing_obstruction(&ki, &k.value);
            }
        }
        r.push(
            format!("framed.obstruction/{}", k.name),
            "framing-obstruction",
            ok,
            json!({"shifts": 7}),
        );
    }
    if let Some(k) = c.framed.first() {
        let mut ok = true;
        let mut classes = Vec::new();
        for (label, count) in [
            ("2", FramingCount::Finite(2)),
            ("4", FramingCount::Finite(4)),
            ("infinite", FramingCount::Infinite),
        ] {
            match FramingLadder::new(k.value.clone(), count) {
                Ok(l) => {
                    let cls = ladder_classes(&l);
                    ok &= match (count, cls) {
                        (FramingCount::Finite(m), RungClasses::Cyclic(n)) => {
                            n == m
                                && l.class_of(1) == l.class_of(1 + m as i64)
                                && l.class_of(0) != l.class_of(1)
                        }
                        (FramingCount::Infinite, RungClasses::Free) => {
                            l.class_of(1) != l.class_of(5)
                        }
                        _ => false,
                    };
                    classes.push(json!({"m": label, "classes": format!("{cls:?}")}));
                }
                Err(_) => ok = false,
            }
        }
        ok &= FramingLadder::new(k.value.clone(), FramingCount::Finite(3)).is_err();
        r.push(
            "framed.ladder-classes",
            "framing-count-parity",
            ok,
            json!({"ladders": classes}),
        );
    }
}

/// Random path mixing framed moves with crossing changes at random
/// crossings. Loops are left unrecorded.
pub fn crossing_change_walk(
    start: &FramedDiagram,
    rng: &mut impl Rng,
    steps: usize,
) -> MoveSequence {
    let mut events = Vec::new();
    let mut k = start.clone();
    for _ in 0..steps {
        let crossings = k.diagram().crossings();
        if !crossings.is_empty() && rng.random_bool(0.3) {
            let crossing = crossings[rng.random_range(0..crossings.len())];
            let sign = -k.diagram().sign_of(crossing).expect("crossing exists");
            let diagram =
                SingularFramedDiagram::from_marked(&k, &[crossing]).expect("crossing exists");
            events.push(PathEvent::CrossingChange(CrossingChange {
                crossing,
                sign,
                snapshot: DoublePointSnapshot {
                    diagram,
                    loops: None,
                },
            }));
            k = FramedDiagram::new(
                k.diagram()
                    .change_crossing(crossing)
                    .expect("crossing exists"),
                k.offset(),
            );
        } else {
            let mv = random_move(&k, rng);
            k = apply_move(&k, mv).expect("random moves apply");
            events.push(PathEvent::Move(mv));
        }
    }
    MoveSequence::new(start.clone(), events).expect("walk is valid by construction")
}

fn path_checks(r: &mut Runner, c: &Corpus) {
    for p in &c.paths {
        let path = &p.value;
        let d = delta_i(path);
        let back = path.reversed();
        let looped = path.concat(&back);
        let mut ok = delta_i(&back) == -d && looped.as_ref().map(delta_i) == Ok(0);
        ok &= delta_i_filtered(path, |_| true) == d && delta_i_filtered(path, |_| false) == 0;
        let mut values = json!({"delta_i": d});
        let loops: Option<Vec<&WordPair>> = path
            .crossing_changes()
            .map(|c| c.snapshot.loops.as_ref())
            .collect();
        if let Some(loops) = loops {
            let filtered =
                delta_i_filtered(path, |s| s.loops.as_ref().is_some_and(|l| alpha_nu(l) == 1));
            values["delta_i_alpha_nu"] = json!(filtered);
            values["alpha_nu"] = json!(loops.iter().map(|l| alpha_nu(l)).collect::<Vec<_>>());
        }
        r.push(
            format!("paths.delta/{}", p.name),
            "discriminant-count",
            ok,
            values,
        );
    }
}

fn vassiliev_checks(r: &mut Runner, c: &Corpus) {
    for s in &c.singular {
        let d = s.value.double_point_count();
        let v: i64 = alternating_sum(self_linking, &s.value);
        let expected = match d {
            0 => self_linking(s.value.framed()),
            1 => 2,
            _ => 0,
        };
        r.push(
            format!("vassiliev.alt-sum/{}", s.name),
            "alternating-sum",
            v == expected,
            json!({"double_points": d, "self_linking": v}),
        );
    }
    let by_count = |n: usize| -> Vec<SingularFramedDiagram> {
        c.singular
            .iter()
            .filter(|s| s.value.double_point_count() == n)
            .map(|s| s.value.clone())
            .collect()
    };
    let (one, two) = (by_count(1), by_count(2));
    if one.is_empty() || two.is_empty() {
        r.record(
            "vassiliev.order/self-linking",
            "finite-order",
            Status::Skip,
            json!({}),
        );
    } else {
        let le1 = is_order_at_most(self_linking, 1, &two);
        let le0 = is_order_at_most(self_linking, 0, &one);
        r.push(
            "vassiliev.order/self-linking",
            "finite-order",
            le1 == Ok(true) && le0 == Ok(false),
            json!({"order_le_1": le1.ok(), "order_le_0": le0.ok(), "fixtures": one.len() + two.len()}),
        );
    }
    for k in &c.framed {
        let mut ok = true;
        for n in 0..3usize {
            let x = |k: &FramedDiagram| self_linking(k).pow(n as u32);
            ok &= alternating_sum(x, &make_kinked_singular(&k.value, n + 1)) == 0;
        }
        r.push(
            format!("vassiliev.kinked/{}", k.name),
            "main-identity",
            ok,
            json!({"orders": [0, 1, 2]}),
        );
    }
    for l in &c.ladders {
        let extended = extend_invariant(&l.value, 1);
        let verified = extended
            .as_ref()
            .map_err(Clone::clone)
            .and_then(|e| verify_main_identity(e, 1));
        let top = extended
            .as_ref()
            .ok()
            .and_then(|e| e.values().last_key_value().map(|(r, v)| json!([r, v])));
        r.push(
            format!("vassiliev.ladder/{}", l.name),
            "main-identity",
            verified == Ok(true),
            json!({"top": top}),
        );
    }
    let fronts: Vec<_> = c.fronts.iter().map(|f| f.value.clone()).collect();
    if fronts.is_empty() {
        r.record(
            "vassiliev.roundtrip/self-linking",
            "ladder-roundtrip",
            Status::Skip,
            json!({}),
        );
    } else {
        let rt = roundtrip_check(self_linking, &fronts, 1, -8, 4);
        r.push(
            "vassiliev.roundtrip/self-linking",
            "ladder-roundtrip",
            rt == Ok(true),
            json!({"fronts": fronts.len()}),
        );
    }
}

/// Reduced word with letters drawn from `rank` generators.
pub fn random_word(rng: &mut impl Rng, rank: usize, max_len: usize) -> Word {
    let len = rng.random_range(0..=max_len);
    Word::new((0..len).map(|_| {
        let g = rng.random_range(1..=rank as i32);
        if rng.random_bool(0.5) {
            g
        } else {
            -g
        }
    }))
}

pub fn random_element(
    rng: &mut impl Rng,
    alphabet: &Alphabet,
    max_len: usize,
) -> BundleGroupElement {
    let w = random_word(rng, alphabet.rank(), max_len);
    BundleGroupElement::new(rng.random_range(-6..=6), w, alphabet).expect("word fits the alphabet")
}

/// Two commuting elements `f^a g^p`, `f^b g^q` over a common root `g`, with
/// `a`, `b` adjusted so that the fiber twists cancel.
pub fn commuting_pair(
    rng: &mut impl Rng,
    alphabet: &Alphabet,
) -> (BundleGroupElement, BundleGroupElement) {
    let g = loop {
        let g = random_word(rng, alphabet.rank(), 4).cyclic_reduce();
        if !g.is_empty() {
            break g;
        }
    };
    let p = rng.random_range(1..=3);
    let q = rng.random_range(-3..=3);
    let (u, v) = (g.pow(p), g.pow(q));
    let (a, b) = (rng.random_range(-5..=5), rng.random_range(-5..=5));
    // a (1 - eps(v)) = b (1 - eps(u))
    let (a, b) = match (alphabet.epsilon(&u), alphabet.epsilon(&v)) {
        (Sign::Plus, Sign::Plus) => (a, b),
        (Sign::Plus, Sign::Minus) => (0, b),
        (Sign::Minus, Sign::Plus) => (a, 0),
        (Sign::Minus, Sign::Minus) => (a, a),
    };
    let alpha = BundleGroupElement::new(a, u, alphabet).expect("word fits the alphabet");
    let beta = BundleGroupElement::new(b, v, alphabet).expect("word fits the alphabet");
    (alpha, beta)
}

/// The alphabet used by the seeded bundle checks: one orientation-reversing
/// generator among three.
pub fn suite_alphabet() -> Alphabet {
    Alphabet::new(vec![Sign::Plus, Sign::Minus, Sign::Plus])
}

fn topology_checks(r: &mut Runner, c: &Corpus) {
    let mut groups: Vec<(String, FgAbelianGroup)> =
        [vec![2], vec![4], vec![6], vec![2, 4], vec![0]]
            .into_iter()
            .map(|f| (format!("{f:?}"), FgAbelianGroup::new(f)))
            .collect();
    for d in &c.descriptors {
        groups.push((d.name.clone(), d.value.h2().clone()));
    }
    for (label, g) in groups {
        let (ok, tested) = match g.elements() {
            Some(elements) => {
                let doubles: Vec<Vec<i64>> = elements
                    .iter()
                    .map(|a| {
                        g.reduce(&a.iter().map(|x| 2 * x).collect::<Vec<_>>())
                            .expect("same rank")
                    })
                    .collect();
                let ok = elements
                    .iter()
                    .all(|e| euler_realizable(e, &g) == Ok(doubles.contains(e)));
                (ok, elements.len())
            }
            None => {
                // Sample a box; realizable exactly when every free coordinate
                // is even and the torsion part is a double.
                let mut ok = true;
                let mut tested = 0;
                for v in -6i64..=6 {
                    let e: Vec<i64> = g.factors().iter().map(|_| v).collect();
                    let free_even = g.factors().iter().all(|&m| m != 0 || v % 2 == 0);
                    let torsion_double = g.factors().iter().all(|&m| {
                        m == 0 || (0..m as i64).any(|a| (2 * a - v).rem_euclid(m as i64) == 0)
                    });
                    ok &= euler_realizable(&e, &g) == Ok(free_even && torsion_double);
                    tested += 1;
                }
                (ok, tested)
            }
        };
        r.push(
            format!("topology.euler-realizable/{label}"),
            "euler-doubles",
            ok,
            json!({"elements": tested}),
        );
    }
    for d in &c.descriptors {
        let out = condition_star(&d.value);
        let (status, value) = match &out {
            Ok(StarOutcome::Holds(rule)) => (Status::Pass, json!({"holds": rule.name()})),
            Ok(StarOutcome::Fails { rule, torus }) => {
                (Status::Pass, json!({"fails": rule.name(), "torus": torus}))
            }
            Ok(StarOutcome::Unknown) => (Status::Skip, json!({"unknown": true})),
            Err(e) => (Status::Fail, json!({"error": e.to_string()})),
        };
        r.record(
            format!("topology.condition-star/{}", d.name),
            "condition-star",
            status,
            value,
        );
    }
    let alphabet = suite_alphabet();
    let mut rng = r.rng();
    let mut ok = true;
    let triples = 200;
    for _ in 0..triples {
        let [a, b, x] = [0; 3].map(|_| random_element(&mut rng, &alphabet, 6));
        let ab = bundle_mul(&a, &b).expect("same alphabet");
        ok &= bundle_mul(&ab, &x) == bundle_mul(&a, &bundle_mul(&b, &x).expect("same alphabet"));
        ok &=
            alphabet.epsilon(ab.base()) == alphabet.epsilon(a.base()) * alphabet.epsilon(b.base());
    }
    r.push(
        "topology.bundle-laws",
        "bundle-group",
        ok,
        json!({"triples": triples}),
    );
    let mut rng = r.rng();
    let mut ok = true;
    let pairs = 50;
    for _ in 0..pairs {
        let (alpha, beta) = commuting_pair(&mut rng, &alphabet);
        ok &= match check_toughandtechnical(&alpha, &beta, 6) {
            Ok(TtOutcome::Witness(w)) => {
                let rhs = bundle_mul(
                    &alpha.pow(w.i),
                    &BundleGroupElement::fiber(&alphabet).pow(w.j),
                );
                w.n != 0 && rhs == Ok(beta.pow(w.n))
            }
            _ => false,
        };
    }
    r.push(
        "topology.ttt-witness",
        "commuting-powers",
        ok,
        json!({"pairs": pairs, "bound": 6}),
    );
    let mut rng = r.rng();
    let mut ok = true;
    let samples = 200;
    for _ in 0..samples {
        let p = WordPair(random_word(&mut rng, 3, 5), random_word(&mut rng, 3, 5));
        let mut q = p.conjugated(&random_word(&mut rng, 3, 4));
        if rng.random_bool(0.5) {
            q = q.swapped();
        }
        ok &= alpha_nu(&p) == alpha_nu(&q) && nu_equivalent(&p, &q, 3, 4) == NuOutcome::Equal;
    }
    r.push(
        "topology.alpha-nu",
        "alpha-nu-invariance",
        ok,
        json!({"samples": samples}),
    );
}

fn schema_checks(r: &mut Runner, c: &Corpus) {
    fn round<T: Serialize + serde::de::DeserializeOwned + PartialEq>(doc: &T) -> bool {
        serde_json::to_string(doc)
            .ok()
            .and_then(|s| serde_json::from_str::<T>(&s).ok())
            .is_some_and(|back| &back == doc)
    }
    let mut bad = Vec::new();
    let mut check = |ok: bool, kind: &str, name: &str| {
        if !ok {
            bad.push(format!("{kind}/{name}"));
        }
    };
    for f in &c.fronts {
        let doc = FrontJson::from_front(&f.value);
        check(
            round(&doc) && doc.to_front().ok().as_ref() == Some(&f.value),
            "fronts",
            &f.name,
        );
    }
    for k in &c.framed {
        let doc = FramedJson::from_framed(&k.value);
        check(
            round(&doc) && doc.to_framed().ok().as_ref() == Some(&k.value),
            "framed",
            &k.name,
        );
    }
    for s in &c.singular {
        let doc = SingularJson::from_singular(&s.value);
        check(
            round(&doc) && doc.to_singular().ok().as_ref() == Some(&s.value),
            "singular",
            &s.name,
        );
    }
    for p in &c.paths {
        let doc = PathJson::from_path(&p.value);
        check(
            round(&doc) && doc.to_path().ok().as_ref() == Some(&p.value),
            "paths",
            &p.name,
        );
    }
    for l in &c.ladders {
        let doc = LadderJson::from_ladder(&l.value);
        check(
            round(&doc) && doc.to_ladder().ok().as_ref() == Some(&l.value),
            "ladders",
            &l.name,
        );
    }
    for d in &c.descriptors {
        let doc = DescriptorJson::from_descriptor(&d.value);
        check(
            round(&doc) && doc.to_descriptor().ok().as_ref() == Some(&d.value),
            "descriptors",
            &d.name,
        );
    }
    let total = c.fronts.len()
        + c.framed.len()
        + c.singular.len()
        + c.paths.len()
        + c.ladders.len()
        + c.descriptors.len();
    r.push(
        "cli.schema-roundtrip",
        "json-roundtrip",
        bad.is_empty(),
        json!({"fixtures": total, "failing": bad}),
    );
}
