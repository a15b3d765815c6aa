//! Acceptance battery: one test per shipping criterion. Every test
//! prints exactly one `criterion N…: PASS` or `criterion N…: FAIL`
//! line (visible with `--nocapture`, or automatically for failing
//! tests); a FAIL is preceded by the analysis of what was found
//! instead.
//!
//! Three criteria (5b, 5c, 6) assert discoveries that exhaustive
//! search over every enumerable space refutes. They are implemented
//! exactly as stated and left failing; the analysis each one prints
//! explains the refutation.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::Instant;

use primal_spaces::dsl::{
    eval_formula, parse, parse_expr, Atom, Binder, Formula, Func, Rel, SetExpr, Sort, Verdict,
};
use primal_spaces::enumerate::{primals, spaces, topologies};
use primal_spaces::operators::{
    diamond, diamond_literal, primal_topology, psi, psi_existential, OperatorTable, StarRoute,
};
use primal_spaces::setcore::{GroundSet, SetFamily, SubsetCode};
use primal_spaces::spaces::Primal;
use primal_spaces::verify::{
    find_check, run_battery, run_check, search_counterexample, search_necessity_gap, Binding,
    CheckOutcome, FoundWitness, GeneratorField, SearchOutcome, SpaceDesc, DSL_ENCODED_CHECKS,
    NAMED_PROBES,
};

#[test]
fn criterion_1_full_battery_zero_failures() {
    let started = Instant::now();
    let report = run_battery(3).unwrap();
    let elapsed_n3 = started.elapsed();

    assert_eq!(report.spaces, 232, "expected all 232 three-point spaces");
    assert!(report.checks.len() >= 24, "battery must run at least 24 named checks");
    let psi_checks = report.checks.iter().filter(|t| t.name.starts_with("psi-")).count();
    assert_eq!(psi_checks, 12, "the twelve psi properties count individually");
    for tally in &report.checks {
        assert_eq!(tally.fail, 0, "{} failed at n=3", tally.name);
    }
    assert!(
        elapsed_n3.as_secs() < 60,
        "n=3 battery took {elapsed_n3:?}, over the 60 s budget"
    );

    let started = Instant::now();
    let report = run_battery(2).unwrap();
    let elapsed_n2 = started.elapsed();
    assert_eq!(report.spaces, 16);
    for tally in &report.checks {
        assert_eq!(tally.fail, 0, "{} failed at n=2", tally.name);
    }
    assert!(
        elapsed_n2.as_secs() < 1,
        "n=2 battery took {elapsed_n2:?}, over the 1 s budget"
    );

    println!(
        "criterion 1 (full battery, zero failures): PASS ({} checks, n=3 in {elapsed_n3:?}, n=2 in {elapsed_n2:?})",
        report.checks.len()
    );
}

#[test]
fn criterion_2_star_topology_triple_route_agreement() {
    let mut scanned = 0u64;
    for n in 1..=3u8 {
        for space in spaces(n).unwrap() {
            scanned += 1;
            let fixpoint = primal_topology(&space, StarRoute::Fixpoint);
            let base = primal_topology(&space, StarRoute::Base);
            let psi_route = primal_topology(&space, StarRoute::Psi);
            let f = fixpoint.topology.open_sets().mask();
            let b = base.topology.open_sets().mask();
            let p = psi_route.topology.open_sets().mask();
            assert!(
                f == b && b == p,
                "route disagreement on space {space:?}: fixpoint {f:#b}, base {b:#b}, psi {p:#b}"
            );
        }
    }
    assert_eq!(scanned, 250);
    println!("criterion 2 (star-topology triple-route agreement): PASS over {scanned} spaces");
}

#[test]
fn criterion_3_enumeration_counts() {
    // Topology counts, including the larger size the optimized
    // enumerator unlocks.
    for (n, expected) in [(1u8, 1usize), (2, 4), (3, 29), (4, 355)] {
        let got = topologies(n).unwrap().len();
        assert_eq!(got, expected, "topology count at n={n}");
    }

    // Primal counts: one per generator.
    for n in 1..=4u8 {
        assert_eq!(primals(n).unwrap().len(), 1usize << n, "primal count at n={n}");
    }

    // Principal completeness: at n <= 3, brute-force scanning every
    // family of subsets finds exactly the generator-built primals.
    for n in 1..=3u8 {
        let ground = GroundSet::new(n).unwrap();
        let from_generators: BTreeSet<u32> =
            primals(n).unwrap().map(|p| p.sets().mask()).collect();
        let mut from_scan = BTreeSet::new();
        for mask in 0..(1u64 << ground.subset_count()) as u32 {
            if Primal::validate(ground, SetFamily::from_mask(mask)).is_ok() {
                from_scan.insert(mask);
            }
        }
        assert_eq!(from_scan, from_generators, "principal completeness at n={n}");
    }

    println!("criterion 3 (enumeration counts 1/4/29/355 and 2^n primals): PASS");
}

#[test]
fn criterion_4_fast_operators_equal_literal_definitions() {
    let mut subsets_checked = 0u64;
    for n in 1..=3u8 {
        for space in spaces(n).unwrap() {
            let full = space.ground().full().0;
            for a in 0..=full {
                let a = SubsetCode(a);
                assert_eq!(
                    diamond(&space, a).unwrap(),
                    diamond_literal(&space, a).unwrap(),
                    "diamond routes disagree at {a:?} on {space:?}"
                );
                assert_eq!(
                    psi(&space, a).unwrap(),
                    psi_existential(&space, a).unwrap(),
                    "psi routes disagree at {a:?} on {space:?}"
                );
                subsets_checked += 1;
            }
        }
    }
    println!(
        "criterion 4 (minimal-neighborhood diamond and both psi routes agree with literal definitions): PASS over {subsets_checked} subsets"
    );
}

/// Rebuild a space from its report description.
fn space_from_desc(desc: &SpaceDesc) -> primal_spaces::spaces::PrimalSpace {
    let ground = GroundSet::new(desc.n).unwrap();
    let topology = primal_spaces::spaces::Topology::validate(
        ground,
        SetFamily::from_codes(desc.open.iter().map(|&c| SubsetCode(c))),
    )
    .unwrap();
    let primal = Primal::from_generator(ground, SubsetCode(desc.primal.generator)).unwrap();
    primal_spaces::spaces::PrimalSpace::new(topology, primal).unwrap()
}

#[test]
fn criterion_5a_diamond_not_below_argument() {
    let (_, text) = NAMED_PROBES
        .iter()
        .find(|(name, _)| *name == "diamond-below-argument")
        .unwrap();
    let formula = parse(text).unwrap();
    let outcome = search_counterexample(&formula, 3).unwrap();
    let expected = FoundWitness {
        space: SpaceDesc {
            n: 2,
            open: vec![0, 3],
            primal: GeneratorField { generator: 1 },
        },
        bindings: vec![Binding { var: "A".into(), set: 1 }],
        spaces_scanned: 4,
    };
    assert_eq!(outcome, SearchOutcome::Falsified(expected.clone()), "witness drifted");

    // The witness replays: evaluating the formula on the reported
    // space reproduces the same falsifying binding...
    let table = OperatorTable::new(space_from_desc(&expected.space));
    assert_eq!(
        eval_formula(&formula, &table),
        Verdict::Fail(vec![("A".to_string(), SubsetCode(1))])
    );

    // ...and `compute` on the written-out space file shows d(A) ⊄ A.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("witness.json");
    std::fs::write(&path, serde_json::to_string(&expected.space).unwrap()).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_primal"))
        .args(["compute", path.to_str().unwrap(), "--expr", "d(A)", "--bind", "A=0b01"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "0b11 = {0,1}\n");

    println!(
        "criterion 5a (witness refuting d(A) <= A, replayed via compute): PASS (found after {} spaces)",
        expected.spaces_scanned
    );
}

#[test]
fn criterion_5b_non_suitable_space_witness() {
    let (_, text) = NAMED_PROBES.iter().find(|(name, _)| *name == "suitability").unwrap();
    let formula = parse(text).unwrap();
    match search_counterexample(&formula, 3).unwrap() {
        SearchOutcome::Falsified(witness) => {
            // Replay: the reported space really is non-suitable.
            let table = OperatorTable::new(space_from_desc(&witness.space));
            assert!(!table.is_suitable());
            println!("criterion 5b (non-suitable space witness): PASS");
        }
        SearchOutcome::Exhausted { spaces_scanned } => {
            println!("criterion 5b (non-suitable space witness): FAIL");
            println!("  asserted: mining finds a non-suitable space — nominally the discrete");
            println!("  topology on three points with primal generator 0b011 and witness A = X.");
            println!("  found: the search exhausted all {spaces_scanned} spaces with up to three");
            println!("  points without a counterexample, and none can exist at any finite size:");
            println!("  every primal over a finite ground set is principal, i.e. membership is");
            println!("  \"B ⊄ A\" for the fixed set B obtained by intersecting all non-members.");
            println!("  Then d(A) = cl(A ∩ B) ⊇ A ∩ B, so ~A ∪ d(A) ⊇ ~A ∪ (A ∩ B) ⊇ B, which");
            println!("  is exactly non-membership of ~A ∪ d(A) in the primal — the suitability");
            println!("  condition — for every A. The nominal witness rested on the diamond");
            println!("  vanishing identically on that space, but there d(X) = cl(X ∩ {{0,1}})");
            println!("  = {{0,1}} ≠ ∅, so ~X ∪ d(X) = {{0,1}} is not a primal member and the");
            println!("  space is suitable, as `compute` on it confirms.");
            panic!("criterion 5b: no non-suitable space exists among the enumerable spaces");
        }
    }
}

#[test]
fn criterion_5c_necessity_conditions_insufficiency_witness() {
    match search_necessity_gap(3).unwrap() {
        SearchOutcome::Falsified(witness) => {
            let table = OperatorTable::new(space_from_desc(&witness.space));
            assert!(!table.is_suitable());
            println!("criterion 5c (necessity-conditions gap witness): PASS");
        }
        SearchOutcome::Exhausted { spaces_scanned } => {
            println!("criterion 5c (necessity-conditions gap witness): FAIL");
            println!("  asserted: mining finds a space satisfying all three necessity");
            println!("  conditions of suitability while failing suitability itself (nominally");
            println!("  the same discrete three-point space as criterion 5b), demonstrating");
            println!("  the conditions are not jointly sufficient.");
            println!("  found: the search exhausted all {spaces_scanned} spaces with up to");
            println!("  three points without finding one. The gap is unobservable here for");
            println!("  the reason given in criterion 5b: every enumerable space is suitable");
            println!("  (principality of finite primals forces the suitability condition),");
            println!("  so no space — whatever the three conditions evaluate to on it — can");
            println!("  exhibit \"conditions hold, suitability fails\" at this scale. Whether");
            println!("  the conditions are sufficient in general is untouched by finite");
            println!("  models; this workbench can only report that no finite counterexample");
            println!("  with up to four points exists.");
            panic!("criterion 5c: no gap space exists among the enumerable spaces");
        }
    }
}

#[test]
fn criterion_6_intersection_equality_observation() {
    let formula = parse("forall A, B: d(A & B) = d(A) & d(B)").unwrap();
    let mut scanned = 0u64;
    for space in spaces(3).unwrap() {
        scanned += 1;
        let table = OperatorTable::new(space);
        if let Verdict::Fail(bindings) = eval_formula(&formula, &table) {
            let desc = primal_spaces::verify::describe_space(table.space());
            println!("criterion 6 (intersection equality on all n=3 spaces): FAIL");
            println!("  asserted: \"forall A, B: d(A & B) = d(A) & d(B)\" passes on all 232");
            println!("  three-point spaces, strengthening the one-sided law");
            println!("  d(A & B) <= d(A) & d(B) that the battery verifies everywhere.");
            println!(
                "  found: space {} of 232 refutes the equality: space {}, bindings {:?}.",
                scanned,
                serde_json::to_string(&desc).unwrap(),
                bindings
            );
            println!("  On the indiscrete topology with primal generator 0b011, take");
            println!("  A = {{0}} and B = {{1}}: A & B = ∅ gives d(A & B) = ∅, while each of");
            println!("  A, B meets the generator, so d(A) = d(B) = X (indiscrete closure of");
            println!("  a nonempty set) and d(A) & d(B) = X ≠ ∅. Only the <= direction is a");
            println!("  law; the full equality is false even on these small spaces.");
            panic!("criterion 6: the intersection equality is refuted at n = 3");
        }
    }
    println!("criterion 6 (intersection equality on all n=3 spaces): PASS over {scanned} spaces");
}

// ------------------------------------------------------------------
// Criterion 7: a deterministic AST corpus for the round-trip law.

/// xorshift64* — deterministic, seedable, no external dependency.
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

const FUNCS: [Func; 6] = [
    Func::Diamond,
    Func::Psi,
    Func::Closure,
    Func::Interior,
    Func::DiamondClosure,
    Func::DiamondInterior,
];

fn gen_expr(rng: &mut Rng, depth: usize, vars: &[&str]) -> SetExpr {
    let choice = if depth == 0 { rng.below(3) } else { rng.below(8) };
    match choice {
        0 => SetExpr::Full,
        1 => SetExpr::Empty,
        2 => {
            if vars.is_empty() {
                SetExpr::Full
            } else {
                SetExpr::Var(vars[rng.below(vars.len())].to_string())
            }
        }
        3 => SetExpr::Complement(Box::new(gen_expr(rng, depth - 1, vars))),
        4 => SetExpr::App(FUNCS[rng.below(6)], Box::new(gen_expr(rng, depth - 1, vars))),
        5 => SetExpr::Union(
            Box::new(gen_expr(rng, depth - 1, vars)),
            Box::new(gen_expr(rng, depth - 1, vars)),
        ),
        6 => SetExpr::Difference(
            Box::new(gen_expr(rng, depth - 1, vars)),
            Box::new(gen_expr(rng, depth - 1, vars)),
        ),
        _ => SetExpr::Intersection(
            Box::new(gen_expr(rng, depth - 1, vars)),
            Box::new(gen_expr(rng, depth - 1, vars)),
        ),
    }
}

fn gen_atom(rng: &mut Rng, vars: &[&str]) -> Atom {
    match rng.below(6) {
        0 => Atom::Suitable,
        1 => Atom::Ccc,
        2 => Atom::InP(gen_expr(rng, 2, vars)),
        3 => Atom::NotInP(gen_expr(rng, 2, vars)),
        _ => Atom::Relation(
            gen_expr(rng, 2, vars),
            if rng.below(2) == 0 { Rel::Eq } else { Rel::Subset },
            gen_expr(rng, 2, vars),
        ),
    }
}

fn gen_formula(rng: &mut Rng) -> Formula {
    const NAMES: [&str; 3] = ["A", "B", "C"];
    const SORTS: [Sort; 4] = [Sort::Set, Sort::Open, Sort::Closed, Sort::OpenStar];
    let binder_count = rng.below(4);
    let binders: Vec<Binder> = (0..binder_count)
        .map(|i| Binder { name: NAMES[i].to_string(), sort: SORTS[rng.below(4)] })
        .collect();
    let vars = &NAMES[..binder_count];
    let hypothesis = (0..rng.below(3)).map(|_| gen_atom(rng, vars)).collect();
    let conclusion = (0..1 + rng.below(2)).map(|_| gen_atom(rng, vars)).collect();
    Formula { binders, hypothesis, conclusion }
}

#[test]
fn criterion_7_round_trip_and_formula_parity() {
    // Part one: parse ∘ format is the identity on a deterministic
    // corpus of at least 1000 ASTs of depth at most 5.
    let mut rng = Rng(0x5EED_0F_1D3A5u64);
    let mut corpus = 0u64;
    for _ in 0..1100 {
        let expr = gen_expr(&mut rng, 5, &["A", "B", "C"]);
        let rendered = expr.to_string();
        let reparsed = parse_expr(&rendered)
            .unwrap_or_else(|e| panic!("generated expression {rendered:?} does not parse: {e}"));
        assert_eq!(reparsed, expr, "round-trip drift on {rendered:?}");
        corpus += 1;
    }
    for _ in 0..200 {
        let formula = gen_formula(&mut rng);
        let rendered = formula.to_string();
        let reparsed = parse(&rendered)
            .unwrap_or_else(|e| panic!("generated formula {rendered:?} does not parse: {e}"));
        assert_eq!(reparsed, formula, "round-trip drift on {rendered:?}");
        corpus += 1;
    }
    assert!(corpus >= 1000);

    // Part two: the formula encodings of registry checks agree with
    // the hand-coded check bodies on every space with up to three
    // points.
    assert!(DSL_ENCODED_CHECKS.len() >= 10);
    let encoded: Vec<_> = DSL_ENCODED_CHECKS
        .iter()
        .map(|(name, text)| (find_check(name).unwrap(), parse(text).unwrap()))
        .collect();
    for n in 1..=3u8 {
        for space in spaces(n).unwrap() {
            let table = OperatorTable::new(space);
            for (def, formula) in &encoded {
                let outcome = run_check(def, &table);
                let verdict = eval_formula(formula, &table);
                let agree = matches!(
                    (&outcome, &verdict),
                    (CheckOutcome::Pass, Verdict::Pass)
                        | (CheckOutcome::HypothesisNotMet, Verdict::HypothesisNotMet)
                );
                assert!(
                    agree,
                    "{} disagrees with its formula encoding: {:?} vs {:?}",
                    def.name, outcome, verdict
                );
            }
        }
    }

    println!(
        "criterion 7 (round-trip on {corpus} deterministic ASTs; {} formula/check parities): PASS",
        encoded.len()
    );
}

#[test]
fn criterion_8_byte_identical_reports() {
    let invoke = || {
        Command::new(env!("CARGO_BIN_EXE_primal"))
            .args(["verify-paper", "--n", "3", "--format", "json"])
            .output()
            .expect("binary runs")
    };
    let first = invoke();
    let second = invoke();
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(second.status.code(), Some(0));
    assert!(!first.stdout.is_empty());
    assert_eq!(first.stdout, second.stdout, "reports differ between runs");
    println!(
        "criterion 8 (byte-identical verify-paper reports): PASS ({} bytes)",
        first.stdout.len()
    );
}
