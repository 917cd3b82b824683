//! Acceptance suite: every shipping criterion as one test, each printing
//! a `PASS`/`FAIL` line (visible with `--nocapture`). Golden values are
//! exact (degrees are rationals) and the property criteria run fixed,
//! seeded instance counts so the suite is reproducible run to run.

use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::Arc;
use std::time::{Duration, Instant};

use nstopo::structured::StructuredFamily;
use nstopo_core::script::{parse_script, parse_set_literal};
use nstopo_core::topology::{closure_fixpoint, DEFAULT_SIZE_CAP};
use nstopo_core::{
    format, Degree, Error, NeutrosophicFamily, NeutrosophicSet, NeutrosophicTriple, Universe,
};

fn criterion(name: &str, body: impl FnOnce() + UnwindSafe) {
    match catch_unwind(body) {
        Ok(()) => println!("[acceptance] {name}: PASS"),
        Err(cause) => {
            println!("[acceptance] {name}: FAIL");
            resume_unwind(cause);
        }
    }
}

// ---------------------------------------------------------------------
// Deterministic pseudo-random instances (SplitMix64).

struct Rng(u64);

impl Rng {
    fn new(seed: u64) -> Rng {
        Rng(seed)
    }

    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }
}

fn tenth(rng: &mut Rng) -> Degree {
    Degree::from_ratio(rng.below(11) as i64, 10).unwrap()
}

fn random_triple(rng: &mut Rng) -> NeutrosophicTriple {
    NeutrosophicTriple::new(tenth(rng), tenth(rng), tenth(rng))
}

fn random_universe(rng: &mut Rng, max_size: u64) -> Arc<Universe> {
    let size = 1 + rng.below(max_size);
    Arc::new(Universe::new((1..=size).map(|i| format!("e{i}"))).unwrap())
}

fn random_set(rng: &mut Rng, universe: &Arc<Universe>) -> NeutrosophicSet {
    let triples = (0..universe.len()).map(|_| random_triple(rng)).collect();
    NeutrosophicSet::new(Arc::clone(universe), triples).unwrap()
}

fn random_family(rng: &mut Rng, universe: &Arc<Universe>, members: u64) -> NeutrosophicFamily {
    let sets = (0..members)
        .map(|i| random_set(rng, universe).named(format!("S{}", i + 1)))
        .collect::<Vec<_>>();
    NeutrosophicFamily::new(sets)
        .unwrap()
        .with_universe(Arc::clone(universe))
        .unwrap()
}

// ---------------------------------------------------------------------
// Fixtures and binary invocation.

fn fixture(name: &str) -> String {
    let mut path = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    path.push("tests/fixtures");
    path.push(name);
    path.to_str().unwrap().to_owned()
}

fn nstopo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nstopo"))
        .args(args)
        .env_remove("NSTOPO_MAX_SIZE")
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn parsed_family(output: &Output) -> NeutrosophicFamily {
    StructuredFamily::from_json(&stdout_of(output))
        .unwrap()
        .to_family()
        .unwrap()
}

fn set_over(universe: &Arc<Universe>, rows: &[(&str, &str, &str)]) -> NeutrosophicSet {
    let triples = rows
        .iter()
        .map(|(m, i, n)| {
            NeutrosophicTriple::new(m.parse().unwrap(), i.parse().unwrap(), n.parse().unwrap())
        })
        .collect();
    NeutrosophicSet::new(Arc::clone(universe), triples).unwrap()
}

// ---------------------------------------------------------------------
// Criteria.

#[test]
fn acceptance_1_golden_base_generation() {
    criterion("criterion 1 (golden base generation)", || {
        let start = Instant::now();
        let script = fixture("base_session.nst");
        let out = nstopo(&["base", &script, "--family", "L", "--label", "--extended"]);
        assert_eq!(out.status.code(), Some(0));
        let stdout = stdout_of(&out);
        assert!(stdout.contains(
            "A1 \u{2229} A2 = < a/(0.1,0.2,0.9), b/(0.1,0.1,0.3), c/(0.2,0.2,0.4) >"
        ));

        let json = nstopo(&["base", &script, "--family", "L", "--json-out"]);
        let base = parsed_family(&json);
        assert_eq!(base.cardinality(), 3);
        let u = Arc::clone(base.universe().unwrap());
        let expected = [
            set_over(&u, &[("0.4", "0.4", "0.3"), ("0.1", "0.1", "0.1"), ("0.2", "0.2", "0.2")]),
            set_over(&u, &[("0.1", "0.2", "0.9"), ("0.9", "0.1", "0.3"), ("0.5", "0.3", "0.4")]),
            set_over(&u, &[("0.1", "0.2", "0.9"), ("0.1", "0.1", "0.3"), ("0.2", "0.2", "0.4")]),
        ];
        for (member, expected) in base.members().iter().zip(&expected) {
            assert_eq!(member, expected);
        }
        assert!(start.elapsed() < Duration::from_secs(1), "runtime over 1 s");
    });
}

#[test]
fn acceptance_2_golden_topology_generation() {
    criterion("criterion 2 (golden topology generation)", || {
        let start = Instant::now();
        let script = fixture("subbase_session.nst");
        let out = nstopo(&["topology", &script, "--family", "S", "--label", "--extended"]);
        assert_eq!(out.status.code(), Some(0));
        assert!(stdout_of(&out).contains("cardinality 6"));

        let json = nstopo(&["topology", &script, "--family", "S", "--json-out"]);
        let topology = parsed_family(&json);
        assert_eq!(topology.cardinality(), 6);
        let u = Arc::clone(topology.universe().unwrap());
        let expected = NeutrosophicFamily::new([
            set_over(&u, &[("0", "0", "1"), ("0", "0", "1"), ("0", "0", "1")]),
            set_over(&u, &[("0.2", "0.4", "0.3"), ("0.6", "0.1", "0.1"), ("0.4", "0.6", "0.3")]),
            set_over(&u, &[("0.3", "0.2", "0.9"), ("0.6", "0.5", "0.3"), ("0.2", "0.3", "0.8")]),
            set_over(&u, &[("0.2", "0.2", "0.9"), ("0.6", "0.1", "0.3"), ("0.2", "0.3", "0.8")]),
            set_over(&u, &[("0.3", "0.4", "0.3"), ("0.6", "0.5", "0.1"), ("0.4", "0.6", "0.3")]),
            set_over(&u, &[("1", "1", "0"), ("1", "1", "0"), ("1", "1", "0")]),
        ])
        .unwrap();
        assert!(topology.equals(&expected).unwrap());

        // The generated members, declared as a family, pass `check`.
        let check = nstopo(&["check", &fixture("topology_members.nst"), "--family", "T"]);
        assert_eq!(check.status.code(), Some(0));
        assert_eq!(stdout_of(&check), "true\n");
        assert!(start.elapsed() < Duration::from_secs(1), "runtime over 1 s");
    });
}

#[test]
fn acceptance_3_golden_family_algebra() {
    criterion("criterion 3 (golden family algebra)", || {
        let text = std::fs::read_to_string(fixture("family_session.nst")).unwrap();
        let document = parse_script(&text).unwrap();
        let l1 = document.family("L1").unwrap();
        let l2 = document.family("L2").unwrap();
        let a3 = document.set("A3").unwrap();

        let l3 = l1.intersection(l2).unwrap();
        assert_eq!(l3.cardinality(), 1);
        assert_eq!(&l3.members()[0], a3);
        assert!(l3.is_subset(l1).unwrap());

        let l4 = l1.union(l2).unwrap();
        assert_eq!(l4.cardinality(), 4);

        let l5 = l4.complement();
        let u = Arc::clone(l4.universe().unwrap());
        let expected_neg_a1 = set_over(
            &u,
            &[("0.3", "0.6", "0.4"), ("0.1", "0.9", "0.1"), ("0.2", "0.8", "0.2")],
        );
        assert_eq!(l5.members()[0], expected_neg_a1);
        assert_eq!(
            format::render_set(&l5.members()[0], &format::RenderOptions::from_spec("l")),
            "~A1 = < a/(0.3,0.6,0.4), b/(0.1,0.9,0.1), c/(0.2,0.8,0.2) >"
        );
        assert!(l4.is_disjoint(&l5).unwrap());
    });
}

#[test]
fn acceptance_4_oracle_equivalence() {
    criterion("criterion 4 (oracle equivalence, 500 instances)", || {
        let start = Instant::now();
        let mut rng = Rng::new(0x4E53_544F_504F_0004);
        for _ in 0..500 {
            let universe = random_universe(&mut rng, 4);
            let members = rng.below(5);
            let subbasis = random_family(&mut rng, &universe, members);
            let generated = subbasis.topology_from_subbase(DEFAULT_SIZE_CAP).unwrap();
            let saturated = closure_fixpoint(&subbasis, DEFAULT_SIZE_CAP).unwrap();
            assert!(generated.equals(&saturated).unwrap(), "oracle mismatch");
            assert!(generated.is_neutrosophic_topology().unwrap());
        }
        assert!(start.elapsed() < Duration::from_secs(60), "runtime over 60 s");
    });
}

#[test]
fn acceptance_5_lattice_law_suite() {
    criterion("criterion 5 (lattice laws, 1000 instances)", || {
        let mut rng = Rng::new(0x4E53_544F_504F_0005);
        for _ in 0..1000 {
            let u = random_universe(&mut rng, 4);
            let a = random_set(&mut rng, &u);
            let b = random_set(&mut rng, &u);
            let c = random_set(&mut rng, &u);
            let empty = NeutrosophicSet::empty(Arc::clone(&u)).unwrap();
            let absolute = NeutrosophicSet::absolute(Arc::clone(&u)).unwrap();

            // Commutativity.
            assert_eq!(a.union(&b).unwrap(), b.union(&a).unwrap());
            assert_eq!(a.intersection(&b).unwrap(), b.intersection(&a).unwrap());
            // Associativity.
            assert_eq!(
                a.union(&b.union(&c).unwrap()).unwrap(),
                a.union(&b).unwrap().union(&c).unwrap()
            );
            assert_eq!(
                a.intersection(&b.intersection(&c).unwrap()).unwrap(),
                a.intersection(&b).unwrap().intersection(&c).unwrap()
            );
            // Idempotence.
            assert_eq!(a.union(&a).unwrap(), a);
            assert_eq!(a.intersection(&a).unwrap(), a);
            // Absorption.
            assert_eq!(a.union(&a.intersection(&b).unwrap()).unwrap(), a);
            assert_eq!(a.intersection(&a.union(&b).unwrap()).unwrap(), a);
            // Distributivity.
            assert_eq!(
                a.intersection(&b.union(&c).unwrap()).unwrap(),
                a.intersection(&b).unwrap().union(&a.intersection(&c).unwrap()).unwrap()
            );
            assert_eq!(
                a.union(&b.intersection(&c).unwrap()).unwrap(),
                a.union(&b).unwrap().intersection(&a.union(&c).unwrap()).unwrap()
            );
            // De Morgan.
            assert_eq!(
                a.union(&b).unwrap().complement(),
                a.complement().intersection(&b.complement()).unwrap()
            );
            assert_eq!(
                a.intersection(&b).unwrap().complement(),
                a.complement().union(&b.complement()).unwrap()
            );
            // Double complement.
            assert_eq!(a.complement().complement(), a);
            // Bounds.
            assert!(empty.is_subset(&a).unwrap());
            assert!(a.is_subset(&absolute).unwrap());
        }
    });
}

#[test]
fn acceptance_6_monotonicity_suite() {
    criterion("criterion 6 (monotonicity, 200 instances)", || {
        let mut rng = Rng::new(0x4E53_544F_504F_0006);
        for _ in 0..200 {
            let universe = random_universe(&mut rng, 4);
            let members = rng.below(5);
            let larger = random_family(&mut rng, &universe, members);
            let mask = rng.next();
            let smaller = NeutrosophicFamily::new(
                larger
                    .members()
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, s)| s.clone()),
            )
            .unwrap()
            .with_universe(Arc::clone(&universe))
            .unwrap();
            assert!(smaller.is_subset(&larger).unwrap());

            let small_base = smaller.generate_base(DEFAULT_SIZE_CAP).unwrap();
            let large_base = larger.generate_base(DEFAULT_SIZE_CAP).unwrap();
            assert!(small_base.is_subset(&large_base).unwrap(), "base not monotone");

            let small_topology = smaller.topology_from_subbase(DEFAULT_SIZE_CAP).unwrap();
            let large_topology = larger.topology_from_subbase(DEFAULT_SIZE_CAP).unwrap();
            assert!(
                small_topology.is_subset(&large_topology).unwrap(),
                "topology not monotone"
            );
        }
    });
}

#[test]
fn acceptance_7_closure_check_equivalence() {
    criterion("criterion 7 (closure-check equivalence, 200 instances)", || {
        fn exhaustively_closed(
            family: &NeutrosophicFamily,
            op: fn(&NeutrosophicSet, &NeutrosophicSet) -> NeutrosophicSet,
        ) -> bool {
            let members = family.members();
            for mask in 0u32..1 << members.len() {
                if mask.count_ones() < 2 {
                    continue;
                }
                let mut chosen = members
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, s)| s);
                let first = chosen.next().unwrap().clone();
                let folded = chosen.fold(first, |acc, s| op(&acc, s));
                if !family.contains(&folded) {
                    return false;
                }
            }
            true
        }

        let mut rng = Rng::new(0x4E53_544F_504F_0007);
        let mut checked = 0u32;
        let mut round = 0u32;
        while checked < 200 {
            round += 1;
            let universe = random_universe(&mut rng, 4);
            let members = rng.below(7);
            // Mix raw families with generated topologies so both verdicts
            // appear.
            let family = if round.is_multiple_of(4) {
                random_family(&mut rng, &universe, members.min(2))
                    .topology_from_subbase(DEFAULT_SIZE_CAP)
                    .unwrap()
            } else {
                random_family(&mut rng, &universe, members)
            };
            if family.cardinality() > 6 {
                continue;
            }
            checked += 1;
            assert_eq!(
                family.is_union_closed(),
                exhaustively_closed(&family, |a, b| a.union(b).unwrap()),
                "union closure disagreement"
            );
            assert_eq!(
                family.is_intersection_closed(),
                exhaustively_closed(&family, |a, b| a.intersection(b).unwrap()),
                "intersection closure disagreement"
            );
        }
    });
}

#[test]
fn acceptance_8_round_trip_and_determinism() {
    criterion("criterion 8 (round-trip and byte determinism)", || {
        let mut rng = Rng::new(0x4E53_544F_504F_0008);
        for _ in 0..500 {
            let universe = random_universe(&mut rng, 4);
            let set = random_set(&mut rng, &universe);
            let rendered = format::render_set(&set, &format::RenderOptions::default());
            let parsed = parse_set_literal(&rendered, &universe).unwrap();
            assert!(parsed.equals(&set).unwrap(), "round-trip failed for {rendered}");
        }

        let invocations: &[&[&str]] = &[
            &["base", "base_session.nst", "--family", "L", "--label", "--extended"],
            &["base", "base_session.nst", "--family", "L", "--json-out"],
            &["topology", "subbase_session.nst", "--family", "S", "--tabular", "--label", "--extended"],
            &["topology", "subbase_session.nst", "--family", "S", "--json-out"],
            &["check", "topology_members.nst", "--family", "T"],
            &["check", "topology_members.nst", "--family", "T5"],
            &["render", "family_session.nst", "--family", "L1", "--label", "--extended"],
            &["render", "empty_family.nst", "--family", "T", "--label"],
        ];
        for invocation in invocations {
            let args: Vec<String> = invocation
                .iter()
                .enumerate()
                .map(|(i, a)| if i == 1 { fixture(a) } else { (*a).to_owned() })
                .collect();
            let args: Vec<&str> = args.iter().map(String::as_str).collect();
            let first = nstopo(&args);
            let second = nstopo(&args);
            assert_eq!(
                first.stdout, second.stdout,
                "non-deterministic output: {invocation:?}"
            );
            assert_eq!(first.status.code(), second.status.code());
        }
    });
}

#[test]
fn acceptance_9_cardinality_bound_and_resource_limit() {
    criterion("criterion 9 (cardinality bound and resource limit)", || {
        let mut rng = Rng::new(0x4E53_544F_504F_0009);
        for size in 1..=10u64 {
            for _ in 0..3 {
                let universe = random_universe(&mut rng, 4);
                let base = random_family(&mut rng, &universe, size);
                let topology = base.topology_from_base(DEFAULT_SIZE_CAP).unwrap();
                assert!(
                    topology.cardinality() <= (1 << base.cardinality()) + 1,
                    "cardinality bound violated"
                );
                // One below the family size is over the cap.
                if base.cardinality() >= 2 {
                    let tight = base.cardinality() - 1;
                    assert!(matches!(
                        base.topology_from_base(tight),
                        Err(Error::ResourceLimit { .. })
                    ));
                }
            }
        }

        let out = nstopo(&[
            "topology",
            &fixture("subbase_session.nst"),
            "--family",
            "S",
            "--max-size",
            "2",
        ]);
        assert_eq!(out.status.code(), Some(3), "cap excess must exit 3");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    });
}
