//! Acceptance suite: one test per criterion, each printing a pass line with
//! the values it checked. Every comparison is exact rational equality; the
//! randomized criteria run seeded and tolerate zero disagreements.

use std::process::Command;
use std::sync::OnceLock;

use fuzzy_rough::characterize::{
    exhaustive_witness_search, is_fuzzy_rough_pair, FailedCondition, DEFAULT_ORACLE_BUDGET,
};
use fuzzy_rough::io::verify::{self, VerifyConfig, VerifyRun};
use fuzzy_rough::lattice::{check_properties, enumerate_lattice, join, meet, rough_pair_of};
use fuzzy_rough::quasiorder::{factor_poset, from_lower, from_upper};
use fuzzy_rough::space::FuzzySet;
use fuzzy_rough::{samples, UnitRational};

fn ur(s: &str) -> UnitRational {
    s.parse().unwrap()
}

fn set(space: &fuzzy_rough::ApproximationSpace, values: &[&str]) -> FuzzySet {
    FuzzySet::parse(space.universe(), values).unwrap()
}

fn values(set: &FuzzySet) -> Vec<String> {
    set.values().iter().map(|v| v.to_string()).collect()
}

#[test]
fn criterion_1_approximation_table_reproduction() {
    let space = samples::three_element_space();
    let (f1, f2) = samples::three_element_sets();

    assert_eq!(values(&space.upper(&f1).unwrap()), ["1", "3/4", "1/2"]);
    assert_eq!(values(&space.lower(&f1).unwrap()), ["1/4", "1/10", "1/2"]);
    assert_eq!(values(&space.upper(&f2).unwrap()), ["3/4", "1", "1/2"]);
    assert_eq!(values(&space.lower(&f2).unwrap()), ["1/10", "1/4", "1/2"]);
    println!("PASS criterion 1: all 12 approximation values match exactly");
}

#[test]
fn criterion_2_meet_and_componentwise_rejection() {
    let space = samples::three_element_space();
    let (f1, f2) = samples::three_element_sets();
    let p1 = rough_pair_of(&space, &f1).unwrap();
    let p2 = rough_pair_of(&space, &f2).unwrap();

    let met = meet(&space, &[p1, p2]).unwrap();
    assert_eq!(values(met.lower()), ["1/10", "1/10", "1/2"]);
    assert_eq!(values(met.upper()), ["1/4", "1/4", "1/2"]);

    // the naive componentwise candidate is not a fuzzy rough pair
    let naive_upper = set(&space, &["3/4", "3/4", "1/2"]);
    let naive_lower = set(&space, &["1/10", "1/10", "1/2"]);
    let verdict = is_fuzzy_rough_pair(&space, &naive_upper, &naive_lower).unwrap();
    assert!(!verdict.accepted);
    assert_eq!(
        verdict.failed,
        Some(FailedCondition::NoEqualityInUpperClass {
            class: vec!["a".to_string(), "b".to_string()]
        })
    );
    // ... and the exhaustive oracle confirms over all 6^3 = 216 candidates
    let found = exhaustive_witness_search(&space, &naive_upper, &naive_lower, 216).unwrap();
    assert!(found.is_none());
    println!(
        "PASS criterion 2: meet is ((1/10,1/10,1/2),(1/4,1/4,1/2)); \
         componentwise pair rejected by the decision procedure and by all 216 candidates"
    );
}

#[test]
fn criterion_3_coarse_space_enumeration() {
    let space = samples::three_element_coarse_space();
    let diagram = enumerate_lattice(&space, 1_000).unwrap();
    assert_eq!(diagram.len(), 14);

    let expected: Vec<(Vec<&str>, Vec<&str>)> = vec![
        (vec!["0", "0", "0"], vec!["0", "0", "0"]),
        (vec!["0", "0", "0"], vec!["1/2", "1/2", "1/2"]),
        (vec!["0", "0", "0"], vec!["1", "1", "1/2"]),
        (vec!["0", "0", "1/2"], vec!["1/2", "1/2", "1/2"]),
        (vec!["0", "0", "1/2"], vec!["1/2", "1/2", "1"]),
        (vec!["0", "0", "1/2"], vec!["1", "1", "1/2"]),
        (vec!["0", "0", "1/2"], vec!["1", "1", "1"]),
        (vec!["1/2", "1/2", "0"], vec!["1/2", "1/2", "1/2"]),
        (vec!["1/2", "1/2", "0"], vec!["1", "1", "1/2"]),
        (vec!["1/2", "1/2", "1/2"], vec!["1/2", "1/2", "1/2"]),
        (vec!["1/2", "1/2", "1/2"], vec!["1/2", "1/2", "1"]),
        (vec!["1/2", "1/2", "1/2"], vec!["1", "1", "1/2"]),
        (vec!["1/2", "1/2", "1/2"], vec!["1", "1", "1"]),
        (vec!["1", "1", "1"], vec!["1", "1", "1"]),
    ];
    let mut got: Vec<(Vec<String>, Vec<String>)> = diagram
        .elements()
        .iter()
        .map(|p| (values(p.lower()), values(p.upper())))
        .collect();
    got.sort();
    let mut want: Vec<(Vec<String>, Vec<String>)> = expected
        .into_iter()
        .map(|(l, u)| {
            (
                l.into_iter().map(str::to_string).collect(),
                u.into_iter().map(str::to_string).collect(),
            )
        })
        .collect();
    want.sort();
    assert_eq!(got, want);

    let report = check_properties(&space, &diagram);
    assert!(report.is_lattice);
    assert!(report.is_self_dual);
    let bottom = &diagram.elements()[diagram.bottom()];
    let top = &diagram.elements()[diagram.top()];
    assert!(bottom.lower().values().iter().all(UnitRational::is_zero));
    assert!(bottom.upper().values().iter().all(UnitRational::is_zero));
    assert!(top.lower().values().iter().all(UnitRational::is_one));
    assert!(top.upper().values().iter().all(UnitRational::is_one));
    println!(
        "PASS criterion 3: 14 pairs match the expected node set; \
         self-dual lattice with the expected bottom and top"
    );
}

#[test]
fn criterion_4_non_distributivity() {
    let space = samples::three_element_space();
    let (f1, f2) = samples::three_element_sets();
    let a1 = rough_pair_of(&space, &f1).unwrap();
    let a2 = rough_pair_of(&space, &f2).unwrap();
    let c = rough_pair_of(
        &space,
        &FuzzySet::constant(space.universe().clone(), ur("1/2")),
    )
    .unwrap();

    // (a1 ∧ a2) ∨ c collapses to c
    let lhs = join(
        &space,
        &[meet(&space, &[a1.clone(), a2.clone()]).unwrap(), c.clone()],
    )
    .unwrap();
    assert_eq!(lhs, c);

    // (a1 ∨ c) ∧ (a2 ∨ c) stays strictly above c
    let a1c = join(&space, &[a1.clone(), c.clone()]).unwrap();
    assert_eq!(values(a1c.lower()), ["1/2", "1/2", "1/2"]);
    assert_eq!(values(a1c.upper()), ["1", "3/4", "1/2"]);
    let a2c = join(&space, &[a2.clone(), c.clone()]).unwrap();
    assert_eq!(values(a2c.lower()), ["1/2", "1/2", "1/2"]);
    assert_eq!(values(a2c.upper()), ["3/4", "1", "1/2"]);
    let rhs = meet(&space, &[a1c, a2c]).unwrap();
    assert_eq!(values(rhs.lower()), ["1/2", "1/2", "1/2"]);
    assert_eq!(values(rhs.upper()), ["3/4", "3/4", "1/2"]);
    assert_ne!(lhs, rhs);

    // the property check reports the failure with a verifiable witness
    let diagram = enumerate_lattice(&space, 1_000).unwrap();
    let report = check_properties(&space, &diagram);
    assert!(report.is_lattice);
    assert!(!report.is_distributive);
    let [x, y, z] = report.distributivity_witness.unwrap();
    let lhs_idx = diagram.meet_of(x, diagram.join_of(y, z).unwrap()).unwrap();
    let rhs_idx = diagram
        .join_of(
            diagram.meet_of(x, y).unwrap(),
            diagram.meet_of(x, z).unwrap(),
        )
        .unwrap();
    assert_ne!(lhs_idx, rhs_idx);
    println!(
        "PASS criterion 4: (a1∧a2)∨c = c while (a1∨c)∧(a2∨c) has upper (3/4,3/4,1/2); \
         distributivity fails with witness triple ({x}, {y}, {z})"
    );
}

#[test]
fn criterion_5_six_element_reproduction() {
    let space = samples::six_element_space();
    let h = samples::six_element_reference_set();
    let upper = space.upper(&h).unwrap();
    let lower = space.lower(&h).unwrap();
    assert_eq!(values(&upper), ["1", "1", "3/4", "1/2", "1/2", "3/4"]);
    assert_eq!(values(&lower), ["0", "0", "1/4", "1/2", "1/2", "1/2"]);

    let names = |poset: &fuzzy_rough::quasiorder::FactorPoset| -> Vec<Vec<String>> {
        (0..poset.class_count())
            .map(|c| poset.partition().class_names(c))
            .collect()
    };
    let upper_poset = factor_poset(&from_upper(&space, &upper).unwrap()).unwrap();
    assert_eq!(
        names(&upper_poset),
        vec![
            vec!["a".to_string(), "b".to_string()],
            vec!["c".to_string()],
            vec!["d".to_string()],
            vec!["e".to_string()],
            vec!["f".to_string()],
        ]
    );
    assert_eq!(upper_poset.covers(), vec![(1, 0), (2, 1), (3, 4)]);
    assert_eq!(upper_poset.maximal(), &[0, 4]);

    let lower_poset = factor_poset(&from_lower(&space, &lower).unwrap()).unwrap();
    assert_eq!(
        names(&lower_poset),
        vec![
            vec!["a".to_string(), "b".to_string()],
            vec!["c".to_string()],
            vec!["d".to_string()],
            vec!["e".to_string(), "f".to_string()],
        ]
    );
    assert_eq!(lower_poset.covers(), vec![(1, 0), (2, 1)]);
    assert_eq!(lower_poset.maximal(), &[0, 3]);

    let verdict = is_fuzzy_rough_pair(&space, &upper, &lower).unwrap();
    assert!(verdict.accepted);
    let witness = verdict.witness.unwrap();
    assert_eq!(values(&witness), ["0", "1", "3/4", "1/2", "1/2", "3/4"]);
    assert_eq!(space.upper(&witness).unwrap(), upper);
    assert_eq!(space.lower(&witness).unwrap(), lower);
    println!(
        "PASS criterion 5: 12 approximation values, both partitions, both Hasse \
         diagrams, maximal classes and the derived witness all match"
    );
}

fn shared_run() -> &'static VerifyRun {
    static RUN: OnceLock<VerifyRun> = OnceLock::new();
    RUN.get_or_init(|| {
        verify::run(&VerifyConfig {
            seed: 42,
            samples: 200,
            max_universe: 4,
            max_chain: 4,
            sets_per_space: 3,
            symmetric: true,
            oracle_budget: DEFAULT_ORACLE_BUDGET,
        })
    })
}

#[test]
fn criterion_6_oracle_equivalence() {
    let run = shared_run();
    let oracle = run.tally("characterization-vs-oracle").unwrap();
    assert!(
        oracle.checked >= 500,
        "only {} characterization samples",
        oracle.checked
    );
    assert_eq!(oracle.failed, 0, "{:?}", oracle.first_counterexample);

    let meets = run.tally("meet-is-infimum").unwrap();
    let joins = run.tally("join-is-supremum").unwrap();
    assert!(meets.checked >= 500 && joins.checked >= 500);
    assert_eq!(meets.failed, 0, "{:?}", meets.first_counterexample);
    assert_eq!(joins.failed, 0, "{:?}", joins.first_counterexample);
    println!(
        "PASS criterion 6: decision procedure vs oracle on {} pairs, \
         meet/join vs enumerated bounds on {}/{} pairs, zero disagreements",
        oracle.checked, meets.checked, joins.checked
    );
}

#[test]
fn criterion_7_invariant_suites() {
    let run = shared_run();
    let required = [
        "approximation-sandwich",
        "approximation-monotone",
        "duality-negation-swap",
        "approximation-idempotent",
        "upper-quasiorder-valid",
        "lower-quasiorder-valid",
        "membership-bounds",
        "fixpoint-bounds",
        "negation-swaps-quasiorders",
        "threshold-characterization",
        "value-propagation",
        "class-constant-values",
        "maximal-class-separation",
        "strict-order-of-values",
        "below-some-maximal",
        "maximal-class-extremal-values",
        "maximal-class-nesting",
        "cross-propagation",
        "maximality-threshold",
        "singleton-absorption",
        "witness-certifies",
        "fixpoint-families-closed",
        "approximation-morphisms",
        "meet-family-singleton-values",
        "duality-involution",
        "bounds-are-extremes",
        "range-in-chain",
    ];
    let mut checked = 0;
    for name in required {
        let tally = run
            .tally(name)
            .unwrap_or_else(|| panic!("missing property {name}"));
        assert!(tally.checked > 0, "property {name} never ran");
        assert_eq!(
            tally.failed, 0,
            "property {name} failed: {:?}",
            tally.first_counterexample
        );
        checked += tally.checked;
    }
    println!(
        "PASS criterion 7: {} properties, {} individual checks, zero violations",
        required.len(),
        checked
    );
}

#[test]
fn criterion_8_determinism() {
    // library-level: identical configurations give identical transcripts
    let config = VerifyConfig {
        seed: 42,
        samples: 25,
        max_universe: 3,
        max_chain: 3,
        ..VerifyConfig::default()
    };
    assert_eq!(
        verify::run(&config).transcript(),
        verify::run(&config).transcript()
    );

    // CLI-level: byte-identical stdout for verify, enumerate and export-dot
    let dir = tempfile::tempdir().unwrap();
    let space_path = dir.path().join("space.json");
    std::fs::write(
        &space_path,
        fuzzy_rough::io::document::space_to_json(&samples::three_element_coarse_space()),
    )
    .unwrap();

    let bin = env!("CARGO_BIN_EXE_frs");
    let run_cli = |args: &[&str]| {
        let output = Command::new(bin).args(args).output().expect("binary runs");
        assert!(
            output.status.success(),
            "{}",
            String::from_utf8_lossy(&output.stderr)
        );
        output.stdout
    };

    let verify_args = [
        "verify",
        "--seed",
        "42",
        "--samples",
        "20",
        "--max-universe",
        "3",
        "--max-chain",
        "3",
    ];
    assert_eq!(run_cli(&verify_args), run_cli(&verify_args));

    let space_arg = space_path.to_str().unwrap();
    let enumerate_args = ["enumerate", "--space", space_arg];
    let first = run_cli(&enumerate_args);
    assert_eq!(first, run_cli(&enumerate_args));

    let diagram_path = dir.path().join("diagram.json");
    std::fs::write(&diagram_path, &first).unwrap();
    let dot_args = ["export-dot", "--diagram", diagram_path.to_str().unwrap()];
    assert_eq!(run_cli(&dot_args), run_cli(&dot_args));
    println!("PASS criterion 8: verify, enumerate and export-dot are byte-deterministic");
}
