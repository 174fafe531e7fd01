//! Acceptance suite: prints one `criterion N: PASS|FAIL ...` line per
//! criterion and exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use assert_cmd::Command;
use fk3_core::census::{census_key, fourfold_weight_systems, K3_MAX_DEGREE};
use fk3_core::hodge::hodge_correspondence_holds;
use fk3_core::singularity::reid_tai_classify;
use fk3_core::verify;
use fk3_core::{
    brute_force_census, enumerate_fk3_fourfolds, enumerate_k3_surfaces, semigroup_contains,
    Fk3Filter, QuotientType, SingClass, WeightSystem,
};
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;

struct Outcome {
    criterion: u32,
    ok: bool,
    detail: String,
}

fn report(criterion: u32, ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        criterion,
        ok,
        detail: detail.into(),
    }
}

fn timed_run(args: &[&str]) -> (String, Duration) {
    let start = Instant::now();
    let out = Command::cargo_bin("fk3")
        .unwrap()
        .args(args)
        .output()
        .unwrap();
    let elapsed = start.elapsed();
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    (String::from_utf8(out.stdout).unwrap(), elapsed)
}

fn data_rows(csv: &str) -> Vec<Vec<String>> {
    csv.lines()
        .skip(1)
        .map(|l| l.split(',').map(String::from).collect())
        .collect()
}

fn ws(weights: &[i64], d: i64) -> WeightSystem {
    WeightSystem::new(weights.to_vec(), d).unwrap()
}

fn criterion_01_k3_census() -> Outcome {
    let (csv, elapsed) = timed_run(&["k3", "enumerate", "--verify"]);
    let rows = data_rows(&csv).len();
    report(
        1,
        rows == 95 && elapsed < Duration::from_secs(10),
        format!("k3 enumerate: {rows} families (expected 95) in {elapsed:.2?} (limit 10 s)"),
    )
}

fn criterion_02_fourfold_census() -> Outcome {
    let (csv, elapsed) = timed_run(&["fk3", "enumerate"]);
    let rows = data_rows(&csv).len();
    let (published, _) = timed_run(&["fk3", "enumerate", "--filter", "published"]);
    let published = data_rows(&published).len();
    report(
        2,
        rows == 244 && elapsed < Duration::from_secs(60),
        format!("fk3 enumerate: {rows} families (expected 244) in {elapsed:.2?} (limit 60 s); info: --filter published yields {published}"),
    )
}

fn criterion_03_terminal_subset() -> Outcome {
    let count = |csv: &str| data_rows(csv).iter().filter(|r| r[6] == "terminal").count();
    let (exact, _) = timed_run(&["fk3", "enumerate"]);
    let (published, _) = timed_run(&["fk3", "enumerate", "--filter", "published"]);
    let terminal = count(&exact);
    let published = count(&published);
    report(
        3,
        terminal == 197,
        format!(
            "{terminal} terminal families (expected 197); info: --filter published has {published}"
        ),
    )
}

fn criterion_04_extra_families() -> Outcome {
    let (csv, _) = timed_run(&["fk3", "extra", "--verify"]);
    let found: Vec<(String, String, String)> = data_rows(&csv)
        .into_iter()
        .map(|r| (r[1].clone(), r[2].clone(), r[3].clone()))
        .collect();
    let expected = [
        ("1 2 2 2 2 3".to_string(), "6".to_string(), "15".to_string()),
        ("3 3 4 4 4 6".to_string(), "12".to_string(), "3".to_string()),
    ];
    report(4, found == expected, format!("fk3 extra: {found:?}"))
}

fn criterion_05_oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let k3s = enumerate_k3_surfaces();
    let d_max = k3s.iter().map(WeightSystem::degree).max().unwrap();
    let constructed = fourfold_weight_systems(&k3s, Fk3Filter::Exact);
    let brute = brute_force_census(d_max);
    let elapsed = start.elapsed();
    let diff = verify::set_difference(&constructed, &brute);
    report(
        5,
        d_max == K3_MAX_DEGREE && diff.is_empty() && elapsed < Duration::from_secs(600),
        format!(
            "brute force to d = {d_max}: {} vs {} constructed, {} + {} unmatched, {elapsed:.2?} (limit 10 min)",
            brute.len(),
            constructed.len(),
            diff.only_left.len(),
            diff.only_right.len()
        ),
    )
}

fn criterion_06_association_theorem() -> Outcome {
    let k3s = enumerate_k3_surfaces();
    let census: BTreeSet<&WeightSystem> = k3s.iter().collect();
    let records = enumerate_fk3_fourfolds();
    let eligible: Vec<_> = records.iter().filter(|r| r.ws.top() > 1).collect();
    let good = eligible
        .iter()
        .filter(|r| {
            let a = r.ws.weights();
            let d = r.ws.degree();
            (0..5).any(|i| a[i] + a[5] == d)
                && r.association
                    .as_ref()
                    .is_some_and(|assoc| census.contains(&assoc.k3))
        })
        .count();
    report(
        6,
        good == eligible.len() && !eligible.is_empty(),
        format!(
            "{good}/{} families with a_5 > 1 have a census K3 attached",
            eligible.len()
        ),
    )
}

fn criterion_07_hodge_invariants() -> Outcome {
    let records = enumerate_fk3_fourfolds();
    let shape_ok = records
        .iter()
        .filter(|r| r.hodge.primitive[0] == 0 && r.hodge.primitive[1] == 1)
        .count();
    let associated: Vec<_> = records
        .iter()
        .filter_map(|r| Some((r, r.association.as_ref()?)))
        .collect();
    let series_ok = associated
        .iter()
        .filter(|(r, a)| hodge_correspondence_holds(&r.ws, a.index) == Ok(true))
        .count();
    report(
        7,
        shape_ok == records.len() && series_ok == associated.len(),
        format!(
            "h40 = 0, h31 = 1 for {shape_ok}/{}; series identity for {series_ok}/{}",
            records.len(),
            associated.len()
        ),
    )
}

fn criterion_08_worked_singularity_example() -> Outcome {
    let (json, _) = timed_run(&["singularities", "1,1,1,2,3,4:6", "--format", "json"]);
    let strata: serde_json::Value = serde_json::from_str(&json).unwrap();
    let strata = strata.as_array().unwrap();
    let find = |r: i64| strata.iter().find(|s| s["r"] == r).unwrap();
    let (two, three, four) = (find(2), find(3), find(4));
    let curve = two["indices"].as_array().unwrap().len() == 2
        && two["relation"] == "cut"
        && two["transverse_type"] == "1/2(1,1,1,1)";
    let point = four["indices"] == serde_json::json!([5])
        && four["relation"] == "contained"
        && four["tangent_weight"] == 2
        && four["transverse_type"] == "1/4(1,1,1,3)";
    let missed = three["indices"] == serde_json::json!([4]) && three["relation"] == "disjoint";
    report(
        8,
        strata.len() == 3 && curve && point && missed,
        format!("curve 1/2(1,1,1,1): {curve}; point 1/4(1,1,1,3) via weight-2 tangent: {point}; r=3 point off X: {missed}"),
    )
}

/// Age of `g^k` from the eigenvalue angles, in floating point.
fn age_from_angles(q: &QuotientType, k: i64) -> f64 {
    let r = q.order() as f64;
    q.residues()
        .iter()
        .map(|&c| {
            let angle = std::f64::consts::TAU * (k * c) as f64 / r;
            let turn = angle
                .sin()
                .atan2(angle.cos())
                .rem_euclid(std::f64::consts::TAU);
            let fraction = turn / std::f64::consts::TAU;
            // A trivial eigenvalue can land just below a full turn.
            if 1.0 - fraction < 1e-9 {
                0.0
            } else {
                fraction
            }
        })
        .sum()
}

fn classify_from_angles(q: &QuotientType) -> SingClass {
    let ages: Vec<f64> = (1..q.order()).map(|k| age_from_angles(q, k)).collect();
    const EPS: f64 = 1e-9;
    if ages.iter().all(|&a| a > 1.0 + EPS) {
        SingClass::Terminal
    } else if ages.iter().all(|&a| a > 1.0 - EPS) {
        SingClass::Canonical
    } else {
        SingClass::Klt
    }
}

fn criterion_09_reid_tai() -> Outcome {
    let q = |r: i64, c: &[i64]| QuotientType::new(r, c.to_vec()).unwrap();
    let units = [
        (q(2, &[1, 1, 1, 1]), SingClass::Terminal),
        (q(4, &[1, 1, 1, 3]), SingClass::Terminal),
        (q(2, &[1, 1]), SingClass::Canonical),
        (q(3, &[1, 1]), SingClass::Klt),
    ];
    let units_ok = units.iter().all(|(t, c)| reid_tai_classify(t) == *c);

    let mut cases = 0;
    let mut disagreements = 0;
    for r in 2..=12i64 {
        let mut stack: Vec<Vec<i64>> = vec![vec![]];
        while let Some(residues) = stack.pop() {
            let t = q(r, &residues);
            cases += 1;
            if reid_tai_classify(&t) != classify_from_angles(&t) {
                disagreements += 1;
            }
            if residues.len() < 4 {
                let from = residues.last().copied().unwrap_or(1);
                stack.extend((from..r).map(|c| [residues.as_slice(), &[c]].concat()));
            }
        }
    }
    report(
        9,
        units_ok && disagreements == 0,
        format!("unit cases: {units_ok}; {disagreements} disagreements over {cases} sorted residue tuples, r <= 12, length <= 4"),
    )
}

fn semigroup_by_enumeration(target: i64, generators: &[i64]) -> bool {
    match generators.split_first() {
        None => target == 0,
        Some((&g, rest)) => {
            (0..=target / g).any(|e| semigroup_by_enumeration(target - e * g, rest))
        }
    }
}

fn criterion_10_property_suites() -> Outcome {
    let mut runner = TestRunner::deterministic();
    let mut disagreements = 0u32;
    let mut cases = 0u32;
    let strategy = (0i64..=100, prop::collection::vec(1i64..=30, 1..=4));
    for _ in 0..1000 {
        let (target, generators) = strategy.new_tree(&mut runner).unwrap().current();
        cases += 1;
        if semigroup_contains(target, &generators) != semigroup_by_enumeration(target, &generators)
        {
            disagreements += 1;
        }
    }

    let records = enumerate_fk3_fourfolds();
    let symmetry = verify::series_symmetry(&records);

    let runs: Vec<String> = [
        &["fk3", "enumerate"][..],
        &["fk3", "enumerate", "--jobs", "8"],
        &["fk3", "enumerate", "--jobs", "1"],
    ]
    .iter()
    .map(|args| timed_run(args).0)
    .collect();
    let deterministic = runs.windows(2).all(|w| w[0] == w[1]);
    let mut sorted = records.iter().map(|r| r.ws.clone()).collect::<Vec<_>>();
    sorted.sort_by(|x, y| census_key(x).cmp(&census_key(y)));
    let ordered = sorted.iter().zip(&records).all(|(w, r)| *w == r.ws);

    report(
        10,
        disagreements == 0 && symmetry.is_empty() && deterministic && ordered,
        format!(
            "semigroup: {disagreements}/{cases} disagreements; series symmetry violations: {}/{}; byte-identical runs (default, --jobs 8, --jobs 1): {deterministic}",
            symmetry.len(),
            records.len()
        ),
    )
}

fn worked_membership_examples() {
    assert!(enumerate_k3_surfaces().contains(&ws(&[5, 6, 22, 33], 66)));
    assert!(enumerate_fk3_fourfolds()
        .iter()
        .any(|r| r.ws == ws(&[1, 1, 1, 2, 3, 4], 6)));
}

fn main() {
    worked_membership_examples();
    let criteria: [fn() -> Outcome; 10] = [
        criterion_01_k3_census,
        criterion_02_fourfold_census,
        criterion_03_terminal_subset,
        criterion_04_extra_families,
        criterion_05_oracle_equivalence,
        criterion_06_association_theorem,
        criterion_07_hodge_invariants,
        criterion_08_worked_singularity_example,
        criterion_09_reid_tai,
        criterion_10_property_suites,
    ];
    let mut failed = 0;
    for run in criteria {
        let outcome = run();
        let status = if outcome.ok { "PASS" } else { "FAIL" };
        println!(
            "criterion {}: {status} {}",
            outcome.criterion, outcome.detail
        );
        failed += usize::from(!outcome.ok);
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
