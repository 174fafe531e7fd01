//! Catalogs must reproduce the committed files byte for byte.
//!
//! To regenerate after an intended change, run the command printed in the
//! failure message and review the diff.

use std::path::PathBuf;

use assert_cmd::Command;

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn check(args: &[&str], name: &str) {
    let out = Command::cargo_bin("fk3")
        .unwrap()
        .args(args)
        .output()
        .unwrap();
    assert!(out.status.success());
    let actual = String::from_utf8(out.stdout).unwrap();
    let expected = golden(name);
    if actual != expected {
        let first = actual
            .lines()
            .zip(expected.lines())
            .position(|(a, e)| a != e)
            .unwrap_or(actual.lines().count().min(expected.lines().count()));
        panic!(
            "{name} differs from `fk3 {}` at line {}\n  expected: {:?}\n  actual:   {:?}",
            args.join(" "),
            first + 1,
            expected.lines().nth(first),
            actual.lines().nth(first)
        );
    }
}

#[test]
fn k3_catalog() {
    check(&["k3", "enumerate"], "k3.csv");
}

#[test]
fn fourfold_catalog() {
    check(&["fk3", "enumerate"], "fk3.csv");
}

#[test]
fn fourfold_catalog_published_filter() {
    check(
        &["fk3", "enumerate", "--filter", "published"],
        "fk3_published.csv",
    );
}

#[test]
fn extra_catalog() {
    check(&["fk3", "extra"], "extra.csv");
}

#[test]
fn golden_row_counts() {
    for (name, rows) in [
        ("k3.csv", 95),
        ("fk3.csv", 573),
        ("fk3_published.csv", 244),
        ("extra.csv", 2),
    ] {
        assert_eq!(golden(name).lines().count(), rows + 1, "{name}");
    }
}

#[test]
fn published_catalog_is_a_subset() {
    let keys = |text: String| -> std::collections::BTreeSet<String> {
        text.lines()
            .skip(1)
            .map(|l| l.split(',').skip(1).take(2).collect::<Vec<_>>().join(":"))
            .collect()
    };
    let all = keys(golden("fk3.csv"));
    let published = keys(golden("fk3_published.csv"));
    assert!(published.is_subset(&all));
}
