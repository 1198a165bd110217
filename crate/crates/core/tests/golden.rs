use std::fs;
use std::path::{Path, PathBuf};

use springer_lab::delta::Params;
use springer_lab::partition::Partition;
use springer_lab::report::{
    check_fixture, emit_report, fixture_records, load_fixtures, Fixture, FixtureFile, Format,
    GridBounds, RunManifest,
};
use springer_lab::suites::{run_suite, SuiteConfig, ANTISYM, FROBENIUS_EQUIVALENCE};
use springer_lab::symfunc::{frob_sigma, FrobeniusJson};

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

#[test]
fn every_fixture_matches() {
    let files = load_fixtures(&golden_dir()).unwrap();
    assert!(files.len() >= 15);
    for (path, file) in &files {
        let o = check_fixture(file).unwrap();
        assert!(o.passed(), "{}: {:#?}", path.display(), o.diffs);
    }
}

#[test]
fn every_kind_is_covered() {
    let files = load_fixtures(&golden_dir()).unwrap();
    let kinds: std::collections::BTreeSet<&str> =
        files.iter().map(|(_, f)| f.fixture.kind()).collect();
    for k in [
        "frobenius",
        "descent_words",
        "sigma",
        "battery",
        "cocharge_word",
        "ctype",
        "boosted_cocharge",
        "hilbert",
        "polarization",
        "garnir",
        "filling_monomial",
        "higher_specht",
    ] {
        assert!(kinds.contains(k), "{k}");
    }
}

#[test]
fn frobenius_fixture_is_byte_identical() {
    let path = golden_dir().join("frobenius_4_21_3.json");
    let stored = fs::read_to_string(&path).unwrap();
    let file: FixtureFile = serde_json::from_str(&stored).unwrap();
    let p = Params::new(4, Partition::new(vec![2, 1]).unwrap(), 3).unwrap();
    let fresh = FixtureFile {
        fixture: Fixture::Frobenius {
            expansion: FrobeniusJson::new(&p, "sigma", &frob_sigma(&p)),
        },
        ..file
    };
    let mut text = serde_json::to_string_pretty(&fresh).unwrap();
    text.push('\n');
    assert_eq!(text, stored);
}

#[test]
fn corrupted_fixture_is_reported_with_a_path() {
    let dir = tempfile::tempdir().unwrap();
    let src = fs::read_to_string(golden_dir().join("hilbert_4_21_3.json")).unwrap();
    fs::write(dir.path().join("bad.json"), src.replace("9,", "10,")).unwrap();
    let records = fixture_records(dir.path()).unwrap();
    assert_eq!(records.len(), 1);
    assert!(!records[0].verdict);
    assert!(
        records[0].detail.contains("$.coeffs[2]"),
        "{}",
        records[0].detail
    );
}

fn run_manifest() -> RunManifest {
    let cfg = SuiteConfig {
        max_n: 4,
        max_s: 2,
        ..Default::default()
    };
    let mut m = RunManifest::new(
        GridBounds {
            max_n: cfg.max_n,
            max_s: cfg.max_s,
            max_algebra_dim: cfg.max_algebra_dim,
        },
        &[FROBENIUS_EQUIVALENCE, ANTISYM],
    );
    m.extend(run_suite(ANTISYM, &cfg).unwrap());
    m.extend(run_suite(FROBENIUS_EQUIVALENCE, &cfg).unwrap());
    m
}

#[test]
fn repeated_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for format in [Format::Json, Format::Csv] {
        let a = dir.path().join("a");
        let b = dir.path().join("b");
        emit_report(&run_manifest(), format, &a).unwrap();
        emit_report(&run_manifest(), format, &b).unwrap();
        assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    }
}

#[test]
fn report_round_trips_through_json() {
    let m = run_manifest();
    assert!(m.passed());
    m.validate().unwrap();
    let text = serde_json::to_string(&m).unwrap();
    let back: RunManifest = serde_json::from_str(&text).unwrap();
    assert_eq!(back, m);
}

#[test]
fn unwritable_path_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("report.json");
    assert!(emit_report(&run_manifest(), Format::Json, &path).is_err());
}
