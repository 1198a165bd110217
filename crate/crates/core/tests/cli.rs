use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_springer-lab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn enumerate_descent_words() {
    let o = run(&[
        "enumerate",
        "--n",
        "2",
        "--lambda",
        "1",
        "--s",
        "2",
        "--what",
        "descent-words",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "00\n01\n10\n");
}

#[test]
fn enumerations_are_sorted_and_stable() {
    for what in ["descent-words", "sigma", "battery"] {
        let args = [
            "enumerate",
            "--n",
            "4",
            "--lambda",
            "2,1",
            "--s",
            "3",
            "--what",
            what,
            "--format",
            "json",
        ];
        let a = stdout(&run(&args));
        assert_eq!(a, stdout(&run(&args)), "{what}");
        let v: Vec<serde_json::Value> = serde_json::from_str(&a).unwrap();
        assert_eq!(v.len(), if what == "descent-words" { 22 } else { 10 });
    }
    let text = stdout(&run(&[
        "enumerate",
        "--n",
        "4",
        "--lambda",
        "2,1",
        "--s",
        "3",
        "--what",
        "descent-words",
    ]));
    let lines: Vec<&str> = text.lines().collect();
    let mut sorted = lines.clone();
    sorted.sort();
    assert_eq!(lines, sorted);
}

#[test]
fn sigma_json_layout() {
    let o = run(&[
        "enumerate",
        "--n",
        "2",
        "--lambda",
        "1",
        "--s",
        "2",
        "--what",
        "sigma",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v[0]["tableau"]["rows"].is_array());
    assert!(v[0]["mu"].is_array());
    let o = run(&[
        "enumerate",
        "--n",
        "2",
        "--lambda",
        "1",
        "--s",
        "2",
        "--what",
        "battery",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["Lambda"], serde_json::json!([2, 1]));
}

#[test]
fn frobenius_methods_agree() {
    let base = [
        "frobenius",
        "--n",
        "4",
        "--lambda",
        "2,1",
        "--s",
        "3",
        "--method",
    ];
    let sigma = stdout(&run(&[&base[..], &["sigma"]].concat()));
    let battery = stdout(&run(&[&base[..], &["battery"]].concat()));
    let golden = fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/frobenius_4_21_3.json"),
    )
    .unwrap();
    let v: serde_json::Value = serde_json::from_str(&sigma).unwrap();
    let g: serde_json::Value = serde_json::from_str(&golden).unwrap();
    assert_eq!(v["terms"], g["terms"]);
    assert_eq!(sigma.replace("\"sigma\"", "\"battery\""), battery);

    let q1 = stdout(&run(&[
        &base[..],
        &["sigma", "--q-one", "--format", "text"],
    ]
    .concat()));
    assert_eq!(q1.trim(), "(3)s(4) + (4)s(3,1) + (2)s(2,2) + (1)s(2,1,1)");
}

#[test]
fn config_errors_exit_2() {
    let o = run(&["frobenius", "--n", "3", "--lambda", "2,1", "--s", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
    assert_eq!(
        run(&["frobenius", "--n", "3", "--lambda", "1,2", "--s", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["enumerate", "--n", "3", "--s", "2", "--what", "nothing"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "--suite", "unknown"]).status.code(),
        Some(2)
    );
}

#[test]
fn empty_lambda_spelled_as_empty_string() {
    let o = run(&[
        "enumerate",
        "--n",
        "2",
        "--lambda",
        "",
        "--s",
        "2",
        "--what",
        "descent-words",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 4);
}

#[test]
fn verify_writes_a_report_and_exits_0() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.csv");
    let o = bin()
        .args([
            "verify",
            "--suite",
            "frobenius-equivalence",
            "--max-n",
            "5",
            "--format",
            "csv",
            "--out",
        ])
        .arg(&out)
        .env("SPRINGER_LAB_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("n,lambda,s,suite,verdict,detail\n"));
    assert!(text
        .lines()
        .skip(1)
        .all(|l| l.contains(",frobenius-equivalence,true,")));
}

#[test]
fn descent_basis_suite_exits_0() {
    let o = run(&[
        "verify",
        "--suite",
        "descent-basis",
        "--max-n",
        "5",
        "--out",
        "/dev/null",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
}

#[test]
fn corrupted_fixture_dry_run_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let src = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    for e in fs::read_dir(&src).unwrap() {
        let p = e.unwrap().path();
        fs::copy(&p, dir.path().join(p.file_name().unwrap())).unwrap();
    }
    let good = run(&[
        "verify",
        "--dry-run",
        "--fixtures",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(good.status.code(), Some(0));

    let target = dir.path().join("ctype_34125.json");
    let text = fs::read_to_string(&target)
        .unwrap()
        .replace("2,\n    2,\n    1", "3,\n    1,\n    1");
    fs::write(&target, text).unwrap();
    let bad = run(&[
        "verify",
        "--dry-run",
        "--fixtures",
        dir.path().to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("ctype(34125)"));
    assert!(stdout(&bad).contains("$.shape[0]"));
}

#[test]
fn budget_exits_3() {
    let o = run(&[
        "verify",
        "--suite",
        "descent-basis",
        "--max-n",
        "4",
        "--max-algebra-dim",
        "20",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn bad_thread_count_is_a_config_error() {
    let o = bin()
        .args([
            "enumerate",
            "--n",
            "1",
            "--lambda",
            "1",
            "--s",
            "1",
            "--what",
            "sigma",
        ])
        .env("SPRINGER_LAB_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
