//! Verdict aggregation, run manifests, CSV/JSON emission and golden fixtures.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::delta::{
    boosted_cocharge, enumerate_battery, enumerate_d_nls, enumerate_sigma, BatteryTableau, Params,
    SigmaPair,
};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::{garnir_ext, graded_quotient_hilbert, polarization, rat_from, Polynomial};
use crate::specht::{filling_monomial, higher_specht};
use crate::symfunc::{frob_battery, frob_rnk, frob_sigma, frob_ungraded, FrobeniusJson};
use crate::tableau::Tableau;
use crate::word::{cocharge_word, ctype, Permutation};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// One pass/fail outcome of one check on one parameter triple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub suite: String,
    pub check: String,
    pub n: usize,
    pub lambda: Partition,
    pub s: usize,
    pub verdict: bool,
    /// Evidence-only checks (open conjectures) do not affect the exit status.
    pub required: bool,
    pub detail: String,
}

impl VerdictRecord {
    pub fn new(
        suite: &str,
        check: &str,
        p: &Params,
        verdict: bool,
        detail: impl Into<String>,
    ) -> Self {
        VerdictRecord {
            suite: suite.to_string(),
            check: check.to_string(),
            n: p.n,
            lambda: p.lambda.clone(),
            s: p.s,
            verdict,
            required: true,
            detail: detail.into(),
        }
    }

    pub fn evidence(mut self) -> Self {
        self.required = false;
        self
    }

    fn key(&self) -> (&str, usize, &Partition, usize, &str) {
        (&self.suite, self.n, &self.lambda, self.s, &self.check)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridBounds {
    pub max_n: usize,
    pub max_s: usize,
    pub max_algebra_dim: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub passed: usize,
    pub failed: usize,
    pub evidence_failed: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub all_required_passed: bool,
    pub suites: BTreeMap<String, SuiteSummary>,
}

/// Everything needed to reproduce and audit a verification run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    pub version: String,
    pub grid: GridBounds,
    pub suites: Vec<String>,
    pub verdicts: Vec<VerdictRecord>,
    pub summary: Summary,
    /// Per-suite wall times; left out unless asked for so that reruns stay
    /// byte-identical.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<BTreeMap<String, u64>>,
}

impl RunManifest {
    pub fn new(grid: GridBounds, suites: &[&str]) -> Self {
        let mut suites: Vec<String> = suites.iter().map(|s| s.to_string()).collect();
        suites.sort();
        suites.dedup();
        RunManifest {
            version: VERSION.to_string(),
            grid,
            suites,
            summary: summarize(&[]),
            ..Default::default()
        }
    }

    /// Adds records in any arrival order; ordering is imposed here.
    pub fn extend(&mut self, records: impl IntoIterator<Item = VerdictRecord>) {
        self.verdicts.extend(records);
        self.verdicts.sort_by(|a, b| a.key().cmp(&b.key()));
        self.summary = summarize(&self.verdicts);
    }

    pub fn record_time(&mut self, suite: &str, ms: u64) {
        self.wall_ms
            .get_or_insert_with(BTreeMap::new)
            .insert(suite.to_string(), ms);
    }

    pub fn passed(&self) -> bool {
        self.summary.all_required_passed
    }

    /// Every record belongs to a declared suite and no check is reported
    /// twice for the same triple.
    pub fn validate(&self) -> Result<()> {
        for r in &self.verdicts {
            if !self.suites.contains(&r.suite) {
                return Err(Error::Verification(format!(
                    "record for undeclared suite {}",
                    r.suite
                )));
            }
        }
        for w in self.verdicts.windows(2) {
            if w[0].key() == w[1].key() {
                return Err(Error::Verification(format!(
                    "duplicate record {} {} n={} λ={} s={}",
                    w[0].suite, w[0].check, w[0].n, w[0].lambda, w[0].s
                )));
            }
        }
        Ok(())
    }
}

fn summarize(records: &[VerdictRecord]) -> Summary {
    let mut out = Summary {
        total: records.len(),
        all_required_passed: true,
        ..Default::default()
    };
    for r in records {
        let s = out.suites.entry(r.suite.clone()).or_default();
        if r.verdict {
            out.passed += 1;
            s.passed += 1;
        } else if r.required {
            out.failed += 1;
            s.failed += 1;
            out.all_required_passed = false;
        } else {
            out.failed += 1;
            s.evidence_failed += 1;
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub fn render_json(m: &RunManifest) -> Result<String> {
    let mut out = serde_json::to_string_pretty(m)?;
    out.push('\n');
    Ok(out)
}

/// One row per verdict: `n, lambda, s, suite, verdict, detail`. The check
/// name leads the detail column.
pub fn render_csv(m: &RunManifest) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Error::InvalidParameters(format!("csv: {e}"));
    w.write_record(["n", "lambda", "s", "suite", "verdict", "detail"])
        .map_err(csv_err)?;
    for r in &m.verdicts {
        let lambda = r
            .lambda
            .parts()
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let check = if r.required {
            r.check.clone()
        } else {
            format!("{} (evidence)", r.check)
        };
        w.write_record([
            r.n.to_string(),
            lambda,
            r.s.to_string(),
            r.suite.clone(),
            r.verdict.to_string(),
            format!("{check}: {}", r.detail),
        ])
        .map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn render(m: &RunManifest, format: Format) -> Result<String> {
    match format {
        Format::Json => render_json(m),
        Format::Csv => render_csv(m),
    }
}

/// Validates the manifest and writes it to `path`.
pub fn emit_report(m: &RunManifest, format: Format, path: &Path) -> Result<()> {
    m.validate()?;
    fs::write(path, render(m, format)?)?;
    Ok(())
}

/// A stored worked example. Each variant carries its inputs and the
/// expected outputs; [`Fixture::evaluate`] recomputes the outputs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Fixture {
    Frobenius {
        #[serde(flatten)]
        expansion: FrobeniusJson,
    },
    DescentWords {
        n: usize,
        lambda: Partition,
        s: usize,
        words: Vec<String>,
    },
    Sigma {
        n: usize,
        lambda: Partition,
        s: usize,
        pairs: Vec<SigmaPair>,
    },
    Battery {
        n: usize,
        lambda: Partition,
        s: usize,
        tableaux: Vec<BatteryTableau>,
    },
    CochargeWord {
        word: String,
        cocharge: String,
    },
    Ctype {
        word: String,
        shape: Partition,
    },
    BoostedCocharge {
        word: String,
        mu: Partition,
        k: u32,
        boosted: Vec<u32>,
    },
    Hilbert {
        n: usize,
        lambda: Partition,
        s: usize,
        coeffs: Vec<i64>,
    },
    Polarization {
        f: Vec<u32>,
        g: Vec<u32>,
        result: Polynomial,
    },
    Garnir {
        n: usize,
        s: usize,
        rows: Vec<Vec<u32>>,
        poly: Polynomial,
    },
    FillingMonomial {
        labels: Vec<Vec<u32>>,
        filling: Vec<Vec<u32>>,
        exps: Vec<u32>,
    },
    HigherSpecht {
        s_rows: Vec<Vec<u32>>,
        t_rows: Vec<Vec<u32>>,
        poly: Polynomial,
    },
}

fn params(n: usize, lambda: &Partition, s: usize) -> Result<Params> {
    Params::new(n, lambda.clone(), s)
}

fn digits(w: &[u32]) -> String {
    w.iter().map(|d| d.to_string()).collect()
}

impl Fixture {
    pub fn kind(&self) -> &'static str {
        match self {
            Fixture::Frobenius { .. } => "frobenius",
            Fixture::DescentWords { .. } => "descent_words",
            Fixture::Sigma { .. } => "sigma",
            Fixture::Battery { .. } => "battery",
            Fixture::CochargeWord { .. } => "cocharge_word",
            Fixture::Ctype { .. } => "ctype",
            Fixture::BoostedCocharge { .. } => "boosted_cocharge",
            Fixture::Hilbert { .. } => "hilbert",
            Fixture::Polarization { .. } => "polarization",
            Fixture::Garnir { .. } => "garnir",
            Fixture::FillingMonomial { .. } => "filling_monomial",
            Fixture::HigherSpecht { .. } => "higher_specht",
        }
    }

    /// The triple a fixture is about, when it has one.
    pub fn params(&self) -> Option<(usize, Partition, usize)> {
        match self {
            Fixture::Frobenius { expansion: e } => Some((e.n, e.lambda.clone(), e.s)),
            Fixture::DescentWords { n, lambda, s, .. }
            | Fixture::Sigma { n, lambda, s, .. }
            | Fixture::Battery { n, lambda, s, .. }
            | Fixture::Hilbert { n, lambda, s, .. } => Some((*n, lambda.clone(), *s)),
            _ => None,
        }
    }

    /// Set-valued outputs sorted, so that stored order does not matter.
    pub fn canonical(mut self) -> Fixture {
        match &mut self {
            Fixture::DescentWords { words, .. } => words.sort(),
            Fixture::Sigma { pairs, .. } => pairs.sort(),
            Fixture::Battery { tableaux, .. } => tableaux.sort(),
            _ => {}
        }
        self
    }

    /// Same inputs, outputs recomputed from scratch.
    pub fn evaluate(&self) -> Result<Fixture> {
        Ok(match self {
            Fixture::Frobenius { expansion: e } => {
                let p = params(e.n, &e.lambda, e.s)?;
                let f = match e.method.as_str() {
                    "sigma" => frob_sigma(&p),
                    "battery" => frob_battery(&p)?,
                    "ungraded" => frob_ungraded(&p),
                    "rnk" => frob_rnk(p.n, p.k()),
                    m => return Err(Error::InvalidParameters(format!("unknown method {m}"))),
                };
                Fixture::Frobenius {
                    expansion: FrobeniusJson::new(&p, &e.method, &f),
                }
            }
            Fixture::DescentWords { n, lambda, s, .. } => Fixture::DescentWords {
                n: *n,
                lambda: lambda.clone(),
                s: *s,
                words: enumerate_d_nls(&params(*n, lambda, *s)?)
                    .iter()
                    .map(|w| digits(w))
                    .collect(),
            },
            Fixture::Sigma { n, lambda, s, .. } => Fixture::Sigma {
                n: *n,
                lambda: lambda.clone(),
                s: *s,
                pairs: enumerate_sigma(&params(*n, lambda, *s)?),
            },
            Fixture::Battery { n, lambda, s, .. } => Fixture::Battery {
                n: *n,
                lambda: lambda.clone(),
                s: *s,
                tableaux: enumerate_battery(&params(*n, lambda, *s)?),
            },
            Fixture::CochargeWord { word, .. } => Fixture::CochargeWord {
                word: word.clone(),
                cocharge: digits(&cocharge_word(&Permutation::from_digits(word)?)),
            },
            Fixture::Ctype { word, .. } => Fixture::Ctype {
                word: word.clone(),
                shape: ctype(&Permutation::from_digits(word)?).0,
            },
            Fixture::BoostedCocharge { word, mu, k, .. } => Fixture::BoostedCocharge {
                word: word.clone(),
                mu: mu.clone(),
                k: *k,
                boosted: boosted_cocharge(&Permutation::from_digits(word)?, mu, *k),
            },
            Fixture::Hilbert { n, lambda, s, .. } => Fixture::Hilbert {
                n: *n,
                lambda: lambda.clone(),
                s: *s,
                coeffs: graded_quotient_hilbert(&params(*n, lambda, *s)?)?
                    .coeffs()
                    .to_vec(),
            },
            Fixture::Polarization { f, g, .. } => {
                if f.len() != g.len() {
                    return Err(Error::SizeMismatch {
                        left: f.len(),
                        right: g.len(),
                    });
                }
                let mono = |e: &[u32]| Polynomial::monomial(e.to_vec(), rat_from(1));
                Fixture::Polarization {
                    f: f.clone(),
                    g: g.clone(),
                    result: polarization(&mono(f), &mono(g)),
                }
            }
            Fixture::Garnir { n, s, rows, .. } => Fixture::Garnir {
                n: *n,
                s: *s,
                rows: rows.clone(),
                poly: garnir_ext(&Tableau::from_rows(rows.clone())?, *n, *s)?,
            },
            Fixture::FillingMonomial {
                labels, filling, ..
            } => Fixture::FillingMonomial {
                labels: labels.clone(),
                filling: filling.clone(),
                exps: filling_monomial(
                    &Tableau::from_rows(labels.clone())?,
                    &Tableau::from_rows(filling.clone())?,
                )?,
            },
            Fixture::HigherSpecht { s_rows, t_rows, .. } => Fixture::HigherSpecht {
                s_rows: s_rows.clone(),
                t_rows: t_rows.clone(),
                poly: higher_specht(
                    &Tableau::from_rows(s_rows.clone())?,
                    &Tableau::from_rows(t_rows.clone())?,
                )?
                .poly,
            },
        })
    }
}

/// A fixture file: a name, a free-text note and the tagged payload.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FixtureFile {
    pub name: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
    #[serde(flatten)]
    pub fixture: Fixture,
}

/// A single difference between stored and recomputed JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiffEntry {
    pub path: String,
    pub expected: Option<Value>,
    pub actual: Option<Value>,
}

impl fmt::Display for DiffEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &Option<Value>| v.as_ref().map_or("<missing>".to_string(), Value::to_string);
        write!(
            f,
            "{}: expected {}, got {}",
            self.path,
            show(&self.expected),
            show(&self.actual)
        )
    }
}

/// Leaf-level differences between two JSON values, paths in `$.a[0].b` form.
pub fn json_diff(expected: &Value, actual: &Value) -> Vec<DiffEntry> {
    let mut out = Vec::new();
    diff_into("$", Some(expected), Some(actual), &mut out);
    out
}

fn diff_into(path: &str, e: Option<&Value>, a: Option<&Value>, out: &mut Vec<DiffEntry>) {
    match (e, a) {
        (Some(Value::Object(x)), Some(Value::Object(y))) => {
            let mut keys: Vec<&String> = x.keys().chain(y.keys()).collect();
            keys.sort();
            keys.dedup();
            for k in keys {
                diff_into(&format!("{path}.{k}"), x.get(k), y.get(k), out);
            }
        }
        (Some(Value::Array(x)), Some(Value::Array(y))) => {
            for i in 0..x.len().max(y.len()) {
                diff_into(&format!("{path}[{i}]"), x.get(i), y.get(i), out);
            }
        }
        (e, a) if e != a => out.push(DiffEntry {
            path: path.to_string(),
            expected: e.cloned(),
            actual: a.cloned(),
        }),
        _ => {}
    }
}

/// Outcome of re-evaluating one fixture.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureOutcome {
    pub name: String,
    pub kind: String,
    pub diffs: Vec<DiffEntry>,
}

impl FixtureOutcome {
    pub fn passed(&self) -> bool {
        self.diffs.is_empty()
    }
}

pub fn check_fixture(file: &FixtureFile) -> Result<FixtureOutcome> {
    let expected = serde_json::to_value(file.fixture.clone().canonical())?;
    let actual = serde_json::to_value(file.fixture.evaluate()?.canonical())?;
    Ok(FixtureOutcome {
        name: file.name.clone(),
        kind: file.fixture.kind().to_string(),
        diffs: json_diff(&expected, &actual),
    })
}

/// Every `*.json` file in `dir`, sorted by file name.
pub fn load_fixtures(dir: &Path) -> Result<Vec<(PathBuf, FixtureFile)>> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)?
        .map(|e| e.map(|e| e.path()))
        .collect::<std::io::Result<_>>()?;
    paths.retain(|p| p.extension().is_some_and(|e| e == "json"));
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let text = fs::read_to_string(&p)?;
            let f: FixtureFile = serde_json::from_str(&text)?;
            Ok((p, f))
        })
        .collect()
}

/// Verdict records for a fixture directory: one per file.
pub fn fixture_records(dir: &Path) -> Result<Vec<VerdictRecord>> {
    let mut out = Vec::new();
    for (_, file) in load_fixtures(dir)? {
        let (n, lambda, s) = file.fixture.params().unwrap_or_default();
        let (verdict, detail) = match check_fixture(&file) {
            Ok(o) if o.passed() => (true, "match".to_string()),
            Ok(o) => (
                false,
                o.diffs
                    .iter()
                    .take(5)
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join("; "),
            ),
            Err(e) => (false, format!("error: {e}")),
        };
        out.push(VerdictRecord {
            suite: "fixtures".to_string(),
            check: file.name.clone(),
            n,
            lambda,
            s,
            verdict,
            required: true,
            detail,
        });
    }
    Ok(out)
}

/// Canonical on-disk text of a Frobenius character.
pub fn frobenius_json_text(f: &FrobeniusJson) -> Result<String> {
    let mut out = serde_json::to_string_pretty(f)?;
    out.push('\n');
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn lam(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn record(suite: &str, n: usize, verdict: bool) -> VerdictRecord {
        let p = Params::new(n, lam(&[1]), 2).unwrap();
        VerdictRecord::new(suite, "x", &p, verdict, "d")
    }

    #[test]
    fn empty_grid_gives_header_only_csv() {
        let m = RunManifest::new(GridBounds::default(), &["descent-basis"]);
        assert_eq!(render_csv(&m).unwrap(), "n,lambda,s,suite,verdict,detail\n");
        assert!(m.passed());
    }

    #[test]
    fn ordering_ignores_arrival() {
        let mut a = RunManifest::new(GridBounds::default(), &["b", "a"]);
        a.extend([
            record("b", 2, true),
            record("a", 3, true),
            record("a", 1, false),
        ]);
        let mut b = RunManifest::new(GridBounds::default(), &["a", "b"]);
        b.extend([record("a", 1, false)]);
        b.extend([record("b", 2, true), record("a", 3, true)]);
        assert_eq!(render_json(&a).unwrap(), render_json(&b).unwrap());
        assert_eq!(render_csv(&a).unwrap(), render_csv(&b).unwrap());
        assert!(!a.passed());
        assert_eq!(a.summary.suites["a"].failed, 1);
    }

    #[test]
    fn evidence_failures_do_not_fail_the_run() {
        let mut m = RunManifest::new(GridBounds::default(), &["a"]);
        m.extend([record("a", 1, false).evidence()]);
        assert!(m.passed());
        assert!(render_csv(&m).unwrap().contains("false,x (evidence): d"));
    }

    #[test]
    fn validation_rejects_duplicates_and_unknown_suites() {
        let mut m = RunManifest::new(GridBounds::default(), &["a"]);
        m.extend([record("a", 1, true), record("a", 1, true)]);
        assert!(m.validate().is_err());
        let mut m = RunManifest::new(GridBounds::default(), &["a"]);
        m.extend([record("z", 1, true)]);
        assert!(m.validate().is_err());
    }

    #[test]
    fn csv_quotes_multi_part_lambda() {
        let mut m = RunManifest::new(GridBounds::default(), &["a"]);
        let p = Params::new(4, lam(&[2, 1]), 3).unwrap();
        m.extend([VerdictRecord::new("a", "c", &p, true, "ok")]);
        assert_eq!(
            render_csv(&m).unwrap(),
            "n,lambda,s,suite,verdict,detail\n4,\"2,1\",3,a,true,c: ok\n"
        );
    }

    #[test]
    fn timings_only_when_recorded() {
        let mut m = RunManifest::new(GridBounds::default(), &["a"]);
        assert!(!render_json(&m).unwrap().contains("wall_ms"));
        m.record_time("a", 5);
        assert!(render_json(&m).unwrap().contains("wall_ms"));
    }

    #[test]
    fn diff_reports_leaf_paths() {
        let e = json!({"a": [1, 2, 3], "b": {"c": true}});
        let a = json!({"a": [1, 5], "b": {"c": true, "d": 0}});
        let d = json_diff(&e, &a);
        let paths: Vec<&str> = d.iter().map(|x| x.path.as_str()).collect();
        assert_eq!(paths, vec!["$.a[1]", "$.a[2]", "$.b.d"]);
        assert_eq!(d[1].actual, None);
        assert!(json_diff(&e, &e).is_empty());
    }

    #[test]
    fn fixture_round_trip_and_corruption() {
        let file = FixtureFile {
            name: "cc".into(),
            note: String::new(),
            fixture: Fixture::CochargeWord {
                word: "34125".into(),
                cocharge: "11001".into(),
            },
        };
        let text = serde_json::to_string(&file).unwrap();
        assert!(text.contains("\"kind\":\"cocharge_word\""));
        let back: FixtureFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back, file);
        assert!(check_fixture(&file).unwrap().passed());

        let bad = FixtureFile {
            fixture: Fixture::CochargeWord {
                word: "34125".into(),
                cocharge: "11002".into(),
            },
            ..file
        };
        let o = check_fixture(&bad).unwrap();
        assert_eq!(o.diffs.len(), 1);
        assert_eq!(o.diffs[0].path, "$.cocharge");
    }

    #[test]
    fn frobenius_fixture_flattens() {
        let p = Params::new(2, lam(&[1]), 2).unwrap();
        let f = FrobeniusJson::new(&p, "sigma", &frob_sigma(&p));
        let file = FixtureFile {
            name: "f".into(),
            note: String::new(),
            fixture: Fixture::Frobenius { expansion: f },
        };
        let v = serde_json::to_value(&file).unwrap();
        assert_eq!(v["kind"], "frobenius");
        assert_eq!(v["method"], "sigma");
        assert!(check_fixture(&file).unwrap().passed());
    }
}
