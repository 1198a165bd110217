//! Run two verification suites on a small grid, check the golden fixtures and
//! print the CSV report.

use std::path::Path;

use springer_lab::report::{fixture_records, render, Format, GridBounds, RunManifest};
use springer_lab::suites::{run_suite, SuiteConfig, ANTISYM, FROBENIUS_EQUIVALENCE};

fn main() -> springer_lab::Result<()> {
    let cfg = SuiteConfig {
        max_n: 4,
        max_s: 2,
        ..Default::default()
    };
    let grid = GridBounds {
        max_n: cfg.max_n,
        max_s: cfg.max_s,
        max_algebra_dim: cfg.max_algebra_dim,
    };
    let mut m = RunManifest::new(grid, &[ANTISYM, FROBENIUS_EQUIVALENCE, "fixtures"]);
    for suite in [ANTISYM, FROBENIUS_EQUIVALENCE] {
        m.extend(run_suite(suite, &cfg)?);
    }
    m.extend(fixture_records(
        &Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden"),
    )?);
    print!("{}", render(&m, Format::Csv)?);
    eprintln!("{} records, passed: {}", m.summary.total, m.passed());
    Ok(())
}
