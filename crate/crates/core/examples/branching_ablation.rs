//! Branch counts of every search configuration on a small ER corpus.

use mqce::run::{default_bench_configs, er_corpus, run_bench};
use mqce::QcParams;

fn main() -> mqce::Result<()> {
    let params = QcParams::parse("0.9", 5)?;
    let cases = er_corpus(8, (40, 80), (5.0, 12.0), params, 11)?;
    let configs = default_bench_configs();
    let report = run_bench(&cases, &configs, 2, 1);

    for s in &report.summary {
        println!(
            "{:<28} median branches {:>9.1}  median ms {:>8.3}",
            s.config, s.median_branches, s.median_wall_ms
        );
    }
    for (a, b) in [
        ("dc-fastqc/hybrid", "dc-fastqc/sym"),
        ("dc-fastqc/sym", "dc-fastqc/se"),
    ] {
        let inv = report.inversions(a, b);
        println!("{a} above {b} on {} of {} graphs", inv.len(), cases.len());
    }
    assert!(report.mismatches.is_empty(), "{:?}", report.mismatches);
    Ok(())
}
