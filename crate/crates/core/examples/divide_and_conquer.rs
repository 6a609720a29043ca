//! Per-subproblem sizes of the degeneracy decomposition, and the effect of
//! one-hop/two-hop pruning rounds on them.

use mqce::dc::{dc_fastqc, DcConfig, Decomposition};
use mqce::generator::{gen_er, GenSpec};
use mqce::QcParams;

fn main() -> mqce::Result<()> {
    let g = gen_er(&GenSpec::new(120, 1000, 3))?;
    let params = QcParams::parse("0.8", 5)?;
    let dec = Decomposition::new(&g, &params);
    println!(
        "core vertices {} of {}, degeneracy {}",
        dec.len(),
        g.n(),
        dec.omega
    );

    for rounds in [1, 2, 4] {
        for two_hop in [false, true] {
            let cfg = DcConfig {
                max_round: rounds,
                two_hop,
                ..Default::default()
            };
            let (raw, kept): (usize, usize) = (0..dec.len())
                .map(|i| {
                    (
                        dec.raw_subproblem(&g, i).vertices.len(),
                        dec.subproblem(&g, i, &params, &cfg).vertices.len(),
                    )
                })
                .fold((0, 0), |(a, b), (x, y)| (a + x, b + y));
            let (sink, stats) = dc_fastqc(&g, &params, &cfg);
            println!(
                "rounds {rounds} two-hop {two_hop:<5}: subproblem vertices {raw} -> {kept}, branches {}, emitted {}",
                stats.branches_created,
                sink.len()
            );
        }
    }

    let serial = dc_fastqc(&g, &params, &DcConfig::default());
    let parallel = dc_fastqc(
        &g,
        &params,
        &DcConfig {
            jobs: 4,
            ..Default::default()
        },
    );
    assert_eq!(serial.0.sets(), parallel.0.sets());
    println!(
        "4 workers: {:.2} ms vs {:.2} ms serial",
        parallel.1.wall_time_ms, serial.1.wall_time_ms
    );
    Ok(())
}
