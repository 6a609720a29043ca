//! Compare every algorithm with the brute-force oracle on random small graphs.

use mqce::generator::{gen_er, GenSpec};
use mqce::oracle::all_mqcs;
use mqce::run::enumerate;
use mqce::{Algo, QcParams, RunConfig, Strategy};

fn main() -> mqce::Result<()> {
    let configs = [
        (Algo::SeBaseline, Strategy::Se),
        (Algo::Fastqc, Strategy::Sym),
        (Algo::Fastqc, Strategy::Hybrid),
        (Algo::DcFastqc, Strategy::Hybrid),
    ];
    let mut checked = 0;
    for seed in 0..20 {
        let g = gen_er(&GenSpec::new(14, 30 + seed, seed))?;
        for gamma in ["0.5", "0.75", "1"] {
            let params = QcParams::parse(gamma, 3)?;
            let expect = all_mqcs(&g, &params)?;
            for (algo, strategy) in configs {
                let cfg = RunConfig {
                    algo,
                    strategy,
                    ..Default::default()
                };
                assert_eq!(
                    enumerate(&g, &params, &cfg).0,
                    expect,
                    "seed {seed} {params} {algo}"
                );
                checked += 1;
            }
        }
    }
    println!("{checked} runs agree with the oracle");
    Ok(())
}
