mod common;

use common::{is_subset, naive_is_qc, params, small_er_corpus, subsets, GAMMAS, THETAS};
use mqce::generator::{gen_er, GenSpec};
use mqce::oracle::{all_mqcs, all_qcs};
use mqce::run::{enumerate, run_algorithm};
use mqce::{Algo, Graph, RunConfig, Strategy, VertexId};

/// Maximal QCs by a pairwise scan over every subset, sharing no code with
/// the oracle's bitmask tables.
fn pairwise_mqcs(g: &Graph, gamma: (i64, i64), theta: usize) -> Vec<Vec<VertexId>> {
    let all: Vec<VertexId> = g.vertices().collect();
    let qcs: Vec<Vec<VertexId>> = subsets(&all)
        .filter(|h| naive_is_qc(g, h, gamma.0, gamma.1))
        .collect();
    let mut out: Vec<Vec<VertexId>> = qcs
        .iter()
        .filter(|h| h.len() >= theta)
        .filter(|h| !qcs.iter().any(|o| o.len() > h.len() && is_subset(h, o)))
        .cloned()
        .collect();
    out.sort();
    out
}

#[test]
fn frozen_oracle_fixture() {
    let g = gen_er(&GenSpec::new(10, 25, 1)).unwrap();
    let got = all_mqcs(&g, &params("0.6", 3)).unwrap();
    assert_eq!(got, pairwise_mqcs(&g, (3, 5), 3));
    let frozen: Vec<Vec<VertexId>> = FIXTURE.iter().map(|s| s.to_vec()).collect();
    assert_eq!(got, frozen);
}

/// ER(n = 10, m = 25, seed = 1) at γ = 0.6, θ = 3.
const FIXTURE: &[&[VertexId]] = &[
    &[0, 1, 4, 6],
    &[0, 1, 5, 6],
    &[0, 1, 6, 8],
    &[0, 1, 6, 9],
    &[1, 3, 4, 5, 6, 7, 8],
    &[1, 3, 4, 5, 6, 7, 9],
    &[1, 3, 4, 6, 7, 8, 9],
    &[1, 3, 5, 6, 7, 8, 9],
];

#[test]
fn oracle_agrees_with_pairwise_scan() {
    for (name, g) in small_er_corpus(1).into_iter().filter(|(_, g)| g.n() <= 11) {
        for (gamma, frac) in [("0.5", (1, 2)), ("0.7", (7, 10)), ("1.0", (1, 1))] {
            let p = params(gamma, 3);
            assert_eq!(
                all_mqcs(&g, &p).unwrap(),
                pairwise_mqcs(&g, frac, 3),
                "{name} {gamma}"
            );
        }
    }
}

#[test]
fn mqcs_are_qcs_and_antichain() {
    for (_, g) in small_er_corpus(1).into_iter().take(12) {
        let p = params("0.6", 3);
        let qcs = all_qcs(&g, &p).unwrap();
        let mqcs = all_mqcs(&g, &p).unwrap();
        for m in &mqcs {
            assert!(qcs.contains(m));
            assert!(!mqcs.iter().any(|o| o != m && is_subset(m, o)));
        }
    }
}

#[test]
fn fastqc_matches_oracle_on_er12() {
    let g = gen_er(&GenSpec::new(12, 40, 3)).unwrap();
    let p = params("0.6", 4);
    let expect = all_mqcs(&g, &p).unwrap();
    for strategy in [Strategy::Hybrid, Strategy::Sym] {
        let cfg = RunConfig {
            algo: Algo::Fastqc,
            strategy,
            ..Default::default()
        };
        assert_eq!(enumerate(&g, &p, &cfg).0, expect, "{strategy:?}");
    }
}

#[test]
fn every_algorithm_matches_oracle() {
    let configs = [
        (Algo::SeBaseline, Strategy::Se, true),
        (Algo::Fastqc, Strategy::Sym, true),
        (Algo::Fastqc, Strategy::Hybrid, true),
        (Algo::DcFastqc, Strategy::Hybrid, true),
        (Algo::DcFastqc, Strategy::Sym, true),
        (Algo::DcFastqc, Strategy::Se, true),
        (Algo::DcFastqc, Strategy::Hybrid, false),
    ];
    for (name, g) in small_er_corpus(1) {
        for (gi, gamma) in GAMMAS.iter().enumerate() {
            let theta = THETAS[(gi + g.n()) % THETAS.len()];
            let p = params(gamma, theta);
            let expect = all_mqcs(&g, &p).unwrap();
            for &(algo, strategy, two_hop) in &configs {
                let cfg = RunConfig {
                    algo,
                    strategy,
                    two_hop,
                    ..Default::default()
                };
                let (sink, _) = run_algorithm(&g, &p, &cfg);
                let raw = sink.canonical();
                for m in &expect {
                    assert!(
                        raw.contains(m),
                        "{name} {p} {algo:?}/{strategy:?}: missing {m:?}"
                    );
                }
                let (filtered, _) = enumerate(&g, &p, &cfg);
                assert_eq!(
                    filtered, expect,
                    "{name} {p} {algo:?}/{strategy:?}/{two_hop}"
                );
            }
        }
    }
}
