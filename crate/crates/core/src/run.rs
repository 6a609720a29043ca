//! Algorithm selection and the benchmark driver behind the `mqce` binary.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::branching::Strategy;
use crate::dc::{dc_fastqc, DcConfig};
use crate::enumerate::{enumerate_monolithic, QcSink, RunStats};
use crate::error::{Error, Result};
use crate::generator::{gen_er, GenSpec};
use crate::graph::{Graph, VertexId};
use crate::io::to_label_sets;
use crate::qc::QcParams;
use crate::settrie::filter_maximal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Algo {
    #[default]
    DcFastqc,
    Fastqc,
    SeBaseline,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::DcFastqc => "dc-fastqc",
            Algo::Fastqc => "fastqc",
            Algo::SeBaseline => "se-baseline",
        }
    }
}

impl fmt::Display for Algo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dc-fastqc" => Ok(Algo::DcFastqc),
            "fastqc" => Ok(Algo::Fastqc),
            "se-baseline" => Ok(Algo::SeBaseline),
            _ => Err(Error::InvalidParams(format!("unknown algorithm {s:?}"))),
        }
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hybrid" => Ok(Strategy::Hybrid),
            "sym" => Ok(Strategy::Sym),
            "se" => Ok(Strategy::Se),
            _ => Err(Error::InvalidParams(format!("unknown branching {s:?}"))),
        }
    }
}

/// Algorithm knobs shared by `enum`, `bench` and the examples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub algo: Algo,
    pub strategy: Strategy,
    pub max_round: usize,
    pub two_hop: bool,
    pub filter_maximal: bool,
    pub jobs: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            algo: Algo::DcFastqc,
            strategy: Strategy::Hybrid,
            max_round: 2,
            two_hop: true,
            filter_maximal: true,
            jobs: 1,
        }
    }
}

impl RunConfig {
    /// The branching actually used; the baseline always uses SE.
    pub fn effective_strategy(&self) -> Strategy {
        match self.algo {
            Algo::SeBaseline => Strategy::Se,
            _ => self.strategy,
        }
    }

    pub fn dc_config(&self) -> DcConfig {
        DcConfig {
            max_round: self.max_round,
            two_hop: self.two_hop,
            strategy: self.effective_strategy(),
            jobs: self.jobs,
        }
    }
}

/// Raw emissions of the configured algorithm (no maximality filter).
pub fn run_algorithm(g: &Graph, params: &QcParams, cfg: &RunConfig) -> (QcSink, RunStats) {
    match cfg.algo {
        Algo::DcFastqc => dc_fastqc(g, params, &cfg.dc_config()),
        Algo::Fastqc | Algo::SeBaseline => {
            enumerate_monolithic(g, params, cfg.effective_strategy())
        }
    }
}

/// Output sets by vertex id, sorted, filtered when `cfg.filter_maximal`.
pub fn enumerate(g: &Graph, params: &QcParams, cfg: &RunConfig) -> (Vec<Vec<VertexId>>, RunStats) {
    let (sink, stats) = run_algorithm(g, params, cfg);
    let sets = if cfg.filter_maximal {
        filter_maximal(sink.sets())
    } else {
        sink.canonical()
    };
    (sets, stats)
}

/// As [`enumerate`], with original labels.
pub fn enumerate_labels(
    g: &Graph,
    params: &QcParams,
    cfg: &RunConfig,
) -> (Vec<Vec<u64>>, RunStats) {
    let (sets, stats) = enumerate(g, params, cfg);
    (to_label_sets(g, &sets), stats)
}

#[derive(Clone, Debug)]
pub struct BenchCase {
    pub name: String,
    pub graph: Graph,
    pub params: QcParams,
}

/// ER cases with `n` and `m/n` drawn uniformly from the given ranges.
pub fn er_corpus(
    count: usize,
    n_range: (usize, usize),
    density_range: (f64, f64),
    params: QcParams,
    seed: u64,
) -> Result<Vec<BenchCase>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let n = rng.random_range(n_range.0..=n_range.1);
        let density = if density_range.1 > density_range.0 {
            rng.random_range(density_range.0..density_range.1)
        } else {
            density_range.0
        };
        let spec = GenSpec::new(n, 0, rng.random::<u64>());
        let m = ((n as f64 * density).round() as u64).min(spec.max_edges());
        let spec = GenSpec { m, ..spec };
        out.push(BenchCase {
            name: format!("er{i}-n{n}-m{m}"),
            graph: gen_er(&spec)?,
            params,
        });
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BenchConfig {
    pub algo: Algo,
    pub strategy: Strategy,
    pub two_hop: bool,
}

impl BenchConfig {
    pub fn label(&self) -> String {
        let mut s = format!("{}/{}", self.algo, self.strategy.name());
        if self.algo == Algo::DcFastqc && !self.two_hop {
            s.push_str("/no-two-hop");
        }
        s
    }
}

/// The monolithic and divide-and-conquer variants of every branching scheme
/// plus the two-hop ablation.
pub fn default_bench_configs() -> Vec<BenchConfig> {
    let c = |algo, strategy, two_hop| BenchConfig {
        algo,
        strategy,
        two_hop,
    };
    vec![
        c(Algo::SeBaseline, Strategy::Se, true),
        c(Algo::Fastqc, Strategy::Sym, true),
        c(Algo::Fastqc, Strategy::Hybrid, true),
        c(Algo::DcFastqc, Strategy::Se, true),
        c(Algo::DcFastqc, Strategy::Sym, true),
        c(Algo::DcFastqc, Strategy::Hybrid, true),
        c(Algo::DcFastqc, Strategy::Hybrid, false),
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub case: String,
    pub n: usize,
    pub m: usize,
    pub gamma: f64,
    pub theta: usize,
    pub algo: String,
    pub branching: String,
    pub two_hop: bool,
    pub branches_created: u64,
    pub pruned_by_condition: u64,
    pub pruned_by_t2: u64,
    pub terminal_t1: u64,
    pub refinement_passes: u64,
    pub qcs_emitted: u64,
    pub mqcs: usize,
    pub wall_time_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchSummary {
    pub config: String,
    pub cases: usize,
    pub median_branches: f64,
    pub median_wall_ms: f64,
}

#[derive(Clone, Debug, Default)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub summary: Vec<BenchSummary>,
    /// Cases whose filtered outputs differ between configurations.
    pub mismatches: Vec<String>,
}

pub fn median(values: &[f64]) -> f64 {
    if values.is_empty() {
        return f64::NAN;
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let k = v.len();
    if k % 2 == 1 {
        v[k / 2]
    } else {
        (v[k / 2 - 1] + v[k / 2]) / 2.0
    }
}

/// Runs every configuration on every case, row order case-major.
pub fn run_bench(
    cases: &[BenchCase],
    configs: &[BenchConfig],
    max_round: usize,
    jobs: usize,
) -> BenchReport {
    let mut report = BenchReport::default();
    for case in cases {
        let g = &case.graph;
        let gamma = case.params.gamma();
        let mut reference: Option<Vec<Vec<VertexId>>> = None;
        for bc in configs {
            let cfg = RunConfig {
                algo: bc.algo,
                strategy: bc.strategy,
                max_round,
                two_hop: bc.two_hop,
                filter_maximal: true,
                jobs,
            };
            let (sets, stats) = enumerate(g, &case.params, &cfg);
            match &reference {
                None => reference = Some(sets.clone()),
                Some(r) if *r != sets => {
                    report
                        .mismatches
                        .push(format!("{} {}", case.name, bc.label()))
                }
                Some(_) => {}
            }
            report.rows.push(BenchRow {
                case: case.name.clone(),
                n: g.n(),
                m: g.m(),
                gamma: *gamma.numer() as f64 / *gamma.denom() as f64,
                theta: case.params.theta(),
                algo: bc.algo.name().to_string(),
                branching: cfg.effective_strategy().name().to_string(),
                two_hop: bc.two_hop,
                branches_created: stats.branches_created,
                pruned_by_condition: stats.pruned_by_condition,
                pruned_by_t2: stats.pruned_by_t2,
                terminal_t1: stats.terminal_t1,
                refinement_passes: stats.refinement_passes,
                qcs_emitted: stats.qcs_emitted,
                mqcs: sets.len(),
                wall_time_ms: stats.wall_time_ms,
            });
        }
    }
    for (i, bc) in configs.iter().enumerate() {
        let mine: Vec<&BenchRow> = report.rows.iter().skip(i).step_by(configs.len()).collect();
        let branches: Vec<f64> = mine.iter().map(|r| r.branches_created as f64).collect();
        let walls: Vec<f64> = mine.iter().map(|r| r.wall_time_ms).collect();
        report.summary.push(BenchSummary {
            config: bc.label(),
            cases: mine.len(),
            median_branches: median(&branches),
            median_wall_ms: median(&walls),
        });
    }
    report
}

impl BenchReport {
    pub fn summary_for(&self, label: &str) -> Option<&BenchSummary> {
        self.summary.iter().find(|s| s.config == label)
    }

    /// Cases where configuration `a` created more branches than `b`.
    pub fn inversions(&self, a: &str, b: &str) -> Vec<String> {
        let count = |case: &str, label: &str| {
            self.rows
                .iter()
                .find(|r| r.case == case && row_label(r) == label)
                .map(|r| r.branches_created)
        };
        let mut cases: Vec<&str> = self.rows.iter().map(|r| r.case.as_str()).collect();
        cases.dedup();
        cases
            .into_iter()
            .filter_map(|c| match (count(c, a), count(c, b)) {
                (Some(x), Some(y)) if x > y => Some(format!("{c}: {a}={x} > {b}={y}")),
                _ => None,
            })
            .collect()
    }

    pub fn write_rows_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for r in &self.rows {
            w.serialize(r)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn write_summary_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for s in &self.summary {
            w.serialize(s)?;
        }
        w.flush()?;
        Ok(())
    }
}

fn row_label(r: &BenchRow) -> String {
    let mut s = format!("{}/{}", r.algo, r.branching);
    if r.algo == Algo::DcFastqc.name() && !r.two_hop {
        s.push_str("/no-two-hop");
    }
    s
}
