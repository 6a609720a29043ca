//! Divide-and-conquer driver: reduce to the `⌈γ(θ−1)⌉`-core, order it by
//! degeneracy, and search one two-hop subproblem per vertex.
//!
//! Subproblem `i` is anchored at the `i`-th vertex `v_i` of the ordering and
//! only sees `v_i` and later vertices, so every QC is found under the
//! subproblem of its earliest member.

use std::time::Instant;

use rayon::prelude::*;

use crate::branch::Branch;
use crate::branching::Strategy;
use crate::enumerate::{search, NoObserver, QcSink, RunStats, SearchObserver};
use crate::graph::{degeneracy_ordering_within, k_core, two_hop_set_where, Graph, VertexId};
use crate::qc::QcParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DcConfig {
    /// Rounds of one-hop and two-hop pruning per subproblem, at least 1.
    pub max_round: usize,
    pub two_hop: bool,
    pub strategy: Strategy,
    /// Worker threads; 1 runs inline.
    pub jobs: usize,
}

impl Default for DcConfig {
    fn default() -> Self {
        DcConfig {
            max_round: 2,
            two_hop: true,
            strategy: Strategy::Hybrid,
            jobs: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subproblem {
    pub anchor: VertexId,
    /// Ascending; always contains the anchor.
    pub vertices: Vec<VertexId>,
}

impl Subproblem {
    fn contains(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    fn retain(&mut self, drop: &[VertexId]) -> usize {
        if !drop.is_empty() {
            self.vertices.retain(|v| drop.binary_search(v).is_err());
        }
        drop.len()
    }
}

/// Common-neighbour threshold `θ − τ(θ) − τ(θ+1)` for members adjacent to
/// the anchor; non-adjacent members need two more.
pub fn two_hop_threshold(params: &QcParams) -> i64 {
    let theta = params.theta();
    theta as i64 - params.tau_of_size(theta) - params.tau_of_size(theta + 1)
}

/// Drops non-anchor members with fewer than `⌈γ(θ−1)⌉` neighbours inside the
/// subproblem. Returns the number removed.
pub fn one_hop_prune(g: &Graph, sub: &mut Subproblem, params: &QcParams) -> usize {
    let need = params.min_degree(params.theta());
    let drop: Vec<VertexId> = sub
        .vertices
        .iter()
        .copied()
        .filter(|&u| u != sub.anchor)
        .filter(|&u| g.neighbors(u).iter().filter(|&&w| sub.contains(w)).count() < need)
        .collect();
    sub.retain(&drop)
}

/// Drops non-anchor members sharing too few neighbours with the anchor
/// inside the subproblem. Returns the number removed.
pub fn two_hop_prune(g: &Graph, sub: &mut Subproblem, params: &QcParams) -> usize {
    let f = two_hop_threshold(params);
    let anchor_nbrs: Vec<VertexId> = g
        .neighbors(sub.anchor)
        .iter()
        .copied()
        .filter(|&w| sub.contains(w))
        .collect();
    let drop: Vec<VertexId> = sub
        .vertices
        .iter()
        .copied()
        .filter(|&u| u != sub.anchor)
        .filter(|&u| {
            let common = g
                .neighbors(u)
                .iter()
                .filter(|w| anchor_nbrs.binary_search(w).is_ok())
                .count() as i64;
            let adjacent = anchor_nbrs.binary_search(&u).is_ok();
            common < if adjacent { f } else { f + 2 }
        })
        .collect();
    sub.retain(&drop)
}

/// The core and its degeneracy ordering.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub order: Vec<VertexId>,
    pub omega: usize,
    /// 1-based position in `order`, 0 outside the core.
    rank: Vec<u32>,
}

impl Decomposition {
    pub fn new(g: &Graph, params: &QcParams) -> Self {
        let core = k_core(g, params.min_degree(params.theta()));
        let deg = degeneracy_ordering_within(g, &core);
        let mut rank = vec![0u32; g.n()];
        for (i, &v) in deg.order.iter().enumerate() {
            rank[v as usize] = i as u32 + 1;
        }
        Decomposition {
            order: deg.order,
            omega: deg.omega,
            rank,
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Two-hop neighbourhood of the `i`-th vertex over later core vertices,
    /// before pruning.
    pub fn raw_subproblem(&self, g: &Graph, i: usize) -> Subproblem {
        let anchor = self.order[i];
        let r = self.rank[anchor as usize];
        Subproblem {
            anchor,
            vertices: two_hop_set_where(g, anchor, |u| self.rank[u as usize] >= r),
        }
    }

    /// Subproblem `i` after the pruning rounds.
    pub fn subproblem(&self, g: &Graph, i: usize, params: &QcParams, cfg: &DcConfig) -> Subproblem {
        let mut sub = self.raw_subproblem(g, i);
        for _ in 0..cfg.max_round.max(1) {
            let mut removed = one_hop_prune(g, &mut sub, params);
            if cfg.two_hop {
                removed += two_hop_prune(g, &mut sub, params);
            }
            if removed == 0 {
                break;
            }
        }
        sub
    }

    /// Earlier core vertices adjacent to some member of `sub`, ascending.
    pub fn excluded_prefix(&self, g: &Graph, sub: &Subproblem) -> Vec<VertexId> {
        let r = self.rank[sub.anchor as usize];
        let mut d: Vec<VertexId> = sub
            .vertices
            .iter()
            .flat_map(|&u| g.neighbors(u).iter().copied())
            .filter(|&w| {
                let rw = self.rank[w as usize];
                rw != 0 && rw < r
            })
            .collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    #[allow(clippy::too_many_arguments)]
    fn solve<O: SearchObserver>(
        &self,
        g: &Graph,
        i: usize,
        params: &QcParams,
        cfg: &DcConfig,
        br: &mut Branch,
        sink: &mut QcSink,
        stats: &mut RunStats,
        obs: &mut O,
    ) {
        let sub = self.subproblem(g, i, params, cfg);
        obs.on_subproblem(sub.anchor);
        let c: Vec<VertexId> = sub
            .vertices
            .iter()
            .copied()
            .filter(|&v| v != sub.anchor)
            .collect();
        let d = self.excluded_prefix(g, &sub);
        br.init(&[sub.anchor], &c, &d);
        search(br, params, cfg.strategy, sink, stats, obs);
    }
}

/// Full divide-and-conquer enumeration. Output order and counters are the
/// same for every `cfg.jobs`.
pub fn dc_fastqc(g: &Graph, params: &QcParams, cfg: &DcConfig) -> (QcSink, RunStats) {
    if cfg.jobs <= 1 {
        return dc_fastqc_observed(g, params, cfg, &mut NoObserver);
    }
    let start = Instant::now();
    let dec = Decomposition::new(g, params);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .expect("failed to start worker pool");
    let parts: Vec<(QcSink, RunStats)> = pool.install(|| {
        (0..dec.len())
            .into_par_iter()
            .map_init(
                || Branch::new(g),
                |br, i| {
                    let mut sink = QcSink::new();
                    let mut stats = RunStats::default();
                    dec.solve(
                        g,
                        i,
                        params,
                        cfg,
                        br,
                        &mut sink,
                        &mut stats,
                        &mut NoObserver,
                    );
                    (sink, stats)
                },
            )
            .collect()
    });
    let mut sink = QcSink::new();
    let mut stats = RunStats::default();
    for (s, st) in parts {
        sink.extend(s);
        stats.merge(&st);
    }
    stats.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    (sink, stats)
}

/// Single-threaded run reporting to `obs`; `on_subproblem` fires before
/// each subproblem's search.
pub fn dc_fastqc_observed<O: SearchObserver>(
    g: &Graph,
    params: &QcParams,
    cfg: &DcConfig,
    obs: &mut O,
) -> (QcSink, RunStats) {
    let start = Instant::now();
    let dec = Decomposition::new(g, params);
    let mut sink = QcSink::new();
    let mut stats = RunStats::default();
    let mut br = Branch::new(g);
    for i in 0..dec.len() {
        dec.solve(g, i, params, cfg, &mut br, &mut sink, &mut stats, obs);
    }
    stats.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    (sink, stats)
}
