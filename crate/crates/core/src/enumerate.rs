//! Depth-first search drivers. Both return whether a QC was found anywhere
//! under the branch; a parent emits its own `S` only when no child did.
//!
//! Emissions are QCs of size at least θ that pass the one-vertex-extension
//! test. They may still contain duplicates and non-maximal sets; see
//! [`crate::settrie::filter_maximal`].

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::branch::Branch;
use crate::branching::{hybrid_se_children, se_children, select_pivot, sym_se_children, Strategy};
use crate::graph::{Graph, VertexId};
use crate::pruning::{progressive_refine_with, terminate_t2, PruneVerdict};
use crate::qc::{is_quasi_clique, QcParams};

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct RunStats {
    pub branches_created: u64,
    pub pruned_by_condition: u64,
    pub pruned_by_t2: u64,
    pub terminal_t1: u64,
    pub refinement_passes: u64,
    pub qcs_emitted: u64,
    pub wall_time_ms: f64,
}

impl RunStats {
    pub fn merge(&mut self, other: &RunStats) {
        self.branches_created += other.branches_created;
        self.pruned_by_condition += other.pruned_by_condition;
        self.pruned_by_t2 += other.pruned_by_t2;
        self.terminal_t1 += other.terminal_t1;
        self.refinement_passes += other.refinement_passes;
        self.qcs_emitted += other.qcs_emitted;
        self.wall_time_ms += other.wall_time_ms;
    }

    /// Equality of everything except wall time.
    pub fn same_counts(&self, other: &RunStats) -> bool {
        RunStats {
            wall_time_ms: 0.0,
            ..self.clone()
        } == RunStats {
            wall_time_ms: 0.0,
            ..other.clone()
        }
    }
}

/// Emitted vertex sets, each ascending, in emission order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QcSink {
    sets: Vec<Vec<VertexId>>,
}

impl QcSink {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn emit(&mut self, h: Vec<VertexId>) {
        debug_assert!(h.windows(2).all(|w| w[0] < w[1]));
        self.sets.push(h);
    }

    pub fn extend(&mut self, other: QcSink) {
        self.sets.extend(other.sets);
    }

    pub fn sets(&self) -> &[Vec<VertexId>] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn into_sets(self) -> Vec<Vec<VertexId>> {
        self.sets
    }

    /// Sorted, duplicate-free copy of the emissions.
    pub fn canonical(&self) -> Vec<Vec<VertexId>> {
        let mut out = self.sets.clone();
        out.sort();
        out.dedup();
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PruneReason {
    Condition,
    T2,
}

/// Hooks into the search, all no-ops by default. Used by instrumentation
/// tests; the branch passed in is the live state at the time of the event.
pub trait SearchObserver {
    fn on_subproblem(&mut self, _anchor: VertexId) {}
    fn on_enter(&mut self, _b: &Branch) {}
    /// Called with the Rule 1 batch before it is removed from `C`.
    fn on_rule1(&mut self, _b: &Branch, _removed: &[VertexId]) {}
    fn on_pruned(&mut self, _b: &Branch, _reason: PruneReason) {}
    fn on_emit(&mut self, _h: &[VertexId]) {}
    fn on_return(&mut self, _found: bool) {}
}

#[derive(Clone, Copy, Debug, Default)]
pub struct NoObserver;

impl SearchObserver for NoObserver {}

struct Search<'p, 'o, O: SearchObserver> {
    params: &'p QcParams,
    strategy: Strategy,
    sink: &'o mut QcSink,
    stats: &'o mut RunStats,
    obs: &'o mut O,
}

impl<O: SearchObserver> Search<'_, '_, O> {
    fn emit(&mut self, h: Vec<VertexId>, g: &Graph) {
        debug_assert!(is_quasi_clique(g, &h, self.params));
        self.obs.on_emit(&h);
        self.stats.qcs_emitted += 1;
        self.sink.emit(h);
    }

    /// Post-order step shared by both drivers: `S` itself is reported only
    /// if no child found a QC.
    fn finish(&mut self, br: &Branch, any_child: bool) -> bool {
        if any_child {
            return true;
        }
        if !br.s_is_qc(self.params) {
            return false;
        }
        if br.s().len() >= self.params.theta() && br.s_passes_maximality(self.params) {
            self.emit(br.sorted_s(), br.graph());
        }
        true
    }

    fn refine(&mut self, br: &mut Branch) -> PruneVerdict {
        self.stats.branches_created += 1;
        self.obs.on_enter(br);
        let obs = &mut *self.obs;
        let r = progressive_refine_with(br, self.params, |b, vs| obs.on_rule1(b, vs));
        self.stats.refinement_passes += r.passes;
        if r.verdict == PruneVerdict::Pruned {
            self.stats.pruned_by_condition += 1;
            self.obs.on_pruned(br, PruneReason::Condition);
        }
        r.verdict
    }

    fn t2(&mut self, br: &Branch, bound: i64) -> bool {
        let hit = terminate_t2(br, bound, self.params);
        if hit {
            self.stats.pruned_by_t2 += 1;
            self.obs.on_pruned(br, PruneReason::T2);
        }
        hit
    }

    fn fastqc_rec(&mut self, br: &mut Branch) -> bool {
        let found = match self.refine(br) {
            PruneVerdict::Pruned => false,
            PruneVerdict::TerminalQc { .. } => {
                self.stats.terminal_t1 += 1;
                if br.sc_len() >= self.params.theta() && br.sc_passes_maximality(self.params) {
                    self.emit(br.sorted_sc(), br.graph());
                }
                true
            }
            PruneVerdict::Continue { bound } => {
                if self.t2(br, bound) {
                    false
                } else {
                    let pivot = select_pivot(br, bound);
                    let plan = match self.strategy {
                        Strategy::Hybrid => {
                            hybrid_se_children(&pivot).unwrap_or_else(|| sym_se_children(&pivot))
                        }
                        _ => sym_se_children(&pivot),
                    };
                    let any = plan.explore(br, |b| self.fastqc_rec(b));
                    self.finish(br, any)
                }
            }
        };
        self.obs.on_return(found);
        found
    }

    fn se_rec(&mut self, br: &mut Branch) -> bool {
        let found = match self.refine(br) {
            PruneVerdict::Pruned => false,
            PruneVerdict::TerminalQc { bound } | PruneVerdict::Continue { bound } => {
                if br.c().is_empty() {
                    self.finish(br, false)
                } else if self.t2(br, bound) {
                    false
                } else {
                    let plan = se_children(br);
                    let any = plan.explore(br, |b| self.se_rec(b));
                    self.finish(br, any)
                }
            }
        };
        self.obs.on_return(found);
        found
    }
}

/// Runs the search selected by `strategy` from `root`, restoring `root`
/// afterwards.
pub fn search<O: SearchObserver>(
    root: &mut Branch,
    params: &QcParams,
    strategy: Strategy,
    sink: &mut QcSink,
    stats: &mut RunStats,
    obs: &mut O,
) -> bool {
    let snap = root.snapshot();
    let mut s = Search {
        params,
        strategy,
        sink,
        stats,
        obs,
    };
    let found = match strategy {
        Strategy::Se => s.se_rec(root),
        Strategy::Hybrid | Strategy::Sym => s.fastqc_rec(root),
    };
    root.rollback(snap);
    found
}

/// Pivot-based search with the hybrid or symmetric plan.
pub fn fastqc(
    root: &mut Branch,
    params: &QcParams,
    strategy: Strategy,
    sink: &mut QcSink,
    stats: &mut RunStats,
) -> bool {
    let strategy = if strategy == Strategy::Se {
        Strategy::Sym
    } else {
        strategy
    };
    search(root, params, strategy, sink, stats, &mut NoObserver)
}

/// Include-one/exclude-prefix search over ascending candidate ids.
pub fn se_baseline(
    root: &mut Branch,
    params: &QcParams,
    sink: &mut QcSink,
    stats: &mut RunStats,
) -> bool {
    search(root, params, Strategy::Se, sink, stats, &mut NoObserver)
}

/// One search over the whole graph from `(∅, V, ∅)`.
pub fn enumerate_monolithic(
    g: &Graph,
    params: &QcParams,
    strategy: Strategy,
) -> (QcSink, RunStats) {
    let start = Instant::now();
    let mut sink = QcSink::new();
    let mut stats = RunStats::default();
    let mut root = Branch::root(g);
    search(
        &mut root,
        params,
        strategy,
        &mut sink,
        &mut stats,
        &mut NoObserver,
    );
    stats.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    (sink, stats)
}
