//! Size-disconnection pruning: the condition `Δ(S) ≤ τ(σ(B))`, the two
//! refinement rules, the refine/re-check loop and the two termination
//! conditions.
//!
//! Each rule computes its removal set against a fixed state and then applies
//! it as a batch, so the outcome never depends on the internal order of `C`.

use std::collections::HashMap;

use crate::branch::{Branch, Location};
use crate::graph::VertexId;
use crate::qc::QcParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PruneVerdict {
    /// No QC can lie under the branch.
    Pruned,
    /// `G[S ∪ C]` is itself a QC.
    TerminalQc { bound: i64 },
    /// Keep branching; `bound` is the final `τ(σ(B))`.
    Continue { bound: i64 },
}

impl PruneVerdict {
    pub fn bound(&self) -> Option<i64> {
        match *self {
            PruneVerdict::Pruned => None,
            PruneVerdict::TerminalQc { bound } | PruneVerdict::Continue { bound } => Some(bound),
        }
    }
}

/// Outcome of [`progressive_refine`] plus the number of check/refine passes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Refinement {
    pub verdict: PruneVerdict,
    pub passes: u64,
}

/// `Δ(S) ≤ τ(σ(B))`. Also `false` whenever `σ(B) < |S|` or `S ∪ C` is
/// empty, since no QC can lie under such a branch.
pub fn check_condition(b: &Branch, params: &QcParams) -> bool {
    if b.sc_len() == 0 {
        return false;
    }
    let sigma = b.sigma(params);
    if sigma < crate::qc::Rational::from_integer(b.s().len() as i64) {
        return false;
    }
    b.delta_s() as i64 <= params.tau(sigma)
}

/// Candidates `v` with `Δ(S ∪ {v}) > bound`, ascending.
///
/// `Δ(S ∪ {v})` is the larger of `v`'s own count `|S| + 1 − δ(v, S)` and
/// `δ̄(u, S) + [u ≁ v]` over `u ∈ S`. When `Δ(S) ≤ bound`, the second term
/// exceeds `bound` only for the members already at `bound` that miss `v`.
pub fn rule1_removals(b: &Branch, bound: i64) -> Vec<VertexId> {
    if bound < 0 || b.delta_s() as i64 > bound {
        return b.sorted_c();
    }
    let g = b.graph();
    let s_len = b.s().len() as i64;
    let saturated: Vec<VertexId> = b
        .s()
        .iter()
        .copied()
        .filter(|&u| b.non_nbr_in_s(u) as i64 >= bound)
        .collect();
    let mut hits: HashMap<VertexId, usize> = HashMap::new();
    for &u in &saturated {
        for &w in g.neighbors(u) {
            if b.location(w) == Location::C {
                *hits.entry(w).or_default() += 1;
            }
        }
    }
    let mut out: Vec<VertexId> = b
        .c()
        .iter()
        .copied()
        .filter(|&v| {
            let own = s_len + 1 - b.deg_in_s(v) as i64;
            own > bound || hits.get(&v).copied().unwrap_or(0) < saturated.len()
        })
        .collect();
    out.sort_unstable();
    out
}

/// Candidates with `δ(v, S ∪ C) < θ − bound`, ascending.
pub fn rule2_removals(b: &Branch, bound: i64, params: &QcParams) -> Vec<VertexId> {
    let need = params.theta() as i64 - bound;
    if need <= 0 {
        return Vec::new();
    }
    let mut out: Vec<VertexId> = b
        .c()
        .iter()
        .copied()
        .filter(|&v| (b.deg_in_sc(v) as i64) < need)
        .collect();
    out.sort_unstable();
    out
}

/// Applies Rule 1 and returns the removed candidates.
pub fn refine_rule1(b: &mut Branch, bound: i64) -> Vec<VertexId> {
    let removed = rule1_removals(b, bound);
    for &v in &removed {
        b.move_c_to_d(v);
    }
    removed
}

/// Applies Rule 2 and returns the removed candidates.
pub fn refine_rule2(b: &mut Branch, bound: i64, params: &QcParams) -> Vec<VertexId> {
    let removed = rule2_removals(b, bound, params);
    for &v in &removed {
        b.move_c_to_d(v);
    }
    removed
}

/// Runs the refine/re-check loop to a fixpoint.
pub fn progressive_refine(b: &mut Branch, params: &QcParams) -> Refinement {
    progressive_refine_with(b, params, |_, _| {})
}

/// As [`progressive_refine`], reporting each Rule 1 batch before it is
/// applied.
pub fn progressive_refine_with<F>(b: &mut Branch, params: &QcParams, mut on_rule1: F) -> Refinement
where
    F: FnMut(&Branch, &[VertexId]),
{
    let mut passes = 0;
    loop {
        passes += 1;
        if !check_condition(b, params) {
            return Refinement {
                verdict: PruneVerdict::Pruned,
                passes,
            };
        }
        let bound = b.bound(params);
        let r1 = rule1_removals(b, bound);
        if !r1.is_empty() {
            on_rule1(b, &r1);
            for &v in &r1 {
                b.move_c_to_d(v);
            }
        }
        let r2 = refine_rule2(b, bound, params);
        if r1.is_empty() && r2.is_empty() {
            let verdict = if b.delta_sc() as i64 <= bound {
                PruneVerdict::TerminalQc { bound }
            } else {
                PruneVerdict::Continue { bound }
            };
            return Refinement { verdict, passes };
        }
    }
}

/// Size-threshold termination: `|S ∪ C| < θ`, or some `v ∈ S` cannot reach
/// `θ − bound` neighbours.
pub fn terminate_t2(b: &Branch, bound: i64, params: &QcParams) -> bool {
    let theta = params.theta() as i64;
    if (b.sc_len() as i64) < theta {
        return true;
    }
    let need = theta - bound;
    b.s().iter().any(|&v| (b.deg_in_sc(v) as i64) < need)
}
