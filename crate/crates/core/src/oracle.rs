//! Exhaustive ground truth over all `2^n` vertex subsets, for small graphs.
//!
//! Each subset is tested twice, once by the definition (connected, every
//! member adjacent to at least `⌈γ(|H|−1)⌉` others) and once by `Δ ≤ τ`,
//! and the two must agree. Maximality is decided by looking for any QC
//! superset, never by one-vertex extension.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::qc::QcParams;

pub const DEFAULT_MAX_N: usize = 18;

/// The QC flag of every subset of `V`, indexed by bitmask.
struct Table {
    n: usize,
    is_qc: Vec<bool>,
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect()
}

fn connected(adj: &[u32], mask: u32) -> bool {
    let mut seen = mask & mask.wrapping_neg();
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let next = adj[v] & mask & !seen;
        seen |= next;
        frontier |= next;
    }
    seen == mask
}

fn build(g: &Graph, params: &QcParams, max_n: usize) -> Result<Table> {
    let n = g.n();
    if n > max_n || n > 31 {
        return Err(Error::OracleLimit { n, max_n });
    }
    let adj = adjacency_masks(g);
    let mut is_qc = vec![false; 1 << n];
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        let need = params.min_degree(size) as u32;
        let mut min_deg = u32::MAX;
        let mut max_miss = 0;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (adj[v] & mask).count_ones();
            min_deg = min_deg.min(d);
            max_miss = max_miss.max(size as i64 - d as i64);
        }
        let by_definition = min_deg >= need && connected(&adj, mask);
        let by_delta = max_miss <= params.tau_of_size(size);
        assert_eq!(
            by_definition, by_delta,
            "QC predicates disagree on subset {mask:#b} at {params}"
        );
        is_qc[mask as usize] = by_definition;
    }
    Ok(Table { n, is_qc })
}

fn members(mask: u32) -> Vec<VertexId> {
    (0..32).filter(|&v| mask >> v & 1 == 1).collect()
}

fn sorted_lists(masks: impl Iterator<Item = u32>) -> Vec<Vec<VertexId>> {
    let mut out: Vec<Vec<VertexId>> = masks.map(members).collect();
    out.sort();
    out
}

/// Every QC with at least θ vertices, each ascending, sorted.
pub fn all_qcs(g: &Graph, params: &QcParams) -> Result<Vec<Vec<VertexId>>> {
    all_qcs_limited(g, params, DEFAULT_MAX_N)
}

pub fn all_qcs_limited(g: &Graph, params: &QcParams, max_n: usize) -> Result<Vec<Vec<VertexId>>> {
    let t = build(g, params, max_n)?;
    let theta = params.theta() as u32;
    Ok(sorted_lists((1u32..(1 << t.n)).filter(|&m| {
        t.is_qc[m as usize] && m.count_ones() >= theta
    })))
}

/// Every QC with at least θ vertices that no larger QC contains.
pub fn all_mqcs(g: &Graph, params: &QcParams) -> Result<Vec<Vec<VertexId>>> {
    all_mqcs_limited(g, params, DEFAULT_MAX_N)
}

pub fn all_mqcs_limited(g: &Graph, params: &QcParams, max_n: usize) -> Result<Vec<Vec<VertexId>>> {
    let t = build(g, params, max_n)?;
    let full = (1u32 << t.n) - 1;
    // covered[m]: some proper superset of m is a QC.
    let mut covered = vec![false; 1 << t.n];
    for mask in (0..=full).rev() {
        let mut free = full & !mask;
        while free != 0 {
            let bit = free & free.wrapping_neg();
            free &= free - 1;
            let up = (mask | bit) as usize;
            if t.is_qc[up] || covered[up] {
                covered[mask as usize] = true;
                break;
            }
        }
    }
    let theta = params.theta() as u32;
    Ok(sorted_lists((1..=full).filter(|&m| {
        t.is_qc[m as usize] && !covered[m as usize] && m.count_ones() >= theta
    })))
}
