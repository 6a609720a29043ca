//! Erdős–Rényi graphs with an exact edge count, reproducible from a seed.

use std::collections::HashSet;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenSpec {
    pub n: usize,
    pub m: u64,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(n: usize, m: u64, seed: u64) -> Self {
        GenSpec { n, m, seed }
    }

    pub fn max_edges(&self) -> u64 {
        let n = self.n as u64;
        n * n.saturating_sub(1) / 2
    }
}

/// `m` distinct pairs drawn uniformly, ascending as `(u, v)` with `u < v`.
/// Dense requests sample the missing pairs instead.
pub fn gen_er_edges(spec: &GenSpec) -> Result<Vec<(VertexId, VertexId)>> {
    let max = spec.max_edges();
    if spec.m > max {
        return Err(Error::TooManyEdges {
            n: spec.n,
            m: spec.m,
            max,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let complement = spec.m > max / 2;
    let target = if complement { max - spec.m } else { spec.m };
    let n = spec.n as VertexId;
    let mut picked: HashSet<(VertexId, VertexId)> = HashSet::with_capacity(target as usize);
    while (picked.len() as u64) < target {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u != v {
            picked.insert((u.min(v), u.max(v)));
        }
    }
    let mut edges: Vec<(VertexId, VertexId)> = if complement {
        (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|e| !picked.contains(e))
            .collect()
    } else {
        picked.into_iter().collect()
    };
    edges.sort_unstable();
    Ok(edges)
}

pub fn gen_er(spec: &GenSpec) -> Result<Graph> {
    Ok(Graph::from_edges(spec.n, gen_er_edges(spec)?))
}
