//! Immutable undirected graph in compressed sparse row form, plus the
//! structural preprocessing used by the enumerators: k-core reduction,
//! degeneracy ordering and 2-hop neighbourhoods.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

/// Dense vertex index in `[0, n)`.
pub type VertexId = u32;

/// Undirected simple graph. Neighbour lists are strictly ascending and the
/// adjacency is symmetric; original input labels are kept for output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
    labels: Vec<u64>,
    max_degree: usize,
}

impl Graph {
    /// Builds a graph over `n` vertices labelled `0..n`. Self-loops and
    /// duplicate edges are dropped.
    ///
    /// Panics if an endpoint is `>= n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Graph
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        Self::build(n, edges, (0..n as u64).collect())
    }

    fn build<I>(n: usize, edges: I, labels: Vec<u64>) -> Graph
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adj: Vec<Vec<VertexId>> = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(
                (u as usize) < n && (v as usize) < n,
                "edge ({u}, {v}) out of range for n = {n}"
            );
            if u == v {
                continue;
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::new();
        let mut max_degree = 0;
        offsets.push(0);
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            max_degree = max_degree.max(list.len());
            targets.extend_from_slice(list);
            offsets.push(targets.len());
        }
        Graph {
            offsets,
            targets,
            labels,
            max_degree,
        }
    }

    /// Parses a whitespace-separated edge list. Lines starting with `#` and
    /// blank lines are skipped. Labels are densified in ascending label order.
    pub fn load_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
        let mut raw = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let lineno = idx + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let mut tokens = trimmed.split_whitespace();
            let mut endpoint = || -> Result<u64> {
                let tok = tokens.next().ok_or_else(|| Error::Parse {
                    line: lineno,
                    message: "expected two vertex labels".into(),
                })?;
                tok.parse::<u64>().map_err(|_| Error::Parse {
                    line: lineno,
                    message: format!("invalid vertex label {tok:?}"),
                })
            };
            let u = endpoint()?;
            let v = endpoint()?;
            if let Some(extra) = tokens.next() {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("unexpected token {extra:?}"),
                });
            }
            raw.push((u, v));
        }

        let mut labels: Vec<u64> = raw.iter().flat_map(|&(u, v)| [u, v]).collect();
        labels.sort_unstable();
        labels.dedup();
        let index: HashMap<u64, VertexId> = labels
            .iter()
            .enumerate()
            .map(|(i, &l)| (l, i as VertexId))
            .collect();
        let edges = raw.iter().map(|(u, v)| (index[u], index[v]));
        Ok(Self::build(labels.len(), edges, labels))
    }

    pub fn from_edge_list_str(text: &str) -> Result<Graph> {
        Self::load_edge_list(text.as_bytes())
    }

    /// Writes one `u v` line per edge (u < v by id) using the original labels.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for (u, v) in self.edges() {
            writeln!(out, "{} {}", self.label(u), self.label(v))?;
        }
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        let v = v as usize;
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Panics if either id is out of range.
    #[inline]
    pub fn are_adjacent(&self, u: VertexId, v: VertexId) -> bool {
        assert!((v as usize) < self.n(), "vertex {v} out of range");
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    #[inline]
    pub fn label(&self, v: VertexId) -> u64 {
        self.labels[v as usize]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        0..self.n() as VertexId
    }

    /// Every edge once, as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }
}

/// Membership bitmap over the vertices of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMask(Vec<bool>);

impl VertexMask {
    pub fn new(n: usize) -> Self {
        VertexMask(vec![false; n])
    }

    pub fn full(n: usize) -> Self {
        VertexMask(vec![true; n])
    }

    pub fn from_vertices<I: IntoIterator<Item = VertexId>>(n: usize, vertices: I) -> Self {
        let mut mask = Self::new(n);
        for v in vertices {
            mask.insert(v);
        }
        mask
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        self.0[v as usize]
    }

    #[inline]
    pub fn insert(&mut self, v: VertexId) {
        self.0[v as usize] = true;
    }

    #[inline]
    pub fn remove(&mut self, v: VertexId) {
        self.0[v as usize] = false;
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(v, _)| v as VertexId)
    }
}

/// Vertices of the k-core: the largest set in which every vertex keeps at
/// least `k` neighbours. Returned ascending.
pub fn k_core(g: &Graph, k: usize) -> Vec<VertexId> {
    let n = g.n();
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut queue: VecDeque<VertexId> = g.vertices().filter(|&v| deg[v as usize] < k).collect();
    for &v in &queue {
        alive[v as usize] = false;
    }
    while let Some(v) = queue.pop_front() {
        for &u in g.neighbors(v) {
            let ui = u as usize;
            if alive[ui] {
                deg[ui] -= 1;
                if deg[ui] < k {
                    alive[ui] = false;
                    queue.push_back(u);
                }
            }
        }
    }
    g.vertices().filter(|&v| alive[v as usize]).collect()
}

/// Peeling order and the degeneracy it certifies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degeneracy {
    pub order: Vec<VertexId>,
    pub omega: usize,
}

impl Degeneracy {
    /// `rank[v]` = position of `v` in the order; `usize::MAX` for vertices
    /// not in the ordered subset.
    pub fn ranks(&self, n: usize) -> Vec<usize> {
        let mut rank = vec![usize::MAX; n];
        for (i, &v) in self.order.iter().enumerate() {
            rank[v as usize] = i;
        }
        rank
    }
}

/// Degeneracy ordering of the whole graph: repeatedly remove a vertex of
/// minimum remaining degree, lowest id first on ties.
pub fn degeneracy_ordering(g: &Graph) -> Degeneracy {
    let all: Vec<VertexId> = g.vertices().collect();
    degeneracy_ordering_within(g, &all)
}

/// Degeneracy ordering of the induced subgraph `G[subset]`.
pub fn degeneracy_ordering_within(g: &Graph, subset: &[VertexId]) -> Degeneracy {
    let member = VertexMask::from_vertices(g.n(), subset.iter().copied());
    let mut deg = vec![0usize; g.n()];
    let mut heap = BTreeSet::new();
    for &v in subset {
        let d = g
            .neighbors(v)
            .iter()
            .filter(|&&u| member.contains(u))
            .count();
        deg[v as usize] = d;
        heap.insert((d, v));
    }
    let mut removed = VertexMask::new(g.n());
    let mut order = Vec::with_capacity(subset.len());
    let mut omega = 0;
    while let Some((d, v)) = heap.pop_first() {
        omega = omega.max(d);
        removed.insert(v);
        order.push(v);
        for &u in g.neighbors(v) {
            if member.contains(u) && !removed.contains(u) {
                let du = &mut deg[u as usize];
                heap.remove(&(*du, u));
                *du -= 1;
                heap.insert((*du, u));
            }
        }
    }
    Degeneracy { order, omega }
}

/// `{v} ∪ N(v) ∪ N(N(v))` with forbidden vertices removed. Forbidden
/// vertices are also never used as the middle vertex of a 2-hop path.
/// Returned ascending.
pub fn two_hop_set(g: &Graph, v: VertexId, forbidden: &VertexMask) -> Vec<VertexId> {
    debug_assert!(!forbidden.contains(v));
    two_hop_set_where(g, v, |u| !forbidden.contains(u))
}

/// As [`two_hop_set`], with the allowed vertices given by a predicate.
pub fn two_hop_set_where<F>(g: &Graph, v: VertexId, allowed: F) -> Vec<VertexId>
where
    F: Fn(VertexId) -> bool,
{
    let mut out = vec![v];
    for &u in g.neighbors(v) {
        if !allowed(u) {
            continue;
        }
        out.push(u);
        out.extend(g.neighbors(u).iter().copied().filter(|&w| allowed(w)));
    }
    out.sort_unstable();
    out.dedup();
    out
}
