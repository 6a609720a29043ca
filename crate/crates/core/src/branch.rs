//! The `(S, C, D)` branch of the search with incrementally maintained
//! degree counters and an undo log for depth-first traversal.
//!
//! The counters are exact for *every* vertex of the graph, not only the
//! members of `S ∪ C`: `deg_in_s[v] = δ(v, S)` and `deg_in_sc[v] = δ(v, S∪C)`.
//! That keeps each move at `O(deg(v))` and lets the maximality test read
//! outside degrees for free.

use crate::graph::{Graph, VertexId};
use crate::qc::{self, QcParams, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Outside,
    S,
    C,
    D,
}

#[derive(Clone, Copy, Debug)]
enum Move {
    CToS { v: VertexId, c_pos: u32 },
    CToD { v: VertexId, c_pos: u32 },
}

/// Position in the undo log; `Branch::rollback` returns to it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Snapshot(usize);

/// Mutable branch state over a shared graph. One workspace is sized to the
/// whole graph and can be re-initialised for many root branches.
#[derive(Clone, Debug)]
pub struct Branch<'g> {
    g: &'g Graph,
    loc: Vec<Location>,
    pos: Vec<u32>,
    s: Vec<VertexId>,
    c: Vec<VertexId>,
    d: Vec<VertexId>,
    deg_in_s: Vec<u32>,
    deg_in_sc: Vec<u32>,
    log: Vec<Move>,
}

impl<'g> Branch<'g> {
    /// Empty workspace: `S = C = D = ∅`.
    pub fn new(g: &'g Graph) -> Self {
        let n = g.n();
        Branch {
            g,
            loc: vec![Location::Outside; n],
            pos: vec![0; n],
            s: Vec::new(),
            c: Vec::new(),
            d: Vec::new(),
            deg_in_s: vec![0; n],
            deg_in_sc: vec![0; n],
            log: Vec::new(),
        }
    }

    /// Builds a branch from explicit sets.
    ///
    /// Panics if the sets overlap.
    pub fn with_sets(g: &'g Graph, s: &[VertexId], c: &[VertexId], d: &[VertexId]) -> Self {
        let mut b = Self::new(g);
        b.init(s, c, d);
        b
    }

    /// Root branch `(∅, V, ∅)`.
    pub fn root(g: &'g Graph) -> Self {
        let all: Vec<VertexId> = g.vertices().collect();
        Self::with_sets(g, &[], &all, &[])
    }

    /// Re-initialises the workspace; cost is proportional to the degrees of
    /// the old and new members, not to `n`.
    ///
    /// Panics if the sets overlap.
    pub fn init(&mut self, s: &[VertexId], c: &[VertexId], d: &[VertexId]) {
        self.clear();
        for (list, loc) in [(s, Location::S), (c, Location::C), (d, Location::D)] {
            for &v in list {
                assert_eq!(
                    self.loc[v as usize],
                    Location::Outside,
                    "vertex {v} appears in more than one of S, C, D"
                );
                self.place(v, loc);
            }
        }
        let g = self.g;
        for &v in s {
            for &u in g.neighbors(v) {
                self.deg_in_s[u as usize] += 1;
                self.deg_in_sc[u as usize] += 1;
            }
        }
        for &v in c {
            for &u in g.neighbors(v) {
                self.deg_in_sc[u as usize] += 1;
            }
        }
    }

    fn clear(&mut self) {
        let g = self.g;
        for &v in self.s.iter().chain(&self.c) {
            for &u in g.neighbors(v) {
                self.deg_in_s[u as usize] = 0;
                self.deg_in_sc[u as usize] = 0;
            }
        }
        for &v in self.s.iter().chain(&self.c).chain(&self.d) {
            self.loc[v as usize] = Location::Outside;
        }
        self.s.clear();
        self.c.clear();
        self.d.clear();
        self.log.clear();
    }

    fn place(&mut self, v: VertexId, loc: Location) {
        let list = match loc {
            Location::S => &mut self.s,
            Location::C => &mut self.c,
            Location::D => &mut self.d,
            Location::Outside => unreachable!(),
        };
        self.pos[v as usize] = list.len() as u32;
        list.push(v);
        self.loc[v as usize] = loc;
    }

    fn take_from_c(&mut self, v: VertexId) -> u32 {
        assert_eq!(
            self.loc[v as usize],
            Location::C,
            "vertex {v} is not a candidate"
        );
        let p = self.pos[v as usize];
        let last = self.c.pop().expect("C is non-empty");
        if last != v {
            self.c[p as usize] = last;
            self.pos[last as usize] = p;
        }
        p
    }

    fn restore_to_c(&mut self, v: VertexId, p: u32) {
        let len = self.c.len() as u32;
        if p == len {
            self.c.push(v);
        } else {
            let w = self.c[p as usize];
            self.c.push(w);
            self.pos[w as usize] = len;
            self.c[p as usize] = v;
        }
        self.pos[v as usize] = p;
        self.loc[v as usize] = Location::C;
    }

    /// Moves a candidate into the partial set.
    pub fn move_c_to_s(&mut self, v: VertexId) {
        let c_pos = self.take_from_c(v);
        self.place(v, Location::S);
        for &u in self.g.neighbors(v) {
            self.deg_in_s[u as usize] += 1;
        }
        self.log.push(Move::CToS { v, c_pos });
    }

    /// Moves a candidate into the exclusion set.
    pub fn move_c_to_d(&mut self, v: VertexId) {
        let c_pos = self.take_from_c(v);
        self.place(v, Location::D);
        for &u in self.g.neighbors(v) {
            self.deg_in_sc[u as usize] -= 1;
        }
        self.log.push(Move::CToD { v, c_pos });
    }

    pub fn snapshot(&self) -> Snapshot {
        Snapshot(self.log.len())
    }

    /// Undoes every move made since `snap`.
    pub fn rollback(&mut self, snap: Snapshot) {
        while self.log.len() > snap.0 {
            match self.log.pop().unwrap() {
                Move::CToS { v, c_pos } => {
                    let popped = self.s.pop();
                    debug_assert_eq!(popped, Some(v));
                    for &u in self.g.neighbors(v) {
                        self.deg_in_s[u as usize] -= 1;
                    }
                    self.restore_to_c(v, c_pos);
                }
                Move::CToD { v, c_pos } => {
                    let popped = self.d.pop();
                    debug_assert_eq!(popped, Some(v));
                    for &u in self.g.neighbors(v) {
                        self.deg_in_sc[u as usize] += 1;
                    }
                    self.restore_to_c(v, c_pos);
                }
            }
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn s(&self) -> &[VertexId] {
        &self.s
    }

    /// Candidates in internal (unspecified) order.
    pub fn c(&self) -> &[VertexId] {
        &self.c
    }

    pub fn d(&self) -> &[VertexId] {
        &self.d
    }

    pub fn location(&self, v: VertexId) -> Location {
        self.loc[v as usize]
    }

    pub fn in_s(&self, v: VertexId) -> bool {
        self.loc[v as usize] == Location::S
    }

    pub fn in_sc(&self, v: VertexId) -> bool {
        matches!(self.loc[v as usize], Location::S | Location::C)
    }

    pub fn sorted_s(&self) -> Vec<VertexId> {
        let mut s = self.s.clone();
        s.sort_unstable();
        s
    }

    pub fn sorted_c(&self) -> Vec<VertexId> {
        let mut c = self.c.clone();
        c.sort_unstable();
        c
    }

    /// `S ∪ C`, ascending.
    pub fn sorted_sc(&self) -> Vec<VertexId> {
        let mut h: Vec<VertexId> = self.s.iter().chain(&self.c).copied().collect();
        h.sort_unstable();
        h
    }

    /// `δ(v, S)` for any vertex.
    #[inline]
    pub fn deg_in_s(&self, v: VertexId) -> usize {
        self.deg_in_s[v as usize] as usize
    }

    /// `δ(v, S ∪ C)` for any vertex.
    #[inline]
    pub fn deg_in_sc(&self, v: VertexId) -> usize {
        self.deg_in_sc[v as usize] as usize
    }

    pub fn sc_len(&self) -> usize {
        self.s.len() + self.c.len()
    }

    /// `δ̄(v, S)`, counting `v` itself when `v ∈ S`.
    pub fn non_nbr_in_s(&self, v: VertexId) -> usize {
        self.s.len() - self.deg_in_s(v)
    }

    /// `δ̄(v, S ∪ C)`, counting `v` itself when `v ∈ S ∪ C`.
    pub fn non_nbr_in_sc(&self, v: VertexId) -> usize {
        self.sc_len() - self.deg_in_sc(v)
    }

    /// `Δ(S)`; zero for an empty partial set.
    pub fn delta_s(&self) -> usize {
        self.s
            .iter()
            .map(|&v| self.non_nbr_in_s(v))
            .max()
            .unwrap_or(0)
    }

    /// `Δ(S ∪ C)`.
    pub fn delta_sc(&self) -> usize {
        self.s
            .iter()
            .chain(&self.c)
            .map(|&v| self.non_nbr_in_sc(v))
            .max()
            .unwrap_or(0)
    }

    /// Minimum of `δ(v, S ∪ C)` over `v ∈ S`; `None` when `S = ∅`.
    pub fn d_min(&self) -> Option<usize> {
        self.s.iter().map(|&v| self.deg_in_sc(v)).min()
    }

    /// Upper bound on the size of any QC under this branch:
    /// `|S∪C|` if `S = ∅`, else `min(|S∪C|, d_min/γ + 1)`.
    pub fn sigma(&self, params: &QcParams) -> Rational {
        let size = Rational::from_integer(self.sc_len() as i64);
        match self.d_min() {
            None => size,
            Some(dmin) => {
                let bound = Rational::from_integer(dmin as i64) / params.gamma()
                    + Rational::from_integer(1);
                size.min(bound)
            }
        }
    }

    /// `τ(σ(B))`.
    pub fn bound(&self, params: &QcParams) -> i64 {
        params.tau(self.sigma(params))
    }

    /// One-vertex-extension maximality test for `G[S ∪ C]`, reading the
    /// maintained counters instead of recomputing degrees.
    pub fn sc_passes_maximality(&self, params: &QcParams) -> bool {
        let h = self.sorted_sc();
        !qc::extension_exists(self.g, &h, |v| self.in_sc(v), |v| self.deg_in_sc(v), params)
    }

    /// Same test for `G[S]`.
    pub fn s_passes_maximality(&self, params: &QcParams) -> bool {
        !qc::extension_exists(
            self.g,
            &self.s,
            |v| self.in_s(v),
            |v| self.deg_in_s(v),
            params,
        )
    }

    /// True iff `G[S]` is a QC, via `Δ(S) ≤ τ(|S|)`.
    pub fn s_is_qc(&self, params: &QcParams) -> bool {
        !self.s.is_empty() && self.delta_s() as i64 <= params.tau_of_size(self.s.len())
    }

    /// Recomputes every counter from scratch and compares. Intended for
    /// tests and debug assertions.
    pub fn counters_consistent(&self) -> bool {
        let g = self.g;
        let disjoint = self.s.iter().all(|&v| self.loc[v as usize] == Location::S)
            && self.c.iter().all(|&v| self.loc[v as usize] == Location::C)
            && self.d.iter().all(|&v| self.loc[v as usize] == Location::D)
            && self
                .c
                .iter()
                .enumerate()
                .all(|(i, &v)| self.pos[v as usize] as usize == i);
        if !disjoint {
            return false;
        }
        g.vertices().all(|v| {
            let in_s = g.neighbors(v).iter().filter(|&&u| self.in_s(u)).count();
            let in_sc = g.neighbors(v).iter().filter(|&&u| self.in_sc(u)).count();
            in_s == self.deg_in_s(v) && in_sc == self.deg_in_sc(v)
        })
    }
}
