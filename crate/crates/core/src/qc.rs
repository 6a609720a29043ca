//! Quasi-clique predicates: the definitional check, the disconnection
//! count Δ, the threshold τ and the one-vertex-extension maximality test.
//!
//! Every vertex counts itself as one of its own non-neighbours, so
//! `nbr_count(v, H) + non_nbr_count(v, H) == |H|` for `v ∈ H`. Fractional
//! quantities are exact rationals; there is no floating point anywhere on
//! the pruning path.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Exact rational used for γ and the size bound σ.
pub type Rational = Ratio<i64>;

/// Largest denominator accepted for γ; keeps every product well inside i64.
const MAX_GAMMA_DEN: i64 = 1_000_000_000;

/// The fraction threshold γ ∈ [1/2, 1] and the size threshold θ ≥ 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QcParams {
    gamma: Rational,
    theta: usize,
}

impl QcParams {
    pub fn new(gamma: Rational, theta: usize) -> Result<Self> {
        if gamma < Rational::new(1, 2) || gamma > Rational::from_integer(1) {
            return Err(Error::InvalidParams(format!(
                "gamma must lie in [0.5, 1], got {gamma}"
            )));
        }
        if *gamma.denom() > MAX_GAMMA_DEN {
            return Err(Error::InvalidParams(format!(
                "gamma denominator {} is too large",
                gamma.denom()
            )));
        }
        if theta == 0 {
            return Err(Error::InvalidParams("theta must be at least 1".into()));
        }
        Ok(QcParams { gamma, theta })
    }

    /// Parses γ from a decimal string such as `0.9`, `1`, `0.51` or `1.0`.
    pub fn parse(gamma: &str, theta: usize) -> Result<Self> {
        Self::new(parse_decimal(gamma)?, theta)
    }

    pub fn gamma(&self) -> Rational {
        self.gamma
    }

    pub fn theta(&self) -> usize {
        self.theta
    }

    /// `τ(x) = ⌊(1−γ)·x + γ⌋`: the largest Δ a QC of size `x` may have.
    pub fn tau(&self, x: Rational) -> i64 {
        let one = Rational::from_integer(1);
        ((one - self.gamma) * x + self.gamma).floor().to_integer()
    }

    pub fn tau_of_size(&self, size: usize) -> i64 {
        self.tau(Rational::from_integer(size as i64))
    }

    /// `⌈γ·(size − 1)⌉`: the minimum in-set degree for a QC of `size`
    /// vertices.
    pub fn min_degree(&self, size: usize) -> usize {
        if size == 0 {
            return 0;
        }
        (self.gamma * Rational::from_integer(size as i64 - 1))
            .ceil()
            .to_integer() as usize
    }
}

impl fmt::Display for QcParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gamma={} theta={}", self.gamma, self.theta)
    }
}

fn parse_decimal(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidParams(format!("gamma {text:?} is not a decimal number"));
    let text = text.trim();
    let (int_part, frac_part) = match text.split_once('.') {
        Some((i, f)) => (i, f),
        None => (text, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(int_part) || !all_digits(frac_part) || frac_part.len() > 9 || int_part.len() > 9
    {
        return Err(bad());
    }
    let den = 10i64.pow(frac_part.len() as u32);
    let int: i64 = if int_part.is_empty() {
        0
    } else {
        int_part.parse().map_err(|_| bad())?
    };
    let frac: i64 = if frac_part.is_empty() {
        0
    } else {
        frac_part.parse().map_err(|_| bad())?
    };
    Ok(Rational::new(int * den + frac, den))
}

/// `δ(v, H)`: neighbours of `v` inside `h`.
pub fn nbr_count(g: &Graph, v: VertexId, h: &[VertexId]) -> usize {
    h.iter().filter(|&&u| g.are_adjacent(v, u)).count()
}

/// `δ̄(v, H)`: members of `h` not adjacent to `v`, `v` itself included.
pub fn non_nbr_count(g: &Graph, v: VertexId, h: &[VertexId]) -> usize {
    h.len() - nbr_count(g, v, h)
}

/// `Δ(H) = max_{v∈H} δ̄(v, H)`, with `Δ(∅) = 0`.
pub fn max_disconnections(g: &Graph, h: &[VertexId]) -> usize {
    h.iter().map(|&v| non_nbr_count(g, v, h)).max().unwrap_or(0)
}

/// Definitional check: `G[H]` connected and every member adjacent to at
/// least `⌈γ(|H|−1)⌉` others. The empty set is not a QC.
pub fn is_quasi_clique(g: &Graph, h: &[VertexId], params: &QcParams) -> bool {
    if h.is_empty() {
        return false;
    }
    let need = params.min_degree(h.len());
    if h.iter().any(|&v| nbr_count(g, v, h) < need) {
        return false;
    }
    is_connected(g, h)
}

fn is_connected(g: &Graph, h: &[VertexId]) -> bool {
    let members: HashSet<VertexId> = h.iter().copied().collect();
    let mut seen = HashSet::from([h[0]]);
    let mut queue = VecDeque::from([h[0]]);
    while let Some(v) = queue.pop_front() {
        for &u in g.neighbors(v) {
            if members.contains(&u) && seen.insert(u) {
                queue.push_back(u);
            }
        }
    }
    seen.len() == members.len()
}

/// QC test through `Δ(H) ≤ τ(|H|)`. Valid for γ ≥ 1/2, where the degree
/// bound already forces diameter ≤ 2.
pub fn is_qc_by_delta(g: &Graph, h: &[VertexId], params: &QcParams) -> bool {
    !h.is_empty() && max_disconnections(g, h) as i64 <= params.tau_of_size(h.len())
}

/// True iff no single vertex outside `h` extends it to a larger QC.
/// `h` must already be a QC. Necessary, not sufficient, for maximality.
pub fn passes_maximality_necessary(g: &Graph, h: &[VertexId], params: &QcParams) -> bool {
    let members: HashSet<VertexId> = h.iter().copied().collect();
    let mut deg: HashMap<VertexId, usize> = HashMap::new();
    for &u in h {
        for &v in g.neighbors(u) {
            *deg.entry(v).or_default() += 1;
        }
    }
    !extension_exists(
        g,
        h,
        |v| members.contains(&v),
        |v| deg.get(&v).copied().unwrap_or(0),
        params,
    )
}

/// Shared core of the maximality test. `deg_in_h(v)` must return `δ(v, H)`
/// for every vertex of the graph.
pub(crate) fn extension_exists<M, D>(
    g: &Graph,
    h: &[VertexId],
    in_h: M,
    deg_in_h: D,
    params: &QcParams,
) -> bool
where
    M: Fn(VertexId) -> bool,
    D: Fn(VertexId) -> usize,
{
    if h.is_empty() {
        return false;
    }
    // Degree every vertex of H ∪ {v} needs.
    let need = params.min_degree(h.len() + 1);
    let mut deficient = Vec::new();
    for &u in h {
        let d = deg_in_h(u);
        if d + 1 < need {
            return false;
        }
        if d < need {
            deficient.push(u);
        }
    }
    let mut tried = HashSet::new();
    for &u in h {
        for &v in g.neighbors(u) {
            if in_h(v) || !tried.insert(v) {
                continue;
            }
            if deg_in_h(v) >= need && deficient.iter().all(|&w| g.are_adjacent(w, v)) {
                return true;
            }
        }
    }
    false
}
