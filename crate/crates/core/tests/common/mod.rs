#![allow(dead_code)]

use mqce::generator::{gen_er, GenSpec};
use mqce::{Graph, QcParams, VertexId};

pub const GAMMAS: [&str; 5] = ["0.5", "0.6", "0.7", "0.9", "1.0"];
pub const THETAS: [usize; 3] = [3, 4, 5];
pub const DENSITIES: [f64; 3] = [1.5, 2.5, 3.5];

pub fn params(gamma: &str, theta: usize) -> QcParams {
    QcParams::parse(gamma, theta).unwrap()
}

/// Small ER graphs: `n` in 8..=16 crossed with every density, `reps` seeds each.
pub fn small_er_corpus(reps: u64) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 8..=16usize {
        for (di, &d) in DENSITIES.iter().enumerate() {
            for r in 0..reps {
                let m = (n as f64 * d).round() as u64;
                let seed = 1000 * n as u64 + 100 * di as u64 + r;
                let g = gen_er(&GenSpec::new(n, m, seed)).unwrap();
                out.push((format!("n{n}-m{m}-s{seed}"), g));
            }
        }
    }
    out
}

/// Definitional QC test written against adjacency only, independent of the
/// library predicates.
pub fn naive_is_qc(g: &Graph, h: &[VertexId], gamma_num: i64, gamma_den: i64) -> bool {
    if h.is_empty() {
        return false;
    }
    let k = h.len() as i64;
    for &v in h {
        let d = h
            .iter()
            .filter(|&&u| u != v && g.are_adjacent(u, v))
            .count() as i64;
        // d >= ceil(gamma (k-1))  <=>  d * den >= num * (k-1)
        if d * gamma_den < gamma_num * (k - 1) {
            return false;
        }
    }
    let mut seen = vec![h[0]];
    let mut i = 0;
    while i < seen.len() {
        let v = seen[i];
        for &u in h {
            if !seen.contains(&u) && g.are_adjacent(u, v) {
                seen.push(u);
            }
        }
        i += 1;
    }
    seen.len() == h.len()
}

pub fn subsets(universe: &[VertexId]) -> impl Iterator<Item = Vec<VertexId>> + '_ {
    (0u64..1 << universe.len()).map(move |mask| {
        universe
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect()
    })
}

pub fn is_subset(a: &[VertexId], b: &[VertexId]) -> bool {
    a.iter().all(|x| b.contains(x))
}
