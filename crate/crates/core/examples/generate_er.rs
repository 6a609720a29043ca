//! Reproducible Erdős–Rényi graphs with an exact edge count.
//!
//! cargo run --example generate_er -- <n> <m> [seed] > graph.txt

use std::io::{self, Write};

use mqce::generator::{gen_er_edges, GenSpec};

fn main() -> mqce::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("arguments must be integers"))
        .collect();
    let (n, m, seed) = match args[..] {
        [n, m] => (n, m, 0),
        [n, m, seed] => (n, m, seed),
        _ => (20, 50, 0),
    };
    let edges = gen_er_edges(&GenSpec::new(n as usize, m, seed))?;
    let mut out = io::stdout().lock();
    for (u, v) in &edges {
        writeln!(out, "{u} {v}")?;
    }
    eprintln!("{} edges on {n} vertices, seed {seed}", edges.len());
    Ok(())
}
