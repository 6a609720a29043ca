//! Enumerate maximal quasi-cliques of an edge-list file, or of a generated
//! graph when no path is given.
//!
//! cargo run --example enumerate -- [graph.txt] [gamma] [theta]

use std::path::Path;

use mqce::generator::{gen_er, GenSpec};
use mqce::io::{qc_lines_string, read_graph};
use mqce::run::enumerate_labels;
use mqce::{QcParams, RunConfig};

fn main() -> mqce::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let g = match args.first() {
        Some(path) => read_graph(Path::new(path))?,
        None => gen_er(&GenSpec::new(60, 480, 42))?,
    };
    let gamma = args.get(1).map_or("0.8", String::as_str);
    let theta = args
        .get(2)
        .map_or(Ok(4), |t| t.parse())
        .expect("theta must be an integer");
    let params = QcParams::parse(gamma, theta)?;

    let (sets, stats) = enumerate_labels(&g, &params, &RunConfig::default());
    print!("{}", qc_lines_string(&sets));
    eprintln!(
        "n={} m={} {params}: {} maximal QCs, {} branches, {:.2} ms",
        g.n(),
        g.m(),
        sets.len(),
        stats.branches_created,
        stats.wall_time_ms
    );
    Ok(())
}
