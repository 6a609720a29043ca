//! Maximal γ-quasi-clique enumeration.
//!
//! A vertex set `H` is a γ-quasi-clique (QC) when `G[H]` is connected and
//! every member is adjacent to at least `⌈γ(|H|−1)⌉` others. Given γ ≥ 1/2
//! and a size threshold θ, this crate lists every QC with at least θ
//! vertices that is not contained in a larger QC.
//!
//! The search runs in two steps. A branch-and-bound enumerator
//! ([`enumerate`], optionally under the divide-and-conquer driver in [`dc`])
//! emits a family of QCs that contains every maximal one; [`settrie`] then
//! removes the non-maximal members. [`oracle`] is a brute-force reference
//! for small graphs.
//!
//! ```
//! use mqce::{Graph, QcParams, RunConfig};
//!
//! let g = Graph::from_edge_list_str("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n3 4").unwrap();
//! let params = QcParams::parse("0.6", 3).unwrap();
//! let (sets, _stats) = mqce::run::enumerate(&g, &params, &RunConfig::default());
//! assert_eq!(sets, vec![vec![0, 1, 2, 3]]);
//! ```

pub mod branch;
pub mod branching;
pub mod dc;
pub mod enumerate;
pub mod error;
pub mod generator;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod pruning;
pub mod qc;
pub mod run;
pub mod settrie;

pub use branch::Branch;
pub use branching::Strategy;
pub use dc::{dc_fastqc, DcConfig};
pub use enumerate::{fastqc, se_baseline, QcSink, RunStats};
pub use error::{Error, Result};
pub use graph::{Graph, VertexId};
pub use qc::{QcParams, Rational};
pub use run::{Algo, RunConfig};
pub use settrie::{filter_maximal, SetTrie};
