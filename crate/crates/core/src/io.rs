//! File formats: QC lines and the stats JSON object. Edge lists live on
//! [`Graph`].

use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use crate::enumerate::RunStats;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

pub fn read_graph(path: &Path) -> Result<Graph> {
    Graph::load_edge_list(BufReader::new(File::open(path)?))
}

/// Maps id sets to original labels, sorts each set and the list, and drops
/// duplicates.
pub fn to_label_sets(g: &Graph, sets: &[Vec<VertexId>]) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = sets
        .iter()
        .map(|s| {
            let mut l: Vec<u64> = s.iter().map(|&v| g.label(v)).collect();
            l.sort_unstable();
            l
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// One set per line, space-separated, in the order given.
pub fn write_qc_lines<W: Write>(sets: &[Vec<u64>], mut out: W) -> std::io::Result<()> {
    for s in sets {
        let mut first = true;
        for v in s {
            if !first {
                out.write_all(b" ")?;
            }
            write!(out, "{v}")?;
            first = false;
        }
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub fn qc_lines_string(sets: &[Vec<u64>]) -> String {
    let mut buf = Vec::new();
    write_qc_lines(sets, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("ascii output")
}

/// Parses QC lines; blank lines and `#` comments are skipped.
pub fn read_qc_lines<R: BufRead>(reader: R) -> Result<Vec<Vec<u64>>> {
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let set = t
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u64>().map_err(|_| Error::Parse {
                    line: idx + 1,
                    message: format!("invalid vertex label {tok:?}"),
                })
            })
            .collect::<Result<Vec<u64>>>()?;
        out.push(set);
    }
    Ok(out)
}

pub fn stats_json(stats: &RunStats) -> Result<String> {
    Ok(serde_json::to_string_pretty(stats)? + "\n")
}

pub fn write_stats<W: Write>(stats: &RunStats, mut out: W) -> Result<()> {
    out.write_all(stats_json(stats)?.as_bytes())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_restored_and_sorted() {
        let g = Graph::from_edge_list_str("10 30\n30 20\n20 10\n40 10").unwrap();
        let sets = vec![vec![3, 0], vec![2, 1, 0], vec![0, 3]];
        let l = to_label_sets(&g, &sets);
        assert_eq!(l, vec![vec![10, 20, 30], vec![10, 40]]);
        assert_eq!(qc_lines_string(&l), "10 20 30\n10 40\n");
    }

    #[test]
    fn qc_lines_round_trip() {
        let sets = vec![vec![1, 2, 3], vec![7]];
        let text = qc_lines_string(&sets);
        assert_eq!(read_qc_lines(text.as_bytes()).unwrap(), sets);
        assert!(matches!(
            read_qc_lines("1 x\n".as_bytes()),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn stats_keys() {
        let v: serde_json::Value =
            serde_json::from_str(&stats_json(&RunStats::default()).unwrap()).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
        for k in [
            "branches_created",
            "pruned_by_condition",
            "pruned_by_t2",
            "terminal_t1",
            "refinement_passes",
            "qcs_emitted",
            "wall_time_ms",
        ] {
            assert!(keys.contains(&k), "{k}");
        }
    }
}
