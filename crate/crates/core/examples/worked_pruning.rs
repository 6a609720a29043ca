//! Size bound and Rule 1 refinement on a nine-vertex branch at γ = 0.7.

use mqce::branch::Branch;
use mqce::pruning::{check_condition, progressive_refine, refine_rule1};
use mqce::{Graph, QcParams};

fn main() -> mqce::Result<()> {
    let edges = [
        (1, 3),
        (3, 4),
        (1, 2),
        (1, 5),
        (4, 2),
        (4, 5),
        (1, 6),
        (4, 7),
        (3, 8),
        (3, 9),
    ];
    let g = Graph::from_edges(9, edges.iter().map(|&(u, v)| (u - 1, v - 1)));
    let params = QcParams::parse("0.7", 1)?;
    let label = |vs: Vec<u32>| vs.into_iter().map(|v| v + 1).collect::<Vec<_>>();

    let mut b = Branch::with_sets(&g, &[0, 2, 3], &[1, 4, 5, 6, 7, 8], &[]);
    let bound = b.bound(&params);
    println!(
        "S={:?} C={:?}: d_min={:?} sigma={} tau={bound} condition={}",
        label(b.sorted_s()),
        label(b.sorted_c()),
        b.d_min(),
        b.sigma(&params),
        check_condition(&b, &params)
    );

    let removed = refine_rule1(&mut b, bound);
    println!(
        "rule 1 removes {:?}: d_min={:?} sigma={} tau={} Delta(S)={} condition={}",
        label(removed),
        b.d_min(),
        b.sigma(&params),
        b.bound(&params),
        b.delta_s(),
        check_condition(&b, &params)
    );

    let mut fresh = Branch::with_sets(&g, &[0, 2, 3], &[1, 4, 5, 6, 7, 8], &[]);
    let r = progressive_refine(&mut fresh, &params);
    println!(
        "progressive refinement: {:?} after {} passes",
        r.verdict, r.passes
    );
    Ok(())
}
