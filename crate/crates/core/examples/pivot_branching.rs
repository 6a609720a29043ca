//! Children produced by set-enumeration, symmetric and hybrid plans around
//! two pivots of the same branch.

use mqce::branch::Branch;
use mqce::branching::{
    hybrid_se_children, pivot_at, se_children, select_pivot, sym_se_children, BranchingPlan,
};
use mqce::{Graph, QcParams, VertexId};

fn show(name: &str, plan: &BranchingPlan) {
    println!("{name}: {} children", plan.len());
    for c in plan.children() {
        let l = |vs: &[VertexId]| vs.iter().map(|v| v + 1).collect::<Vec<_>>();
        println!("  include {:?} exclude {:?}", l(&c.include), l(&c.exclude));
    }
}

fn main() -> mqce::Result<()> {
    let mut edges = vec![(1, 3), (1, 5), (1, 6), (3, 4), (3, 5)];
    edges.extend((1..=9).filter(|&v| v != 2).map(|v| (2, v)));
    for u in 4..=9 {
        edges.extend((u + 1..=9).map(|v| (u, v)));
    }
    let g = Graph::from_edges(9, edges.into_iter().map(|(u, v)| (u - 1, v - 1)));
    let params = QcParams::parse("0.6", 1)?;
    let b = Branch::with_sets(&g, &[0, 1], &[2, 3, 4, 5, 6, 7, 8], &[]);
    let bound = b.bound(&params);
    println!("sigma={} tau={bound}", b.sigma(&params));

    show("set enumeration", &se_children(&b));
    let in_s = pivot_at(&b, 0, bound).expect("vertex 1 qualifies as pivot");
    show("symmetric, pivot 1 in S", &sym_se_children(&in_s));
    let in_c = select_pivot(&b, bound);
    println!(
        "selected pivot {} (a={}, b={})",
        in_c.v_hat + 1,
        in_c.a,
        in_c.b
    );
    show("symmetric, selected pivot", &sym_se_children(&in_c));
    if let Some(plan) = hybrid_se_children(&in_c) {
        show("hybrid, selected pivot", &plan);
    }
    Ok(())
}
