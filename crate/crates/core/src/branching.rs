//! Pivot selection and the three branching plans.
//!
//! A plan is stored compactly as a candidate ordering plus its shape.
//! [`BranchingPlan::children`] materialises the `(include, exclude)` pairs;
//! [`BranchingPlan::explore`] walks the same children incrementally on a
//! live [`Branch`], sharing prefix moves between siblings.

use crate::branch::{Branch, Location};
use crate::graph::VertexId;

/// Which branching scheme the search uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Strategy {
    /// Hybrid plan where the pivot allows it, symmetric plan otherwise.
    #[default]
    Hybrid,
    /// Symmetric plan at every branch.
    Sym,
    /// Plain include-one/exclude-prefix branching over ascending ids.
    Se,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Hybrid => "hybrid",
            Strategy::Sym => "sym",
            Strategy::Se => "se",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotLocation {
    InS,
    InC,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pivot {
    pub v_hat: VertexId,
    pub location: PivotLocation,
    /// `bound − δ̄(v̂, S)`.
    pub a: usize,
    /// `δ̄(v̂, C)`, counting `v̂` when it is a candidate.
    pub b: usize,
    /// `δ̄(v̂, S)`.
    pub nonnbrs_in_s: usize,
    /// All of `C`: the `b` non-neighbours of `v̂` first (`v̂` leading when it
    /// is a candidate), then the rest; ascending inside each group.
    pub order: Vec<VertexId>,
}

impl Pivot {
    pub fn nonnbrs_in_c(&self) -> &[VertexId] {
        &self.order[..self.b]
    }

    /// Whether the hybrid plan applies: `v̂ ∈ C` and `v̂` sees all of `S`.
    pub fn hybrid_eligible(&self) -> bool {
        self.location == PivotLocation::InC && self.nonnbrs_in_s == 0
    }
}

/// Builds the pivot record for `v`, or `None` unless `v ∈ S ∪ C` has more
/// than `bound` non-neighbours in `S ∪ C`.
pub fn pivot_at(br: &Branch, v: VertexId, bound: i64) -> Option<Pivot> {
    let location = match br.location(v) {
        Location::S => PivotLocation::InS,
        Location::C => PivotLocation::InC,
        _ => return None,
    };
    if br.non_nbr_in_sc(v) as i64 <= bound {
        return None;
    }
    let g = br.graph();
    let nonnbrs_in_s = br.s().len() - br.deg_in_s(v);
    let (mut far, mut near): (Vec<VertexId>, Vec<VertexId>) = br
        .c()
        .iter()
        .copied()
        .filter(|&u| u != v)
        .partition(|&u| !g.are_adjacent(u, v));
    far.sort_unstable();
    near.sort_unstable();
    let mut order = Vec::with_capacity(br.c().len());
    if location == PivotLocation::InC {
        order.push(v);
    }
    order.extend_from_slice(&far);
    let b = order.len();
    order.extend_from_slice(&near);
    let a = bound - nonnbrs_in_s as i64;
    assert!(a >= 0, "pivot on a branch violating the size condition");
    Some(Pivot {
        v_hat: v,
        location,
        a: a as usize,
        b,
        nonnbrs_in_s,
        order,
    })
}

/// The vertex of `S ∪ C` with the most non-neighbours in `S ∪ C`. Ties go to
/// a hybrid-eligible candidate, then to the lowest id.
///
/// Panics if no vertex exceeds `bound`, which means the termination check
/// was skipped.
pub fn select_pivot(br: &Branch, bound: i64) -> Pivot {
    let s_len = br.s().len();
    let best = br
        .s()
        .iter()
        .chain(br.c())
        .copied()
        .max_by_key(|&v| {
            let eligible = br.location(v) == Location::C && br.deg_in_s(v) == s_len;
            (br.non_nbr_in_sc(v), eligible, std::cmp::Reverse(v))
        })
        .expect("pivot requested on an empty branch");
    pivot_at(br, best, bound).expect("no vertex exceeds the disconnection bound")
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Child {
    pub include: Vec<VertexId>,
    pub exclude: Vec<VertexId>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlanKind {
    Se,
    Sym { a: usize, b: usize },
    Hybrid { a: usize, b: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchingPlan {
    pub kind: PlanKind,
    pub order: Vec<VertexId>,
}

/// One child per candidate in ascending id order.
pub fn se_children(br: &Branch) -> BranchingPlan {
    BranchingPlan {
        kind: PlanKind::Se,
        order: br.sorted_c(),
    }
}

/// The `a + 1` children that survive the symmetric scheme.
pub fn sym_se_children(p: &Pivot) -> BranchingPlan {
    BranchingPlan {
        kind: PlanKind::Sym { a: p.a, b: p.b },
        order: p.order.clone(),
    }
}

/// The hybrid plan, or `None` when the pivot does not allow it.
pub fn hybrid_se_children(p: &Pivot) -> Option<BranchingPlan> {
    p.hybrid_eligible().then(|| BranchingPlan {
        kind: PlanKind::Hybrid { a: p.a, b: p.b },
        order: p.order.clone(),
    })
}

impl BranchingPlan {
    pub fn len(&self) -> usize {
        match self.kind {
            PlanKind::Se => self.order.len(),
            PlanKind::Sym { a, .. } => a + 1,
            PlanKind::Hybrid { a, b } => a + b - 1,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Moves relative to the parent, in visiting order.
    pub fn children(&self) -> Vec<Child> {
        let o = &self.order;
        let sym = |i: usize, a: usize, b: usize| {
            let mut exclude = vec![o[i]];
            if i == a {
                exclude.extend_from_slice(&o[a + 1..b]);
            }
            Child {
                include: o[..i].to_vec(),
                exclude,
            }
        };
        match self.kind {
            PlanKind::Se => (0..o.len())
                .map(|i| Child {
                    include: vec![o[i]],
                    exclude: o[..i].to_vec(),
                })
                .collect(),
            PlanKind::Sym { a, b } => (0..=a).map(|i| sym(i, a, b)).collect(),
            PlanKind::Hybrid { a, b } => {
                let mut out: Vec<Child> = (1..=a).map(|i| sym(i, a, b)).collect();
                out.extend((1..b).map(|i| Child {
                    include: vec![o[i]],
                    exclude: o[..i].to_vec(),
                }));
                out
            }
        }
    }

    /// Applies each child to `br` in turn, calls `visit`, and restores `br`.
    /// Returns whether any visit returned `true`; every child is visited.
    pub fn explore<F>(&self, br: &mut Branch, mut visit: F) -> bool
    where
        F: FnMut(&mut Branch) -> bool,
    {
        let start = br.snapshot();
        let o = &self.order;
        let mut any = false;
        match self.kind {
            PlanKind::Se => {
                for &v in o {
                    let snap = br.snapshot();
                    br.move_c_to_s(v);
                    any |= visit(br);
                    br.rollback(snap);
                    br.move_c_to_d(v);
                }
            }
            PlanKind::Sym { a, b } => {
                any |= explore_sym(br, o, 0, a, b, &mut visit);
            }
            PlanKind::Hybrid { a, b } => {
                br.move_c_to_s(o[0]);
                any |= explore_sym(br, o, 1, a, b, &mut visit);
                br.rollback(start);
                br.move_c_to_d(o[0]);
                for &v in &o[1..b] {
                    let snap = br.snapshot();
                    br.move_c_to_s(v);
                    any |= visit(br);
                    br.rollback(snap);
                    br.move_c_to_d(v);
                }
            }
        }
        br.rollback(start);
        any
    }
}

fn explore_sym<F>(
    br: &mut Branch,
    o: &[VertexId],
    from: usize,
    a: usize,
    b: usize,
    visit: &mut F,
) -> bool
where
    F: FnMut(&mut Branch) -> bool,
{
    let mut any = false;
    for i in from..=a {
        let snap = br.snapshot();
        br.move_c_to_d(o[i]);
        if i == a {
            for &v in &o[a + 1..b] {
                br.move_c_to_d(v);
            }
        }
        any |= visit(br);
        br.rollback(snap);
        if i < a {
            br.move_c_to_s(o[i]);
        }
    }
    any
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::qc::{max_disconnections, QcParams};

    /// Adjacency of the two-pivot example at γ = 0.6; ids are labels minus one.
    fn two_pivot_graph() -> Graph {
        let mut edges = vec![(1, 3), (1, 5), (1, 6), (3, 4), (3, 5)];
        for v in 1..=9 {
            if v != 2 {
                edges.push((2, v));
            }
        }
        for u in 4..=9 {
            for v in u + 1..=9 {
                edges.push((u, v));
            }
        }
        Graph::from_edges(9, edges.into_iter().map(|(u, v)| (u - 1, v - 1)))
    }

    fn two_pivot_branch(g: &Graph) -> Branch<'_> {
        Branch::with_sets(g, &[0, 1], &[2, 3, 4, 5, 6, 7, 8], &[])
    }

    fn labels(vs: &[VertexId]) -> Vec<VertexId> {
        vs.iter().map(|v| v + 1).collect()
    }

    #[test]
    fn two_pivot_bound() {
        let g = two_pivot_graph();
        let b = two_pivot_branch(&g);
        let p = QcParams::parse("0.6", 1).unwrap();
        assert_eq!(b.d_min(), Some(4));
        assert_eq!(b.sigma(&p), crate::qc::Rational::new(23, 3));
        assert_eq!(b.bound(&p), 3);
    }

    #[test]
    fn two_pivot_case1() {
        let g = two_pivot_graph();
        let br = two_pivot_branch(&g);
        let pv = pivot_at(&br, 0, 3).unwrap();
        assert_eq!(pv.location, PivotLocation::InS);
        assert_eq!((pv.a, pv.b), (2, 4));
        assert_eq!(labels(pv.nonnbrs_in_c()), vec![4, 7, 8, 9]);
        assert_eq!(labels(&pv.order), vec![4, 7, 8, 9, 3, 5, 6]);
        let plan = sym_se_children(&pv);
        assert_eq!(plan.children().len(), 3);
        let mut s4 = vec![0, 1];
        s4.extend_from_slice(&pv.order[..3]);
        assert_eq!(max_disconnections(&g, &s4), 4);
    }

    #[test]
    fn two_pivot_case2_and_hybrid() {
        let g = two_pivot_graph();
        let br = two_pivot_branch(&g);
        let pv = select_pivot(&br, 3);
        assert_eq!(pv.v_hat, 2);
        assert_eq!((pv.a, pv.b), (3, 5));
        assert_eq!(labels(&pv.order), vec![3, 6, 7, 8, 9, 4, 5]);
        assert_eq!(sym_se_children(&pv).children().len(), 4);
        let mut s5 = vec![0, 1];
        s5.extend_from_slice(&pv.order[..4]);
        assert_eq!(labels(&s5), vec![1, 2, 3, 6, 7, 8]);
        let hybrid = hybrid_se_children(&pv).unwrap();
        let kids = hybrid.children();
        assert_eq!(kids.len(), 7);
        assert_eq!(kids.iter().filter(|c| c.include.contains(&2)).count(), 3);
    }

    #[test]
    fn pivot_requires_qualification() {
        let g = two_pivot_graph();
        let br = two_pivot_branch(&g);
        assert!(pivot_at(&br, 1, 3).is_none());
        assert!(pivot_at(&br, 0, 5).is_none());
    }

    #[test]
    fn se_shape() {
        let g = two_pivot_graph();
        let br = Branch::with_sets(&g, &[0], &[4, 2, 3], &[]);
        let kids = se_children(&br).children();
        let prefix: Vec<usize> = kids.iter().map(|c| c.exclude.len()).collect();
        assert_eq!(prefix, vec![0, 1, 2]);
        assert_eq!(kids[2].include, vec![4]);
    }

    #[test]
    fn explore_matches_children() {
        let g = two_pivot_graph();
        let mut br = two_pivot_branch(&g);
        let pv = select_pivot(&br, 3);
        let plans = [
            se_children(&br),
            sym_se_children(&pv),
            hybrid_se_children(&pv).unwrap(),
            sym_se_children(&pivot_at(&br, 0, 3).unwrap()),
        ];
        for plan in &plans {
            let mut seen = Vec::new();
            plan.explore(&mut br, |b| {
                seen.push((b.sorted_s(), b.sorted_c()));
                false
            });
            let expect: Vec<_> = plan
                .children()
                .into_iter()
                .map(|c| {
                    let mut s = vec![0, 1];
                    s.extend(&c.include);
                    s.sort_unstable();
                    let c: Vec<VertexId> = (2..9)
                        .filter(|v| !s.contains(v) && !c.exclude.contains(v))
                        .collect();
                    (s, c)
                })
                .collect();
            assert_eq!(seen, expect);
            assert!(br.counters_consistent());
            assert_eq!(br.sorted_c(), vec![2, 3, 4, 5, 6, 7, 8]);
        }
    }
}
