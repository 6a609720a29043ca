//! Trace the recursion of one search through a custom observer.

use mqce::branch::Branch;
use mqce::enumerate::{search, PruneReason, QcSink, RunStats, SearchObserver};
use mqce::generator::{gen_er, GenSpec};
use mqce::{QcParams, Strategy, VertexId};

#[derive(Default)]
struct Trace {
    depth: usize,
    max_depth: usize,
    pruned: [usize; 2],
    emitted: Vec<Vec<VertexId>>,
}

impl SearchObserver for Trace {
    fn on_enter(&mut self, _b: &Branch) {
        self.depth += 1;
        self.max_depth = self.max_depth.max(self.depth);
    }

    fn on_pruned(&mut self, _b: &Branch, reason: PruneReason) {
        self.pruned[matches!(reason, PruneReason::T2) as usize] += 1;
    }

    fn on_emit(&mut self, h: &[VertexId]) {
        self.emitted.push(h.to_vec());
    }

    fn on_return(&mut self, _found: bool) {
        self.depth -= 1;
    }
}

fn main() -> mqce::Result<()> {
    let g = gen_er(&GenSpec::new(40, 200, 5))?;
    let params = QcParams::parse("0.7", 4)?;
    for strategy in [Strategy::Se, Strategy::Sym, Strategy::Hybrid] {
        let mut trace = Trace::default();
        let mut root = Branch::root(&g);
        let mut sink = QcSink::new();
        let mut stats = RunStats::default();
        search(
            &mut root, &params, strategy, &mut sink, &mut stats, &mut trace,
        );
        println!(
            "{:<6} branches {:>6} depth {:>3} pruned by condition {:>5} by size {:>5} emitted {}",
            strategy.name(),
            stats.branches_created,
            trace.max_depth,
            trace.pruned[0],
            trace.pruned[1],
            trace.emitted.len()
        );
    }
    Ok(())
}
