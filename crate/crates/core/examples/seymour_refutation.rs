//! K_12 minus four disjoint triangles: minimum degree nine, no K_10 immersion.
use std::time::Instant;

use immlab::immersion::{find_immersion_with, SearchOptions};
use immlab::MultiGraph;

fn main() {
    let mut g = MultiGraph::complete(12);
    for t in 0..4 {
        let b = 3 * t;
        for (u, v) in [(b, b + 1), (b + 1, b + 2), (b, b + 2)] {
            g.remove_edge(u, v).expect("edge of K_12");
        }
    }
    for t in [9, 10] {
        let start = Instant::now();
        let report = find_immersion_with(&g, t, &SearchOptions::default());
        println!(
            "t={t}: {} ({} corner sets, {} nodes) in {:.2?}",
            report.verdict.kind(),
            report.stats.corner_sets,
            report.stats.nodes,
            start.elapsed()
        );
    }
}
