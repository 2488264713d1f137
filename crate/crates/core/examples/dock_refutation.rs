//! Builds the dock families and refutes a K_d immersion in each from its
//! decomposition, replaying every claim afterwards.
use std::time::Instant;

use immlab::constructions::{build_family, ConstructionParams, Family};
use immlab::immersion::{check_special10, refute_dock_graph, SearchOptions};
use immlab::metrics::{chromatic_number, edge_connectivity, min_degree, DEFAULT_COLORING_BUDGET};

fn main() -> immlab::Result<()> {
    let opts = SearchOptions::default();
    let mut cases = vec![ConstructionParams::new(Family::Gd, 8)];
    for d in [9, 10] {
        cases.push(ConstructionParams::new(Family::Gd, d));
    }
    for d in [8, 9] {
        for n in [1, 2, 4] {
            cases.push(ConstructionParams::new(Family::Gnd, d).bays(n));
        }
    }
    cases.push(ConstructionParams::new(Family::H5d, 8).bays(2));
    cases.push(ConstructionParams::new(Family::Mkd, 9).bays(2).connectivity(7));
    cases.push(ConstructionParams::fixed(Family::Special10Graph));

    for p in cases {
        let start = Instant::now();
        let lg = build_family(&p)?;
        let g = &lg.graph;
        let refutation = if p.family == Family::Special10Graph {
            check_special10(g, &lg.decomposition(), &opts)?
        } else {
            refute_dock_graph(g, &lg.decomposition(), p.d, &opts)?
        };
        let replay = refutation.replay(g, false, &opts);
        println!(
            "{:<10} d={:<2} bays={} |V|={:<3} min_deg={} lambda={} chi={} refuted={} replay={} claims={} ({:.2?})",
            p.family.name(),
            p.d,
            p.n_bays,
            g.order(),
            min_degree(g)?,
            edge_connectivity(g)?,
            chromatic_number(g, DEFAULT_COLORING_BUDGET)?,
            refutation.holds(),
            replay.is_ok(),
            refutation.root.count(),
            start.elapsed()
        );
    }
    Ok(())
}
