//! Degree, connectivity and colouring figures for a few graphs.
use immlab::constructions::{build_family, seymour_graph, ConstructionParams, Family};
use immlab::metrics::{MetricsReport, DEFAULT_COLORING_BUDGET};
use immlab::MultiGraph;

fn main() -> immlab::Result<()> {
    let graphs = [
        ("K_6", MultiGraph::complete(6)),
        ("seymour", seymour_graph()),
        ("G_9", build_family(&ConstructionParams::new(Family::Gd, 9))?.graph),
    ];
    for (name, g) in graphs {
        let r = MetricsReport::compute(&g, true, DEFAULT_COLORING_BUDGET)?;
        println!("{name}: {}", serde_json::to_string(&r)?);
    }
    Ok(())
}
