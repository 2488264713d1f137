//! The 10-regular-dock graph with eight colours and no K_10 immersion.
use immlab::constructions::{build_family, ConstructionParams, Family};
use immlab::immersion::{check_special10, SearchOptions};
use immlab::metrics::{MetricsReport, DEFAULT_COLORING_BUDGET};

fn main() -> immlab::Result<()> {
    let lg = build_family(&ConstructionParams::fixed(Family::Special10Graph))?;
    let m = MetricsReport::compute(&lg.graph, false, DEFAULT_COLORING_BUDGET)?;
    println!("|V|={} pods={} {m:?}", lg.graph.order(), lg.pods.len());
    let opts = SearchOptions::default();
    let refutation = check_special10(&lg.graph, &lg.decomposition(), &opts)?;
    println!("K_10 refuted: {} ({} claims)", refutation.holds(), refutation.root.count());
    println!("replay: {:?}", refutation.replay(&lg.graph, false, &opts).is_ok());
    Ok(())
}
