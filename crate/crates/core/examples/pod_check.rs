//! Checks the pod conditions on each pod family and on K_{d+1}.
use immlab::constructions::{build_family, ConstructionParams, Family};
use immlab::immersion::{is_pod, Budget, PodFailure};
use immlab::MultiGraph;

fn main() -> immlab::Result<()> {
    let cases = [
        (ConstructionParams::fixed(Family::P8), 8),
        (ConstructionParams::new(Family::Pd, 10), 10),
        (ConstructionParams::new(Family::P5d, 9), 9),
        (ConstructionParams::new(Family::Pkd, 9).connectivity(7), 9),
    ];
    for (p, d) in cases {
        let g = build_family(&p)?.graph;
        let r = is_pod(&g, d, Budget::default())?;
        println!(
            "{:<4} d={d:<2} |A|={} gadgets={} pairings={} pod={}",
            p.family.name(),
            r.a.len(),
            r.gadgets.len(),
            r.matchings_checked,
            r.is_pod
        );
    }
    let r = is_pod(&MultiGraph::complete(9), 8, Budget::default())?;
    let reason = match &r.failure {
        Some(PodFailure::Immersion { certificate, .. }) => format!("K_{} immersion on {:?}", certificate.t, certificate.corners),
        other => format!("{other:?}"),
    };
    println!("K_9  d=8  pod={} ({reason})", r.is_pod);
    Ok(())
}
