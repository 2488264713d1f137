//! Finds or refutes K_t immersions in small graphs and prints certificates.
use immlab::immersion::{find_immersion_with, verify_certificate, SearchOptions};
use immlab::MultiGraph;

fn main() -> immlab::Result<()> {
    let mut octahedron = MultiGraph::complete(6);
    for (u, v) in [(0, 1), (2, 3), (4, 5)] {
        octahedron.remove_edge(u, v)?;
    }
    let c5 = MultiGraph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5)))?;
    let opts = SearchOptions::default();
    for (name, g, t) in [("octahedron", &octahedron, 5), ("octahedron", &octahedron, 6), ("C_5", &c5, 3)] {
        let report = find_immersion_with(g, t, &opts);
        println!("{name} K_{t}: {} ({} corner sets)", report.verdict.kind(), report.stats.corner_sets);
        if let Some(cert) = report.verdict.certificate() {
            assert_eq!(verify_certificate(g, cert), Ok(()));
            for p in &cert.paths {
                println!("  {:?}", cert.vertex_sequence(p));
            }
        }
    }
    Ok(())
}
