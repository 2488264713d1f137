//! Writes a multigraph in each text format and reads it back.
use immlab::multigraph::parse_graph6;
use immlab::MultiGraph;

fn main() -> immlab::Result<()> {
    let mut g = MultiGraph::complete(4);
    g.add_edge(0, 1)?;
    g.set_label(0, "a0_1");
    let list = g.to_edge_list();
    print!("{list}");
    let back = MultiGraph::parse_edge_list(&list)?;
    assert_eq!(back, g);
    let json = g.to_json();
    assert_eq!(MultiGraph::parse_json(&json)?, g);
    println!("{json}");
    println!("graph6 with a parallel edge: {:?}", g.to_graph6().is_err());
    let k5 = parse_graph6(&MultiGraph::complete(5).to_graph6()?)?;
    println!("K_5 from graph6: {} edges, hash {}", k5.size(), k5.canonical_hash());
    Ok(())
}
