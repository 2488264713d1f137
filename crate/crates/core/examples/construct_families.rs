//! Builds one instance of every family and prints its size and hash.
use immlab::constructions::{build_family, ConstructionParams, DevosSpec, Family};

fn main() -> immlab::Result<()> {
    let cases = [
        ConstructionParams::fixed(Family::P8),
        ConstructionParams::new(Family::Pd, 9),
        ConstructionParams::new(Family::P5d, 8),
        ConstructionParams::new(Family::Pkd, 9).connectivity(7),
        ConstructionParams::fixed(Family::Special10Pod),
        ConstructionParams::new(Family::Gd, 8),
        ConstructionParams::new(Family::Gnd, 9).bays(3),
        ConstructionParams::new(Family::H5d, 8).bays(2),
        ConstructionParams::new(Family::Mkd, 9).connectivity(7),
        ConstructionParams::fixed(Family::Special10Graph),
        ConstructionParams::fixed(Family::Seymour10),
        ConstructionParams::new(Family::DevosFamily, 0).devos(DevosSpec::Cycles(vec![3, 3, 3, 3])),
        ConstructionParams::new(Family::HajosSeed, 5),
    ];
    for p in cases {
        let lg = build_family(&p)?;
        println!(
            "{:<13} d={:<2} |V|={:<3} |E|={:<4} bays={} pods={} {}",
            p.family.name(),
            lg.d,
            lg.graph.order(),
            lg.graph.size(),
            lg.n_bays,
            lg.pods.len(),
            lg.graph.canonical_hash()
        );
    }
    Ok(())
}
