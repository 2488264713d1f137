use std::collections::BTreeSet;

use immlab::constructions::{
    build_dock, build_family, Attachment, ConstructionParams, DevosSpec, Family, LabeledGraph, PodCount,
};
use immlab::formulas::{devos_chromatic_bound, devos_feasible_params, mk_vertex_count};
use immlab::metrics::{chromatic_number, edge_connectivity, min_degree, vertex_connectivity, DEFAULT_COLORING_BUDGET};
use immlab::Error;
use proptest::prelude::*;

/// `(params, edge connectivity, chromatic number)` for dock families.
fn dock_instances() -> Vec<(ConstructionParams, u64, usize)> {
    let mut out = Vec::new();
    for d in 8..=10 {
        out.push((ConstructionParams::new(Family::Gd, d), 3, if d >= 10 { d - 3 } else { d - 2 }));
    }
    for d in [8, 9, 10] {
        for n in [1, 2, 3, 4] {
            out.push((ConstructionParams::new(Family::Gnd, d).bays(n), 3, d - 2));
        }
    }
    for (d, n) in [(8, 1), (8, 2), (9, 3)] {
        out.push((ConstructionParams::new(Family::H5d, d).bays(n), 5, d - 2));
    }
    for (d, k, n) in [(9, 7, 1), (9, 7, 2), (11, 9, 1)] {
        out.push((ConstructionParams::new(Family::Mkd, d).connectivity(k).bays(n), k as u64, d - 2));
    }
    out.push((ConstructionParams::fixed(Family::Special10Graph), 8, 8));
    out
}

fn expected_out_degree(lg: &LabeledGraph, family: Family, k: usize) -> usize {
    match family {
        Family::Gd | Family::Gnd => 3,
        Family::H5d => 5,
        Family::Mkd => k,
        Family::Special10Graph => 8,
        _ => unreachable!("{lg:?}"),
    }
}

#[test]
fn dock_families_meet_their_degree_connectivity_and_colour_claims() {
    for (params, lambda, chi) in dock_instances() {
        let lg = build_family(&params).unwrap();
        let g = &lg.graph;
        let delta = min_degree(g).unwrap();
        let got_lambda = edge_connectivity(g).unwrap();
        assert_eq!(delta, params.d as u64 - 1, "{params:?}");
        assert_eq!(got_lambda, lambda, "{params:?}");
        assert!(got_lambda <= delta);
        assert_eq!(chromatic_number(g, DEFAULT_COLORING_BUDGET).unwrap(), chi, "{params:?}");
        for (p, info) in lg.pods.iter().enumerate() {
            let vertices = lg.pod_vertices(p);
            let out = g.edge_cut_size(&vertices).unwrap() as usize;
            assert_eq!(out, info.attachments.len(), "{params:?} pod {p}");
            assert_eq!(out, expected_out_degree(&lg, params.family, params.k));
        }
        for i in 0..lg.n_bays {
            for v in lg.bay_vertices(i) {
                assert!(g.degree(v) + 1 >= params.d as u64, "bay vertex {v} not full");
            }
        }
    }
}

#[test]
fn dock_wiring_law() {
    for d in 6..=12 {
        for n in 2..=5 {
            let dock = build_dock(d, n, d - 2).unwrap();
            let g = &dock.graph;
            let coord = |v: usize| dock.bay_coordinate[&v];
            let mut expected = BTreeSet::new();
            for i in 0..n {
                let prev = (i + n - 1) % n;
                for j in 1..=(d - 2).div_ceil(2) {
                    let a = i * (d - 2) + j - 1;
                    let b = prev * (d - 2) + (d - 1 - j) - 1;
                    expected.insert((a.min(b), a.max(b)));
                }
            }
            let actual: BTreeSet<(usize, usize)> = g
                .edges()
                .into_iter()
                .filter(|&(u, v, _)| coord(u).0 != coord(v).0)
                .map(|(u, v, m)| {
                    assert_eq!(m, 1);
                    let (bu, bv) = (coord(u).0, coord(v).0);
                    assert!((bu + 1) % n == bv || (bv + 1) % n == bu, "non-consecutive bays joined");
                    assert_eq!(coord(u).1 + coord(v).1, d - 1);
                    (u, v)
                })
                .collect();
            assert_eq!(actual, expected, "d={d} n={n}");
            if n >= 3 {
                let bay: Vec<usize> = dock.bay_vertices(0);
                let next: Vec<usize> = dock.bay_vertices(1);
                let between = g
                    .edges()
                    .iter()
                    .filter(|&&(u, v, _)| (bay.contains(&u) && next.contains(&v)) || (bay.contains(&v) && next.contains(&u)))
                    .count();
                assert_eq!(between, (d - 2).div_ceil(2));
                assert!(between <= d - 3);
            }
        }
    }
}

#[test]
fn dock_examples() {
    let g49 = build_dock(9, 4, 7).unwrap();
    assert_eq!(g49.graph.order(), 28);
    assert_eq!(build_dock(8, 1, 5).unwrap().graph.size(), 10);
    assert!(matches!(build_dock(8, 1, 7), Err(Error::InfeasibleParams(_))));
}

#[test]
fn one_pod_cannot_fill_a_k5_bay() {
    let params = ConstructionParams::new(Family::Gd, 8).pods(PodCount::PerBay(1));
    assert!(matches!(build_family(&params), Err(Error::NotFull { .. })));
}

#[test]
fn single_vertex_attachment_gives_a_cut_vertex() {
    let params = ConstructionParams::new(Family::Gd, 8).attach(Attachment::Concentrated);
    let g = build_family(&params).unwrap().graph;
    assert_eq!(vertex_connectivity(&g).unwrap(), 1);
}

#[test]
fn mk_vertex_counts_match_constructions() {
    for (d, k, b, p) in [(9, 7, 1, 1), (9, 7, 2, 1), (9, 7, 1, 2), (11, 9, 1, 1)] {
        let params = ConstructionParams::new(Family::Mkd, d)
            .connectivity(k)
            .bays(b)
            .pods(PodCount::PerDockVertex(p))
            .attach(Attachment::Concentrated);
        let lg = build_family(&params).unwrap();
        assert_eq!(lg.graph.order(), mk_vertex_count(d, b, p).unwrap());
        // every dock vertex reaches degree p * k plus its dock degree
        for v in lg.dock_vertices() {
            assert!(lg.graph.degree(v) >= (p * k) as u64);
        }
    }
}

#[test]
fn devos_instances_for_d10() {
    for params in devos_feasible_params(10) {
        let spec = ConstructionParams::new(Family::DevosFamily, 0).devos(DevosSpec::Cycles(params.parts.clone()));
        let lg = build_family(&spec).unwrap();
        assert_eq!(lg.d, 10);
        assert_eq!(min_degree(&lg.graph).unwrap(), (params.n - 1 - params.regularity) as u64);
        let chi = chromatic_number(&lg.graph, DEFAULT_COLORING_BUDGET).unwrap();
        assert!(chi <= devos_chromatic_bound(&params).unwrap());
    }
}

#[test]
fn devos_rejects_even_cycles() {
    let spec = ConstructionParams::new(Family::DevosFamily, 0).devos(DevosSpec::Cycles(vec![3, 4, 3, 3]));
    assert!(build_family(&spec).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn gnd_is_always_three_edge_connected(d in 8usize..=11, n in 1usize..=5) {
        let lg = build_family(&ConstructionParams::new(Family::Gnd, d).bays(n)).unwrap();
        prop_assert_eq!(min_degree(&lg.graph).unwrap(), d as u64 - 1);
        prop_assert_eq!(edge_connectivity(&lg.graph).unwrap(), 3);
    }

    #[test]
    fn round_robin_and_concentrated_both_fill(d in 8usize..=10, n in 1usize..=3, concentrated in any::<bool>()) {
        let strategy = if concentrated { Attachment::Concentrated } else { Attachment::RoundRobin };
        let lg = build_family(&ConstructionParams::new(Family::Gnd, d).bays(n).attach(strategy)).unwrap();
        prop_assert_eq!(min_degree(&lg.graph).unwrap(), d as u64 - 1);
        let decomposition = lg.decomposition();
        let covered: usize = decomposition.bays.iter().chain(&decomposition.pods).map(Vec::len).sum();
        prop_assert_eq!(covered, lg.graph.order());
    }
}
