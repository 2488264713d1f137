//! End-to-end acceptance criteria. Each criterion prints one PASS/FAIL line.

mod support;

use std::io::Write;

use std::time::Instant;

use immlab::constructions::{build_family, seymour_graph, Attachment, ConstructionParams, Family, PodCount};
use immlab::formulas::{
    bay_case_margin, corner_split_margin, devos_feasible_params, mk_vertex_count, DevosParams,
};
use immlab::hajos::{random_trial, RandomTrialConfig};
use immlab::immersion::{
    check_special10, corner_split_infeasible, find_immersion_with, is_pod, maximum_pairings, refute_dock_graph,
    verify_certificate, Budget, Claim, Refutation, Rule, SearchOptions, SearchVerdict,
};
use immlab::metrics::{chromatic_number, clique_number, edge_connectivity, min_degree, DEFAULT_COLORING_BUDGET};
use immlab::MultiGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use support::{corpus, oracle_immerses, planted_cut};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn criterion_1() -> Outcome {
    let g = seymour_graph();
    let delta = min_degree(&g).unwrap();
    let chi = chromatic_number(&g, DEFAULT_COLORING_BUDGET).unwrap();
    let omega = clique_number(&g, DEFAULT_COLORING_BUDGET).unwrap();
    let report = find_immersion_with(&g, 10, &SearchOptions::default());
    let exhausted = report.verdict.is_not_immersed();
    outcome(
        delta == 9 && chi == 4 && omega == 4 && exhausted,
        format!(
            "Seymour graph: min degree {delta}, chi {chi}, omega {omega}, K_10 {} after {} corner sets",
            report.verdict.kind(),
            report.stats.corner_sets
        ),
    )
}

fn criterion_2() -> Outcome {
    let cases = [
        (Family::P8, 8, 0),
        (Family::Pd, 8, 0),
        (Family::Pd, 9, 0),
        (Family::Pd, 10, 0),
        (Family::P5d, 8, 0),
        (Family::P5d, 9, 0),
        (Family::Pkd, 9, 7),
    ];
    let mut bad = Vec::new();
    let mut summary = Vec::new();
    for (family, d, k) in cases {
        let g = build_family(&ConstructionParams::new(family, d).connectivity(k)).unwrap().graph;
        let report = is_pod(&g, d, Budget::default()).unwrap();
        let expected = maximum_pairings(&report.a).len();
        let ok = report.is_pod
            && report.gadgets.len() >= 3
            && report.gadget_condition
            && report.matchings_checked == expected
            && report.outcomes.iter().all(|o| !o.immersed);
        summary.push(format!("{family}(d={d}): {} gadgets, {expected} pairings", report.gadgets.len()));
        if !ok {
            bad.push(format!("{family} d={d}"));
        }
    }
    outcome(bad.is_empty(), format!("{}; failures {bad:?}", summary.join(", ")))
}

fn count_rules(c: &Claim, pred: &dyn Fn(&Rule) -> bool) -> usize {
    usize::from(pred(&c.rule)) + c.children.iter().map(|ch| count_rules(ch, pred)).sum::<usize>()
}

fn family_cases() -> Vec<(ConstructionParams, u64, usize)> {
    let mut cases = vec![
        (ConstructionParams::new(Family::Gd, 8), 3, 6),
        (ConstructionParams::new(Family::Gd, 9), 3, 7),
        (ConstructionParams::new(Family::Gd, 10), 3, 7),
    ];
    for d in [8, 9] {
        for n in [1, 2, 4] {
            cases.push((ConstructionParams::new(Family::Gnd, d).bays(n), 3, d - 2));
        }
    }
    cases.push((ConstructionParams::new(Family::H5d, 8).bays(2), 5, 6));
    cases.push((ConstructionParams::new(Family::Mkd, 9).bays(2).connectivity(7), 7, 7));
    cases.push((ConstructionParams::fixed(Family::Special10Graph), 8, 8));
    cases
}

fn refute(params: &ConstructionParams) -> (MultiGraph, Refutation) {
    let lg = build_family(params).unwrap();
    let opts = SearchOptions::default();
    let r = if params.family == Family::Special10Graph {
        check_special10(&lg.graph, &lg.decomposition(), &opts).unwrap()
    } else {
        refute_dock_graph(&lg.graph, &lg.decomposition(), params.d, &opts).unwrap()
    };
    (lg.graph, r)
}

fn criterion_3() -> Outcome {
    let mut bad = Vec::new();
    let mut slowest = 0.0f64;
    let cases = family_cases();
    for (params, lambda, chi) in &cases {
        let start = Instant::now();
        let (g, r) = refute(params);
        slowest = slowest.max(start.elapsed().as_secs_f64());
        let d = params.d as u64;
        let got = (
            min_degree(&g).unwrap(),
            edge_connectivity(&g).unwrap(),
            chromatic_number(&g, DEFAULT_COLORING_BUDGET).unwrap(),
        );
        let replay = r.replay(&g, true, &SearchOptions::default());
        if got != (d - 1, *lambda, *chi) || !r.holds() || replay.is_err() {
            bad.push(format!(
                "{} d={} bays={}: got {got:?}, want {:?}, holds {}, replay {replay:?}",
                params.family,
                params.d,
                params.n_bays,
                (d - 1, lambda, chi),
                r.holds()
            ));
        }
    }
    outcome(
        bad.is_empty(),
        format!(
            "{} instances, slowest refutation {slowest:.3}s; failures {bad:?}",
            cases.len()
        ),
    )
}

fn criterion_4() -> Outcome {
    let graphs = corpus(7);
    let opts = SearchOptions::default();
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for s in &graphs {
        let g = s.to_graph();
        for t in 3..=5 {
            let fast = find_immersion_with(&g, t, &opts).verdict;
            let slow = oracle_immerses(&g, t);
            let agree = match &fast {
                SearchVerdict::Immersed { certificate } => slow && verify_certificate(&g, certificate).is_ok(),
                SearchVerdict::NotImmersed { .. } => !slow,
                SearchVerdict::Unknown { .. } => false,
            };
            checked += 1;
            if !agree {
                mismatches.push((g.to_edge_list(), t));
            }
        }
    }
    outcome(
        graphs.len() == 996 && mismatches.is_empty(),
        format!(
            "{} corpus graphs, {checked} queries, {} disagreements",
            graphs.len(),
            mismatches.len()
        ),
    )
}

fn criterion_5() -> Outcome {
    let graphs: Vec<MultiGraph> = corpus(7).iter().map(|s| s.to_graph()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let unpruned = SearchOptions {
        cut_pruning: false,
        ..SearchOptions::default()
    };

    let mut split = 0;
    let mut immersed = 0;
    for _ in 0..500 {
        let t = rng.gen_range(4..=5);
        let left = if rng.gen_bool(0.5) {
            MultiGraph::complete(t)
        } else {
            graphs[rng.gen_range(0..graphs.len())].clone()
        };
        let right = graphs[rng.gen_range(0..graphs.len())].clone();
        let cut = rng.gen_range(1..=t - 2);
        let g = planted_cut(&left, &right, cut, &mut rng);
        for opts in [&SearchOptions::default(), &unpruned] {
            if let SearchVerdict::Immersed { certificate } = find_immersion_with(&g, t, opts).verdict {
                immersed += 1;
                let sides: Vec<bool> = certificate.corners.iter().map(|&c| c < left.order()).collect();
                if sides.iter().any(|&s| s != sides[0]) {
                    split += 1;
                }
            }
        }
    }

    let plain = SearchOptions {
        adjacent_corner_reduction: false,
        ..SearchOptions::default()
    };
    let mut toggled = 0;
    let mut low_degree_pegs = 0;
    for g in &graphs {
        for t in 3..=5 {
            let a = find_immersion_with(g, t, &SearchOptions::default()).verdict;
            let b = find_immersion_with(g, t, &plain).verdict;
            if a.kind() != b.kind() {
                toggled += 1;
            }
            for v in [&a, &b] {
                if let Some(cert) = v.certificate() {
                    low_degree_pegs += cert
                        .interior_vertices()
                        .iter()
                        .filter(|&&x| cert.corners.contains(&x) && g.degree(x) <= t as u64)
                        .count();
                }
            }
        }
    }
    outcome(
        split == 0 && toggled == 0 && low_degree_pegs == 0 && immersed > 0,
        format!(
            "corner split across small cut {split}/{immersed}; verdict changes from adjacent-corner reduction {toggled}; low-degree corners used as pegs {low_degree_pegs}"
        ),
    )
}

fn criterion_6() -> Outcome {
    let opts = SearchOptions::default();
    let pure = RandomTrialConfig::default();
    let mixed = RandomTrialConfig {
        allow_beta: true,
        ..RandomTrialConfig::default()
    };
    let mut lost = 0;
    let mut non_beta = 0;
    let mut beta_flips = 0;
    for seed in 0..200 {
        let r = random_trial(seed, &pure, &opts).unwrap();
        if !r.initial_immersed || r.flip_index.is_some() {
            lost += 1;
        }
        let m = random_trial(10_000 + seed, &mixed, &opts).unwrap();
        non_beta += usize::from(m.non_beta_flip);
        beta_flips += usize::from(m.flip_index.is_some() && !m.non_beta_flip);
    }
    outcome(
        lost == 0 && non_beta == 0,
        format!("200 alpha/gamma runs with {lost} losses; 200 mixed runs: {beta_flips} flips at beta, {non_beta} elsewhere"),
    )
}

fn criterion_7() -> Outcome {
    let mut bad = Vec::new();
    if !devos_feasible_params(11).is_empty() {
        bad.push("d=11 has parameters".to_string());
    }
    let want = DevosParams {
        d: 10,
        regularity: 2,
        t: 4,
        n: 12,
        parts: vec![3, 3, 3, 3],
    };
    if !devos_feasible_params(10).contains(&want) {
        bad.push("d=10 misses (2, 4, [3,3,3,3])".to_string());
    }
    let builds = [
        ((9, 1, 1), ConstructionParams::new(Family::Mkd, 9).connectivity(7)),
        ((9, 2, 1), ConstructionParams::new(Family::Mkd, 9).connectivity(7).bays(2)),
        ((10, 1, 2), ConstructionParams::fixed(Family::Special10Graph)),
    ];
    for ((d, b, p), params) in builds {
        let params = params.pods(PodCount::PerDockVertex(p)).attach(Attachment::Concentrated);
        let built = build_family(&params).unwrap().graph.order();
        let formula = mk_vertex_count(d, b, p).unwrap();
        if built != formula {
            bad.push(format!("({d},{b},{p}): built {built}, formula {formula}"));
        }
    }
    for d in 8..=20i64 {
        if !(1..d).all(|x| corner_split_margin(d, x) > 0) || !corner_split_infeasible(d as usize, d as u64 - 2) {
            bad.push(format!("corner split d={d}"));
        }
        if !(2..=d - 2).all(|k| bay_case_margin(d, k) > 0 && k * (d - k) > 2 * (d - 3)) {
            bad.push(format!("bay case d={d}"));
        }
    }
    outcome(bad.is_empty(), format!("failures {bad:?}"))
}

fn criterion_8() -> Outcome {
    let mut bad = Vec::new();
    let mut largest = 0;
    let mut searches = 0;
    for (params, _, _) in family_cases() {
        let (g, r) = refute(&params);
        largest = largest.max(g.order());
        let dock = r.decomposition.bays.iter().map(Vec::len).sum::<usize>();
        let biggest_pod = r.decomposition.pods.iter().map(Vec::len).max().unwrap_or(0);
        searches += count_rules(&r.root, &|rule| matches!(rule, Rule::PairingSearch { .. }));
        if dock > 28 || biggest_pod > params.d + 1 || !r.holds() {
            bad.push(format!("{} d={}: dock {dock}, pod {biggest_pod}", params.family, params.d));
        }
    }
    outcome(
        bad.is_empty(),
        format!("graphs up to {largest} vertices refuted piecewise with {searches} exhaustive pod searches; failures {bad:?}"),
    )
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 Seymour instance", criterion_1),
        ("2 pod suite", criterion_2),
        ("3 family verification", criterion_3),
        ("4 oracle equivalence", criterion_4),
        ("5 pruning replays", criterion_5),
        ("6 Hajos harness", criterion_6),
        ("7 formula calculators", criterion_7),
        ("8 scale", criterion_8),
    ];
    let mut failed = Vec::new();
    for (name, f) in criteria {
        let start = Instant::now();
        let o = f();
        // the raw handle bypasses libtest capture so the lines always show
        let _ = writeln!(
            std::io::stdout(),
            "criterion {name}: {} ({:.2}s) {}",
            if o.pass { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            o.detail
        );
        if !o.pass {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
