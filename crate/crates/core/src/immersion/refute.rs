//! Structural refutation of `K_d` immersions in dock graphs.
//!
//! The argument is emitted as a tree of claims. Each leaf names a rule and
//! carries the numbers it rests on (cut sides, cut sizes, corner counts), so
//! [`Refutation::replay`] can recompute every cut from the graph and
//! re-evaluate the arithmetic without trusting the producer.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::pod::{check_pairings, is_pod_with};
use super::search::{corner_split_infeasible, SearchOptions};
use crate::error::{Error, Result};
use crate::multigraph::MultiGraph;

/// Bays in circular order and pods, as vertex sets.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub bays: Vec<Vec<usize>>,
    pub pods: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Rule {
    /// Holds iff every child holds.
    Conjunction,
    /// Bays and pods partition the vertex set.
    Partition { order: usize },
    BaySize { bay: usize, size: usize, limit: usize },
    /// Edges between two bays; `limit` is zero for non-consecutive bays.
    BayPair { first: usize, second: usize, edges: u64, limit: u64 },
    /// Every vertex in `attachments` has exactly one edge leaving the pod,
    /// no other pod vertex has one, and all of them end in `bay`.
    PodAttachment { pod: usize, bay: usize, attachments: Vec<usize> },
    /// Corners split across a small cut: `x(t - x) > cut` for `1 <= x < t`.
    CornerSplit { side: Vec<usize>, cut: u64, t: usize },
    /// Exhaustive search found no `K_t` immersion in the pod plus any
    /// maximum pairing of its attachment vertices.
    PairingSearch {
        pod: usize,
        same_as: Option<usize>,
        pairings: usize,
        nodes: u64,
        t: usize,
    },
    /// Fewer dock vertices than corners.
    SmallDock { dock_vertices: usize, t: usize },
    /// `k(t - k) > cut` for `k_min <= k <= k_max`.
    BayCorners {
        bay: usize,
        side: Vec<usize>,
        cut: u64,
        t: usize,
        k_min: usize,
        k_max: usize,
    },
    /// Fewer bays than corners, so some bay holds two corners.
    FewBays { bays: usize, t: usize },
    /// An arc of bays holding exactly two corners: `2(t - 2) > cut`.
    ArcCorners { start: usize, len: usize, side: Vec<usize>, cut: u64, t: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub statement: String,
    pub rule: Rule,
    pub holds: bool,
    pub children: Vec<Claim>,
}

impl Claim {
    fn leaf(statement: impl Into<String>, rule: Rule, holds: bool) -> Self {
        Claim {
            statement: statement.into(),
            rule,
            holds,
            children: Vec::new(),
        }
    }

    fn all(statement: impl Into<String>, children: Vec<Claim>) -> Self {
        Claim {
            statement: statement.into(),
            holds: children.iter().all(|c| c.holds),
            rule: Rule::Conjunction,
            children,
        }
    }

    fn first_failure(&self) -> Option<&Claim> {
        if self.holds {
            return None;
        }
        self.children
            .iter()
            .find_map(|c| c.first_failure())
            .or(Some(self))
    }

    pub fn count(&self) -> usize {
        1 + self.children.iter().map(Claim::count).sum::<usize>()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Refutation {
    pub t: usize,
    pub graph_hash: String,
    pub decomposition: Decomposition,
    pub root: Claim,
}

impl Refutation {
    pub fn holds(&self) -> bool {
        self.root.holds
    }

    /// Recomputes every cut and inequality against `g`. Pod searches are
    /// re-run when `rerun_searches` is set.
    pub fn replay(&self, g: &MultiGraph, rerun_searches: bool, opts: &SearchOptions) -> std::result::Result<(), String> {
        if g.canonical_hash() != self.graph_hash {
            return Err("graph hash differs".into());
        }
        let replayer = Replayer {
            g,
            dec: &self.decomposition,
            rerun: rerun_searches,
            opts,
        };
        let holds = replayer.check(&self.root)?;
        if !holds {
            return Err("root claim does not hold".into());
        }
        Ok(())
    }
}

struct Replayer<'a> {
    g: &'a MultiGraph,
    dec: &'a Decomposition,
    rerun: bool,
    opts: &'a SearchOptions,
}

impl Replayer<'_> {
    fn cut(&self, side: &[usize]) -> std::result::Result<u64, String> {
        self.g.edge_cut_size(side).map_err(|e| e.to_string())
    }

    fn check(&self, c: &Claim) -> std::result::Result<bool, String> {
        let mut kids = true;
        for child in &c.children {
            kids &= self.check(child)?;
        }
        let expect = match &c.rule {
            Rule::Conjunction => kids,
            Rule::Partition { order } => {
                *order == self.g.order() && partition_defect(self.g.order(), self.dec).is_none()
            }
            Rule::BaySize { bay, size, limit } => {
                self.dec.bays.get(*bay).map(Vec::len) == Some(*size) && size <= limit
            }
            Rule::BayPair {
                first,
                second,
                edges,
                limit,
            } => {
                let (a, b) = (&self.dec.bays[*first], &self.dec.bays[*second]);
                edges_between(self.g, a, b) == *edges && edges <= limit
            }
            Rule::PodAttachment {
                pod,
                bay,
                attachments,
            } => {
                let found = pod_exits(self.g, &self.dec.pods[*pod]);
                found.attachments == *attachments
                    && found.single_exit
                    && found.targets.iter().all(|t| self.dec.bays[*bay].contains(t))
            }
            Rule::CornerSplit { side, cut, t } => {
                self.cut(side)? == *cut && corner_split_infeasible(*t, *cut)
            }
            Rule::PairingSearch { pod, t, .. } => {
                if self.rerun {
                    let verts = &self.dec.pods[*pod];
                    let exits = pod_exits(self.g, verts);
                    let local = local_attachments(verts, &exits.attachments);
                    let check = check_pairings(&self.g.induced_subgraph(verts), &local, *t, self.opts)
                        .map_err(|e| e.to_string())?;
                    check.failure.is_none()
                } else {
                    c.holds
                }
            }
            Rule::SmallDock { dock_vertices, t } => {
                let dock: usize = self.dec.bays.iter().map(Vec::len).sum();
                dock == *dock_vertices && dock < *t
            }
            Rule::BayCorners {
                side,
                cut,
                t,
                k_min,
                k_max,
                ..
            } => {
                self.cut(side)? == *cut
                    && (*k_min..=*k_max).all(|k| (k as u64) * ((t - k) as u64) > *cut)
            }
            Rule::FewBays { bays, t } => *bays == self.dec.bays.len() && bays < t,
            Rule::ArcCorners { side, cut, t, .. } => {
                self.cut(side)? == *cut && 2 * (*t as u64 - 2) > *cut
            }
        };
        if expect != c.holds {
            return Err(format!("claim {:?} does not replay", c.statement));
        }
        Ok(c.holds)
    }
}

fn partition_defect(order: usize, dec: &Decomposition) -> Option<String> {
    let mut owner = vec![None; order];
    for (kind, sets) in [("bay", &dec.bays), ("pod", &dec.pods)] {
        for (i, set) in sets.iter().enumerate() {
            if set.is_empty() {
                return Some(format!("{kind} {i} is empty"));
            }
            for &v in set {
                if v >= order {
                    return Some(format!("{kind} {i} names vertex {v} outside the graph"));
                }
                if let Some(prev) = owner[v].replace((kind, i)) {
                    return Some(format!("vertex {v} lies in {prev:?} and {kind} {i}"));
                }
            }
        }
    }
    owner
        .iter()
        .position(Option::is_none)
        .map(|v| format!("vertex {v} is in no bay or pod"))
}

fn edges_between(g: &MultiGraph, a: &[usize], b: &[usize]) -> u64 {
    a.iter()
        .flat_map(|&u| b.iter().map(move |&v| (u, v)))
        .map(|(u, v)| g.multiplicity(u, v) as u64)
        .sum()
}

struct Exits {
    attachments: Vec<usize>,
    targets: Vec<usize>,
    single_exit: bool,
}

fn pod_exits(g: &MultiGraph, pod: &[usize]) -> Exits {
    let mut inside = vec![false; g.order()];
    for &v in pod {
        inside[v] = true;
    }
    let mut out = Exits {
        attachments: Vec::new(),
        targets: Vec::new(),
        single_exit: true,
    };
    let mut sorted = pod.to_vec();
    sorted.sort_unstable();
    for v in sorted {
        let mut exits = 0u64;
        for (w, c) in g.neighbors(v) {
            if !inside[w] {
                exits += c as u64;
                out.targets.push(w);
            }
        }
        if exits > 0 {
            out.attachments.push(v);
            out.single_exit &= exits == 1;
        }
    }
    out
}

fn local_attachments(pod: &[usize], attachments: &[usize]) -> Vec<usize> {
    attachments
        .iter()
        .map(|a| pod.iter().position(|v| v == a).expect("attachment lies in pod"))
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum PodRule {
    /// Attachments must be the degree-`(d-2)` vertices; the pod definition
    /// is checked.
    Pod,
    /// Attachments are whatever has an edge out; all pairings are checked.
    Pairings,
}

fn violated(msg: String) -> Error {
    Error::HypothesisViolated(msg)
}

fn refute(g: &MultiGraph, dec: &Decomposition, t: usize, opts: &SearchOptions, mode: PodRule) -> Result<Refutation> {
    if t < 4 {
        return Err(Error::InfeasibleParams("dock refutation needs d >= 4".into()));
    }
    if let Some(msg) = partition_defect(g.order(), dec) {
        return Err(violated(msg));
    }
    let n_bays = dec.bays.len();
    let mut bay_of = vec![usize::MAX; g.order()];
    for (i, bay) in dec.bays.iter().enumerate() {
        for &v in bay {
            bay_of[v] = i;
        }
    }

    // hypotheses
    let mut hyp = vec![Claim::leaf(
        "bays and pods partition the vertices",
        Rule::Partition { order: g.order() },
        true,
    )];
    for (i, bay) in dec.bays.iter().enumerate() {
        let limit = t - 2;
        if bay.len() > limit {
            return Err(violated(format!("bay {i} has {} > {limit} vertices", bay.len())));
        }
        hyp.push(Claim::leaf(
            format!("bay {i} has at most {limit} vertices"),
            Rule::BaySize {
                bay: i,
                size: bay.len(),
                limit,
            },
            true,
        ));
    }
    for i in 0..n_bays {
        for j in (i + 1)..n_bays {
            let consecutive = j == i + 1 || (i == 0 && j == n_bays - 1);
            let limit = match (consecutive, n_bays) {
                (false, _) => 0,
                (true, 2) => 2 * (t as u64 - 3),
                (true, _) => t as u64 - 3,
            };
            let edges = edges_between(g, &dec.bays[i], &dec.bays[j]);
            if edges > limit {
                return Err(violated(format!(
                    "bays {i} and {j} share {edges} edges, more than {limit}"
                )));
            }
            hyp.push(Claim::leaf(
                format!("bays {i} and {j} share at most {limit} edges"),
                Rule::BayPair {
                    first: i,
                    second: j,
                    edges,
                    limit,
                },
                true,
            ));
        }
    }
    let mut pod_bay = Vec::with_capacity(dec.pods.len());
    let mut pod_attach = Vec::with_capacity(dec.pods.len());
    for (p, pod) in dec.pods.iter().enumerate() {
        let exits = pod_exits(g, pod);
        if !exits.single_exit {
            return Err(violated(format!("a vertex of pod {p} has several edges out")));
        }
        let bays: Vec<usize> = exits.targets.iter().map(|&w| bay_of[w]).collect();
        let Some(&bay) = bays.first() else {
            return Err(violated(format!("pod {p} has no edge to the dock")));
        };
        if bays.iter().any(|&b| b != bay) || bay == usize::MAX {
            return Err(violated(format!("pod {p} reaches outside a single bay")));
        }
        hyp.push(Claim::leaf(
            format!("pod {p} is attached to bay {bay} by one edge per attachment vertex"),
            Rule::PodAttachment {
                pod: p,
                bay,
                attachments: exits.attachments.clone(),
            },
            true,
        ));
        pod_bay.push(bay);
        pod_attach.push(exits.attachments);
    }
    let hypotheses = Claim::all("the decomposition meets the dock hypotheses", hyp);

    // corners are confined to one pod or to the dock
    let mut splits = Vec::new();
    for (p, pod) in dec.pods.iter().enumerate() {
        let cut = g.edge_cut_size(pod)?;
        if !corner_split_infeasible(t, cut) {
            return Err(violated(format!("pod {p} has {cut} edges out, too many to separate corners")));
        }
        let mut side = pod.clone();
        side.sort_unstable();
        splits.push(Claim::leaf(
            format!("no corner split across the {cut} edges leaving pod {p}"),
            Rule::CornerSplit { side, cut, t },
            true,
        ));
    }
    let confined = Claim::all("all corners lie in one pod or all lie in the dock", splits);

    // no pod hosts every corner
    let mut cache: HashMap<(String, Vec<usize>), (usize, usize, u64)> = HashMap::new();
    let mut pod_claims = Vec::new();
    for (p, pod) in dec.pods.iter().enumerate() {
        let local_graph = g.induced_subgraph(pod).without_labels();
        let local = local_attachments(pod, &pod_attach[p]);
        let key = (local_graph.to_edge_list(), local.clone());
        let (same_as, pairings, nodes) = if let Some(&(first, pairings, nodes)) = cache.get(&key) {
            (Some(first), pairings, nodes)
        } else {
            let (pairings, nodes) = match mode {
                PodRule::Pod => {
                    let lows: Vec<usize> = (0..local_graph.order())
                        .filter(|&v| local_graph.degree(v) + 2 == t as u64)
                        .collect();
                    if lows != local {
                        return Err(violated(format!(
                            "pod {p} attaches {local:?}, not its degree-{} vertices {lows:?}",
                            t - 2
                        )));
                    }
                    let report = is_pod_with(&local_graph, t, opts)?;
                    if !report.is_pod {
                        return Err(violated(format!("pod {p} is not a {t}-pod")));
                    }
                    (report.matchings_checked, report.outcomes.iter().map(|o| o.nodes).sum())
                }
                PodRule::Pairings => {
                    let check = check_pairings(&local_graph, &local, t, opts)?;
                    if check.failure.is_some() {
                        return Err(violated(format!(
                            "pod {p} plus a pairing of its attachments holds K_{t}"
                        )));
                    }
                    (check.outcomes.len(), check.nodes())
                }
            };
            cache.insert(key, (p, pairings, nodes));
            (None, pairings, nodes)
        };
        pod_claims.push(Claim::leaf(
            format!("pod {p} with any pairing of its {} attachments has no K_{t}", local.len()),
            Rule::PairingSearch {
                pod: p,
                same_as,
                pairings,
                nodes,
                t,
            },
            true,
        ));
    }
    let pods_clear = Claim::all("no pod holds every corner", pod_claims);

    // the dock cannot hold every corner
    let dock_vertices: usize = dec.bays.iter().map(Vec::len).sum();
    let with_pods = |bays: &[usize]| -> Vec<usize> {
        let mut side: Vec<usize> = bays.iter().flat_map(|&b| dec.bays[b].iter().copied()).collect();
        for (p, pod) in dec.pods.iter().enumerate() {
            if bays.contains(&pod_bay[p]) {
                side.extend(pod);
            }
        }
        side.sort_unstable();
        side
    };
    let dock = if dock_vertices < t {
        Claim::leaf(
            format!("the dock has {dock_vertices} < {t} vertices"),
            Rule::SmallDock { dock_vertices, t },
            true,
        )
    } else {
        let mut case1 = Vec::new();
        for (i, bay) in dec.bays.iter().enumerate() {
            let k_max = bay.len().min(t - 2);
            if k_max < 2 {
                continue;
            }
            let side = with_pods(&[i]);
            let cut = g.edge_cut_size(&side)?;
            let holds = (2..=k_max).all(|k| (k as u64) * ((t - k) as u64) > cut);
            case1.push(Claim::leaf(
                format!("bay {i} cannot hold between 2 and {k_max} corners"),
                Rule::BayCorners {
                    bay: i,
                    side,
                    cut,
                    t,
                    k_min: 2,
                    k_max,
                },
                holds,
            ));
        }
        let case2 = if n_bays < t {
            Claim::leaf(
                format!("{n_bays} bays cannot hold {t} corners one per bay"),
                Rule::FewBays { bays: n_bays, t },
                true,
            )
        } else {
            let mut arcs = Vec::new();
            for start in 0..n_bays {
                for len in 2..n_bays {
                    let bays: Vec<usize> = (0..len).map(|s| (start + s) % n_bays).collect();
                    let side = with_pods(&bays);
                    let cut = g.edge_cut_size(&side)?;
                    arcs.push(Claim::leaf(
                        format!("the arc of {len} bays from bay {start} cannot hold exactly two corners"),
                        Rule::ArcCorners {
                            start,
                            len,
                            side,
                            cut,
                            t,
                        },
                        2 * (t as u64 - 2) > cut,
                    ));
                }
            }
            Claim::all("corners cannot be spread one per bay", arcs)
        };
        Claim::all(
            "the dock does not hold every corner",
            vec![Claim::all("no bay holds two or more corners", case1), case2],
        )
    };

    let root = Claim::all(
        format!("no immersion of K_{t}"),
        vec![hypotheses, confined, pods_clear, dock],
    );
    Ok(Refutation {
        t,
        graph_hash: g.canonical_hash(),
        decomposition: dec.clone(),
        root,
    })
}

/// Refutes a `K_d` immersion in a dock graph from its decomposition. The
/// result may still fail (`holds() == false`) if the dock arithmetic does
/// not close; hypothesis failures are errors.
pub fn refute_dock_graph(
    g: &MultiGraph,
    decomposition: &Decomposition,
    d: usize,
    opts: &SearchOptions,
) -> Result<Refutation> {
    refute(g, decomposition, d, opts, PodRule::Pod)
}

/// Refutes a `K_10` immersion for the special `d = 10` graph, whose pieces
/// have eleven vertices and eight dock edges.
pub fn check_special10(g: &MultiGraph, decomposition: &Decomposition, opts: &SearchOptions) -> Result<Refutation> {
    for (p, pod) in decomposition.pods.iter().enumerate() {
        if pod.len() != 11 {
            return Err(violated(format!("piece {p} has {} vertices, not 11", pod.len())));
        }
    }
    let r = refute(g, decomposition, 10, opts, PodRule::Pairings)?;
    if let Some(bad) = r.root.first_failure() {
        return Err(violated(bad.statement.clone()));
    }
    Ok(r)
}

/// First claim that fails, for diagnostics.
pub fn first_failure(r: &Refutation) -> Option<&Claim> {
    r.root.first_failure()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_family, ConstructionParams, Family};

    #[test]
    fn g8_refutation_replays() {
        let lg = build_family(&ConstructionParams::new(Family::Gd, 8)).unwrap();
        let opts = SearchOptions::default();
        let r = refute_dock_graph(&lg.graph, &lg.decomposition(), 8, &opts).unwrap();
        assert!(r.holds());
        assert!(matches!(r.root.children[3].rule, Rule::SmallDock { .. }));
        r.replay(&lg.graph, true, &opts).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        let back: Refutation = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn tampered_claims_fail_replay() {
        let lg = build_family(&ConstructionParams::new(Family::Gnd, 8).bays(2)).unwrap();
        let opts = SearchOptions::default();
        let mut r = refute_dock_graph(&lg.graph, &lg.decomposition(), 8, &opts).unwrap();
        r.replay(&lg.graph, false, &opts).unwrap();
        if let Rule::CornerSplit { cut, .. } = &mut r.root.children[1].children[0].rule {
            *cut -= 1;
        } else {
            panic!("unexpected claim layout");
        }
        assert!(r.replay(&lg.graph, false, &opts).is_err());
    }

    #[test]
    fn dense_consecutive_bays_violate() {
        let lg = build_family(&ConstructionParams::new(Family::Gnd, 8).bays(3)).unwrap();
        let mut g = lg.graph.clone();
        let b0 = lg.bay_vertices(0);
        let b1 = lg.bay_vertices(1);
        // bring the edge count between bays 0 and 1 up to d - 2 = 6
        let mut added = edges_between(&g, &b0, &b1);
        'outer: for &u in &b0 {
            for &v in &b1 {
                if added >= 6 {
                    break 'outer;
                }
                if !g.is_adjacent(u, v) {
                    g.add_edge(u, v).unwrap();
                    added += 1;
                }
            }
        }
        let err = refute_dock_graph(&g, &lg.decomposition(), 8, &SearchOptions::default()).unwrap_err();
        assert!(matches!(err, Error::HypothesisViolated(_)));
    }

    #[test]
    fn special10_missing_piece() {
        let lg = build_family(&ConstructionParams::fixed(Family::Special10Graph)).unwrap();
        let mut dec = lg.decomposition();
        dec.pods.pop();
        assert!(matches!(
            check_special10(&lg.graph, &dec, &SearchOptions::default()),
            Err(Error::HypothesisViolated(_))
        ));
    }
}
