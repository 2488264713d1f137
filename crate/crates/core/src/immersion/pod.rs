use serde::{Deserialize, Serialize};

use super::certificate::ImmersionCertificate;
use super::search::{find_immersion_with, Budget, SearchOptions, SearchVerdict};
use crate::error::{Error, Result};
use crate::multigraph::MultiGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GadgetKind {
    /// Odd cycle of missing edges inside `A`.
    OddCycleInA,
    /// Missing path `b - a - b'` with its centre in `A` and ends in `B`.
    Path2BAB,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gadget {
    pub kind: GadgetKind,
    /// Cycle order for cycles; `[b, a, b']` for paths.
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingOutcome {
    pub matching: Vec<(usize, usize)>,
    pub immersed: bool,
    pub nodes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PodFailure {
    LowDegree { vertex: usize, degree: u64 },
    TooManyLowDegree { count: usize, limit: usize },
    Immersion {
        matching: Vec<(usize, usize)>,
        certificate: ImmersionCertificate,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PodReport {
    pub d: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub gadgets: Vec<Gadget>,
    /// Simple, `d + 1` vertices, `|A| <= d - 2` and at least three gadgets.
    pub gadget_condition: bool,
    pub matchings_checked: usize,
    pub outcomes: Vec<MatchingOutcome>,
    pub is_pod: bool,
    pub failure: Option<PodFailure>,
}

/// Every maximum matching of the complete graph on `vertices`: perfect
/// matchings for an even count, otherwise one vertex left out.
pub fn maximum_pairings(vertices: &[usize]) -> Vec<Vec<(usize, usize)>> {
    fn perfect(rest: &[usize], acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        let Some((&first, tail)) = rest.split_first() else {
            out.push(acc.clone());
            return;
        };
        for i in 0..tail.len() {
            acc.push((first, tail[i]));
            let remaining: Vec<usize> = tail
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &v)| v)
                .collect();
            perfect(&remaining, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if vertices.len().is_multiple_of(2) {
        perfect(vertices, &mut Vec::new(), &mut out);
    } else {
        for skip in 0..vertices.len() {
            let rest: Vec<usize> = vertices
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != skip)
                .map(|(_, &v)| v)
                .collect();
            perfect(&rest, &mut Vec::new(), &mut out);
        }
    }
    out
}

/// Outcome of testing `g` plus each maximum pairing of `attachments`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairingCheck {
    pub outcomes: Vec<MatchingOutcome>,
    pub failure: Option<(Vec<(usize, usize)>, ImmersionCertificate)>,
}

impl PairingCheck {
    pub fn nodes(&self) -> u64 {
        self.outcomes.iter().map(|o| o.nodes).sum()
    }
}

/// Searches for a `K_t` immersion in `g` plus every maximum pairing of
/// `attachments`; pairs may duplicate existing edges.
pub fn check_pairings(
    g: &MultiGraph,
    attachments: &[usize],
    t: usize,
    opts: &SearchOptions,
) -> Result<PairingCheck> {
    let mut check = PairingCheck {
        outcomes: Vec::new(),
        failure: None,
    };
    for matching in maximum_pairings(attachments) {
        let plus = g.with_edges(&matching)?;
        let outcome = match find_immersion_with(&plus, t, opts).verdict {
            SearchVerdict::Immersed { certificate } => {
                if check.failure.is_none() {
                    check.failure = Some((matching.clone(), certificate));
                }
                MatchingOutcome {
                    matching,
                    immersed: true,
                    nodes: 0,
                }
            }
            SearchVerdict::NotImmersed { nodes_explored } => MatchingOutcome {
                matching,
                immersed: false,
                nodes: nodes_explored,
            },
            SearchVerdict::Unknown { budget_spent } => {
                return Err(Error::BudgetExceeded(budget_spent));
            }
        };
        check.outcomes.push(outcome);
    }
    Ok(check)
}

fn odd_missing_cycles(g: &MultiGraph, a: &[usize], cap: usize) -> Vec<Vec<usize>> {
    let missing = |u: usize, v: usize| u != v && !g.is_adjacent(u, v);
    let mut out = Vec::new();
    fn walk(
        path: &mut Vec<usize>,
        a: &[usize],
        missing: &dyn Fn(usize, usize) -> bool,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) {
        if out.len() >= cap {
            return;
        }
        let start = path[0];
        let last = *path.last().expect("non-empty");
        for &w in a {
            if w <= start || path.contains(&w) || !missing(last, w) {
                continue;
            }
            path.push(w);
            if path.len() >= 3
                && path.len() % 2 == 1
                && missing(w, start)
                && path[1] < w
            {
                out.push(path.clone());
            }
            walk(path, a, missing, out, cap);
            path.pop();
        }
    }
    for &s in a {
        walk(&mut vec![s], a, &missing, &mut out, cap);
    }
    out
}

/// A largest family of vertex-disjoint gadgets. Only meaningful for simple
/// graphs on `d + 1` vertices; other inputs give an empty list.
pub fn detect_gadgets(g: &MultiGraph, d: usize) -> Vec<Gadget> {
    let n = g.order();
    if n != d + 1 || !g.is_simple() || n > 64 {
        return Vec::new();
    }
    let in_a: Vec<bool> = (0..n).map(|v| g.degree(v) + 2 == d as u64).collect();
    let a: Vec<usize> = (0..n).filter(|&v| in_a[v]).collect();
    let b: Vec<usize> = (0..n).filter(|&v| !in_a[v]).collect();

    let mut candidates: Vec<Gadget> = odd_missing_cycles(g, &a, 100_000)
        .into_iter()
        .map(|vertices| Gadget {
            kind: GadgetKind::OddCycleInA,
            vertices,
        })
        .collect();
    for &x in &a {
        for (i, &b1) in b.iter().enumerate() {
            for &b2 in &b[i + 1..] {
                if !g.is_adjacent(x, b1) && !g.is_adjacent(x, b2) {
                    candidates.push(Gadget {
                        kind: GadgetKind::Path2BAB,
                        vertices: vec![b1, x, b2],
                    });
                }
            }
        }
    }
    let masks: Vec<u64> = candidates
        .iter()
        .map(|c| c.vertices.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();

    struct Packing<'a> {
        masks: &'a [u64],
        best: Vec<usize>,
        current: Vec<usize>,
    }
    impl Packing<'_> {
        fn go(&mut self, from: usize, used: u64) {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            let free = 64 - used.count_ones() as usize;
            if self.current.len() + free / 3 <= self.best.len() {
                return;
            }
            for i in from..self.masks.len() {
                if self.masks[i] & used == 0 {
                    self.current.push(i);
                    self.go(i + 1, used | self.masks[i]);
                    self.current.pop();
                }
            }
        }
    }
    let full = if n == 64 { 0 } else { !0u64 << n };
    let mut packing = Packing {
        masks: &masks,
        best: Vec::new(),
        current: Vec::new(),
    };
    packing.go(0, full);
    packing
        .best
        .iter()
        .map(|&i| candidates[i].clone())
        .collect()
}

/// Checks the pod conditions for `candidate` with default search options.
pub fn is_pod(candidate: &MultiGraph, d: usize, budget: Budget) -> Result<PodReport> {
    is_pod_with(candidate, d, &SearchOptions::with_budget(budget))
}

pub fn is_pod_with(candidate: &MultiGraph, d: usize, opts: &SearchOptions) -> Result<PodReport> {
    let n = candidate.order();
    let low = d as u64 - 2;
    let a: Vec<usize> = (0..n).filter(|&v| candidate.degree(v) == low).collect();
    let b: Vec<usize> = (0..n).filter(|&v| candidate.degree(v) != low).collect();
    let gadgets = detect_gadgets(candidate, d);
    let mut report = PodReport {
        d,
        gadget_condition: false,
        matchings_checked: 0,
        outcomes: Vec::new(),
        is_pod: false,
        failure: None,
        gadgets,
        a,
        b,
    };
    if let Some(v) = (0..n).find(|&v| candidate.degree(v) < low) {
        report.failure = Some(PodFailure::LowDegree {
            vertex: v,
            degree: candidate.degree(v),
        });
        return Ok(report);
    }
    if report.a.len() > d - 2 {
        report.failure = Some(PodFailure::TooManyLowDegree {
            count: report.a.len(),
            limit: d - 2,
        });
        return Ok(report);
    }
    report.gadget_condition =
        n == d + 1 && candidate.is_simple() && report.gadgets.len() >= 3;

    let check = check_pairings(candidate, &report.a, d, opts)?;
    report.matchings_checked = check.outcomes.len();
    report.outcomes = check.outcomes;
    report.is_pod = check.failure.is_none();
    report.failure = check
        .failure
        .map(|(matching, certificate)| PodFailure::Immersion {
            matching,
            certificate,
        });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_pod, PodKind};

    #[test]
    fn pairing_counts() {
        assert_eq!(maximum_pairings(&[]).len(), 1);
        assert_eq!(maximum_pairings(&[0]).len(), 1);
        assert_eq!(maximum_pairings(&[0, 1, 2]).len(), 3);
        assert_eq!(maximum_pairings(&[0, 1, 2, 3]).len(), 3);
        assert_eq!(maximum_pairings(&[0, 1, 2, 3, 4]).len(), 15);
        assert_eq!(maximum_pairings(&(0..7).collect::<Vec<_>>()).len(), 105);
        assert_eq!(maximum_pairings(&(0..8).collect::<Vec<_>>()).len(), 105);
        for m in maximum_pairings(&[3, 5, 8, 9, 11]) {
            assert_eq!(m.len(), 2);
            let mut seen: Vec<usize> = m.iter().flat_map(|&(u, v)| [u, v]).collect();
            seen.sort_unstable();
            seen.dedup();
            assert_eq!(seen.len(), 4);
        }
    }

    #[test]
    fn p8_is_a_pod() {
        let p = build_pod(PodKind::P8, 8).unwrap();
        let r = is_pod(&p.graph, 8, Budget::default()).unwrap();
        assert!(r.is_pod);
        assert_eq!(r.matchings_checked, 3);
        assert_eq!(r.gadgets.len(), 3);
        assert!(r.gadgets.iter().all(|g| g.kind == GadgetKind::Path2BAB));
        assert!(r.gadget_condition);
    }

    #[test]
    fn p5_9_gadgets() {
        let p = build_pod(PodKind::P5d, 9).unwrap();
        let gadgets = detect_gadgets(&p.graph, 9);
        assert_eq!(gadgets.len(), 3);
        let cycles = gadgets.iter().filter(|g| g.kind == GadgetKind::OddCycleInA).count();
        assert_eq!(cycles, 1);
    }

    #[test]
    fn complete_graph_is_not_a_pod() {
        let r = is_pod(&MultiGraph::complete(9), 8, Budget::default()).unwrap();
        assert!(!r.is_pod);
        assert!(r.a.is_empty());
        assert!(r.gadgets.is_empty());
        assert!(matches!(r.failure, Some(PodFailure::Immersion { .. })));
    }

    #[test]
    fn degree_conditions() {
        let r = is_pod(&MultiGraph::complete(6), 8, Budget::default()).unwrap();
        assert!(matches!(r.failure, Some(PodFailure::LowDegree { .. })));
        // K_9 minus a perfect-ish matching has 8 vertices of degree 7 = d - 2 for d = 9,
        // more than d - 2 = 7
        let g = MultiGraph::complete(9)
            .delete_edges(&[(0, 1), (2, 3), (4, 5), (6, 7)])
            .unwrap();
        let r = is_pod(&g, 9, Budget::default()).unwrap();
        assert!(matches!(r.failure, Some(PodFailure::TooManyLowDegree { count: 8, limit: 7 })));
    }
}
