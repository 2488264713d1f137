//! Pods on `d + 1` vertices, obtained from `K_{d+1}` by deleting disjoint
//! structures. Structures occupy the lowest indices in the order listed; the
//! closing matching pairs the highest unused indices first.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multigraph::MultiGraph;

/// Pod shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PodKind {
    /// `K_9` minus three disjoint paths of length 2.
    P8,
    /// `K_{d+1}` minus three disjoint paths of length 2 and a maximum
    /// matching on the remaining vertices.
    Pd,
    /// Two paths of length 2 and a triangle.
    P5d,
    /// `k` vertices of degree `d - 2`.
    Pkd { k: usize },
    /// The 11-vertex piece of the 8-edge-connected `d = 10` example.
    Special10,
}

/// A pod with the vertices that receive one edge to the dock.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pod {
    pub kind: PodKind,
    pub d: usize,
    pub graph: MultiGraph,
    /// Vertices joined to the dock, one edge each.
    pub attachments: Vec<usize>,
}

#[derive(Clone, Copy)]
enum Removal {
    Path2,
    Cycle(usize),
    Edge,
}

impl Removal {
    fn len(self) -> usize {
        match self {
            Removal::Path2 => 3,
            Removal::Cycle(k) => k,
            Removal::Edge => 2,
        }
    }
}

/// Deletes the structures from `K_{order}` at consecutive low indices, then a
/// maximum matching on the rest when `matching` is set.
fn carve(order: usize, parts: &[Removal], matching: bool) -> Result<MultiGraph> {
    let used: usize = parts.iter().map(|p| p.len()).sum();
    if used > order {
        return Err(Error::InfeasibleParams(format!(
            "removals need {used} vertices but the pod has {order}"
        )));
    }
    let mut pairs = Vec::new();
    let mut at = 0;
    for &p in parts {
        match p {
            Removal::Path2 => pairs.extend([(at, at + 1), (at + 1, at + 2)]),
            Removal::Edge => pairs.push((at, at + 1)),
            Removal::Cycle(k) => pairs.extend((0..k).map(|i| (at + i, at + (i + 1) % k))),
        }
        at += p.len();
    }
    if matching {
        let mut hi = order;
        while hi >= at + 2 {
            pairs.push((hi - 2, hi - 1));
            hi -= 2;
        }
    }
    MultiGraph::complete(order).delete_edges(&pairs)
}

fn low_degree_vertices(g: &MultiGraph, d: usize) -> Vec<usize> {
    (0..g.order())
        .filter(|&v| g.degree(v) + 2 == d as u64)
        .collect()
}

pub fn build_pod(kind: PodKind, d: usize) -> Result<Pod> {
    let order = d + 1;
    let graph = match kind {
        PodKind::P8 => {
            if d != 8 {
                return Err(Error::InfeasibleParams("P8 is defined for d = 8 only".into()));
            }
            carve(9, &[Removal::Path2; 3], false)?
        }
        PodKind::Pd => {
            require(d >= 8, "Pd needs d >= 8")?;
            carve(order, &[Removal::Path2; 3], true)?
        }
        PodKind::P5d => {
            require(d >= 8, "P5d needs d >= 8")?;
            carve(
                order,
                &[Removal::Path2, Removal::Path2, Removal::Cycle(3)],
                true,
            )?
        }
        PodKind::Pkd { k } => {
            require(d >= 9, "Pkd needs d >= 9")?;
            require((7..=d - 2).contains(&k), "Pkd needs 7 <= k <= d - 2")?;
            let parts: Vec<Removal> = if k % 2 == 1 {
                vec![Removal::Path2, Removal::Cycle(3), Removal::Cycle(k - 4)]
            } else {
                require(k >= 10, "even k below 10 has no Pkd shape")?;
                let tail = if k - 9 == 1 {
                    Removal::Path2
                } else {
                    Removal::Cycle(k - 9)
                };
                vec![Removal::Cycle(3), Removal::Cycle(3), Removal::Cycle(3), tail]
            };
            carve(order, &parts, true)?
        }
        PodKind::Special10 => {
            require(d == 10, "the special pod is defined for d = 10 only")?;
            carve(
                11,
                &[
                    Removal::Cycle(3),
                    Removal::Cycle(3),
                    Removal::Edge,
                    Removal::Path2,
                ],
                false,
            )?
        }
    };
    let mut attachments = low_degree_vertices(&graph, d);
    if kind == PodKind::Special10 {
        // one end of the missing edge also reaches the dock
        attachments.push(6);
        attachments.sort_unstable();
    }
    Ok(Pod {
        kind,
        d,
        graph,
        attachments,
    })
}

fn require(ok: bool, msg: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InfeasibleParams(msg.into()))
    }
}
