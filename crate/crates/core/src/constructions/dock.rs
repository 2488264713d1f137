use serde::{Deserialize, Serialize};

use super::pods::Pod;
use super::{LabeledGraph, PodInfo};
use crate::error::{Error, Result};
use crate::multigraph::MultiGraph;

/// Complete bays of `bay_size` vertices in a circle. Vertex `a^i_j` of bay
/// `i` (with `1 <= j <= bay_size`) gets index `i * bay_size + j - 1`, and
/// `a^i_j ~ a^{i-1}_{d-1-j}` for `j <= ceil((d-2)/2)` when there are at
/// least two bays.
pub fn build_dock(d: usize, n_bays: usize, bay_size: usize) -> Result<LabeledGraph> {
    if n_bays == 0 || bay_size == 0 {
        return Err(Error::InfeasibleParams("a dock needs a non-empty bay".into()));
    }
    if d < 4 || bay_size > d - 2 {
        return Err(Error::InfeasibleParams(format!(
            "bay size {bay_size} exceeds d - 2 for d = {d}"
        )));
    }
    if n_bays > 1 && bay_size != d - 2 {
        return Err(Error::InfeasibleParams(
            "bays in a multi-bay dock have d - 2 vertices".into(),
        ));
    }
    let mut out = LabeledGraph::new(MultiGraph::new(n_bays * bay_size), d);
    let at = |i: usize, j: usize| i * bay_size + j - 1;
    for i in 0..n_bays {
        for j in 1..=bay_size {
            let v = at(i, j);
            out.bay_of.insert(v, i);
            out.bay_coordinate.insert(v, (i, j));
            out.graph.set_label(v, format!("a{i}_{j}"));
            for l in (j + 1)..=bay_size {
                out.graph.add_edge(v, at(i, l))?;
            }
        }
    }
    if n_bays > 1 {
        for i in 0..n_bays {
            let prev = (i + n_bays - 1) % n_bays;
            for j in 1..=(d - 2).div_ceil(2) {
                out.graph.add_simple_edge(at(i, j), at(prev, d - 1 - j))?;
            }
        }
    }
    out.n_bays = n_bays;
    Ok(out)
}

/// A pod together with the dock vertices its attachment vertices go to.
#[derive(Clone, Debug)]
pub struct PodPlacement {
    pub pod: Pod,
    pub bay: usize,
    /// Dock vertex for each entry of `pod.attachments`.
    pub targets: Vec<usize>,
}

/// How many pods each bay receives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PodCount {
    /// Fewest pods that make the bay full under the chosen strategy.
    MinimumToFill,
    PerBay(usize),
    PerDockVertex(usize),
}

/// One explicitly placed pod: bay index and bay-local targets (`j - 1`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExplicitPod {
    pub bay: usize,
    pub targets: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Attachment {
    /// Every pod sends all of its dock edges to one bay vertex.
    Concentrated,
    /// Each dock edge goes to the most deficient bay vertex, then to the one
    /// with fewest pod edges so far, lowest index first.
    RoundRobin,
    Explicit(Vec<ExplicitPod>),
}

fn deficiency(g: &MultiGraph, v: usize, d: usize) -> usize {
    (d as u64 - 1).saturating_sub(g.degree(v)) as usize
}

/// Chooses pod targets for every bay of `dock`.
pub fn plan_attachment(
    dock: &LabeledGraph,
    template: &Pod,
    count: PodCount,
    strategy: &Attachment,
) -> Result<Vec<PodPlacement>> {
    let d = dock.d;
    let width = template.attachments.len();
    if width == 0 {
        return Err(Error::InfeasibleParams("pod has no attachment vertices".into()));
    }
    let mut out = Vec::new();
    if let Attachment::Explicit(list) = strategy {
        for p in list {
            let bay = dock.bay_vertices(p.bay);
            if bay.is_empty() || p.targets.len() != width {
                return Err(Error::InfeasibleParams(format!(
                    "explicit pod for bay {} has {} targets, expected {width}",
                    p.bay,
                    p.targets.len()
                )));
            }
            let targets = p
                .targets
                .iter()
                .map(|&j| {
                    bay.get(j).copied().ok_or_else(|| {
                        Error::InfeasibleParams(format!("bay {} has no vertex {j}", p.bay))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            out.push(PodPlacement {
                pod: template.clone(),
                bay: p.bay,
                targets,
            });
        }
        return Ok(out);
    }

    for bay_index in 0..dock.n_bays {
        let bay = dock.bay_vertices(bay_index);
        let mut need: Vec<usize> = bay.iter().map(|&v| deficiency(&dock.graph, v, d)).collect();
        let place = |targets: Vec<usize>| PodPlacement {
            pod: template.clone(),
            bay: bay_index,
            targets,
        };
        match strategy {
            Attachment::Concentrated => {
                let per_vertex: Vec<usize> = match count {
                    PodCount::MinimumToFill => need.iter().map(|&x| x.div_ceil(width)).collect(),
                    PodCount::PerDockVertex(p) => vec![p; bay.len()],
                    PodCount::PerBay(m) => {
                        let mut counts = vec![0usize; bay.len()];
                        for _ in 0..m {
                            let i = (0..bay.len())
                                .max_by(|&a, &b| need[a].cmp(&need[b]).then(b.cmp(&a)))
                                .expect("bay is non-empty");
                            counts[i] += 1;
                            need[i] = need[i].saturating_sub(width);
                        }
                        counts
                    }
                };
                for (i, &c) in per_vertex.iter().enumerate() {
                    for _ in 0..c {
                        out.push(place(vec![bay[i]; width]));
                    }
                }
            }
            Attachment::RoundRobin => {
                let pods = match count {
                    PodCount::MinimumToFill => need.iter().sum::<usize>().div_ceil(width),
                    PodCount::PerDockVertex(p) => p * bay.len(),
                    PodCount::PerBay(m) => m,
                };
                let mut pod_edges = vec![0usize; bay.len()];
                for _ in 0..pods {
                    let mut targets = Vec::with_capacity(width);
                    for _ in 0..width {
                        let i = (0..bay.len())
                            .min_by_key(|&i| (std::cmp::Reverse(need[i]), pod_edges[i], i))
                            .expect("bay is non-empty");
                        need[i] = need[i].saturating_sub(1);
                        pod_edges[i] += 1;
                        targets.push(bay[i]);
                    }
                    out.push(place(targets));
                }
            }
            Attachment::Explicit(_) => unreachable!("handled above"),
        }
    }
    Ok(out)
}

/// Appends the pods to a copy of `dock`, joining attachment vertices to their
/// targets, and checks that every bay vertex reaches degree `d - 1`.
pub fn attach_pods(dock: &LabeledGraph, placements: &[PodPlacement]) -> Result<LabeledGraph> {
    let mut out = dock.clone();
    for (index, p) in placements.iter().enumerate() {
        if p.targets.len() != p.pod.attachments.len() {
            return Err(Error::InfeasibleParams(format!(
                "pod {index} has {} targets for {} attachment vertices",
                p.targets.len(),
                p.pod.attachments.len()
            )));
        }
        if p.targets.iter().any(|t| dock.bay_of.get(t) != Some(&p.bay)) {
            return Err(Error::CrossBayAttachment(index));
        }
        let offset = out.graph.append(&p.pod.graph.without_labels());
        let pod_id = out.pods.len();
        for v in 0..p.pod.graph.order() {
            out.pod_of.insert(offset + v, pod_id);
            out.graph.set_label(offset + v, format!("p{pod_id}_{v}"));
        }
        for (&a, &t) in p.pod.attachments.iter().zip(&p.targets) {
            out.graph.add_edge(offset + a, t)?;
        }
        out.pods.push(PodInfo {
            kind: p.pod.kind,
            bay: Some(p.bay),
            attachments: p.pod.attachments.iter().map(|&a| offset + a).collect(),
        });
    }
    let deficient: Vec<usize> = dock
        .bay_of
        .keys()
        .copied()
        .filter(|&v| deficiency(&out.graph, v, out.d) > 0)
        .collect();
    if !deficient.is_empty() {
        return Err(Error::NotFull {
            required: out.d - 1,
            vertices: deficient,
        });
    }
    Ok(out)
}
