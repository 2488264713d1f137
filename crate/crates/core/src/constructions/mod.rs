//! Graph families with minimum degree `d - 1` and no `K_d` immersion, plus
//! the pods they are assembled from and a few reference graphs.

mod dock;
mod pods;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use dock::{attach_pods, build_dock, plan_attachment, Attachment, ExplicitPod, PodCount, PodPlacement};
pub use pods::{build_pod, Pod, PodKind};

use crate::error::{Error, Result};
use crate::immersion::Decomposition;
use crate::metrics::chromatic_number;
use crate::multigraph::MultiGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    P8,
    Pd,
    P5d,
    Pkd,
    Special10Pod,
    Gd,
    Gnd,
    H5d,
    Mkd,
    Special10Graph,
    Seymour10,
    DevosFamily,
    HajosSeed,
}

impl Family {
    pub const ALL: [Family; 13] = [
        Family::P8,
        Family::Pd,
        Family::P5d,
        Family::Pkd,
        Family::Special10Pod,
        Family::Gd,
        Family::Gnd,
        Family::H5d,
        Family::Mkd,
        Family::Special10Graph,
        Family::Seymour10,
        Family::DevosFamily,
        Family::HajosSeed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::P8 => "p8",
            Family::Pd => "pd",
            Family::P5d => "p5d",
            Family::Pkd => "pkd",
            Family::Special10Pod => "special10pod",
            Family::Gd => "gd",
            Family::Gnd => "gnd",
            Family::H5d => "h5d",
            Family::Mkd => "mkd",
            Family::Special10Graph => "special10",
            Family::Seymour10 => "seymour10",
            Family::DevosFamily => "devos",
            Family::HajosSeed => "hajos-seed",
        }
    }

    /// `d` for families defined at a single value.
    pub fn fixed_d(self) -> Option<usize> {
        match self {
            Family::P8 => Some(8),
            Family::Special10Pod | Family::Special10Graph | Family::Seymour10 => Some(10),
            _ => None,
        }
    }

    pub fn is_pod(self) -> bool {
        matches!(
            self,
            Family::P8 | Family::Pd | Family::P5d | Family::Pkd | Family::Special10Pod
        )
    }

    pub fn has_dock(self) -> bool {
        matches!(
            self,
            Family::Gd | Family::Gnd | Family::H5d | Family::Mkd | Family::Special10Graph
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key || (key == "special10graph" && *f == Family::Special10Graph))
            .ok_or_else(|| Error::InfeasibleParams(format!("unknown family {s:?}")))
    }
}

/// One component of a DeVos-type graph given by its edge list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSpec {
    pub order: usize,
    pub edges: Vec<(usize, usize)>,
}

/// The graphs whose disjoint union is complemented.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DevosSpec {
    /// Odd cycles of the given lengths (`D = 2`).
    Cycles(Vec<usize>),
    /// `D`-regular class-2 graphs on at most 12 vertices each.
    Components(Vec<ComponentSpec>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionParams {
    pub family: Family,
    pub d: usize,
    pub n_bays: usize,
    /// Target edge-connectivity for `Pkd` and `Mkd`.
    pub k: usize,
    pub pods: PodCount,
    /// `None` picks the family default.
    pub attachment: Option<Attachment>,
    pub devos: Option<DevosSpec>,
}

impl ConstructionParams {
    pub fn new(family: Family, d: usize) -> Self {
        ConstructionParams {
            family,
            d,
            n_bays: 1,
            k: 0,
            pods: PodCount::MinimumToFill,
            attachment: None,
            devos: None,
        }
    }

    /// Parameters for a family with its only admissible `d`.
    pub fn fixed(family: Family) -> Self {
        ConstructionParams::new(family, family.fixed_d().unwrap_or(0))
    }

    pub fn bays(mut self, n: usize) -> Self {
        self.n_bays = n;
        self
    }

    pub fn connectivity(mut self, k: usize) -> Self {
        self.k = k;
        self
    }

    pub fn pods(mut self, pods: PodCount) -> Self {
        self.pods = pods;
        self
    }

    pub fn attach(mut self, attachment: Attachment) -> Self {
        self.attachment = Some(attachment);
        self
    }

    pub fn devos(mut self, spec: DevosSpec) -> Self {
        self.devos = Some(spec);
        self
    }

    /// Concentrated attachment for `G_d`, round robin everywhere else.
    pub fn effective_attachment(&self) -> Attachment {
        match (&self.attachment, self.family) {
            (Some(a), _) => a.clone(),
            (None, Family::Gd) => Attachment::Concentrated,
            (None, _) => Attachment::RoundRobin,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PodInfo {
    pub kind: PodKind,
    /// Bay the pod is attached to; `None` for a standalone pod.
    pub bay: Option<usize>,
    /// Vertices with an edge to the dock.
    pub attachments: Vec<usize>,
}

/// A graph with its dock and pod structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledGraph {
    #[serde(skip)]
    pub graph: MultiGraph,
    pub d: usize,
    pub n_bays: usize,
    pub bay_of: BTreeMap<usize, usize>,
    pub pod_of: BTreeMap<usize, usize>,
    /// `(i, j)` for dock vertex `a^i_j`.
    pub bay_coordinate: BTreeMap<usize, (usize, usize)>,
    pub pods: Vec<PodInfo>,
}

impl LabeledGraph {
    pub fn new(graph: MultiGraph, d: usize) -> Self {
        LabeledGraph {
            graph,
            d,
            n_bays: 0,
            bay_of: BTreeMap::new(),
            pod_of: BTreeMap::new(),
            bay_coordinate: BTreeMap::new(),
            pods: Vec::new(),
        }
    }

    pub fn bay_vertices(&self, bay: usize) -> Vec<usize> {
        self.bay_of
            .iter()
            .filter(|&(_, &b)| b == bay)
            .map(|(&v, _)| v)
            .collect()
    }

    pub fn pod_vertices(&self, pod: usize) -> Vec<usize> {
        self.pod_of
            .iter()
            .filter(|&(_, &p)| p == pod)
            .map(|(&v, _)| v)
            .collect()
    }

    pub fn dock_vertices(&self) -> Vec<usize> {
        self.bay_of.keys().copied().collect()
    }

    /// Bays in circular order and pods, as vertex sets.
    pub fn decomposition(&self) -> Decomposition {
        Decomposition {
            bays: (0..self.n_bays).map(|i| self.bay_vertices(i)).collect(),
            pods: (0..self.pods.len()).map(|p| self.pod_vertices(p)).collect(),
        }
    }
}

fn standalone_pod(kind: PodKind, d: usize) -> Result<LabeledGraph> {
    let pod = build_pod(kind, d)?;
    let mut out = LabeledGraph::new(pod.graph.clone(), d);
    for v in 0..pod.graph.order() {
        out.pod_of.insert(v, 0);
    }
    out.pods.push(PodInfo {
        kind,
        bay: None,
        attachments: pod.attachments,
    });
    Ok(out)
}

fn docked(params: &ConstructionParams, kind: PodKind, bay_size: usize) -> Result<LabeledGraph> {
    let dock = build_dock(params.d, params.n_bays, bay_size)?;
    let pod = build_pod(kind, params.d)?;
    let plan = plan_attachment(&dock, &pod, params.pods, &params.effective_attachment())?;
    attach_pods(&dock, &plan)
}

/// `K_n` minus the edges of disjoint triangles, complement of `n / 3` triangles.
pub fn seymour_graph() -> MultiGraph {
    complement_of_union(&[cycle(3), cycle(3), cycle(3), cycle(3)])
}

fn cycle(n: usize) -> MultiGraph {
    MultiGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
}

fn complement_of_union(parts: &[MultiGraph]) -> MultiGraph {
    let mut union = MultiGraph::new(0);
    for p in parts {
        union.append(p);
    }
    union.complement()
}

/// Whether a `D`-regular graph needs `D + 1` edge colours.
fn is_class_two(g: &MultiGraph, degree: usize) -> Result<bool> {
    let edges = g.edges();
    let mut line = MultiGraph::new(edges.len());
    for (i, a) in edges.iter().enumerate() {
        for (j, b) in edges.iter().enumerate().skip(i + 1) {
            if a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1 {
                line.add_edge(i, j)?;
            }
        }
    }
    Ok(chromatic_number(&line, crate::metrics::DEFAULT_COLORING_BUDGET)? > degree)
}

fn devos_graph(spec: &DevosSpec) -> Result<(MultiGraph, usize)> {
    let (parts, degree) = match spec {
        DevosSpec::Cycles(lengths) => {
            if lengths.iter().any(|&l| l < 3 || l % 2 == 0) {
                return Err(Error::InfeasibleParams(
                    "cycle lengths must be odd and at least 3".into(),
                ));
            }
            (lengths.iter().map(|&l| cycle(l)).collect::<Vec<_>>(), 2)
        }
        DevosSpec::Components(comps) => {
            let mut parts = Vec::new();
            let mut degree = None;
            for c in comps {
                if c.order > 12 {
                    return Err(Error::InfeasibleParams(
                        "components are limited to 12 vertices".into(),
                    ));
                }
                let g = MultiGraph::from_edges(c.order, c.edges.iter().copied())?;
                let degs = g.degrees();
                let dd = degs.first().copied().unwrap_or(0);
                if !g.is_simple() || degs.iter().any(|&x| x != dd) {
                    return Err(Error::InfeasibleParams(
                        "components must be simple and regular".into(),
                    ));
                }
                if *degree.get_or_insert(dd) != dd {
                    return Err(Error::InfeasibleParams(
                        "components must share one degree".into(),
                    ));
                }
                if !is_class_two(&g, dd as usize)? {
                    return Err(Error::InfeasibleParams(
                        "component is not class 2".into(),
                    ));
                }
                parts.push(g);
            }
            (parts, degree.unwrap_or(0) as usize)
        }
    };
    let t = parts.len();
    if degree < 2 || t <= degree * (degree + 1) / 2 {
        return Err(Error::InfeasibleParams(format!(
            "need D >= 2 and more than D(D+1)/2 components (D = {degree}, t = {t})"
        )));
    }
    Ok((complement_of_union(&parts), degree))
}

/// Builds any family member. Dock families carry their decomposition.
pub fn build_family(params: &ConstructionParams) -> Result<LabeledGraph> {
    let f = params.family;
    if let Some(fixed) = f.fixed_d() {
        if params.d != fixed {
            return Err(Error::InfeasibleParams(format!("{f} is defined for d = {fixed} only")));
        }
    }
    if f.has_dock() && params.n_bays == 0 {
        return Err(Error::InfeasibleParams("at least one bay is needed".into()));
    }
    let d = params.d;
    match f {
        Family::P8 => standalone_pod(PodKind::P8, 8),
        Family::Pd => standalone_pod(PodKind::Pd, d),
        Family::P5d => standalone_pod(PodKind::P5d, d),
        Family::Pkd => standalone_pod(PodKind::Pkd { k: params.k }, d),
        Family::Special10Pod => standalone_pod(PodKind::Special10, 10),
        Family::Gd => {
            if d < 8 {
                return Err(Error::InfeasibleParams("Gd needs d >= 8".into()));
            }
            let single = ConstructionParams {
                n_bays: 1,
                ..params.clone()
            };
            docked(&single, PodKind::Pd, d - 3)
        }
        Family::Gnd => docked(params, PodKind::Pd, d.saturating_sub(2)),
        Family::H5d => docked(params, PodKind::P5d, d.saturating_sub(2)),
        Family::Mkd => docked(params, PodKind::Pkd { k: params.k }, d.saturating_sub(2)),
        Family::Special10Graph => docked(params, PodKind::Special10, 8),
        Family::Seymour10 => Ok(LabeledGraph::new(seymour_graph(), 10)),
        Family::DevosFamily => {
            let spec = params
                .devos
                .as_ref()
                .ok_or_else(|| Error::InfeasibleParams("DevosFamily needs component data".into()))?;
            let (g, degree) = devos_graph(spec)?;
            let d = g.order() - degree;
            Ok(LabeledGraph::new(g, d))
        }
        Family::HajosSeed => {
            if d < 1 {
                return Err(Error::InfeasibleParams("seed needs d >= 1".into()));
            }
            Ok(LabeledGraph::new(MultiGraph::complete(d), d))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::{min_degree, degree_histogram};

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("nope".parse::<Family>().is_err());
    }

    #[test]
    fn g8_concentrated() {
        let g = build_family(&ConstructionParams::new(Family::Gd, 8)).unwrap();
        assert_eq!(g.graph.order(), 50);
        assert_eq!(g.pods.len(), 5);
        assert_eq!(min_degree(&g.graph).unwrap(), 7);
    }

    #[test]
    fn family_orders() {
        let cases = [
            (ConstructionParams::new(Family::Gd, 9), 66),
            (ConstructionParams::new(Family::Gd, 10), 84),
            (ConstructionParams::new(Family::Gnd, 8).bays(1), 42),
            (ConstructionParams::new(Family::Gnd, 8).bays(2), 48),
            (ConstructionParams::new(Family::Gnd, 8).bays(4), 96),
            (ConstructionParams::new(Family::Gnd, 9).bays(1), 57),
            (ConstructionParams::new(Family::Gnd, 9).bays(2), 74),
            (ConstructionParams::new(Family::Gnd, 9).bays(4), 108),
            (ConstructionParams::new(Family::H5d, 8).bays(2), 48),
            (ConstructionParams::new(Family::Mkd, 9).bays(2).connectivity(7), 34),
            (ConstructionParams::fixed(Family::Special10Graph), 30),
        ];
        for (p, order) in cases {
            let g = build_family(&p).unwrap();
            assert_eq!(g.graph.order(), order, "{p:?}");
            assert_eq!(min_degree(&g.graph).unwrap(), p.d as u64 - 1, "{p:?}");
        }
    }

    #[test]
    fn g49_degrees() {
        // three pods per bay placed so that a_3, a_4, a_5 end at degree 9
        let explicit: Vec<ExplicitPod> = (0..4)
            .flat_map(|bay| {
                [vec![0, 1, 2], vec![4, 5, 6], vec![2, 3, 4]]
                    .into_iter()
                    .map(move |targets| ExplicitPod { bay, targets })
            })
            .collect();
        let g = build_family(
            &ConstructionParams::new(Family::Gnd, 9)
                .bays(4)
                .attach(Attachment::Explicit(explicit)),
        )
        .unwrap();
        for (&v, &(_, j)) in &g.bay_coordinate {
            let expect = if (3..=5).contains(&j) { 9 } else { 8 };
            assert_eq!(g.graph.degree(v), expect, "a_{j}");
        }
    }

    #[test]
    fn seymour_and_devos_agree() {
        let s = build_family(&ConstructionParams::fixed(Family::Seymour10)).unwrap();
        let dv = build_family(
            &ConstructionParams::new(Family::DevosFamily, 0).devos(DevosSpec::Cycles(vec![3, 3, 3, 3])),
        )
        .unwrap();
        assert_eq!(s.graph, dv.graph);
        assert_eq!(dv.d, 10);
        assert_eq!(degree_histogram(&s.graph), BTreeMap::from([(9, 12)]));
    }

    #[test]
    fn devos_rejects_bad_input() {
        let p = |spec| ConstructionParams::new(Family::DevosFamily, 0).devos(spec);
        assert!(build_family(&p(DevosSpec::Cycles(vec![3, 4, 3, 3]))).is_err());
        assert!(build_family(&p(DevosSpec::Cycles(vec![3, 3, 3]))).is_err());
        // K_4 is 3-regular but class 1
        let k4 = ComponentSpec {
            order: 4,
            edges: vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
        };
        assert!(build_family(&p(DevosSpec::Components(vec![k4; 7]))).is_err());
    }

    #[test]
    fn petersen_components_are_class_two() {
        let petersen = ComponentSpec {
            order: 10,
            edges: vec![
                (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (6, 9), (6, 8), (5, 8),
            ],
        };
        let g = build_family(
            &ConstructionParams::new(Family::DevosFamily, 0)
                .devos(DevosSpec::Components(vec![petersen; 7])),
        )
        .unwrap();
        assert_eq!(g.graph.order(), 70);
        assert_eq!(g.d, 67);
        assert_eq!(min_degree(&g.graph).unwrap(), 66);
    }

    #[test]
    fn fixed_d_is_enforced() {
        assert!(build_family(&ConstructionParams::new(Family::P8, 9)).is_err());
        assert!(build_family(&ConstructionParams::new(Family::Mkd, 10).connectivity(8)).is_err());
    }
}
