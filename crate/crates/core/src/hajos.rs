//! The Hajós operations and a harness that tracks a `K_t` immersion through
//! a sequence of them.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::immersion::{find_immersion_with, SearchOptions, SearchVerdict};
use crate::multigraph::MultiGraph;

/// A multigraph as `(u, v, multiplicity)` triples, for serialised ops.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeListGraph {
    pub order: usize,
    pub edges: Vec<(usize, usize, u32)>,
}

impl From<&MultiGraph> for EdgeListGraph {
    fn from(g: &MultiGraph) -> Self {
        EdgeListGraph {
            order: g.order(),
            edges: g.edges(),
        }
    }
}

impl TryFrom<&EdgeListGraph> for MultiGraph {
    type Error = Error;

    fn try_from(e: &EdgeListGraph) -> Result<Self> {
        let mut g = MultiGraph::new(e.order);
        for &(u, v, m) in &e.edges {
            g.add_edges(u, v, m)?;
        }
        Ok(g)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum HajosOp {
    Alpha {
        new_vertices: usize,
        new_edges: Vec<(usize, usize)>,
    },
    Beta {
        u: usize,
        v: usize,
    },
    Gamma {
        other: EdgeListGraph,
        x1: usize,
        y1: usize,
        x2: usize,
        y2: usize,
    },
}

impl HajosOp {
    pub fn kind(&self) -> &'static str {
        match self {
            HajosOp::Alpha { .. } => "alpha",
            HajosOp::Beta { .. } => "beta",
            HajosOp::Gamma { .. } => "gamma",
        }
    }

    pub fn apply(&self, g: &MultiGraph) -> Result<MultiGraph> {
        match self {
            HajosOp::Alpha {
                new_vertices,
                new_edges,
            } => apply_alpha(g, *new_vertices, new_edges),
            HajosOp::Beta { u, v } => apply_beta(g, *u, *v),
            HajosOp::Gamma {
                other,
                x1,
                y1,
                x2,
                y2,
            } => apply_gamma(g, (*x1, *y1), &MultiGraph::try_from(other)?, (*x2, *y2)),
        }
    }
}

/// Adds `new_vertices` vertices and then the given edges; never simplifies.
pub fn apply_alpha(g: &MultiGraph, new_vertices: usize, new_edges: &[(usize, usize)]) -> Result<MultiGraph> {
    let mut out = g.clone();
    out.add_vertices(new_vertices);
    for &(u, v) in new_edges {
        out.add_edge(u, v)?;
    }
    Ok(out)
}

/// Identifies non-adjacent `u` and `v` into the smaller index; vertices above
/// the larger index shift down by one. A pair that would receive edges from
/// both keeps the larger of the two multiplicities.
pub fn apply_beta(g: &MultiGraph, u: usize, v: usize) -> Result<MultiGraph> {
    let n = g.order();
    for x in [u, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, order: n });
        }
    }
    if u == v {
        return Err(Error::InfeasibleParams("cannot identify a vertex with itself".into()));
    }
    if g.is_adjacent(u, v) {
        return Err(Error::AdjacentVertices(u, v));
    }
    let (keep, gone) = (u.min(v), u.max(v));
    let map = |x: usize| match x {
        x if x == gone => keep,
        x if x > gone => x - 1,
        x => x,
    };
    let mut out = MultiGraph::new(n - 1);
    for (a, b, m) in g.edges() {
        let (a2, b2) = (map(a), map(b));
        let touches_merge = a == keep || b == keep || a == gone || b == gone;
        if touches_merge {
            let have = out.multiplicity(a2, b2);
            if m > have {
                out.add_edges(a2, b2, m - have)?;
            }
        } else {
            out.add_edges(a2, b2, m)?;
        }
    }
    Ok(out)
}

/// Joins `g1` and `g2` at `x1 = x2`, deletes `x1y1` and `x2y2`, adds `y1y2`.
/// The result lists `g1`'s vertices first, then those of `g2` except `x2`.
pub fn apply_gamma(
    g1: &MultiGraph,
    (x1, y1): (usize, usize),
    g2: &MultiGraph,
    (x2, y2): (usize, usize),
) -> Result<MultiGraph> {
    if g1.multiplicity(x1, y1) == 0 {
        return Err(Error::MissingEdge(x1, y1));
    }
    if g2.multiplicity(x2, y2) == 0 {
        return Err(Error::MissingEdge(x2, y2));
    }
    let n1 = g1.order();
    let map = |x: usize| match x {
        x if x == x2 => x1,
        x if x < x2 => n1 + x,
        x => n1 + x - 1,
    };
    let mut out = g1.without_labels();
    out.remove_edge(x1, y1)?;
    out.add_vertices(g2.order() - 1);
    for (a, b, m) in g2.edges() {
        let m = if (a, b) == (x2.min(y2), x2.max(y2)) { m - 1 } else { m };
        out.add_edges(map(a), map(b), m)?;
    }
    out.add_edge(y1, map(y2))?;
    Ok(out)
}

fn is_bridge(g: &MultiGraph, u: usize, v: usize) -> bool {
    if g.multiplicity(u, v) != 1 {
        return false;
    }
    let before = g.components().len();
    let mut h = g.clone();
    h.remove_pair(u, v);
    h.components().len() > before
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialStep {
    pub op: HajosOp,
    pub order: usize,
    pub size: u64,
    pub immersed: bool,
    /// For gamma: whether each deleted edge was a bridge of its graph.
    pub gamma_bridges: Option<(bool, bool)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialReport {
    pub seed: Option<u64>,
    pub t: usize,
    pub initial_immersed: bool,
    pub steps: Vec<TrialStep>,
    /// Index of the first step after which the immersion disappeared.
    pub flip_index: Option<usize>,
    /// A flip after an alpha or gamma step.
    pub non_beta_flip: bool,
}

fn immersed(g: &MultiGraph, t: usize, opts: &SearchOptions) -> Result<bool> {
    match find_immersion_with(g, t, opts).verdict {
        SearchVerdict::Immersed { .. } => Ok(true),
        SearchVerdict::NotImmersed { .. } => Ok(false),
        SearchVerdict::Unknown { budget_spent } => Err(Error::BudgetExceeded(budget_spent)),
    }
}

/// Applies `ops` to `seed`, deciding `K_t` immersion after each step. Stops
/// after the first step where the immersion is lost.
pub fn preservation_trial(
    seed: &MultiGraph,
    ops: &[HajosOp],
    t: usize,
    opts: &SearchOptions,
) -> Result<TrialReport> {
    let mut g = seed.clone();
    let initial = immersed(&g, t, opts)?;
    let mut report = TrialReport {
        seed: None,
        t,
        initial_immersed: initial,
        steps: Vec::new(),
        flip_index: None,
        non_beta_flip: false,
    };
    let mut was = initial;
    for (i, op) in ops.iter().enumerate() {
        let (next, bridges) = step(&g, op)?;
        g = next;
        let now = immersed(&g, t, opts)?;
        report.steps.push(TrialStep {
            op: op.clone(),
            order: g.order(),
            size: g.size(),
            immersed: now,
            gamma_bridges: bridges,
        });
        if was && !now {
            report.flip_index = Some(i);
            report.non_beta_flip = !matches!(op, HajosOp::Beta { .. });
            break;
        }
        was = now;
    }
    Ok(report)
}

fn step(g: &MultiGraph, op: &HajosOp) -> Result<(MultiGraph, Option<(bool, bool)>)> {
    let bridges = match op {
        HajosOp::Gamma {
            other, x1, y1, x2, y2, ..
        } => Some((
            is_bridge(g, *x1, *y1),
            is_bridge(&MultiGraph::try_from(other)?, *x2, *y2),
        )),
        _ => None,
    };
    Ok((op.apply(g)?, bridges))
}

/// Settings for random trials.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RandomTrialConfig {
    /// Seed graph is `K_{k+1}`; the tracked immersion is of `K_{k+1}`.
    pub k: usize,
    pub steps: usize,
    pub allow_beta: bool,
    /// Gamma is skipped once the graph has this many vertices.
    pub max_order: usize,
}

impl Default for RandomTrialConfig {
    fn default() -> Self {
        RandomTrialConfig {
            k: 4,
            steps: 8,
            allow_beta: false,
            max_order: 40,
        }
    }
}

fn random_op(g: &MultiGraph, cfg: &RandomTrialConfig, rng: &mut ChaCha8Rng) -> HajosOp {
    let n = g.order();
    let mut kinds = vec!["alpha"];
    let edges = g.edges();
    if !edges.is_empty() && n < cfg.max_order {
        kinds.push("gamma");
    }
    let non_adjacent: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.is_adjacent(u, v))
        .collect();
    if cfg.allow_beta && !non_adjacent.is_empty() {
        kinds.push("beta");
    }
    match *kinds.choose(rng).expect("alpha is always available") {
        "gamma" => {
            let other = MultiGraph::complete(cfg.k + 1);
            let &(a, b, _) = edges.choose(rng).expect("non-empty");
            let (x1, y1) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
            let x2 = rng.gen_range(0..=cfg.k);
            let mut y2 = rng.gen_range(0..cfg.k);
            if y2 >= x2 {
                y2 += 1;
            }
            HajosOp::Gamma {
                other: (&other).into(),
                x1,
                y1,
                x2,
                y2,
            }
        }
        "beta" => {
            let &(u, v) = non_adjacent.choose(rng).expect("non-empty");
            HajosOp::Beta { u, v }
        }
        _ => {
            let new_vertices = rng.gen_range(0..=1);
            let total = n + new_vertices;
            let count = rng.gen_range(if new_vertices == 1 { 1 } else { 0 }..=2);
            let mut new_edges = Vec::new();
            for i in 0..count {
                // a new vertex gets its first edge so it is not isolated
                let u = if i == 0 && new_vertices == 1 { n } else { rng.gen_range(0..total) };
                let mut v = rng.gen_range(0..total - 1);
                if v >= u {
                    v += 1;
                }
                new_edges.push((u, v));
            }
            HajosOp::Alpha {
                new_vertices,
                new_edges,
            }
        }
    }
}

/// Runs one random trial from `K_{k+1}` with a fixed RNG seed.
pub fn random_trial(seed: u64, cfg: &RandomTrialConfig, opts: &SearchOptions) -> Result<TrialReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = cfg.k + 1;
    let mut g = MultiGraph::complete(t);
    let mut report = TrialReport {
        seed: Some(seed),
        t,
        initial_immersed: immersed(&g, t, opts)?,
        steps: Vec::new(),
        flip_index: None,
        non_beta_flip: false,
    };
    let mut was = report.initial_immersed;
    for i in 0..cfg.steps {
        let op = random_op(&g, cfg, &mut rng);
        let (next, bridges) = step(&g, &op)?;
        g = next;
        let now = immersed(&g, t, opts)?;
        let beta = matches!(op, HajosOp::Beta { .. });
        report.steps.push(TrialStep {
            order: g.order(),
            size: g.size(),
            immersed: now,
            gamma_bridges: bridges,
            op,
        });
        if was && !now {
            report.flip_index = Some(i);
            report.non_beta_flip = !beta;
            break;
        }
        was = now;
    }
    Ok(report)
}
