//! Exact search for a `K_t` immersion.
//!
//! Corner sets are enumerated over vertices of degree at least `t - 1`, one
//! orbit representative first. For every corner set adjacent corners are
//! joined by one copy of their edge, and the remaining pairs are routed by a
//! backtracking search over simple paths in the residual multigraph.
//!
//! Pruning rules, all of which only discard branches that cannot succeed:
//!
//! * a cut of capacity `c` with `x` corners on one side needs
//!   `x(t - x) <= c`; candidate cuts come from a Gomory–Hu style family;
//! * a corner with `r` unused edges and `m` unrouted partners can only act as
//!   an interior vertex while `r >= m + 2`;
//! * after every routed path, each corner must still be able to send one unit
//!   of flow to each of its unrouted partners in the residual graph.

use std::ops::ControlFlow;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::certificate::{CornerPath, EdgeInstance, ImmersionCertificate};
use super::symmetry::vertex_orbits;
use crate::bitset::Bitset;
use crate::flow::FlowNetwork;
use crate::multigraph::MultiGraph;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Budget {
    /// Search-tree nodes allowed for each corner set.
    pub nodes_per_corner_set: u64,
    /// Optional wall-clock cap for the whole query.
    pub max_seconds: Option<f64>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            nodes_per_corner_set: 10_000_000,
            max_seconds: None,
        }
    }
}

impl Budget {
    pub fn nodes(nodes_per_corner_set: u64) -> Self {
        Budget {
            nodes_per_corner_set,
            max_seconds: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchOptions {
    pub budget: Budget,
    /// Join adjacent corners by their direct edge before routing.
    pub adjacent_corner_reduction: bool,
    /// Reject corner sets split badly across small cuts.
    pub cut_pruning: bool,
    /// Only expand corner sets whose first orbit is hit at its representative.
    pub symmetry_reduction: bool,
    /// Residual max-flow feasibility check after every routed path.
    pub flow_pruning: bool,
    /// Worker threads for corner sets; 1 runs sequentially.
    pub jobs: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: Budget::default(),
            adjacent_corner_reduction: true,
            cut_pruning: true,
            symmetry_reduction: true,
            flow_pruning: true,
            jobs: 1,
        }
    }
}

impl SearchOptions {
    pub fn with_budget(budget: Budget) -> Self {
        SearchOptions {
            budget,
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "outcome")]
pub enum SearchVerdict {
    Immersed { certificate: ImmersionCertificate },
    NotImmersed { nodes_explored: u64 },
    Unknown { budget_spent: u64 },
}

impl SearchVerdict {
    pub fn is_immersed(&self) -> bool {
        matches!(self, SearchVerdict::Immersed { .. })
    }

    pub fn is_not_immersed(&self) -> bool {
        matches!(self, SearchVerdict::NotImmersed { .. })
    }

    pub fn certificate(&self) -> Option<&ImmersionCertificate> {
        match self {
            SearchVerdict::Immersed { certificate } => Some(certificate),
            _ => None,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            SearchVerdict::Immersed { .. } => "Immersed",
            SearchVerdict::NotImmersed { .. } => "NotImmersed",
            SearchVerdict::Unknown { .. } => "Unknown",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub eligible_vertices: usize,
    pub orbits: usize,
    pub candidate_cuts: usize,
    pub corner_sets: u64,
    pub cut_prunes: u64,
    pub nodes: u64,
    pub undecided_corner_sets: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub verdict: SearchVerdict,
    pub stats: SearchStats,
}

/// Result of routing one fixed corner set.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum CornerSetVerdict {
    Routed(ImmersionCertificate),
    Unroutable { nodes: u64 },
    OutOfBudget { nodes: u64 },
}

/// `true` when no split of `t` corners across a cut of size `cut` can be
/// routed, i.e. `x(t - x) > cut` for every `1 <= x <= t - 1`.
pub fn corner_split_infeasible(t: usize, cut: u64) -> bool {
    (1..t).all(|x| (x as u64) * ((t - x) as u64) > cut)
}

fn split_demand(t: usize, x: usize) -> u64 {
    (x as u64) * ((t - x) as u64)
}

struct CandidateCut {
    inside: Bitset,
    cap: u64,
}

struct Prepared {
    n: usize,
    t: usize,
    mult: Vec<u32>,
    nbrs: Vec<Vec<usize>>,
    deg: Vec<u64>,
    cuts: Vec<CandidateCut>,
}

impl Prepared {
    fn new(g: &MultiGraph, t: usize, with_cuts: bool) -> Self {
        let n = g.order();
        let mut mult = vec![0u32; n * n];
        for (u, v, c) in g.edges() {
            mult[u * n + v] = c;
            mult[v * n + u] = c;
        }
        let cuts = if with_cuts { candidate_cuts(g, t) } else { Vec::new() };
        Prepared {
            n,
            t,
            mult,
            nbrs: (0..n).map(|v| g.neighbors(v).map(|(w, _)| w).collect()).collect(),
            deg: g.degrees(),
            cuts,
        }
    }
}

/// Gusfield's tree construction; every recorded side is a genuine cut whose
/// crossing multiplicity is recomputed directly.
fn candidate_cuts(g: &MultiGraph, t: usize) -> Vec<CandidateCut> {
    let n = g.order();
    let bound = split_demand(t, t / 2);
    let mut parent = vec![0usize; n];
    let mut out: Vec<CandidateCut> = Vec::new();
    let edges = g.edges();
    for i in 1..n {
        let mut net = FlowNetwork::new(n);
        for &(u, v, c) in &edges {
            net.add_edge(u, v, c as u64);
        }
        let f = net.max_flow(i, parent[i], bound);
        let side = net.source_side(i);
        if f < bound {
            let cap = g.crossing(&side);
            debug_assert_eq!(cap, f);
            let mut inside = Bitset::new(n);
            for v in (0..n).filter(|&v| side[v]) {
                inside.insert(v);
            }
            if !out.iter().any(|c| c.inside == inside) {
                out.push(CandidateCut { inside, cap });
            }
        }
        for j in (i + 1)..n {
            if side[j] && parent[j] == parent[i] {
                parent[j] = i;
            }
        }
    }
    out
}

/// Searches for a `K_t` immersion with default options and the given budget.
pub fn find_immersion(g: &MultiGraph, t: usize, budget: Budget) -> SearchVerdict {
    find_immersion_with(g, t, &SearchOptions::with_budget(budget)).verdict
}

pub fn find_immersion_with(g: &MultiGraph, t: usize, opts: &SearchOptions) -> SearchReport {
    let started = Instant::now();
    let mut stats = SearchStats::default();
    let n = g.order();
    if t <= 1 {
        let verdict = if t == 0 || n > 0 {
            SearchVerdict::Immersed {
                certificate: ImmersionCertificate {
                    t,
                    corners: (0..t).collect(),
                    paths: Vec::new(),
                },
            }
        } else {
            SearchVerdict::NotImmersed { nodes_explored: 0 }
        };
        return SearchReport { verdict, stats };
    }

    let degrees = g.degrees();
    let eligible: Vec<usize> = (0..n).filter(|&v| degrees[v] + 1 >= t as u64).collect();
    stats.eligible_vertices = eligible.len();
    if eligible.len() < t {
        return SearchReport {
            verdict: SearchVerdict::NotImmersed { nodes_explored: 0 },
            stats,
        };
    }

    let prep = Prepared::new(g, t, opts.cut_pruning);
    stats.candidate_cuts = prep.cuts.len();
    let orbit = if opts.symmetry_reduction {
        vertex_orbits(g, 2000)
    } else {
        (0..n).collect()
    };
    let deadline = opts
        .budget
        .max_seconds
        .map(|s| started + std::time::Duration::from_secs_f64(s));

    let mut reps: Vec<usize> = eligible.iter().map(|&v| orbit[v]).collect();
    reps.sort_unstable();
    reps.dedup();
    stats.orbits = reps.len();

    let mut enumerator = CornerEnumerator {
        prep: &prep,
        inside: vec![0; prep.cuts.len()],
        chosen: Vec::with_capacity(t),
        prunes: 0,
    };

    let mut found: Option<ImmersionCertificate> = None;
    let mut undecided = 0u64;
    let mut nodes = 0u64;
    let mut timed_out = false;
    let chunk_size = if opts.jobs > 1 { 256 * opts.jobs } else { 1 };
    let mut pending: Vec<Vec<usize>> = Vec::new();

    let flush = |pending: &mut Vec<Vec<usize>>,
                     found: &mut Option<ImmersionCertificate>,
                     undecided: &mut u64,
                     nodes: &mut u64,
                     timed_out: &mut bool|
     -> ControlFlow<()> {
        let results: Vec<(CornerSetVerdict, bool)> = if opts.jobs > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(opts.jobs)
                .build()
                .expect("thread pool");
            pool.install(|| {
                pending
                    .par_iter()
                    .map(|c| route_corner_set(&prep, c, opts, deadline))
                    .collect()
            })
        } else {
            pending
                .iter()
                .map(|c| route_corner_set(&prep, c, opts, deadline))
                .collect()
        };
        pending.clear();
        for (verdict, late) in results {
            *timed_out |= late;
            match verdict {
                CornerSetVerdict::Routed(cert) => {
                    if found.is_none() {
                        *found = Some(cert);
                    }
                }
                CornerSetVerdict::Unroutable { nodes: k } => *nodes += k,
                CornerSetVerdict::OutOfBudget { nodes: k } => {
                    *nodes += k;
                    *undecided += 1;
                }
            }
        }
        if found.is_some() || *timed_out {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    };

    'orbits: for (i, &rep) in reps.iter().enumerate() {
        let pool: Vec<usize> = eligible
            .iter()
            .copied()
            .filter(|&v| v != rep && reps[i..].binary_search(&orbit[v]).is_ok())
            .collect();
        let flow = enumerator.enumerate(rep, &pool, &mut |corners| {
            stats.corner_sets += 1;
            pending.push(corners.to_vec());
            if pending.len() >= chunk_size {
                flush(&mut pending, &mut found, &mut undecided, &mut nodes, &mut timed_out)
            } else {
                ControlFlow::Continue(())
            }
        });
        if flow.is_break() {
            break 'orbits;
        }
    }
    if found.is_none() && !timed_out && !pending.is_empty() {
        let _ = flush(&mut pending, &mut found, &mut undecided, &mut nodes, &mut timed_out);
    }

    stats.cut_prunes = enumerator.prunes;
    stats.nodes = nodes;
    stats.undecided_corner_sets = undecided;
    let verdict = match found {
        Some(certificate) => SearchVerdict::Immersed { certificate },
        None if undecided > 0 || timed_out => SearchVerdict::Unknown {
            budget_spent: nodes,
        },
        None => SearchVerdict::NotImmersed {
            nodes_explored: nodes,
        },
    };
    SearchReport { verdict, stats }
}

struct CornerEnumerator<'a> {
    prep: &'a Prepared,
    inside: Vec<usize>,
    chosen: Vec<usize>,
    prunes: u64,
}

impl CornerEnumerator<'_> {
    fn push(&mut self, v: usize) {
        self.chosen.push(v);
        for (k, cut) in self.prep.cuts.iter().enumerate() {
            if cut.inside.contains(v) {
                self.inside[k] += 1;
            }
        }
    }

    fn pop(&mut self) {
        let v = self.chosen.pop().expect("non-empty");
        for (k, cut) in self.prep.cuts.iter().enumerate() {
            if cut.inside.contains(v) {
                self.inside[k] -= 1;
            }
        }
    }

    /// Whether some completion of the current partial corner set can still
    /// respect every candidate cut.
    fn splits_feasible(&self) -> bool {
        let t = self.prep.t;
        let open = t - self.chosen.len();
        self.prep.cuts.iter().zip(&self.inside).all(|(cut, &x)| {
            let lo = split_demand(t, x);
            let hi = split_demand(t, x + open);
            lo.min(hi) <= cut.cap
        })
    }

    fn enumerate(
        &mut self,
        first: usize,
        pool: &[usize],
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        self.push(first);
        let r = if self.splits_feasible() {
            self.extend(pool, 0, visit)
        } else {
            self.prunes += 1;
            ControlFlow::Continue(())
        };
        self.pop();
        r
    }

    fn extend(
        &mut self,
        pool: &[usize],
        from: usize,
        visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let need = self.prep.t - self.chosen.len();
        if need == 0 {
            let mut corners = self.chosen.clone();
            corners.sort_unstable();
            return visit(&corners);
        }
        for i in from..pool.len() {
            if pool.len() - i < need {
                break;
            }
            self.push(pool[i]);
            if self.splits_feasible() {
                self.extend(pool, i + 1, visit)?;
            } else {
                self.prunes += 1;
            }
            self.pop();
        }
        ControlFlow::Continue(())
    }
}

/// Routes a single corner set. The returned flag is set when the deadline
/// interrupted the search.
fn route_corner_set(
    prep: &Prepared,
    corners: &[usize],
    opts: &SearchOptions,
    deadline: Option<Instant>,
) -> (CornerSetVerdict, bool) {
    if deadline.is_some_and(|d| Instant::now() >= d) {
        return (CornerSetVerdict::OutOfBudget { nodes: 0 }, true);
    }
    let mut solver = PathSolver::new(prep, corners, opts, deadline);
    let verdict = match solver.run() {
        Step::Found => CornerSetVerdict::Routed(solver.certificate()),
        Step::Exhausted => CornerSetVerdict::Unroutable {
            nodes: solver.nodes,
        },
        Step::OutOfBudget => CornerSetVerdict::OutOfBudget {
            nodes: solver.nodes,
        },
    };
    (verdict, solver.timed_out)
}

/// Decides whether the given corners can be the corners of a `K_t`
/// immersion, `t = corners.len()`. Cut pruning and symmetry options are
/// ignored; only the routing rules apply.
pub fn decide_corner_set(g: &MultiGraph, corners: &[usize], opts: &SearchOptions) -> CornerSetVerdict {
    let t = corners.len();
    let prep = Prepared::new(g, t, false);
    let degrees = g.degrees();
    if corners.iter().any(|&c| degrees[c] + 1 < t as u64) {
        return CornerSetVerdict::Unroutable { nodes: 0 };
    }
    let mut sorted = corners.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    assert_eq!(sorted.len(), t, "corners must be distinct");
    route_corner_set(&prep, &sorted, opts, None).0
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

struct PathSolver<'a> {
    prep: &'a Prepared,
    opts: &'a SearchOptions,
    corners: Vec<usize>,
    is_corner: Vec<bool>,
    res: Vec<u32>,
    resdeg: Vec<u64>,
    rem: Vec<u64>,
    demands: Vec<(usize, usize)>,
    routed: Vec<Vec<usize>>,
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
}

impl<'a> PathSolver<'a> {
    fn new(
        prep: &'a Prepared,
        corners: &[usize],
        opts: &'a SearchOptions,
        deadline: Option<Instant>,
    ) -> Self {
        let n = prep.n;
        let mut is_corner = vec![false; n];
        for &c in corners {
            is_corner[c] = true;
        }
        let mut solver = PathSolver {
            prep,
            opts,
            corners: corners.to_vec(),
            is_corner,
            res: prep.mult.clone(),
            resdeg: prep.deg.clone(),
            rem: vec![0; n],
            demands: Vec::new(),
            routed: Vec::new(),
            nodes: 0,
            deadline,
            timed_out: false,
        };
        for (i, &a) in corners.iter().enumerate() {
            for &b in &corners[i + 1..] {
                if opts.adjacent_corner_reduction && solver.res[a * n + b] > 0 {
                    solver.take_edge(a, b);
                    solver.routed.push(vec![a, b]);
                } else {
                    solver.demands.push((a, b));
                    solver.rem[a] += 1;
                    solver.rem[b] += 1;
                }
            }
        }
        solver
    }

    fn take_edge(&mut self, a: usize, b: usize) {
        let n = self.prep.n;
        self.res[a * n + b] -= 1;
        self.res[b * n + a] -= 1;
        self.resdeg[a] -= 1;
        self.resdeg[b] -= 1;
    }

    fn give_edge(&mut self, a: usize, b: usize) {
        let n = self.prep.n;
        self.res[a * n + b] += 1;
        self.res[b * n + a] += 1;
        self.resdeg[a] += 1;
        self.resdeg[b] += 1;
    }

    #[inline]
    fn interior_ok(&self, v: usize) -> bool {
        !self.is_corner[v] || self.resdeg[v] >= self.rem[v] + 2
    }

    fn run(&mut self) -> Step {
        if !self.feasible() {
            return Step::Exhausted;
        }
        self.solve()
    }

    fn feasible(&self) -> bool {
        if self
            .corners
            .iter()
            .any(|&c| self.resdeg[c] < self.rem[c])
        {
            return false;
        }
        if self.opts.flow_pruning {
            self.corners
                .iter()
                .filter(|&&c| self.rem[c] > 0)
                .all(|&c| self.partner_flow(c) >= self.rem[c])
                && self.cut_condition()
        } else {
            self.demands
                .iter()
                .all(|&(s, t)| self.distances_to(t)[s] != u32::MAX)
        }
    }

    /// Max flow from corner `c` to its unrouted partners, one unit each.
    fn partner_flow(&self, c: usize) -> u64 {
        let n = self.prep.n;
        let sink = n;
        let mut is_partner = vec![false; n];
        for &(a, b) in &self.demands {
            if a == c {
                is_partner[b] = true;
            } else if b == c {
                is_partner[a] = true;
            }
        }
        let usable = |v: usize| v == c || is_partner[v] || self.interior_ok(v);
        let mut net = FlowNetwork::new(n + 1);
        for u in 0..n {
            if !usable(u) {
                continue;
            }
            for &w in &self.prep.nbrs[u] {
                if w > u && usable(w) {
                    let r = self.res[u * n + w];
                    if r > 0 {
                        net.add_edge(u, w, r as u64);
                    }
                }
            }
            if is_partner[u] {
                net.add_arc(u, sink, 1);
            }
        }
        net.max_flow(c, sink, self.rem[c])
    }

    fn residual_edges(&self) -> Vec<(usize, usize, u64)> {
        let n = self.prep.n;
        let mut edges = Vec::new();
        for u in 0..n {
            for &w in &self.prep.nbrs[u] {
                let r = self.res[u * n + w];
                if w > u && r > 0 {
                    edges.push((u, w, r as u64));
                }
            }
        }
        edges
    }

    /// For every split of the corners with open demands into two groups of
    /// at least two, the residual min cut between the groups must carry the
    /// demands across. Past `SPLIT_LIMIT` active corners only Gusfield cuts
    /// of the residual graph are checked.
    fn cut_condition(&self) -> bool {
        const SPLIT_LIMIT: usize = 7;
        let active: Vec<usize> = self.corners.iter().copied().filter(|&c| self.rem[c] > 0).collect();
        if active.len() < 4 {
            return true;
        }
        if active.len() > SPLIT_LIMIT {
            return self.gusfield_condition();
        }
        let n = self.prep.n;
        let edges = self.residual_edges();
        let k = active.len();
        let mut group = vec![false; n];
        for mask in 1u32..(1 << (k - 1)) {
            let size = mask.count_ones() as usize + 1;
            if size < 2 || size > k - 2 {
                continue;
            }
            for (i, &c) in active.iter().enumerate() {
                group[c] = i == 0 || mask >> (i - 1) & 1 == 1;
            }
            let crossing = self
                .demands
                .iter()
                .filter(|&&(a, b)| group[a] != group[b])
                .count() as u64;
            if crossing == 0 {
                continue;
            }
            let (src, sink) = (n, n + 1);
            let mut net = FlowNetwork::new(n + 2);
            for &(u, w, r) in &edges {
                net.add_edge(u, w, r);
            }
            for &c in &active {
                if group[c] {
                    net.add_arc(src, c, crossing);
                } else {
                    net.add_arc(c, sink, crossing);
                }
            }
            if net.max_flow(src, sink, crossing) < crossing {
                return false;
            }
        }
        true
    }

    /// Every Gusfield min cut of the residual graph must carry the demands
    /// that cross it.
    fn gusfield_condition(&self) -> bool {
        let n = self.prep.n;
        let total = self.demands.len() as u64;
        let edges = self.residual_edges();
        let mut parent = vec![0usize; n];
        for i in 1..n {
            let mut net = FlowNetwork::new(n);
            for &(u, w, r) in &edges {
                net.add_edge(u, w, r);
            }
            let f = net.max_flow(i, parent[i], total);
            let side = net.source_side(i);
            if f < total {
                let crossing = self
                    .demands
                    .iter()
                    .filter(|&&(a, b)| side[a] != side[b])
                    .count() as u64;
                if crossing > f {
                    return false;
                }
            }
            for j in (i + 1)..n {
                if side[j] && parent[j] == parent[i] {
                    parent[j] = i;
                }
            }
        }
        true
    }

    /// Breadth-first distances to `target` through admissible interiors.
    fn distances_to(&self, target: usize) -> Vec<u32> {
        let n = self.prep.n;
        let mut dist = vec![u32::MAX; n];
        dist[target] = 0;
        let mut queue = std::collections::VecDeque::from([target]);
        while let Some(u) = queue.pop_front() {
            if u != target && !self.interior_ok(u) {
                continue;
            }
            for &w in &self.prep.nbrs[u] {
                if dist[w] == u32::MAX && self.res[u * n + w] > 0 {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Demand with the fewest routes of length at most two.
    fn pick_demand(&self) -> usize {
        let n = self.prep.n;
        let mut best = (u64::MAX, 0usize);
        for (i, &(s, t)) in self.demands.iter().enumerate() {
            let mut routes = self.res[s * n + t] as u64;
            for &w in &self.prep.nbrs[s] {
                if w != t && self.interior_ok(w) {
                    routes += self.res[s * n + w].min(self.res[w * n + t]) as u64;
                }
            }
            if routes < best.0 {
                best = (routes, i);
            }
        }
        best.1
    }

    fn solve(&mut self) -> Step {
        if self.demands.is_empty() {
            return Step::Found;
        }
        self.nodes += 1;
        if self.nodes > self.opts.budget.nodes_per_corner_set {
            return Step::OutOfBudget;
        }
        if self.nodes.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.timed_out = true;
            return Step::OutOfBudget;
        }
        let di = self.pick_demand();
        let (s, t) = self.demands.remove(di);
        let dist = self.distances_to(t);
        let mut outcome = Step::Exhausted;
        if dist[s] != u32::MAX {
            let n = self.prep.n;
            let mut on_path = vec![false; n];
            on_path[s] = true;
            let mut path = vec![s];
            for len in dist[s]..n as u32 {
                match self.extend(t, len, &mut path, &mut on_path, &dist) {
                    Step::Exhausted => {}
                    other => {
                        outcome = other;
                        break;
                    }
                }
            }
        }
        if outcome != Step::Found {
            self.demands.insert(di, (s, t));
        }
        outcome
    }

    fn extend(
        &mut self,
        target: usize,
        left: u32,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        dist: &[u32],
    ) -> Step {
        let n = self.prep.n;
        let cur = *path.last().expect("path starts at its source");
        for idx in 0..self.prep.nbrs[cur].len() {
            let w = self.prep.nbrs[cur][idx];
            if self.res[cur * n + w] == 0 || on_path[w] {
                continue;
            }
            let step = if w == target {
                if left != 1 {
                    continue;
                }
                path.push(w);
                let r = self.try_path(path);
                path.pop();
                r
            } else {
                if left < 2 || dist[w] > left - 1 || !self.interior_ok(w) {
                    continue;
                }
                path.push(w);
                on_path[w] = true;
                let r = self.extend(target, left - 1, path, on_path, dist);
                on_path[w] = false;
                path.pop();
                r
            };
            if step != Step::Exhausted {
                return step;
            }
        }
        Step::Exhausted
    }

    fn try_path(&mut self, path: &[usize]) -> Step {
        for e in path.windows(2) {
            self.take_edge(e[0], e[1]);
        }
        let (s, t) = (path[0], *path.last().expect("non-empty"));
        self.rem[s] -= 1;
        self.rem[t] -= 1;
        let mut step = Step::Exhausted;
        if self.feasible() {
            self.routed.push(path.to_vec());
            step = self.solve();
            if step != Step::Found {
                self.routed.pop();
            }
        }
        if step != Step::Found {
            self.rem[s] += 1;
            self.rem[t] += 1;
            for e in path.windows(2) {
                self.give_edge(e[0], e[1]);
            }
        }
        step
    }

    fn certificate(&self) -> ImmersionCertificate {
        let t = self.corners.len();
        let index_of = |v: usize| self.corners.iter().position(|&c| c == v).expect("corner");
        let mut by_pair: Vec<(usize, usize, Vec<usize>)> = self
            .routed
            .iter()
            .map(|p| {
                let (i, j) = (index_of(p[0]), index_of(*p.last().expect("non-empty")));
                if i < j {
                    (i, j, p.clone())
                } else {
                    (j, i, p.iter().rev().copied().collect())
                }
            })
            .collect();
        by_pair.sort_by_key(|&(i, j, _)| (i, j));
        let n = self.prep.n;
        let mut next_copy = vec![0u32; n * n];
        let paths = by_pair
            .into_iter()
            .map(|(i, j, p)| CornerPath {
                between: (i, j),
                edges: p
                    .windows(2)
                    .map(|e| {
                        let (a, b) = (e[0].min(e[1]), e[0].max(e[1]));
                        let k = next_copy[a * n + b];
                        next_copy[a * n + b] += 1;
                        EdgeInstance::new(a, b, k)
                    })
                    .collect(),
            })
            .collect();
        ImmersionCertificate {
            t,
            corners: self.corners.clone(),
            paths,
        }
    }
}
