//! Undirected loopless multigraphs.
//!
//! Vertices are dense indices `0..n`. Every unordered pair carries a
//! multiplicity; pairs that are absent have multiplicity zero. Labels are a
//! side map and never take part in identity or hashing.

mod format;

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use format::{parse_graph6, GraphDocument};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiGraph {
    adj: Vec<BTreeMap<usize, u32>>,
    labels: BTreeMap<usize, String>,
}

/// One side of an edge cut together with the multiplicity crossing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCut {
    pub side: Vec<usize>,
    pub size: u64,
}

impl MultiGraph {
    pub fn new(order: usize) -> Self {
        MultiGraph {
            adj: vec![BTreeMap::new(); order],
            labels: BTreeMap::new(),
        }
    }

    /// The simple complete graph on `order` vertices.
    pub fn complete(order: usize) -> Self {
        let mut g = MultiGraph::new(order);
        for u in 0..order {
            for v in (u + 1)..order {
                g.adj[u].insert(v, 1);
                g.adj[v].insert(u, 1);
            }
        }
        g
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = MultiGraph::new(order);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges counted with multiplicity.
    pub fn size(&self) -> u64 {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, m)| m.range(u + 1..).map(|(_, &c)| c as u64))
            .sum()
    }

    /// Number of distinct adjacent pairs.
    pub fn pair_count(&self) -> usize {
        self.adj
            .iter()
            .enumerate()
            .map(|(u, m)| m.range(u + 1..).count())
            .sum()
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        self.adj
            .get(u)
            .and_then(|m| m.get(&v))
            .copied()
            .unwrap_or(0)
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.multiplicity(u, v) > 0
    }

    pub fn degree(&self, v: usize) -> u64 {
        self.adj[v].values().map(|&c| c as u64).sum()
    }

    pub fn degrees(&self) -> Vec<u64> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    /// Neighbours of `v` in increasing order with the multiplicity of each pair.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.adj[v].iter().map(|(&w, &c)| (w, c))
    }

    /// All pairs `(u, v, m)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize, u32)> {
        let mut out = Vec::new();
        for (u, m) in self.adj.iter().enumerate() {
            for (&v, &c) in m.range(u + 1..) {
                out.push((u, v, c));
            }
        }
        out
    }

    pub fn is_simple(&self) -> bool {
        self.adj.iter().all(|m| m.values().all(|&c| c == 1))
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    pub fn add_vertices(&mut self, count: usize) -> usize {
        let first = self.order();
        self.adj.extend(std::iter::repeat_with(BTreeMap::new).take(count));
        first
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.add_edges(u, v, 1)
    }

    pub fn add_edges(&mut self, u: usize, v: usize, count: u32) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopForbidden(u));
        }
        if count == 0 {
            return Ok(());
        }
        *self.adj[u].entry(v).or_insert(0) += count;
        *self.adj[v].entry(u).or_insert(0) += count;
        Ok(())
    }

    /// Adds `uv` only when the pair is not already adjacent.
    pub fn add_simple_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        if self.is_adjacent(u, v) {
            return Ok(false);
        }
        self.add_edge(u, v)?;
        Ok(true)
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        match self.adj[u].get_mut(&v) {
            Some(c) if *c > 1 => {
                *c -= 1;
                *self.adj[v].get_mut(&u).expect("symmetric adjacency") -= 1;
            }
            Some(_) => {
                self.adj[u].remove(&v);
                self.adj[v].remove(&u);
            }
            None => return Err(Error::MissingEdge(u.min(v), u.max(v))),
        }
        Ok(())
    }

    /// Removes every parallel copy between `u` and `v`; returns how many there were.
    pub fn remove_pair(&mut self, u: usize, v: usize) -> u32 {
        let c = self.adj.get_mut(u).and_then(|m| m.remove(&v)).unwrap_or(0);
        if c > 0 {
            self.adj[v].remove(&u);
        }
        c
    }

    /// Returns a copy with one copy of each listed pair removed. Repeated
    /// pairs are removed repeatedly.
    pub fn delete_edges(&self, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut g = self.clone();
        for &(u, v) in pairs {
            g.remove_edge(u, v)?;
        }
        Ok(g)
    }

    /// Returns a copy with one copy of each listed pair added.
    pub fn with_edges(&self, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut g = self.clone();
        for &(u, v) in pairs {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Lifts the pair of edges `uv`, `vw` into the single edge `uw`.
    pub fn lift(&self, u: usize, v: usize, w: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.check_vertex(w)?;
        if u == w {
            return Err(Error::LoopForbidden(u));
        }
        if !self.is_adjacent(u, v) {
            return Err(Error::MissingEdge(u.min(v), u.max(v)));
        }
        if !self.is_adjacent(v, w) {
            return Err(Error::MissingEdge(v.min(w), v.max(w)));
        }
        let mut g = self.clone();
        g.remove_edge(u, v)?;
        g.remove_edge(v, w)?;
        g.add_edge(u, w)?;
        Ok(g)
    }

    fn membership(&self, side: &[usize]) -> Result<Vec<bool>> {
        let mut inside = vec![false; self.order()];
        for &v in side {
            self.check_vertex(v)?;
            inside[v] = true;
        }
        let count = inside.iter().filter(|&&b| b).count();
        if count == 0 || count == self.order() {
            return Err(Error::EmptySide);
        }
        Ok(inside)
    }

    /// Total multiplicity of pairs with exactly one endpoint in `side`.
    pub fn edge_cut_size(&self, side: &[usize]) -> Result<u64> {
        let inside = self.membership(side)?;
        Ok(self.crossing(&inside))
    }

    pub fn edge_cut(&self, side: &[usize]) -> Result<EdgeCut> {
        let inside = self.membership(side)?;
        let mut side: Vec<usize> = (0..self.order()).filter(|&v| inside[v]).collect();
        side.dedup();
        Ok(EdgeCut {
            size: self.crossing(&inside),
            side,
        })
    }

    pub(crate) fn crossing(&self, inside: &[bool]) -> u64 {
        let mut total = 0;
        for u in 0..self.order() {
            if !inside[u] {
                continue;
            }
            for (&v, &c) in &self.adj[u] {
                if !inside[v] {
                    total += c as u64;
                }
            }
        }
        total
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in self.adj[u].keys() {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The same vertex set with every parallel class collapsed to one edge.
    pub fn underlying_simple(&self) -> Self {
        let mut g = MultiGraph::new(self.order());
        for (u, v, _) in self.edges() {
            g.adj[u].insert(v, 1);
            g.adj[v].insert(u, 1);
        }
        g.labels = self.labels.clone();
        g
    }

    /// Complement of the underlying simple graph.
    pub fn complement(&self) -> Self {
        let n = self.order();
        let mut g = MultiGraph::new(n);
        for u in 0..n {
            for v in (u + 1)..n {
                if !self.is_adjacent(u, v) {
                    g.adj[u].insert(v, 1);
                    g.adj[v].insert(u, 1);
                }
            }
        }
        g
    }

    /// Subgraph induced by `vertices`, relabelled `0..k` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Self {
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = MultiGraph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for (&w, &c) in &self.adj[v] {
                let j = index[w];
                if j != usize::MAX {
                    g.adj[i].insert(j, c);
                }
            }
            if let Some(label) = self.labels.get(&v) {
                g.labels.insert(i, label.clone());
            }
        }
        g
    }

    /// Appends a copy of `other`; returns the offset of its first vertex.
    pub fn append(&mut self, other: &MultiGraph) -> usize {
        let offset = self.add_vertices(other.order());
        for (u, v, c) in other.edges() {
            self.adj[u + offset].insert(v + offset, c);
            self.adj[v + offset].insert(u + offset, c);
        }
        for (&v, label) in &other.labels {
            self.labels.insert(v + offset, label.clone());
        }
        offset
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) {
        self.labels.insert(v, label.into());
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    /// Same multiplicities, no labels.
    pub fn without_labels(&self) -> Self {
        MultiGraph {
            adj: self.adj.clone(),
            labels: BTreeMap::new(),
        }
    }

    /// Sorted non-increasing degree sequence.
    pub fn degree_sequence(&self) -> Vec<u64> {
        let mut seq = self.degrees();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq
    }

    /// Hex SHA-256 of the canonical edge list with labels stripped.
    pub fn canonical_hash(&self) -> String {
        use sha2::{Digest, Sha256};
        let body = self.without_labels().to_edge_list();
        let digest = Sha256::digest(body.as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}
