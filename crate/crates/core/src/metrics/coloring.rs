use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::multigraph::MultiGraph;

fn simple_adjacency(g: &MultiGraph) -> Vec<Bitset> {
    let n = g.order();
    let mut adj = vec![Bitset::new(n); n];
    for (u, v, _) in g.edges() {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    adj
}

struct CliqueSearch<'a> {
    adj: &'a [Bitset],
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl CliqueSearch<'_> {
    /// Greedy sequential colouring of `cand`; vertices come back ordered by
    /// colour class with the class number as an upper bound.
    fn color_sort(&self, cand: &[usize]) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::with_capacity(cand.len());
        let mut bounds = Vec::with_capacity(cand.len());
        let mut uncolored: Vec<usize> = cand.to_vec();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut class: Vec<usize> = Vec::new();
            uncolored.retain(|&v| {
                if class.iter().any(|&u| self.adj[u].contains(v)) {
                    true
                } else {
                    class.push(v);
                    false
                }
            });
            for v in class {
                order.push(v);
                bounds.push(color);
            }
        }
        (order, bounds)
    }

    fn expand(&mut self, cand: Vec<usize>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.nodes));
        }
        let (order, bounds) = self.color_sort(&cand);
        let mut alive = vec![true; order.len()];
        for i in (0..order.len()).rev() {
            if self.current.len() + bounds[i] <= self.best.len() {
                return Ok(());
            }
            let v = order[i];
            self.current.push(v);
            let next: Vec<usize> = (0..i)
                .filter(|&j| alive[j] && self.adj[v].contains(order[j]))
                .map(|j| order[j])
                .collect();
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next)?;
            }
            self.current.pop();
            alive[i] = false;
        }
        Ok(())
    }
}

/// A maximum clique of the underlying simple graph, as sorted vertices.
pub fn maximum_clique(g: &MultiGraph, budget: u64) -> Result<Vec<usize>> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let adj = simple_adjacency(g);
    let mut cand: Vec<usize> = (0..n).collect();
    cand.sort_by_key(|&v| (std::cmp::Reverse(adj[v].count()), v));
    let mut search = CliqueSearch {
        adj: &adj,
        best: vec![cand[0]],
        current: Vec::new(),
        nodes: 0,
        budget,
    };
    search.expand(cand)?;
    let mut best = search.best;
    best.sort_unstable();
    Ok(best)
}

pub fn clique_number(g: &MultiGraph, budget: u64) -> Result<usize> {
    maximum_clique(g, budget).map(|c| c.len())
}

/// DSATUR colouring. Ties on saturation go to higher degree, then lower
/// index; colours are tried in index order.
pub fn dsatur_coloring(g: &MultiGraph) -> Vec<usize> {
    let adj = simple_adjacency(g);
    let n = g.order();
    let degree: Vec<usize> = adj.iter().map(Bitset::count).collect();
    let mut color = vec![usize::MAX; n];
    let mut seen: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut sat = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by(|&a, &b| {
                (sat[a], degree[a])
                    .cmp(&(sat[b], degree[b]))
                    .then(b.cmp(&a))
            })
            .expect("uncoloured vertex");
        let c = (0..).find(|&c| !seen[v].get(c).copied().unwrap_or(false)).unwrap();
        color[v] = c;
        for w in adj[v].iter() {
            if seen[w].len() <= c {
                seen[w].resize(c + 1, false);
            }
            if !seen[w][c] {
                seen[w][c] = true;
                sat[w] += 1;
            }
        }
    }
    color
}

struct ColoringSearch<'a> {
    adj: &'a [Bitset],
    degree: Vec<usize>,
    color: Vec<usize>,
    /// `counts[v][c]`: coloured neighbours of `v` holding colour `c`.
    counts: Vec<Vec<u32>>,
    sat: Vec<usize>,
    best: usize,
    lower: usize,
    nodes: u64,
    budget: u64,
}

impl ColoringSearch<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for w in self.adj[v].iter() {
            if self.counts[w][c] == 0 {
                self.sat[w] += 1;
            }
            self.counts[w][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = usize::MAX;
        for w in self.adj[v].iter() {
            self.counts[w][c] -= 1;
            if self.counts[w][c] == 0 {
                self.sat[w] -= 1;
            }
        }
    }

    fn search(&mut self, colored: usize, used: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded(self.nodes));
        }
        let n = self.color.len();
        if colored == n {
            self.best = used;
            return Ok(());
        }
        let v = (0..n)
            .filter(|&v| self.color[v] == usize::MAX)
            .max_by(|&a, &b| {
                (self.sat[a], self.degree[a])
                    .cmp(&(self.sat[b], self.degree[b]))
                    .then(b.cmp(&a))
            })
            .expect("uncoloured vertex");
        // a new colour is only worth opening if it stays below the incumbent
        let limit = (used + 1).min(self.best - 1);
        for c in 0..limit {
            if self.counts[v][c] > 0 {
                continue;
            }
            self.assign(v, c);
            self.search(colored + 1, used.max(c + 1))?;
            self.unassign(v, c);
            if self.best <= self.lower {
                return Ok(());
            }
        }
        Ok(())
    }
}

/// Exact chromatic number of the underlying simple graph.
pub fn chromatic_number(g: &MultiGraph, budget: u64) -> Result<usize> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let greedy = dsatur_coloring(g);
    let upper = greedy.iter().max().map_or(0, |&c| c + 1);
    let lower = clique_number(g, budget)?;
    if lower == upper {
        return Ok(upper);
    }
    let adj = simple_adjacency(g);
    let mut search = ColoringSearch {
        degree: adj.iter().map(Bitset::count).collect(),
        adj: &adj,
        color: vec![usize::MAX; n],
        counts: vec![vec![0; upper]; n],
        sat: vec![0; n],
        best: upper,
        lower,
        nodes: 0,
        budget,
    };
    search.search(0, 0)?;
    Ok(search.best)
}
