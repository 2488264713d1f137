//! Shared fixtures: the connected small-graph corpus and a brute-force
//! immersion oracle that shares no code with the library search.

#![allow(dead_code)]

use std::collections::BTreeSet;

use immlab::MultiGraph;
use rand::Rng;

/// Adjacency bitmasks of a simple graph on at most 8 vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Small {
    pub n: usize,
    pub adj: Vec<u8>,
}

impl Small {
    pub fn to_graph(&self) -> MultiGraph {
        let mut g = MultiGraph::new(self.n);
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.adj[u] >> v & 1 == 1 {
                    g.add_edge(u, v).unwrap();
                }
            }
        }
        g
    }

    /// Upper-triangle bit string under `perm` (new index -> old vertex).
    fn code(&self, perm: &[usize]) -> u64 {
        let mut code = 0u64;
        for j in 1..self.n {
            for i in 0..j {
                code = code << 1 | u64::from(self.adj[perm[i]] >> perm[j] & 1);
            }
        }
        code
    }

    /// Maximum code over permutations that list vertices by non-increasing
    /// degree. Every isomorphism respects degrees, so this is canonical.
    pub fn canonical(&self) -> u64 {
        let deg: Vec<u32> = self.adj.iter().map(|a| a.count_ones()).collect();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(deg[v]));
        for v in order {
            match classes.last_mut() {
                Some(c) if deg[c[0]] == deg[v] => c.push(v),
                _ => classes.push(vec![v]),
            }
        }
        let mut best = 0;
        let mut perm = Vec::with_capacity(self.n);
        self.search(&classes, 0, &mut vec![false; self.n], &mut perm, &mut best);
        best
    }

    fn search(&self, classes: &[Vec<usize>], ci: usize, used: &mut Vec<bool>, perm: &mut Vec<usize>, best: &mut u64) {
        if perm.len() == self.n {
            *best = (*best).max(self.code(perm));
            return;
        }
        let class = &classes[ci];
        let filled = perm.len() - classes[..ci].iter().map(|c| c.len()).sum::<usize>();
        let next = if filled + 1 == class.len() { ci + 1 } else { ci };
        for &v in class {
            if !used[v] {
                used[v] = true;
                perm.push(v);
                self.search(classes, next, used, perm, best);
                perm.pop();
                used[v] = false;
            }
        }
    }
}

/// Connected simple graphs on `1..=max_n` vertices, one per isomorphism class.
/// Every connected graph has a vertex whose removal leaves it connected, so
/// extending each connected graph by one vertex reaches every class.
pub fn corpus(max_n: usize) -> Vec<Small> {
    let mut all = Vec::new();
    let mut layer = vec![Small { n: 1, adj: vec![0] }];
    for n in 1..=max_n {
        all.extend(layer.iter().cloned());
        if n == max_n {
            break;
        }
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &layer {
            for mask in 1u8..(1 << n) {
                let mut adj = g.adj.clone();
                adj.push(mask);
                for (v, a) in adj.iter_mut().enumerate().take(n) {
                    *a |= (mask >> v & 1) << n;
                }
                let h = Small { n: n + 1, adj };
                if seen.insert(h.canonical()) {
                    next.push(h);
                }
            }
        }
        layer = next;
    }
    all
}

/// Decides `K_t` immersion by trying every corner set and routing every
/// pair by plain depth-first search over edge-disjoint paths.
pub fn oracle_immerses(g: &MultiGraph, t: usize) -> bool {
    let n = g.order();
    if t <= 1 {
        return n >= t;
    }
    let mut cap = vec![vec![0u32; n]; n];
    for (u, v, m) in g.edges() {
        cap[u][v] = m;
        cap[v][u] = m;
    }
    let mut corners = Vec::new();
    subsets(n, t, 0, &mut corners, &mut |c| {
        let pairs: Vec<(usize, usize)> = (0..t)
            .flat_map(|i| ((i + 1)..t).map(move |j| (i, j)))
            .map(|(i, j)| (c[i], c[j]))
            .collect();
        route_all(&mut cap.clone(), &pairs, 0)
    })
}

fn subsets(n: usize, k: usize, from: usize, acc: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if acc.len() == k {
        return f(acc);
    }
    for v in from..n {
        acc.push(v);
        let done = subsets(n, k, v + 1, acc, f);
        acc.pop();
        if done {
            return true;
        }
    }
    false
}

fn route_all(cap: &mut Vec<Vec<u32>>, pairs: &[(usize, usize)], i: usize) -> bool {
    if i == pairs.len() {
        return true;
    }
    let (s, t) = pairs[i];
    let mut visited = vec![false; cap.len()];
    visited[s] = true;
    extend(cap, pairs, i, s, t, &mut visited)
}

fn extend(cap: &mut Vec<Vec<u32>>, pairs: &[(usize, usize)], i: usize, at: usize, target: usize, visited: &mut Vec<bool>) -> bool {
    for w in 0..cap.len() {
        if cap[at][w] == 0 || visited[w] {
            continue;
        }
        cap[at][w] -= 1;
        cap[w][at] -= 1;
        let ok = if w == target {
            route_all(cap, pairs, i + 1)
        } else {
            visited[w] = true;
            let ok = extend(cap, pairs, i, w, target, visited);
            visited[w] = false;
            ok
        };
        cap[at][w] += 1;
        cap[w][at] += 1;
        if ok {
            return true;
        }
    }
    false
}

/// Disjoint union of `a` and `b` joined by `cut` edges chosen at random.
pub fn planted_cut<R: Rng>(a: &MultiGraph, b: &MultiGraph, cut: usize, rng: &mut R) -> MultiGraph {
    let mut g = a.clone();
    let offset = g.append(b);
    for _ in 0..cut {
        let u = rng.gen_range(0..a.order());
        let v = offset + rng.gen_range(0..b.order());
        g.add_edge(u, v).unwrap();
    }
    g
}

/// Random multigraph on `n` vertices with each pair present with
/// probability `p` and multiplicity up to `max_mult`.
pub fn random_multigraph<R: Rng>(n: usize, p: f64, max_mult: u32, rng: &mut R) -> MultiGraph {
    let mut g = MultiGraph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                g.add_edges(u, v, rng.gen_range(1..=max_mult)).unwrap();
            }
        }
    }
    g
}
