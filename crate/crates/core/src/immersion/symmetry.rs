//! Vertex orbits of the automorphism group, found by colour refinement plus
//! an individualise-and-refine search for explicit automorphisms.
//!
//! Two vertices are only merged into one orbit once an automorphism mapping
//! one to the other has been found and checked, so the orbit partition is
//! never coarser than the true one. When the per-pair search limit runs out
//! the vertices simply stay apart.

use crate::multigraph::MultiGraph;

struct Adjacency {
    nbrs: Vec<Vec<(usize, u32)>>,
}

impl Adjacency {
    fn new(g: &MultiGraph) -> Self {
        Adjacency {
            nbrs: (0..g.order()).map(|v| g.neighbors(v).collect()).collect(),
        }
    }

    fn refine(&self, colors: &mut [u32]) {
        let n = colors.len();
        let mut classes = count_classes(colors);
        loop {
            let mut sigs: Vec<(u32, Vec<(u32, u32)>, usize)> = (0..n)
                .map(|v| {
                    let mut s: Vec<(u32, u32)> =
                        self.nbrs[v].iter().map(|&(w, c)| (colors[w], c)).collect();
                    s.sort_unstable();
                    (colors[v], s, v)
                })
                .collect();
            sigs.sort_unstable();
            let mut next = 0u32;
            for i in 0..n {
                if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                    next += 1;
                }
                colors[sigs[i].2] = next;
            }
            let now = next as usize + 1;
            if now == classes {
                return;
            }
            classes = now;
        }
    }

    fn is_automorphism(&self, sigma: &[usize]) -> bool {
        self.nbrs.iter().enumerate().all(|(u, list)| {
            list.iter().all(|&(w, c)| {
                self.nbrs[sigma[u]]
                    .binary_search_by_key(&sigma[w], |&(x, _)| x)
                    .is_ok_and(|i| self.nbrs[sigma[u]][i].1 == c)
            })
        })
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c: Vec<u32> = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn histogram(colors: &[u32]) -> Vec<usize> {
    let mut h = vec![0usize; colors.len()];
    for &c in colors {
        h[c as usize] += 1;
    }
    h
}

fn individualize(colors: &[u32], v: usize) -> Vec<u32> {
    colors
        .iter()
        .enumerate()
        .map(|(x, &c)| 2 * c + u32::from(x != v))
        .collect()
}

struct MappingSearch<'a> {
    adj: &'a Adjacency,
    leaves: u32,
    limit: u32,
}

impl MappingSearch<'_> {
    fn search(&mut self, left: Vec<u32>, right: Vec<u32>) -> Option<Vec<usize>> {
        let hl = histogram(&left);
        if hl != histogram(&right) {
            return None;
        }
        let n = left.len();
        let Some(cell) = (0..n).find(|&c| hl[c] > 1) else {
            self.leaves += 1;
            let mut at = vec![0usize; n];
            for (y, &c) in right.iter().enumerate() {
                at[c as usize] = y;
            }
            let sigma: Vec<usize> = left.iter().map(|&c| at[c as usize]).collect();
            return self.adj.is_automorphism(&sigma).then_some(sigma);
        };
        let x = (0..n).find(|&v| left[v] as usize == cell)?;
        let mut l = individualize(&left, x);
        self.adj.refine(&mut l);
        for y in (0..n).filter(|&v| right[v] as usize == cell) {
            if self.leaves >= self.limit {
                return None;
            }
            let mut r = individualize(&right, y);
            self.adj.refine(&mut r);
            if let Some(sigma) = self.search(l.clone(), r) {
                return Some(sigma);
            }
        }
        None
    }
}

fn find(parent: &mut [usize], mut v: usize) -> usize {
    while parent[v] != v {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    v
}

/// Orbit id of every vertex. Ids are the smallest vertex of each orbit.
pub fn vertex_orbits(g: &MultiGraph, leaf_limit: u32) -> Vec<usize> {
    let n = g.order();
    let adj = Adjacency::new(g);
    let mut base = vec![0u32; n];
    adj.refine(&mut base);
    let mut parent: Vec<usize> = (0..n).collect();
    let mut reps: Vec<usize> = Vec::new();
    for v in 0..n {
        let mut merged = false;
        for &r in &reps {
            if base[r] != base[v] {
                continue;
            }
            if find(&mut parent, r) == find(&mut parent, v) {
                merged = true;
                break;
            }
            let mut l = individualize(&base, r);
            adj.refine(&mut l);
            let mut rr = individualize(&base, v);
            adj.refine(&mut rr);
            let mut search = MappingSearch {
                adj: &adj,
                leaves: 0,
                limit: leaf_limit,
            };
            if let Some(sigma) = search.search(l, rr) {
                for (x, &y) in sigma.iter().enumerate() {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
                merged = true;
                break;
            }
        }
        if !merged {
            reps.push(v);
        }
    }
    let mut orbit = vec![0usize; n];
    let mut smallest = vec![usize::MAX; n];
    for v in 0..n {
        let r = find(&mut parent, v);
        smallest[r] = smallest[r].min(v);
    }
    for v in 0..n {
        let r = find(&mut parent, v);
        orbit[v] = smallest[r];
    }
    orbit
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_transitive_graphs_have_one_orbit() {
        let c7 = MultiGraph::from_edges(7, (0..7).map(|i| (i, (i + 1) % 7))).unwrap();
        assert!(vertex_orbits(&c7, 1000).iter().all(|&o| o == 0));
        let k5 = MultiGraph::complete(5);
        assert!(vertex_orbits(&k5, 1000).iter().all(|&o| o == 0));
        // K12 minus four disjoint triangles
        let mut g = MultiGraph::complete(12);
        for t in 0..4 {
            let b = 3 * t;
            for (u, v) in [(b, b + 1), (b + 1, b + 2), (b, b + 2)] {
                g.remove_edge(u, v).unwrap();
            }
        }
        assert!(vertex_orbits(&g, 1000).iter().all(|&o| o == 0));
    }

    #[test]
    fn path_orbits() {
        let p4 = MultiGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(vertex_orbits(&p4, 1000), vec![0, 1, 1, 0]);
    }

    #[test]
    fn multiplicity_breaks_symmetry() {
        let mut g = MultiGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        g.add_edge(0, 1).unwrap();
        assert_eq!(vertex_orbits(&g, 1000), vec![0, 1, 2]);
    }

    #[test]
    fn regular_but_not_transitive() {
        // the disjoint union C3 + C4 is 2-regular with two orbits;
        // refinement alone cannot split it
        let g = MultiGraph::from_edges(
            7,
            [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (3, 6)],
        )
        .unwrap();
        assert_eq!(vertex_orbits(&g, 1000), vec![0, 0, 0, 3, 3, 3, 3]);
    }
}
