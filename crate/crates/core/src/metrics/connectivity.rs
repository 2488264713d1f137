use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::multigraph::{EdgeCut, MultiGraph};

/// Stoer–Wagner global minimum cut with multiplicities as weights.
///
/// Returns `None` for graphs with fewer than two vertices.
pub fn global_min_cut(g: &MultiGraph) -> Option<EdgeCut> {
    let n = g.order();
    if n < 2 {
        return None;
    }
    let comps = g.components();
    if comps.len() > 1 {
        return Some(EdgeCut {
            side: comps[0].clone(),
            size: 0,
        });
    }

    let mut w = vec![vec![0u64; n]; n];
    for (u, v, c) in g.edges() {
        w[u][v] = c as u64;
        w[v][u] = c as u64;
    }
    let mut groups: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut active: Vec<usize> = (0..n).collect();
    let mut best: Option<EdgeCut> = None;

    while active.len() > 1 {
        let mut added = vec![false; n];
        let mut attach = vec![0u64; n];
        let mut prev = usize::MAX;
        for step in 0..active.len() {
            let v = *active
                .iter()
                .filter(|&&v| !added[v])
                .max_by(|&&a, &&b| attach[a].cmp(&attach[b]).then(b.cmp(&a)))
                .expect("an unadded active vertex remains");
            added[v] = true;
            if step + 1 == active.len() {
                if best.as_ref().is_none_or(|b| attach[v] < b.size) {
                    let mut side = groups[v].clone();
                    side.sort_unstable();
                    best = Some(EdgeCut {
                        side,
                        size: attach[v],
                    });
                }
                let merged = std::mem::take(&mut groups[v]);
                groups[prev].extend(merged);
                for &x in &active {
                    if x != v && x != prev {
                        w[prev][x] += w[v][x];
                        w[x][prev] = w[prev][x];
                    }
                }
                active.retain(|&x| x != v);
            } else {
                prev = v;
                for &x in &active {
                    attach[x] += w[v][x];
                }
            }
        }
    }
    best
}

/// Global edge connectivity. Disconnected graphs and single vertices give 0.
pub fn edge_connectivity(g: &MultiGraph) -> Result<u64> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    Ok(global_min_cut(g).map_or(0, |c| c.size))
}

/// Number of internally vertex-disjoint paths between non-adjacent `s`, `t`
/// in the underlying simple graph, capped at `limit`.
pub fn local_vertex_connectivity(g: &MultiGraph, s: usize, t: usize, limit: u64) -> u64 {
    let n = g.order();
    let inf = n as u64 + 1;
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        let cap = if v == s || v == t { inf } else { 1 };
        net.add_arc(2 * v, 2 * v + 1, cap);
    }
    for (u, v, _) in g.edges() {
        net.add_arc(2 * u + 1, 2 * v, inf);
        net.add_arc(2 * v + 1, 2 * u, inf);
    }
    net.max_flow(2 * s + 1, 2 * t, limit)
}

/// Vertex connectivity of the underlying simple graph; `n - 1` for complete
/// graphs and 0 for disconnected ones.
pub fn vertex_connectivity(g: &MultiGraph) -> Result<usize> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Ok(0);
    }
    let mut best = n - 1;
    for i in 0..n {
        if i > best {
            break;
        }
        for j in 0..n {
            if j == i || g.is_adjacent(i, j) {
                continue;
            }
            let k = local_vertex_connectivity(g, i, j, best as u64) as usize;
            best = best.min(k);
        }
    }
    Ok(best)
}
