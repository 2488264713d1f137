use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::multigraph::MultiGraph;

/// One copy of an edge: the pair `u < v` and which parallel copy it is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeInstance {
    pub u: usize,
    pub v: usize,
    pub index: u32,
}

impl EdgeInstance {
    pub fn new(a: usize, b: usize, index: u32) -> Self {
        EdgeInstance {
            u: a.min(b),
            v: a.max(b),
            index,
        }
    }
}

/// Path between corners `between.0 < between.1` (indices into `corners`),
/// listed from the first corner to the second.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CornerPath {
    pub between: (usize, usize),
    pub edges: Vec<EdgeInstance>,
}

/// Witness of a `K_t` immersion: an injection of corner indices into the
/// graph and pairwise edge-disjoint paths, one per pair of corners.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImmersionCertificate {
    pub t: usize,
    pub corners: Vec<usize>,
    pub paths: Vec<CornerPath>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertificateDefect {
    WrongCornerCount { expected: usize, found: usize },
    CornerOutOfRange(usize),
    DuplicateCorner(usize),
    MissingPath(usize, usize),
    DuplicatePath(usize, usize),
    BadPairIndex(usize, usize),
    EmptyPath(usize, usize),
    EdgeMissing(EdgeInstance),
    BrokenPath { between: (usize, usize), at: usize },
    WrongEndpoint(usize, usize),
    RepeatedVertex { between: (usize, usize), vertex: usize },
    EdgeReuse(EdgeInstance),
}

impl std::fmt::Display for CertificateDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

impl ImmersionCertificate {
    /// Vertex sequence of path `p`, starting at its first corner.
    pub fn vertex_sequence(&self, p: &CornerPath) -> Option<Vec<usize>> {
        let mut cur = *self.corners.get(p.between.0)?;
        let mut seq = vec![cur];
        for e in &p.edges {
            cur = if e.u == cur {
                e.v
            } else if e.v == cur {
                e.u
            } else {
                return None;
            };
            seq.push(cur);
        }
        Some(seq)
    }

    /// Interior vertices over all paths (pegs and any corners used as pegs).
    pub fn interior_vertices(&self) -> BTreeSet<usize> {
        self.paths
            .iter()
            .filter_map(|p| self.vertex_sequence(p))
            .flat_map(|seq| {
                let k = seq.len();
                seq.into_iter().skip(1).take(k.saturating_sub(2))
            })
            .collect()
    }

    pub fn pegs(&self) -> BTreeSet<usize> {
        let corners: BTreeSet<usize> = self.corners.iter().copied().collect();
        self.interior_vertices()
            .into_iter()
            .filter(|v| !corners.contains(v))
            .collect()
    }

    pub fn total_length(&self) -> usize {
        self.paths.iter().map(|p| p.edges.len()).sum()
    }
}

/// Checks that `cert` witnesses a `K_t` immersion in `g`: corners are
/// distinct vertices, every pair of corners has exactly one simple path
/// between them, and no edge copy is used twice.
pub fn verify_certificate(
    g: &MultiGraph,
    cert: &ImmersionCertificate,
) -> Result<(), CertificateDefect> {
    let t = cert.t;
    if cert.corners.len() != t {
        return Err(CertificateDefect::WrongCornerCount {
            expected: t,
            found: cert.corners.len(),
        });
    }
    let mut seen_corner = BTreeSet::new();
    for &c in &cert.corners {
        if c >= g.order() {
            return Err(CertificateDefect::CornerOutOfRange(c));
        }
        if !seen_corner.insert(c) {
            return Err(CertificateDefect::DuplicateCorner(c));
        }
    }

    let mut by_pair: BTreeMap<(usize, usize), &CornerPath> = BTreeMap::new();
    for p in &cert.paths {
        let (i, j) = p.between;
        if i >= j || j >= t {
            return Err(CertificateDefect::BadPairIndex(i, j));
        }
        if by_pair.insert((i, j), p).is_some() {
            return Err(CertificateDefect::DuplicatePath(i, j));
        }
    }

    let mut used: BTreeSet<EdgeInstance> = BTreeSet::new();
    for i in 0..t {
        for j in (i + 1)..t {
            let p = by_pair
                .get(&(i, j))
                .ok_or(CertificateDefect::MissingPath(i, j))?;
            if p.edges.is_empty() {
                return Err(CertificateDefect::EmptyPath(i, j));
            }
            let mut cur = cert.corners[i];
            let mut visited = BTreeSet::from([cur]);
            for (k, e) in p.edges.iter().enumerate() {
                if e.u >= e.v || e.index >= g.multiplicity(e.u, e.v) {
                    return Err(CertificateDefect::EdgeMissing(*e));
                }
                cur = if e.u == cur {
                    e.v
                } else if e.v == cur {
                    e.u
                } else {
                    return Err(CertificateDefect::BrokenPath {
                        between: (i, j),
                        at: k,
                    });
                };
                if !visited.insert(cur) {
                    return Err(CertificateDefect::RepeatedVertex {
                        between: (i, j),
                        vertex: cur,
                    });
                }
                if !used.insert(*e) {
                    return Err(CertificateDefect::EdgeReuse(*e));
                }
            }
            if cur != cert.corners[j] {
                return Err(CertificateDefect::WrongEndpoint(i, j));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn direct_certificate(t: usize) -> ImmersionCertificate {
        let mut paths = Vec::new();
        for i in 0..t {
            for j in (i + 1)..t {
                paths.push(CornerPath {
                    between: (i, j),
                    edges: vec![EdgeInstance::new(i, j, 0)],
                });
            }
        }
        ImmersionCertificate {
            t,
            corners: (0..t).collect(),
            paths,
        }
    }

    #[test]
    fn k4_identity_certificate() {
        let g = MultiGraph::complete(4);
        assert_eq!(verify_certificate(&g, &direct_certificate(4)), Ok(()));
    }

    #[test]
    fn reused_edge_is_rejected() {
        let g = MultiGraph::complete(4);
        let mut cert = direct_certificate(4);
        // route 0-1 through 2 using the edges already taken by 0-2 and 1-2
        cert.paths[0].edges = vec![EdgeInstance::new(0, 2, 0), EdgeInstance::new(2, 1, 0)];
        assert!(matches!(
            verify_certificate(&g, &cert),
            Err(CertificateDefect::EdgeReuse(_))
        ));
    }

    #[test]
    fn triangle_in_five_cycle() {
        // C5 = 0-1-2-3-4-0, corners 0, 2, 3
        let g = MultiGraph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let cert = ImmersionCertificate {
            t: 3,
            corners: vec![0, 2, 3],
            paths: vec![
                CornerPath {
                    between: (0, 1),
                    edges: vec![EdgeInstance::new(0, 1, 0), EdgeInstance::new(1, 2, 0)],
                },
                CornerPath {
                    between: (0, 2),
                    edges: vec![EdgeInstance::new(0, 4, 0), EdgeInstance::new(4, 3, 0)],
                },
                CornerPath {
                    between: (1, 2),
                    edges: vec![EdgeInstance::new(2, 3, 0)],
                },
            ],
        };
        assert_eq!(verify_certificate(&g, &cert), Ok(()));
        assert_eq!(cert.pegs(), BTreeSet::from([1, 4]));
    }

    #[test]
    fn parallel_copies_are_distinct() {
        let mut g = MultiGraph::new(3);
        g.add_edges(0, 1, 2).unwrap();
        g.add_edge(1, 2).unwrap();
        let cert = ImmersionCertificate {
            t: 3,
            corners: vec![0, 1, 2],
            paths: vec![
                CornerPath {
                    between: (0, 1),
                    edges: vec![EdgeInstance::new(0, 1, 0)],
                },
                CornerPath {
                    between: (0, 2),
                    edges: vec![EdgeInstance::new(0, 1, 1), EdgeInstance::new(1, 2, 0)],
                },
                CornerPath {
                    between: (1, 2),
                    edges: vec![EdgeInstance::new(1, 2, 0)],
                },
            ],
        };
        assert!(matches!(
            verify_certificate(&g, &cert),
            Err(CertificateDefect::EdgeReuse(_))
        ));
        let mut bad_index = cert.clone();
        bad_index.paths[0].edges[0].index = 2;
        assert!(matches!(
            verify_certificate(&g, &bad_index),
            Err(CertificateDefect::EdgeMissing(_))
        ));
    }

    #[test]
    fn structural_defects() {
        let g = MultiGraph::complete(4);
        let mut cert = direct_certificate(4);
        cert.corners[3] = 0;
        assert!(matches!(
            verify_certificate(&g, &cert),
            Err(CertificateDefect::DuplicateCorner(0))
        ));
        let mut cert = direct_certificate(4);
        cert.paths.pop();
        assert!(matches!(
            verify_certificate(&g, &cert),
            Err(CertificateDefect::MissingPath(2, 3))
        ));
        let mut cert = direct_certificate(4);
        cert.paths[0].edges = vec![EdgeInstance::new(2, 3, 0)];
        assert!(matches!(
            verify_certificate(&g, &cert),
            Err(CertificateDefect::BrokenPath { .. })
        ));
    }
}
