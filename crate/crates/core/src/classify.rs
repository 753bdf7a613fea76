//! Simple and simplicial cut polytopes: structural classification and a
//! hull-based oracle.

use std::collections::VecDeque;
use std::fmt;

use crate::error::Result;
use crate::graph::{blocks, components, enumerate_cuts, triangles, Graph};
use crate::polytope::{brute_hull_incidence, cycle_inequality, LinearInequality};

/// The graphs without isolated nodes whose cut polytope is simplicial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SimplicialGraph {
    K2,
    TwoK2,
    PathP3,
    K3,
    K4,
    C4,
}

impl SimplicialGraph {
    pub const ALL: [SimplicialGraph; 6] = [Self::K2, Self::TwoK2, Self::PathP3, Self::K3, Self::K4, Self::C4];

    pub fn graph(self) -> Graph {
        match self {
            Self::K2 => Graph::complete(2),
            Self::TwoK2 => Graph::unit(4, &[(0, 1), (2, 3)]),
            Self::PathP3 => Graph::unit(3, &[(0, 1), (0, 2)]),
            Self::K3 => Graph::complete(3),
            Self::K4 => Graph::complete(4),
            Self::C4 => Graph::cycle(4),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::K2 => "K2",
            Self::TwoK2 => "K2 + K2 (disjoint)",
            Self::PathP3 => "K2 1-sum K2",
            Self::K3 => "K3",
            Self::K4 => "K4",
            Self::C4 => "C4",
        }
    }
}

/// Why a cut polytope with at least one facet per vertex is not simplicial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProofCase {
    /// (a): triangle-free; the facet `x_e >= 0` holds `2^(n-2)` cuts.
    TriangleFree,
    /// (b): some triangle; its sum inequality holds `3 * 2^(n-3)` cuts.
    Triangle,
    /// Disconnected on five or more nodes: a product that is not of two segments.
    Product,
}

impl ProofCase {
    pub fn label(self) -> &'static str {
        match self {
            Self::TriangleFree => "triangle-free",
            Self::Triangle => "triangle",
            Self::Product => "product",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimpleReason {
    /// Every block is a single edge or a triangle.
    C4MinorFree,
    /// A 2-connected block other than a triangle, and facets through the
    /// origin exceeding the dimension.
    C4Minor {
        block_nodes: Vec<usize>,
        origin_facets: Vec<LinearInequality>,
        block_edges: usize,
    },
    /// No edges: the polytope is a point.
    Point,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimplicialReason {
    Listed(SimplicialGraph),
    NotListed { nodes: usize, case: ProofCase },
    Point,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub simple: bool,
    pub simplicial: bool,
    pub simple_reason: SimpleReason,
    pub simplicial_reason: SimplicialReason,
}

impl fmt::Display for SimpleReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleReason::C4MinorFree => write!(f, "C4-minor-free: every block is an edge or a triangle"),
            SimpleReason::C4Minor {
                block_nodes,
                origin_facets,
                block_edges,
            } => {
                let nodes: Vec<String> = block_nodes.iter().map(|v| (v + 1).to_string()).collect();
                write!(
                    f,
                    "C4 minor in block {}: origin lies on {} facets from a block with {block_edges} edges",
                    nodes.join(","),
                    origin_facets.len()
                )
            }
            SimpleReason::Point => write!(f, "no edges: the polytope is a point"),
        }
    }
}

impl fmt::Display for SimplicialReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimplicialReason::Listed(s) => write!(f, "isomorphic to {}", s.name()),
            SimplicialReason::NotListed { nodes, case } => {
                write!(f, "not a listed graph ({nodes} nodes), case {}", case.label())
            }
            SimplicialReason::Point => write!(f, "no edges: the polytope is a point"),
        }
    }
}

/// Whether every block is a single edge or a triangle.
pub fn is_c4_minor_free(g: &Graph) -> bool {
    blocks(g)
        .blocks
        .iter()
        .all(|b| b.edges.len() == 1 || (b.nodes.len() == 3 && b.edges.len() == 3))
}

fn canonical_form(g: &Graph) -> (usize, u64) {
    let n = g.node_count();
    debug_assert!(n <= 6);
    let adj = g.adjacency_masks();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut code = 0u64;
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if adj[perm[i]] >> perm[j] & 1 == 1 {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(code);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    (n, best)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Whether `g` (without isolated nodes) is isomorphic to a listed graph.
pub fn simplicial_match(g: &Graph) -> Option<SimplicialGraph> {
    if g.node_count() > 4 {
        return None;
    }
    let form = canonical_form(g);
    SimplicialGraph::ALL
        .into_iter()
        .find(|s| canonical_form(&s.graph()) == form)
}

/// Shortest `u`-`v` path avoiding edge `skip`, as a node list.
fn shortest_path_avoiding(g: &Graph, u: usize, v: usize, skip: usize) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; g.node_count()];
    prev[u] = u;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        for &(y, e) in g.neighbors(x) {
            if e != skip && prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    if prev[v] == usize::MAX {
        return None;
    }
    let mut path = vec![v];
    while *path.last().unwrap() != u {
        path.push(prev[*path.last().unwrap()]);
    }
    path.reverse();
    Some(path)
}

/// Up to `limit` induced `u`-`v` paths of length at least 2 in `g - uv`; each
/// closes a chordless cycle with `uv`.
fn induced_paths(g: &Graph, u: usize, v: usize, limit: usize) -> Vec<Vec<usize>> {
    fn grow(g: &Graph, path: &mut Vec<usize>, v: usize, limit: usize, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        let nbrs: Vec<usize> = g.neighbors(last).iter().map(|&(w, _)| w).collect();
        for w in nbrs {
            if out.len() >= limit {
                return;
            }
            if path.contains(&w) {
                continue;
            }
            if w == v {
                if path.len() >= 2 {
                    let mut p = path.clone();
                    p.push(v);
                    out.push(p);
                }
                continue;
            }
            // w must see no path node except `last`, and v only as the next step
            let clash = path[..path.len() - 1].iter().any(|&x| g.has_edge(x, w));
            if clash {
                continue;
            }
            path.push(w);
            if g.has_edge(w, v) {
                let mut p = path.clone();
                p.push(v);
                out.push(p);
            } else {
                grow(g, path, v, limit, out);
            }
            path.pop();
        }
    }
    let mut out = Vec::new();
    let mut path = vec![u];
    grow(g, &mut path, v, limit, &mut out);
    out
}

/// Facets of the cut polytope of a 2-connected block `b` other than a
/// triangle that all contain the origin, `|E(b)| + 1` or more of them.
fn origin_facets(b: &Graph) -> Vec<LinearInequality> {
    let m = b.edge_count();
    let mut out = Vec::new();
    let single = |e: usize, cycle: &[usize]| cycle_inequality(b, cycle, &[e]).expect("cycle through e");
    for e in 0..m {
        let ed = b.edge(e);
        let p = shortest_path_avoiding(b, ed.u, ed.v, e).expect("2-connected");
        out.push(single(e, &p));
    }
    let is_cycle = (0..b.node_count()).all(|v| b.degree(v) == 2);
    if is_cycle {
        for e in 0..m {
            out.push(LinearInequality::from_terms(m, &[(e, -1)], 0).unwrap());
        }
        return out;
    }
    for e in 0..m {
        let ed = b.edge(e);
        let paths = induced_paths(b, ed.u, ed.v, 2);
        if paths.len() == 2 {
            for p in paths {
                let q = single(e, &p);
                if !out.contains(&q) {
                    out.push(q);
                    return out;
                }
            }
        }
    }
    unreachable!("a 2-connected non-cycle has an edge on two chordless cycles")
}

/// Classifies the cut polytope of `g` as simple and/or simplicial. Isolated
/// nodes are dropped first.
pub fn classify(g: &Graph) -> ClassificationReport {
    let (g, _) = if g.isolated_nodes().is_empty() {
        (g.clone(), Vec::new())
    } else {
        log::warn!(
            "dropping {} isolated node(s) before classification",
            g.isolated_nodes().len()
        );
        g.without_isolated()
    };
    if g.edge_count() == 0 {
        return ClassificationReport {
            simple: true,
            simplicial: true,
            simple_reason: SimpleReason::Point,
            simplicial_reason: SimplicialReason::Point,
        };
    }

    let simple_reason = match blocks(&g)
        .blocks
        .into_iter()
        .find(|b| b.edges.len() > 1 && !(b.nodes.len() == 3 && b.edges.len() == 3))
    {
        None => SimpleReason::C4MinorFree,
        Some(b) => {
            let (bg, _, emap) = g.edge_subgraph(&b.edges);
            let lifted = origin_facets(&bg)
                .into_iter()
                .map(|q| {
                    let terms: Vec<(usize, i64)> = q.terms().into_iter().map(|(e, c)| (emap[e], c)).collect();
                    LinearInequality::from_terms(g.edge_count(), &terms, q.rhs()).unwrap()
                })
                .collect();
            SimpleReason::C4Minor {
                block_nodes: b.nodes,
                origin_facets: lifted,
                block_edges: b.edges.len(),
            }
        }
    };

    let simplicial_reason = match simplicial_match(&g) {
        Some(s) => SimplicialReason::Listed(s),
        None => {
            let n = g.node_count();
            let case = if n >= 5 && components(&g).len() > 1 {
                ProofCase::Product
            } else if triangles(&g).is_empty() {
                ProofCase::TriangleFree
            } else {
                ProofCase::Triangle
            };
            SimplicialReason::NotListed { nodes: n, case }
        }
    };

    ClassificationReport {
        simple: matches!(simple_reason, SimpleReason::C4MinorFree),
        simplicial: matches!(simplicial_reason, SimplicialReason::Listed(_)),
        simple_reason,
        simplicial_reason,
    }
}

/// `(simple, simplicial)` read off the vertex-facet incidences of the hull of
/// all cuts.
pub fn brute_classify(g: &Graph) -> Result<(bool, bool)> {
    let m = g.edge_count();
    if m == 0 {
        return Ok((true, true));
    }
    let cuts = enumerate_cuts(g)?;
    let facets = brute_hull_incidence(&cuts)?;
    let mut per_vertex = vec![0usize; cuts.len()];
    for (_, tight) in &facets {
        for &v in tight {
            per_vertex[v] += 1;
        }
    }
    let simple = per_vertex.iter().all(|&c| c == m);
    let simplicial = facets.iter().all(|(_, t)| t.len() == m);
    Ok((simple, simplicial))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::is_facet;

    #[test]
    fn c4_minor_freeness() {
        assert!(!is_c4_minor_free(&Graph::cycle(4)));
        assert!(is_c4_minor_free(&Graph::unit(4, &[(0, 1), (1, 2), (0, 2), (2, 3)])));
        assert!(!is_c4_minor_free(&Graph::complete(4)));
    }

    #[test]
    fn examples() {
        let r = classify(&Graph::complete(4));
        assert!(!r.simple && r.simplicial);
        let star = classify(&Graph::unit(4, &[(0, 1), (0, 2), (0, 3)]));
        assert_eq!(
            star.simplicial_reason,
            SimplicialReason::NotListed {
                nodes: 4,
                case: ProofCase::TriangleFree
            }
        );
        let paw = classify(&Graph::unit(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]));
        assert_eq!(
            paw.simplicial_reason,
            SimplicialReason::NotListed {
                nodes: 4,
                case: ProofCase::Triangle
            }
        );
        assert_eq!(brute_classify(&Graph::complete(3)).unwrap(), (true, true));
        assert_eq!(brute_classify(&Graph::cycle(4)).unwrap(), (false, true));
        assert_eq!(brute_classify(&Graph::cycle(5)).unwrap(), (false, false));
    }

    #[test]
    fn isolated_nodes_dropped() {
        let g = Graph::unit(5, &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(
            classify(&g).simplicial_reason,
            SimplicialReason::Listed(SimplicialGraph::K3)
        );
    }

    #[test]
    fn origin_witnesses() {
        for g in [
            Graph::cycle(5),
            Graph::complete(4),
            Graph::unit(4, &[(0, 1), (1, 2), (0, 2), (2, 3), (1, 3)]),
        ] {
            let SimpleReason::C4Minor {
                origin_facets,
                block_edges,
                ..
            } = classify(&g).simple_reason
            else {
                panic!("expected a C4 minor");
            };
            assert!(origin_facets.len() > block_edges);
            for q in &origin_facets {
                assert_eq!(q.rhs(), 0);
                assert!(is_facet(&g, q).unwrap(), "{q:?}");
            }
        }
    }
}
