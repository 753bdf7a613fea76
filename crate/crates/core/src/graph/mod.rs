//! Simple undirected weighted graphs with stable edge indices, plus the
//! structural queries (blocks, connectivity, cycles, minors, cuts) every other
//! module builds on.

mod connectivity;
mod cuts;
mod cycles;
mod ears;
mod minor;
mod parse;

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

pub use connectivity::{blocks, components, is_connected, is_k_connected, Block, BlockDecomposition};
pub use cuts::{enumerate_cuts, Cut, CutSet, MAX_ENUM_NODES};
pub use cycles::{chordless_cycles, chordless_cycles_capped, k5_subgraphs, triangles, DEFAULT_CYCLE_CAP};
pub use ears::ear_decomposition;
pub use minor::{has_minor, has_minor_exhaustive, Minor, MAX_EXHAUSTIVE_NODES};
pub use parse::parse_graph;

/// Largest accepted weight magnitude. Keeps every sum the solvers form inside `i64`.
pub const MAX_WEIGHT: i64 = 1 << 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub w: i64,
}

impl Edge {
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// Simple undirected graph on nodes `0..node_count`.
///
/// Edges are stored canonically with `u < v`; the index of an edge is its
/// position in insertion order and never changes.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<(usize, usize)>>,
    index: HashMap<(usize, usize), usize>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            index: HashMap::new(),
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, i64)>,
    {
        let mut g = Graph::new(n);
        for (u, v, w) in edges {
            g.add_edge(u, v, w)?;
        }
        Ok(g)
    }

    /// Unit-weight graph from an edge list; panics on invalid input. Handy for
    /// fixed instances.
    pub fn unit(n: usize, edges: &[(usize, usize)]) -> Self {
        Graph::from_edges(n, edges.iter().map(|&(u, v)| (u, v, 1))).expect("valid edge list")
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v, 1).unwrap();
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::new(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n, 1).unwrap();
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v, 1).unwrap();
            }
        }
        g
    }

    pub fn add_node(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.n += 1;
        self.n - 1
    }

    /// Appends edge `uv` and returns its index.
    pub fn add_edge(&mut self, u: usize, v: usize, w: i64) -> Result<usize> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::NodeOutOfRange { node: x, n: self.n });
            }
        }
        if w.abs() > MAX_WEIGHT {
            return Err(Error::WeightOutOfRange(w));
        }
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        if self.index.contains_key(&(a, b)) {
            return Err(Error::DuplicateEdge(a, b));
        }
        let id = self.edges.len();
        self.edges.push(Edge { u: a, v: b, w });
        self.adj[a].push((b, id));
        self.adj[b].push((a, id));
        self.index.insert((a, b), id);
        Ok(id)
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> Edge {
        self.edges[e]
    }

    pub fn weights(&self) -> Vec<i64> {
        self.edges.iter().map(|e| e.w).collect()
    }

    pub fn set_weight(&mut self, e: usize, w: i64) {
        self.edges[e].w = w;
    }

    /// `(neighbor, edge index)` pairs in insertion order.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.index.get(&key).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    pub fn total_weight(&self) -> i64 {
        self.edges.iter().map(|e| e.w).sum()
    }

    pub fn isolated_nodes(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// Subgraph induced by `nodes`. Returns the subgraph together with the map
    /// from new node ids to old ones and from new edge ids to old ones.
    pub fn induced(&self, nodes: &[usize]) -> (Graph, Vec<usize>, Vec<usize>) {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in nodes.iter().enumerate() {
            local[v] = i;
        }
        let mut g = Graph::new(nodes.len());
        let mut emap = Vec::new();
        for (id, e) in self.edges.iter().enumerate() {
            if local[e.u] != usize::MAX && local[e.v] != usize::MAX {
                g.add_edge(local[e.u], local[e.v], e.w).unwrap();
                emap.push(id);
            }
        }
        (g, nodes.to_vec(), emap)
    }

    /// Subgraph spanned by a set of edges, on the nodes those edges touch
    /// (in increasing order). Returns the same maps as [`Graph::induced`].
    pub fn edge_subgraph(&self, edge_ids: &[usize]) -> (Graph, Vec<usize>, Vec<usize>) {
        let mut nodes: Vec<usize> = edge_ids
            .iter()
            .flat_map(|&e| [self.edges[e].u, self.edges[e].v])
            .collect();
        nodes.sort_unstable();
        nodes.dedup();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in nodes.iter().enumerate() {
            local[v] = i;
        }
        let mut ids = edge_ids.to_vec();
        ids.sort_unstable();
        let mut g = Graph::new(nodes.len());
        for &e in &ids {
            let ed = self.edges[e];
            g.add_edge(local[ed.u], local[ed.v], ed.w).unwrap();
        }
        (g, nodes, ids)
    }

    /// Same graph without the listed edges; remaining edges keep their relative order.
    pub fn without_edges(&self, removed: &[usize]) -> (Graph, Vec<usize>) {
        let mut g = Graph::new(self.n);
        let mut emap = Vec::new();
        for (id, e) in self.edges.iter().enumerate() {
            if !removed.contains(&id) {
                g.add_edge(e.u, e.v, e.w).unwrap();
                emap.push(id);
            }
        }
        (g, emap)
    }

    /// Drops isolated nodes, renumbering the rest in order. Edge indices are kept.
    pub fn without_isolated(&self) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n).filter(|&v| !self.adj[v].is_empty()).collect();
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            local[v] = i;
        }
        let mut g = Graph::new(keep.len());
        for e in &self.edges {
            g.add_edge(local[e.u], local[e.v], e.w).unwrap();
        }
        (g, keep)
    }

    /// Relabels nodes: node `v` becomes `perm[v]`. Edge order is preserved.
    pub fn relabeled(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::new(self.n);
        for e in &self.edges {
            g.add_edge(perm[e.u], perm[e.v], e.w).unwrap();
        }
        g
    }

    /// Serializes into the `p cut` text format (1-indexed nodes).
    pub fn to_text(&self) -> String {
        let mut s = format!("p cut {} {}\n", self.n, self.edges.len());
        for e in &self.edges {
            s.push_str(&format!("e {} {} {}\n", e.u + 1, e.v + 1, e.w));
        }
        s
    }

    pub(crate) fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n <= 64);
        let mut m = vec![0u64; self.n];
        for e in &self.edges {
            m[e.u] |= 1 << e.v;
            m[e.v] |= 1 << e.u;
        }
        m
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}; ", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}-{}:{}", e.u, e.v, e.w)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_edges_and_indices() {
        let mut g = Graph::new(3);
        assert_eq!(g.add_edge(2, 0, 4).unwrap(), 0);
        assert_eq!(g.add_edge(1, 2, -1).unwrap(), 1);
        assert_eq!(g.edge(0), Edge { u: 0, v: 2, w: 4 });
        assert_eq!(g.edge_between(2, 1), Some(1));
        assert_eq!(g.add_edge(0, 2, 1), Err(Error::DuplicateEdge(0, 2)));
        assert_eq!(g.add_edge(1, 1, 1), Err(Error::SelfLoop(1)));
        assert!(matches!(g.add_edge(0, 3, 1), Err(Error::NodeOutOfRange { .. })));
        assert!(matches!(
            g.add_edge(0, 1, MAX_WEIGHT + 1),
            Err(Error::WeightOutOfRange(_))
        ));
    }

    #[test]
    fn text_round_trip() {
        let g = Graph::from_edges(4, [(0, 1, 3), (1, 2, -2), (2, 3, 0), (0, 3, 7)]).unwrap();
        assert_eq!(parse_graph(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn induced_maps() {
        let g = Graph::complete(4);
        let (h, nodes, emap) = g.induced(&[1, 2, 3]);
        assert_eq!(h.edge_count(), 3);
        assert_eq!(nodes, vec![1, 2, 3]);
        for (i, &e) in emap.iter().enumerate() {
            let (a, b) = (h.edge(i), g.edge(e));
            assert_eq!((nodes[a.u], nodes[a.v]), (b.u, b.v));
        }
    }
}
