//! SPR-trees (3-connectivity decompositions) of 2-connected graphs and the
//! K3,3-minor-free structure built on top of them.

mod augment;
mod k33;

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{is_k_connected, Block, Graph};

pub use augment::augment_with_parallel_originals;
pub use k33::{k33_decompose, maximal_completion, Component, ComponentClass, K33Decomposition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    /// Index of an edge of the input graph.
    Original(usize),
    /// Virtual edge; the pair id is shared by exactly two skeletons.
    Virtual(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkeletonEdge {
    pub u: usize,
    pub v: usize,
    pub kind: EdgeKind,
}

impl SkeletonEdge {
    fn new(u: usize, v: usize, kind: EdgeKind) -> Self {
        SkeletonEdge {
            u: u.min(v),
            v: u.max(v),
            kind,
        }
    }

    pub fn ends(&self) -> (usize, usize) {
        (self.u, self.v)
    }
}

/// A skeleton multigraph. Node ids are those of the input graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skeleton {
    pub nodes: Vec<usize>,
    pub edges: Vec<SkeletonEdge>,
}

impl Skeleton {
    fn from_edges(mut edges: Vec<SkeletonEdge>) -> Self {
        edges.sort_by_key(|e| e.kind);
        let mut nodes: Vec<usize> = edges.iter().flat_map(|e| [e.u, e.v]).collect();
        nodes.sort_unstable();
        nodes.dedup();
        Skeleton { nodes, edges }
    }

    pub fn originals(&self) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|e| match e.kind {
                EdgeKind::Original(i) => Some(i),
                EdgeKind::Virtual(_) => None,
            })
            .collect()
    }

    pub fn virtual_pairs(&self) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|e| match e.kind {
                EdgeKind::Virtual(p) => Some(p),
                EdgeKind::Original(_) => None,
            })
            .collect()
    }

    pub fn virtual_edge(&self, pair: usize) -> Option<SkeletonEdge> {
        self.edges.iter().copied().find(|e| e.kind == EdgeKind::Virtual(pair))
    }

    /// The skeleton with parallel edges merged, on local ids `0..nodes.len()`
    /// (position in `nodes`). Returns the graph and, per local edge, the
    /// skeleton edges it stands for.
    pub fn simple_graph(&self) -> (Graph, Vec<Vec<SkeletonEdge>>) {
        let local = |x: usize| self.nodes.binary_search(&x).unwrap();
        let mut g = Graph::new(self.nodes.len());
        let mut reps: Vec<Vec<SkeletonEdge>> = Vec::new();
        for e in &self.edges {
            let (a, b) = (local(e.u), local(e.v));
            match g.edge_between(a, b) {
                Some(id) => reps[id].push(*e),
                None => {
                    g.add_edge(a, b, 1).unwrap();
                    reps.push(vec![*e]);
                }
            }
        }
        (g, reps)
    }

    /// Nodes of a cycle skeleton in cyclic order, starting at the smallest
    /// node and continuing towards its smaller neighbour.
    pub fn cycle_order(&self) -> Vec<usize> {
        let start = self.nodes[0];
        let nbrs = |x: usize| -> Vec<usize> {
            self.edges
                .iter()
                .filter_map(|e| {
                    if e.u == x {
                        Some(e.v)
                    } else if e.v == x {
                        Some(e.u)
                    } else {
                        None
                    }
                })
                .collect()
        };
        let first = nbrs(start).into_iter().min().unwrap();
        let mut order = vec![start, first];
        while order.len() < self.nodes.len() {
            let (prev, cur) = (order[order.len() - 2], order[order.len() - 1]);
            let next = nbrs(cur).into_iter().find(|&x| x != prev).unwrap();
            order.push(next);
        }
        order
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeKind {
    S,
    P,
    R,
}

impl fmt::Display for NodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            NodeKind::S => "S",
            NodeKind::P => "P",
            NodeKind::R => "R",
        };
        f.write_str(c)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SprNode {
    pub kind: NodeKind,
    pub skeleton: Skeleton,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TreeEdge {
    pub a: usize,
    pub b: usize,
    pub pair: usize,
}

/// SPR-tree: S-nodes are cycles, P-nodes bundles of at least three parallel
/// edges, R-nodes simple 3-connected graphs. Tree edges are sorted by pair id
/// and pair ids are `0..tree_edges.len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SprTree {
    pub nodes: Vec<SprNode>,
    pub tree_edges: Vec<TreeEdge>,
}

impl SprTree {
    /// Tree neighbours of node `x` as `(node, pair)`.
    pub fn neighbors(&self, x: usize) -> Vec<(usize, usize)> {
        self.tree_edges
            .iter()
            .filter_map(|t| {
                if t.a == x {
                    Some((t.b, t.pair))
                } else if t.b == x {
                    Some((t.a, t.pair))
                } else {
                    None
                }
            })
            .collect()
    }

    /// Rebuilds the graph by 2-summing all skeletons along their virtual
    /// pairs. Weights are taken from `weights` (indexed by original edge id).
    pub fn recompose(&self, node_count: usize, weights: &[i64]) -> Result<Graph> {
        let bad = |m: &str| Error::MalformedState(m.to_string());
        let mut owners: BTreeMap<usize, Vec<(usize, SkeletonEdge)>> = BTreeMap::new();
        let mut originals: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for (x, node) in self.nodes.iter().enumerate() {
            for e in &node.skeleton.edges {
                match e.kind {
                    EdgeKind::Original(i) => {
                        if originals.insert(i, e.ends()).is_some() {
                            return Err(bad("original edge in two skeletons"));
                        }
                    }
                    EdgeKind::Virtual(p) => owners.entry(p).or_default().push((x, *e)),
                }
            }
        }
        for (p, own) in &owners {
            if own.len() != 2 || own[0].1.ends() != own[1].1.ends() || own[0].0 == own[1].0 {
                return Err(bad("virtual pair not shared by two skeletons"));
            }
            if !self
                .tree_edges
                .iter()
                .any(|t| t.pair == *p && ((t.a, t.b) == (own[0].0, own[1].0) || (t.b, t.a) == (own[0].0, own[1].0)))
            {
                return Err(bad("virtual pair without matching tree edge"));
            }
        }
        if self.tree_edges.len() + 1 != self.nodes.len() {
            return Err(bad("tree edge count"));
        }
        let mut reached = vec![false; self.nodes.len()];
        let mut stack = vec![0];
        reached[0] = true;
        while let Some(x) = stack.pop() {
            for (y, _) in self.neighbors(x) {
                if !reached[y] {
                    reached[y] = true;
                    stack.push(y);
                }
            }
        }
        if reached.contains(&false) {
            return Err(bad("tree is disconnected"));
        }
        let mut g = Graph::new(node_count);
        for (expect, (&i, &(u, v))) in originals.iter().enumerate() {
            if i != expect {
                return Err(bad("missing original edge"));
            }
            g.add_edge(u, v, weights[i])?;
        }
        Ok(g)
    }

    /// Canonical fingerprint: per node its kind, sorted original edge ids and
    /// number of virtual edges, all sorted. Independent of node and pair ids.
    pub fn fingerprint(&self) -> Vec<(NodeKind, Vec<usize>, usize)> {
        let mut f: Vec<_> = self
            .nodes
            .iter()
            .map(|n| {
                let mut o = n.skeleton.originals();
                o.sort_unstable();
                (n.kind, o, n.skeleton.virtual_pairs().len())
            })
            .collect();
        f.sort();
        f
    }
}

/// SPR-tree of a 2-connected graph with at least three edges.
pub fn spr_tree(g: &Graph) -> Result<SprTree> {
    if g.edge_count() < 3 || !is_k_connected(g, 2) {
        return Err(Error::NotTwoConnected);
    }
    Ok(decompose(
        g.edges()
            .iter()
            .enumerate()
            .map(|(i, e)| SkeletonEdge::new(e.u, e.v, EdgeKind::Original(i)))
            .collect(),
    ))
}

/// SPR-tree of one non-bridge block of `g`, in `g`'s node and edge ids.
pub fn block_tree(g: &Graph, block: &Block) -> SprTree {
    assert!(!block.is_bridge(), "bridges have no SPR-tree");
    decompose(
        block
            .edges
            .iter()
            .map(|&i| {
                let e = g.edge(i);
                SkeletonEdge::new(e.u, e.v, EdgeKind::Original(i))
            })
            .collect(),
    )
}

fn decompose(edges: Vec<SkeletonEdge>) -> SprTree {
    let mut next_pair = 0;
    let mut queue = VecDeque::from([edges]);
    let mut done: Vec<(NodeKind, Vec<SkeletonEdge>)> = Vec::new();

    while let Some(comp) = queue.pop_front() {
        let mut nodes: Vec<usize> = comp.iter().flat_map(|e| [e.u, e.v]).collect();
        nodes.sort_unstable();
        nodes.dedup();
        if nodes.len() == 2 {
            done.push((NodeKind::P, comp));
            continue;
        }

        let mut multiplicity: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for e in &comp {
            *multiplicity.entry(e.ends()).or_default() += 1;
        }
        if let Some((&(a, b), _)) = multiplicity.iter().find(|(_, &c)| c >= 2) {
            let p = next_pair;
            next_pair += 1;
            let (mut bundle, mut rest): (Vec<_>, Vec<_>) = comp.into_iter().partition(|e| e.ends() == (a, b));
            bundle.push(SkeletonEdge::new(a, b, EdgeKind::Virtual(p)));
            rest.push(SkeletonEdge::new(a, b, EdgeKind::Virtual(p)));
            done.push((NodeKind::P, bundle));
            queue.push_back(rest);
            continue;
        }

        let degree = |x: usize| comp.iter().filter(|e| e.u == x || e.v == x).count();
        if nodes.iter().all(|&x| degree(x) == 2) {
            done.push((NodeKind::S, comp));
            continue;
        }

        match find_split(&comp, &nodes) {
            None => done.push((NodeKind::R, comp)),
            Some((a, b, side)) => {
                let p = next_pair;
                next_pair += 1;
                let (mut e1, mut e2): (Vec<_>, Vec<_>) = comp
                    .into_iter()
                    .partition(|e| side.binary_search(&e.u).is_ok() || side.binary_search(&e.v).is_ok());
                e1.push(SkeletonEdge::new(a, b, EdgeKind::Virtual(p)));
                e2.push(SkeletonEdge::new(a, b, EdgeKind::Virtual(p)));
                queue.push_back(e1);
                queue.push_back(e2);
            }
        }
    }
    merge_and_number(done)
}

/// First pair `{a, b}` (lexicographic) whose removal disconnects the
/// component, with the component of the smallest remaining node.
fn find_split(comp: &[SkeletonEdge], nodes: &[usize]) -> Option<(usize, usize, Vec<usize>)> {
    let idx = |x: usize| nodes.binary_search(&x).unwrap();
    let k = nodes.len();
    let mut adj = vec![Vec::new(); k];
    for e in comp {
        let (a, b) = (idx(e.u), idx(e.v));
        adj[a].push(b);
        adj[b].push(a);
    }
    for a in 0..k {
        for b in a + 1..k {
            let start = (0..k).find(|&x| x != a && x != b).unwrap();
            let mut seen = vec![false; k];
            seen[a] = true;
            seen[b] = true;
            seen[start] = true;
            let mut stack = vec![start];
            let mut side = vec![start];
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                        side.push(y);
                    }
                }
            }
            if side.len() < k - 2 {
                let mut side: Vec<usize> = side.into_iter().map(|x| nodes[x]).collect();
                side.sort_unstable();
                return Some((nodes[a], nodes[b], side));
            }
        }
    }
    None
}

fn merge_and_number(done: Vec<(NodeKind, Vec<SkeletonEdge>)>) -> SprTree {
    let mut slots: Vec<Option<(NodeKind, Vec<SkeletonEdge>)>> = done.into_iter().map(Some).collect();
    loop {
        let owners = pair_owners(&slots);
        let mergeable = owners.iter().find(|(_, &(x, y))| {
            let (kx, ky) = (slots[x].as_ref().unwrap().0, slots[y].as_ref().unwrap().0);
            kx == ky && kx != NodeKind::R
        });
        let Some((&p, &(x, y))) = mergeable else {
            break;
        };
        let (_, ey) = slots[y].take().unwrap();
        let (_, ex) = slots[x].as_mut().unwrap();
        ex.retain(|e| e.kind != EdgeKind::Virtual(p));
        ex.extend(ey.into_iter().filter(|e| e.kind != EdgeKind::Virtual(p)));
    }

    let live: Vec<(NodeKind, Vec<SkeletonEdge>)> = slots.into_iter().flatten().collect();
    let owners = pair_owners(&live.iter().cloned().map(Some).collect::<Vec<_>>());
    let renumber: BTreeMap<usize, usize> = owners.keys().enumerate().map(|(i, &p)| (p, i)).collect();
    let nodes = live
        .into_iter()
        .map(|(kind, edges)| {
            let edges = edges
                .into_iter()
                .map(|e| match e.kind {
                    EdgeKind::Virtual(p) => SkeletonEdge {
                        kind: EdgeKind::Virtual(renumber[&p]),
                        ..e
                    },
                    EdgeKind::Original(_) => e,
                })
                .collect();
            SprNode {
                kind,
                skeleton: Skeleton::from_edges(edges),
            }
        })
        .collect();
    let tree_edges = owners
        .iter()
        .map(|(p, &(a, b))| TreeEdge {
            a,
            b,
            pair: renumber[p],
        })
        .collect();
    SprTree { nodes, tree_edges }
}

fn pair_owners(slots: &[Option<(NodeKind, Vec<SkeletonEdge>)>]) -> BTreeMap<usize, (usize, usize)> {
    let mut seen: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (x, s) in slots.iter().enumerate() {
        if let Some((_, edges)) = s {
            for e in edges {
                if let EdgeKind::Virtual(p) = e.kind {
                    seen.entry(p).or_default().push(x);
                }
            }
        }
    }
    seen.into_iter().map(|(p, v)| (p, (v[0], v[1]))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn example_graph() -> Graph {
        // nodes: v1 v2 v3 u1 u2 w1 w2 w3 = 0..8
        crate::generate::double_k5()
    }

    #[test]
    fn k5_single_r() {
        let t = spr_tree(&Graph::complete(5)).unwrap();
        assert_eq!(t.nodes.len(), 1);
        assert_eq!(t.nodes[0].kind, NodeKind::R);
    }

    #[test]
    fn c5_single_s() {
        let t = spr_tree(&Graph::cycle(5)).unwrap();
        assert_eq!(t.nodes.len(), 1);
        assert_eq!(t.nodes[0].kind, NodeKind::S);
        assert_eq!(t.nodes[0].skeleton.cycle_order(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn example_two_r_one_p() {
        let g = example_graph();
        let t = spr_tree(&g).unwrap();
        let mut kinds: Vec<NodeKind> = t.nodes.iter().map(|n| n.kind).collect();
        kinds.sort();
        // only two split classes at {u1, u2}: the two K5 skeletons are adjacent
        assert_eq!(kinds, vec![NodeKind::R, NodeKind::R]);
        assert_eq!(t.tree_edges.len(), 1);
        assert!(t.nodes.iter().all(|n| n.skeleton.simple_graph().0.edge_count() == 10));
        assert_eq!(t.recompose(8, &g.weights()).unwrap(), g);
    }

    #[test]
    fn two_triangles() {
        let g = Graph::unit(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]);
        let t = spr_tree(&g).unwrap();
        assert_eq!(t.nodes.len(), 3);
        assert_eq!(t.recompose(4, &g.weights()).unwrap(), g);
    }

    #[test]
    fn long_cycle_merged() {
        // a hexagon with one chord: two S-nodes around a P-node
        let g = Graph::unit(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)]);
        let t = spr_tree(&g).unwrap();
        assert_eq!(t.nodes.len(), 3);
        assert_eq!(t.nodes.iter().filter(|n| n.kind == NodeKind::S).count(), 2);
        // a bare cycle with pendant triangles: adjacent S-nodes must merge
        let g = Graph::unit(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]);
        let t = spr_tree(&g).unwrap();
        for e in &t.tree_edges {
            assert!(!(t.nodes[e.a].kind == t.nodes[e.b].kind && t.nodes[e.a].kind != NodeKind::R));
        }
    }

    #[test]
    fn rejects_non_biconnected() {
        assert_eq!(
            spr_tree(&Graph::unit(3, &[(0, 1), (1, 2)])),
            Err(Error::NotTwoConnected)
        );
    }
}
