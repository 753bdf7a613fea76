//! Seeded instance generators.
//!
//! All randomness comes from xoshiro256++ seeded through SplitMix64
//! (`Xoshiro256PlusPlus::seed_from_u64`), so a seed fixes the instance on
//! every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use crate::error::{Error, Result};
use crate::graph::{is_connected, is_k_connected, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    K5,
    /// Random planar triangulation with a node count drawn from the range.
    Triangulation {
        min_nodes: usize,
        max_nodes: usize,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSpec {
    pub seed: u64,
    pub components: Vec<ComponentKind>,
    /// Keep the glued edge of every 2-sum.
    pub strict: bool,
    /// Probability of deleting each edge afterwards (deletions that would
    /// disconnect the graph are skipped).
    pub deletion_probability: f64,
    pub weight_range: (i64, i64),
}

impl GeneratorSpec {
    pub fn new(seed: u64, components: Vec<ComponentKind>) -> Self {
        GeneratorSpec {
            seed,
            components,
            strict: true,
            deletion_probability: 0.0,
            weight_range: (1, 1),
        }
    }
}

/// Random planar triangulation on `n >= 3` nodes built from K4 by inserting
/// nodes into random faces (a triangle for `n == 3`).
pub fn random_triangulation<R: Rng>(rng: &mut R, n: usize) -> Graph {
    assert!(n >= 3);
    if n == 3 {
        return Graph::complete(3);
    }
    let mut g = Graph::complete(4);
    let mut faces = vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    for v in 4..n {
        g.add_node();
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        for x in [a, b, c] {
            g.add_edge(x, v, 1).unwrap();
        }
        faces.extend([[a, b, v], [b, c, v], [a, c, v]]);
    }
    g
}

/// A connected K3,3-minor-free graph built as a chain of 2-sums.
pub fn gen_k33free(spec: &GeneratorSpec) -> Result<Graph> {
    if spec.components.is_empty() {
        return Err(Error::InvalidArgument("no components".into()));
    }
    if !(0.0..=1.0).contains(&spec.deletion_probability) {
        return Err(Error::InvalidArgument("deletion probability outside [0, 1]".into()));
    }
    let (lo, hi) = spec.weight_range;
    if lo > hi || lo.abs() > crate::graph::MAX_WEIGHT || hi.abs() > crate::graph::MAX_WEIGHT {
        return Err(Error::InvalidArgument(format!("bad weight range {lo}..={hi}")));
    }
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(spec.seed);
    let mut pieces = Vec::new();
    for kind in &spec.components {
        pieces.push(match *kind {
            ComponentKind::K5 => Graph::complete(5),
            ComponentKind::Triangulation { min_nodes, max_nodes } => {
                if min_nodes < 3 || min_nodes > max_nodes {
                    return Err(Error::InvalidArgument(format!(
                        "bad size range {min_nodes}..={max_nodes}"
                    )));
                }
                let n = rng.gen_range(min_nodes..=max_nodes);
                random_triangulation(&mut rng, n)
            }
        });
    }

    let mut g = pieces[0].clone();
    for piece in &pieces[1..] {
        let host = g.edge(rng.gen_range(0..g.edge_count()));
        let glue = piece.edge(rng.gen_range(0..piece.edge_count()));
        let (x, y) = if rng.gen_bool(0.5) {
            (host.u, host.v)
        } else {
            (host.v, host.u)
        };
        let mut map = vec![usize::MAX; piece.node_count()];
        map[glue.u] = x;
        map[glue.v] = y;
        for m in map.iter_mut().filter(|m| **m == usize::MAX) {
            *m = g.add_node();
        }
        for e in piece.edges() {
            let (a, b) = (map[e.u], map[e.v]);
            if !g.has_edge(a, b) {
                g.add_edge(a, b, 1)?;
            }
        }
        if !spec.strict {
            let id = g.edge_between(x, y).unwrap();
            g = g.without_edges(&[id]).0;
        }
    }

    if spec.deletion_probability > 0.0 {
        let mut e = 0;
        while e < g.edge_count() {
            if rng.gen_bool(spec.deletion_probability) {
                let (h, _) = g.without_edges(&[e]);
                if is_connected(&h) {
                    g = h;
                    continue;
                }
            }
            e += 1;
        }
    }
    for e in 0..g.edge_count() {
        g.set_weight(e, rng.gen_range(lo..=hi));
    }
    Ok(g)
}

/// Random 2-connected planar graph on `n >= 3` nodes: a random triangulation
/// with edges deleted in random order while 2-connectivity holds, each with
/// probability `keep_deleting`.
pub fn random_planar_2connected(seed: u64, n: usize, keep_deleting: f64, weight_range: (i64, i64)) -> Graph {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
    let mut g = random_triangulation(&mut rng, n);
    let mut order: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    order.shuffle(&mut rng);
    for (u, v) in order {
        if !rng.gen_bool(keep_deleting) {
            continue;
        }
        let id = g.edge_between(u, v).unwrap();
        let (h, _) = g.without_edges(&[id]);
        if h.edge_count() >= 3 && is_k_connected(&h, 2) {
            g = h;
        }
    }
    for e in 0..g.edge_count() {
        g.set_weight(e, rng.gen_range(weight_range.0..=weight_range.1));
    }
    g
}

/// Random graph with `n` nodes where each pair is an edge with probability
/// `p`; weights uniform in the range.
pub fn random_graph(seed: u64, n: usize, p: f64, weight_range: (i64, i64)) -> Graph {
    let mut rng = Xoshiro256PlusPlus::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                let w = rng.gen_range(weight_range.0..=weight_range.1);
                g.add_edge(u, v, w).unwrap();
            }
        }
    }
    g
}

/// Two copies of K5 sharing nodes 3 and 4, without the edge 3-4. Nodes
/// 0, 1, 2 belong to the first copy and 5, 6, 7 to the second. Unit weights.
pub fn double_k5() -> Graph {
    let mut g = Graph::new(8);
    for side in [[0, 1, 2], [5, 6, 7]] {
        let five = [side[0], side[1], side[2], 3, 4];
        for i in 0..5 {
            for j in i + 1..5 {
                if (five[i], five[j]) != (3, 4) {
                    g.add_edge(five[i], five[j], 1).unwrap();
                }
            }
        }
    }
    g
}

/// The octahedron K2,2,2 (nodes `i` and `i + 3` are opposite).
pub fn octahedron() -> Graph {
    let mut g = Graph::new(6);
    for u in 0..6 {
        for v in u + 1..6 {
            if v != u + 3 {
                g.add_edge(u, v, 1).unwrap();
            }
        }
    }
    g
}
