//! Planarity testing, rotation systems, faces and planar duals.

mod dmp;

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{blocks, is_connected, Graph};

/// Rotation system of a connected planar graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Embedding {
    ends: Vec<(usize, usize)>,
    weights: Vec<i64>,
    rotation: Vec<Vec<usize>>,
    /// Position of edge `e` in the rotation of its endpoint `u` (index 0) and `v` (index 1).
    pos: Vec<[usize; 2]>,
    face_count: usize,
}

impl Embedding {
    fn new(g: &Graph, rotation: Vec<Vec<usize>>) -> Embedding {
        let ends: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
        let mut pos = vec![[usize::MAX; 2]; ends.len()];
        for (v, rot) in rotation.iter().enumerate() {
            for (i, &e) in rot.iter().enumerate() {
                pos[e][(ends[e].0 != v) as usize] = i;
            }
        }
        let mut emb = Embedding {
            ends,
            weights: g.weights(),
            rotation,
            pos,
            face_count: 0,
        };
        emb.face_count = faces(&emb).len().max(1);
        emb
    }

    pub fn node_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    pub fn face_count(&self) -> usize {
        self.face_count
    }

    /// Incident edge indices of `v` in cyclic order.
    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn ends(&self, e: usize) -> (usize, usize) {
        self.ends[e]
    }

    fn other(&self, e: usize, x: usize) -> usize {
        let (u, v) = self.ends[e];
        if u == x {
            v
        } else {
            u
        }
    }

    /// Edge following `e` in the rotation at `v`.
    fn succ(&self, v: usize, e: usize) -> usize {
        let side = (self.ends[e].0 != v) as usize;
        let rot = &self.rotation[v];
        rot[(self.pos[e][side] + 1) % rot.len()]
    }
}

impl fmt::Debug for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Embedding(faces={})", self.face_count)?;
        for (v, rot) in self.rotation.iter().enumerate() {
            writeln!(f, "  {v}: {rot:?}")?;
        }
        Ok(())
    }
}

/// A face boundary walk as darts `(tail, edge)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<(usize, usize)>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn nodes(&self) -> Vec<usize> {
        self.darts.iter().map(|d| d.0).collect()
    }

    pub fn edges(&self) -> Vec<usize> {
        self.darts.iter().map(|d| d.1).collect()
    }
}

/// Whether every block of `g` is planar.
pub fn is_planar(g: &Graph) -> bool {
    blocks(g).blocks.iter().all(|b| {
        if b.is_bridge() {
            return true;
        }
        let (bg, _, _) = g.edge_subgraph(&b.edges);
        bg.node_count() < 5 || (bg.edge_count() <= 3 * bg.node_count() - 6 && dmp::embed_block(&bg).is_some())
    })
}

/// Combinatorial embedding of a connected graph, or [`Error::NonPlanar`].
///
/// Each block is embedded separately by path addition; rotations of blocks
/// sharing a cut node are concatenated.
pub fn planar_embed(g: &Graph) -> Result<Embedding> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let mut rotation = vec![Vec::new(); g.node_count()];
    for b in blocks(g).blocks {
        if b.is_bridge() {
            let e = g.edge(b.edges[0]);
            rotation[e.u].push(b.edges[0]);
            rotation[e.v].push(b.edges[0]);
            continue;
        }
        let (bg, nodes, emap) = g.edge_subgraph(&b.edges);
        if bg.edge_count() > 3 * bg.node_count() - 6 {
            return Err(Error::NonPlanar);
        }
        let local = dmp::embed_block(&bg).ok_or(Error::NonPlanar)?;
        for (x, rot) in local.iter().enumerate() {
            rotation[nodes[x]].extend(rot.iter().map(|&e| emap[e]));
        }
    }
    let emb = Embedding::new(g, rotation);
    debug_assert_eq!(g.node_count() + emb.face_count(), 2 + g.edge_count(), "Euler's formula");
    Ok(emb)
}

/// Face walks: dart `(u, e)` with head `v` is followed by `(v, succ_v(e))`.
/// Faces are numbered in order of their first dart, darts being ordered by
/// `(tail, head)`.
pub fn faces(emb: &Embedding) -> Vec<Face> {
    face_walks(emb).0
}

fn face_walks(emb: &Embedding) -> (Vec<Face>, Vec<[usize; 2]>) {
    let m = emb.edge_count();
    let mut darts: Vec<(usize, usize, usize)> = (0..m)
        .flat_map(|e| {
            let (u, v) = emb.ends[e];
            [(u, v, e), (v, u, e)]
        })
        .collect();
    darts.sort_unstable();
    let mut face_of = vec![[usize::MAX; 2]; m];
    let mut out = Vec::new();
    for (tail, _, e) in darts {
        let side = (emb.ends[e].0 != tail) as usize;
        if face_of[e][side] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut walk = Vec::new();
        let (mut t, mut d) = (tail, e);
        loop {
            let s = (emb.ends[d].0 != t) as usize;
            if face_of[d][s] != usize::MAX {
                break;
            }
            face_of[d][s] = id;
            walk.push((t, d));
            let h = emb.other(d, t);
            d = emb.succ(h, d);
            t = h;
        }
        out.push(Face { darts: walk });
    }
    (out, face_of)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualEdge {
    pub a: usize,
    pub b: usize,
    /// Index of the primal edge this edge crosses.
    pub primal: usize,
    pub w: i64,
}

/// Planar dual: one node per face, one edge per primal edge (dual edge `i`
/// crosses primal edge `i`). Bridges become loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGraph {
    pub node_count: usize,
    pub edges: Vec<DualEdge>,
}

impl DualGraph {
    pub fn degree(&self, x: usize) -> usize {
        self.edges
            .iter()
            .map(|e| (e.a == x) as usize + (e.b == x) as usize)
            .sum()
    }
}

pub fn dual_graph(emb: &Embedding) -> DualGraph {
    let (fs, face_of) = face_walks(emb);
    DualGraph {
        node_count: fs.len().max(1),
        edges: (0..emb.edge_count())
            .map(|e| DualEdge {
                a: face_of[e][0],
                b: face_of[e][1],
                primal: e,
                w: emb.weights[e],
            })
            .collect(),
    }
}
