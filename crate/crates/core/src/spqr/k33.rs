use super::{augment_with_parallel_originals, block_tree, spr_tree, NodeKind, SprTree};
use crate::error::{Error, Result};
use crate::graph::{blocks, is_connected, Block, Graph};
use crate::planar::{faces, is_planar, planar_embed};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComponentClass {
    /// A block consisting of a single edge.
    Bridge,
    /// An S-node skeleton.
    Cycle,
    /// A planar R-node skeleton with `3k - 6` edges.
    PlanarTriangulation,
    Planar,
    K5,
    /// A non-planar R-node skeleton other than K5.
    NonPlanar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    /// Index into [`K33Decomposition::blocks`].
    pub block: usize,
    /// SPR-tree node of that block, `None` for bridges.
    pub tree_node: Option<usize>,
    pub nodes: Vec<usize>,
    pub class: ComponentClass,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K33Decomposition {
    pub is_k33_minor_free: bool,
    /// Connected, and for three or more nodes a single block that is a strict
    /// 2-sum of triangles, planar triangulations and copies of K5.
    pub is_maximal: bool,
    /// Node set of the first non-planar, non-K5 R-component.
    pub witness: Option<Vec<usize>>,
    pub components: Vec<Component>,
    pub blocks: Vec<Block>,
    /// SPR-tree per block (in the input's ids); `None` for bridges.
    pub trees: Vec<Option<SprTree>>,
}

/// Splits into blocks and SPR-trees and classifies every S- and R-component.
pub fn k33_decompose(g: &Graph) -> K33Decomposition {
    let bd = blocks(g);
    let mut components = Vec::new();
    let mut trees = Vec::new();
    for (bi, b) in bd.blocks.iter().enumerate() {
        if b.is_bridge() {
            components.push(Component {
                block: bi,
                tree_node: None,
                nodes: b.nodes.clone(),
                class: ComponentClass::Bridge,
            });
            trees.push(None);
            continue;
        }
        let t = block_tree(g, b);
        for (x, node) in t.nodes.iter().enumerate() {
            let class = match node.kind {
                NodeKind::P => continue,
                NodeKind::S => ComponentClass::Cycle,
                NodeKind::R => classify_r(&node.skeleton.simple_graph().0),
            };
            components.push(Component {
                block: bi,
                tree_node: Some(x),
                nodes: node.skeleton.nodes.clone(),
                class,
            });
        }
        trees.push(Some(t));
    }

    let witness = components
        .iter()
        .find(|c| c.class == ComponentClass::NonPlanar)
        .map(|c| c.nodes.clone());
    let free = witness.is_none();
    let n = g.node_count();
    let is_maximal = free
        && is_connected(g)
        && (n <= 2 || (bd.blocks.len() == 1 && !bd.blocks[0].is_bridge()))
        && components.iter().all(|c| match c.class {
            ComponentClass::Cycle => c.nodes.len() == 3,
            ComponentClass::PlanarTriangulation | ComponentClass::K5 | ComponentClass::Bridge => true,
            _ => false,
        })
        && trees.iter().flatten().all(strict_sums);
    K33Decomposition {
        is_k33_minor_free: free,
        is_maximal,
        witness,
        components,
        blocks: bd.blocks,
        trees,
    }
}

fn classify_r(sk: &Graph) -> ComponentClass {
    let (n, m) = (sk.node_count(), sk.edge_count());
    if n == 5 && m == 10 {
        ComponentClass::K5
    } else if !is_planar(sk) {
        ComponentClass::NonPlanar
    } else if m == 3 * n - 6 {
        ComponentClass::PlanarTriangulation
    } else {
        ComponentClass::Planar
    }
}

/// Every 2-sum strict: P-nodes carry an original edge and no two non-P nodes
/// are adjacent.
fn strict_sums(t: &SprTree) -> bool {
    t.nodes
        .iter()
        .all(|n| n.kind != NodeKind::P || !n.skeleton.originals().is_empty())
        && t.tree_edges
            .iter()
            .all(|e| t.nodes[e.a].kind == NodeKind::P || t.nodes[e.b].kind == NodeKind::P)
}

/// A maximal K3,3-minor-free supergraph `H` of a connected K3,3-minor-free
/// graph, together with the indices of the added edges.
///
/// Added edges get weight 0 and are appended, so the edges of `g` keep their
/// indices in `H`. Steps: join blocks at cut nodes, strictify all 2-sums,
/// fan-triangulate cycle components, then fan-triangulate every face of the
/// planar R-components.
pub fn maximal_completion(g: &Graph) -> Result<(Graph, Vec<usize>)> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let dec = k33_decompose(g);
    if let Some(w) = dec.witness {
        return Err(Error::HasK33Minor { witness: w });
    }
    let mut h = g.clone();
    if h.node_count() <= 2 {
        return Ok((h, Vec::new()));
    }

    loop {
        let bd = blocks(&h);
        let Some(&v) = bd.cut_nodes.first() else { break };
        let around: Vec<&Block> = bd.blocks.iter().filter(|b| b.nodes.contains(&v)).collect();
        let pick = |b: &Block| {
            h.neighbors(v)
                .iter()
                .map(|&(w, _)| w)
                .filter(|w| b.nodes.contains(w))
                .min()
                .unwrap()
        };
        let (x, y) = (pick(around[0]), pick(around[1]));
        h.add_edge(x, y, 0)?;
    }

    let (h2, t) = augment_with_parallel_originals(&h, &spr_tree(&h)?);
    h = h2;
    for node in &t.nodes {
        match node.kind {
            NodeKind::P => {}
            NodeKind::S => {
                let order = node.skeleton.cycle_order();
                for &z in &order[2..order.len() - 1] {
                    if !h.has_edge(order[0], z) {
                        h.add_edge(order[0], z, 0)?;
                    }
                }
            }
            NodeKind::R => {
                let (sk, _) = node.skeleton.simple_graph();
                if sk.node_count() == 5 && sk.edge_count() == 10 {
                    continue;
                }
                let emb = planar_embed(&sk)?;
                for f in faces(&emb) {
                    let cyc: Vec<usize> = f.nodes().into_iter().map(|x| node.skeleton.nodes[x]).collect();
                    for &z in &cyc[2..cyc.len().saturating_sub(1)] {
                        if !h.has_edge(cyc[0], z) {
                            h.add_edge(cyc[0], z, 0)?;
                        }
                    }
                }
            }
        }
    }
    let added = (g.edge_count()..h.edge_count()).collect();
    Ok((h, added))
}

#[cfg(test)]
mod tests {
    use super::super::tests::example_graph;
    use super::*;

    #[test]
    fn k5_free_and_maximal() {
        let d = k33_decompose(&Graph::complete(5));
        assert!(d.is_k33_minor_free && d.is_maximal);
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.components[0].class, ComponentClass::K5);
    }

    #[test]
    fn k33_witness() {
        let d = k33_decompose(&Graph::complete_bipartite(3, 3));
        assert!(!d.is_k33_minor_free);
        assert_eq!(d.witness, Some((0..6).collect()));
    }

    #[test]
    fn example_not_maximal() {
        let g = example_graph();
        let d = k33_decompose(&g);
        assert!(d.is_k33_minor_free && !d.is_maximal);
        let (h, added) = maximal_completion(&g).unwrap();
        assert_eq!(added, vec![18]);
        assert_eq!((h.edge(18).u, h.edge(18).v), (3, 4));
        assert!(k33_decompose(&h).is_maximal);
    }

    #[test]
    fn c4_gets_one_chord() {
        let (h, added) = maximal_completion(&Graph::cycle(4)).unwrap();
        assert_eq!(added.len(), 1);
        assert!(h.has_edge(0, 2));
        assert!(k33_decompose(&h).is_maximal);
    }

    #[test]
    fn maximal_unchanged() {
        let (h, added) = maximal_completion(&Graph::complete(4)).unwrap();
        assert!(added.is_empty());
        assert_eq!(h, Graph::complete(4));
    }

    #[test]
    fn path_becomes_two_triangles() {
        let (h, added) = maximal_completion(&Graph::unit(4, &[(0, 1), (1, 2), (2, 3)])).unwrap();
        assert_eq!(added.len(), 2);
        assert!(k33_decompose(&h).is_maximal);
    }

    #[test]
    fn cube_is_triangulated() {
        let cube = Graph::unit(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 4),
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 7),
            ],
        );
        let (h, _) = maximal_completion(&cube).unwrap();
        assert!(k33_decompose(&h).is_maximal);
        assert_eq!(h.edge_count(), 18);
    }
}
