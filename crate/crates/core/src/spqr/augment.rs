use super::{EdgeKind, NodeKind, Skeleton, SkeletonEdge, SprNode, SprTree, TreeEdge};
use crate::graph::Graph;

/// Adds weight-0 original edges so that every virtual edge gets a parallel
/// original edge.
///
/// P-nodes without an original edge receive one; each tree edge joining two
/// non-P nodes is subdivided by a new P-node holding a new original edge.
/// New edges are appended to the graph, so existing edge indices are kept.
pub fn augment_with_parallel_originals(g: &Graph, t: &SprTree) -> (Graph, SprTree) {
    let mut g = g.clone();
    let mut t = t.clone();

    for node in t.nodes.iter_mut().filter(|n| n.kind == NodeKind::P) {
        if node.skeleton.originals().is_empty() {
            let (a, b) = (node.skeleton.nodes[0], node.skeleton.nodes[1]);
            let id = g.add_edge(a, b, 0).expect("no original edge between a P-node's poles");
            node.skeleton
                .edges
                .insert(0, SkeletonEdge::new(a, b, EdgeKind::Original(id)));
        }
    }

    let mut next_pair = t.tree_edges.len();
    let mut new_edges = Vec::new();
    for te in t.tree_edges.clone() {
        if t.nodes[te.a].kind == NodeKind::P || t.nodes[te.b].kind == NodeKind::P {
            new_edges.push(te);
            continue;
        }
        let ve = t.nodes[te.b].skeleton.virtual_edge(te.pair).unwrap();
        let (a, b) = ve.ends();
        let id = g
            .add_edge(a, b, 0)
            .expect("no original edge between adjacent non-P poles");
        let q = next_pair;
        next_pair += 1;
        for e in t.nodes[te.b].skeleton.edges.iter_mut() {
            if e.kind == EdgeKind::Virtual(te.pair) {
                e.kind = EdgeKind::Virtual(q);
            }
        }
        let p_node = t.nodes.len();
        t.nodes.push(SprNode {
            kind: NodeKind::P,
            skeleton: Skeleton {
                nodes: vec![a, b],
                edges: vec![
                    SkeletonEdge::new(a, b, EdgeKind::Original(id)),
                    SkeletonEdge::new(a, b, EdgeKind::Virtual(te.pair)),
                    SkeletonEdge::new(a, b, EdgeKind::Virtual(q)),
                ],
            },
        });
        new_edges.push(TreeEdge {
            a: te.a,
            b: p_node,
            pair: te.pair,
        });
        new_edges.push(TreeEdge {
            a: p_node,
            b: te.b,
            pair: q,
        });
    }
    new_edges.sort_by_key(|e| e.pair);
    t.tree_edges = new_edges;
    (g, t)
}

#[cfg(test)]
mod tests {
    use super::super::{spr_tree, tests::example_graph};
    use super::*;

    fn every_virtual_has_original(t: &SprTree) -> bool {
        t.tree_edges.iter().all(|te| {
            let (x, y) = (&t.nodes[te.a], &t.nodes[te.b]);
            let p = if x.kind == NodeKind::P { x } else { y };
            p.kind == NodeKind::P && !p.skeleton.originals().is_empty()
        })
    }

    #[test]
    fn example_gains_u1u2() {
        let g = example_graph();
        let t = spr_tree(&g).unwrap();
        let (h, ta) = augment_with_parallel_originals(&g, &t);
        assert_eq!(h.edge_count(), 19);
        assert_eq!(h.edge(18), crate::graph::Edge { u: 3, v: 4, w: 0 });
        assert!(every_virtual_has_original(&ta));
        let p = ta.nodes.iter().find(|n| n.kind == NodeKind::P).unwrap();
        assert_eq!(p.skeleton.originals(), vec![18]);
        assert_eq!(p.skeleton.virtual_pairs().len(), 2);
        assert_eq!(ta.recompose(8, &h.weights()).unwrap(), h);
    }

    #[test]
    fn strict_sum_unchanged() {
        let g = Graph::unit(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]);
        let t = spr_tree(&g).unwrap();
        let (h, ta) = augment_with_parallel_originals(&g, &t);
        assert_eq!(h, g);
        assert_eq!(ta, t);
    }

    #[test]
    fn adjacent_s_and_r_subdivided() {
        // K4 on 0..4 with the edge 0-1 replaced by the path 0-4-1
        let g = Graph::unit(5, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 1)]);
        let t = spr_tree(&g).unwrap();
        assert_eq!(t.nodes.len(), 2);
        let (h, ta) = augment_with_parallel_originals(&g, &t);
        assert_eq!(h.edge_count(), 8);
        assert_eq!(ta.nodes.len(), 3);
        assert!(every_virtual_has_original(&ta));
        assert_eq!(ta.recompose(5, &h.weights()).unwrap(), h);
    }
}
