use cutpoly::generate::{random_graph, random_planar_2connected};
use cutpoly::graph::{blocks, enumerate_cuts, has_minor, has_minor_exhaustive, is_k_connected, parse_graph, Minor};
use cutpoly::planar::{faces, is_planar, planar_embed};
use cutpoly::spqr::{block_tree, spr_tree, NodeKind};
use cutpoly::Graph;
use proptest::prelude::*;

/// Every simple cycle as an edge list, each found once from its smallest node.
fn all_cycles(g: &Graph) -> Vec<Vec<usize>> {
    fn dfs(g: &Graph, s: usize, v: usize, seen: &mut Vec<bool>, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for &(w, e) in g.neighbors(v) {
            if w == s && path.len() >= 2 && path[0] < e {
                let mut c = path.clone();
                c.push(e);
                out.push(c);
            } else if w > s && !seen[w] {
                seen[w] = true;
                path.push(e);
                dfs(g, s, w, seen, path, out);
                path.pop();
                seen[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..g.node_count() {
        let mut seen = vec![false; g.node_count()];
        seen[s] = true;
        dfs(g, s, s, &mut seen, &mut Vec::new(), &mut out);
    }
    out
}

#[test]
fn parse_examples() {
    let g = parse_graph("c k2\np cut 2 1\ne 1 2 5\n").unwrap();
    assert_eq!(g.edge_count(), 1);
    assert_eq!(g.edge(0).w, 5);
    assert!(parse_graph("p cut 2 1\ne 1 1 5\n").is_err());
    assert!(parse_graph("p cut 2 2\ne 1 2 5\ne 2 1 3\n").is_err());
    assert!(parse_graph("p cut 2 1\ne 1 3 5\n").is_err());
    assert!(parse_graph("p cut 2 1\ne 1 2\n").is_err());
    let k4 = Graph::complete(4);
    assert_eq!(parse_graph(&k4.to_text()).unwrap(), k4);
}

#[test]
fn cut_counts() {
    assert_eq!(enumerate_cuts(&Graph::complete(5)).unwrap().len(), 16);
    let two = Graph::unit(4, &[(0, 1), (2, 3)]);
    assert_eq!(enumerate_cuts(&two).unwrap().len(), 4);
}

#[test]
fn minor_tests_agree_with_exhaustive_search() {
    for seed in 0..40 {
        let g = random_graph(seed, 5 + (seed % 3) as usize, 0.6, (1, 1));
        for h in [Minor::K5, Minor::K33] {
            assert_eq!(
                has_minor(&g, h).unwrap(),
                has_minor_exhaustive(&g, h).unwrap(),
                "seed {seed} {h:?}"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn cuts_meet_cycles_evenly(seed in any::<u64>(), n in 3usize..=7) {
        let g = random_graph(seed, n, 0.5, (1, 1));
        let cycles = all_cycles(&g);
        for cut in enumerate_cuts(&g).unwrap() {
            for c in &cycles {
                let k = c.iter().filter(|&&e| cut.contains_edge(e)).count();
                prop_assert_eq!(k % 2, 0);
            }
        }
    }

    #[test]
    fn spr_tree_recomposes(seed in any::<u64>(), n in 3usize..=12, planar in any::<bool>()) {
        let g = if planar {
            random_planar_2connected(seed, n, 0.3, (-5, 5))
        } else {
            random_graph(seed, n, 0.5, (-5, 5))
        };
        prop_assume!(is_k_connected(&g, 2));
        let t = spr_tree(&g).unwrap();
        prop_assert_eq!(t.recompose(g.node_count(), &g.weights()).unwrap(), g.clone());
        for node in &t.nodes {
            match node.kind {
                NodeKind::S => prop_assert!(node.skeleton.nodes.len() >= 3),
                NodeKind::P => prop_assert!(node.skeleton.edges.len() >= 3),
                NodeKind::R => prop_assert!(node.skeleton.nodes.len() >= 4),
            }
        }
    }

    #[test]
    fn block_trees_hold_their_edges(seed in any::<u64>(), n in 4usize..=10) {
        let g = random_graph(seed, n, 0.35, (1, 3));
        for b in blocks(&g).blocks.iter().filter(|b| !b.is_bridge()) {
            let t = block_tree(&g, b);
            let mut originals: Vec<usize> = t.nodes.iter().flat_map(|x| x.skeleton.originals()).collect();
            originals.sort_unstable();
            prop_assert_eq!(&originals, &b.edges);
            for x in &t.nodes {
                prop_assert!(x.skeleton.nodes.iter().all(|v| b.nodes.contains(v)));
            }
        }
    }

    #[test]
    fn embeddings_satisfy_euler(seed in any::<u64>(), n in 3usize..=14) {
        let g = random_planar_2connected(seed, n, 0.4, (1, 1));
        prop_assert!(is_planar(&g));
        let emb = planar_embed(&g).unwrap();
        let f = faces(&emb).len();
        prop_assert_eq!(g.node_count() + f, g.edge_count() + 2);
    }
}
