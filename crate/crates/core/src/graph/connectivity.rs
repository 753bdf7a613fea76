use super::Graph;

/// A block: a maximal 2-connected subgraph or a bridge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    /// Sorted node ids.
    pub nodes: Vec<usize>,
    /// Sorted edge indices.
    pub edges: Vec<usize>,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_nodes: Vec<usize>,
}

/// Connected components as sorted node lists, ordered by smallest node.
pub fn components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.node_count();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[s] = id;
        let mut stack = vec![s];
        let mut nodes = vec![s];
        while let Some(v) = stack.pop() {
            for &(w, _) in g.neighbors(v) {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    stack.push(w);
                    nodes.push(w);
                }
            }
        }
        nodes.sort_unstable();
        out.push(nodes);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    g.node_count() <= 1 || components(g).len() == 1
}

/// Whether the graph stays connected after deleting the nodes in `removed`.
fn connected_without(g: &Graph, removed: &[usize]) -> bool {
    let n = g.node_count();
    let mut gone = vec![false; n];
    for &r in removed {
        gone[r] = true;
    }
    let Some(start) = (0..n).find(|&v| !gone[v]) else {
        return true;
    };
    let mut seen = gone.clone();
    seen[start] = true;
    let mut stack = vec![start];
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &(w, _) in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n - removed.len()
}

/// `k`-connectivity for `k` in `1..=3`: more than `k` nodes, and no set of
/// fewer than `k` nodes disconnects the graph.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    assert!((1..=3).contains(&k), "k must be 1, 2 or 3");
    let n = g.node_count();
    if n <= k {
        return false;
    }
    if !connected_without(g, &[]) {
        return false;
    }
    if k >= 2 && (0..n).any(|a| !connected_without(g, &[a])) {
        return false;
    }
    if k == 3 {
        for a in 0..n {
            for b in a + 1..n {
                if !connected_without(g, &[a, b]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Block/cut-node decomposition (Hopcroft–Tarjan, iterative DFS).
///
/// Blocks are reported in order of their smallest edge index; isolated nodes
/// belong to no block.
pub fn blocks(g: &Graph) -> BlockDecomposition {
    let n = g.node_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut blocks = Vec::new();
    let mut time = 0;

    for root in 0..n {
        if disc[root] != usize::MAX || g.degree(root) == 0 {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (node, parent edge, next neighbor position)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, pe, ref mut pos)) = stack.last_mut() {
            if *pos < g.degree(v) {
                let (w, e) = g.neighbors(v)[*pos];
                *pos += 1;
                if e == pe {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    edge_stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        if p != root {
                            is_cut[p] = true;
                        }
                        let mut edges = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            edges.push(e);
                            if e == pe {
                                break;
                            }
                        }
                        blocks.push(make_block(g, edges));
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    blocks.sort_by_key(|b: &Block| b.edges[0]);
    BlockDecomposition {
        blocks,
        cut_nodes: (0..n).filter(|&v| is_cut[v]).collect(),
    }
}

fn make_block(g: &Graph, mut edges: Vec<usize>) -> Block {
    edges.sort_unstable();
    let mut nodes: Vec<usize> = edges.iter().flat_map(|&e| [g.edge(e).u, g.edge(e).v]).collect();
    nodes.sort_unstable();
    nodes.dedup();
    Block { nodes, edges }
}
