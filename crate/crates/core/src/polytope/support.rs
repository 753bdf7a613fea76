use super::LinearInequality;
use crate::graph::Graph;

/// Whether every nonzero coefficient is `1` or `-1`.
pub fn has_unit_coefficients(q: &LinearInequality) -> bool {
    q.coeffs().iter().all(|c| c.abs() <= 1)
}

/// Checks the support graph of `q` against the shapes allowed for facets of
/// K3,3-minor-free graphs: an induced subgraph of `g` that is a single edge
/// outside every triangle, or reduces to a triangle or K5 by undoing edge
/// subdivisions and replacements of an edge `ab` by a K5 minus `ab`.
pub fn support_shape_ok(g: &Graph, q: &LinearInequality) -> bool {
    let support = q.support();
    let (s, nodes, _) = g.edge_subgraph(&support);
    let (induced, _, _) = g.induced(&nodes);
    if induced.edge_count() != s.edge_count() {
        return false;
    }
    if support.len() == 1 {
        let e = g.edge(support[0]);
        return !g.neighbors(e.u).iter().any(|&(x, _)| g.has_edge(x, e.v));
    }

    let n = s.node_count();
    let mut adj = vec![vec![false; n]; n];
    for e in s.edges() {
        adj[e.u][e.v] = true;
        adj[e.v][e.u] = true;
    }
    let mut alive = vec![true; n];
    let nbrs = |adj: &Vec<Vec<bool>>, alive: &Vec<bool>, v: usize| -> Vec<usize> {
        (0..n).filter(|&x| alive[x] && adj[v][x]).collect()
    };

    loop {
        let mut changed = false;
        for v in 0..n {
            if !alive[v] {
                continue;
            }
            let nb = nbrs(&adj, &alive, v);
            if nb.len() == 2 && !adj[nb[0]][nb[1]] {
                alive[v] = false;
                adj[nb[0]][nb[1]] = true;
                adj[nb[1]][nb[0]] = true;
                changed = true;
            }
        }
        if !changed {
            changed = undo_k5_replacement(&mut adj, &mut alive);
        }
        if !changed {
            break;
        }
    }

    let live: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    let edges: usize = live.iter().map(|&v| nbrs(&adj, &alive, v).len()).sum::<usize>() / 2;
    matches!((live.len(), edges), (3, 3) | (5, 10))
}

/// Finds three nodes whose neighbourhoods lie within themselves plus a
/// non-adjacent pair `a`, `b` and that together with `a`, `b` form K5 minus
/// `ab`; replaces them by the edge `ab`.
fn undo_k5_replacement(adj: &mut [Vec<bool>], alive: &mut [bool]) -> bool {
    let n = alive.len();
    let live: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    if live.len() <= 5 {
        return false;
    }
    for (i, &a) in live.iter().enumerate() {
        for &b in &live[i + 1..] {
            if adj[a][b] {
                continue;
            }
            let common: Vec<usize> = live.iter().copied().filter(|&x| adj[a][x] && adj[b][x]).collect();
            for x in 0..common.len() {
                for y in x + 1..common.len() {
                    for z in y + 1..common.len() {
                        let c = [common[x], common[y], common[z]];
                        let closed = c
                            .iter()
                            .all(|&v| live.iter().all(|&u| !adj[v][u] || u == a || u == b || c.contains(&u)));
                        let complete = adj[c[0]][c[1]] && adj[c[0]][c[2]] && adj[c[1]][c[2]];
                        if closed && complete {
                            for v in c {
                                alive[v] = false;
                            }
                            adj[a][b] = true;
                            adj[b][a] = true;
                            return true;
                        }
                    }
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_ones(g: &Graph, rhs: i64) -> LinearInequality {
        LinearInequality::new(vec![1; g.edge_count()], rhs).unwrap()
    }

    #[test]
    fn shapes() {
        assert!(support_shape_ok(&Graph::complete(3), &all_ones(&Graph::complete(3), 2)));
        assert!(support_shape_ok(&Graph::complete(5), &all_ones(&Graph::complete(5), 6)));
        assert!(support_shape_ok(&Graph::cycle(6), &all_ones(&Graph::cycle(6), 4)));
        let dk = crate::generate::double_k5();
        assert!(support_shape_ok(&dk, &all_ones(&dk, 8)));
        let k4 = Graph::complete(4);
        assert!(!support_shape_ok(&k4, &all_ones(&k4, 4)));
        // a chord makes the 4-cycle non-induced
        let c4c = Graph::unit(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]);
        let q = LinearInequality::new(vec![1, 1, 1, 1, 0], 2).unwrap();
        assert!(!support_shape_ok(&c4c, &q));
    }
}
