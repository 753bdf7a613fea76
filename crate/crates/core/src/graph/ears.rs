use std::collections::VecDeque;

use super::{is_k_connected, Graph};
use crate::error::{Error, Result};

/// Ear decomposition of a 2-connected graph.
///
/// The first element is a shortest cycle (closed: first node repeated at the
/// end); every later element is a path whose endpoints, and only those, lie in
/// the union of the earlier pieces.
pub fn ear_decomposition(g: &Graph) -> Result<Vec<Vec<usize>>> {
    if !is_k_connected(g, 2) {
        return Err(Error::NotTwoConnected);
    }
    let n = g.node_count();
    let m = g.edge_count();
    let mut ears = vec![shortest_cycle(g)];
    let mut node_done = vec![false; n];
    let mut edge_done = vec![false; m];
    mark(g, &ears[0], &mut node_done, &mut edge_done);
    let mut covered = ears[0].len() - 1;

    while covered < m {
        let (e, start) = (0..m)
            .filter(|&e| !edge_done[e])
            .find_map(|e| {
                let ed = g.edge(e);
                if node_done[ed.u] {
                    Some((e, ed.u))
                } else if node_done[ed.v] {
                    Some((e, ed.v))
                } else {
                    None
                }
            })
            .expect("2-connected graph always has an edge leaving the covered part");
        let next = g.edge(e).other(start);
        let ear = if node_done[next] {
            vec![start, next]
        } else {
            // BFS from `next` through uncovered nodes to a covered node other than `start`.
            let mut parent = vec![usize::MAX; n];
            parent[next] = next;
            let mut queue = VecDeque::from([next]);
            let mut end = None;
            'bfs: while let Some(v) = queue.pop_front() {
                for &(w, _) in g.neighbors(v) {
                    if node_done[w] {
                        if w != start {
                            end = Some((v, w));
                            break 'bfs;
                        }
                    } else if parent[w] == usize::MAX {
                        parent[w] = v;
                        queue.push_back(w);
                    }
                }
            }
            let (last, target) = end.expect("2-connectivity guarantees a second attachment");
            let mut tail = vec![target, last];
            let mut v = last;
            while v != next {
                v = parent[v];
                tail.push(v);
            }
            tail.push(start);
            tail.reverse();
            tail
        };
        mark(g, &ear, &mut node_done, &mut edge_done);
        covered += ear.len() - 1;
        ears.push(ear);
    }
    Ok(ears)
}

fn mark(g: &Graph, path: &[usize], nodes: &mut [bool], edges: &mut [bool]) {
    for w in path.windows(2) {
        edges[g.edge_between(w[0], w[1]).unwrap()] = true;
    }
    for &v in path {
        nodes[v] = true;
    }
}

/// A shortest cycle, found by BFS from every edge's endpoint with the edge removed.
fn shortest_cycle(g: &Graph) -> Vec<usize> {
    let n = g.node_count();
    let mut best: Option<Vec<usize>> = None;
    for (id, e) in g.edges().iter().enumerate() {
        let mut parent = vec![usize::MAX; n];
        parent[e.u] = e.u;
        let mut queue = VecDeque::from([e.u]);
        while let Some(v) = queue.pop_front() {
            if v == e.v {
                break;
            }
            for &(w, f) in g.neighbors(v) {
                if f != id && parent[w] == usize::MAX {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        if parent[e.v] == usize::MAX {
            continue;
        }
        let mut cyc = vec![e.v];
        let mut v = e.v;
        while v != e.u {
            v = parent[v];
            cyc.push(v);
        }
        cyc.reverse();
        // u .. v, closed back to u through the removed edge
        cyc.push(e.u);
        if best.as_ref().is_none_or(|b| cyc.len() < b.len()) {
            best = Some(cyc);
        }
    }
    best.expect("2-connected graph has a cycle")
}
