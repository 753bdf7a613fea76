//! Path-addition planarity test (Demoucron, Malgrange, Pertuiset) for
//! 2-connected simple graphs.

use std::collections::{HashMap, VecDeque};

use crate::graph::Graph;

enum Fragment {
    Edge(usize),
    Component(Vec<usize>),
}

/// Rotation system of a 2-connected graph as per-node cyclic lists of edge
/// ids, or `None` if the graph is not planar.
pub(super) fn embed_block(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.node_count();
    let m = g.edge_count();
    let mut node_in = vec![false; n];
    let mut edge_in = vec![false; m];

    let cycle = initial_cycle(g);
    for w in cycle.windows(2) {
        edge_in[g.edge_between(w[0], w[1]).unwrap()] = true;
    }
    edge_in[g.edge_between(cycle[0], *cycle.last().unwrap()).unwrap()] = true;
    for &v in &cycle {
        node_in[v] = true;
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut face_list: Vec<Vec<usize>> = vec![cycle, rev];
    let mut embedded = edge_in.iter().filter(|&&b| b).count();

    while embedded < m {
        let frags = fragments(g, &node_in, &edge_in);
        let mut choice: Option<(usize, usize)> = None;
        for (i, (_, att)) in frags.iter().enumerate() {
            let admissible: Vec<usize> = (0..face_list.len())
                .filter(|&f| att.iter().all(|a| face_list[f].contains(a)))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((i, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((i, admissible[0]));
                    }
                }
            }
        }
        let (fi, face) = choice.expect("at least one fragment remains");
        let (frag, att) = &frags[fi];
        let path = match frag {
            Fragment::Edge(e) => {
                let ed = g.edge(*e);
                vec![ed.u, ed.v]
            }
            Fragment::Component(nodes) => fragment_path(g, nodes, att, &node_in),
        };
        for w in path.windows(2) {
            edge_in[g.edge_between(w[0], w[1]).unwrap()] = true;
            embedded += 1;
        }
        for &v in &path {
            node_in[v] = true;
        }
        let (f1, f2) = split_face(&face_list[face], &path);
        face_list[face] = f1;
        face_list.push(f2);
    }

    // Face walk rule: arriving at `cur` from `prev`, leave towards `succ_cur(prev)`.
    let mut succ: HashMap<(usize, usize), usize> = HashMap::new();
    for f in &face_list {
        let k = f.len();
        for i in 0..k {
            let (prev, cur, next) = (f[i], f[(i + 1) % k], f[(i + 2) % k]);
            succ.insert((cur, prev), next);
        }
    }
    let mut rotation = vec![Vec::new(); n];
    for (v, rot) in rotation.iter_mut().enumerate() {
        let first = g.neighbors(v)[0].0;
        let mut x = first;
        loop {
            rot.push(g.edge_between(v, x).unwrap());
            x = succ[&(v, x)];
            if x == first {
                break;
            }
        }
        assert_eq!(rot.len(), g.degree(v), "inconsistent face orientation");
    }
    Some(rotation)
}

fn initial_cycle(g: &Graph) -> Vec<usize> {
    let e = g.edge(0);
    let mut parent = vec![usize::MAX; g.node_count()];
    parent[e.u] = e.u;
    let mut queue = VecDeque::from([e.u]);
    while let Some(x) = queue.pop_front() {
        for &(y, f) in g.neighbors(x) {
            if f != 0 && parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![e.v];
    let mut x = e.v;
    while x != e.u {
        x = parent[x];
        path.push(x);
    }
    path
}

/// Fragments of `g` relative to the embedded part, each with its sorted
/// attachment nodes.
fn fragments(g: &Graph, node_in: &[bool], edge_in: &[bool]) -> Vec<(Fragment, Vec<usize>)> {
    let mut out = Vec::new();
    for (id, e) in g.edges().iter().enumerate() {
        if !edge_in[id] && node_in[e.u] && node_in[e.v] {
            out.push((Fragment::Edge(id), vec![e.u, e.v]));
        }
    }
    let n = g.node_count();
    let mut seen = vec![false; n];
    for s in 0..n {
        if node_in[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut att = Vec::new();
        let mut i = 0;
        while i < comp.len() {
            for &(y, _) in g.neighbors(comp[i]) {
                if node_in[y] {
                    att.push(y);
                } else if !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                }
            }
            i += 1;
        }
        att.sort_unstable();
        att.dedup();
        out.push((Fragment::Component(comp), att));
    }
    out
}

/// Path through a component fragment between its first attachment and some
/// other attachment.
fn fragment_path(g: &Graph, comp: &[usize], att: &[usize], node_in: &[bool]) -> Vec<usize> {
    let a1 = att[0];
    let mut parent: HashMap<usize, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for &(y, _) in g.neighbors(a1) {
        if comp.contains(&y) && !parent.contains_key(&y) {
            parent.insert(y, a1);
            queue.push_back(y);
        }
    }
    while let Some(x) = queue.pop_front() {
        if let Some(&(a2, _)) = g.neighbors(x).iter().find(|&&(y, _)| node_in[y] && y != a1) {
            let mut path = vec![a2, x];
            let mut cur = x;
            while parent[&cur] != a1 {
                cur = parent[&cur];
                path.push(cur);
            }
            path.push(a1);
            path.reverse();
            return path;
        }
        for &(y, _) in g.neighbors(x) {
            if !node_in[y] && !parent.contains_key(&y) {
                parent.insert(y, x);
                queue.push_back(y);
            }
        }
    }
    unreachable!("fragment of a 2-connected graph has two attachments")
}

/// Splits the oriented face `f` along `path` (whose ends lie on `f`).
fn split_face(f: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let k = f.len();
    let i = f.iter().position(|&x| x == path[0]).unwrap();
    let j = f.iter().position(|&x| x == *path.last().unwrap()).unwrap();
    let arc = |from: usize, to: usize| {
        let mut out = Vec::new();
        let mut x = from;
        loop {
            out.push(f[x]);
            if x == to {
                break;
            }
            x = (x + 1) % k;
        }
        out
    };
    let inner = &path[1..path.len() - 1];
    let mut f1 = arc(i, j);
    f1.extend(inner.iter().rev());
    let mut f2 = arc(j, i);
    f2.extend(inner.iter());
    (f1, f2)
}
