use std::collections::BTreeSet;

use super::{blocks, Graph};
use crate::error::{Error, Result};
use crate::planar::is_planar;
use crate::spqr::{spr_tree, NodeKind};

/// The three fixed minors the solvers care about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Minor {
    K5,
    K33,
    C4,
}

impl Minor {
    fn order(self) -> usize {
        match self {
            Minor::K5 => 5,
            Minor::K33 => 6,
            Minor::C4 => 4,
        }
    }

    fn min_degree(self) -> usize {
        match self {
            Minor::C4 => 2,
            _ => 3,
        }
    }
}

/// Node limit (after degree reductions) for [`has_minor_exhaustive`].
pub const MAX_EXHAUSTIVE_NODES: usize = 12;

/// Exact minor test.
///
/// C4 uses the block characterization (a block with four or more nodes holds
/// a long cycle). K3,3 uses the SPR classification: a K3,3 minor exists iff
/// some 3-connected component is non-planar and not K5. K5 is decided per
/// non-planar 3-connected component, falling back to [`has_minor_exhaustive`]
/// for components other than K5 itself.
pub fn has_minor(g: &Graph, h: Minor) -> Result<bool> {
    match h {
        Minor::C4 => Ok(blocks(g).blocks.iter().any(|b| b.nodes.len() >= 4)),
        Minor::K33 => Ok(!crate::spqr::k33_decompose(g).is_k33_minor_free),
        Minor::K5 => {
            for b in blocks(g).blocks {
                if b.nodes.len() < 5 {
                    continue;
                }
                let (bg, _, _) = g.edge_subgraph(&b.edges);
                if is_planar(&bg) {
                    continue;
                }
                let tree = spr_tree(&bg)?;
                for node in tree.nodes.iter().filter(|t| t.kind == NodeKind::R) {
                    let (sk, _) = node.skeleton.simple_graph();
                    if sk.node_count() == 5 && sk.edge_count() == 10 {
                        return Ok(true);
                    }
                    if !is_planar(&sk) && has_minor_exhaustive(&sk, Minor::K5)? {
                        return Ok(true);
                    }
                }
            }
            Ok(false)
        }
    }
}

/// Minor test by exhaustive search over branch-set partitions.
///
/// Nodes of degree at most one are deleted, and for K5/K3,3 degree-2 nodes are
/// suppressed. In a connected graph any minor model of a connected `H` extends
/// to a partition of all nodes into `|V(H)|` connected branch sets, so each
/// remaining component is searched over such partitions.
pub fn has_minor_exhaustive(g: &Graph, h: Minor) -> Result<bool> {
    let n = g.node_count();
    let mut adj: Vec<BTreeSet<usize>> = (0..n)
        .map(|v| g.neighbors(v).iter().map(|&(w, _)| w).collect())
        .collect();
    let mut alive = vec![true; n];
    loop {
        let mut changed = false;
        for v in 0..n {
            if !alive[v] {
                continue;
            }
            let d = adj[v].len();
            if d <= 1 || (d == 2 && h.min_degree() == 3) {
                let nb: Vec<usize> = adj[v].iter().copied().collect();
                for &w in &nb {
                    adj[w].remove(&v);
                }
                adj[v].clear();
                alive[v] = false;
                if nb.len() == 2 {
                    adj[nb[0]].insert(nb[1]);
                    adj[nb[1]].insert(nb[0]);
                }
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    let mut seen = vec![false; n];
    for s in 0..n {
        if !alive[s] || seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            for &w in &adj[comp[i]] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
            i += 1;
        }
        if comp.len() < h.order() {
            continue;
        }
        if comp.len() > MAX_EXHAUSTIVE_NODES {
            return Err(Error::TooLarge {
                what: "exhaustive minor search",
                limit: MAX_EXHAUSTIVE_NODES,
                got: comp.len(),
            });
        }
        comp.sort_unstable();
        let masks: Vec<u32> = comp
            .iter()
            .map(|&v| {
                adj[v]
                    .iter()
                    .map(|w| comp.binary_search(w).unwrap())
                    .fold(0u32, |m, j| m | 1 << j)
            })
            .collect();
        let mut part = vec![0usize; comp.len()];
        if search(&masks, h, &mut part, 0, 0) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn search(adj: &[u32], h: Minor, part: &mut [usize], i: usize, used: usize) -> bool {
    let k = h.order();
    let s = adj.len();
    if used + (s - i) < k {
        return false;
    }
    if i == s {
        return quotient_contains(adj, h, part);
    }
    for p in 0..(used + 1).min(k) {
        part[i] = p;
        if search(adj, h, part, i + 1, used.max(p + 1)) {
            return true;
        }
    }
    false
}

fn quotient_contains(adj: &[u32], h: Minor, part: &[usize]) -> bool {
    let k = h.order();
    let mut members = [0u32; 6];
    for (v, &p) in part.iter().enumerate() {
        members[p] |= 1 << v;
    }
    for &m in &members[..k] {
        if !connected_mask(adj, m) {
            return false;
        }
    }
    let mut q = [0u32; 6];
    for (v, &p) in part.iter().enumerate() {
        for (r, &m) in members[..k].iter().enumerate() {
            if r != p && adj[v] & m != 0 {
                q[p] |= 1 << r;
            }
        }
    }
    let e = |a: usize, b: usize| q[a] >> b & 1 == 1;
    match h {
        Minor::K5 => (0..5).all(|a| (a + 1..5).all(|b| e(a, b))),
        Minor::C4 => [[0, 1, 2, 3], [0, 1, 3, 2], [0, 2, 1, 3]]
            .iter()
            .any(|c| (0..4).all(|i| e(c[i], c[(i + 1) % 4]))),
        Minor::K33 => (1..6).any(|a| {
            (a + 1..6).any(|b| {
                let left = [0, a, b];
                let right: Vec<usize> = (0..6).filter(|x| !left.contains(x)).collect();
                left.iter().all(|&x| right.iter().all(|&y| e(x, y)))
            })
        }),
    }
}

fn connected_mask(adj: &[u32], m: u32) -> bool {
    if m == 0 {
        return false;
    }
    let mut reach = m & m.wrapping_neg();
    loop {
        let mut next = reach;
        let mut r = reach;
        while r != 0 {
            let v = r.trailing_zeros() as usize;
            r &= r - 1;
            next |= adj[v] & m;
        }
        if next == reach {
            return reach == m;
        }
        reach = next;
    }
}
