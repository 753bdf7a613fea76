//! Minimum-weight perfect matching and minimum-weight T-joins.

mod blossom;

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

/// Complete symmetric weighting on `weights.len()` points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingInstance {
    pub weights: Vec<Vec<i64>>,
}

impl MatchingInstance {
    pub fn point_count(&self) -> usize {
        self.weights.len()
    }
}

/// Multigraph with loops, arbitrary integer weights and a terminal set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TJoinInstance {
    pub node_count: usize,
    pub edges: Vec<(usize, usize, i64)>,
    pub terminals: Vec<usize>,
}

/// Minimum-weight perfect matching. Pairs are `(i, j)` with `i < j`, sorted.
pub fn min_weight_perfect_matching(inst: &MatchingInstance) -> Result<(Vec<(usize, usize)>, i64)> {
    let k = inst.point_count();
    if k % 2 == 1 {
        return Err(Error::OddPointCount(k));
    }
    if let Some(i) = (0..k).find(|&i| inst.weights[i].len() != k) {
        return Err(Error::InvalidArgument(format!(
            "weight row {i} has length {}",
            inst.weights[i].len()
        )));
    }
    if k == 0 {
        return Ok((Vec::new(), 0));
    }
    let max = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .map(|(i, j)| inst.weights[i][j])
        .max()
        .unwrap_or(0);
    let mut edges = Vec::with_capacity(k * (k - 1) / 2);
    for i in 0..k {
        for j in i + 1..k {
            if inst.weights[i][j] != inst.weights[j][i] {
                return Err(Error::InvalidArgument(format!("weights of {i}-{j} are not symmetric")));
            }
            edges.push((i, j, max + 1 - inst.weights[i][j]));
        }
    }
    let mate = blossom::MaxWeightMatching::new(k, edges, true).solve();
    let mut pairs = Vec::with_capacity(k / 2);
    let mut total = 0i64;
    for (i, m) in mate.iter().enumerate() {
        let j = m.expect("complete graph on an even point set has a perfect matching");
        if i < j {
            pairs.push((i, j));
            total = total
                .checked_add(inst.weights[i][j])
                .ok_or(Error::Overflow("matching weight"))?;
        }
    }
    Ok((pairs, total))
}

/// Shortest-path label: distance, then lexicographic node sequence.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Label {
    dist: i64,
    nodes: Vec<usize>,
    edges: Vec<usize>,
}

/// Shortest paths from `s` under nonnegative `weights`, ties broken by the
/// lexicographically smallest node sequence.
fn shortest_paths(n: usize, adj: &[Vec<(usize, usize)>], weights: &[i64], s: usize) -> Vec<Option<Label>> {
    let mut best: Vec<Option<Label>> = vec![None; n];
    let mut done = vec![false; n];
    let mut heap = BinaryHeap::new();
    let start = Label {
        dist: 0,
        nodes: vec![s],
        edges: Vec::new(),
    };
    best[s] = Some(start.clone());
    heap.push(Reverse((start, s)));
    while let Some(Reverse((lab, v))) = heap.pop() {
        if done[v] || best[v].as_ref() != Some(&lab) {
            continue;
        }
        done[v] = true;
        for &(y, e) in &adj[v] {
            if done[y] {
                continue;
            }
            let mut cand = lab.clone();
            cand.dist += weights[e];
            cand.nodes.push(y);
            cand.edges.push(e);
            if best[y].as_ref().is_none_or(|b| cand < *b) {
                best[y] = Some(cand.clone());
                heap.push(Reverse((cand, y)));
            }
        }
    }
    best
}

/// Minimum-weight T-join. Returns sorted edge indices and the total weight.
///
/// Negative edges are flipped first: with `N` the negative non-loop edges,
/// a nonnegative instance is solved for `T Δ odd(N)` and its answer is
/// combined with `N` by symmetric difference. Negative loops are always
/// taken since they do not affect parity.
pub fn min_weight_t_join(inst: &TJoinInstance) -> Result<(Vec<usize>, i64)> {
    let n = inst.node_count;
    let mut terminals = inst.terminals.clone();
    terminals.sort_unstable();
    terminals.dedup();
    if terminals.len() != inst.terminals.len() {
        return Err(Error::InvalidArgument("repeated terminal".into()));
    }
    if let Some(&t) = terminals.iter().find(|&&t| t >= n) {
        return Err(Error::NodeOutOfRange { node: t, n });
    }
    if let Some(&(u, v, _)) = inst.edges.iter().find(|e| e.0 >= n || e.1 >= n) {
        return Err(Error::NodeOutOfRange { node: u.max(v), n });
    }
    if terminals.len() % 2 == 1 {
        return Err(Error::OddTerminalCount(terminals.len()));
    }

    let mut adj = vec![Vec::new(); n];
    for (id, &(u, v, _)) in inst.edges.iter().enumerate() {
        if u != v {
            adj[u].push((v, id));
            adj[v].push((u, id));
        }
    }
    if n > 0 {
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &(y, _) in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if seen.contains(&false) {
            return Err(Error::Disconnected);
        }
    }

    let mut in_join = vec![false; inst.edges.len()];
    let mut odd = vec![false; n];
    for &t in &terminals {
        odd[t] = true;
    }
    for (id, &(u, v, w)) in inst.edges.iter().enumerate() {
        if w < 0 {
            in_join[id] = true;
            if u != v {
                odd[u] ^= true;
                odd[v] ^= true;
            }
        }
    }
    let abs: Vec<i64> = inst.edges.iter().map(|e| e.2.abs()).collect();
    let shifted: Vec<usize> = (0..n).filter(|&v| odd[v]).collect();

    let paths: Vec<Vec<Option<Label>>> = shifted.iter().map(|&s| shortest_paths(n, &adj, &abs, s)).collect();
    let weights: Vec<Vec<i64>> = (0..shifted.len())
        .map(|i| {
            shifted
                .iter()
                .map(|&t| paths[i][t].as_ref().expect("connected").dist)
                .collect()
        })
        .collect();
    let (pairs, _) = min_weight_perfect_matching(&MatchingInstance { weights })?;
    for (i, j) in pairs {
        for &e in &paths[i][shifted[j]].as_ref().expect("connected").edges {
            in_join[e] ^= true;
        }
    }

    let join: Vec<usize> = (0..inst.edges.len()).filter(|&e| in_join[e]).collect();
    let mut total = 0i64;
    for &e in &join {
        total = total
            .checked_add(inst.edges[e].2)
            .ok_or(Error::Overflow("T-join weight"))?;
    }
    Ok((join, total))
}
