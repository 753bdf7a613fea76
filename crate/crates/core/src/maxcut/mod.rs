//! Exact maximum cuts: brute force, planar graphs through the dual T-join,
//! and K3,3-minor-free graphs by SPR-tree leaf elimination.

mod eliminate;
mod planar;

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::graph::{blocks, components, Cut, Graph, MAX_ENUM_NODES};
use crate::spqr::k33_decompose;

pub use eliminate::{eliminate_leaf, EliminationState, EliminationStep, LeafOrder};
pub use planar::planar_maxcut;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxCutResult {
    pub value: i64,
    /// Canonical witness with `cut.weight(g) == value`.
    pub cut: Cut,
}

/// Whether side assignment `a` precedes `b` lexicographically (node 0 first).
fn lex_less(a: u32, b: u32) -> bool {
    let d = a ^ b;
    d != 0 && a & (d & d.wrapping_neg()) == 0
}

/// Best cut over canonical side masks, optionally forcing one edge in or out.
/// Ties go to the lexicographically smallest side vector.
fn enumerate_best(g: &Graph, forced: Option<(usize, bool)>) -> Option<(i64, Vec<bool>)> {
    let n = g.node_count();
    let mut free = vec![true; n];
    for comp in components(g) {
        free[comp[0]] = false;
    }
    let free_nodes: Vec<usize> = (0..n).filter(|&v| free[v]).collect();
    let ends: Vec<(u32, u32, i64)> = g.edges().iter().map(|e| (1 << e.u, 1 << e.v, e.w)).collect();
    let mut best: Option<(i64, u32)> = None;
    for bits in 0u64..1 << free_nodes.len() {
        let mut mask = 0u32;
        for (i, &v) in free_nodes.iter().enumerate() {
            if bits >> i & 1 == 1 {
                mask |= 1 << v;
            }
        }
        if let Some((e, inside)) = forced {
            let (a, b, _) = ends[e];
            if ((mask & a != 0) != (mask & b != 0)) != inside {
                continue;
            }
        }
        let value: i64 = ends
            .iter()
            .filter(|&&(a, b, _)| (mask & a != 0) != (mask & b != 0))
            .map(|e| e.2)
            .sum();
        let better = match best {
            None => true,
            Some((bv, bm)) => match value.cmp(&bv) {
                Ordering::Greater => true,
                Ordering::Equal => lex_less(mask, bm),
                Ordering::Less => false,
            },
        };
        if better {
            best = Some((value, mask));
        }
    }
    best.map(|(v, m)| (v, (0..n).map(|x| m >> x & 1 == 1).collect()))
}

/// Exact maximum cut by enumerating all canonical cuts.
pub fn maxcut_bruteforce(g: &Graph) -> Result<MaxCutResult> {
    if g.node_count() > MAX_ENUM_NODES {
        return Err(Error::TooLarge {
            what: "brute-force maximum cut",
            limit: MAX_ENUM_NODES,
            got: g.node_count(),
        });
    }
    let (value, side) = enumerate_best(g, None).unwrap_or((0, Vec::new()));
    Ok(MaxCutResult {
        value,
        cut: Cut::from_side(g, side),
    })
}

/// Exact maximum cut of a K3,3-minor-free graph.
pub fn maxcut(g: &Graph) -> Result<MaxCutResult> {
    maxcut_with(g, LeafOrder::LowestId)
}

/// [`maxcut`] with a chosen leaf processing order.
///
/// Blocks are solved independently and glued at cut nodes by flipping
/// block-local sides.
pub fn maxcut_with(g: &Graph, order: LeafOrder) -> Result<MaxCutResult> {
    let dec = k33_decompose(g);
    if !dec.is_k33_minor_free {
        return Err(Error::HasK33Minor {
            witness: dec.witness.unwrap_or_default(),
        });
    }
    let n = g.node_count();
    let bd = blocks(g);
    let mut blocks_of = vec![Vec::new(); n];
    for (i, b) in bd.blocks.iter().enumerate() {
        for &v in &b.nodes {
            blocks_of[v].push(i);
        }
    }
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut done = vec![false; bd.blocks.len()];
    let mut value = 0i64;
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &bi in &blocks_of[x] {
                if done[bi] {
                    continue;
                }
                done[bi] = true;
                let b = &bd.blocks[bi];
                let (bg, nodes, _) = g.edge_subgraph(&b.edges);
                let (v, local) = if b.is_bridge() {
                    let w = bg.edge(0).w;
                    (w.max(0), vec![false, w > 0])
                } else {
                    let r = EliminationState::new(&bg)?.run(order)?;
                    (r.value, r.cut.side().to_vec())
                };
                value = value.checked_add(v).ok_or(Error::Overflow("cut value"))?;
                let at_x = nodes.iter().position(|&y| y == x).unwrap();
                let flip = local[at_x] != side[x].unwrap();
                for (i, &y) in nodes.iter().enumerate() {
                    if side[y].is_none() {
                        side[y] = Some(local[i] ^ flip);
                        stack.push(y);
                    }
                }
            }
        }
    }
    let cut = Cut::from_side(g, side.into_iter().map(|s| s.unwrap()).collect());
    assert_eq!(cut.weight(g), value, "witness does not attain the computed value");
    Ok(MaxCutResult { value, cut })
}
