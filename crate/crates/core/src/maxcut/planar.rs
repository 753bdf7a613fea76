use std::collections::VecDeque;

use super::MaxCutResult;
use crate::error::{Error, Result};
use crate::graph::{is_k_connected, Cut, Graph};
use crate::planar::{dual_graph, is_planar, planar_embed};
use crate::tjoin::{min_weight_t_join, TJoinInstance};

/// Maximum cut of a 2-connected planar graph, optionally forcing edge `e`
/// into (`true`) or out of (`false`) the cut.
///
/// Cuts of `g` are exactly the even-degree edge sets of the dual, so the
/// complement of an optimal cut is a minimum-weight T-join of the dual with
/// `T` its odd-degree nodes.
pub fn planar_maxcut(g: &Graph, forced: Option<(usize, bool)>) -> Result<MaxCutResult> {
    if let Some((e, _)) = forced {
        if e >= g.edge_count() {
            return Err(Error::InvalidArgument(format!("forced edge {e} out of range")));
        }
    }
    if !is_k_connected(g, 2) {
        return Err(Error::NotTwoConnected);
    }
    if !is_planar(g) {
        return Err(Error::NonPlanar);
    }
    let (value, side) = solve_connected(g, forced)?;
    Ok(MaxCutResult {
        value,
        cut: Cut::from_side(g, side),
    })
}

/// Same as [`planar_maxcut`] for any connected planar graph; returns the
/// value and a side assignment.
pub(super) fn solve_connected(g: &Graph, forced: Option<(usize, bool)>) -> Result<(i64, Vec<bool>)> {
    let n = g.node_count();
    if g.edge_count() == 0 {
        return Ok((0, vec![false; n]));
    }
    let mut h = g.clone();
    let mut shift = 0i64;
    if let Some((e, inside)) = forced {
        let big = g
            .edges()
            .iter()
            .try_fold(1i64, |acc, ed| acc.checked_add(ed.w.abs()))
            .ok_or(Error::Overflow("forcing weight"))?;
        let w = g.edge(e).w;
        let nw = if inside { w.checked_add(big) } else { w.checked_sub(big) };
        h.set_weight(e, nw.ok_or(Error::Overflow("forcing weight"))?);
        if inside {
            shift = -big;
        }
    }

    let emb = planar_embed(&h)?;
    let dual = dual_graph(&emb);
    let terminals: Vec<usize> = (0..dual.node_count).filter(|&x| dual.degree(x) % 2 == 1).collect();
    let inst = TJoinInstance {
        node_count: dual.node_count,
        edges: dual.edges.iter().map(|d| (d.a, d.b, d.w)).collect(),
        terminals,
    };
    let (join, join_weight) = min_weight_t_join(&inst)?;
    let total = h
        .edges()
        .iter()
        .try_fold(0i64, |acc, ed| acc.checked_add(ed.w))
        .ok_or(Error::Overflow("total weight"))?;

    let mut in_cut = vec![true; h.edge_count()];
    for &d in &join {
        in_cut[dual.edges[d].primal] = false;
    }
    let mut side: Vec<Option<bool>> = vec![None; n];
    side[0] = Some(false);
    let mut queue = VecDeque::from([0]);
    while let Some(x) = queue.pop_front() {
        let sx = side[x].unwrap();
        for &(y, e) in h.neighbors(x) {
            let sy = sx ^ in_cut[e];
            match side[y] {
                None => {
                    side[y] = Some(sy);
                    queue.push_back(y);
                }
                Some(s) => debug_assert_eq!(s, sy, "complement of a T-join is not a cut"),
            }
        }
    }
    let side: Vec<bool> = side.into_iter().map(|s| s.unwrap_or(false)).collect();
    let value = total - join_weight + shift;
    if let Some((e, inside)) = forced {
        let ed = g.edge(e);
        debug_assert_eq!(side[ed.u] != side[ed.v], inside);
    }
    Ok((value, side))
}
