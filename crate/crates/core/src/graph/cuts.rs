use super::{components, Graph};
use crate::error::{Error, Result};

/// Largest node count for which cuts are enumerated exhaustively.
pub const MAX_ENUM_NODES: usize = 24;

/// A cut δ(S): the node side `S` and the edge indicator vector x^δ.
///
/// Canonical form: in every connected component the smallest node is not in
/// `S`, so for connected graphs node 0 is never on the `S` side.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cut {
    side: Vec<bool>,
    indicator: Vec<bool>,
}

impl Cut {
    /// Builds the canonical cut for an arbitrary side assignment.
    pub fn from_side(g: &Graph, mut side: Vec<bool>) -> Cut {
        assert_eq!(side.len(), g.node_count());
        for comp in components(g) {
            if side[comp[0]] {
                for &v in &comp {
                    side[v] = !side[v];
                }
            }
        }
        let indicator = g.edges().iter().map(|e| side[e.u] != side[e.v]).collect();
        Cut { side, indicator }
    }

    pub fn from_nodes(g: &Graph, nodes: &[usize]) -> Cut {
        let mut side = vec![false; g.node_count()];
        for &v in nodes {
            side[v] = true;
        }
        Cut::from_side(g, side)
    }

    pub fn side(&self) -> &[bool] {
        &self.side
    }

    pub fn side_nodes(&self) -> Vec<usize> {
        (0..self.side.len()).filter(|&v| self.side[v]).collect()
    }

    pub fn indicator(&self) -> &[bool] {
        &self.indicator
    }

    pub fn contains_edge(&self, e: usize) -> bool {
        self.indicator[e]
    }

    pub fn cut_edges(&self) -> Vec<usize> {
        (0..self.indicator.len()).filter(|&e| self.indicator[e]).collect()
    }

    pub fn vector(&self) -> Vec<i64> {
        self.indicator.iter().map(|&b| b as i64).collect()
    }

    pub fn weight(&self, g: &Graph) -> i64 {
        g.edges()
            .iter()
            .zip(&self.indicator)
            .filter(|(_, &c)| c)
            .map(|(e, _)| e.w)
            .sum()
    }
}

/// All distinct cuts of `g` in canonical form: 2^(n - c) of them for a graph
/// with `c` connected components, ordered by the side read as a binary number.
pub fn enumerate_cuts(g: &Graph) -> Result<Vec<Cut>> {
    let set = CutSet::new(g)?;
    Ok(set
        .masks()
        .iter()
        .map(|&m| {
            let side = (0..g.node_count()).map(|v| m >> v & 1 == 1).collect();
            Cut::from_side(g, side)
        })
        .collect())
}

/// Compact table of every canonical cut of a graph, stored as side bitmasks.
///
/// Used by the exhaustive oracles, which only need indicator values
/// `x_e = side(u) xor side(v)` on the fly.
#[derive(Clone, Debug)]
pub struct CutSet {
    ends: Vec<(usize, usize)>,
    masks: Vec<u32>,
}

impl CutSet {
    pub fn new(g: &Graph) -> Result<CutSet> {
        let n = g.node_count();
        if n > MAX_ENUM_NODES {
            return Err(Error::TooLarge {
                what: "cut enumeration",
                limit: MAX_ENUM_NODES,
                got: n,
            });
        }
        let roots: Vec<usize> = components(g).iter().map(|c| c[0]).collect();
        let free: Vec<usize> = (0..n).filter(|v| !roots.contains(v)).collect();
        let masks = (0u64..1 << free.len())
            .map(|k| {
                free.iter()
                    .enumerate()
                    .filter(|&(i, _)| k >> i & 1 == 1)
                    .fold(0u32, |m, (_, &v)| m | 1 << v)
            })
            .collect();
        Ok(CutSet {
            ends: g.edges().iter().map(|e| (e.u, e.v)).collect(),
            masks,
        })
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    pub fn masks(&self) -> &[u32] {
        &self.masks
    }

    #[inline]
    pub fn bit(&self, cut: usize, e: usize) -> bool {
        let m = self.masks[cut];
        let (u, v) = self.ends[e];
        (m >> u ^ m >> v) & 1 == 1
    }

    pub fn vector(&self, cut: usize) -> Vec<i64> {
        (0..self.ends.len()).map(|e| self.bit(cut, e) as i64).collect()
    }

    /// Σ coeff_e x_e over the sparse `(edge, coeff)` list.
    #[inline]
    pub fn dot_sparse(&self, cut: usize, terms: &[(usize, i64)]) -> i64 {
        let m = self.masks[cut];
        terms
            .iter()
            .filter(|&&(e, _)| {
                let (u, v) = self.ends[e];
                (m >> u ^ m >> v) & 1 == 1
            })
            .map(|&(_, c)| c)
            .sum()
    }
}
