use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use super::{enumerate_best, planar::solve_connected, MaxCutResult};
use crate::error::{Error, Result};
use crate::graph::{Cut, Graph};
use crate::planar::is_planar;
use crate::spqr::{augment_with_parallel_originals, spr_tree, EdgeKind, NodeKind};

/// Which current leaf to eliminate next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeafOrder {
    LowestId,
    /// Uniformly random leaf from a seeded xoshiro256++ stream.
    Shuffled(u64),
}

/// Record of one leaf elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationStep {
    pub leaf: usize,
    /// Ends of the leaf's virtual edge.
    pub edge: (usize, usize),
    /// Best value of the leaf component with `edge` in the cut.
    pub beta_plus: i64,
    /// Best value of the leaf component with `edge` not in the cut.
    pub beta_minus: i64,
    pub gamma: i64,
}

#[derive(Clone, Debug)]
struct LiveNode {
    kind: NodeKind,
    nodes: Vec<usize>,
    originals: Vec<usize>,
    /// `(pair, a, b)` per virtual edge.
    virtuals: Vec<(usize, usize, usize)>,
}

#[derive(Clone, Debug)]
struct Replay {
    a: usize,
    b: usize,
    nodes: Vec<usize>,
    side_in: Vec<bool>,
    side_out: Vec<bool>,
}

/// Working graph and SPR-tree of a 2-connected K3,3-minor-free graph during
/// leaf elimination.
///
/// The tree is augmented so that every tree edge has a P-node end holding an
/// original edge. A virtual edge always weighs what its parallel original
/// edge currently weighs.
#[derive(Clone, Debug)]
pub struct EliminationState {
    input: Graph,
    work: Graph,
    nodes: Vec<Option<LiveNode>>,
    owners: BTreeMap<usize, [usize; 2]>,
    offset: i64,
    steps: Vec<EliminationStep>,
    replay: Vec<Replay>,
}

impl EliminationState {
    pub fn new(g: &Graph) -> Result<EliminationState> {
        let t = spr_tree(g)?;
        let (work, t) = augment_with_parallel_originals(g, &t);
        let mut owners: BTreeMap<usize, [usize; 2]> = BTreeMap::new();
        for te in &t.tree_edges {
            owners.insert(te.pair, [te.a, te.b]);
        }
        let nodes = t
            .nodes
            .iter()
            .map(|n| {
                let virtuals = n
                    .skeleton
                    .edges
                    .iter()
                    .filter_map(|e| match e.kind {
                        EdgeKind::Virtual(p) => Some((p, e.u, e.v)),
                        EdgeKind::Original(_) => None,
                    })
                    .collect();
                Some(LiveNode {
                    kind: n.kind,
                    nodes: n.skeleton.nodes.clone(),
                    originals: n.skeleton.originals(),
                    virtuals,
                })
            })
            .collect();
        Ok(EliminationState {
            input: g.clone(),
            work,
            nodes,
            owners,
            offset: 0,
            steps: Vec::new(),
            replay: Vec::new(),
        })
    }

    /// Live S- and R-nodes with exactly one virtual edge, by id.
    pub fn leaves(&self) -> Vec<usize> {
        self.nodes
            .iter()
            .enumerate()
            .filter_map(|(i, n)| n.as_ref().map(|n| (i, n)))
            .filter(|(_, n)| n.kind != NodeKind::P && n.virtuals.len() == 1)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn steps(&self) -> &[EliminationStep] {
        &self.steps
    }

    /// Current weight of edge `e` of the augmented graph.
    pub fn weight(&self, e: usize) -> i64 {
        self.work.edge(e).w
    }

    pub fn eliminate_leaf(&mut self, leaf: usize) -> Result<EliminationStep> {
        let malformed = |s: String| Err(Error::MalformedState(s));
        let Some(node) = self.nodes.get(leaf).and_then(|n| n.clone()) else {
            return malformed(format!("tree node {leaf} is not live"));
        };
        if node.kind == NodeKind::P || node.virtuals.len() != 1 {
            return malformed(format!("tree node {leaf} is not an S- or R-leaf"));
        }
        let (pair, a, b) = node.virtuals[0];
        let [x, y] = self.owners[&pair];
        let p = if x == leaf { y } else { x };
        let pnode = self.nodes[p].as_ref().expect("pair owner is live");
        if pnode.kind != NodeKind::P || pnode.originals.len() != 1 {
            return malformed(format!(
                "leaf {leaf} is not attached to a P-node with one original edge"
            ));
        }
        let e_ab = pnode.originals[0];

        let local = |v: usize| node.nodes.binary_search(&v).unwrap();
        let mut h = Graph::new(node.nodes.len());
        for &e in &node.originals {
            let ed = self.work.edge(e);
            h.add_edge(local(ed.u), local(ed.v), ed.w)?;
        }
        let ab = h.add_edge(local(a), local(b), self.work.edge(e_ab).w)?;
        let solve = |inside: bool| -> Result<(i64, Vec<bool>)> {
            if is_planar(&h) {
                solve_connected(&h, Some((ab, inside)))
            } else {
                Ok(enumerate_best(&h, Some((ab, inside))).expect("a cut with either status exists"))
            }
        };
        let (beta_plus, side_in) = solve(true)?;
        let (beta_minus, side_out) = solve(false)?;
        let gamma = beta_plus.checked_sub(beta_minus).ok_or(Error::Overflow("gamma"))?;
        self.work.set_weight(e_ab, gamma);
        self.offset = self.offset.checked_add(beta_minus).ok_or(Error::Overflow("offset"))?;

        self.nodes[leaf] = None;
        self.owners.remove(&pair);
        let pn = self.nodes[p].as_mut().unwrap();
        pn.virtuals.retain(|v| v.0 != pair);
        if pn.virtuals.len() == 1 {
            let q = pn.virtuals[0].0;
            let [x, y] = self.owners.remove(&q).unwrap();
            let other = if x == p { y } else { x };
            self.nodes[p] = None;
            let on = self.nodes[other].as_mut().unwrap();
            on.virtuals.retain(|v| v.0 != q);
            on.originals.push(e_ab);
            on.originals.sort_unstable();
        } else if pn.virtuals.is_empty() {
            return malformed(format!("P-node {p} lost all virtual edges"));
        }

        let step = EliminationStep {
            leaf,
            edge: (a, b),
            beta_plus,
            beta_minus,
            gamma,
        };
        self.replay.push(Replay {
            a,
            b,
            nodes: node.nodes,
            side_in,
            side_out,
        });
        self.steps.push(step.clone());
        Ok(step)
    }

    /// Solves the last remaining component and replays the steps backwards
    /// to build the witness.
    pub fn finish(self) -> Result<MaxCutResult> {
        let live: Vec<&LiveNode> = self.nodes.iter().flatten().collect();
        if live.len() != 1 || !live[0].virtuals.is_empty() {
            return Err(Error::MalformedState(format!("{} tree nodes remain", live.len())));
        }
        let last = live[0];
        let local = |v: usize| last.nodes.binary_search(&v).unwrap();
        let mut h = Graph::new(last.nodes.len());
        for &e in &last.originals {
            let ed = self.work.edge(e);
            h.add_edge(local(ed.u), local(ed.v), ed.w)?;
        }
        let (xi, last_side) = if is_planar(&h) {
            solve_connected(&h, None)?
        } else {
            enumerate_best(&h, None).expect("nonempty graph")
        };

        let n = self.input.node_count();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for (i, &v) in last.nodes.iter().enumerate() {
            side[v] = Some(last_side[i]);
        }
        for r in self.replay.iter().rev() {
            let ia = r.nodes.binary_search(&r.a).unwrap();
            let sa = side[r.a].expect("virtual edge ends are assigned later");
            let status = sa != side[r.b].expect("virtual edge ends are assigned later");
            let local = if status { &r.side_in } else { &r.side_out };
            let flip = local[ia] != sa;
            for (i, &v) in r.nodes.iter().enumerate() {
                let s = local[i] ^ flip;
                match side[v] {
                    None => side[v] = Some(s),
                    Some(old) => assert_eq!(old, s, "replay disagrees on node {v}"),
                }
            }
        }
        let value = self.offset.checked_add(xi).ok_or(Error::Overflow("cut value"))?;
        let cut = Cut::from_side(&self.input, side.into_iter().map(|s| s.unwrap()).collect());
        assert_eq!(cut.weight(&self.input), value, "elimination telescope broken");
        Ok(MaxCutResult { value, cut })
    }

    /// Eliminates leaves in the given order, then finishes.
    pub fn run(mut self, order: LeafOrder) -> Result<MaxCutResult> {
        let mut rng = match order {
            LeafOrder::Shuffled(seed) => Some(Xoshiro256PlusPlus::seed_from_u64(seed)),
            LeafOrder::LowestId => None,
        };
        loop {
            let leaves = self.leaves();
            if leaves.is_empty() {
                break;
            }
            let pick = match rng.as_mut() {
                Some(r) => leaves[r.gen_range(0..leaves.len())],
                None => leaves[0],
            };
            self.eliminate_leaf(pick)?;
        }
        self.finish()
    }
}

/// Eliminates `leaf` from `state`; see [`EliminationState::eliminate_leaf`].
pub fn eliminate_leaf(state: &mut EliminationState, leaf: usize) -> Result<EliminationStep> {
    state.eliminate_leaf(leaf)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_triangles_first_step() {
        // a=0, b=1, x=2, y=3; edge 0 is ab
        for w in [[3, 1, 2, -1, 5], [-2, 4, 4, 1, 1], [0, -3, -5, 2, -1]] {
            let g = Graph::from_edges(
                4,
                [(0, 1, w[0]), (0, 2, w[1]), (1, 2, w[2]), (0, 3, w[3]), (1, 3, w[4])],
            )
            .unwrap();
            let mut st = EliminationState::new(&g).unwrap();
            let leaf = st.leaves()[0];
            let step = st.eliminate_leaf(leaf).unwrap();
            assert_eq!(step.edge, (0, 1));
            assert_eq!(step.beta_plus, w[0] + w[1].max(w[2]));
            assert_eq!(step.beta_minus, 0.max(w[1] + w[2]));
            assert_eq!(step.gamma, step.beta_plus - step.beta_minus);
            let r = st.run(LeafOrder::LowestId).unwrap();
            assert_eq!(r.value, super::super::maxcut_bruteforce(&g).unwrap().value);
        }
    }

    #[test]
    fn non_leaf_rejected() {
        let mut st = EliminationState::new(&Graph::complete(5)).unwrap();
        assert!(st.leaves().is_empty());
        assert!(matches!(st.eliminate_leaf(0), Err(Error::MalformedState(_))));
        assert_eq!(st.finish().unwrap().value, 6);
    }
}
