//! Cut polytope inequalities, facet certification, complete facet
//! descriptions, projection and a brute-force hull oracle.

mod classes;
mod hull;
mod inequality;
pub(crate) mod rank;
mod support;

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{blocks, chordless_cycles, enumerate_cuts, has_minor, k5_subgraphs, Cut, CutSet, Graph, Minor};
use crate::spqr::{k33_decompose, maximal_completion, ComponentClass};
use rank::RowSpace;

pub use classes::{
    cycle_edges, cycle_inequalities, cycle_inequality, edge_inequalities, hypermetric_k5, metric_inequalities, switch,
    triangle_edges,
};
pub use inequality::{InequalitySystem, LinearInequality};
pub use support::{has_unit_coefficients, support_shape_ok};

/// Node limit for operations that enumerate every cut.
pub const MAX_CERTIFY_NODES: usize = 22;
/// Dimension limit for [`brute_hull`].
pub const MAX_HULL_EDGES: usize = 20;
/// Vertex limit for [`brute_hull`].
pub const MAX_HULL_VERTICES: usize = 128;

fn certify_guard(g: &Graph) -> Result<CutSet> {
    if g.node_count() > MAX_CERTIFY_NODES {
        return Err(Error::TooLarge {
            what: "cut enumeration for certification",
            limit: MAX_CERTIFY_NODES,
            got: g.node_count(),
        });
    }
    CutSet::new(g)
}

fn check_len(g: &Graph, q: &LinearInequality) -> Result<()> {
    if q.edge_count() != g.edge_count() {
        return Err(Error::InvalidArgument(format!(
            "inequality over {} variables for a graph with {} edges",
            q.edge_count(),
            g.edge_count()
        )));
    }
    Ok(())
}

/// Whether `q` holds at every cut of `g`.
pub fn is_valid(g: &Graph, q: &LinearInequality) -> Result<bool> {
    check_len(g, q)?;
    let cuts = certify_guard(g)?;
    let terms = q.terms();
    Ok((0..cuts.len()).all(|c| cuts.dot_sparse(c, &terms) <= q.rhs()))
}

/// Whether `q` is valid and its tight cuts have affine rank `|E| - 1`.
pub fn is_facet(g: &Graph, q: &LinearInequality) -> Result<bool> {
    check_len(g, q)?;
    let cuts = certify_guard(g)?;
    let terms = q.terms();
    let m = g.edge_count();
    let mut first: Option<Vec<i64>> = None;
    let mut space = RowSpace::default();
    for c in 0..cuts.len() {
        let lhs = cuts.dot_sparse(c, &terms);
        if lhs > q.rhs() {
            return Ok(false);
        }
        if lhs != q.rhs() {
            continue;
        }
        match &first {
            None => first = Some(cuts.vector(c)),
            Some(f) if space.rank() + 1 < m => {
                let d: Vec<i64> = cuts.vector(c).iter().zip(f).map(|(a, b)| a - b).collect();
                space.insert(&d)?;
            }
            Some(_) => {}
        }
    }
    Ok(first.is_some() && space.rank() + 1 == m)
}

/// Facet test against an explicit full-dimensional vertex list.
fn is_facet_on(points: &[Vec<i64>], q: &LinearInequality) -> Result<bool> {
    let dim = q.edge_count();
    let mut tight = Vec::new();
    for p in points {
        let lhs = q.lhs(p);
        if lhs > q.rhs() {
            return Ok(false);
        }
        if lhs == q.rhs() {
            tight.push(p.as_slice());
        }
    }
    Ok(!tight.is_empty() && rank::affine_rank(tight)? + 1 == dim)
}

/// Affine rank of the cut vectors of `g`.
pub fn polytope_dim(g: &Graph) -> Result<usize> {
    let cuts = certify_guard(g)?;
    let m = g.edge_count();
    let mut space = RowSpace::default();
    for c in 1..cuts.len() {
        if space.rank() == m {
            break;
        }
        space.insert(&cuts.vector(c))?;
    }
    Ok(space.rank())
}

fn hull_points(cuts: &[Cut]) -> Result<Vec<Vec<i64>>> {
    let Some(first) = cuts.first() else {
        return Err(Error::InvalidArgument("empty cut list".into()));
    };
    let m = first.indicator().len();
    if cuts.iter().any(|c| c.indicator().len() != m) {
        return Err(Error::InvalidArgument("cuts over different edge sets".into()));
    }
    if m > MAX_HULL_EDGES {
        return Err(Error::TooLarge {
            what: "hull dimension",
            limit: MAX_HULL_EDGES,
            got: m,
        });
    }
    if cuts.len() > MAX_HULL_VERTICES {
        return Err(Error::TooLarge {
            what: "hull vertex count",
            limit: MAX_HULL_VERTICES,
            got: cuts.len(),
        });
    }
    Ok(cuts.iter().map(|c| c.vector()).collect())
}

/// Facets of the convex hull of the given cuts, each with the indices of
/// the cuts lying on it.
pub fn brute_hull_incidence(cuts: &[Cut]) -> Result<Vec<(LinearInequality, Vec<usize>)>> {
    let mut out = hull::hull_with_incidence(&hull_points(cuts)?)?;
    out.sort();
    Ok(out)
}

/// Facets of the convex hull of the given cuts.
pub fn brute_hull(cuts: &[Cut]) -> Result<InequalitySystem> {
    let m = cuts.first().map_or(0, |c| c.indicator().len());
    InequalitySystem::new(m, brute_hull_incidence(cuts)?.into_iter().map(|(q, _)| q))
}

/// Edge inequalities of triangle-free edges plus all cycle inequalities of
/// chordless cycles; complete exactly when `g` has no K5 minor.
pub fn facets_k5_minor_free(g: &Graph) -> Result<InequalitySystem> {
    if has_minor(g, Minor::K5)? {
        return Err(Error::InvalidArgument("graph has a K5 minor".into()));
    }
    let mut out = Vec::new();
    for e in 0..g.edge_count() {
        out.extend(edge_inequalities(g, e)?);
    }
    for c in chordless_cycles(g)? {
        out.extend(cycle_inequalities(g, &c)?);
    }
    InequalitySystem::new(g.edge_count(), out)
}

/// The 16 switchings of the K5 inequality on `nodes`.
pub fn hypermetric_switchings(g: &Graph, nodes: [usize; 5]) -> Result<Vec<LinearInequality>> {
    let base = hypermetric_k5(g, nodes)?;
    Ok((0u32..16)
        .map(|mask| {
            let w: Vec<usize> = (0..4).filter(|&i| mask >> i & 1 == 1).map(|i| nodes[i + 1]).collect();
            switch(&base, &Cut::from_nodes(g, &w))
        })
        .collect())
}

/// Metric inequalities of every triangle plus all switchings of the K5
/// inequality of every K5 subgraph, for maximal K3,3-minor-free `g`.
pub fn facets_maximal_k33_free(g: &Graph) -> Result<InequalitySystem> {
    let d = k33_decompose(g);
    if !d.is_maximal {
        return Err(Error::InvalidArgument("graph is not maximal K3,3-minor-free".into()));
    }
    let mut out = Vec::new();
    for t in triangle_edges(g) {
        out.extend(metric_inequalities(g, t)?);
    }
    for k in k5_subgraphs(g) {
        out.extend(hypermetric_switchings(g, k)?);
    }
    InequalitySystem::new(g.edge_count(), out)
}

/// Complete description of a maximal K3,3-minor-free graph as the union over
/// its 2-sum components: each component's node set induces the component with
/// its glue edges, K5 components contribute metric and K5 inequalities and
/// the others their edge and cycle inequalities.
fn facets_maximal_by_components(g: &Graph) -> Result<InequalitySystem> {
    let d = k33_decompose(g);
    let m = g.edge_count();
    let mut out = Vec::new();
    for c in &d.components {
        let (sub, _, emap) = g.induced(&c.nodes);
        let local = match c.class {
            ComponentClass::K5 => facets_maximal_k33_free(&sub)?,
            ComponentClass::NonPlanar => {
                return Err(Error::UnsupportedClass {
                    witness: c.nodes.clone(),
                });
            }
            _ => facets_k5_minor_free(&sub)?,
        };
        for q in local.iter() {
            let mut coeffs = vec![0; m];
            for (i, &x) in q.coeffs().iter().enumerate() {
                coeffs[emap[i]] = x;
            }
            out.push(LinearInequality::new(coeffs, q.rhs())?);
        }
    }
    InequalitySystem::new(m, out)
}

/// Eliminates `x_eliminate` from a complete description of a cut polytope.
///
/// Inequalities without the variable are kept; every pair with opposite signs
/// on it is combined. Candidates survive only if they define facets of the
/// hull of `projected_cuts`, the cuts of the graph without that edge.
pub fn fourier_motzkin_project(
    sys: &InequalitySystem,
    eliminate: usize,
    projected_cuts: &[Cut],
) -> Result<InequalitySystem> {
    let m = sys.edge_count();
    if eliminate >= m {
        return Err(Error::InvalidArgument(format!("variable {eliminate} out of range")));
    }
    if projected_cuts.iter().any(|c| c.indicator().len() + 1 != m) {
        return Err(Error::InvalidArgument("projected cuts have the wrong dimension".into()));
    }
    let drop = |c: &[i64]| -> Vec<i64> {
        c.iter()
            .enumerate()
            .filter(|&(i, _)| i != eliminate)
            .map(|(_, &x)| x)
            .collect()
    };
    let mut candidates: BTreeSet<LinearInequality> = BTreeSet::new();
    let (mut pos, mut neg) = (Vec::new(), Vec::new());
    for q in sys {
        match q.coeffs()[eliminate] {
            0 => {
                candidates.insert(LinearInequality::new(drop(q.coeffs()), q.rhs())?);
            }
            c if c > 0 => pos.push(q),
            _ => neg.push(q),
        }
    }
    for p in &pos {
        for n in &neg {
            let (cp, cn) = (p.coeffs()[eliminate], -n.coeffs()[eliminate]);
            let coeffs: Vec<i64> = p
                .coeffs()
                .iter()
                .zip(n.coeffs())
                .map(|(a, b)| cn * a + cp * b)
                .collect();
            let coeffs = drop(&coeffs);
            if coeffs.iter().all(|&c| c == 0) {
                continue;
            }
            candidates.insert(LinearInequality::new(coeffs, cn * p.rhs() + cp * n.rhs())?);
        }
    }
    let points: Vec<Vec<i64>> = projected_cuts.iter().map(|c| c.vector()).collect();
    let mut kept = Vec::new();
    for q in candidates {
        if is_facet_on(&points, &q)? {
            kept.push(q);
        }
    }
    InequalitySystem::new(m - 1, kept)
}

fn block_facets(b: &Graph) -> Result<InequalitySystem> {
    if b.edge_count() == 1 {
        return InequalitySystem::new(1, edge_inequalities(b, 0)?);
    }
    if !has_minor(b, Minor::K5)? {
        return facets_k5_minor_free(b);
    }
    let d = k33_decompose(b);
    if !d.is_k33_minor_free {
        return Err(Error::UnsupportedClass {
            witness: d.witness.unwrap_or_default(),
        });
    }
    if d.is_maximal {
        return facets_maximal_by_components(b);
    }
    let (h, added) = maximal_completion(b)?;
    debug_assert!(added.iter().copied().eq(b.edge_count()..h.edge_count()));
    let mut sys = facets_maximal_by_components(&h)?;
    let mut cur = h;
    for &e in added.iter().rev() {
        let (next, _) = cur.without_edges(&[e]);
        sys = fourier_motzkin_project(&sys, e, &enumerate_cuts(&next)?)?;
        cur = next;
    }
    Ok(sys)
}

/// Complete facet list of the cut polytope of a graph that is K5-minor-free
/// or K3,3-minor-free.
///
/// Blocks are handled separately and their systems combined. Each block uses
/// the edge and cycle inequalities if it has no K5 minor, the metric and K5
/// inequalities if it is maximal K3,3-minor-free, and otherwise projects the
/// description of a maximal completion.
pub fn facet_description(g: &Graph) -> Result<InequalitySystem> {
    let m = g.edge_count();
    let mut out = Vec::new();
    for b in blocks(g).blocks {
        let (bg, _, emap) = g.edge_subgraph(&b.edges);
        for q in block_facets(&bg)?.iter() {
            let mut coeffs = vec![0; m];
            for (i, &c) in q.coeffs().iter().enumerate() {
                coeffs[emap[i]] = c;
            }
            out.push(LinearInequality::new(coeffs, q.rhs())?);
        }
    }
    InequalitySystem::new(m, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{double_k5, octahedron};

    fn hull_of(g: &Graph) -> InequalitySystem {
        brute_hull(&enumerate_cuts(g).unwrap()).unwrap()
    }

    #[test]
    fn small_hulls() {
        assert_eq!(hull_of(&Graph::complete(3)).len(), 4);
        assert_eq!(hull_of(&Graph::cycle(4)).len(), 16);
        let k4 = brute_hull_incidence(&enumerate_cuts(&Graph::complete(4)).unwrap()).unwrap();
        assert_eq!(k4.len(), 16);
        assert!(k4.iter().all(|(_, t)| t.len() == 6));
    }

    #[test]
    fn validity_and_facets() {
        let k3 = Graph::complete(3);
        let le1 = LinearInequality::from_terms(3, &[(0, 1)], 1).unwrap();
        assert!(is_valid(&k3, &le1).unwrap());
        assert!(!is_facet(&k3, &le1).unwrap());
        let k5 = Graph::complete(5);
        let five = LinearInequality::new(vec![1; 10], 5).unwrap();
        assert!(!is_valid(&k5, &five).unwrap());
        assert!(is_facet(&k5, &hypermetric_k5(&k5, [0, 1, 2, 3, 4]).unwrap()).unwrap());
    }

    #[test]
    fn dims() {
        assert_eq!(polytope_dim(&Graph::complete(3)).unwrap(), 3);
        assert_eq!(polytope_dim(&Graph::complete(4)).unwrap(), 6);
        assert_eq!(polytope_dim(&Graph::complete(2)).unwrap(), 1);
    }

    #[test]
    fn descriptions_match_hulls() {
        for g in [
            Graph::complete(3),
            Graph::complete(4),
            Graph::cycle(4),
            Graph::cycle(5),
            Graph::complete(5),
            octahedron(),
            Graph::unit(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]),
            Graph::unit(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]),
        ] {
            assert_eq!(facet_description(&g).unwrap(), hull_of(&g), "{g:?}");
        }
        assert_eq!(facet_description(&Graph::complete(5)).unwrap().len(), 56);
    }

    #[test]
    fn octahedron_separating_cycles() {
        let o = octahedron();
        let hull = hull_of(&o);
        assert_eq!(hull.len(), 56);
        assert_eq!(facets_k5_minor_free(&o).unwrap(), hull);
        assert_eq!(facet_description(&o).unwrap(), hull);
        // triangle and K5 generators alone miss the three chordless 4-cycles
        let metric = facets_maximal_k33_free(&o).unwrap();
        assert_eq!(metric.len(), 32);
        assert!(metric.iter().all(|q| hull.contains(q)));
        let four: Vec<_> = hull.iter().filter(|q| q.support().len() == 4).collect();
        assert_eq!(four.len(), 24);
    }

    #[test]
    fn fm_passthrough() {
        let g = Graph::complete(3);
        let sys = facet_description(&g).unwrap();
        let (h, _) = Graph::unit(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).without_edges(&[]);
        let lifted = InequalitySystem::new(
            4,
            sys.iter().map(|q| {
                let mut c = q.coeffs().to_vec();
                c.push(0);
                LinearInequality::new(c, q.rhs()).unwrap()
            }),
        )
        .unwrap();
        let g3 = h.without_edges(&[3]).0;
        // cuts of K3 plus an isolated node: the same vectors as K3's cuts
        let cuts = enumerate_cuts(&g3).unwrap();
        let p = fourier_motzkin_project(&lifted, 3, &cuts[..4]).unwrap();
        assert_eq!(p, sys);
    }

    #[test]
    fn k33_rejected() {
        assert!(matches!(
            facet_description(&Graph::complete(6)),
            Err(Error::UnsupportedClass { .. })
        ));
        assert!(facet_description(&Graph::complete_bipartite(3, 3)).is_ok());
        assert!(facet_description(&double_k5()).is_ok());
    }
}
