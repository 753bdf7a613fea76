use super::LinearInequality;
use crate::error::{Error, Result};
use crate::graph::{triangles, Cut, Graph};

fn not_a(what: &str) -> Error {
    Error::InvalidArgument(format!("not a {what}"))
}

/// The four metric inequalities of a triangle given by its three edge
/// indices: the sum form `x_e + x_f + x_g <= 2` and the three forms
/// `x_e - x_f - x_g <= 0` rooted at each edge.
pub fn metric_inequalities(g: &Graph, tri: [usize; 3]) -> Result<Vec<LinearInequality>> {
    let m = g.edge_count();
    if tri.iter().any(|&e| e >= m) || tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2] {
        return Err(not_a("triangle"));
    }
    let mut nodes: Vec<usize> = tri.iter().flat_map(|&e| [g.edge(e).u, g.edge(e).v]).collect();
    nodes.sort_unstable();
    nodes.dedup();
    if nodes.len() != 3 {
        return Err(not_a("triangle"));
    }
    let mut out = vec![LinearInequality::from_terms(m, &tri.map(|e| (e, 1)), 2)?];
    for root in 0..3 {
        let terms = tri.map(|e| (e, if e == tri[root] { 1 } else { -1 }));
        out.push(LinearInequality::from_terms(m, &terms, 0)?);
    }
    Ok(out)
}

/// Edge indices of every triangle of `g`.
pub fn triangle_edges(g: &Graph) -> Vec<[usize; 3]> {
    triangles(g)
        .into_iter()
        .map(|[a, b, c]| {
            let e = |x, y| g.edge_between(x, y).unwrap();
            [e(a, b), e(a, c), e(b, c)]
        })
        .collect()
}

/// `-x_e <= 0` and `x_e <= 1` if `e` lies in no triangle, otherwise nothing.
pub fn edge_inequalities(g: &Graph, e: usize) -> Result<Vec<LinearInequality>> {
    let m = g.edge_count();
    if e >= m {
        return Err(Error::InvalidArgument(format!("edge {e} out of range")));
    }
    let ed = g.edge(e);
    let in_triangle = g.neighbors(ed.u).iter().any(|&(x, _)| g.has_edge(x, ed.v));
    if in_triangle {
        return Ok(Vec::new());
    }
    Ok(vec![
        LinearInequality::from_terms(m, &[(e, -1)], 0)?,
        LinearInequality::from_terms(m, &[(e, 1)], 1)?,
    ])
}

/// Edge indices of a cycle given as a node sequence.
pub fn cycle_edges(g: &Graph, cycle: &[usize]) -> Result<Vec<usize>> {
    let k = cycle.len();
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if k < 3 || sorted.len() != k || sorted.last().is_some_and(|&v| v >= g.node_count()) {
        return Err(not_a("cycle"));
    }
    (0..k)
        .map(|i| {
            g.edge_between(cycle[i], cycle[(i + 1) % k])
                .ok_or_else(|| not_a("cycle"))
        })
        .collect()
}

/// `sum_{f in F} x_f - sum_{e in C \ F} x_e <= |F| - 1` for `F` an odd subset
/// of the cycle's edges.
pub fn cycle_inequality(g: &Graph, cycle: &[usize], f: &[usize]) -> Result<LinearInequality> {
    let ce = cycle_edges(g, cycle)?;
    let mut fs = f.to_vec();
    fs.sort_unstable();
    fs.dedup();
    if fs.len() != f.len() || fs.iter().any(|e| !ce.contains(e)) {
        return Err(Error::InvalidArgument("F is not a subset of the cycle's edges".into()));
    }
    if fs.len().is_multiple_of(2) {
        return Err(Error::InvalidArgument("F has even size".into()));
    }
    let terms: Vec<(usize, i64)> = ce.iter().map(|&e| (e, if fs.contains(&e) { 1 } else { -1 })).collect();
    LinearInequality::from_terms(g.edge_count(), &terms, fs.len() as i64 - 1)
}

/// All `2^(k-1)` cycle inequalities of a cycle of length `k`.
pub fn cycle_inequalities(g: &Graph, cycle: &[usize]) -> Result<Vec<LinearInequality>> {
    let ce = cycle_edges(g, cycle)?;
    let k = ce.len();
    (0u64..1 << k)
        .filter(|m| m.count_ones() % 2 == 1)
        .map(|mask| {
            let f: Vec<usize> = (0..k).filter(|&i| mask >> i & 1 == 1).map(|i| ce[i]).collect();
            cycle_inequality(g, cycle, &f)
        })
        .collect()
}

/// `sum_{e in K5} x_e <= 6` for five nodes inducing a complete graph.
pub fn hypermetric_k5(g: &Graph, nodes: [usize; 5]) -> Result<LinearInequality> {
    let mut terms = Vec::with_capacity(10);
    for i in 0..5 {
        for j in i + 1..5 {
            let e = g.edge_between(nodes[i], nodes[j]).ok_or_else(|| not_a("K5"))?;
            terms.push((e, 1));
        }
    }
    let mut s = nodes.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.len() != 5 {
        return Err(not_a("K5"));
    }
    LinearInequality::from_terms(g.edge_count(), &terms, 6)
}

/// Switching at the cut `w`: `a'_e = -a_e` on `w`'s edges and
/// `b' = b - sum_{e in w} a_e`.
pub fn switch(q: &LinearInequality, w: &Cut) -> LinearInequality {
    let mut coeffs = q.coeffs().to_vec();
    let mut rhs = q.rhs();
    for (e, c) in coeffs.iter_mut().enumerate() {
        if w.contains_edge(e) {
            rhs -= *c;
            *c = -*c;
        }
    }
    LinearInequality::new(coeffs, rhs).expect("switching keeps nonzero coefficients")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn metric_and_switching() {
        let k3 = Graph::complete(3);
        let m = metric_inequalities(&k3, [0, 1, 2]).unwrap();
        assert_eq!(m.len(), 4);
        // node 0 is incident to edges 0 (0-1) and 1 (0-2)
        let w = Cut::from_nodes(&k3, &[0]);
        let s = switch(&m[0], &w);
        assert_eq!(s, LinearInequality::new(vec![-1, -1, 1], 0).unwrap());
        assert_eq!(switch(&m[0], &Cut::from_nodes(&k3, &[])), m[0]);
        assert!(metric_inequalities(&k3, [0, 0, 1]).is_err());
        assert!(metric_inequalities(&Graph::cycle(4), [0, 1, 2]).is_err());
    }

    #[test]
    fn edge_and_cycle() {
        let c4 = Graph::cycle(4);
        assert_eq!(edge_inequalities(&c4, 0).unwrap().len(), 2);
        assert!(edge_inequalities(&Graph::complete(3), 0).unwrap().is_empty());
        let q = cycle_inequality(&c4, &[0, 1, 2, 3], &[c4.edge_between(0, 1).unwrap()]).unwrap();
        assert_eq!(q.rhs(), 0);
        assert_eq!(q.coeffs().iter().filter(|&&c| c == -1).count(), 3);
        assert_eq!(cycle_inequalities(&c4, &[0, 1, 2, 3]).unwrap().len(), 8);
        assert!(cycle_inequality(&c4, &[0, 1, 2, 3], &[0, 1]).is_err());
    }

    #[test]
    fn hypermetric() {
        let q = hypermetric_k5(&Graph::complete(5), [0, 1, 2, 3, 4]).unwrap();
        assert_eq!(q.rhs(), 6);
        assert_eq!(q.support().len(), 10);
        assert!(hypermetric_k5(&crate::generate::double_k5(), [0, 1, 2, 3, 4]).is_err());
        let k6 = Graph::complete(6);
        assert!(hypermetric_k5(&k6, [1, 2, 3, 4, 5]).is_ok());
    }
}
