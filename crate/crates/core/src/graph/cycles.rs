use super::Graph;
use crate::error::{Error, Result};

pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;

/// All triangles as sorted node triples, in lexicographic order.
pub fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for e in g.edges() {
        for &(w, _) in g.neighbors(e.u) {
            if w > e.v && g.has_edge(e.v, w) {
                out.push([e.u, e.v, w]);
            }
        }
    }
    out.sort_unstable();
    out
}

/// All node sets of size 5 that induce a complete graph, sorted.
pub fn k5_subgraphs(g: &Graph) -> Vec<[usize; 5]> {
    let n = g.node_count();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(5);
    fn extend(g: &Graph, n: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<[usize; 5]>) {
        if cur.len() == 5 {
            out.push([cur[0], cur[1], cur[2], cur[3], cur[4]]);
            return;
        }
        for v in start..n {
            if g.degree(v) >= 4 && cur.iter().all(|&u| g.has_edge(u, v)) {
                cur.push(v);
                extend(g, n, v + 1, cur, out);
                cur.pop();
            }
        }
    }
    extend(g, n, 0, &mut cur, &mut out);
    out
}

pub fn chordless_cycles(g: &Graph) -> Result<Vec<Vec<usize>>> {
    chordless_cycles_capped(g, DEFAULT_CYCLE_CAP)
}

/// Every induced cycle of length at least 3, exactly once.
///
/// A cycle is reported starting at its smallest node `s`, with the second node
/// smaller than the last. Paths are grown from `s` through larger nodes only,
/// and a candidate extension must not be adjacent to any interior path node,
/// so every extension stays an induced path; touching `s` closes the cycle.
pub fn chordless_cycles_capped(g: &Graph, cap: usize) -> Result<Vec<Vec<usize>>> {
    let n = g.node_count();
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    // blocked[v] counts interior path nodes adjacent to v.
    let mut blocked = vec![0u32; n];

    struct Ctx<'a> {
        g: &'a Graph,
        s: usize,
        cap: usize,
        path: Vec<usize>,
        on_path: &'a mut [bool],
        blocked: &'a mut [u32],
        out: &'a mut Vec<Vec<usize>>,
    }

    fn grow(c: &mut Ctx<'_>) -> Result<()> {
        let last = *c.path.last().unwrap();
        let neighbors: Vec<usize> = c.g.neighbors(last).iter().map(|&(w, _)| w).collect();
        for v in neighbors {
            if v <= c.s || c.on_path[v] || c.blocked[v] > 0 {
                continue;
            }
            if c.g.has_edge(v, c.s) {
                if c.path.len() >= 2 && c.path[1] < v {
                    if c.out.len() >= c.cap {
                        return Err(Error::TooLarge {
                            what: "chordless cycle enumeration",
                            limit: c.cap,
                            got: c.out.len() + 1,
                        });
                    }
                    let mut cyc = c.path.clone();
                    cyc.push(v);
                    c.out.push(cyc);
                }
                continue;
            }
            // `last` becomes interior once v is appended (unless last is s).
            let interior = c.path.len() >= 2;
            if interior {
                for &(w, _) in c.g.neighbors(last) {
                    c.blocked[w] += 1;
                }
            }
            c.path.push(v);
            c.on_path[v] = true;
            grow(c)?;
            c.on_path[v] = false;
            c.path.pop();
            if interior {
                for &(w, _) in c.g.neighbors(last) {
                    c.blocked[w] -= 1;
                }
            }
        }
        Ok(())
    }

    for s in 0..n {
        for &(p1, _) in g.neighbors(s) {
            if p1 <= s {
                continue;
            }
            on_path[s] = true;
            on_path[p1] = true;
            let mut ctx = Ctx {
                g,
                s,
                cap,
                path: vec![s, p1],
                on_path: &mut on_path,
                blocked: &mut blocked,
                out: &mut out,
            };
            grow(&mut ctx)?;
            on_path[s] = false;
            on_path[p1] = false;
        }
    }
    out.sort();
    Ok(out)
}
