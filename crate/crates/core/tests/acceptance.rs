//! One test per acceptance criterion. Each prints a single `PASS`/`FAIL` line
//! on stderr (written directly, so it shows even when output is captured).

use std::collections::BTreeSet;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

use cutpoly::classify::{brute_classify, classify, is_c4_minor_free};
use cutpoly::generate::{
    double_k5, gen_k33free, octahedron, random_graph, random_planar_2connected, ComponentKind, GeneratorSpec,
};
use cutpoly::graph::{components, enumerate_cuts, has_minor, is_k_connected, Minor};
use cutpoly::maxcut::{maxcut, maxcut_bruteforce, planar_maxcut};
use cutpoly::polytope::*;
use cutpoly::spqr::spr_tree;
use cutpoly::{Cut, Graph};

type Outcome = Result<String, String>;

fn criterion(id: u32, title: &str, body: impl FnOnce() -> Outcome) {
    let start = Instant::now();
    let outcome = match catch_unwind(AssertUnwindSafe(body)) {
        Ok(o) => o,
        Err(p) => Err(p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into())),
    };
    let secs = start.elapsed().as_secs_f64();
    let (tag, detail) = match &outcome {
        Ok(d) => ("PASS", d),
        Err(d) => ("FAIL", d),
    };
    let _ = writeln!(
        std::io::stderr().lock(),
        "criterion {id} {tag}: {title} ({detail}; {secs:.2}s)"
    );
    if let Err(d) = outcome {
        panic!("criterion {id} failed: {d}");
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn hull_of(g: &Graph) -> InequalitySystem {
    brute_hull(&enumerate_cuts(g).unwrap()).unwrap()
}

fn generator_spec(seed: u64) -> GeneratorSpec {
    let mix = [
        vec![
            ComponentKind::K5,
            ComponentKind::Triangulation {
                min_nodes: 3,
                max_nodes: 6,
            },
        ],
        vec![
            ComponentKind::Triangulation {
                min_nodes: 4,
                max_nodes: 6,
            },
            ComponentKind::K5,
            ComponentKind::Triangulation {
                min_nodes: 3,
                max_nodes: 5,
            },
        ],
        vec![ComponentKind::K5, ComponentKind::K5],
        vec![ComponentKind::Triangulation {
            min_nodes: 5,
            max_nodes: 12,
        }],
        vec![
            ComponentKind::K5,
            ComponentKind::K5,
            ComponentKind::K5,
            ComponentKind::K5,
        ],
    ];
    GeneratorSpec {
        seed,
        components: mix[seed as usize % mix.len()].clone(),
        strict: !seed.is_multiple_of(3),
        deletion_probability: [0.0, 0.15, 0.35][seed as usize % 3],
        weight_range: (-10, 10),
    }
}

#[test]
fn criterion_1_maxcut_oracle_equivalence() {
    criterion(1, "MaxCut equals brute force on 200 K3,3-minor-free instances", || {
        let start = Instant::now();
        let mut max_nodes = 0;
        for seed in 1..=200 {
            let g = gen_k33free(&generator_spec(seed)).map_err(|e| format!("seed {seed}: {e}"))?;
            ensure(g.node_count() <= 16, || {
                format!("seed {seed}: {} nodes", g.node_count())
            })?;
            max_nodes = max_nodes.max(g.node_count());
            let r = maxcut(&g).map_err(|e| format!("seed {seed}: {e}"))?;
            let b = maxcut_bruteforce(&g).unwrap();
            ensure(r.value == b.value, || {
                format!("seed {seed}: {} vs brute {}", r.value, b.value)
            })?;
            ensure(r.cut.weight(&g) == r.value, || format!("seed {seed}: witness weight"))?;
        }
        let t = start.elapsed();
        ensure(t < Duration::from_secs(60), || format!("took {t:?}"))?;
        Ok(format!("200 instances up to {max_nodes} nodes"))
    });
}

/// Best cut weight with each edge forced inside and outside, by enumeration.
fn forced_table(g: &Graph) -> (Vec<i64>, Vec<i64>) {
    let n = g.node_count();
    let m = g.edge_count();
    let (mut inside, mut outside) = (vec![i64::MIN; m], vec![i64::MIN; m]);
    for mask in 0u32..1 << (n - 1) {
        let cut: Vec<bool> = g
            .edges()
            .iter()
            .map(|e| (mask >> e.u & 1) != (mask >> e.v & 1))
            .collect();
        let w: i64 = g.edges().iter().zip(&cut).filter(|(_, &c)| c).map(|(e, _)| e.w).sum();
        for e in 0..m {
            let slot = if cut[e] { &mut inside[e] } else { &mut outside[e] };
            *slot = (*slot).max(w);
        }
    }
    (inside, outside)
}

#[test]
fn criterion_2_planar_solver_equivalence() {
    criterion(
        2,
        "planar MaxCut equals brute force on 100 planar 2-connected graphs, with forced edges",
        || {
            let mut forced_checks = 0;
            for seed in 1..=100u64 {
                let n = 3 + (seed % 12) as usize;
                let g = random_planar_2connected(seed, n, 0.4, (-10, 10));
                ensure(g.node_count() <= 14 && is_k_connected(&g, 2), || {
                    format!("seed {seed}: bad instance")
                })?;
                let free = planar_maxcut(&g, None).unwrap();
                let brute = maxcut_bruteforce(&g).unwrap();
                ensure(free.value == brute.value, || {
                    format!("seed {seed}: {} vs {}", free.value, brute.value)
                })?;
                ensure(free.cut.weight(&g) == free.value, || format!("seed {seed}: witness"))?;
                let (inside, outside) = forced_table(&g);
                for e in 0..g.edge_count() {
                    let a = planar_maxcut(&g, Some((e, true))).unwrap();
                    let b = planar_maxcut(&g, Some((e, false))).unwrap();
                    ensure(a.value == inside[e] && b.value == outside[e], || {
                        format!("seed {seed} edge {e}")
                    })?;
                    ensure(a.cut.contains_edge(e) && !b.cut.contains_edge(e), || {
                        format!("seed {seed} edge {e}")
                    })?;
                    ensure(a.value.max(b.value) == free.value, || {
                        format!("seed {seed} edge {e}: max")
                    })?;
                    forced_checks += 2;
                }
            }
            Ok(format!("100 graphs, {forced_checks} forced solves"))
        },
    );
}

#[test]
fn criterion_3_k5_completeness() {
    criterion(
        3,
        "facet description of K5 is 40 metric + 16 switchings and equals the hull",
        || {
            let start = Instant::now();
            let k5 = Graph::complete(5);
            let d = facet_description(&k5).unwrap();
            let hull = hull_of(&k5);
            let metric = d.iter().filter(|q| q.support().len() == 3).count();
            let hyper = d.iter().filter(|q| q.support().len() == 10).count();
            ensure(d.len() == 56 && metric == 40 && hyper == 16, || {
                format!("{} = {metric} + {hyper}", d.len())
            })?;
            ensure(d == hull, || format!("hull has {} facets", hull.len()))?;
            let t = start.elapsed();
            ensure(t < Duration::from_secs(30), || format!("took {t:?}"))?;
            Ok("56 facets, hull over 16 cuts in dimension 10".into())
        },
    );
}

#[test]
fn criterion_4_projection_example() {
    criterion(
        4,
        "two K5 glued along a deleted edge: four pair-sum classes, the rhs-8 facet, MaxCut 12",
        || {
            let (u1, u2, v1, w1) = (3, 4, 0, 5);
            let g = double_k5();
            let mut h = g.clone();
            let x = h.add_edge(u1, u2, 1).unwrap();
            let sys = facets_maximal_k33_free(&h).unwrap();
            let e = |a: usize, b: usize| h.edge_between(a, b).unwrap();
            let one = LinearInequality::from_terms(19, &[(e(u1, u2), 1), (e(u2, v1), 1), (e(u1, v1), 1)], 2).unwrap();
            let two = hypermetric_k5(&h, [0, 1, 2, u1, u2]).unwrap();
            let three =
                LinearInequality::from_terms(19, &[(e(u1, u2), -1), (e(u2, w1), -1), (e(u1, w1), 1)], 0).unwrap();
            let w_nodes = [u1, u2, 5, 6, 7];
            let mut terms = Vec::new();
            for (i, &a) in w_nodes.iter().enumerate() {
                for &b in &w_nodes[i + 1..] {
                    terms.push((e(a, b), if a == u2 || b == u2 { -1 } else { 1 }));
                }
            }
            let four = LinearInequality::from_terms(19, &terms, 2).unwrap();
            for (i, q) in [&one, &two, &three, &four].iter().enumerate() {
                ensure(sys.contains(q), || format!("representative ({}) missing", i + 1))?;
            }
            let projected = fourier_motzkin_project(&sys, x, &enumerate_cuts(&g).unwrap()).unwrap();
            let add = |a: &LinearInequality, b: &LinearInequality| {
                let c: Vec<i64> = a.coeffs().iter().zip(b.coeffs()).map(|(p, q)| p + q).take(18).collect();
                LinearInequality::new(c, a.rhs() + b.rhs()).unwrap()
            };
            let sums = [
                ("1+3", add(&one, &three), 2),
                ("1+4", add(&one, &four), 4),
                ("2+3", add(&two, &three), 6),
                ("2+4", add(&two, &four), 8),
            ];
            for (name, q, rhs) in &sums {
                ensure(q.rhs() == *rhs, || format!("({name}) rhs {}", q.rhs()))?;
                ensure(projected.contains(q), || format!("({name}) not produced"))?;
            }
            let top = &sums[3].1;
            ensure(is_facet(&g, top).unwrap(), || "(2+4) is not a facet".into())?;
            ensure(top.support().len() == g.edge_count(), || "(2+4) support".into())?;
            let value = maxcut(&g).unwrap().value;
            ensure(value == 12 && maxcut_bruteforce(&g).unwrap().value == 12, || {
                format!("maxcut {value}")
            })?;
            Ok(format!("{} projected facets", projected.len()))
        },
    );
}

#[test]
fn criterion_5_edge_cycle_completeness() {
    criterion(
        5,
        "edge and cycle inequalities equal the hull on 20 random K5-minor-free graphs",
        || {
            let mut tested = 0;
            let mut seed = 0;
            while tested < 20 {
                seed += 1;
                let g = random_graph(seed, 4 + (seed % 4) as usize, 0.55, (1, 1));
                if g.edge_count() == 0 || g.edge_count() > 12 || has_minor(&g, Minor::K5).unwrap() {
                    continue;
                }
                let d = facets_k5_minor_free(&g).unwrap();
                let hull = hull_of(&g);
                ensure(d == hull, || format!("seed {seed}: {} vs hull {}", d.len(), hull.len()))?;
                tested += 1;
            }
            Ok("20 graphs".into())
        },
    );
}

fn table() -> Vec<(Graph, bool)> {
    vec![
        (Graph::unit(2, &[(0, 1)]), true),
        (Graph::unit(3, &[(0, 1), (0, 2)]), true),
        (Graph::unit(3, &[(0, 1), (0, 2), (1, 2)]), true),
        (Graph::unit(4, &[(0, 1), (1, 2), (0, 3)]), false),
        (Graph::unit(4, &[(0, 1), (0, 2), (0, 3)]), false),
        (Graph::unit(4, &[(0, 1), (2, 3)]), true),
        (Graph::unit(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]), true),
        (Graph::unit(4, &[(0, 1), (0, 3), (1, 3), (1, 2)]), false),
        (Graph::unit(4, &[(0, 1), (0, 3), (1, 3), (2, 3), (1, 2)]), false),
        (Graph::complete(4), true),
    ]
}

#[test]
fn criterion_6_simplicial_table() {
    criterion(
        6,
        "simplicial verdicts for the ten small graphs and hull facet counts",
        || {
            for (i, (g, want)) in table().into_iter().enumerate() {
                let got = classify(&g).simplicial;
                let (_, brute) = brute_classify(&g).unwrap();
                ensure(got == want && brute == want, || {
                    format!("graph {}: classify {got}, hull {brute}", i + 1)
                })?;
            }
            let inc = |g: &Graph| brute_hull_incidence(&enumerate_cuts(g).unwrap()).unwrap();
            ensure(inc(&Graph::complete(3)).len() == 4, || "K3".into())?;
            ensure(inc(&Graph::cycle(4)).len() == 16, || "C4".into())?;
            let k4 = inc(&Graph::complete(4));
            ensure(k4.len() == 16 && k4.iter().all(|(_, t)| t.len() == 6), || "K4".into())?;
            Ok("10 graphs; K3 4, C4 16, K4 16 x 6 vertices".into())
        },
    );
}

fn canonical(g: &Graph) -> Vec<(usize, usize)> {
    fn rec(p: &mut Vec<usize>, k: usize, g: &Graph, best: &mut Option<Vec<(usize, usize)>>) {
        if k == p.len() {
            let mut e: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .map(|x| (p[x.u].min(p[x.v]), p[x.u].max(p[x.v])))
                .collect();
            e.sort_unstable();
            if best.as_ref().is_none_or(|b| e < *b) {
                *best = Some(e);
            }
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(p, k + 1, g, best);
            p.swap(k, i);
        }
    }
    let mut best = None;
    rec(&mut (0..g.node_count()).collect(), 0, g, &mut best);
    best.unwrap()
}

fn connected_graphs_up_to(n_max: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut seen = BTreeSet::new();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = (0..pairs.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            let g = Graph::unit(n, &edges);
            if components(&g).len() == 1 && seen.insert(canonical(&g)) {
                out.push(g);
            }
        }
    }
    out
}

#[test]
fn criterion_7_simple_iff_c4_minor_free() {
    criterion(
        7,
        "simple cut polytope iff C4-minor-free, all connected graphs on at most 5 nodes",
        || {
            let graphs = connected_graphs_up_to(5);
            ensure(graphs.len() == 1 + 2 + 6 + 21, || {
                format!("{} isomorphism classes", graphs.len())
            })?;
            for g in &graphs {
                let r = classify(g).simple;
                let (b, _) = brute_classify(g).unwrap();
                let c = is_c4_minor_free(g);
                ensure(r == b && b == c, || {
                    format!("{g:?}: classify {r}, hull {b}, C4-free {c}")
                })?;
            }
            Ok(format!("{} graphs", graphs.len()))
        },
    );
}

fn all_cycles(g: &Graph) -> Vec<Vec<usize>> {
    fn dfs(g: &Graph, s: usize, v: usize, seen: &mut [bool], path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for &(w, e) in g.neighbors(v) {
            if w == s && path.len() >= 2 && path[0] < e {
                let mut c = path.clone();
                c.push(e);
                out.push(c);
            } else if w > s && !seen[w] {
                seen[w] = true;
                path.push(e);
                dfs(g, s, w, seen, path, out);
                path.pop();
                seen[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..g.node_count() {
        let mut seen = vec![false; g.node_count()];
        seen[s] = true;
        dfs(g, s, s, &mut seen, &mut Vec::new(), &mut out);
    }
    out
}

#[test]
fn criterion_8_property_suites() {
    criterion(
        8,
        "switching, cut-cycle parity, dimension, SPR round trip and unit coefficients",
        || {
            let mut rng = Xoshiro256PlusPlus::seed_from_u64(8);

            let pool = [
                Graph::complete(4),
                Graph::complete(5),
                Graph::cycle(5),
                octahedron(),
                double_k5(),
            ];
            let systems: Vec<InequalitySystem> = pool.iter().map(|g| facet_description(g).unwrap()).collect();
            for i in 0..1000 {
                let k = rng.gen_range(0..pool.len());
                let g = &pool[k];
                let q = if rng.gen_bool(0.5) {
                    systems[k].inequalities()[rng.gen_range(0..systems[k].len())].clone()
                } else {
                    let mut c: Vec<i64> = (0..g.edge_count()).map(|_| rng.gen_range(-2..=2)).collect();
                    c[0] = 1;
                    LinearInequality::new(c, rng.gen_range(-2..=6)).unwrap()
                };
                let side: Vec<bool> = (0..g.node_count()).map(|_| rng.gen_bool(0.5)).collect();
                let w = Cut::from_side(g, side);
                let s = switch(&q, &w);
                ensure(switch(&s, &w) == q, || format!("pair {i}: not an involution"))?;
                ensure(is_facet(g, &s).unwrap() == is_facet(g, &q).unwrap(), || {
                    format!("pair {i}: facet-hood")
                })?;
            }

            for seed in 0..50 {
                let g = random_graph(seed, 3 + (seed % 6) as usize, 0.5, (1, 1));
                let cycles = all_cycles(&g);
                for cut in enumerate_cuts(&g).unwrap() {
                    for c in &cycles {
                        let k = c.iter().filter(|&&e| cut.contains_edge(e)).count();
                        ensure(k % 2 == 0, || format!("seed {seed}: odd intersection"))?;
                    }
                }
            }

            let mut dims = 0;
            let mut test_graphs: Vec<Graph> = pool.to_vec();
            test_graphs.extend(table().into_iter().map(|(g, _)| g));
            test_graphs.extend((0..20).map(|s| random_graph(s, 6, 0.5, (1, 1))));
            for g in &test_graphs {
                ensure(polytope_dim(g).unwrap() == g.edge_count(), || {
                    format!("{g:?}: dimension")
                })?;
                dims += 1;
            }

            let mut round_trips = 0;
            let mut seed = 0;
            while round_trips < 100 {
                seed += 1;
                let g = if seed % 2 == 0 {
                    random_planar_2connected(seed, 3 + (seed % 10) as usize, 0.3, (-5, 5))
                } else {
                    random_graph(seed, 4 + (seed % 8) as usize, 0.5, (-5, 5))
                };
                if !is_k_connected(&g, 2) {
                    continue;
                }
                let t = spr_tree(&g).unwrap();
                ensure(t.recompose(g.node_count(), &g.weights()).unwrap() == g, || {
                    format!("seed {seed}: round trip")
                })?;
                round_trips += 1;
            }

            let mut checked = 0;
            let mut instances: Vec<Graph> = vec![Graph::complete(5), octahedron(), double_k5()];
            for seed in 0..16 {
                let mut spec = generator_spec(seed);
                spec.components.truncate(2);
                if let ComponentKind::Triangulation { min_nodes, .. } = spec.components[0] {
                    spec.components[0] = ComponentKind::Triangulation {
                        min_nodes,
                        max_nodes: 7,
                    };
                }
                instances.push(gen_k33free(&spec).unwrap());
            }
            for g in &instances {
                for q in &facet_description(g).unwrap() {
                    ensure(has_unit_coefficients(q), || format!("{g:?}: {q:?}"))?;
                    ensure(support_shape_ok(g, q), || format!("{g:?}: support of {q:?}"))?;
                    checked += 1;
                }
            }
            Ok(format!(
                "1000 switchings, 50 cut-cycle graphs, {dims} dimensions, 100 round trips, {checked} facets"
            ))
        },
    );
}
