//! End-to-end cross-checks of the solvers against their brute-force oracles.

use std::fmt;

use crate::classify::{brute_classify, classify};
use crate::error::{Error, Result};
use crate::graph::{enumerate_cuts, Graph, MAX_ENUM_NODES};
use crate::maxcut::{maxcut, maxcut_bruteforce};
use crate::polytope::{brute_hull, facet_description, InequalitySystem, MAX_HULL_EDGES, MAX_HULL_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass(String),
    Fail(String),
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| !matches!(c.status, Status::Fail(_)))
    }

    fn push(&mut self, name: &'static str, status: Status) {
        self.checks.push(Check { name, status });
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let (tag, msg) = match &c.status {
                Status::Pass(m) => ("pass", m),
                Status::Fail(m) => ("FAIL", m),
                Status::Skipped(m) => ("skip", m),
            };
            writeln!(f, "{tag} {}: {msg}", c.name)?;
        }
        write!(f, "result {}", if self.passed() { "ok" } else { "mismatch" })
    }
}

fn skip_or_err(e: Error) -> Result<Status> {
    match e {
        Error::TooLarge { .. } | Error::HasK33Minor { .. } | Error::UnsupportedClass { .. } => {
            Ok(Status::Skipped(e.to_string()))
        }
        other => Err(other),
    }
}

fn check_maxcut(g: &Graph) -> Result<Status> {
    if g.node_count() > MAX_ENUM_NODES {
        return Ok(Status::Skipped(format!("more than {MAX_ENUM_NODES} nodes")));
    }
    let fast = match maxcut(g) {
        Ok(r) => r,
        Err(e) => return skip_or_err(e),
    };
    let brute = maxcut_bruteforce(g)?;
    let w = fast.cut.weight(g);
    Ok(if fast.value != brute.value {
        Status::Fail(format!("value {} but brute force {}", fast.value, brute.value))
    } else if w != fast.value {
        Status::Fail(format!("witness weight {w} differs from value {}", fast.value))
    } else {
        Status::Pass(format!("value {}", fast.value))
    })
}

fn hull_fits(g: &Graph) -> bool {
    g.edge_count() >= 1
        && g.edge_count() <= MAX_HULL_EDGES
        && g.node_count() <= MAX_ENUM_NODES
        && enumerate_cuts(g).is_ok_and(|c| c.len() <= MAX_HULL_VERTICES)
}

fn compare_systems(got: &InequalitySystem, want: &InequalitySystem, what: &str) -> Status {
    if got == want {
        return Status::Pass(format!("{} facets", want.len()));
    }
    let missing = want.iter().filter(|q| !got.contains(q)).count();
    let extra = got.iter().filter(|q| !want.contains(q)).count();
    Status::Fail(format!("{what}: {missing} facet(s) missing, {extra} unexpected"))
}

/// Runs maxcut against brute force, the facet description against the hull
/// and the classification against hull incidences. With `facets`, that
/// system is also compared with the computed description.
pub fn verify(g: &Graph, facets: Option<&InequalitySystem>) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    report.push("maxcut", check_maxcut(g)?);

    let description = match facet_description(g) {
        Ok(d) => Some(d),
        Err(e) => {
            report.push("facets", skip_or_err(e)?);
            None
        }
    };
    let hull = if hull_fits(g) {
        Some(brute_hull(&enumerate_cuts(g)?)?)
    } else {
        None
    };
    if let Some(d) = &description {
        let status = match &hull {
            Some(h) => compare_systems(d, h, "description vs hull"),
            None => Status::Skipped("too large for the hull oracle".into()),
        };
        report.push("facets", status);
    }

    let status = if hull.is_some() {
        let r = classify(g);
        let (simple, simplicial) = brute_classify(&g.without_isolated().0)?;
        if (r.simple, r.simplicial) == (simple, simplicial) {
            Status::Pass(format!("simple {simple}, simplicial {simplicial}"))
        } else {
            Status::Fail(format!(
                "classify says ({}, {}) but the hull says ({simple}, {simplicial})",
                r.simple, r.simplicial
            ))
        }
    } else {
        Status::Skipped("too large for the hull oracle".into())
    };
    report.push("classify", status);

    if let Some(given) = facets {
        let status = if given.edge_count() != g.edge_count() {
            Status::Fail(format!(
                "facet file has dimension {} for {} edges",
                given.edge_count(),
                g.edge_count()
            ))
        } else if let Some(want) = description.as_ref().or(hull.as_ref()) {
            compare_systems(given, want, "facet file")
        } else {
            Status::Skipped("no reference description available".into())
        };
        report.push("facet-file", status);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::LinearInequality;

    #[test]
    fn k5_and_c4_pass() {
        let r = verify(&Graph::complete(5), None).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.checks.iter().all(|c| matches!(c.status, Status::Pass(_))));
        let c4 = Graph::cycle(4);
        let sys = facet_description(&c4).unwrap();
        assert_eq!(sys.len(), 16);
        assert!(verify(&c4, Some(&sys)).unwrap().passed());
    }

    #[test]
    fn corrupted_facets_fail() {
        let c4 = Graph::cycle(4);
        let sys = facet_description(&c4).unwrap();
        let mut qs: Vec<LinearInequality> = sys.iter().cloned().collect();
        qs[0] = LinearInequality::new(vec![1, 1, 1, 1], 4).unwrap();
        let bad = InequalitySystem::new(4, qs).unwrap();
        assert!(!verify(&c4, Some(&bad)).unwrap().passed());
    }
}
