use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// `coeffs · x <= rhs` over edge indices, divided by the gcd of all entries.
/// The sign pattern is kept as given.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearInequality {
    coeffs: Vec<i64>,
    rhs: i64,
}

impl LinearInequality {
    pub fn new(mut coeffs: Vec<i64>, mut rhs: i64) -> Result<Self> {
        if coeffs.iter().all(|&c| c == 0) {
            return Err(Error::InvalidArgument("inequality with all coefficients zero".into()));
        }
        let g = coeffs
            .iter()
            .fold(rhs.unsigned_abs(), |acc, &c| acc.gcd(&c.unsigned_abs())) as i64;
        if g > 1 {
            coeffs.iter_mut().for_each(|c| *c /= g);
            rhs /= g;
        }
        Ok(LinearInequality { coeffs, rhs })
    }

    /// Builds an inequality from sparse `(edge, coefficient)` terms.
    pub fn from_terms(edge_count: usize, terms: &[(usize, i64)], rhs: i64) -> Result<Self> {
        let mut coeffs = vec![0; edge_count];
        for &(e, c) in terms {
            coeffs[e] += c;
        }
        Self::new(coeffs, rhs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn rhs(&self) -> i64 {
        self.rhs
    }

    pub fn edge_count(&self) -> usize {
        self.coeffs.len()
    }

    /// Edge indices with a nonzero coefficient.
    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&e| self.coeffs[e] != 0).collect()
    }

    pub fn terms(&self) -> Vec<(usize, i64)> {
        self.support().into_iter().map(|e| (e, self.coeffs[e])).collect()
    }

    pub fn lhs(&self, x: &[i64]) -> i64 {
        self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum()
    }

    /// One line: coefficients in edge order, then `<= rhs`.
    pub fn to_line(&self) -> String {
        let mut s: String = self.coeffs.iter().map(|c| format!("{c} ")).collect();
        s.push_str(&format!("<= {}", self.rhs));
        s
    }

    pub fn parse_line(line: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("malformed inequality line {line:?}"));
        let (lhs, rhs) = line.split_once("<=").ok_or_else(bad)?;
        let coeffs = lhs
            .split_whitespace()
            .map(|t| t.parse::<i64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        let rhs = rhs.trim().parse::<i64>().map_err(|_| bad())?;
        Self::new(coeffs, rhs)
    }
}

impl fmt::Debug for LinearInequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            if !first {
                write!(f, " ")?;
            }
            if mag == 1 {
                write!(f, "{sign}x{e}")?;
            } else {
                write!(f, "{sign}{mag}x{e}")?;
            }
            first = false;
        }
        write!(f, " <= {}", self.rhs)
    }
}

/// A deduplicated, sorted list of inequalities over `edge_count` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InequalitySystem {
    edge_count: usize,
    inequalities: Vec<LinearInequality>,
}

impl InequalitySystem {
    pub fn new<I: IntoIterator<Item = LinearInequality>>(edge_count: usize, items: I) -> Result<Self> {
        let set: BTreeSet<LinearInequality> = items.into_iter().collect();
        if let Some(q) = set.iter().find(|q| q.edge_count() != edge_count) {
            return Err(Error::InvalidArgument(format!(
                "inequality over {} variables in a system over {edge_count}",
                q.edge_count()
            )));
        }
        Ok(InequalitySystem {
            edge_count,
            inequalities: set.into_iter().collect(),
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn len(&self) -> usize {
        self.inequalities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inequalities.is_empty()
    }

    pub fn inequalities(&self) -> &[LinearInequality] {
        &self.inequalities
    }

    pub fn iter(&self) -> std::slice::Iter<'_, LinearInequality> {
        self.inequalities.iter()
    }

    pub fn contains(&self, q: &LinearInequality) -> bool {
        self.inequalities.binary_search(q).is_ok()
    }

    /// `dim <m> count <k>` followed by one line per inequality.
    pub fn to_text(&self) -> String {
        let mut s = format!("dim {} count {}\n", self.edge_count, self.inequalities.len());
        for q in &self.inequalities {
            s.push_str(&q.to_line());
            s.push('\n');
        }
        s
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidArgument("empty facet file".into()))?;
        let tokens: Vec<&str> = header.split_whitespace().collect();
        let (m, k) = match tokens.as_slice() {
            ["dim", m, "count", k] => (m.parse::<usize>().ok(), k.parse::<usize>().ok()),
            _ => (None, None),
        };
        let (Some(m), Some(k)) = (m, k) else {
            return Err(Error::InvalidArgument(format!("malformed header {header:?}")));
        };
        let items = lines.map(LinearInequality::parse_line).collect::<Result<Vec<_>>>()?;
        if items.len() != k {
            return Err(Error::InvalidArgument(format!(
                "header announces {k} inequalities, found {}",
                items.len()
            )));
        }
        Self::new(m, items)
    }
}

impl<'a> IntoIterator for &'a InequalitySystem {
    type Item = &'a LinearInequality;
    type IntoIter = std::slice::Iter<'a, LinearInequality>;

    fn into_iter(self) -> Self::IntoIter {
        self.inequalities.iter()
    }
}
