use super::{Graph, MAX_WEIGHT};
use crate::error::ParseError;

/// Reads the `p cut` text format:
///
/// ```text
/// c comment
/// p cut <n> <m>
/// e <u> <v> <w>      (m times, 1-indexed nodes)
/// ```
///
/// Edge indices follow file order.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut graph: Option<Graph> = None;
    let mut expected = 0usize;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        let malformed = || ParseError::MalformedLine {
            line,
            text: raw.to_string(),
        };
        match tokens[0] {
            "c" => continue,
            "p" => {
                if graph.is_some() {
                    return Err(ParseError::DuplicateHeader { line });
                }
                if tokens.len() != 4 || tokens[1] != "cut" {
                    return Err(malformed());
                }
                let n: usize = tokens[2].parse().map_err(|_| malformed())?;
                expected = tokens[3].parse().map_err(|_| malformed())?;
                graph = Some(Graph::new(n));
            }
            "e" => {
                if tokens.len() != 4 {
                    return Err(malformed());
                }
                let u: usize = tokens[1].parse().map_err(|_| malformed())?;
                let v: usize = tokens[2].parse().map_err(|_| malformed())?;
                let w: i64 = tokens[3].parse().map_err(|_| malformed())?;
                if u == v {
                    return Err(ParseError::SelfLoop { line, node: u });
                }
                let g = graph.as_mut().ok_or(ParseError::MissingHeader { line })?;
                let n = g.node_count();
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(ParseError::NodeOutOfRange { line, node: x, n });
                    }
                }
                if w.abs() > MAX_WEIGHT {
                    return Err(ParseError::WeightOutOfRange { line, weight: w });
                }
                if g.has_edge(u - 1, v - 1) {
                    return Err(ParseError::DuplicateEdge {
                        line,
                        u: u.min(v),
                        v: u.max(v),
                    });
                }
                g.add_edge(u - 1, v - 1, w).expect("checked above");
            }
            _ => return Err(malformed()),
        }
    }

    let g = graph.ok_or(ParseError::EmptyInput)?;
    if g.edge_count() != expected {
        return Err(ParseError::EdgeCountMismatch {
            expected,
            found: g.edge_count(),
        });
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = parse_graph("p cut 2 1\ne 1 2 5\n").unwrap();
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.edge(0).w, 5);
    }

    #[test]
    fn triangle_with_comments() {
        let g = parse_graph("c a triangle\np cut 3 3\ne 1 2 1\n\ne 1 3 1\nc mid\ne 2 3 1\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.edge_between(1, 2), Some(2));
    }

    #[test]
    fn self_loop() {
        assert_eq!(parse_graph("e 1 1 2"), Err(ParseError::SelfLoop { line: 1, node: 1 }));
    }

    #[test]
    fn distinct_errors() {
        assert!(matches!(
            parse_graph("p cut 2 2\ne 1 2 1\ne 2 1 1"),
            Err(ParseError::DuplicateEdge { line: 3, u: 1, v: 2 })
        ));
        assert!(matches!(
            parse_graph("p cut 2 1\ne 1 3 1"),
            Err(ParseError::NodeOutOfRange { node: 3, .. })
        ));
        assert!(matches!(
            parse_graph("p cut 2 1\ne 1 x 1"),
            Err(ParseError::MalformedLine { .. })
        ));
        assert!(matches!(
            parse_graph("e 1 2 1"),
            Err(ParseError::MissingHeader { line: 1 })
        ));
        assert!(matches!(
            parse_graph("p cut 2 1\np cut 2 1"),
            Err(ParseError::DuplicateHeader { line: 2 })
        ));
        assert!(matches!(
            parse_graph("p cut 3 2\ne 1 2 1"),
            Err(ParseError::EdgeCountMismatch { expected: 2, found: 1 })
        ));
        assert!(matches!(
            parse_graph("p cut 2 1\ne 1 2 2000000000000"),
            Err(ParseError::WeightOutOfRange { .. })
        ));
        assert_eq!(parse_graph("c only\n"), Err(ParseError::EmptyInput));
    }
}
