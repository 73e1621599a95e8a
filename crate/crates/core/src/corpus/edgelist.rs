//! Plain edge-list text: one `u v` pair per line with 0-based labels. `#`
//! starts a comment; blank lines are ignored. The order is one more than the
//! largest label seen, so `K_1` has no edge-list form.

use std::collections::HashSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::tree::Tree;

pub fn parse_edge_list(text: &str) -> Result<Tree> {
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut n = 0;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = fields[..] else {
            return Err(err(format!("expected two vertices, got {line:?}")));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(format!("not a vertex label: {s:?}")))
        };
        let (u, v) = (parse(a)?, parse(b)?);
        if u == v {
            return Err(err(format!("self-loop at {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(format!("duplicate edge {u} {v}")));
        }
        n = n.max(u + 1).max(v + 1);
        edges.push((u, v));
    }
    if edges.is_empty() {
        return Err(Error::Parse {
            line: 0,
            message: "no edges".into(),
        });
    }
    Tree::new(n, &edges)
}

/// Canonical form: sorted edges, smaller endpoint first.
pub fn emit_edge_list(t: &Tree) -> String {
    let mut out = String::new();
    for &(u, v) in t.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_p3() {
        let t = parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!(t.order(), 3);
        assert_eq!(t.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn comments_and_blank_lines() {
        let t = parse_edge_list("# a path\n\n2 1  # reversed\n0 1\n").unwrap();
        assert_eq!(emit_edge_list(&t), "0 1\n1 2\n");
    }

    #[test]
    fn duplicate_edge_is_a_parse_error() {
        let err = parse_edge_list("0 1\n0 1").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err:?}");
        let err = parse_edge_list("0 1\n1 0").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn malformed_lines() {
        assert!(matches!(
            parse_edge_list("0 1 2"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 x"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_edge_list("0 1\n2 3"),
            Err(Error::NotATree(_))
        ));
    }
}
