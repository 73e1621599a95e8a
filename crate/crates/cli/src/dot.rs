use std::collections::BTreeSet;
use std::fmt::Write;

use bnb_core::{Broadcast, Tree};

/// Graphviz rendering. Broadcasters are labelled `v/f(v)` and drawn bold;
/// vertices on some broadcaster's boundary are dashed.
pub fn to_dot(t: &Tree, b: Option<&Broadcast<'_>>) -> String {
    let boundary: BTreeSet<usize> = b
        .map(|b| {
            b.broadcasters()
                .into_iter()
                .flat_map(|v| b.boundary(v))
                .collect()
        })
        .unwrap_or_default();
    let mut out = String::from("graph T {\n  node [shape=circle];\n");
    for v in 0..t.order() {
        let mut attrs = Vec::new();
        match b.map(|b| b.strength(v)) {
            Some(s) if s > 0 => {
                attrs.push(format!("label=\"{v}/{s}\""));
                attrs.push("penwidth=2".to_string());
            }
            _ => attrs.push(format!("label=\"{v}\"")),
        }
        if boundary.contains(&v) {
            attrs.push("style=dashed".to_string());
        }
        writeln!(out, "  {v} [{}];", attrs.join(", ")).unwrap();
    }
    for &(u, v) in t.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p3_plain() {
        let t = Tree::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            to_dot(&t, None),
            "graph T {\n  node [shape=circle];\n  0 [label=\"0\"];\n  1 [label=\"1\"];\n  \
             2 [label=\"2\"];\n  0 -- 1;\n  1 -- 2;\n}\n"
        );
    }

    #[test]
    fn p3_with_centre_broadcasting() {
        let t = Tree::new(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Broadcast::new(&t, vec![0, 1, 0]).unwrap();
        let dot = to_dot(&t, Some(&b));
        assert!(dot.contains("1 [label=\"1/1\", penwidth=2];"));
        assert!(dot.contains("0 [label=\"0\", style=dashed];"));
        assert!(dot.contains("2 [label=\"2\", style=dashed];"));
    }
}
