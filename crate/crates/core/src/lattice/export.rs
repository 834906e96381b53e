//! Graphviz DOT exports of Hasse diagrams and Galois graphs.

use std::fmt::Write;

use super::{FiniteLattice, ShardLabeling};

/// DOT source for the Hasse diagram, bottom to top. Nodes are element
/// indices with optional display labels; edges carry shard labels (as
/// element indices) when a labeling is supplied.
pub fn hasse_dot(l: &FiniteLattice, names: Option<&[String]>, shards: Option<&ShardLabeling>) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n");
    for x in 0..l.len() {
        let name = names.map_or_else(|| x.to_string(), |v| v[x].clone());
        let _ = writeln!(out, "  n{x} [label=\"{}\"];", escape(&name));
    }
    for (x, y) in l.cover_pairs() {
        match shards {
            Some(s) => {
                let _ = writeln!(out, "  n{x} -> n{y} [label=\"{}\"];", s.label(x, y));
            }
            None => {
                let _ = writeln!(out, "  n{x} -> n{y};");
            }
        }
    }
    out.push_str("}\n");
    out
}

/// DOT source for the Galois graph on join-irreducibles.
pub fn galois_dot(l: &FiniteLattice, s: &ShardLabeling, names: Option<&[String]>) -> String {
    let mut out = String::from("digraph galois {\n");
    for &j in &s.jirr {
        let name = names.map_or_else(|| j.to_string(), |v| v[j].clone());
        let _ = writeln!(out, "  n{j} [label=\"{}\"];", escape(&name));
    }
    for (a, b) in s.galois_graph(l) {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_has_one_edge_per_cover() {
        let l = FiniteLattice::boolean(2);
        let s = ShardLabeling::new(&l).unwrap();
        let dot = hasse_dot(&l, None, Some(&s));
        assert_eq!(dot.matches("->").count(), 4);
        assert!(dot.starts_with("digraph hasse"));
        assert_eq!(galois_dot(&l, &s, None).matches("->").count(), 0);
    }
}
