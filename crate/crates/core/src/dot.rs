//! Graphviz DOT export of Hasse diagrams: cover edges only, rank-aligned when
//! the poset is graded, with an optional highlighted antichain.

use std::fmt::Write;

use crate::poset::FinitePoset;

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Render the Hasse diagram. `highlight` indices are drawn filled, mirroring
/// the shaded antichains of the figures this crate reproduces.
pub fn to_dot(p: &FinitePoset, highlight: &[usize]) -> String {
    let mut hi = vec![false; p.len()];
    for &i in highlight {
        if i < p.len() {
            hi[i] = true;
        }
    }
    let mut out = String::new();
    let _ = writeln!(out, "digraph poset {{");
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [shape=box];");
    for i in 0..p.len() {
        let style = if hi[i] { " style=filled fillcolor=lightblue" } else { "" };
        let _ = writeln!(out, "  n{i} [label=\"{}\"{style}];", escape(p.label(i)));
    }
    if let Ok(levels) = p.levels() {
        for level in levels {
            if level.len() > 1 {
                let names: Vec<String> = level.iter().map(|i| format!("n{i}")).collect();
                let _ = writeln!(out, "  {{ rank=same; {}; }}", names.join("; "));
            }
        }
    }
    for (lo, hi) in p.covers() {
        let _ = writeln!(out, "  n{lo} -> n{hi};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::interval_poset_of_orientation;
    use crate::quiver::PathOrientation;

    #[test]
    fn a3_alternating_dot_has_6_nodes_4_edges() {
        let ip = interval_poset_of_orientation(&PathOrientation::parse("<>").unwrap());
        let dot = to_dot(ip.poset(), &[]);
        assert_eq!(dot.matches("label=").count(), 6);
        assert_eq!(dot.matches(" -> ").count(), 4);
    }

    #[test]
    fn highlight_fills_nodes() {
        let ip = interval_poset_of_orientation(&PathOrientation::parse("<>").unwrap());
        let dot = to_dot(ip.poset(), &[0, 2]);
        assert_eq!(dot.matches("style=filled").count(), 2);
    }

    #[test]
    fn output_is_deterministic() {
        let ip = interval_poset_of_orientation(&PathOrientation::zigzag(5, 2).unwrap());
        assert_eq!(to_dot(ip.poset(), &[1]), to_dot(ip.poset(), &[1]));
    }
}
