//! Graphviz DOT emission for quasiorders, factor posets and enumerated
//! diagrams. Output is byte-stable: nodes in universe (or index) order,
//! edges sorted, no layout attributes that depend on ambient state.

use std::fmt::Write;

use crate::lattice::LatticeDiagram;
use crate::quasiorder::{class_label, CrispQuasiorder, FactorPoset};
use crate::rational::UnitRational;

/// Directed graph of a quasiorder. Loops are suppressed; mutually related
/// pairs are drawn once as a double-headed edge.
pub fn quasiorder_dot(q: &CrispQuasiorder) -> String {
    let universe = q.universe();
    let mut out = String::from("digraph {\n  rankdir=BT;\n");
    for name in universe.names() {
        writeln!(out, "  \"{name}\";").expect("write to string");
    }
    for a in 0..universe.len() {
        for b in 0..universe.len() {
            if a == b || !q.contains(a, b) {
                continue;
            }
            if q.contains(b, a) {
                if a < b {
                    writeln!(
                        out,
                        "  \"{}\" -> \"{}\" [dir=both];",
                        universe.name(a),
                        universe.name(b)
                    )
                    .expect("write to string");
                }
            } else {
                writeln!(
                    out,
                    "  \"{}\" -> \"{}\";",
                    universe.name(a),
                    universe.name(b)
                )
                .expect("write to string");
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of a factor poset: cover edges only, classes labeled by
/// their member sets.
pub fn factor_poset_dot(poset: &FactorPoset) -> String {
    let mut out = String::from("digraph {\n  rankdir=BT;\n");
    for class in 0..poset.class_count() {
        writeln!(
            out,
            "  c{class} [label=\"{}\"];",
            class_label(poset.partition(), class)
        )
        .expect("write to string");
    }
    for (lower, upper) in poset.covers() {
        writeln!(out, "  c{lower} -> c{upper};").expect("write to string");
    }
    out.push_str("}\n");
    out
}

fn value_row(values: &[UnitRational]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Hasse diagram from raw value vectors, each node labeled with the upper
/// row over the lower row in the two-row matrix notation.
pub fn diagram_dot_from_vectors(
    lowers: &[Vec<UnitRational>],
    uppers: &[Vec<UnitRational>],
    covers: &[(usize, usize)],
) -> String {
    let mut out = String::from("digraph {\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, (lower, upper)) in lowers.iter().zip(uppers).enumerate() {
        writeln!(
            out,
            "  n{i} [label=\"{}\\n{}\"];",
            value_row(upper),
            value_row(lower)
        )
        .expect("write to string");
    }
    for (lower, upper) in covers {
        writeln!(out, "  n{lower} -> n{upper};").expect("write to string");
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of an enumerated lattice diagram.
pub fn diagram_dot(diagram: &LatticeDiagram) -> String {
    let lowers: Vec<Vec<UnitRational>> = diagram
        .elements()
        .iter()
        .map(|p| p.lower().values().to_vec())
        .collect();
    let uppers: Vec<Vec<UnitRational>> = diagram
        .elements()
        .iter()
        .map(|p| p.upper().values().to_vec())
        .collect();
    diagram_dot_from_vectors(&lowers, &uppers, diagram.covers())
}
