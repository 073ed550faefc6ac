use std::fmt::Write;

use crate::graph::Graph;

/// DIMACS edge format: `p edge n m`, then `e u v` per edge, 1-indexed with
/// `u < v`, in lexicographic order.
pub fn encode_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("write to String");
    }
    out
}
