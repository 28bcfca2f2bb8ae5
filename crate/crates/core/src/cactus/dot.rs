use alloc::format;
use alloc::string::String;
use core::fmt::Write;

use super::FactorTriple;

const COLORS: [(&str, &str, &str); 3] = [
    ("w", "white", "white"),
    ("b", "black", "black"),
    ("g", "grey", "grey70"),
];

/// Graphviz rendering of the constellation: one box per triangle, one node per
/// cycle of each factor, an edge from each triangle to the three cycles through it.
pub fn export_dot(t: &FactorTriple) -> String {
    let mut out = String::from("graph cactus {\n");
    let _ = writeln!(
        out,
        "  // n = {}, genus = {}",
        t.n(),
        t.genus().map_or_else(|_| String::from("?"), |g| format!("{g}"))
    );
    for i in 1..=t.n() {
        let _ = writeln!(out, "  t{i} [shape=triangle, label=\"{i}\"];");
    }
    for (alpha, (prefix, name, fill)) in t.factors().into_iter().zip(COLORS) {
        let font = if name == "black" { "white" } else { "black" };
        for (k, cycle) in alpha.cycles().iter().enumerate() {
            let label = cycle
                .iter()
                .map(|x| format!("{x}"))
                .collect::<alloc::vec::Vec<_>>()
                .join(" ");
            let _ = writeln!(
                out,
                "  {prefix}{} [shape=circle, style=filled, fillcolor={fill}, fontcolor={font}, label=\"({label})\", color={name}];",
                k + 1
            );
        }
    }
    for (alpha, (prefix, _, _)) in t.factors().into_iter().zip(COLORS) {
        for (k, cycle) in alpha.cycles().iter().enumerate() {
            for x in cycle {
                let _ = writeln!(out, "  t{x} -- {prefix}{};", k + 1);
            }
        }
    }
    out.push_str("}\n");
    out
}
