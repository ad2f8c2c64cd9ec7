//! Byte-deterministic graph serialization: vertices in order, edges `(a, b)`
//! with `a < b` in lexicographic order.

use std::fmt::Write as _;

use serde::Serialize;

use crate::oracle::IndependentGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphFormat {
    Dot,
    Json,
    EdgeList,
}

impl std::str::FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "dot" => Ok(GraphFormat::Dot),
            "json" => Ok(GraphFormat::Json),
            "edgelist" => Ok(GraphFormat::EdgeList),
            other => Err(format!("unknown graph format '{other}' (expected dot, json or edgelist)")),
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ExportOptions {
    /// DOT only: label each vertex `"<a> o=<order>"`.
    pub label_orders: bool,
}

pub fn export_graph(g: &IndependentGraph, format: GraphFormat, options: ExportOptions) -> String {
    match format {
        GraphFormat::Dot => to_dot(g, options),
        GraphFormat::Json => to_json(g),
        GraphFormat::EdgeList => to_edge_list(g),
    }
}

pub fn to_dot(g: &IndependentGraph, options: ExportOptions) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph indep_{} {{", g.modulus());
    for (a, order) in g.orders().iter().enumerate() {
        if options.label_orders {
            let _ = writeln!(s, "  {a} [label=\"{a} o={order}\"];");
        } else {
            let _ = writeln!(s, "  {a};");
        }
    }
    for (a, b) in g.edges() {
        let _ = writeln!(s, "  {a} -- {b};");
    }
    s.push_str("}\n");
    s
}

pub fn to_edge_list(g: &IndependentGraph) -> String {
    let mut s = String::new();
    for (a, b) in g.edges() {
        let _ = writeln!(s, "{a} {b}");
    }
    s
}

#[derive(Serialize)]
struct JsonGraph {
    n: u64,
    edges: Vec<[u64; 2]>,
}

pub fn to_json(g: &IndependentGraph) -> String {
    let doc = JsonGraph { n: g.modulus().get(), edges: g.edges().map(|(a, b)| [a, b]).collect() };
    let mut s = serde_json::to_string(&doc).expect("plain integers serialize");
    s.push('\n');
    s
}
