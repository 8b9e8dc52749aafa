//! Graphviz DOT rendering of the derived graphs.

use std::fmt::Write as _;

use structctl::flow::{augment_costs, build_flow_network, max_flow, FlowNetwork, VertexRole};
use structctl::graph::{build_state_digraph, scc_decompose};
use structctl::matching::build_system_bipartite;
use structctl::rat::{format_rat, rat};
use structctl::StructuredSystem;

fn state_name(i: usize) -> String {
    format!("x{}", i + 1)
}

fn input_name(j: usize) -> String {
    format!("u{}", j + 1)
}

fn primed_state_name(k: usize) -> String {
    format!("x'{}", k + 1)
}

fn vertex_name(net: &FlowNetwork, v: usize) -> String {
    match net.role(v) {
        VertexRole::Source => "s".to_string(),
        VertexRole::Sink => "t".to_string(),
        VertexRole::SccNode(p) => format!("N{}", p + 1),
        VertexRole::PrimedState(k) => primed_state_name(k),
        VertexRole::State(r) => state_name(r),
        VertexRole::Input(j) => input_name(j),
        VertexRole::PrimedInput(j) => format!("u'{}", j + 1),
    }
}

/// System digraph: states as circles, inputs as boxes.
pub fn system_digraph(sys: &StructuredSystem) -> String {
    let mut out = String::from("digraph system {\n  rankdir=LR;\n");
    for i in 0..sys.n() {
        let _ = writeln!(out, "  \"{}\" [shape=circle];", state_name(i));
    }
    for j in 0..sys.m() {
        let _ = writeln!(
            out,
            "  \"{}\" [shape=box, style=filled, fillcolor=lightgrey];",
            input_name(j)
        );
    }
    for (i, j) in sys.a().entries() {
        let _ = writeln!(out, "  \"{}\" -> \"{}\";", state_name(j), state_name(i));
    }
    for (i, j) in sys.b().entries() {
        let _ = writeln!(out, "  \"{}\" -> \"{}\";", input_name(j), state_name(i));
    }
    out.push_str("}\n");
    out
}

/// Condensation of the state digraph; source components are doubled.
pub fn condensation(sys: &StructuredSystem) -> String {
    let scc = scc_decompose(&build_state_digraph(sys));
    let mut out = String::from("digraph condensation {\n  rankdir=LR;\n");
    for (id, comp) in scc.components.iter().enumerate() {
        let members: Vec<String> = comp.iter().map(|&v| state_name(v)).collect();
        let peripheries = if scc.non_top_linked.contains(&id) {
            2
        } else {
            1
        };
        let _ = writeln!(
            out,
            "  \"C{}\" [shape=box, peripheries={}, label=\"{{{}}}\"];",
            id + 1,
            peripheries,
            members.join(",")
        );
    }
    for &(from, to) in &scc.dag_edges {
        let _ = writeln!(out, "  \"C{}\" -> \"C{}\";", from + 1, to + 1);
    }
    out.push_str("}\n");
    out
}

/// Weighted system bipartite graph, one rank per side.
pub fn bipartite(sys: &StructuredSystem) -> String {
    let g = build_system_bipartite(sys, true);
    let n = sys.n();
    let left_name = |l: usize| {
        if l < n {
            state_name(l)
        } else {
            input_name(l - n)
        }
    };
    let mut out = String::from("graph bipartite {\n  rankdir=LR;\n");
    out.push_str("  subgraph cluster_left { label=\"states and inputs\";\n");
    for l in 0..g.left_count() {
        let shape = if l < n { "circle" } else { "box" };
        let _ = writeln!(out, "    \"{}\" [shape={}];", left_name(l), shape);
    }
    out.push_str("  }\n  subgraph cluster_right { label=\"primed states\";\n");
    for r in 0..g.right_count() {
        let _ = writeln!(out, "    \"{}\" [shape=circle];", primed_state_name(r));
    }
    out.push_str("  }\n");
    for (idx, &(l, r)) in g.edges().iter().enumerate() {
        let w = &g.weights().unwrap()[idx];
        let _ = writeln!(
            out,
            "  \"{}\" -- \"{}\" [label=\"{}\"];",
            left_name(l),
            primed_state_name(r),
            format_rat(w)
        );
    }
    out.push_str("}\n");
    out
}

/// The cost-augmented flow network; with `with_flow` every edge is labeled
/// `flow/capacity` from a maximum flow, otherwise just `capacity`. Nonzero
/// costs are appended as `@ cost`.
pub fn flow_network(sys: &StructuredSystem, with_flow: bool) -> String {
    let scc = scc_decompose(&build_state_digraph(sys));
    let base = build_flow_network(sys, &scc).expect("decomposition matches the system");
    let net = augment_costs(&base, sys.input_costs()).expect("cost vector matches the system");
    let flow = with_flow.then(|| max_flow(&net));

    let mut out = String::from("digraph flow_network {\n  rankdir=LR;\n");
    for v in 0..net.vertex_count() {
        let shape = match net.role(v) {
            VertexRole::Source | VertexRole::Sink => "doublecircle",
            VertexRole::SccNode(_) => "box",
            VertexRole::PrimedState(_) | VertexRole::State(_) => "circle",
            VertexRole::Input(_) | VertexRole::PrimedInput(_) => "diamond",
        };
        let _ = writeln!(out, "  \"{}\" [shape={}];", vertex_name(&net, v), shape);
    }
    for (idx, e) in net.edges().iter().enumerate() {
        let mut label = match &flow {
            Some(f) => format!("{}/{}", f.get(idx), e.capacity),
            None => format!("{}", e.capacity),
        };
        if e.cost != rat(0) {
            let _ = write!(label, " @ {}", format_rat(&e.cost));
        }
        let _ = writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"{}\"];",
            vertex_name(&net, e.from),
            vertex_name(&net, e.to),
            label
        );
    }
    out.push_str("}\n");
    out
}
