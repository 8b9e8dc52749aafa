//! JSON report payloads. Every report carries `schema_version` so consumers
//! can detect format changes; rationals are rendered as `"p/q"` strings.

use serde_json::{json, Value};

use structctl::controllability::ControllabilityVerdict;
use structctl::graph::SccDecomposition;
use structctl::oracle::OracleResult;
use structctl::rat::{format_rat, Rat};
use structctl::selection::{BoundClass, SelectionResult};

pub const SCHEMA_VERSION: u32 = 1;

pub fn bound_name(bound: BoundClass) -> &'static str {
    match bound {
        BoundClass::Exact => "exact",
        BoundClass::DeltaMinusOne => "delta-1",
        BoundClass::Delta => "delta",
    }
}

fn one_based(vertices: &[usize]) -> Vec<usize> {
    vertices.iter().map(|&v| v + 1).collect()
}

pub fn check_report(
    scc: &SccDecomposition,
    lin: &ControllabilityVerdict,
    flow: &ControllabilityVerdict,
    inaccessible: &[usize],
    matching_size: usize,
    n: usize,
) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": "check",
        "controllable": lin.controllable,
        "q": scc.q(),
        "non_top_linked": scc
            .non_top_linked
            .iter()
            .map(|&id| one_based(&scc.components[id]))
            .collect::<Vec<_>>(),
        "inaccessible_components": inaccessible
            .iter()
            .map(|&id| one_based(&scc.components[id]))
            .collect::<Vec<_>>(),
        "accessible": lin.accessible,
        "dilation_free": lin.dilation_free,
        "max_matching": matching_size,
        "states": n,
        "max_flow": flow.max_flow_value,
        "required_flow": flow.q + n,
        "deciders_agree": lin.controllable == flow.controllable,
    })
}

pub fn select_report(result: &SelectionResult, dual: bool) -> Value {
    let net = &result.network;
    let active: Vec<Value> = result
        .inputs
        .iter()
        .map(|j| {
            let id = net
                .edge_id(net.primed_input(j), net.sink())
                .expect("selected inputs have a sink edge");
            json!({ "index": j + 1, "flow": result.certificate.get(id) })
        })
        .collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": "select",
        "mode": if dual { "outputs" } else { "inputs" },
        "selected": result.inputs.iter().map(|j| j + 1).collect::<Vec<_>>(),
        "total_cost": format_rat(&result.total_cost),
        "delta": result.delta,
        "bound": bound_name(result.bound),
        "lp_objective": format_rat(&result.lp_objective),
        "certificate": {
            "flow_value": net.flow_value(&result.certificate),
            "required_flow": net.required_flow(),
            "active": active,
        },
    })
}

pub fn oracle_report(result: &OracleResult, comparison: Option<(&Rat, &Rat)>) -> Value {
    let mut report = json!({
        "schema_version": SCHEMA_VERSION,
        "command": "oracle",
        "optimum_cost": format_rat(&result.optimum_cost),
        "optimal_sets": result
            .optimal_sets
            .iter()
            .map(|s| s.iter().map(|j| j + 1).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
        "subsets_examined": result.subsets_examined,
    });
    if let Some((approx, ratio)) = comparison {
        report["approx_cost"] = Value::String(format_rat(approx));
        report["ratio"] = Value::String(format_rat(ratio));
    }
    report
}
