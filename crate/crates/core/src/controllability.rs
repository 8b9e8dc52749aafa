//! Two independent deciders for structural controllability: the classical
//! accessibility-plus-matching conditions, and the max-flow condition on the
//! system's flow network. They always agree; keeping both implementations
//! separate is what makes the agreement worth testing.

use crate::error::{Error, Result};
use crate::flow::{build_flow_network, max_flow, FlowNetwork, FlowVector};
use crate::graph::{build_state_digraph, scc_decompose, SccDecomposition};
use crate::matching::{build_system_bipartite, max_matching};
use crate::system::{InputSet, StructuredSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeciderMethod {
    Lin,
    Flow,
}

/// Outcome of a controllability check. The optional fields belong to the
/// decider that produced them: the graph decider fills `accessible` and
/// `dilation_free`, the flow decider fills `max_flow_value`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ControllabilityVerdict {
    pub controllable: bool,
    pub accessible: Option<bool>,
    pub dilation_free: Option<bool>,
    pub max_flow_value: Option<u64>,
    pub q: usize,
    pub method: DeciderMethod,
}

/// True iff every non-top-linked component contains a state that some input
/// influences directly. Downstream components are then reachable too.
pub fn check_accessibility(sys: &StructuredSystem, scc: &SccDecomposition) -> bool {
    scc.non_top_linked.iter().all(|&id| {
        scc.components[id]
            .iter()
            .any(|&r| (0..sys.m()).any(|j| sys.b().contains(r, j)))
    })
}

/// True iff the system bipartite graph has a matching that saturates every
/// primed state.
pub fn check_no_dilation(sys: &StructuredSystem) -> bool {
    let g = build_system_bipartite(sys, false);
    max_matching(&g).cardinality() == sys.n()
}

/// Classical decider: controllable iff accessible and dilation-free.
pub fn is_controllable_lin(sys: &StructuredSystem) -> ControllabilityVerdict {
    let scc = scc_decompose(&build_state_digraph(sys));
    let accessible = check_accessibility(sys, &scc);
    let dilation_free = check_no_dilation(sys);
    ControllabilityVerdict {
        controllable: accessible && dilation_free,
        accessible: Some(accessible),
        dilation_free: Some(dilation_free),
        max_flow_value: None,
        q: scc.q(),
        method: DeciderMethod::Lin,
    }
}

/// Flow decider: controllable iff the max-flow value of the system's flow
/// network reaches `q + n`.
pub fn is_controllable_flow(sys: &StructuredSystem) -> ControllabilityVerdict {
    let scc = scc_decompose(&build_state_digraph(sys));
    let net = build_flow_network(sys, &scc).expect("decomposition matches the system");
    let value = net.flow_value(&max_flow(&net));
    debug_assert!(value <= net.required_flow());
    ControllabilityVerdict {
        controllable: value >= net.required_flow(),
        accessible: None,
        dilation_free: None,
        max_flow_value: Some(value),
        q: scc.q(),
        method: DeciderMethod::Flow,
    }
}

/// The inputs whose primed-input-to-sink edge carries flow. A feasible flow
/// of full value certifies that restricting the system to exactly these
/// inputs preserves structural controllability.
pub fn input_support_of_flow(net: &FlowNetwork, f: &FlowVector) -> Result<InputSet> {
    let value = net.flow_value(f);
    let required = net.required_flow();
    if value < required {
        return Err(Error::FlowTooSmall { value, required });
    }
    Ok((0..net.m())
        .filter(|&j| {
            let id = net
                .edge_id(net.primed_input(j), net.sink())
                .expect("built networks connect every primed input to the sink");
            f.get(id) > 0
        })
        .collect())
}
