//! Exhaustive reference solvers, deliberately independent of the
//! approximation pipeline: selections are checked with the graph decider
//! only, never the flow machinery, and flows are enumerated edge by edge.
//! Desk-scale instances only.

use crate::controllability::is_controllable_lin;
use crate::error::{Error, Result};
use crate::flow::{FlowNetwork, FlowVector};
use crate::rat::Rat;
use crate::system::{InputSet, StructuredSystem};

/// Inputs with more columns than this are rejected by default.
pub const DEFAULT_SUBSET_LIMIT: usize = 16;

/// Absolute ceiling on the subset enumeration, whatever limit the caller
/// passes; beyond this the table of 2^m subsets stops being reasonable.
pub const MAX_SUBSET_LIMIT: usize = 20;

/// Networks with more edges than this are rejected by default.
pub const DEFAULT_FLOW_EDGE_LIMIT: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub optimum_cost: Rat,
    /// Every cost-minimal feasible input set, in ascending set order.
    pub optimal_sets: Vec<InputSet>,
    /// Number of subsets whose controllability was actually checked.
    pub subsets_examined: usize,
}

/// Exact minimum-cost selection by subset enumeration. Subsets are scanned
/// in nondecreasing cost order, so the scan stops at the end of the first
/// feasible cost level; everything at that level is collected.
pub fn brute_force_minccis(sys: &StructuredSystem, limit: usize) -> Result<OracleResult> {
    sys.validate()?;
    let m = sys.m();
    if m > limit.min(MAX_SUBSET_LIMIT) {
        return Err(Error::TooLarge(format!(
            "{m} inputs exceed the subset limit {}",
            limit.min(MAX_SUBSET_LIMIT)
        )));
    }

    let mut order: Vec<(Rat, u32, u64)> = (1u64..1 << m)
        .map(|mask| {
            let cost = (0..m)
                .filter(|&j| mask & (1 << j) != 0)
                .map(|j| sys.cost(j))
                .sum();
            (cost, mask.count_ones(), mask)
        })
        .collect();
    order.sort_unstable();

    let mut examined = 0;
    let mut best: Option<Rat> = None;
    let mut optimal_sets = Vec::new();
    for (cost, _, mask) in order {
        if let Some(b) = best {
            if cost > b {
                break;
            }
        }
        examined += 1;
        let set: InputSet = (0..m).filter(|&j| mask & (1 << j) != 0).collect();
        let restricted = sys.restrict_inputs(&set)?.system;
        if is_controllable_lin(&restricted).controllable {
            best = Some(cost);
            optimal_sets.push(set);
        }
    }

    match best {
        Some(optimum_cost) => {
            optimal_sets.sort();
            Ok(OracleResult {
                optimum_cost,
                optimal_sets,
                subsets_examined: examined,
            })
        }
        None => Err(Error::NotControllable),
    }
}

/// All integral feasible flows of exactly the given value, found by bounded
/// edge-by-edge assignment with interval pruning on every vertex balance.
pub fn enumerate_feasible_flows(
    net: &FlowNetwork,
    value: u64,
    edge_limit: usize,
) -> Result<Vec<FlowVector>> {
    if net.edge_count() > edge_limit {
        return Err(Error::TooLarge(format!(
            "{} edges exceed the enumeration limit {edge_limit}",
            net.edge_count()
        )));
    }

    let mut search = FlowSearch::new(net, value);
    search.assign(0);
    Ok(search.found)
}

struct FlowSearch<'a> {
    net: &'a FlowNetwork,
    value: u64,
    assignment: Vec<u64>,
    // Per-vertex totals over assigned edges, and capacity still unassigned.
    in_assigned: Vec<u64>,
    in_pending: Vec<u64>,
    out_assigned: Vec<u64>,
    out_pending: Vec<u64>,
    found: Vec<FlowVector>,
}

impl<'a> FlowSearch<'a> {
    fn new(net: &'a FlowNetwork, value: u64) -> Self {
        let nv = net.vertex_count();
        let mut in_pending = vec![0u64; nv];
        let mut out_pending = vec![0u64; nv];
        for e in net.edges() {
            out_pending[e.from] += e.capacity;
            in_pending[e.to] += e.capacity;
        }
        Self {
            net,
            value,
            assignment: vec![0; net.edge_count()],
            in_assigned: vec![0; nv],
            in_pending,
            out_assigned: vec![0; nv],
            out_pending,
            found: Vec::new(),
        }
    }

    fn consistent(&self, v: usize) -> bool {
        if v == self.net.source() {
            // Only the outgoing total defines the flow value.
            return self.out_assigned[v] <= self.value
                && self.out_assigned[v] + self.out_pending[v] >= self.value;
        }
        if v == self.net.sink() {
            return true;
        }
        self.in_assigned[v] <= self.out_assigned[v] + self.out_pending[v]
            && self.out_assigned[v] <= self.in_assigned[v] + self.in_pending[v]
    }

    fn assign(&mut self, idx: usize) {
        if idx == self.net.edge_count() {
            let f = FlowVector::from_values(self.assignment.clone());
            if self.net.is_feasible(&f) && self.net.flow_value(&f) == self.value {
                self.found.push(f);
            }
            return;
        }
        let edge = &self.net.edges()[idx];
        let (from, to, cap) = (edge.from, edge.to, edge.capacity);

        // When this is the tail's last way out and everything inbound is
        // known, conservation forces the value outright.
        let forced = from != self.net.source()
            && from != self.net.sink()
            && self.in_pending[from] == 0
            && self.out_pending[from] == cap;

        for amount in 0..=cap {
            if forced && self.in_assigned[from] != self.out_assigned[from] + amount {
                continue;
            }
            self.assignment[idx] = amount;
            self.out_pending[from] -= cap;
            self.in_pending[to] -= cap;
            self.out_assigned[from] += amount;
            self.in_assigned[to] += amount;
            if self.consistent(from) && self.consistent(to) {
                self.assign(idx + 1);
            }
            self.out_pending[from] += cap;
            self.in_pending[to] += cap;
            self.out_assigned[from] -= amount;
            self.in_assigned[to] -= amount;
        }
        self.assignment[idx] = 0;
    }
}
