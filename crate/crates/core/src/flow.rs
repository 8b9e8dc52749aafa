//! The two-block flow network of a structured system, integral max-flow and
//! an exact minimum-cost-flow solver.
//!
//! The network has one source `s`, one sink `t`, a node per non-top-linked
//! component, primed and plain copies of every state, and plain and primed
//! copies of every input. Block one routes one unit per non-top-linked
//! component to an input that influences it; block two is the directed system
//! bipartite graph. Every edge has capacity one except the primed-input to
//! sink edges, which carry `n + 1`.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, VecDeque};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::SccDecomposition;
use crate::rat::{scale_to_integers, Rat};
use crate::system::StructuredSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexRole {
    Source,
    Sink,
    /// Position within the non-top-linked component list, not a component id.
    SccNode(usize),
    PrimedState(usize),
    State(usize),
    Input(usize),
    PrimedInput(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowEdge {
    pub from: usize,
    pub to: usize,
    pub capacity: u64,
    pub cost: Rat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowNetwork {
    roles: Vec<VertexRole>,
    edges: Vec<FlowEdge>,
    source: usize,
    sink: usize,
    q: usize,
    n: usize,
    m: usize,
    ntl_component_ids: Vec<usize>,
    edge_ids: BTreeMap<(usize, usize), usize>,
}

impl FlowNetwork {
    pub fn vertex_count(&self) -> usize {
        self.roles.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[FlowEdge] {
        &self.edges
    }

    pub fn role(&self, v: usize) -> VertexRole {
        self.roles[v]
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Flow value that certifies structural controllability.
    pub fn required_flow(&self) -> u64 {
        (self.q + self.n) as u64
    }

    /// Component id (in the owning decomposition) of each network SCC node.
    pub fn non_top_linked_ids(&self) -> &[usize] {
        &self.ntl_component_ids
    }

    pub fn scc_vertex(&self, position: usize) -> usize {
        1 + position
    }

    pub fn primed_state(&self, k: usize) -> usize {
        1 + self.q + k
    }

    pub fn state_vertex(&self, r: usize) -> usize {
        1 + self.q + self.n + r
    }

    pub fn input_vertex(&self, j: usize) -> usize {
        1 + self.q + 2 * self.n + j
    }

    pub fn primed_input(&self, j: usize) -> usize {
        1 + self.q + 2 * self.n + self.m + j
    }

    pub fn edge_id(&self, from: usize, to: usize) -> Option<usize> {
        self.edge_ids.get(&(from, to)).copied()
    }

    /// Inputs able to absorb the unit leaving the SCC node at `position`.
    pub fn cover_candidates(&self, position: usize) -> Vec<usize> {
        let from = self.scc_vertex(position);
        (0..self.m)
            .filter(|&j| self.edge_id(from, self.primed_input(j)).is_some())
            .collect()
    }

    /// Total flow leaving the source.
    pub fn flow_value(&self, f: &FlowVector) -> u64 {
        self.edges
            .iter()
            .zip(f.values())
            .filter(|(e, _)| e.from == self.source)
            .map(|(_, &v)| v)
            .sum()
    }

    /// Flow-weighted cost: sum of `cost(e) * f(e)`.
    pub fn weighted_cost(&self, f: &FlowVector) -> Rat {
        self.edges
            .iter()
            .zip(f.values())
            .map(|(e, &v)| e.cost * Rat::from_integer(v as i128))
            .sum()
    }

    /// Support cost: each edge with positive flow is charged once.
    pub fn support_cost(&self, f: &FlowVector) -> Rat {
        self.edges
            .iter()
            .zip(f.values())
            .filter(|(_, &v)| v > 0)
            .map(|(e, _)| e.cost)
            .sum()
    }

    /// Exact capacity and conservation check; `None` means feasible.
    pub fn feasibility_violation(&self, f: &FlowVector) -> Option<String> {
        if f.values().len() != self.edges.len() {
            return Some(format!(
                "flow vector has {} entries for {} edges",
                f.values().len(),
                self.edges.len()
            ));
        }
        let mut balance = vec![0i128; self.vertex_count()];
        for (e, &v) in self.edges.iter().zip(f.values()) {
            if v > e.capacity {
                return Some(format!(
                    "edge ({}, {}) carries {} over capacity {}",
                    e.from, e.to, v, e.capacity
                ));
            }
            balance[e.from] -= v as i128;
            balance[e.to] += v as i128;
        }
        for (v, &imbalance) in balance.iter().enumerate() {
            if v != self.source && v != self.sink && imbalance != 0 {
                return Some(format!("vertex {v} violates conservation by {imbalance}"));
            }
        }
        None
    }

    pub fn is_feasible(&self, f: &FlowVector) -> bool {
        self.feasibility_violation(f).is_none()
    }
}

/// Integer flow assignment, parallel to a network's edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowVector {
    values: Vec<u64>,
}

impl FlowVector {
    pub fn zeros(edge_count: usize) -> Self {
        Self {
            values: vec![0; edge_count],
        }
    }

    pub fn from_values(values: Vec<u64>) -> Self {
        Self { values }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn get(&self, edge: usize) -> u64 {
        self.values[edge]
    }

    pub fn set(&mut self, edge: usize, value: u64) {
        self.values[edge] = value;
    }
}

/// Builds the flow network for a system and the decomposition of its state
/// digraph. All edge costs start at zero.
pub fn build_flow_network(sys: &StructuredSystem, scc: &SccDecomposition) -> Result<FlowNetwork> {
    let n = sys.n();
    let m = sys.m();
    if scc.component_of.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "decomposition covers {} vertices but the system has {} states",
            scc.component_of.len(),
            n
        )));
    }
    let q = scc.q();
    debug_assert!(q >= 1, "a nonempty digraph has a source component");

    let mut roles = Vec::with_capacity(2 + q + 2 * n + 2 * m);
    roles.push(VertexRole::Source);
    roles.extend((0..q).map(VertexRole::SccNode));
    roles.extend((0..n).map(VertexRole::PrimedState));
    roles.extend((0..n).map(VertexRole::State));
    roles.extend((0..m).map(VertexRole::Input));
    roles.extend((0..m).map(VertexRole::PrimedInput));
    roles.push(VertexRole::Sink);

    let source = 0usize;
    let sink = 1 + q + 2 * n + 2 * m;
    let scc_vertex = |i: usize| 1 + i;
    let primed_state = |k: usize| 1 + q + k;
    let state_vertex = |r: usize| 1 + q + n + r;
    let input_vertex = |j: usize| 1 + q + 2 * n + j;
    let primed_input = |j: usize| 1 + q + 2 * n + m + j;

    let mut edges = Vec::new();
    let mut edge_ids = BTreeMap::new();
    let mut push = |from: usize, to: usize, capacity: u64| {
        edge_ids.insert((from, to), edges.len());
        edges.push(FlowEdge {
            from,
            to,
            capacity,
            cost: Rat::zero(),
        });
    };

    for i in 0..q {
        push(source, scc_vertex(i), 1);
    }
    for k in 0..n {
        push(source, primed_state(k), 1);
    }
    for (position, &id) in scc.non_top_linked.iter().enumerate() {
        let component = &scc.components[id];
        for j in 0..m {
            if component.iter().any(|&r| sys.b().contains(r, j)) {
                push(scc_vertex(position), primed_input(j), 1);
            }
        }
    }
    for (k, r) in sys.a().entries() {
        push(primed_state(k), state_vertex(r), 1);
    }
    for (k, j) in sys.b().entries() {
        push(primed_state(k), input_vertex(j), 1);
    }
    for j in 0..m {
        push(input_vertex(j), primed_input(j), 1);
    }
    for j in 0..m {
        push(primed_input(j), sink, (n + 1) as u64);
    }
    for r in 0..n {
        push(state_vertex(r), sink, 1);
    }

    Ok(FlowNetwork {
        roles,
        edges,
        source,
        sink,
        q,
        n,
        m,
        ntl_component_ids: scc.non_top_linked.clone(),
        edge_ids,
    })
}

/// Returns a copy of the network in which the edge from primed input `j` to
/// the sink costs `costs[j]`; every other edge stays free.
pub fn augment_costs(net: &FlowNetwork, costs: &[Rat]) -> Result<FlowNetwork> {
    if costs.len() != net.m {
        return Err(Error::DimensionMismatch(format!(
            "{} costs supplied for {} inputs",
            costs.len(),
            net.m
        )));
    }
    for (index, c) in costs.iter().enumerate() {
        if *c < Rat::zero() {
            return Err(Error::NegativeCost { index });
        }
    }
    let mut out = net.clone();
    for (j, &cost) in costs.iter().enumerate() {
        let id = out
            .edge_id(out.primed_input(j), out.sink)
            .expect("built networks connect every primed input to the sink");
        out.edges[id].cost = cost;
    }
    Ok(out)
}

// Residual slots: slot 2e is edge e forward, slot 2e+1 its reverse.
fn residual_adjacency(net: &FlowNetwork) -> (Vec<Vec<usize>>, Vec<u64>) {
    let mut adj = vec![Vec::new(); net.vertex_count()];
    let mut residual = Vec::with_capacity(2 * net.edges.len());
    for (i, e) in net.edges.iter().enumerate() {
        adj[e.from].push(2 * i);
        adj[e.to].push(2 * i + 1);
        residual.push(e.capacity);
        residual.push(0);
    }
    (adj, residual)
}

fn slot_head(net: &FlowNetwork, slot: usize) -> usize {
    let e = &net.edges[slot / 2];
    if slot.is_multiple_of(2) {
        e.to
    } else {
        e.from
    }
}

fn slot_tail(net: &FlowNetwork, slot: usize) -> usize {
    let e = &net.edges[slot / 2];
    if slot.is_multiple_of(2) {
        e.from
    } else {
        e.to
    }
}

/// Integral maximum flow by shortest augmenting paths. Adjacency is scanned
/// in edge-index order, so the result is deterministic.
pub fn max_flow(net: &FlowNetwork) -> FlowVector {
    let (adj, mut residual) = residual_adjacency(net);
    loop {
        let mut parent = vec![usize::MAX; net.vertex_count()];
        let mut seen = vec![false; net.vertex_count()];
        seen[net.source] = true;
        let mut queue = VecDeque::from([net.source]);
        'bfs: while let Some(u) = queue.pop_front() {
            for &slot in &adj[u] {
                let v = slot_head(net, slot);
                if residual[slot] > 0 && !seen[v] {
                    seen[v] = true;
                    parent[v] = slot;
                    if v == net.sink {
                        break 'bfs;
                    }
                    queue.push_back(v);
                }
            }
        }
        if !seen[net.sink] {
            break;
        }
        let mut bottleneck = u64::MAX;
        let mut v = net.sink;
        while v != net.source {
            let slot = parent[v];
            bottleneck = bottleneck.min(residual[slot]);
            v = slot_tail(net, slot);
        }
        let mut v = net.sink;
        while v != net.source {
            let slot = parent[v];
            residual[slot] -= bottleneck;
            residual[slot ^ 1] += bottleneck;
            v = slot_tail(net, slot);
        }
    }
    FlowVector::from_values((0..net.edges.len()).map(|e| residual[2 * e + 1]).collect())
}

/// Minimum-cost integral flow of the given value, by successive shortest
/// paths over scaled integer costs with vertex potentials. With non-negative
/// costs the optimum over all flows of value at least `required` is attained
/// at value exactly `required`.
pub fn min_cost_flow(net: &FlowNetwork, required: u64) -> Result<FlowVector> {
    let costs: Vec<Rat> = net.edges.iter().map(|e| e.cost).collect();
    let (scaled, _) = scale_to_integers(&costs);
    let slot_cost = |slot: usize| -> i128 {
        let c = scaled[slot / 2];
        if slot.is_multiple_of(2) {
            c
        } else {
            -c
        }
    };

    let (adj, mut residual) = residual_adjacency(net);
    let nv = net.vertex_count();
    let mut potential = vec![0i128; nv];
    let mut remaining = required;

    while remaining > 0 {
        let mut dist: Vec<Option<i128>> = vec![None; nv];
        let mut parent = vec![usize::MAX; nv];
        let mut heap = BinaryHeap::new();
        dist[net.source] = Some(0);
        heap.push(Reverse((0i128, net.source)));
        while let Some(Reverse((d, u))) = heap.pop() {
            if dist[u] != Some(d) {
                continue;
            }
            for &slot in &adj[u] {
                if residual[slot] == 0 {
                    continue;
                }
                let v = slot_head(net, slot);
                let nd = d + slot_cost(slot) + potential[u] - potential[v];
                debug_assert!(nd >= d, "reduced costs stay non-negative");
                if dist[v].is_none_or(|old| nd < old) {
                    dist[v] = Some(nd);
                    parent[v] = slot;
                    heap.push(Reverse((nd, v)));
                }
            }
        }
        let Some(sink_dist) = dist[net.sink] else {
            return Err(Error::InfeasibleFlow {
                required,
                max: required - remaining,
            });
        };
        for v in 0..nv {
            if let Some(d) = dist[v] {
                potential[v] += d.min(sink_dist);
            }
        }
        let mut bottleneck = remaining;
        let mut v = net.sink;
        while v != net.source {
            let slot = parent[v];
            bottleneck = bottleneck.min(residual[slot]);
            v = slot_tail(net, slot);
        }
        let mut v = net.sink;
        while v != net.source {
            let slot = parent[v];
            residual[slot] -= bottleneck;
            residual[slot ^ 1] += bottleneck;
            v = slot_tail(net, slot);
        }
        remaining -= bottleneck;
    }

    Ok(FlowVector::from_values(
        (0..net.edges.len()).map(|e| residual[2 * e + 1]).collect(),
    ))
}
