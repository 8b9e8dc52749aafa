//! Bipartite graphs of a structured system, maximum-cardinality matching and
//! minimum-weight right-perfect matching.

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap, VecDeque};
use std::ops::Add;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rat::{scale_to_integers, Rat};
use crate::system::StructuredSystem;

/// Undirected bipartite graph with optional non-negative edge weights.
///
/// Left vertices are states (optionally followed by inputs); right vertices
/// are the primed state copies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    left_count: usize,
    right_count: usize,
    edges: Vec<(usize, usize)>,
    weights: Option<Vec<Rat>>,
}

impl BipartiteGraph {
    pub fn new(left_count: usize, right_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut edges = edges;
        edges.sort_unstable();
        check_edges(left_count, right_count, &edges)?;
        Ok(Self {
            left_count,
            right_count,
            edges,
            weights: None,
        })
    }

    pub fn new_weighted(
        left_count: usize,
        right_count: usize,
        weighted_edges: Vec<((usize, usize), Rat)>,
    ) -> Result<Self> {
        let mut weighted_edges = weighted_edges;
        weighted_edges.sort_unstable_by_key(|&(e, _)| e);
        let edges: Vec<_> = weighted_edges.iter().map(|&(e, _)| e).collect();
        check_edges(left_count, right_count, &edges)?;
        let weights: Vec<_> = weighted_edges.into_iter().map(|(_, w)| w).collect();
        if weights.iter().any(|w| *w < Rat::zero()) {
            return Err(Error::NegativeWeight);
        }
        Ok(Self {
            left_count,
            right_count,
            edges,
            weights: Some(weights),
        })
    }

    pub fn left_count(&self) -> usize {
        self.left_count
    }

    pub fn right_count(&self) -> usize {
        self.right_count
    }

    /// Edges in ascending `(left, right)` order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    /// Weights parallel to `edges()`, when present.
    pub fn weights(&self) -> Option<&[Rat]> {
        self.weights.as_deref()
    }

    pub fn edge_weight(&self, left: usize, right: usize) -> Option<Rat> {
        let weights = self.weights.as_ref()?;
        self.edges
            .binary_search(&(left, right))
            .ok()
            .map(|idx| weights[idx])
    }
}

fn check_edges(left: usize, right: usize, sorted_edges: &[(usize, usize)]) -> Result<()> {
    for &(l, r) in sorted_edges {
        if l >= left || r >= right {
            return Err(Error::EntryOutOfRange {
                row: l,
                col: r,
                rows: left,
                cols: right,
            });
        }
    }
    if sorted_edges.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::DuplicateEdge);
    }
    Ok(())
}

/// Bipartite graph of the state pattern alone: edge `(i, j)` whenever state
/// `x_i` influences state `x_j`.
pub fn build_state_bipartite(sys: &StructuredSystem) -> BipartiteGraph {
    let edges = sys.a().entries().map(|(i, j)| (j, i)).collect();
    BipartiteGraph::new(sys.n(), sys.n(), edges).expect("validated pattern entries are in range")
}

/// Bipartite graph of the full system: left vertices are the `n` states
/// followed by the `m` inputs. With `weighted`, state edges get weight zero
/// and the edge from input `j` gets that input's cost.
pub fn build_system_bipartite(sys: &StructuredSystem, weighted: bool) -> BipartiteGraph {
    let n = sys.n();
    let state_edges = sys.a().entries().map(|(i, j)| (j, i));
    let input_edges = sys.b().entries().map(|(i, j)| (n + j, i));
    if weighted {
        let weighted_edges = state_edges
            .map(|e| (e, Rat::zero()))
            .chain(input_edges.map(|e @ (l, _)| (e, sys.cost(l - n))))
            .collect();
        BipartiteGraph::new_weighted(n + sys.m(), n, weighted_edges)
    } else {
        let edges = state_edges.chain(input_edges).collect();
        BipartiteGraph::new(n + sys.m(), n, edges)
    }
    .expect("validated pattern entries are in range")
}

/// A matching: edge subset in which no vertex repeats on either side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut pairs: Vec<_> = pairs.into_iter().collect();
        pairs.sort_unstable();
        Self { pairs }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn cardinality(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn left_of_right(&self, right: usize) -> Option<usize> {
        self.pairs
            .iter()
            .find(|&&(_, r)| r == right)
            .map(|&(l, _)| l)
    }

    pub fn matches_left(&self, left: usize) -> bool {
        self.pairs.iter().any(|&(l, _)| l == left)
    }
}

/// Total weight of a matching inside a weighted graph.
pub fn matching_weight(g: &BipartiteGraph, m: &Matching) -> Result<Rat> {
    if !g.is_weighted() {
        return Err(Error::UnweightedGraph);
    }
    let mut total = Rat::zero();
    for &(l, r) in m.pairs() {
        total += g
            .edge_weight(l, r)
            .ok_or_else(|| Error::InvalidMatching(format!("edge ({l}, {r}) not in graph")))?;
    }
    Ok(total)
}

/// Maximum-cardinality matching (Hopcroft-Karp).
pub fn max_matching(g: &BipartiteGraph) -> Matching {
    let left = g.left_count;
    let mut adj = vec![Vec::new(); left];
    for &(l, r) in &g.edges {
        adj[l].push(r);
    }
    let mut match_left = vec![usize::MAX; left];
    let mut match_right = vec![usize::MAX; g.right_count];

    loop {
        // BFS layering from the free left vertices.
        let mut dist = vec![usize::MAX; left];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for l in 0..left {
            if match_left[l] == usize::MAX {
                dist[l] = 0;
                queue.push_back(l);
            }
        }
        let mut reachable_free_right = false;
        while let Some(l) = queue.pop_front() {
            for &r in &adj[l] {
                let l2 = match_right[r];
                if l2 == usize::MAX {
                    reachable_free_right = true;
                } else if dist[l2] == usize::MAX {
                    dist[l2] = dist[l] + 1;
                    queue.push_back(l2);
                }
            }
        }
        if !reachable_free_right {
            break;
        }

        fn augment(
            l: usize,
            adj: &[Vec<usize>],
            dist: &mut [usize],
            match_left: &mut [usize],
            match_right: &mut [usize],
        ) -> bool {
            for idx in 0..adj[l].len() {
                let r = adj[l][idx];
                let l2 = match_right[r];
                if l2 == usize::MAX
                    || (dist[l2] == dist[l] + 1 && augment(l2, adj, dist, match_left, match_right))
                {
                    match_left[l] = r;
                    match_right[r] = l;
                    return true;
                }
            }
            dist[l] = usize::MAX;
            false
        }

        let mut advanced = false;
        for l in 0..left {
            if match_left[l] == usize::MAX && dist[l] == 0 {
                advanced |= augment(l, &adj, &mut dist, &mut match_left, &mut match_right);
            }
        }
        if !advanced {
            break;
        }
    }

    Matching::from_pairs(
        match_left
            .iter()
            .enumerate()
            .filter(|&(_, &r)| r != usize::MAX)
            .map(|(l, &r)| (l, r)),
    )
}

/// Minimum-weight matching that saturates every right vertex; left vertices
/// may stay unmatched. Among optimal matchings, one with the fewest
/// nonzero-weight edges is returned. Fails when no right-perfect matching
/// exists.
pub fn min_weight_perfect_matching(g: &BipartiteGraph) -> Result<Matching> {
    let weights = g.weights().ok_or(Error::UnweightedGraph)?;
    let penalties: Vec<i64> = weights
        .iter()
        .map(|w| if w.is_zero() { 0 } else { 1 })
        .collect();
    solve_assignment(g, &penalties)
}

/// Like [`min_weight_perfect_matching`], with a caller-supplied secondary
/// objective: among minimum-weight matchings, first use as few edges leaving
/// `avoid_left` as possible, then prefer `prefer_left` members for whichever
/// avoided edges remain.
pub fn min_weight_perfect_matching_biased(
    g: &BipartiteGraph,
    avoid_left: &BTreeSet<usize>,
    prefer_left: &BTreeSet<usize>,
) -> Result<Matching> {
    if !g.is_weighted() {
        return Err(Error::UnweightedGraph);
    }
    let tier = (g.right_count + 1) as i64;
    let penalties: Vec<i64> = g
        .edges
        .iter()
        .map(|&(l, _)| {
            if avoid_left.contains(&l) {
                tier + i64::from(!prefer_left.contains(&l))
            } else {
                0
            }
        })
        .collect();
    solve_assignment(g, &penalties)
}

/// Lexicographic cost: exact scaled weight first, tie-break units second.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct BiasCost {
    weight: i128,
    tie: i64,
}

impl BiasCost {
    const ZERO: BiasCost = BiasCost { weight: 0, tie: 0 };

    fn minus(self, other: BiasCost) -> BiasCost {
        BiasCost {
            weight: self.weight - other.weight,
            tie: self.tie - other.tie,
        }
    }
}

impl Add for BiasCost {
    type Output = BiasCost;
    fn add(self, other: BiasCost) -> BiasCost {
        BiasCost {
            weight: self.weight + other.weight,
            tie: self.tie + other.tie,
        }
    }
}

/// Successive shortest augmenting paths with potentials on the assignment
/// network source -> right -> left -> sink, all capacities one.
fn solve_assignment(g: &BipartiteGraph, penalties: &[i64]) -> Result<Matching> {
    let weights = g.weights().ok_or(Error::UnweightedGraph)?;
    if g.right_count > g.left_count {
        return Err(Error::NoPerfectMatching);
    }
    let (scaled, _) = scale_to_integers(weights);

    let vertex_count = 2 + g.right_count + g.left_count;
    let source = 0;
    let sink = vertex_count - 1;
    let right_vertex = |r: usize| 1 + r;
    let left_vertex = |l: usize| 1 + g.right_count + l;

    let mut net = ResidualNet::new(vertex_count);
    for r in 0..g.right_count {
        net.add_edge(source, right_vertex(r), BiasCost::ZERO);
    }
    let mut bip_edge_ids = Vec::with_capacity(g.edges.len());
    for (idx, &(l, r)) in g.edges.iter().enumerate() {
        let cost = BiasCost {
            weight: scaled[idx],
            tie: penalties[idx],
        };
        bip_edge_ids.push(net.add_edge(right_vertex(r), left_vertex(l), cost));
    }
    for l in 0..g.left_count {
        net.add_edge(left_vertex(l), sink, BiasCost::ZERO);
    }

    let sent = net.send(source, sink, g.right_count as u64);
    if sent < g.right_count as u64 {
        return Err(Error::NoPerfectMatching);
    }

    Ok(Matching::from_pairs(
        g.edges
            .iter()
            .zip(&bip_edge_ids)
            .filter(|&(_, &id)| net.flow(id) > 0)
            .map(|(&e, _)| e),
    ))
}

/// Unit-capacity residual network with lexicographic costs.
struct ResidualNet {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    residual: Vec<u64>,
    cost: Vec<BiasCost>,
}

impl ResidualNet {
    fn new(vertex_count: usize) -> Self {
        Self {
            adj: vec![Vec::new(); vertex_count],
            to: Vec::new(),
            residual: Vec::new(),
            cost: Vec::new(),
        }
    }

    fn add_edge(&mut self, from: usize, to: usize, cost: BiasCost) -> usize {
        let id = self.to.len();
        self.adj[from].push(id);
        self.to.push(to);
        self.residual.push(1);
        self.cost.push(cost);
        self.adj[to].push(id + 1);
        self.to.push(from);
        self.residual.push(0);
        self.cost.push(BiasCost::ZERO.minus(cost));
        id
    }

    fn flow(&self, forward_id: usize) -> u64 {
        self.residual[forward_id ^ 1]
    }

    /// Sends up to `want` units, one shortest path at a time. Returns the
    /// amount actually sent.
    fn send(&mut self, source: usize, sink: usize, want: u64) -> u64 {
        let n = self.adj.len();
        let mut potential = vec![BiasCost::ZERO; n];
        let mut sent = 0;
        while sent < want {
            let mut dist: Vec<Option<BiasCost>> = vec![None; n];
            let mut parent_edge = vec![usize::MAX; n];
            let mut heap = BinaryHeap::new();
            dist[source] = Some(BiasCost::ZERO);
            heap.push(Reverse((BiasCost::ZERO, source)));
            while let Some(Reverse((d, u))) = heap.pop() {
                if dist[u] != Some(d) {
                    continue;
                }
                for &e in &self.adj[u] {
                    if self.residual[e] == 0 {
                        continue;
                    }
                    let v = self.to[e];
                    let nd = d + self.cost[e] + potential[u].minus(potential[v]);
                    if dist[v].is_none_or(|old| nd < old) {
                        dist[v] = Some(nd);
                        parent_edge[v] = e;
                        heap.push(Reverse((nd, v)));
                    }
                }
            }
            let Some(sink_dist) = dist[sink] else {
                break;
            };
            for v in 0..n {
                if let Some(d) = dist[v] {
                    potential[v] = potential[v] + d.min(sink_dist);
                }
            }
            let mut v = sink;
            while v != source {
                let e = parent_edge[v];
                self.residual[e] -= 1;
                self.residual[e ^ 1] += 1;
                v = self.to[e ^ 1];
            }
            sent += 1;
        }
        sent
    }
}
