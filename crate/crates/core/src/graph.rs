//! State/system digraphs, strongly connected components and the condensation.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::system::StructuredSystem;

/// Directed graph as sorted adjacency lists without duplicate arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    adj: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn new(
        vertex_count: usize,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut adj = vec![Vec::new(); vertex_count];
        for (from, to) in arcs {
            if from >= vertex_count || to >= vertex_count {
                return Err(Error::EntryOutOfRange {
                    row: from,
                    col: to,
                    rows: vertex_count,
                    cols: vertex_count,
                });
            }
            adj[from].push(to);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Self { adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_arc(&self, from: usize, to: usize) -> bool {
        self.adj[from].binary_search(&to).is_ok()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(v, list)| list.iter().map(move |&w| (v, w)))
    }

    pub fn arc_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }
}

/// Digraph on the state vertices: arc `j -> i` for every pattern entry
/// `(i, j)` of the state matrix (column index influences row index).
pub fn build_state_digraph(sys: &StructuredSystem) -> Digraph {
    let arcs = sys.a().entries().map(|(i, j)| (j, i));
    Digraph::new(sys.n(), arcs).expect("validated pattern entries are in range")
}

/// Digraph on `n + m` vertices: the state digraph plus one arc
/// `u_j -> x_i` (vertex `n + j` to vertex `i`) per input pattern entry.
pub fn build_system_digraph(sys: &StructuredSystem) -> Digraph {
    let n = sys.n();
    let state_arcs = sys.a().entries().map(|(i, j)| (j, i));
    let input_arcs = sys.b().entries().map(move |(i, j)| (n + j, i));
    Digraph::new(n + sys.m(), state_arcs.chain(input_arcs))
        .expect("validated pattern entries are in range")
}

/// Strongly connected components with their condensation DAG.
///
/// Component ids are ordered by the smallest vertex each component contains,
/// so the decomposition of a given graph is unique. `non_top_linked` lists,
/// in ascending order, the component ids with no incoming condensation arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccDecomposition {
    pub component_of: Vec<usize>,
    pub components: Vec<Vec<usize>>,
    pub dag_edges: Vec<(usize, usize)>,
    pub non_top_linked: Vec<usize>,
}

impl SccDecomposition {
    pub fn count(&self) -> usize {
        self.components.len()
    }

    /// Number of non-top-linked components.
    pub fn q(&self) -> usize {
        self.non_top_linked.len()
    }
}

pub fn scc_decompose(g: &Digraph) -> SccDecomposition {
    let n = g.vertex_count();
    let mut components = tarjan(g);

    // Deterministic ids: order components by their smallest vertex.
    for comp in &mut components {
        comp.sort_unstable();
    }
    components.sort_unstable_by_key(|comp| comp[0]);

    let mut component_of = vec![usize::MAX; n];
    for (id, comp) in components.iter().enumerate() {
        for &v in comp {
            component_of[v] = id;
        }
    }

    let mut dag_edges = BTreeSet::new();
    for (v, w) in g.arcs() {
        let (cv, cw) = (component_of[v], component_of[w]);
        if cv != cw {
            dag_edges.insert((cv, cw));
        }
    }

    let mut has_incoming = vec![false; components.len()];
    for &(_, to) in &dag_edges {
        has_incoming[to] = true;
    }
    let non_top_linked = (0..components.len())
        .filter(|&id| !has_incoming[id])
        .collect();

    SccDecomposition {
        component_of,
        components,
        dag_edges: dag_edges.into_iter().collect(),
        non_top_linked,
    }
}

/// Iterative Tarjan; components come out in reverse topological order.
fn tarjan(g: &Digraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut discovery = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut next_discovery = 0usize;
    let mut components = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if discovery[root] != usize::MAX {
            continue;
        }
        call.push((root, 0));
        while let Some(&(v, child)) = call.last() {
            if child == 0 {
                discovery[v] = next_discovery;
                low[v] = next_discovery;
                next_discovery += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if child < g.out_neighbors(v).len() {
                call.last_mut().unwrap().1 += 1;
                let w = g.out_neighbors(v)[child];
                if discovery[w] == usize::MAX {
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(discovery[w]);
                }
            } else {
                call.pop();
                if let Some(&(parent, _)) = call.last() {
                    low[parent] = low[parent].min(low[v]);
                }
                if low[v] == discovery[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().expect("tarjan stack underflow");
                        on_stack[w] = false;
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    components.push(comp);
                }
            }
        }
    }
    components
}
