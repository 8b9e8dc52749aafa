//! Deterministic random instance families.
//!
//! Every family draws from a seeded stream, so an identical spec reproduces
//! an identical instance. The structured families keep their promises by
//! construction: `Cycle` instances have an irreducible state digraph,
//! `DecoupledDiagonal` instances have a perfect matching in the state
//! bipartite graph and one non-top-linked component per state, and `Chain`
//! and `Block` instances are always structurally controllable.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::rat::{rat, Rat};
use crate::system::{StructuredMatrix, StructuredSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Independent coin flips for every pattern cell.
    Erdos,
    /// Directed path over the states plus an input feeding the head.
    Chain,
    /// Directed cycle over all states plus random extra arcs.
    Cycle,
    /// Self-loop per state, dedicated input per state, random extras.
    DecoupledDiagonal,
    /// Strongly connected blocks arranged along a DAG of forward arcs.
    Block,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSpec {
    pub family: Family,
    pub n: usize,
    pub m: usize,
    pub density_a: f64,
    pub density_b: f64,
    pub cost_min: i64,
    pub cost_max: i64,
    pub blocks: usize,
    pub seed: u64,
}

impl GeneratorSpec {
    pub fn new(family: Family, n: usize, m: usize, seed: u64) -> Self {
        Self {
            family,
            n,
            m,
            density_a: 0.2,
            density_b: 0.3,
            cost_min: 1,
            cost_max: 1,
            blocks: 4.min(n.max(1)),
            seed,
        }
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<StructuredSystem> {
    check_spec(spec)?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let (n, m) = (spec.n, spec.m);

    let mut a_entries: Vec<(usize, usize)> = Vec::new();
    let mut b_entries: Vec<(usize, usize)> = Vec::new();

    match spec.family {
        Family::Erdos => {
            sprinkle(&mut rng, n, n, spec.density_a, &mut a_entries);
            sprinkle(&mut rng, n, m, spec.density_b, &mut b_entries);
        }
        Family::Chain => {
            a_entries.extend((0..n - 1).map(|i| (i + 1, i)));
            sprinkle(&mut rng, n, m, spec.density_b, &mut b_entries);
            // The head of the chain is the only source component; feeding it
            // also completes the matching, so the instance is controllable.
            b_entries.push((0, rng.random_range(0..m)));
        }
        Family::Cycle => {
            a_entries.extend((0..n).map(|i| ((i + 1) % n, i)));
            sprinkle(&mut rng, n, n, spec.density_a, &mut a_entries);
            sprinkle(&mut rng, n, m, spec.density_b, &mut b_entries);
            b_entries.push((rng.random_range(0..n), rng.random_range(0..m)));
        }
        Family::DecoupledDiagonal => {
            a_entries.extend((0..n).map(|i| (i, i)));
            b_entries.extend((0..n).map(|i| (i, i)));
            sprinkle(&mut rng, n, m, spec.density_b, &mut b_entries);
        }
        Family::Block => {
            let bounds = block_bounds(n, spec.blocks);
            for w in bounds.windows(2) {
                let (lo, hi) = (w[0], w[1]);
                if hi - lo == 1 {
                    a_entries.push((lo, lo));
                } else {
                    a_entries.extend((lo..hi).map(|i| (lo + (i + 1 - lo) % (hi - lo), i)));
                }
            }
            let mut incoming = vec![false; bounds.len() - 1];
            for upstream in 0..bounds.len() - 1 {
                for downstream in upstream + 1..bounds.len() - 1 {
                    if rng.random_bool(spec.density_a) {
                        let from = rng.random_range(bounds[upstream]..bounds[upstream + 1]);
                        let to = rng.random_range(bounds[downstream]..bounds[downstream + 1]);
                        a_entries.push((to, from));
                        incoming[downstream] = true;
                    }
                }
            }
            sprinkle(&mut rng, n, m, spec.density_b, &mut b_entries);
            for (block, seen) in incoming.iter().enumerate() {
                if !seen {
                    let state = rng.random_range(bounds[block]..bounds[block + 1]);
                    b_entries.push((state, rng.random_range(0..m)));
                }
            }
        }
    }

    let costs: Vec<Rat> = (0..m)
        .map(|_| rat(rng.random_range(spec.cost_min..=spec.cost_max) as i128))
        .collect();

    let a = StructuredMatrix::new(n, n, a_entries)?;
    let b = StructuredMatrix::new(n, m, b_entries)?;
    StructuredSystem::new(a, b, costs)
}

fn check_spec(spec: &GeneratorSpec) -> Result<()> {
    let fail = |msg: String| Err(Error::BadGenerator(msg));
    if spec.n == 0 {
        return fail("need at least one state".into());
    }
    if spec.m == 0 {
        return fail("need at least one input".into());
    }
    for (name, d) in [("density_a", spec.density_a), ("density_b", spec.density_b)] {
        if !(0.0..=1.0).contains(&d) {
            return fail(format!("{name} = {d} is outside [0, 1]"));
        }
    }
    if spec.cost_min < 0 || spec.cost_min > spec.cost_max {
        return fail(format!(
            "cost range [{}, {}] is invalid",
            spec.cost_min, spec.cost_max
        ));
    }
    if spec.family == Family::DecoupledDiagonal && spec.m < spec.n {
        return fail(format!(
            "decoupled-diagonal needs m >= n, got n = {} and m = {}",
            spec.n, spec.m
        ));
    }
    if spec.family == Family::Block && (spec.blocks == 0 || spec.blocks > spec.n) {
        return fail(format!(
            "block count {} must lie in [1, {}]",
            spec.blocks, spec.n
        ));
    }
    Ok(())
}

fn sprinkle(
    rng: &mut ChaCha8Rng,
    rows: usize,
    cols: usize,
    density: f64,
    out: &mut Vec<(usize, usize)>,
) {
    for i in 0..rows {
        for j in 0..cols {
            if rng.random_bool(density) {
                out.push((i, j));
            }
        }
    }
}

/// Near-equal contiguous block boundaries: `bounds[k]..bounds[k+1]`.
fn block_bounds(n: usize, blocks: usize) -> Vec<usize> {
    let mut bounds = Vec::with_capacity(blocks + 1);
    let (base, extra) = (n / blocks, n % blocks);
    let mut at = 0;
    bounds.push(0);
    for k in 0..blocks {
        at += base + usize::from(k < extra);
        bounds.push(at);
    }
    bounds
}
