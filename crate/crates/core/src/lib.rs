//! Structural controllability analysis and minimum-cost input selection for
//! sparse structured systems.
//!
//! A structured system is a pair of sparsity patterns: a square state pattern
//! and a state-by-input pattern, optionally with a non-negative cost per
//! input column. Only the zero/nonzero structure matters; the numeric values
//! of the nonzero entries are treated as free parameters.
//!
//! The crate provides:
//!
//! - two independent deciders for structural controllability: the classical
//!   graph conditions (accessibility plus absence of dilations, via strongly
//!   connected components and bipartite matching) and an equivalent max-flow
//!   condition on a layered flow network built from the system,
//! - an approximate solver for the NP-hard problem of picking a cheapest
//!   subset of the given input columns that keeps the system controllable,
//!   built from a minimum-weight bipartite matching stage and a greedy
//!   component-covering stage, with a certified approximation factor equal to
//!   the maximum in-degree of the input-side vertices of the flow network,
//! - exact brute-force oracles (input-subset enumeration and integral-flow
//!   enumeration) for validating the solvers at small sizes,
//! - deterministic random instance generators for several graph families.
//!
//! Costs are exact rationals throughout, so optimality statements are checked
//! with zero tolerance.

pub mod controllability;
pub mod error;
#[cfg(test)]
pub(crate) mod fixtures;
pub mod flow;
pub mod generate;
pub mod graph;
pub mod matching;
pub mod oracle;
pub mod rat;
pub mod selection;
pub mod system;

pub use error::{Error, Result};
pub use rat::Rat;
pub use system::{InputSet, Restriction, StructuredMatrix, StructuredSystem};
