//! Domain types: sparsity patterns, structured systems, input index sets.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rat::Rat;

/// Zero/nonzero sparsity pattern of a matrix. Entries are 0-based `(row, col)`
/// pairs; duplicates collapse by set semantics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuredMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeSet<(usize, usize)>,
}

impl StructuredMatrix {
    pub fn new(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (row, col) in entries {
            if row >= rows || col >= cols {
                return Err(Error::EntryOutOfRange {
                    row,
                    col,
                    rows,
                    cols,
                });
            }
            set.insert((row, col));
        }
        Ok(Self {
            rows,
            cols,
            entries: set,
        })
    }

    pub fn empty(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: BTreeSet::new(),
        }
    }

    /// Diagonal pattern on a square shape, `(i, i)` for every row.
    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            entries: (0..n).map(|i| (i, i)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        self.entries.contains(&(row, col))
    }

    /// Entries in ascending `(row, col)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.entries.iter().copied()
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.len()
    }

    pub fn transpose(&self) -> StructuredMatrix {
        StructuredMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|&(r, c)| (c, r)).collect(),
        }
    }
}

/// A structured system: an `n x n` state pattern, an `n x m` input pattern
/// and one non-negative cost per input column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuredSystem {
    a: StructuredMatrix,
    b: StructuredMatrix,
    costs: Vec<Rat>,
}

impl StructuredSystem {
    pub fn new(a: StructuredMatrix, b: StructuredMatrix, costs: Vec<Rat>) -> Result<Self> {
        validate_parts(&a, &b, &costs)?;
        Ok(Self { a, b, costs })
    }

    pub fn with_unit_costs(a: StructuredMatrix, b: StructuredMatrix) -> Result<Self> {
        let costs = vec![Rat::from_integer(1); b.cols()];
        Self::new(a, b, costs)
    }

    /// Number of states.
    pub fn n(&self) -> usize {
        self.a.rows()
    }

    /// Number of inputs.
    pub fn m(&self) -> usize {
        self.b.cols()
    }

    pub fn a(&self) -> &StructuredMatrix {
        &self.a
    }

    pub fn b(&self) -> &StructuredMatrix {
        &self.b
    }

    pub fn input_costs(&self) -> &[Rat] {
        &self.costs
    }

    pub fn cost(&self, j: usize) -> Rat {
        self.costs[j]
    }

    /// Re-checks every construction invariant.
    pub fn validate(&self) -> Result<()> {
        validate_parts(&self.a, &self.b, &self.costs)
    }

    /// Same patterns with a different cost vector.
    pub fn replace_costs(&self, costs: Vec<Rat>) -> Result<StructuredSystem> {
        Self::new(self.a.clone(), self.b.clone(), costs)
    }

    /// Keeps only the input columns in `sel`, reindexed densely. The state
    /// pattern is unchanged; `original_index` maps new column -> old column.
    pub fn restrict_inputs(&self, sel: &InputSet) -> Result<Restriction> {
        let m = self.m();
        for j in sel.iter() {
            if j >= m {
                return Err(Error::IndexOutOfRange { index: j, m });
            }
        }
        let original_index: Vec<usize> = sel.iter().collect();
        let mut new_of_old = vec![usize::MAX; m];
        for (new, &old) in original_index.iter().enumerate() {
            new_of_old[old] = new;
        }
        let b_entries = self
            .b
            .entries()
            .filter(|&(_, j)| new_of_old[j] != usize::MAX)
            .map(|(i, j)| (i, new_of_old[j]));
        let b = StructuredMatrix::new(self.n(), original_index.len(), b_entries)?;
        let costs = original_index.iter().map(|&j| self.costs[j]).collect();
        let system = StructuredSystem::new(self.a.clone(), b, costs)?;
        Ok(Restriction {
            system,
            original_index,
        })
    }
}

fn validate_parts(a: &StructuredMatrix, b: &StructuredMatrix, costs: &[Rat]) -> Result<()> {
    if a.rows() != a.cols() {
        return Err(Error::DimensionMismatch(format!(
            "state pattern must be square, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    if a.rows() == 0 {
        return Err(Error::DimensionMismatch(
            "system needs at least one state".to_string(),
        ));
    }
    if b.rows() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "input pattern has {} rows but the system has {} states",
            b.rows(),
            a.rows()
        )));
    }
    if costs.len() != b.cols() {
        return Err(Error::DimensionMismatch(format!(
            "cost vector has {} entries but there are {} inputs",
            costs.len(),
            b.cols()
        )));
    }
    for (index, c) in costs.iter().enumerate() {
        if *c < Rat::zero() {
            return Err(Error::NegativeCost { index });
        }
    }
    Ok(())
}

/// Sorted, duplicate-free set of input column indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct InputSet(BTreeSet<usize>);

impl InputSet {
    pub fn new(indices: impl IntoIterator<Item = usize>) -> Self {
        Self(indices.into_iter().collect())
    }

    /// The full index set `{0, .., m-1}`.
    pub fn full(m: usize) -> Self {
        Self((0..m).collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, j: usize) -> bool {
        self.0.contains(&j)
    }
}

impl FromIterator<usize> for InputSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Self(iter.into_iter().collect())
    }
}

/// Result of restricting a system to a subset of its input columns.
#[derive(Debug, Clone)]
pub struct Restriction {
    pub system: StructuredSystem,
    /// `original_index[new_col] == old_col`.
    pub original_index: Vec<usize>,
}
