use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Which Latin-square line failed validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    Row,
    Col,
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::Row => f.write_str("row"),
            Axis::Col => f.write_str("col"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("table is empty")]
    Empty,
    #[error("table of order {order} exceeds the configured cap {cap}")]
    OrderTooLarge { order: usize, cap: usize },
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("entry {entry} at ({row}, {col}) is outside 0..{order}")]
    OutOfRange {
        entry: i64,
        row: usize,
        col: usize,
        order: usize,
    },
    #[error("not a quasigroup: {axis} {index} repeats an element")]
    NotLatin { axis: Axis, index: usize },
    #[error("quasigroup has no two-sided identity element")]
    NoIdentity,
    #[error("permutation degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("not a permutation: {0}")]
    NotPermutation(String),
    #[error("group closure exceeded the cap of {0} elements")]
    CapExceeded(usize),
    #[error("subgroup is not contained in the ambient group")]
    NotSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid involution: {0}")]
    InvalidInvolution(String),
    #[error("invalid phi map: {0}")]
    InvalidPhi(String),
    #[error("(sigma, phi)-conditions fail: {0}")]
    ConditionsFail(String),
    #[error("axiom failure: {0}")]
    AxiomFailure(String),
    #[error("product is ill-defined on cosets at pair ({0}, {1})")]
    IllDefined(usize, usize),
    #[error("coset of I meets phi(G_sigma) in {count} elements (coset of {element})")]
    UniquenessViolation { element: usize, count: usize },
    #[error("map is not a loop homomorphism at pair ({0}, {1})")]
    HomomorphismFailure(usize, usize),
    #[error("search exceeded its budget of {0} nodes")]
    SearchBudgetExceeded(u64),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
