//! The two-sorted language over coalitions and agendas, its relational
//! semantics, and brute-force correspondence checks.

pub mod conditions;
pub mod correspondence;
pub mod equivalence;
pub mod fixtures;
pub mod frame;
pub mod term;

use crate::coalition::CoalitionError;
use crate::hetero::HeteroError;
use crate::lattice::LatticeError;
use serde::Serialize;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Sort {
    Coalition,
    Agenda,
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sort::Coalition => "coalition",
            Sort::Agenda => "agenda",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogicError {
    #[error("{sort} atom {index} has no value")]
    UnassignedAtom { sort: Sort, index: usize },
    #[error("sequent sides have different sorts ({lhs} and {rhs})")]
    SortError { lhs: Sort, rhs: Sort },
    #[error("{atoms} {sort} atoms exceed the cap of {cap}")]
    AtomCap { sort: Sort, atoms: usize, cap: usize },
    #[error("structure with {agents} agents and {issues} issues exceeds the cap")]
    StructureCap { agents: usize, issues: usize },
    #[error("too many {0} for bounded enumeration")]
    TermCap(&'static str),
    #[error("structures need at least one agent and one issue")]
    EmptyCarrier,
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("map does not cover the source carriers")]
    MapMismatch,
    #[error("no correspondence pair {0}")]
    UnknownPair(usize),
    #[error("no fixture case {0}")]
    UnknownCase(u8),
    #[error("invalid frame JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Hetero(#[from] HeteroError),
    #[error(transparent)]
    Coalition(#[from] CoalitionError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

impl LogicError {
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            LogicError::AtomCap { .. }
                | LogicError::StructureCap { .. }
                | LogicError::TermCap(_)
                | LogicError::Lattice(LatticeError::NotMaterialized { .. })
                | LogicError::Hetero(HeteroError::Lattice(LatticeError::NotMaterialized { .. }))
        )
    }
}

pub type Result<T> = std::result::Result<T, LogicError>;
