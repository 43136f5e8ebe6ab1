use thiserror::Error;

use crate::graph::Atom;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Term text does not match the grammar. `pos` is a byte offset.
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("invalid graph document: {0}")]
    GraphFormat(String),

    #[error("invalid identifier `{0}`")]
    InvalidIdentifier(String),

    #[error("unknown atom `{0}`")]
    UnknownAtom(String),

    #[error("atom `{0}` is not part of the graph")]
    ForeignAtom(Atom),

    #[error("duplicate atom `{0}`")]
    DuplicateAtom(String),

    #[error("duplicate component index `{0}`")]
    DuplicateComponent(String),

    #[error("component `{0}` is not a base graph (nested products are rejected)")]
    NestedProduct(String),

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("bracket budget exceeded: more than {limit} members")]
    BracketBudget { limit: usize },

    #[error("representative budget exceeded: more than {limit} term vectors")]
    VectorBudget { limit: usize },

    #[error("graph too large for the oracle: {atoms} atoms (limit {limit})")]
    GraphTooLarge { atoms: usize, limit: usize },

    #[error("no engine registered for component `{0}`")]
    MissingEngine(String),
}

impl Error {
    /// True for the two resource-limit errors.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BracketBudget { .. } | Error::VectorBudget { .. })
    }
}
