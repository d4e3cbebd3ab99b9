//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("preference must rank at least one option")]
    EmptyPreference,
    #[error("preference is not a permutation: {reason}")]
    NotAPermutation { reason: String },
    #[error("invalid lottery: {reason}")]
    InvalidLottery { reason: String },
    #[error("quantile parameter {value} outside [0, 1]")]
    QuantileOutOfRange { value: String },
    #[error("invalid matching lottery: {reason}")]
    InvalidMatchingLottery { reason: String },
    #[error("invalid instance: {reason}")]
    InvalidInstance { reason: String },
    #[error("rank requirement out of range: agent {agent} requires {requirement}, valid range 1..={max}")]
    RankRequirementOutOfRange {
        agent: usize,
        requirement: usize,
        max: usize,
    },
    #[error("constraint set is not a rank prefix for agent {agent}")]
    NotAPrefix { agent: usize },
    #[error("{0}")]
    Unsupported(String),
}
