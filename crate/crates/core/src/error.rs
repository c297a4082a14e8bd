use alloc::string::String;

use crate::weights::Weight;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("rank {n} is not allowed for {family}")]
    RankOutOfRange { family: &'static str, n: usize },
    #[error("node {node} out of range (rank {rank})")]
    NodeOutOfRange { node: usize, rank: usize },
    #[error("node 0 only acts on weights of positive level")]
    NodeZeroAtLevelZero,
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("level mismatch: {left} vs {right}")]
    LevelMismatch { left: i64, right: i64 },
    #[error("weight {0} is not dominant")]
    NotDominant(Weight),
    #[error("level must be positive, got {0}")]
    NonPositiveLevel(i64),
    #[error("greedy ascent did not reach a dominant weight within {0} steps")]
    AscentCap(usize),
    #[error("not a character: coefficient {coeff} at weight {weight}")]
    NotACharacter { weight: Weight, coeff: String },
    #[error("partition {0} is neither rectangular nor a special fat hook")]
    UnsupportedPartition(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("{lift} is not a dominant lift of {target}")]
    InvalidLift { lift: Weight, target: Weight },
    #[error("affine data inconsistent: {0}")]
    InconsistentData(String),
    #[error("parse error: {0}")]
    Parse(String),
}
