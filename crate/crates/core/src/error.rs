use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("part {value} at position {index} is not positive")]
    NonPositivePart { index: usize, value: i64 },
    #[error("parts are not weakly decreasing at position {index}")]
    NotWeaklyDecreasing { index: usize },
    #[error("the empty partition has no smallest or largest part")]
    EmptyPartition,
    #[error("invalid multiplicity {0}")]
    InvalidMultiplicity(usize),
    #[error("count table covers n <= {max_n}, but n = {needed} is required")]
    TableCoverage { needed: i64, max_n: usize },
    #[error("max_n = {requested} exceeds the configured limit {limit}")]
    ResourceLimit { requested: usize, limit: usize },
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("{map} map precondition violated by {partition}: {reason}")]
    Precondition {
        map: &'static str,
        partition: String,
        reason: String,
    },
    #[error("unknown bijection map {0:?} (expected A, B, C, D or L)")]
    UnknownMap(String),
    #[error("shift-0 coefficient of {label} is {coefficient}, expected +1 or -1")]
    NotNormalizable { label: String, coefficient: i64 },
    #[error(transparent)]
    Oeis(#[from] crate::oeis::OeisError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
