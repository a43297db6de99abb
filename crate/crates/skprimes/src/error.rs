use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("ring order {order} exceeds the configured cap of {cap}")]
    OrderCap { order: usize, cap: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("capability missing: {0}")]
    CapabilityMissing(String),

    #[error("base ring mismatch: {0} vs {1}")]
    BaseRingMismatch(String, String),

    #[error("prime-set computation left undecided primes: {0:?}")]
    PartialUnknown(Vec<String>),

    #[error("search space too large: {0}")]
    SearchSpace(String),
}

pub type Result<T> = std::result::Result<T, Error>;
