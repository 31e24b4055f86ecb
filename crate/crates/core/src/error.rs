use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("power of a non-positive base")]
    NonPositiveBase,
    #[error("result exceeds the representable range")]
    Overflow,
    #[error("invalid precision context: {0}")]
    BadContext(String),
    #[error("invalid tuple: {0}")]
    InvalidTuple(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("bad parameters for {name}: {reason}")]
    BadParams { name: String, reason: String },
    #[error("{0} has no complementary inequality")]
    NoComplement(String),
    #[error("point lies outside the validity set")]
    OutsideValidity,
    #[error("witness {0} is one-way")]
    UnsupportedDirection(String),
    #[error("index m={m} must satisfy 2 <= m < n={n}")]
    BadIndex { m: usize, n: usize },
    #[error("exponents r, s, t must be pairwise distinct")]
    DegenerateExponents,
    #[error("no sampler registered for {0}")]
    SamplerMissing(String),
    #[error("sampler for {0} could not produce a valid point")]
    SamplerExhausted(String),
    #[error("grid point outside the domain: {0}")]
    GridOutsideDomain(String),
    #[error("arity mismatch: {0}")]
    Arity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
