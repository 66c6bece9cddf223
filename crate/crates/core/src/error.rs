use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cyclotomic number {0} is not rational")]
    NotRational(String),

    #[error("group closure exceeded the order cap of {cap}")]
    OrderCapExceeded { cap: usize },

    #[error("element order exceeds cap {cap}")]
    ElementOrderExceeded { cap: usize },

    #[error("eigenvalue multiplicity {value} is not a nonnegative integer")]
    BadEigenvalueMultiplicity { value: String },

    #[error("generated group for stratum {index} has order {found}, expected {expected}")]
    GroupOrderMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invariant dimension for {lambda} on stratum {stratum} is {value}, not a nonnegative integer")]
    BadInvariantDimension {
        lambda: String,
        stratum: usize,
        value: String,
    },

    #[error("negative multiplicity {value} for {component} in the restriction of {lambda}")]
    NegativeMultiplicity {
        lambda: String,
        component: String,
        value: String,
    },

    #[error("character sectors disagree for {lambda}: {detail}")]
    SectorMismatch { lambda: String, detail: String },

    #[error("{provider} data unavailable; supply extension file ({option}) covering {lambda}")]
    Coverage {
        provider: &'static str,
        option: &'static str,
        lambda: String,
    },

    #[error("bootstrap system is rank deficient (rank {rank}, need {needed})")]
    RankDeficient { rank: usize, needed: usize },

    #[error(
        "bootstrap row {lambda} is inconsistent: table value {expected}, solution gives {found}"
    )]
    InconsistentSystem {
        lambda: String,
        expected: String,
        found: String,
    },

    #[error("bootstrap solution for {mu} is not an integer: {value}")]
    NonIntegralSolution { mu: String, value: String },

    #[error("{path}:{line}: {message}")]
    TableParse {
        path: String,
        line: usize,
        message: String,
    },

    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    pub fn is_coverage(&self) -> bool {
        matches!(self, Error::Coverage { .. })
    }
}
