//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("argument must be a positive integer")]
    ZeroInput,

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("group order {order} exceeds the configured cap {cap}")]
    CapExceeded { order: usize, cap: usize },

    #[error("generator degrees differ: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("not a permutation: {0}")]
    BadPermutation(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("table violates the {law} law at row {row}, column {col}")]
    TableLaw {
        law: &'static str,
        row: usize,
        col: usize,
    },

    #[error(
        "ingested table of order {order} is above the associativity-check bound {bound}; \
         supply generators instead"
    )]
    UncheckableTable { order: usize, bound: usize },

    #[error("the supplied map is not an automorphism of {base}")]
    NotAutomorphism { base: String },

    #[error("automorphism iterated {k} times is not the identity map")]
    AutomorphismOrder { k: u64 },

    #[error("element set is not a subgroup")]
    NotASubgroup,

    #[error("element index {index} out of range for a group of order {order}")]
    IndexRange { index: usize, order: usize },

    #[error("{divisor} does not divide the group order {order}")]
    NotADivisor { divisor: u64, order: u64 },

    #[error(
        "psi_pi cross-check mismatch: decomposition route {via_decomposition}, \
         power-map route {via_power}"
    )]
    PsiPiMismatch {
        via_decomposition: u64,
        via_power: u64,
    },

    #[error("unknown preset {0:?}")]
    UnknownPreset(String),

    #[error("invalid group spec {spec:?}: {msg}")]
    BadSpec { spec: String, msg: String },

    #[error("invalid prime set {input:?}: {msg}")]
    BadPrimeSet { input: String, msg: String },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
