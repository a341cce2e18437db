use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is even; an odd prime is required")]
    EvenPrime(u64),
    #[error("{g} is not a primitive root modulo {p}")]
    NotPrimitiveRoot { p: u64, g: u64 },
    #[error("cannot factor {0}: input must be at least 2")]
    FactorizeTooSmall(u64),
    #[error("{x} is divisible by {p}; the zero class has no canonical representative")]
    ZeroResidue { x: i64, p: u64 },
    #[error("character index {k} out of range for modulus {p} (expected 0..={max})", max = .p - 2)]
    CharacterIndex { p: u64, k: u64 },
    #[error("characters belong to different groups: (p={p1}, g={g1}) vs (p={p2}, g={g2})")]
    MismatchedCharacters { p1: u64, g1: u64, p2: u64, g2: u64 },
    #[error("row index {index} out of range for order {order}")]
    RowIndex { index: usize, order: usize },
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("malformed matrix text: {0}")]
    Parse(String),
    #[error("block count must be at least 1")]
    ZeroBlocks,
    #[error("enumerating {p}^{dimension} codewords exceeds the limit of {limit}")]
    EnumerationBound {
        p: u64,
        dimension: usize,
        limit: u64,
    },
    #[error("p = {p} exceeds the supported range for {what} (max {max})")]
    OutOfRange {
        p: u64,
        what: &'static str,
        max: u64,
    },
    #[error("unknown graph format '{0}' (expected edge_list or adjacency)")]
    UnknownFormat(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
