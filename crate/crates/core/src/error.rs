use thiserror::Error;

/// Errors produced by partition parsing, set arithmetic and evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse partition: {0}")]
    ParsePartition(String),
    #[error("size mismatch: |lambda| = {lambda} but |mu| = {mu}")]
    SizeMismatch { lambda: u64, mu: u64 },
    #[error("{what} = {got} exceeds bound {bound}")]
    BoundExceeded {
        what: &'static str,
        got: u64,
        bound: u64,
    },
    #[error("requested beta-set length {requested} is shorter than the partition length {required}")]
    BetaLengthTooShort { requested: usize, required: usize },
    #[error("ordered beta-set is not proper: entries must be distinct and nonnegative")]
    ImproperOrderedBetaSet,
    #[error("expected an ordered beta-set with exactly 2 entries, got {0}")]
    NotAPair(usize),
    #[error("alpha must consist of odd parts, found even part {0}")]
    EvenPartInAlpha(u32),
    #[error("j = {j} is out of range: need 0 <= j <= n - j with n = {n}")]
    JOutOfRange { j: u64, n: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
