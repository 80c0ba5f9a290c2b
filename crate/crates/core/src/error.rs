use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Fixed-width scalar arithmetic overflowed; retry with `BigInt`.
    #[error("integer overflow in fixed-width arithmetic")]
    Overflow,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("invalid Galois lattice: {0}")]
    InvalidModule(String),

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("invalid root datum: {0}")]
    InvalidRootDatum(String),

    #[error("unsupported group: {0}")]
    Unsupported(String),

    /// A vector that should lie in a lattice does not.
    #[error("not in lattice: {0}")]
    NotInLattice(String),

    #[error("degree {degree} outside the allowed range {lo}..={hi}")]
    DegreeOutOfRange { degree: i64, lo: i64, hi: i64 },

    #[error("computation needs {entries} matrix entries, budget is {budget}")]
    BudgetExceeded { entries: usize, budget: usize },
}

impl Error {
    pub fn is_overflow(&self) -> bool {
        matches!(self, Error::Overflow)
    }
}
