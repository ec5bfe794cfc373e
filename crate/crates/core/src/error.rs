use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("cyclic modulus must be at least 2, got {0}")]
    BadModulus(String),
    #[error("cannot factor modulus {0}")]
    Unfactorable(String),
    #[error("group must be nontrivial")]
    TrivialGroup,
    #[error("degree must be at least 1, got {0}")]
    BadDegree(u64),
    #[error("relation matrix has {found} columns, expected {expected}")]
    ColumnMismatch { expected: usize, found: usize },
    #[error("malformed chain complex: {0}")]
    MalformedComplex(String),
    #[error("graded group has a degree-0 entry; connected complex data expected")]
    DegreeZero,
    #[error("sigma(F) is contained in tau(G); no separating dimension function")]
    NotSeparable,
    #[error("precondition of the two-step witness fails: {0}")]
    NotApplicable(String),
    #[error("invalid Bockstein function document: {0}")]
    BadDocument(String),
}

impl Error {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "not_prime",
            Error::BadModulus(_) => "bad_modulus",
            Error::Unfactorable(_) => "unfactorable",
            Error::TrivialGroup => "trivial_group",
            Error::BadDegree(_) => "bad_degree",
            Error::ColumnMismatch { .. } => "column_mismatch",
            Error::MalformedComplex(_) => "malformed_complex",
            Error::DegreeZero => "degree_zero",
            Error::NotSeparable => "not_separable",
            Error::NotApplicable(_) => "not_applicable",
            Error::BadDocument(_) => "bad_document",
        }
    }
}
