use thiserror::Error;

/// Hypotheses that a checker refuses to assume.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Hypothesis {
    #[error("alpha does not satisfy the real-rootedness condition")]
    ConditionC,
    #[error("condition C holds for alpha, so no counterexample exists (searching is futile)")]
    FutileSearch,
    #[error("some beta_j is negative (f has a root in (0, +inf))")]
    NegativeBeta,
    #[error("E_{0}(x) is negative")]
    NegativeMean(usize),
    #[error("S_{{{0};s}}(x) is negative")]
    NegativeS(usize),
    #[error("Q_{{{0};s}}(x) is negative")]
    NegativeQ(usize),
    #[error("outer terms at indices {0} and {1} are both negative")]
    BoundarySigns(usize, usize),
    #[error("entries of x are not pairwise distinct")]
    RepeatedEntries,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    UndefinedGcd,
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("operation requires a non-constant polynomial")]
    ConstantPolynomial,
    #[error("polynomial is not squarefree; decompose it first")]
    NotSquarefree,
    #[error("{0} is not a root of f")]
    NotARoot(String),
    #[error("alpha must have at least one entry")]
    EmptyAlpha,
    #[error("x must have at least one entry")]
    EmptyVector,
    #[error("subset enumeration refused for n = {0} (limit {1})")]
    EnumerationGuard(usize, usize),
    #[error("{0}")]
    Range(String),
    #[error("malformed rational {0:?}")]
    MalformedRational(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(#[from] Hypothesis),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn range_err(msg: impl Into<String>) -> Error {
    Error::Range(msg.into())
}
