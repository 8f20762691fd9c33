use thiserror::Error;

/// Errors raised by the library. Each variant corresponds to a violated
/// precondition or an undecidable comparison; mathematical violations of
/// the checked inequalities are reported in the result types, not here.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd(0,0) undefined")]
    GcdOfZeros,
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("{0} requires a nonzero polynomial")]
    ZeroPolynomial(&'static str),
    #[error("valuation of zero undefined")]
    ValuationOfZero,
    #[error("height of zero is infinite")]
    HeightOfZero,
    #[error("place incompatible with function")]
    IncompatiblePlace,
    #[error("invalid sequence: {0}")]
    InvalidSpec(String),
    #[error("degenerate sequence: alpha_{i} / alpha_{j} is constant", i = .i + 1, j = .j + 1)]
    Degenerate { i: usize, j: usize },
    #[error("degree growth check requires polynomial data")]
    NonPolynomial,
    #[error("S violates hypothesis: {0}")]
    HypothesisS(String),
    #[error("functions are linearly dependent over Q")]
    LinearlyDependent,
    #[error("sum of the functions is zero")]
    ZeroSum,
    #[error("degenerate recurrence: alpha_{i} / alpha_{j} is a root of unity of order {order}", i = .i + 1, j = .j + 1)]
    RootOfUnityRatio { i: usize, j: usize, order: u64 },
    #[error("insufficient precision to decide: raise precision_bits")]
    Precision,
    #[error("hypothesis not certified: {0}")]
    Hypothesis(String),
    #[error("product sandwich requires f(r) != 0")]
    ProductAtRoot,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
