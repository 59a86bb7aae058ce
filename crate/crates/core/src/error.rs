use thiserror::Error;

/// Every failure the engine can report.
///
/// Mathematically negative answers (a quotient outside the algebra, no
/// solution to a unit equation) are not errors; they are returned as values.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("arity mismatch: {left} variables vs {right} variables")]
    ArityMismatch { left: usize, right: usize },
    #[error("gcd of two zero polynomials is undefined")]
    UndefinedGcd,
    #[error("rational function has a pole at the evaluation point")]
    PoleAtPoint,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("operation is undefined on the zero element")]
    ZeroElement,
    #[error("elements are not expressed in a basis compatible with the generator")]
    BasisMismatch,
    #[error("unsupported generator: {0}")]
    UnsupportedGenerator(String),
    #[error("the unit coefficient R must be nonzero")]
    ZeroUnit,
    #[error("a constant exponent does not give a non-trivial invertible function")]
    NotAUnit,
    #[error("both polynomials are constant in the elimination variable")]
    DegenerateResultant,
    #[error("elimination produced the zero polynomial")]
    DegeneratePair,
    #[error("at least three grid points are required")]
    InsufficientGrid,
    #[error("evaluation overflowed at every sampled radius")]
    OverflowAtAllRadii,
    #[error("expression is not entire: {0}")]
    NotEntire(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("internal verification failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable snake_case name used in reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DivisionByZero => "division_by_zero",
            Error::ArityMismatch { .. } => "arity_mismatch",
            Error::UndefinedGcd => "undefined_gcd",
            Error::PoleAtPoint => "pole_at_point",
            Error::InvalidInput(_) => "invalid_input",
            Error::ZeroElement => "zero_element",
            Error::BasisMismatch => "basis_mismatch",
            Error::UnsupportedGenerator(_) => "unsupported_generator",
            Error::ZeroUnit => "zero_unit",
            Error::NotAUnit => "not_a_unit",
            Error::DegenerateResultant => "degenerate_resultant",
            Error::DegeneratePair => "degenerate_pair",
            Error::InsufficientGrid => "insufficient_grid",
            Error::OverflowAtAllRadii => "overflow_at_all_radii",
            Error::NotEntire(_) => "not_entire",
            Error::Parse { .. } => "parse_error",
            Error::Internal(_) => "internal",
        }
    }

    /// Whether the failure lies with the engine rather than the input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
