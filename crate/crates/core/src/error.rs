use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown semiring `{0}` (expected one of: nat, bool, tropical-min, gcd-nat)")]
    UnknownSemiring(String),

    #[error("operands belong to different semirings: {0}")]
    SemiringMismatch(String),

    #[error("divisibility is not decidable in semiring `{0}`")]
    UndecidableDivisibility(String),

    #[error("a positive search bound is required for the infinite carrier `{0}`")]
    BoundRequired(String),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("shape error at line {line}: {message}")]
    Shape { line: usize, message: String },

    #[error("missing section `{0}`")]
    MissingSection(&'static str),

    #[error("semiring tables violate the {0} axiom")]
    AxiomsFailed(String),

    #[error("order {order} exceeds the supported maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("order {order} is below the supported minimum of {min}")]
    OrderTooSmall { order: usize, min: usize },

    #[error("degree {degree} exceeds the supported maximum of {max}")]
    DegreeTooLarge { degree: usize, max: usize },

    #[error("polynomial must have degree at least 1")]
    DegreeTooSmall,

    #[error("polynomial syntax error at position {position}: {message}")]
    PolySyntax { position: usize, message: String },

    #[error("`{literal}` is not an element of semiring `{semiring}`")]
    Literal { literal: String, semiring: String },

    #[error("element {0} is not a prime element: {1}")]
    NotPrimeElement(String, String),

    #[error("ideal generators are only supported over finite carriers, not `{0}`")]
    GeneratorsNeedFiniteCarrier(String),

    #[error("proof trace precondition violated: {0}")]
    TracePrecondition(String),

    #[error("operation requires a finite carrier, `{0}` is infinite")]
    NotFinite(String),
}
