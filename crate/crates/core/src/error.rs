use thiserror::Error;

/// Errors raised by the exact-arithmetic library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("radicand {value} is not square-free ({square}·{rest})")]
    NotSquareFree { value: i64, square: u64, rest: u64 },

    #[error("radicand {0} must be an integer >= 2")]
    RadicandTooSmall(i64),

    #[error("radicands {0:?} are not multiplicatively independent modulo squares")]
    DependentRadicands(Vec<u64>),

    #[error("field with radicands {0:?} is too large to represent")]
    FieldTooLarge(Vec<u64>),

    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },

    #[error("basis index {index} does not belong to {field}")]
    UnknownBasisIndex { index: u64, field: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid rational literal {0:?}")]
    BadRational(String),

    #[error("point {0} is not in the table")]
    TableMiss(String),

    #[error("duplicate table key {0}")]
    DuplicateKey(String),

    #[error("arity mismatch: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("step must be nonzero")]
    ZeroStep,

    #[error("negative difference order {0}")]
    NegativeOrder(i64),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("polynomial must have degree >= 1")]
    DegreeTooLow,

    #[error("perturbation {delta} must be smaller than half the leading coefficient {half_leading}")]
    PerturbationTooLarge { delta: String, half_leading: String },

    #[error("polynomial is not symmetric: coefficient of x^{t} y^{s} differs from x^{s} y^{t}")]
    NotSymmetric { t: usize, s: usize },

    #[error("not a coboundary: {0}")]
    NotCoboundary(String),

    #[error("missing image for basis index {0}")]
    MissingImage(u64),

    #[error("generator vectors are linearly dependent (determinant {0}); the map is linear")]
    DependentGenerators(String),

    #[error("orbit polynomial does not extend over the window; first failure at ({i}, {j})")]
    ExtensionFailed { i: i64, j: i64 },

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("{path}: {source}")]
    At { path: String, source: Box<Error> },
}

impl Error {
    /// Prefixes the location of the offending value.
    pub fn at(self, path: impl Into<String>) -> Error {
        let path = path.into();
        match self {
            Error::At { path: inner, source } => Error::At {
                path: join_path(&path, &inner),
                source,
            },
            other => Error::At {
                path,
                source: Box::new(other),
            },
        }
    }

    /// The error without location prefixes.
    pub fn root(&self) -> &Error {
        match self {
            Error::At { source, .. } => source.root(),
            other => other,
        }
    }
}

fn join_path(outer: &str, inner: &str) -> String {
    if inner.starts_with('[') {
        format!("{outer}{inner}")
    } else {
        format!("{outer}.{inner}")
    }
}

pub type Result<T> = std::result::Result<T, Error>;
