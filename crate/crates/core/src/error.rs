use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    CompositeCharacteristic(u32),
    #[error("unsupported field size {p}^{e}")]
    UnsupportedFieldSize { p: u32, e: u32 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("division by zero")]
    DivisionByZero,
    #[error("element code {code} out of range for F_{q}")]
    ElementOutOfRange { code: u64, q: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("operands live in different ambient spaces")]
    AmbientMismatch,
    #[error("search space of {needed} exceeds the budget of {budget}")]
    TooLarge { needed: u128, budget: u128 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("subspaces at levels {level} and {} are not nested", level + 1)]
    NotNested { level: usize },
    #[error("type vectors differ")]
    TypeMismatch,
    #[error("invalid type vector: {0}")]
    InvalidType(String),
    #[error("a code must contain at least one word")]
    EmptyCode,
    #[error("not a generating set: level {level} word has no neighbour")]
    NotGenerating { level: usize },
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name, used by the CLI error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::CompositeCharacteristic(_) => "CompositeCharacteristic",
            Error::UnsupportedFieldSize { .. } => "UnsupportedFieldSize",
            Error::NotPrimePower(_) => "NotPrimePower",
            Error::MixedFields => "MixedFields",
            Error::DivisionByZero => "DivisionByZero",
            Error::ElementOutOfRange { .. } => "ElementOutOfRange",
            Error::ShapeMismatch(_) => "ShapeMismatch",
            Error::Singular => "Singular",
            Error::AmbientMismatch => "AmbientMismatch",
            Error::TooLarge { .. } => "TooLarge",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NotNested { .. } => "NotNested",
            Error::TypeMismatch => "TypeMismatch",
            Error::InvalidType(_) => "InvalidType",
            Error::EmptyCode => "EmptyCode",
            Error::NotGenerating { .. } => "NotGenerating",
            Error::Infeasible(_) => "Infeasible",
            Error::UnknownFixture(_) => "UnknownFixture",
            Error::Parse(_) => "ParseError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
