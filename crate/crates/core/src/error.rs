use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("gcd must be 1 (got {0})")]
    GcdNotOne(u64),
    #[error("generator {0} exceeds 2^31")]
    GeneratorTooLarge(u64),
    #[error("at most {max} generators are supported (got {got})")]
    TooManyGenerators { got: usize, max: usize },
    #[error("{0} is not a positive element of the semigroup")]
    NotAnElement(u64),
    #[error("more than {cap} factorizations of {n}")]
    ExplosionGuard { n: u64, cap: u64 },
    #[error("operation needs at least two generators")]
    SingleGenerator,
    #[error("operation needs exactly two generators")]
    NotTwoGenerated,
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("invariant table covers 0..={have} but {need} is required")]
    TableTooShort { need: u64, have: u64 },
    #[error("numerator not stable: nonzero terms in the window ending at {trunc}")]
    NotStable { trunc: u64 },
    #[error("internal identity check failed at degree {0}")]
    IdentityMismatch(u64),
    #[error("eventual recurrence does not hold from anchor {0}")]
    AnchorUnverified(u64),
    #[error("invariant agrees with its quasilinear extension at every n >= F(S)")]
    NoDissonance,
    #[error("numerator is zero")]
    ZeroNumerator,
    #[error("invariant {0} is not supported here")]
    UnsupportedInvariant(&'static str),
    #[error("{0} has no expression d1*n' + d2*n''")]
    NoDecomposition(u64),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

impl Error {
    /// Short stable identifier, used as the machine-readable error code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyGenerators => "empty_generators",
            Error::ZeroGenerator => "zero_generator",
            Error::GcdNotOne(_) => "gcd_not_one",
            Error::GeneratorTooLarge(_) => "generator_too_large",
            Error::TooManyGenerators { .. } => "too_many_generators",
            Error::NotAnElement(_) => "not_an_element",
            Error::ExplosionGuard { .. } => "explosion_guard",
            Error::SingleGenerator => "single_generator",
            Error::NotTwoGenerated => "not_two_generated",
            Error::Overflow => "overflow",
            Error::TableTooShort { .. } => "table_too_short",
            Error::NotStable { .. } => "not_stable",
            Error::IdentityMismatch(_) => "identity_mismatch",
            Error::AnchorUnverified(_) => "anchor_unverified",
            Error::NoDissonance => "no_dissonance",
            Error::ZeroNumerator => "zero_numerator",
            Error::UnsupportedInvariant(_) => "unsupported_invariant",
            Error::NoDecomposition(_) => "no_decomposition",
            Error::Parse(_) => "parse",
        }
    }
}
