use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    /// `p² + 4q = 0`: repeated characteristic root.
    #[error("degenerate discriminant: D = 0")]
    DegenerateDiscriminant,
    /// A geometric-series denominator `1 - α`, `1 - β` or `1 - p - q` vanishes.
    #[error("unit root denominator: 1 - p - q = 0")]
    UnitRootDenominator,
    #[error("series denominator has a non-invertible constant term")]
    NonUnitConstantTerm,
    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("unknown parameter preset `{0}`")]
    UnknownName(String),
    #[error("unknown report format `{0}`")]
    UnknownFormat(String),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("malformed rational literal `{0}`")]
    ParseRational(String),
    #[error("invalid sweep configuration: {0}")]
    InvalidConfig(String),
    #[error("closed form did not reduce to a rational value")]
    Irrational,
}
