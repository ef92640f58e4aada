use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<usize>),

    #[error("node ({row}, {col}) does not lie in the diagram")]
    NodeOutside { row: usize, col: usize },

    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },

    #[error(
        "window m={m} too small for a component with charge {charge} and {parts} nonzero parts"
    )]
    WindowTooSmall { m: i64, charge: i64, parts: usize },

    #[error("malformed beta-number tuple: {0}")]
    MalformedBeta(String),

    #[error("level mismatch: expected {expected}, found {found}")]
    LevelMismatch { expected: usize, found: usize },

    #[error("{value} is not a bead of component {component}")]
    NotABead { component: usize, value: i64 },

    #[error("multicharge {0:?} is not weakly increasing")]
    UnsortedCharge(Vec<i64>),

    #[error("multicharge {charge:?} does not satisfy s_0 <= ... <= s_(l-1) <= s_0 + {e}")]
    OutsideFundamentalDomain { charge: Vec<i64>, e: u32 },

    #[error("modulus {e} is below the minimum {min}")]
    InvalidModulus { e: u32, min: u32 },

    #[error("charged hook {hook} between components {a} and {b} is zero: bad specialisation")]
    BadSpecialisation { a: usize, b: usize, hook: i64 },

    #[error("polynomial division is not exact")]
    InexactDivision,

    #[error("valuation of the zero polynomial is undefined")]
    ZeroPolynomial,

    #[error("roots of unity live in groups of different orders {0} and {1}")]
    OrderMismatch(u64, u64),

    #[error("component {0} is not related to the first class member by a power of u")]
    NotInClass(usize),

    #[error("invalid cyclotomic specialisation: {0}")]
    InvalidSpec(String),

    #[error("level {level} is not a multiple of the package size {d}")]
    NotDivisible { level: usize, d: usize },

    #[error("charges {0:?} are not periodic with the package size")]
    NotPeriodic(Vec<i64>),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
