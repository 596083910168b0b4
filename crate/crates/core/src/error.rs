use thiserror::Error;

/// Errors raised by group construction and the derived computations.
#[derive(Debug, Error)]
pub enum GroupError {
    #[error("malformed cycle notation `{0}`")]
    Malformed(String),
    #[error("point {0} repeated in cycle notation")]
    RepeatedPoint(usize),
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("image sequence is not a bijection on 0..{0}")]
    NotABijection(usize),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("degree {0} exceeds the supported maximum of 65535 points")]
    DegreeTooLarge(usize),
    #[error("closure exceeded the enumeration cap of {0} elements")]
    CapExceeded(usize),
    #[error("{0} is not an element of the group")]
    NotInGroup(String),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("subgroup is not normal: conjugation by {conjugator} moves it")]
    NotNormal { conjugator: String },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {p} does not divide the group order {order}")]
    PrimeDoesNotDivide { p: u64, order: u64 },
    #[error("{element} is not a {p}-element")]
    NotPElement { element: String, p: u64 },
    #[error("group is not {0}-solvable")]
    NotPSolvable(u64),
    #[error("group order {order} exceeds the brute-force budget {budget}")]
    BudgetExceeded { order: u64, budget: u64 },
    #[error("identity violated: {0}")]
    IdentityViolation(String),
    #[error("action is not coprime: target order {target} is divisible by {p}")]
    NotCoprime { target: u64, p: u64 },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("unknown catalog group `{0}`")]
    UnknownGroup(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;
