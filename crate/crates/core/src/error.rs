use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("image array is not a bijection on 1..={degree}")]
    NotABijection { degree: usize },

    #[error("malformed cycle notation: {0}")]
    BadCycle(String),

    #[error("group order exceeds the cap of {cap} elements")]
    OrderCapExceeded { cap: usize },

    #[error("subgroup count exceeds the cap of {cap}")]
    SubgroupCapExceeded { cap: usize },

    #[error("subgroups belong to different parent groups")]
    ParentMismatch,

    #[error("element is not a member of the parent group")]
    NotInGroup,

    #[error("element set is not a subgroup")]
    NotASubgroup,

    #[error("subgroup is not contained in the ambient subgroup")]
    NotContained,

    #[error("subgroup is not a node of this lattice")]
    NotInLattice,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("pair is not a chief factor")]
    NotChiefFactor,

    #[error("group is not soluble")]
    NotSoluble,

    #[error("{p} is not a prime dividing the group order")]
    PrimeNotDividing { p: u64 },

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("unknown group name `{0}`")]
    UnknownGroup(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
