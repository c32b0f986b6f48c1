use thiserror::Error;

/// Errors raised by the exact arithmetic, braid combinatorics and representation layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("matrix is singular")]
    Singular,
    #[error("inverse entry ({row}, {col}) is not a Laurent polynomial")]
    NotLaurent { row: usize, col: usize },
    #[error("computed inverse failed the product check")]
    InverseCheckFailed,
    #[error("evaluation at zero of a variable with negative exponent")]
    ZeroEvaluation,
    #[error("operation undefined on the zero matrix")]
    ZeroMatrix,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("strand count must be at least 1")]
    InvalidStrandCount,
    #[error("letter {letter} out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("negative letter {letter} in a word required to be positive")]
    NegativeLetter { letter: i32 },
    #[error("generator index {index} out of range for {strands} strands")]
    GeneratorOutOfRange { index: usize, strands: usize },
    #[error("set is not a half-permutation: ({0},{1}) and ({1},{2}) present but ({0},{2}) missing")]
    NotHalfPermutation(usize, usize, usize),
    #[error("closure removal did not reach an inversion set")]
    NoInversionSet,
    #[error("pair ({0},{1}) is not in Ref")]
    InvalidPair(usize, usize),
    #[error("vector is not in W: coordinate ({0},{1}) has negative constant term")]
    NotInW(usize, usize),
    #[error("specialization is not a permutation matrix")]
    NotPermutationMatrix,
    #[error("matrix is not scalar")]
    NotScalar,
    #[error("the fixed vectors do not split the Burau matrix")]
    SplittingFailed,
    #[error("basis change matrices do not compose to the identity")]
    BasisRoundTrip,
    #[error("Young diagram {0:?} is not admissible at level {1}")]
    InadmissibleDiagram(Vec<usize>, usize),
    #[error("resource guard: {0}")]
    ResourceGuard(String),
}

pub type Result<T> = std::result::Result<T, Error>;
