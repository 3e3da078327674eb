use thiserror::Error;

/// Errors surfaced by code, table and embedding construction.
///
/// Structural preconditions between values of matching types (same alphabet,
/// same degree) are asserted instead; only data-dependent failures that can
/// arise from user input or from search get a variant here.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size must be at least 2, got {0}")]
    AlphabetTooSmall(usize),

    #[error("letter {letter} is out of range for an alphabet of size {size}")]
    LetterOutOfRange { letter: usize, size: usize },

    #[error("{0:?} is not a permutation image")]
    NotAPermutation(Vec<usize>),

    #[error("degree mismatch: expected {expected}, got {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("cannot extend a permutation of degree {from} to smaller degree {to}")]
    BadExtension { from: usize, to: usize },

    #[error("group enumeration exceeded the cap of {0} elements")]
    CapExceeded(usize),

    #[error("duplicate word {0} in prefix code")]
    DuplicateWord(String),

    #[error("not an antichain: {prefix} is a prefix of {extension}")]
    NotAnAntichain { prefix: String, extension: String },

    #[error("prefix code is not complete: no element covers {missing}")]
    IncompleteCode { missing: String },

    #[error("word {0} does not belong to the code")]
    WordNotInCode(String),

    #[error("column index {index} out of range for a table of length {len}")]
    ColumnIndexOutOfRange { index: usize, len: usize },

    #[error("invalid table: {}", .0.join("; "))]
    InvalidTable(Vec<String>),

    #[error("tables belong to different groups ({0})")]
    GroupMismatch(String),

    #[error("code is not invariant: the image of {word} is outside the code")]
    NotInvariant { word: String },

    #[error("code has {found} elements, expected {expected}")]
    CodeSizeMismatch { expected: usize, found: usize },

    #[error("Higman condition fails for m = {m}, n = {n}")]
    HigmanCondition { m: usize, n: usize },

    #[error("no conjugator identifies the two groups")]
    NoConjugator,

    #[error("conjugator does not align the groups: {0}")]
    ConjugatorMismatch(String),

    #[error("successor selection exhausted at {word}, index {index}")]
    SuccessorExhausted { word: String, index: usize },

    #[error("word {word} does not lie under the letter {letter}")]
    NotUnderLetter { word: String, letter: usize },

    #[error("code is not listed in reverse dictionary order near {0}")]
    NotReverseDictOrdered(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
