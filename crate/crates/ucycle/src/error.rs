use thiserror::Error;

/// Failure modes shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet needs at least one symbol")]
    EmptyAlphabet,
    #[error("alphabet symbol {0:?} is empty or repeated")]
    BadSymbol(String),
    #[error(
        "categories must cover every letter exactly once (letter {letter} covered {times} times)"
    )]
    BadCategoryCover { letter: usize, times: usize },
    #[error("letter {letter} out of range for alphabet size {size}")]
    LetterOutOfRange { letter: usize, size: usize },
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("words must be nonempty")]
    EmptyWord,
    #[error("rank {rank} out of range for {length}-letter words over {size} symbols")]
    RankOutOfRange {
        rank: u64,
        size: usize,
        length: usize,
    },
    #[error("rank space for {length}-letter words over {size} symbols overflows u64")]
    RankSpaceOverflow { size: usize, length: usize },
    #[error("expected a word of length {expected}, got {actual}")]
    WordLengthMismatch { expected: usize, actual: usize },
    #[error("window length {window} exceeds cycle length {cycle}")]
    WindowTooLong { window: usize, cycle: usize },
    #[error("enumerating {required} candidates exceeds the budget of {budget}")]
    BudgetExceeded { required: u64, budget: u64 },
    #[error("word length must be at least 2 to build a transition digraph, got {0}")]
    WordLengthTooShort(usize),
    #[error("vertex index {index} out of range for {count} vertices")]
    UnknownVertex { index: usize, count: usize },
    #[error("circuit must be nonempty")]
    EmptyCircuit,
    #[error("circuit words at positions {position} and {next} do not overlap")]
    BrokenOverlap { position: usize, next: usize },
    #[error("the Lipschitz class needs a cyclic alphabet")]
    NeedsCyclicAlphabet,
    #[error("the cyclic-categories class needs alphabet categories")]
    NeedsCategories,
    #[error("this class needs a two-symbol alphabet, got {0} symbols")]
    NeedsBinaryAlphabet(usize),
    #[error("Lipschitz bound must be at least 1")]
    BadLipschitzBound,
    #[error("occurrence bounds must satisfy 1 <= min < max, got {min}..={max}")]
    BadOccurrenceBounds { min: usize, max: usize },
    #[error("lattice dimension must be at least 2, got {0}")]
    BadDimension(usize),
    #[error("a dimension-{dimension} step alphabet needs {expected} symbols, got {actual}")]
    StepAlphabetSize {
        dimension: usize,
        expected: usize,
        actual: usize,
    },
    #[error("lattice radius must be at least 1")]
    BadRadius,
    #[error("boundary strata are defined for dimension 3, got {0}")]
    StratumDimension(usize),
    #[error("word length must be at least 1")]
    ZeroWordLength,
}

pub type Result<T> = std::result::Result<T, Error>;
