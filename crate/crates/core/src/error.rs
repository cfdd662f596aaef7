use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: duplicate transition for state `{state}` on letter `{letter}`")]
    DuplicateTransition {
        line: usize,
        state: String,
        letter: String,
    },

    #[error("missing transition for state `{state}` on letter `{letter}`")]
    MissingTransition { state: String, letter: String },

    #[error("line {line}: unknown symbol `{symbol}`")]
    UnknownSymbol { line: usize, symbol: String },

    #[error("invalid automaton: {0}")]
    Invalid(String),

    #[error("automaton is not invertible")]
    NotInvertible,

    #[error("automaton is not reversible")]
    NotReversible,

    #[error("automaton is not bireversible")]
    NotBireversible,

    #[error("budget exceeded: {what} needs more than {budget} nodes")]
    BudgetExceeded { what: String, budget: usize },

    #[error("ratio sequence did not stabilize within horizon {horizon}")]
    NotStabilized { horizon: usize },

    #[error("word length {got} does not fit: {expected}")]
    LengthMismatch { got: usize, expected: String },

    #[error("word is not a member of the component")]
    NotAMember,

    #[error("class words must have length at least 2, got {0}")]
    LengthTooShort(usize),

    #[error("report carries no exponential-growth witness: {0}")]
    NoWitness(String),

    #[error("unknown state or letter designator `{0}`")]
    UnknownDesignator(String),
}

impl Error {
    pub(crate) fn budget(what: impl Into<String>, budget: usize) -> Self {
        Error::BudgetExceeded {
            what: what.into(),
            budget,
        }
    }
}
