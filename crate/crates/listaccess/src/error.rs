use crate::list::Symbol;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("symbol '{0}' is not in the list")]
    SymbolNotInList(Symbol),

    #[error("position {position} is out of range for a list of length {len}")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("duplicate symbol '{0}' in list")]
    DuplicateSymbol(Symbol),

    #[error("a list must contain at least one symbol")]
    EmptyList,

    #[error("request sequence is empty")]
    EmptySequence,

    #[error("symbol '{0}' is not in the alphabet")]
    SymbolNotInAlphabet(char),

    #[error("{0} is not a supported base (expected 2, 8, 10 or 16)")]
    InvalidBase(u32),

    #[error("{n} requests exceed the exhaustive search limit of {max}")]
    InstanceTooLarge { n: usize, max: usize },

    #[error("gain is undefined when the MTF cost is zero")]
    ZeroMtfCost,

    #[error("no rows to emit")]
    NoRows,

    #[error("line {line}: {message}")]
    ConfigParse { line: usize, message: String },

    #[error("csv line {line}: {message}")]
    CsvParse { line: usize, message: String },
}
