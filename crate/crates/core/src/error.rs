use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("invalid vocabulary: {0}")]
    Vocabulary(String),

    #[error("vocabulary has {count} variables, above the configured cap of {cap}")]
    TooManyVariables { count: usize, cap: usize },

    #[error("default base has {count} defaults, above the configured cap of {cap}")]
    TooManyDefaults { count: usize, cap: usize },

    #[error("ranked sequence is partial (neither full nor empty)")]
    PartialSequence,

    #[error("ranked sequences range over different vocabularies ({0} vs {1} worlds)")]
    WidthMismatch(usize, usize),

    #[error("material counterparts of the default base are inconsistent")]
    InconsistentMaterials,

    #[error("default base is not partitionable: no remaining default among {remaining} is tolerated")]
    NotPartitionable { remaining: usize },

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
}
