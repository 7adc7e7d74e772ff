use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate argument label `{0}`")]
    DuplicateLabel(String),
    #[error("attack endpoint `{0}` is not a declared argument")]
    UnknownLabel(String),
    #[error("framework has {size} arguments, above the enumeration limit of {limit}")]
    SizeLimit { size: usize, limit: usize },
    #[error("more than {cap} unattacked sets")]
    TooManyUnattackedSets { cap: usize },
    #[error("witness search exceeded {limit} steps")]
    SearchLimit { limit: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
    #[error("unknown semantics `{0}`")]
    UnknownSemantics(String),
    #[error("premise violated: {0}")]
    Premise(String),
    #[error("{0} is not finitary: some argument has infinitely many attackers")]
    NotFinitary(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
