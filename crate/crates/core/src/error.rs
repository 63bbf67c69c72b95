use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("signature has no constants")]
    EmptySignature,
    #[error("constant `{0}` is declared twice")]
    DuplicateConstant(String),
    #[error("`{0}` is not a legal constant name")]
    InvalidConstantName(String),
    #[error("unknown constant `{0}`")]
    UnknownConstant(String),
    #[error("constant index {index} is out of range for a signature of {len} constants")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("atoms need a non-empty upper segment")]
    EmptyAtom,
    #[error("terms need at least one component constant")]
    EmptyTerm,
    #[error("operands are over different signatures")]
    SignatureMismatch,
    #[error("the zero atom has no pinning term")]
    ZeroAtomHasNoPinningTerm,
    #[error("{constants} constants exceed the enumeration cap of {cap}")]
    CapExceeded { constants: usize, cap: usize },
    #[error("restriction to an empty set of constants")]
    EmptyRestrictionSet,
    #[error("rename target `{0}` is not in the target signature")]
    UnknownTargetConstant(String),
    #[error("rename source `{0}` is not a constant of the model")]
    UnknownSourceConstant(String),
    #[error("constant name `{0}` collides with an existing constant")]
    NameCollision(String),
    #[error("{generators} generators but {names} names")]
    GeneratorCountMismatch { generators: usize, names: usize },
    #[error("the trivial model has no subdirect decomposition")]
    TrivialModel,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: undeclared constant `{name}`")]
    UndeclaredConstant { line: usize, name: String },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
