use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator subset is not of spherical type")]
    NotSpherical,
    #[error("generator subset is reducible; use the componentwise product")]
    Reducible,
    #[error("elements belong to different ambient groups")]
    AmbientMismatch,
    #[error("graph is not of FC type")]
    NotFc,
    #[error("graph has an odd label between `{0}` and `{1}`")]
    OddLabel(String, String),
    #[error("cycling is undefined for a pure power of the Garside element")]
    PureDeltaPower,
    #[error("{what} exceeded the resource cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },
    #[error("no word-problem oracle covers this ambient group")]
    NoOracle,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
