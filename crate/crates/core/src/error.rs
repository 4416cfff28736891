use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("radix must be at least 2, got {0}")]
    InvalidBase(u32),
    #[error("digit {digit} out of range for radix {radix}")]
    InvalidDigit { digit: u32, radix: u32 },
    #[error("{value} contains digit {digit} in base {radix}")]
    DigitPresent { value: String, digit: u32, radix: u32 },
    #[error("arity mismatch: expected {expected} tracks, got {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("base mismatch: expected radix {expected}, got {found}")]
    BaseMismatch { expected: u32, found: u32 },
    #[error("track index {index} out of range for {tracks} tracks")]
    TrackOutOfRange { index: usize, tracks: usize },
    #[error("alphabet of radix {radix} over {tracks} tracks is too large")]
    AlphabetTooLarge { radix: u32, tracks: usize },
    #[error("malformed automaton: {0}")]
    Malformed(String),
    #[error("automaton is not minimal and complete")]
    NotMinimized,
    #[error("track count {tracks} is not divisible by {m}")]
    NotDivisible { tracks: usize, m: usize },
    #[error("radix {0} is not a perfect square")]
    NotPerfectSquare(u32),
    #[error("invalid codec: {0}")]
    InvalidCodec(String),
    #[error("syntax error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("formula has free variables: {}", .0.join(", "))]
    FreeVariables(Vec<String>),
    #[error("unassigned variable `{0}`")]
    Unassigned(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}
