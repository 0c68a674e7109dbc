use thiserror::Error;

/// Malformed literal input (base, exact value, digit word or stream).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {what} `{input}`: {reason}")]
pub struct ParseError {
    pub what: &'static str,
    pub input: String,
    pub reason: String,
}

impl ParseError {
    pub(crate) fn new(what: &'static str, input: &str, reason: impl Into<String>) -> Self {
        ParseError {
            what,
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("negative radicand {0}: only real quadratic fields are supported")]
    NegativeRadicand(i64),

    #[error("values live in different quadratic fields (sqrt{0} vs sqrt{1})")]
    IncompatibleFields(u64, u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("base must satisfy a > 1, got {0}")]
    BaseTooSmall(String),

    #[error("alphabet {{0..{r}}} too small for base {a}: need r >= a - 1")]
    AlphabetTooSmall { r: u32, a: String },

    #[error("digit {digit} outside alphabet {{0..{r}}}")]
    DigitOutOfRange { digit: u32, r: u32 },

    #[error("digit stream period must be nonempty")]
    EmptyPeriod,

    #[error("value {x} outside representable interval [0, {upper}]")]
    OutOfInterval { x: String, upper: String },

    #[error("r_a-rationality is only defined for a rational base, got {0}")]
    IrrationalBase(String),

    #[error("source stream {0} uses the (r)-tail form; use the terminating (0)-tail form")]
    NonCanonicalSource(String),

    #[error("no (r+1)-binary point at position {k}: {reason}")]
    NoBinaryPoint { k: usize, reason: String },

    #[error("words have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),

    #[error("adjacent overlap index {j} must be below r = {r}")]
    OverlapIndex { j: u32, r: u32 },

    #[error("f is the identity when a = r + 1; it has no non-monotonicity witness")]
    MonotoneIdentity,

    #[error("Cantor construction needs r = 2 and 2 < a < 3 (children 0 and 2 must be disjoint), got a = {a}, r = {r}")]
    NotCantorSystem { a: String, r: u32 },

    #[error("operation requires the golden system a = (1+sqrt5)/2, r = 1")]
    NotGoldenSystem,

    #[error("level-set block label {0} is not 4 or 5")]
    InvalidBlockLabel(u32),

    #[error("{what} = {requested} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        requested: u64,
        cap: u64,
    },

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Parse failures get a distinct exit status from domain violations.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
