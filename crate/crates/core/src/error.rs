use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cover relation contains a cycle: {}", display_cycle(.0))]
    Cycle(Vec<usize>),

    #[error("element {id} is out of range for a poset on {size} elements")]
    ElementOutOfRange { id: usize, size: usize },

    #[error("not a linear extension: {0}")]
    NotLinearExtension(String),

    #[error("operator index {index} is out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("{what} exceeds the configured cap of {cap}")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("poset is not a natural partial order")]
    NotNatural,

    #[error("poset is not slender: interval [{lo}, {hi}] has {size} elements")]
    NotSlender { lo: usize, hi: usize, size: usize },

    #[error("poset is not graded with 0̂ and 1̂: {0}")]
    NotGraded(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("rational function has a pole at {0}")]
    Pole(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("root-of-unity evaluation is not an integer: {0}")]
    NonIntegerValue(String),
}

fn display_cycle(c: &[usize]) -> String {
    c.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" < ")
}

/// Serializes any `Display` value as a string; big integers stay readable
/// in JSON.
pub(crate) fn serialize_display<T: std::fmt::Display, S: serde::Serializer>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}
