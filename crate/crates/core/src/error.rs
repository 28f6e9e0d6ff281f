use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A parameter or evaluation point lies outside the admitted domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A product left the span of `1, ln2, ln2^2, pi^2`.
    #[error("product leaves the constant span: {0}")]
    OutOfSpan(String),

    #[error("pole at x = {0}")]
    Pole(f64),

    /// The exact linear system behind a structure fit has no unique solution.
    #[error("singular system while fitting d = {d}: {detail}")]
    SingularSystem { d: u32, detail: String },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("parse error: {0}")]
    Parse(String),
}
