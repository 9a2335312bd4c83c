use thiserror::Error;

/// Errors raised by the library. Precondition violations carry the exact
/// requirement that was not met so the CLI can print it verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("class has zero constant term and is not a unit")]
    NotAUnit,
    #[error("classes live on different complete intersections")]
    SpecMismatch,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn require(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(what()))
    }
}
