use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("phi undefined at 0")]
    Zero,
    #[error("invalid region E(a={a}, b={b}): need 0 < a <= b <= 2a")]
    InvalidRegion { a: i64, b: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
