use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parameter error: {0}")]
    Parameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
