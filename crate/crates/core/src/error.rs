use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A binomial top index exceeded what the factorial cache holds.
    #[error("binomial top index {top} exceeds cache capacity; need n_max >= {required_n_max}")]
    Capacity { top: u64, required_n_max: u64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("oracle refuses n = {n} (guard is {guard}); pass an override to go up to {hard_limit}")]
    OracleGuard { n: u32, guard: u32, hard_limit: u32 },

    #[error("quadrature did not converge: estimated error {achieved:e} > tolerance {requested:e}")]
    Tolerance { achieved: f64, requested: f64 },

    #[error("value for n = {n} is not an integer: {value}")]
    NonInteger { n: u32, value: String },

    #[error("malformed b-file line {line}: {text:?}")]
    BFileParse { line: usize, text: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
