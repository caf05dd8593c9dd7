use alloc::string::String;

/// Errors raised by the core library.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A polytope could not be constructed from the given input.
    #[error("construction error: {0}")]
    Construction(String),
    #[error("explicit vertex input is supported only for d in {{2, 3}}, got d = {0}")]
    UnsupportedDimension(usize),
    /// A face handle does not belong to the polytope it was used with.
    #[error("lookup error: {0}")]
    Lookup(String),
    #[error("sampling efficiency error: {0}")]
    Sampling(String),
    /// Brute-force oracles refuse inputs that would explode combinatorially.
    #[error("size guard: {0}")]
    SizeGuard(String),
    #[error("configuration error: {0}")]
    Configuration(String),
}

pub type Result<T> = core::result::Result<T, Error>;

macro_rules! domain {
    ($($arg:tt)*) => { $crate::Error::Domain(alloc::format!($($arg)*)) };
}
pub(crate) use domain;
