use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("domain error: {0}")]
    Domain(String),

    /// The longitudinal momentum of a sideband came out imaginary.
    #[error("sideband n = {order} is evanescent (p_z^2 = {pz_squared:e} kg^2 m^2/s^2)")]
    EvanescentSideband { order: i32, pz_squared: f64 },

    #[error("guided mode violates total internal reflection: n cos(alpha) = {effective_index} <= 1")]
    GuidanceViolation { effective_index: f64 },

    #[error(
        "root not bracketed on [{lo}, {hi}]: f(lo) = {f_lo:e}, f(hi) = {f_hi:e}"
    )]
    Bracket { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    /// A requested target lies outside the band a model can reach.
    #[error("{quantity} = {requested} is infeasible; reachable band is ({low}, {high})")]
    Infeasible {
        quantity: &'static str,
        requested: f64,
        low: f64,
        high: f64,
    },

    #[error("config error: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Config(format!("line {}, column {}: {}", e.line(), e.column(), e))
    }
}
