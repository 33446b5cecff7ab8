use std::fmt;

use crate::frame::FrameKind;

/// The quantity whose vanishing makes a moving frame undefined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Pivot {
    /// `u_t + u*u_x`, normalized by the `U_T = ±1` cross-section.
    Evolution,
    /// `u_x`, normalized by the `U_X = ±1` cross-section.
    Slope,
}

impl fmt::Display for Pivot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pivot::Evolution => f.write_str("u_t+uu_x"),
            Pivot::Slope => f.write_str("u_x"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("singular moving frame: {pivot} vanishes (value {value:e})")]
    SingularFrame { pivot: Pivot, value: f64 },

    #[error("operation is not available for the {0} frame")]
    UnsupportedFrame(FrameKind),

    #[error("degenerate point: denominator {denominator:e} is negligible against scale {scale:e}")]
    Degenerate { denominator: f64, scale: f64 },

    #[error("evaluation error: {0}")]
    Evaluation(String),
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
