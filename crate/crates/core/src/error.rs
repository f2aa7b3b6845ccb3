//! Error type shared by the library.

use thiserror::Error;

/// Location of a zone on the mesh, in interior indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZoneIndex {
    pub i: i64,
    pub j: i64,
}

impl std::fmt::Display for ZoneIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.i, self.j)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    /// Bad arguments: wrong lengths, unsupported orders, unknown names.
    #[error("usage error: {0}")]
    Usage(String),

    /// A state left the admissible set (negative density, superluminal velocity, ...).
    #[error("domain error{}: {message}", zone.map(|z| format!(" at zone {z}")).unwrap_or_default())]
    Domain {
        message: String,
        zone: Option<ZoneIndex>,
    },

    /// A non-finite number was produced.
    #[error("numerical error{}: {message}", zone.map(|z| format!(" at zone {z}")).unwrap_or_default())]
    Numerical {
        message: String,
        zone: Option<ZoneIndex>,
    },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("config error on line {line}: {message}")]
    Config { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain {
            message: msg.into(),
            zone: None,
        }
    }

    pub fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical {
            message: msg.into(),
            zone: None,
        }
    }

    /// Append the simulation time to domain/numerical error messages.
    pub fn at_time(self, t: f64) -> Self {
        match self {
            Error::Domain { message, zone } => Error::Domain {
                message: format!("{message} (t = {t:.6e})"),
                zone,
            },
            Error::Numerical { message, zone } => Error::Numerical {
                message: format!("{message} (t = {t:.6e})"),
                zone,
            },
            other => other,
        }
    }

    /// Attach a zone location to domain/numerical errors that lack one.
    pub fn at_zone(self, i: i64, j: i64) -> Self {
        match self {
            Error::Domain { message, zone: None } => Error::Domain {
                message,
                zone: Some(ZoneIndex { i, j }),
            },
            Error::Numerical { message, zone: None } => Error::Numerical {
                message,
                zone: Some(ZoneIndex { i, j }),
            },
            other => other,
        }
    }

    pub fn zone(&self) -> Option<ZoneIndex> {
        match self {
            Error::Domain { zone, .. } | Error::Numerical { zone, .. } => *zone,
            _ => None,
        }
    }
}
