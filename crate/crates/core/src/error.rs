use std::io;

use thiserror::Error;

/// Every failure the codec can report.
///
/// Index fields are 1-based positions (symbol positions for alphabet errors,
/// point or record positions for geometric ones).
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown symbol {symbol:?} at position {position}")]
    UnknownSymbol { position: usize, symbol: String },

    #[error("{0}")]
    Format(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("points share an abscissa; the line is vertical")]
    VerticalLine,

    #[error("points share an abscissa; no curve y^2 = x^3 + ax + b passes through both")]
    VerticalPair,

    #[error("duplicate point at {0}")]
    DuplicatePoint(usize),

    #[error("lines are parallel")]
    ParallelLines,

    #[error("lines coincide")]
    CoincidentLines,

    #[error("curves differ only in the constant term and never meet")]
    ParallelCurves,

    #[error("curves coincide")]
    CoincidentCurves,

    #[error("interpolation nodes share an abscissa")]
    DuplicateAbscissa,

    #[error("point {0} and its neighbours are collinear; intersection decoding is ambiguous")]
    CollinearAmbiguity(usize),

    #[error("position {position}: {reason}")]
    NonIntegerRecovery { position: usize, reason: String },

    #[error("position {position}: {reason}")]
    Integrity { position: usize, reason: String },

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    /// Stable name of the error variant, used in CLI diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::UnknownSymbol { .. } => "UnknownSymbol",
            Error::Format(_) | Error::Parse { .. } => "FormatError",
            Error::VerticalLine => "VerticalLine",
            Error::VerticalPair => "VerticalPair",
            Error::DuplicatePoint(_) => "DuplicatePoint",
            Error::ParallelLines => "ParallelLines",
            Error::CoincidentLines => "CoincidentLines",
            Error::ParallelCurves => "ParallelCurves",
            Error::CoincidentCurves => "CoincidentCurves",
            Error::DuplicateAbscissa => "DuplicateAbscissa",
            Error::CollinearAmbiguity(_) => "CollinearAmbiguity",
            Error::NonIntegerRecovery { .. } => "NonIntegerRecovery",
            Error::Integrity { .. } => "IntegrityError",
            Error::Io(_) => "IoError",
        }
    }

    pub(crate) fn format(msg: impl Into<String>) -> Self {
        Error::Format(msg.into())
    }

    pub(crate) fn recovery(position: usize, reason: impl Into<String>) -> Self {
        Error::NonIntegerRecovery {
            position,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
