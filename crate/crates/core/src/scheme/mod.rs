pub mod index_line;
pub mod lagrange;
pub mod pair_line;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scheme {
    IndexLine,
    IndexElliptic,
    PairLine,
    Lagrange,
}

impl Scheme {
    pub const ALL: [Scheme; 4] = [
        Scheme::IndexLine,
        Scheme::IndexElliptic,
        Scheme::PairLine,
        Scheme::Lagrange,
    ];

    /// Tag used in container headers.
    pub fn tag(self) -> &'static str {
        match self {
            Scheme::IndexLine => "IL",
            Scheme::IndexElliptic => "ILE",
            Scheme::PairLine => "PL",
            Scheme::Lagrange => "LG",
        }
    }

    /// Name used on the command line.
    pub fn name(self) -> &'static str {
        match self {
            Scheme::IndexLine => "index-line",
            Scheme::IndexElliptic => "index-elliptic",
            Scheme::PairLine => "pair-line",
            Scheme::Lagrange => "lagrange",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Scheme> {
        Scheme::ALL.into_iter().find(|s| s.tag() == tag)
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scheme::ALL
            .into_iter()
            .find(|scheme| scheme.name() == s)
            .ok_or_else(|| Error::format(format!("unknown scheme {s:?}")))
    }
}
