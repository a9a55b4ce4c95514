//! Size bookkeeping for the schemes: how many records and rationals a
//! plaintext of length `N` costs, and the largest point dimension a
//! plaintext supports.

use crate::error::{Error, Result};
use crate::geometry::Rational;
use crate::scheme::{pair_line, Scheme};

/// Largest dimension `p` such that a plaintext of `n` symbols, grouped into
/// `p`-dimensional points, still yields the three points intersection
/// decoding needs: `ceil(n / 3)`.
pub fn max_dimension(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::format(format!("need at least 3 symbols, got {n}")));
    }
    Ok(n.div_ceil(3))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemeStats {
    pub records: usize,
    pub rationals: usize,
    /// Transmitted rationals per plaintext symbol.
    pub expansion: Rational,
}

pub fn scheme_stats(scheme: Scheme, n: usize, block_size: Option<usize>) -> Result<SchemeStats> {
    let (records, width) = match scheme {
        Scheme::IndexLine | Scheme::IndexElliptic => {
            if n < 2 {
                return Err(Error::format(format!("{scheme} needs N >= 2, got {n}")));
            }
            (n, 2)
        }
        Scheme::PairLine => {
            let points = n.div_ceil(2);
            if points < pair_line::MIN_POINTS {
                return Err(Error::format(format!("{scheme} needs N >= 5, got {n}")));
            }
            (points, 3)
        }
        Scheme::Lagrange => {
            let g = block_size.ok_or_else(|| Error::format("lagrange needs a block size"))?;
            if g < 2 {
                return Err(Error::format(format!("block size must be at least 2, got {g}")));
            }
            if n < 1 {
                return Err(Error::format("lagrange needs N >= 1"));
            }
            (n.div_ceil(g), g)
        }
    };
    let rationals = records * width;
    Ok(SchemeStats {
        records,
        rationals,
        expansion: Rational::new(rationals as i64, n as i64),
    })
}

pub fn expansion_ratio(scheme: Scheme, n: usize, block_size: Option<usize>) -> Result<Rational> {
    scheme_stats(scheme, n, block_size).map(|s| s.expansion)
}
