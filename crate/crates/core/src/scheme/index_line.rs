//! Consecutive-point scheme: symbol `k` becomes the point `(k, code_k)` and
//! each neighbouring pair (the last point wraps to the first) is sent as the
//! line, or cubic curve, through it.
//!
//! Decoding intersects neighbouring records. When three consecutive points
//! are collinear the two records coincide; the decoder then evaluates the
//! record at the known abscissa instead.

use crate::alphabet::{Code, PlainSequence};
use crate::error::{Error, Result};
use crate::geometry::{
    cubic_through, intersect_cubic, intersect_si, line_si_through, round_to_code, CubicCurve,
    LineSI, Point, Rational,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexLineCipher {
    pub alphabet_id: String,
    pub records: Vec<LineSI>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexCubicCipher {
    pub alphabet_id: String,
    pub records: Vec<CubicCurve>,
}

impl IndexLineCipher {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

impl IndexCubicCipher {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

fn index_points(seq: &PlainSequence) -> Result<Vec<Point>> {
    if seq.len() < 2 {
        return Err(Error::format(format!(
            "consecutive-point schemes need at least 2 symbols, got {}",
            seq.len()
        )));
    }
    Ok(seq
        .codes()
        .iter()
        .zip(1i64..)
        .map(|(&code, k)| Point::new(k, code))
        .collect())
}

/// Applies `fit` to every neighbouring pair `(p_i, p_{i+1})`, wrapping at the end.
fn fit_neighbours<T>(points: &[Point], fit: impl Fn(&Point, &Point) -> Result<T>) -> Result<Vec<T>> {
    let n = points.len();
    (0..n).map(|i| fit(&points[i], &points[(i + 1) % n])).collect()
}

pub fn encode_il(seq: &PlainSequence) -> Result<IndexLineCipher> {
    let points = index_points(seq)?;
    Ok(IndexLineCipher {
        alphabet_id: seq.alphabet_id().to_owned(),
        records: fit_neighbours(&points, line_si_through)?,
    })
}

pub fn encode_ile(seq: &PlainSequence) -> Result<IndexCubicCipher> {
    let points = index_points(seq)?;
    Ok(IndexCubicCipher {
        alphabet_id: seq.alphabet_id().to_owned(),
        records: fit_neighbours(&points, cubic_through)?,
    })
}

fn exact_code(position: usize, y: &Rational) -> Result<Code> {
    if !y.is_integer() {
        return Err(Error::recovery(position, format!("recovered ordinate {y} is not an integer")));
    }
    round_to_code(y).map_err(|_| Error::recovery(position, format!("recovered ordinate {y} is not a valid code")))
}

fn check_records(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::format(format!("expected at least 2 records, got {n}")));
    }
    Ok(())
}

/// Recovers the plaintext codes.
///
/// With `strict`, every recovered point must also lie on both neighbouring
/// records at its own index, otherwise [`Error::Integrity`] is raised.
pub fn decode_il(cipher: &IndexLineCipher, strict: bool) -> Result<PlainSequence> {
    let records = &cipher.records;
    let n = records.len();
    check_records(n)?;

    let mut codes = Vec::with_capacity(n);
    for i in 0..n {
        let position = i + 1;
        let index = Rational::from(position as u32);
        let prev = &records[(i + n - 1) % n];
        let next = &records[i];
        let y = match intersect_si(prev, next) {
            Ok(p) => {
                if strict && p.x != index {
                    return Err(Error::Integrity {
                        position,
                        reason: format!("neighbouring lines meet at x = {}, expected {index}", p.x),
                    });
                }
                p.y
            }
            Err(Error::CoincidentLines) => next.eval(&index),
            Err(Error::ParallelLines) => {
                return Err(Error::recovery(position, "neighbouring lines are parallel"));
            }
            Err(e) => return Err(e),
        };
        if strict {
            let (on_prev, on_next) = (prev.eval(&index), next.eval(&index));
            if on_prev != y || on_next != y {
                return Err(Error::Integrity {
                    position,
                    reason: format!("intersection gives {y}, evaluation gives {on_prev} and {on_next}"),
                });
            }
        }
        codes.push(exact_code(position, &y)?);
    }
    PlainSequence::new(codes, cipher.alphabet_id.clone())
}

/// Cubic counterpart of [`decode_il`]; the positive root is always taken.
pub fn decode_ile(cipher: &IndexCubicCipher, strict: bool) -> Result<PlainSequence> {
    let records = &cipher.records;
    let n = records.len();
    check_records(n)?;

    let mut codes = Vec::with_capacity(n);
    for i in 0..n {
        let position = i + 1;
        let index = Rational::from(position as u32);
        let prev = &records[(i + n - 1) % n];
        let next = &records[i];
        let y = match intersect_cubic(prev, next) {
            Ok(p) => {
                if strict && p.x != index {
                    return Err(Error::Integrity {
                        position,
                        reason: format!("neighbouring curves meet at x = {}, expected {index}", p.x),
                    });
                }
                p.y
            }
            Err(Error::CoincidentCurves) => next.positive_integer_ordinate(&index).ok_or_else(|| {
                Error::recovery(position, format!("y^2 = {} is not a positive square", next.rhs(&index)))
            })?,
            Err(Error::ParallelCurves) => {
                return Err(Error::recovery(position, "neighbouring curves never meet"));
            }
            Err(Error::NonIntegerRecovery { reason, .. }) => {
                return Err(Error::NonIntegerRecovery { position, reason });
            }
            Err(e) => return Err(e),
        };
        if strict {
            let p = Point { x: index.clone(), y: y.clone() };
            if !prev.contains(&p) || !next.contains(&p) {
                return Err(Error::Integrity {
                    position,
                    reason: format!("recovered point ({index}, {y}) is off a neighbouring curve"),
                });
            }
        }
        codes.push(exact_code(position, &y)?);
    }
    PlainSequence::new(codes, cipher.alphabet_id.clone())
}
