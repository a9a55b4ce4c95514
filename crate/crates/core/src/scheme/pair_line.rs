//! Paired-point scheme: codes are taken two at a time as plane points and
//! each neighbouring pair of points (wrapping) is sent as the general-form
//! line `Ax + By + C = 0` through it.
//!
//! Intersection decoding only works when no two consecutive points are equal
//! and no three consecutive points are collinear, so the encoder refuses
//! plaintexts that violate either condition.

use std::fmt;

use crate::alphabet::{Code, PlainSequence};
use crate::error::{Error, Result};
use crate::geometry::{cross, intersect_gf, line_gf_through, round_to_code, LineGF, Point, Rational};

pub const MIN_POINTS: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairLineCipher {
    pub alphabet_id: String,
    /// Plaintext length before padding.
    pub len: usize,
    pub pad_count: usize,
    pub records: Vec<LineGF>,
}

/// Reason a plaintext cannot be sent with this scheme.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Issue {
    TooFewPoints(usize),
    /// Point `i` equals point `i + 1` (1-based, wrapping).
    DuplicatePoint(usize),
    /// Point `i` is collinear with both of its neighbours.
    CollinearAmbiguity(usize),
}

impl Issue {
    pub fn into_error(self) -> Error {
        match self {
            Issue::TooFewPoints(p) => Error::format(format!(
                "pair-line scheme needs at least {MIN_POINTS} points (6 symbols after padding), got {p}"
            )),
            Issue::DuplicatePoint(i) => Error::DuplicatePoint(i),
            Issue::CollinearAmbiguity(i) => Error::CollinearAmbiguity(i),
        }
    }
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Issue::TooFewPoints(p) => write!(f, "FormatError: only {p} point(s), need {MIN_POINTS}"),
            Issue::DuplicatePoint(i) => write!(f, "DuplicatePoint: points {i} and {} are equal", i + 1),
            Issue::CollinearAmbiguity(i) => {
                write!(f, "CollinearAmbiguity: point {i} is collinear with its neighbours")
            }
        }
    }
}

/// Issues found for a plaintext; empty iff [`encode_pl`] accepts it.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.issues.is_empty()
    }
}

fn pair_points(codes: &[Code], interval: Code) -> (Vec<Point>, usize) {
    let pad_count = codes.len() % 2;
    let points = codes
        .chunks(2)
        .map(|pair| Point::new(pair[0], *pair.get(1).unwrap_or(&interval)))
        .collect();
    (points, pad_count)
}

fn check_points(points: &[Point]) -> ValidationReport {
    let p = points.len();
    let mut issues = Vec::new();
    if p < 2 {
        issues.push(Issue::TooFewPoints(p));
        return ValidationReport { issues };
    }
    let at = |i: usize| &points[i % p];
    let duplicate = |i: usize| at(i) == at(i + 1);
    for i in 0..p {
        if duplicate(i) {
            issues.push(Issue::DuplicatePoint(i + 1));
        }
    }
    for i in 0..p {
        let prev = i + p - 1;
        if duplicate(prev) || duplicate(i) {
            continue;
        }
        if cross(at(prev), at(i), at(i + 1)).is_zero() {
            issues.push(Issue::CollinearAmbiguity(i + 1));
        }
    }
    if p < MIN_POINTS && issues.is_empty() {
        // with two points both wrap lines are the same line
        issues.push(Issue::TooFewPoints(p));
    }
    ValidationReport { issues }
}

/// Points (after padding with `interval` for odd lengths) are 1-based.
pub fn validate_pl(seq: &PlainSequence, interval: Code) -> ValidationReport {
    let (points, _) = pair_points(seq.codes(), interval);
    check_points(&points)
}

pub fn encode_pl(seq: &PlainSequence, interval: Code) -> Result<PairLineCipher> {
    let (points, pad_count) = pair_points(seq.codes(), interval);
    if let Some(issue) = check_points(&points).issues.into_iter().next() {
        return Err(issue.into_error());
    }
    let p = points.len();
    let records = (0..p)
        .map(|i| line_gf_through(&points[i], &points[(i + 1) % p]))
        .collect::<Result<Vec<_>>>()?;
    Ok(PairLineCipher {
        alphabet_id: seq.alphabet_id().to_owned(),
        len: seq.len(),
        pad_count,
        records,
    })
}

fn exact_code(position: usize, v: &Rational) -> Result<Code> {
    if !v.is_integer() {
        return Err(Error::recovery(position, format!("recovered coordinate {v} is not an integer")));
    }
    round_to_code(v).map_err(|_| Error::recovery(position, format!("recovered coordinate {v} is not a valid code")))
}

/// Intersects neighbouring records to recover each point.
///
/// With `strict`, the recovered points are re-encoded and every record must
/// be reproduced coefficient for coefficient.
pub fn decode_pl(cipher: &PairLineCipher, strict: bool) -> Result<PlainSequence> {
    let records = &cipher.records;
    let p = records.len();
    if p < 2 {
        return Err(Error::format(format!("expected at least {MIN_POINTS} records, got {p}")));
    }
    if cipher.pad_count > 1 || 2 * p != cipher.len + cipher.pad_count {
        return Err(Error::format(format!(
            "{p} records cannot carry {} symbols with {} pad",
            cipher.len, cipher.pad_count
        )));
    }

    let mut points = Vec::with_capacity(p);
    for i in 0..p {
        let position = i + 1;
        let point = match intersect_gf(&records[(i + p - 1) % p], &records[i]) {
            Ok(point) => point,
            Err(Error::CoincidentLines) => return Err(Error::CollinearAmbiguity(position)),
            Err(Error::ParallelLines) => {
                return Err(Error::recovery(position, "neighbouring lines are parallel"));
            }
            Err(e) => return Err(e),
        };
        points.push(point);
    }

    if strict {
        for i in 0..p {
            let refit = line_gf_through(&points[i], &points[(i + 1) % p]);
            if refit.as_ref().ok() != Some(&records[i]) {
                return Err(Error::Integrity {
                    position: i + 1,
                    reason: "record does not match the line through its recovered points".into(),
                });
            }
        }
    }

    let mut codes = Vec::with_capacity(2 * p);
    for (i, point) in points.iter().enumerate() {
        codes.push(exact_code(i + 1, &point.x)?);
        codes.push(exact_code(i + 1, &point.y)?);
    }
    codes.truncate(cipher.len);
    PlainSequence::new(codes, cipher.alphabet_id.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::{to_numbers, Alphabet, BUILTIN_ID};

    fn seq(codes: &[Code]) -> PlainSequence {
        PlainSequence::new(codes.to_vec(), BUILTIN_ID).unwrap()
    }

    fn phrase() -> PlainSequence {
        to_numbers("I_LOVE_MY_MOTHER", &Alphabet::builtin()).unwrap()
    }

    #[test]
    fn phrase_records() {
        let c = encode_pl(&phrase(), 27).unwrap();
        let expected = [
            (-12, -3, 189),
            (-10, -10, 270),
            (8, -5, -151),
            (14, 2, -404),
            (-12, 12, -24),
            (-7, -7, 196),
            (10, 15, -320),
            (9, -4, 27),
        ];
        let expected: Vec<_> = expected
            .iter()
            .map(|&(a, b, c)| LineGF::new(a, b, c).unwrap())
            .collect();
        assert_eq!(c.records, expected);
        assert_eq!(c.pad_count, 0);
        assert_eq!(decode_pl(&c, true).unwrap(), phrase());
    }

    #[test]
    fn odd_length_is_padded_at_the_end() {
        let (points, pad) = pair_points(&[1, 2, 3], 27);
        assert_eq!(points, vec![Point::new(1, 2), Point::new(3, 27)]);
        assert_eq!(pad, 1);
        // two points cannot be decoded by intersection
        assert!(encode_pl(&seq(&[1, 2, 3]), 27).is_err());

        let s = seq(&[1, 2, 3, 9, 5]);
        let c = encode_pl(&s, 27).unwrap();
        assert_eq!(c.pad_count, 1);
        assert_eq!(c.records.len(), 3);
        assert_eq!(decode_pl(&c, true).unwrap(), s);
    }

    #[test]
    fn two_point_stream_has_coincident_neighbours() {
        let p1 = Point::new(1, 2);
        let p2 = Point::new(3, 27);
        let forward = line_gf_through(&p1, &p2).unwrap();
        let back = line_gf_through(&p2, &p1).unwrap();
        assert!(forward.proportional(&back));
        let c = PairLineCipher {
            alphabet_id: BUILTIN_ID.into(),
            len: 3,
            pad_count: 1,
            records: vec![forward, back],
        };
        assert!(matches!(decode_pl(&c, false), Err(Error::CollinearAmbiguity(1))));
        let report = validate_pl(&seq(&[1, 2, 3]), 27);
        assert_eq!(report.issues, vec![Issue::CollinearAmbiguity(1), Issue::CollinearAmbiguity(2)]);
    }

    #[test]
    fn degenerate_plaintexts() {
        assert!(matches!(encode_pl(&seq(&[1, 1, 1, 1]), 27), Err(Error::DuplicatePoint(1))));
        let report = validate_pl(&seq(&[1, 1, 1, 1]), 27);
        assert!(report.issues.contains(&Issue::DuplicatePoint(1)));

        assert!(matches!(
            encode_pl(&seq(&[1, 1, 2, 2, 3, 3]), 27),
            Err(Error::CollinearAmbiguity(_))
        ));
        let report = validate_pl(&seq(&[1, 1, 2, 2, 3, 3]), 27);
        assert!(report.issues.contains(&Issue::CollinearAmbiguity(2)));

        assert!(validate_pl(&phrase(), 27).is_empty());
        assert_eq!(validate_pl(&seq(&[4]), 27).issues, vec![Issue::TooFewPoints(1)]);
        assert!(matches!(encode_pl(&seq(&[4, 5]), 27), Err(Error::Format(_))));
    }

    #[test]
    fn vertical_pairs_are_representable() {
        // (12,1) -> (12,19) is the vertical line x = 12
        let s = seq(&[12, 1, 12, 19, 3, 7]);
        let c = encode_pl(&s, 27).unwrap();
        assert_eq!(c.records[0], LineGF::new(18, 0, -216).unwrap());
        assert_eq!(decode_pl(&c, true).unwrap(), s);
    }

    #[test]
    fn tampering() {
        let mut c = encode_pl(&phrase(), 27).unwrap();
        c.records[2].c = &c.records[2].c + &Rational::integer(1);
        assert!(matches!(decode_pl(&c, false), Err(Error::NonIntegerRecovery { .. })));

        // scaling a record moves no point, but strict mode notices
        let mut c = encode_pl(&phrase(), 27).unwrap();
        let r = &mut c.records[2];
        *r = LineGF::new(&r.a * &Rational::integer(2), &r.b * &Rational::integer(2), &r.c * &Rational::integer(2)).unwrap();
        assert_eq!(decode_pl(&c, false).unwrap(), phrase());
        assert!(matches!(decode_pl(&c, true), Err(Error::Integrity { position: 3, .. })));
    }
}
