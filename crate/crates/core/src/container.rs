//! Text container for cipher streams.
//!
//! ```text
//! GEOC 1 <SCHEME> <ALPHA-ID> <N> <PAD>[ <G>]
//! <record>
//! ...
//! ```
//!
//! One record per line, fields separated by a single space, rationals in
//! canonical form, every line terminated by LF. The parser accepts only the
//! canonical spelling, so `serialize(deserialize(b)) == b` for every accepted
//! `b`.

use std::fmt::Write as _;

use crate::alphabet::{Alphabet, PlainSequence};
use crate::error::{Error, Result};
use crate::geometry::{CubicCurve, LineGF, LineSI, Poly, Rational};
use crate::scheme::index_line::{self, IndexCubicCipher, IndexLineCipher};
use crate::scheme::lagrange::{self, LagrangeCipher};
use crate::scheme::pair_line::{self, PairLineCipher};
use crate::scheme::Scheme;

pub const MAGIC: &str = "GEOC";
pub const VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CipherStream {
    IndexLine(IndexLineCipher),
    IndexElliptic(IndexCubicCipher),
    PairLine(PairLineCipher),
    Lagrange(LagrangeCipher),
}

impl CipherStream {
    /// Encodes `seq` with `scheme`; `block_size` applies to the polynomial
    /// scheme only. Padding uses the alphabet's interval code.
    pub fn encode(
        seq: &PlainSequence,
        alphabet: &Alphabet,
        scheme: Scheme,
        block_size: usize,
    ) -> Result<Self> {
        let interval = alphabet.interval_code();
        Ok(match scheme {
            Scheme::IndexLine => CipherStream::IndexLine(index_line::encode_il(seq)?),
            Scheme::IndexElliptic => CipherStream::IndexElliptic(index_line::encode_ile(seq)?),
            Scheme::PairLine => CipherStream::PairLine(pair_line::encode_pl(seq, interval)?),
            Scheme::Lagrange => {
                CipherStream::Lagrange(lagrange::encode_lg(seq, block_size, interval)?)
            }
        })
    }

    pub fn decode(&self, strict: bool) -> Result<PlainSequence> {
        match self {
            CipherStream::IndexLine(c) => index_line::decode_il(c, strict),
            CipherStream::IndexElliptic(c) => index_line::decode_ile(c, strict),
            CipherStream::PairLine(c) => pair_line::decode_pl(c, strict),
            CipherStream::Lagrange(c) => lagrange::decode_lg(c, strict),
        }
    }

    pub fn scheme(&self) -> Scheme {
        match self {
            CipherStream::IndexLine(_) => Scheme::IndexLine,
            CipherStream::IndexElliptic(_) => Scheme::IndexElliptic,
            CipherStream::PairLine(_) => Scheme::PairLine,
            CipherStream::Lagrange(_) => Scheme::Lagrange,
        }
    }

    pub fn alphabet_id(&self) -> &str {
        match self {
            CipherStream::IndexLine(c) => &c.alphabet_id,
            CipherStream::IndexElliptic(c) => &c.alphabet_id,
            CipherStream::PairLine(c) => &c.alphabet_id,
            CipherStream::Lagrange(c) => &c.alphabet_id,
        }
    }

    /// Plaintext length `N`.
    pub fn len(&self) -> usize {
        match self {
            CipherStream::IndexLine(c) => c.records.len(),
            CipherStream::IndexElliptic(c) => c.records.len(),
            CipherStream::PairLine(c) => c.len,
            CipherStream::Lagrange(c) => c.len,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn pad_count(&self) -> usize {
        match self {
            CipherStream::IndexLine(_) | CipherStream::IndexElliptic(_) => 0,
            CipherStream::PairLine(c) => c.pad_count,
            CipherStream::Lagrange(c) => c.pad_count,
        }
    }

    pub fn block_size(&self) -> Option<usize> {
        match self {
            CipherStream::Lagrange(c) => Some(c.block_size),
            _ => None,
        }
    }

    pub fn record_count(&self) -> usize {
        self.records().len()
    }

    /// Every record as its list of rationals, in container field order.
    pub fn records(&self) -> Vec<Vec<&Rational>> {
        match self {
            CipherStream::IndexLine(c) => c.records.iter().map(|l| vec![&l.a, &l.b]).collect(),
            CipherStream::IndexElliptic(c) => c.records.iter().map(|l| vec![&l.a, &l.b]).collect(),
            CipherStream::PairLine(c) => c.records.iter().map(|l| vec![&l.a, &l.b, &l.c]).collect(),
            CipherStream::Lagrange(c) => c.records.iter().map(|p| p.coeffs.iter().collect()).collect(),
        }
    }
}

/// Record count and record width implied by a header, if consistent.
fn expected_shape(scheme: Scheme, n: usize, pad: usize, g: Option<usize>) -> std::result::Result<(usize, usize), String> {
    match scheme {
        Scheme::IndexLine | Scheme::IndexElliptic => {
            if n < 2 {
                return Err(format!("{} streams need N >= 2, got {n}", scheme.tag()));
            }
            if pad != 0 {
                return Err(format!("{} streams carry no padding, got {pad}", scheme.tag()));
            }
            Ok((n, 2))
        }
        Scheme::PairLine => {
            let points = n.div_ceil(2);
            if points < pair_line::MIN_POINTS {
                return Err(format!("PL streams need at least {} records, N = {n} gives {points}", pair_line::MIN_POINTS));
            }
            if pad != 2 * points - n {
                return Err(format!("PL stream with N = {n} must have pad {}, got {pad}", 2 * points - n));
            }
            Ok((points, 3))
        }
        Scheme::Lagrange => {
            let g = g.ok_or("LG header lacks a block size")?;
            if g < 2 {
                return Err(format!("block size must be at least 2, got {g}"));
            }
            if n < 1 {
                return Err("LG streams need N >= 1".into());
            }
            let blocks = n.div_ceil(g);
            if pad != blocks * g - n {
                return Err(format!("LG stream with N = {n}, G = {g} must have pad {}, got {pad}", blocks * g - n));
            }
            Ok((blocks, g))
        }
    }
}

pub fn serialize(stream: &CipherStream) -> Vec<u8> {
    let mut out = String::new();
    write!(
        out,
        "{MAGIC} {VERSION} {} {} {} {}",
        stream.scheme().tag(),
        stream.alphabet_id(),
        stream.len(),
        stream.pad_count()
    )
    .unwrap();
    if let Some(g) = stream.block_size() {
        write!(out, " {g}").unwrap();
    }
    out.push('\n');
    for record in stream.records() {
        let fields: Vec<String> = record.iter().map(|r| r.to_string()).collect();
        out.push_str(&fields.join(" "));
        out.push('\n');
    }
    out.into_bytes()
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Splits on single spaces, returning each field with its 1-based column.
fn fields(line: &str, line_no: usize) -> Result<Vec<(usize, &str)>> {
    let mut out = Vec::new();
    let mut column = 1;
    for field in line.split(' ') {
        if field.is_empty() {
            return Err(parse_err(line_no, column, "empty field (fields are separated by exactly one space)"));
        }
        out.push((column, field));
        column += field.chars().count() + 1;
    }
    Ok(out)
}

fn parse_count(field: (usize, &str), line: usize, what: &str) -> Result<usize> {
    let (column, text) = field;
    let canonical = !text.is_empty()
        && text.bytes().all(|b| b.is_ascii_digit())
        && (text == "0" || !text.starts_with('0'));
    if !canonical {
        return Err(parse_err(line, column, format!("{what} {text:?} is not a canonical decimal integer")));
    }
    text.parse()
        .map_err(|_| parse_err(line, column, format!("{what} {text:?} out of range")))
}

pub fn deserialize(bytes: &[u8]) -> Result<CipherStream> {
    let text = std::str::from_utf8(bytes).map_err(|e| {
        let before = &bytes[..e.valid_up_to()];
        let line = before.iter().filter(|&&b| b == b'\n').count() + 1;
        let column = before.iter().rev().take_while(|&&b| b != b'\n').count() + 1;
        parse_err(line, column, "invalid UTF-8")
    })?;
    let body = text.strip_suffix('\n').ok_or_else(|| {
        let line = text.matches('\n').count() + 1;
        let column = text.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        parse_err(line, column, "missing final line feed")
    })?;
    let lines: Vec<&str> = body.split('\n').collect();
    for (i, line) in lines.iter().enumerate() {
        if let Some(pos) = line.find('\r') {
            return Err(parse_err(i + 1, line[..pos].chars().count() + 1, "carriage return (LF line endings only)"));
        }
    }

    let header = fields(lines[0], 1)?;
    if header.len() < 6 || header.len() > 7 {
        return Err(parse_err(1, 1, format!("header has {} fields, expected 6 or 7", header.len())));
    }
    if header[0].1 != MAGIC {
        return Err(parse_err(1, 1, format!("bad magic {:?}", header[0].1)));
    }
    if header[1].1 != VERSION.to_string() {
        return Err(parse_err(1, header[1].0, format!("unsupported version {:?}", header[1].1)));
    }
    let scheme = Scheme::from_tag(header[2].1)
        .ok_or_else(|| parse_err(1, header[2].0, format!("unknown scheme tag {:?}", header[2].1)))?;
    let alphabet_id = header[3].1.to_owned();
    let n = parse_count(header[4], 1, "length")?;
    let pad = parse_count(header[5], 1, "pad count")?;
    let g = match (scheme, header.get(6)) {
        (Scheme::Lagrange, Some(&field)) => Some(parse_count(field, 1, "block size")?),
        (Scheme::Lagrange, None) => None,
        (_, Some(&(column, _))) => {
            return Err(parse_err(1, column, format!("{} header takes no block size", scheme.tag())));
        }
        (_, None) => None,
    };
    let (count, width) = expected_shape(scheme, n, pad, g).map_err(|m| parse_err(1, 1, m))?;

    let records = &lines[1..];
    if records.len() != count {
        let line = if records.len() < count { lines.len() + 1 } else { count + 2 };
        return Err(parse_err(line, 1, format!("expected {count} records, found {}", records.len())));
    }
    let mut rows = Vec::with_capacity(count);
    for (i, line) in records.iter().enumerate() {
        let line_no = i + 2;
        let row = fields(line, line_no)?;
        if row.len() != width {
            return Err(parse_err(line_no, 1, format!("record has {} fields, expected {width}", row.len())));
        }
        let values = row
            .into_iter()
            .map(|(column, f)| {
                f.parse::<Rational>().map_err(|e| parse_err(line_no, column, e.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(values);
    }

    let pair = |mut r: Vec<Rational>| {
        let b = r.pop().unwrap();
        let a = r.pop().unwrap();
        (a, b)
    };
    Ok(match scheme {
        Scheme::IndexLine => CipherStream::IndexLine(IndexLineCipher {
            alphabet_id,
            records: rows.into_iter().map(|r| { let (a, b) = pair(r); LineSI { a, b } }).collect(),
        }),
        Scheme::IndexElliptic => CipherStream::IndexElliptic(IndexCubicCipher {
            alphabet_id,
            records: rows.into_iter().map(|r| { let (a, b) = pair(r); CubicCurve { a, b } }).collect(),
        }),
        Scheme::PairLine => {
            let records = rows
                .into_iter()
                .enumerate()
                .map(|(i, r)| {
                    let [a, b, c]: [Rational; 3] = r.try_into().expect("width checked");
                    LineGF::new(a, b, c).map_err(|e| parse_err(i + 2, 1, e.to_string()))
                })
                .collect::<Result<Vec<_>>>()?;
            CipherStream::PairLine(PairLineCipher {
                alphabet_id,
                len: n,
                pad_count: pad,
                records,
            })
        }
        Scheme::Lagrange => CipherStream::Lagrange(LagrangeCipher {
            alphabet_id,
            len: n,
            block_size: width,
            pad_count: pad,
            records: rows.into_iter().map(Poly::new).collect(),
        }),
    })
}
