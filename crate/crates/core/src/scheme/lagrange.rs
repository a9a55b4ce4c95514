//! Blockwise polynomial scheme. Codes are padded to a multiple of the block
//! size `g`, point `i` is `(i, code_i)` with a global 1-based abscissa, and
//! each block of `g` points is sent as the coefficients of its interpolating
//! polynomial.

use crate::alphabet::{Code, PlainSequence};
use crate::error::{Error, Result};
use crate::geometry::{lagrange_fit, round_to_code, Point, Poly, Rational};

pub const DEFAULT_BLOCK_SIZE: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LagrangeCipher {
    pub alphabet_id: String,
    pub len: usize,
    pub block_size: usize,
    pub pad_count: usize,
    pub records: Vec<Poly>,
}

/// Codes extended with `interval` to a whole number of blocks.
pub fn padded_codes(codes: &[Code], block_size: usize, interval: Code) -> Vec<Code> {
    let total = codes.len().div_ceil(block_size) * block_size;
    let mut padded = codes.to_vec();
    padded.resize(total, interval);
    padded
}

pub fn encode_lg(seq: &PlainSequence, block_size: usize, interval: Code) -> Result<LagrangeCipher> {
    if block_size < 2 {
        return Err(Error::format(format!("block size must be at least 2, got {block_size}")));
    }
    let padded = padded_codes(seq.codes(), block_size, interval);
    let points: Vec<Point> = padded
        .iter()
        .zip(1i64..)
        .map(|(&code, x)| Point::new(x, code))
        .collect();
    let records = points
        .chunks(block_size)
        .map(lagrange_fit)
        .collect::<Result<Vec<_>>>()?;
    Ok(LagrangeCipher {
        alphabet_id: seq.alphabet_id().to_owned(),
        len: seq.len(),
        block_size,
        pad_count: padded.len() - seq.len(),
        records,
    })
}

/// Evaluates each block at its abscissae and rounds to the nearest code.
///
/// With `strict`, any value that is not already an integer is rejected.
pub fn decode_lg(cipher: &LagrangeCipher, strict: bool) -> Result<PlainSequence> {
    let g = cipher.block_size;
    if g < 2 {
        return Err(Error::format(format!("block size must be at least 2, got {g}")));
    }
    if cipher.records.len() * g != cipher.len + cipher.pad_count || cipher.pad_count >= g {
        return Err(Error::format(format!(
            "{} blocks of {g} cannot carry {} symbols with {} pad",
            cipher.records.len(),
            cipher.len,
            cipher.pad_count
        )));
    }
    let mut codes = Vec::with_capacity(cipher.len);
    for (j, poly) in cipher.records.iter().enumerate() {
        if poly.width() != g {
            return Err(Error::format(format!("block {} has {} coefficients, expected {g}", j + 1, poly.width())));
        }
        for k in 0..g {
            let position = j * g + k + 1;
            if position > cipher.len {
                break;
            }
            let v = poly.eval(&Rational::from(position as u32));
            if strict && !v.is_integer() {
                return Err(Error::recovery(position, format!("block value {v} is not an integer")));
            }
            let code = round_to_code(&v).map_err(|_| Error::recovery(position, format!("block value {v} does not round to a code")))?;
            codes.push(code);
        }
    }
    PlainSequence::new(codes, cipher.alphabet_id.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::{to_numbers, to_text, Alphabet};

    #[test]
    fn combined_table_padding() {
        let a = Alphabet::builtin();
        let s = to_numbers("I_LOVE_MOTHER", &a).unwrap();
        assert_eq!(
            padded_codes(s.codes(), 4, a.interval_code()),
            vec![9, 27, 12, 15, 22, 5, 27, 13, 15, 20, 8, 5, 18, 27, 27, 27]
        );
        let c = encode_lg(&s, 4, a.interval_code()).unwrap();
        assert_eq!((c.records.len(), c.pad_count), (4, 3));
        assert_eq!(
            c.records[0].coeffs,
            vec![(-93).into(), 161.into(), Rational::new(-135, 2), Rational::new(17, 2)]
        );
        assert_eq!(
            c.records[1].coeffs,
            vec![3317.into(), (-1569).into(), Rational::new(489, 2), Rational::new(-25, 2)]
        );
        assert_eq!(to_text(&decode_lg(&c, true).unwrap(), &a).unwrap(), "I_LOVE_MOTHER");
    }

    #[test]
    fn single_symbol_fully_padded() {
        let a = Alphabet::builtin();
        let s = to_numbers("A", &a).unwrap();
        let c = encode_lg(&s, 4, 27).unwrap();
        assert_eq!(c.pad_count, 3);
        assert_eq!(to_text(&decode_lg(&c, true).unwrap(), &a).unwrap(), "A");
    }

    #[test]
    fn constant_block_keeps_full_width() {
        let s = PlainSequence::new(vec![5, 5, 5], "builtin").unwrap();
        let c = encode_lg(&s, 3, 27).unwrap();
        assert_eq!(c.records[0].coeffs, vec![5.into(), 0.into(), 0.into()]);
    }

    #[test]
    fn bad_block_size() {
        let s = PlainSequence::new(vec![1, 2], "builtin").unwrap();
        assert!(matches!(encode_lg(&s, 1, 27), Err(Error::Format(_))));
    }

    #[test]
    fn rounding_and_strictness() {
        let a = Alphabet::builtin();
        let s = to_numbers("I_LOVE_MY_MOTHER", &a).unwrap();
        let mut c = encode_lg(&s, 4, 27).unwrap();
        assert_eq!(decode_lg(&c, true).unwrap(), s);
        // a small constant offset still rounds back
        c.records[0].coeffs[0] = &c.records[0].coeffs[0] + &Rational::new(1, 10);
        assert_eq!(decode_lg(&c, false).unwrap(), s);
        assert!(matches!(decode_lg(&c, true), Err(Error::NonIntegerRecovery { position: 1, .. })));
        c.records[0].coeffs[0] = (-1000).into();
        assert!(matches!(decode_lg(&c, false), Err(Error::NonIntegerRecovery { .. })));
    }
}
