//! Symbol ↔ code tables and plaintext code sequences.

use std::collections::HashMap;

use crate::error::{Error, Result};

pub type Code = u32;

pub const BUILTIN_ID: &str = "builtin";

/// Bijective map between single characters and positive integer codes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    id: String,
    entries: Vec<(char, Code)>,
    by_symbol: HashMap<char, Code>,
    by_code: HashMap<Code, char>,
    builtin: bool,
}

impl Alphabet {
    /// `A`..`Z` → 1..26 and `_` → 27.
    pub fn builtin() -> Self {
        let entries = ('A'..='Z').chain(['_']).zip(1..).collect();
        let mut alphabet = Alphabet::from_entries(BUILTIN_ID, entries)
            .expect("builtin table is a bijection");
        alphabet.builtin = true;
        alphabet
    }

    pub fn from_entries(id: &str, entries: Vec<(char, Code)>) -> Result<Self> {
        validate_id(id)?;
        if entries.is_empty() {
            return Err(Error::format("alphabet has no entries"));
        }
        let mut by_symbol = HashMap::with_capacity(entries.len());
        let mut by_code = HashMap::with_capacity(entries.len());
        for &(symbol, code) in &entries {
            if code < 1 {
                return Err(Error::format(format!("symbol {symbol:?} has code 0; codes start at 1")));
            }
            if by_symbol.insert(symbol, code).is_some() {
                return Err(Error::format(format!("duplicate symbol {symbol:?}")));
            }
            if by_code.insert(code, symbol).is_some() {
                return Err(Error::format(format!("duplicate code {code}")));
            }
        }
        Ok(Alphabet {
            id: id.to_owned(),
            entries,
            by_symbol,
            by_code,
            builtin: false,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn entries(&self) -> &[(char, Code)] {
        &self.entries
    }

    pub fn code_of(&self, symbol: char) -> Option<Code> {
        self.by_symbol.get(&symbol).copied()
    }

    pub fn symbol_of(&self, code: Code) -> Option<char> {
        self.by_code.get(&code).copied()
    }

    /// Code used to pad odd-length pairs and short blocks: `_`, else space,
    /// else the last entry of the table.
    pub fn interval_code(&self) -> Code {
        self.code_of('_')
            .or_else(|| self.code_of(' '))
            .unwrap_or_else(|| self.entries[self.entries.len() - 1].1)
    }

    fn normalize(&self, c: char) -> char {
        if !self.builtin {
            return c;
        }
        match c {
            ' ' => '_',
            c => c.to_ascii_uppercase(),
        }
    }
}

fn validate_id(id: &str) -> Result<()> {
    if id.is_empty() || id.chars().any(char::is_whitespace) {
        return Err(Error::format(format!("alphabet id {id:?} must be a non-empty token without whitespace")));
    }
    Ok(())
}

/// Parses the tab-separated alphabet file format.
pub fn load_alphabet(source: &str, id: &str) -> Result<Alphabet> {
    let mut entries = Vec::new();
    for (idx, line) in source.split('\n').enumerate() {
        let line_no = idx + 1;
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |column: usize, message: String| Error::Parse {
            line: line_no,
            column,
            message,
        };
        let (symbol, code) = line
            .split_once('\t')
            .ok_or_else(|| parse_err(1, "expected \"symbol<TAB>code\"".into()))?;
        let mut chars = symbol.chars();
        let symbol = match (chars.next(), chars.next()) {
            (Some(c), None) => c,
            _ => return Err(parse_err(1, format!("symbol {symbol:?} must be exactly one character"))),
        };
        let column = line.find('\t').map_or(1, |i| i + 2);
        if code.is_empty() || !code.bytes().all(|b| b.is_ascii_digit()) {
            return Err(parse_err(column, format!("code {code:?} is not a decimal integer")));
        }
        let code: Code = code
            .parse()
            .map_err(|_| parse_err(column, format!("code {code:?} out of range")))?;
        if code < 1 {
            return Err(parse_err(column, "codes start at 1; zero is not allowed".into()));
        }
        entries.push((symbol, code));
    }
    Alphabet::from_entries(id, entries)
}

/// Plaintext as its ordered code sequence (`N >= 1`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlainSequence {
    codes: Vec<Code>,
    alphabet_id: String,
}

impl PlainSequence {
    pub fn new(codes: Vec<Code>, alphabet_id: impl Into<String>) -> Result<Self> {
        if codes.is_empty() {
            return Err(Error::format("plaintext is empty"));
        }
        if let Some(pos) = codes.iter().position(|&c| c == 0) {
            return Err(Error::UnknownSymbol {
                position: pos + 1,
                symbol: "0".into(),
            });
        }
        Ok(PlainSequence {
            codes,
            alphabet_id: alphabet_id.into(),
        })
    }

    pub fn codes(&self) -> &[Code] {
        &self.codes
    }

    pub fn alphabet_id(&self) -> &str {
        &self.alphabet_id
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }
}

pub fn to_numbers(text: &str, alphabet: &Alphabet) -> Result<PlainSequence> {
    if text.is_empty() {
        return Err(Error::format("plaintext is empty"));
    }
    let codes = text
        .chars()
        .enumerate()
        .map(|(i, c)| {
            alphabet
                .code_of(alphabet.normalize(c))
                .ok_or_else(|| Error::UnknownSymbol {
                    position: i + 1,
                    symbol: c.to_string(),
                })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PlainSequence {
        codes,
        alphabet_id: alphabet.id.clone(),
    })
}

pub fn to_text(seq: &PlainSequence, alphabet: &Alphabet) -> Result<String> {
    seq.codes
        .iter()
        .enumerate()
        .map(|(i, &code)| {
            alphabet.symbol_of(code).ok_or_else(|| Error::UnknownSymbol {
                position: i + 1,
                symbol: code.to_string(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_table() {
        let a = Alphabet::builtin();
        assert_eq!(a.entries().len(), 27);
        assert_eq!(a.code_of('A'), Some(1));
        assert_eq!(a.code_of('I'), Some(9));
        assert_eq!(a.code_of('Z'), Some(26));
        assert_eq!(a.code_of('_'), Some(27));
        assert_eq!(a.interval_code(), 27);
        assert_eq!(a.id(), "builtin");
    }

    #[test]
    fn phrase_to_codes() {
        let a = Alphabet::builtin();
        let seq = to_numbers("I_LOVE_MY_MOTHER", &a).unwrap();
        assert_eq!(seq.codes(), &[9, 27, 12, 15, 22, 5, 27, 13, 25, 27, 13, 15, 20, 8, 5, 18]);
        assert_eq!(to_numbers("A", &a).unwrap().codes(), &[1]);
        assert!(matches!(to_numbers("", &a), Err(Error::Format(_))));
    }

    #[test]
    fn builtin_normalizes_case_and_spaces() {
        let a = Alphabet::builtin();
        let seq = to_numbers("i love", &a).unwrap();
        assert_eq!(to_text(&seq, &a).unwrap(), "I_LOVE");
        match to_numbers("AB1", &a) {
            Err(Error::UnknownSymbol { position, symbol }) => {
                assert_eq!((position, symbol.as_str()), (3, "1"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn custom_alphabets_match_verbatim() {
        let a = load_alphabet("a\t1\nb\t2\n", "lower").unwrap();
        assert_eq!(to_numbers("ab", &a).unwrap().codes(), &[1, 2]);
        assert!(to_numbers("A", &a).is_err());
        assert_eq!(a.interval_code(), 2);
    }

    #[test]
    fn codes_to_text() {
        let a = Alphabet::builtin();
        let seq = PlainSequence::new(vec![9, 27], BUILTIN_ID).unwrap();
        assert_eq!(to_text(&seq, &a).unwrap(), "I_");
        let seq = PlainSequence::new(vec![1], BUILTIN_ID).unwrap();
        assert_eq!(to_text(&seq, &a).unwrap(), "A");
        assert!(PlainSequence::new(vec![0], BUILTIN_ID).is_err());
        let seq = PlainSequence::new(vec![28], BUILTIN_ID).unwrap();
        assert!(matches!(to_text(&seq, &a), Err(Error::UnknownSymbol { .. })));
    }

    #[test]
    fn alphabet_files() {
        let a = load_alphabet("A\t1\nB\t2", "two").unwrap();
        assert_eq!(a.entries(), &[('A', 1), ('B', 2)]);
        let a = load_alphabet("# comment\n\n \t5\n", "space").unwrap();
        assert_eq!(a.code_of(' '), Some(5));

        for bad in ["A\t0", "A\t1\nA\t2", "A\t1\nB\t1", "AB\t1", "A 1", "A\t-1", "A\tx", "A\t1\r"] {
            assert!(load_alphabet(bad, "x").is_err(), "{bad:?} accepted");
        }
        match load_alphabet("A\t1\nB\t0\n", "x") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(load_alphabet("A\t1", "has space").is_err());
        assert!(load_alphabet("# only comments\n", "x").is_err());
    }
}
