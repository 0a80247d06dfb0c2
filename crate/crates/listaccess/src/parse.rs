//! Text parsing for sequence files and inline list specs.
//!
//! Sequence files are UTF-8 text with one request per character. Newlines
//! carry no meaning and are dropped; any other character outside the family's
//! alphabet is skipped and counted. Hex digits `a..=f` are folded to upper
//! case for numeric families before the membership test.

use crate::datagen::Family;
use crate::list::{ListConfiguration, RequestSequence, Symbol};
use crate::{Error, Result};

/// A parsed sequence plus the number of characters that were skipped for not
/// belonging to the alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedSequence {
    pub sequence: RequestSequence,
    pub skipped: usize,
}

fn canonicalize(c: char, family: Family) -> char {
    match family {
        Family::Numeric(_) => c.to_ascii_uppercase(),
        Family::AlphaSpecial => c,
    }
}

/// Parses sequence-file text: every alphabet character becomes one request,
/// newlines are ignored, everything else is skipped and counted.
pub fn parse_sequence(text: &str, family: Family) -> ParsedSequence {
    let mut requests = Vec::new();
    let mut skipped = 0;
    for c in text.chars() {
        if c == '\n' || c == '\r' {
            continue;
        }
        let c = canonicalize(c, family);
        if family.contains(c) {
            requests.push(Symbol::new(c));
        } else {
            skipped += 1;
        }
    }
    ParsedSequence {
        sequence: RequestSequence::new(requests),
        skipped,
    }
}

/// Parses an inline list spec such as `"123"`: one symbol per character,
/// rejecting characters outside the alphabet, duplicates and empty input.
pub fn parse_list(text: &str, family: Family) -> Result<ListConfiguration> {
    let mut items = Vec::new();
    for c in text.chars() {
        if c == '\n' || c == '\r' {
            continue;
        }
        let c = canonicalize(c, family);
        if !family.contains(c) {
            return Err(Error::SymbolNotInAlphabet(c));
        }
        items.push(Symbol::new(c));
    }
    ListConfiguration::new(items)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::datagen::Base;

    #[test]
    fn sequence_chars_become_requests() {
        let parsed = parse_sequence("23132", Family::AlphaSpecial);
        assert_eq!(parsed.sequence, RequestSequence::from_chars("23132"));
        assert_eq!(parsed.skipped, 0);
    }

    #[test]
    fn newlines_are_not_requests() {
        let parsed = parse_sequence("231\n32\r\n", Family::AlphaSpecial);
        assert_eq!(parsed.sequence, RequestSequence::from_chars("23132"));
        assert_eq!(parsed.skipped, 0);
    }

    #[test]
    fn out_of_alphabet_characters_are_counted() {
        let parsed = parse_sequence("a b~é", Family::AlphaSpecial);
        assert_eq!(parsed.sequence, RequestSequence::from_chars("ab"));
        assert_eq!(parsed.skipped, 3); // space, tilde, é
    }

    #[test]
    fn numeric_parsing_folds_case() {
        let parsed = parse_sequence("aF09", Family::Numeric(Base::Hexadecimal));
        assert_eq!(parsed.sequence, RequestSequence::from_chars("AF09"));
        assert_eq!(parsed.skipped, 0);

        let parsed = parse_sequence("0189", Family::Numeric(Base::Octal));
        assert_eq!(parsed.sequence, RequestSequence::from_chars("01"));
        assert_eq!(parsed.skipped, 2);
    }

    #[test]
    fn list_spec_is_strict() {
        let list = parse_list("123", Family::AlphaSpecial).unwrap();
        assert_eq!(list, ListConfiguration::from_chars("123").unwrap());

        assert_eq!(
            parse_list("1 3", Family::AlphaSpecial),
            Err(Error::SymbolNotInAlphabet(' '))
        );
        assert_eq!(
            parse_list("aa", Family::AlphaSpecial),
            Err(Error::DuplicateSymbol(Symbol::new('a')))
        );
        assert_eq!(parse_list("", Family::AlphaSpecial), Err(Error::EmptyList));
    }

    #[test]
    fn numeric_list_spec_folds_case() {
        let list = parse_list("f0", Family::Numeric(Base::Hexadecimal)).unwrap();
        assert_eq!(list, ListConfiguration::from_chars("F0").unwrap());
        assert_eq!(
            parse_list("2", Family::Numeric(Base::Binary)),
            Err(Error::SymbolNotInAlphabet('2'))
        );
    }
}
