//! Strict list parsing: no panics, and an accepted list keeps every input
//! character except line breaks exactly once, in order, within the family
//! alphabet.

#![no_main]

use libfuzzer_sys::fuzz_target;
use listaccess::parse::parse_list;
use listaccess::{Base, Family};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    for family in [
        Family::AlphaSpecial,
        Family::Numeric(Base::Binary),
        Family::Numeric(Base::Hexadecimal),
    ] {
        let Ok(list) = parse_list(text, family) else {
            continue;
        };
        let considered = text.chars().filter(|&c| c != '\n' && c != '\r').count();
        assert_eq!(list.len(), considered);
        let mut seen = Vec::with_capacity(list.len());
        for &s in list.symbols() {
            assert!(family.contains(s.as_char()));
            assert!(!seen.contains(&s));
            seen.push(s);
        }
    }
});
