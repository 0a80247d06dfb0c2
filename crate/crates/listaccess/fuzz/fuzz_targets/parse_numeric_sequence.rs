//! Numeric sequence parsing across all four bases: no panics, every kept
//! symbol a canonical digit of its base, and complete kept/skipped accounting.

#![no_main]

use libfuzzer_sys::fuzz_target;
use listaccess::parse::parse_sequence;
use listaccess::{Base, Family};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let considered = text.chars().filter(|&c| c != '\n' && c != '\r').count();
    for base in Base::ALL {
        let family = Family::Numeric(base);
        let parsed = parse_sequence(text, family);
        assert_eq!(parsed.sequence.len() + parsed.skipped, considered);
        for &s in parsed.sequence.requests() {
            assert!(family.contains(s.as_char()));
        }
    }
});
