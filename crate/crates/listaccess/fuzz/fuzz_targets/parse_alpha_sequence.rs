//! Lenient sequence parsing over the 92-symbol family must never panic, and
//! its kept/skipped accounting must cover every non-line-break character.

#![no_main]

use libfuzzer_sys::fuzz_target;
use listaccess::parse::parse_sequence;
use listaccess::Family;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let family = Family::AlphaSpecial;
    let parsed = parse_sequence(text, family);

    let considered = text.chars().filter(|&c| c != '\n' && c != '\r').count();
    assert_eq!(parsed.sequence.len() + parsed.skipped, considered);
    for &s in parsed.sequence.requests() {
        assert!(family.contains(s.as_char()));
    }
});
