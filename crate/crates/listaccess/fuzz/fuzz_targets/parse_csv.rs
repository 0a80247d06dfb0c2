//! Results-CSV parsing: no panics, and emit-then-parse is a fixed point after
//! one round (integer fields survive exactly, gains settle at two decimals).

#![no_main]

use libfuzzer_sys::fuzz_target;
use listaccess::experiment::{emit_csv, parse_csv};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(rows) = parse_csv(text) else {
        return;
    };
    assert!(!rows.is_empty());

    let emitted = emit_csv(&rows).expect("parsed rows are non-empty");
    let reparsed = parse_csv(&emitted).expect("emitted CSV is well-formed");
    assert_eq!(rows.len(), reparsed.len());
    for (a, b) in rows.iter().zip(&reparsed) {
        assert_eq!(a.n, b.n);
        assert_eq!(a.l, b.l);
        assert_eq!(a.c_mtf, b.c_mtf);
        assert_eq!(a.c_imtf, b.c_imtf);
    }
    assert_eq!(emitted, emit_csv(&reparsed).expect("same row count"));
});
