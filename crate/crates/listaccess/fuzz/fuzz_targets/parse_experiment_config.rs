//! Workload config parsing: no panics, and every accepted row is a generated
//! workload with a positive length.

#![no_main]

use libfuzzer_sys::fuzz_target;
use listaccess::experiment::{parse_spec_config, RowSpec};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(rows) = parse_spec_config(text) else {
        return;
    };
    for row in rows {
        let RowSpec::Generated(spec) = row else {
            panic!("config rows are always generated workloads");
        };
        assert!(spec.n >= 1);
        assert!(spec.family.alphabet_size() >= 2);
    }
});
