//! Fuzzed end-to-end policy runs on small instances: positional cost bounds,
//! the full/partial cost identity, move-count contracts, and oracle dominance.

#![no_main]

use libfuzzer_sys::fuzz_target;
use listaccess::{
    run_bruteforce_oracle, run_imtf, run_mtf, run_static, CostModel, ListConfiguration,
    RequestSequence, Symbol,
};

fuzz_target!(|data: &[u8]| {
    let Some((&first, rest)) = data.split_first() else {
        return;
    };
    if rest.is_empty() {
        return;
    }
    let l = (first % 8 + 1) as usize;
    let symbols: Vec<Symbol> = (0..l)
        .map(|i| Symbol::new((b'a' + i as u8) as char))
        .collect();
    let list = ListConfiguration::new(symbols.clone()).expect("distinct letters");
    let seq = RequestSequence::new(
        rest.iter()
            .take(24)
            .map(|&b| symbols[b as usize % l])
            .collect(),
    );
    let n = seq.len() as u64;

    let mut totals = Vec::new();
    for run in [run_mtf, run_imtf, run_static] {
        let full = run(&list, &seq, CostModel::Full).expect("in-list requests");
        let partial = run(&list, &seq, CostModel::Partial).expect("in-list requests");
        assert_eq!(full.total_cost, partial.total_cost + n);
        assert!(full.total_cost >= n);
        assert!(full.total_cost <= n * l as u64);
        assert_eq!(full.per_access_costs.len(), seq.len());
        assert!(full.move_count <= n);
        totals.push(full.total_cost);
    }

    if seq.len() <= 10 {
        let oracle = run_bruteforce_oracle(&list, &seq, CostModel::Full, 10)
            .expect("within the exhaustive limit");
        for &total in &totals {
            assert!(oracle.total_cost <= total);
        }
    }
});
