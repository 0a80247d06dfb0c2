//! Reorganization policies for serving a request sequence.
//!
//! All policies charge each access at the element's current position and use
//! only free exchanges, so every report has `paid_exchange_count == 0`:
//!
//! * [`run_mtf`] moves the accessed element to the front after every access.
//! * [`run_imtf`] moves it only when the same symbol occurs again within the
//!   next `i - 1` requests, where `i` is the position it was found at.
//! * [`run_static`] never reorganizes.
//! * [`run_bruteforce_oracle`] exhausts all per-access move/stay decisions and
//!   returns the cheapest outcome; it bounds what any policy in this family
//!   can achieve on small instances.

use std::fmt;

use crate::list::{CostModel, CostReport, ListConfiguration, RequestSequence};
use crate::{Error, Result};

/// The policies the crate ships.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlgorithmId {
    Mtf,
    Imtf,
    Static,
    BruteForceOracle,
}

impl fmt::Display for AlgorithmId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgorithmId::Mtf => write!(f, "mtf"),
            AlgorithmId::Imtf => write!(f, "imtf"),
            AlgorithmId::Static => write!(f, "static"),
            AlgorithmId::BruteForceOracle => write!(f, "oracle"),
        }
    }
}

/// Largest request count the exhaustive oracle accepts by default.
pub const DEFAULT_ORACLE_LIMIT: usize = 16;

/// The stretch of the request sequence a lookahead decision inspects.
///
/// After serving the request at `current_index` from position `i`, the window
/// covers the next `i - 1` requests, truncated at the end of the sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LookaheadWindow {
    /// 1-based index of the first request inside the window.
    pub start_index: usize,
    /// Number of requests covered; may be zero.
    pub length: usize,
}

impl LookaheadWindow {
    pub fn new(sequence_len: usize, current_index: usize, accessed_position: usize) -> Self {
        let remaining = sequence_len.saturating_sub(current_index);
        LookaheadWindow {
            start_index: current_index + 1,
            length: accessed_position.saturating_sub(1).min(remaining),
        }
    }
}

/// True iff the symbol at `current_index` occurs again within the next
/// `accessed_position - 1` requests. Always false for front accesses
/// (`accessed_position == 1`) and for empty or out-of-range windows.
pub fn lookahead_hit(
    seq: &RequestSequence,
    current_index: usize,
    accessed_position: usize,
) -> bool {
    let Some(target) = seq.get(current_index) else {
        return false;
    };
    let window = LookaheadWindow::new(seq.len(), current_index, accessed_position);
    seq.requests()[current_index..current_index + window.length].contains(&target)
}

/// Serves `seq` against a working copy of `list`, moving the accessed element
/// to the front whenever `move_decision(request_index, position)` says so.
fn simulate(
    list: &ListConfiguration,
    seq: &RequestSequence,
    model: CostModel,
    mut move_decision: impl FnMut(usize, usize) -> bool,
) -> Result<CostReport> {
    for &s in seq.requests() {
        if !list.contains(s) {
            return Err(Error::SymbolNotInList(s));
        }
    }

    let mut working = list.clone();
    let mut per_access_costs = Vec::with_capacity(seq.len());
    let mut move_count = 0;
    for (i, &s) in seq.requests().iter().enumerate() {
        let position = working.find_position(s).expect("requests validated above");
        per_access_costs.push(model.access_cost(position));
        if move_decision(i + 1, position) {
            working
                .move_to_front(position)
                .expect("position came from find_position");
            move_count += 1;
        }
    }

    let total_cost = per_access_costs.iter().sum();
    Ok(CostReport {
        per_access_costs,
        paid_exchange_count: 0,
        move_count,
        total_cost,
        final_list: working,
    })
}

/// Move-to-front: promotes the accessed element after every access, so
/// `move_count` equals the sequence length.
pub fn run_mtf(
    list: &ListConfiguration,
    seq: &RequestSequence,
    model: CostModel,
) -> Result<CostReport> {
    simulate(list, seq, model, |_, _| true)
}

/// Lookahead-gated move-to-front: promotes the accessed element only on a
/// [`lookahead_hit`], otherwise leaves the list untouched.
pub fn run_imtf(
    list: &ListConfiguration,
    seq: &RequestSequence,
    model: CostModel,
) -> Result<CostReport> {
    simulate(list, seq, model, |index, position| {
        lookahead_hit(seq, index, position)
    })
}

/// Baseline that never reorganizes: every access is charged at the element's
/// position in the initial list.
pub fn run_static(
    list: &ListConfiguration,
    seq: &RequestSequence,
    model: CostModel,
) -> Result<CostReport> {
    simulate(list, seq, model, |_, _| false)
}

/// Exhausts all `2^N` per-access move/stay decision vectors and returns the
/// report of the cheapest one (the first such vector on ties). Free exchanges
/// only; paid exchanges are outside this decision family.
pub fn run_bruteforce_oracle(
    list: &ListConfiguration,
    seq: &RequestSequence,
    model: CostModel,
    max_n: usize,
) -> Result<CostReport> {
    let n = seq.len();
    if n > max_n || n >= u64::BITS as usize {
        return Err(Error::InstanceTooLarge { n, max: max_n });
    }

    let mut best: Option<CostReport> = None;
    for mask in 0u64..1 << n {
        let report = simulate(list, seq, model, |index, _| mask >> (index - 1) & 1 == 1)?;
        if best
            .as_ref()
            .is_none_or(|b| report.total_cost < b.total_cost)
        {
            best = Some(report);
        }
    }
    Ok(best.expect("the mask loop runs at least once"))
}

/// Percentage cost reduction of IMTF relative to MTF:
/// `(c_mtf - c_imtf) / c_mtf * 100`. Negative when IMTF costs more.
pub fn gain(c_mtf: u64, c_imtf: u64) -> Result<f64> {
    if c_mtf == 0 {
        return Err(Error::ZeroMtfCost);
    }
    Ok((c_mtf as f64 - c_imtf as f64) / c_mtf as f64 * 100.0)
}
