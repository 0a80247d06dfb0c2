//! Comparison runs of MTF vs IMTF over generated or given workloads.
//!
//! Every row runs both policies against the *same* list and sequence, then
//! reports the pair of total costs and the relative gain. Runs are
//! deterministic for fixed seeds; repeating a spec reproduces its CSV output
//! byte for byte.

use crate::algo::{gain, run_imtf, run_mtf};
use crate::datagen::{build_list, gen_sequence, Base, Family, GenSpec};
use crate::list::{CostModel, ListConfiguration, RequestSequence};
use crate::{Error, Result};

/// One workload to compare the policies on.
#[derive(Debug, Clone, PartialEq)]
pub enum RowSpec {
    /// Generate the sequence from a seeded spec; the list is built from the
    /// sequence's distinct symbols.
    Generated(GenSpec),
    /// Use the given sequence, and the given list when present (otherwise the
    /// list is built from the sequence).
    Given {
        seq: RequestSequence,
        list: Option<ListConfiguration>,
    },
}

/// A full comparison request. `trials` repeats each row with seeds
/// `seed`, `seed + 1`, ... for generated rows (given rows are re-run as-is).
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentSpec {
    pub rows: Vec<RowSpec>,
    pub model: CostModel,
    pub trials: u32,
}

impl ExperimentSpec {
    pub fn new(rows: Vec<RowSpec>) -> Self {
        ExperimentSpec {
            rows,
            model: CostModel::Full,
            trials: 1,
        }
    }
}

/// One comparison outcome, shaped like a results-table row.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentRow {
    /// Sequence length.
    pub n: usize,
    /// Measured list size.
    pub l: usize,
    pub c_mtf: u64,
    pub c_imtf: u64,
    /// `(c_mtf - c_imtf) / c_mtf * 100`.
    pub gain_percent: f64,
}

/// Mean and spread over one row's trials.
#[derive(Debug, Clone, PartialEq)]
pub struct CellSummary {
    pub n: usize,
    pub trials: u32,
    pub mean_l: f64,
    pub mean_c_mtf: f64,
    pub mean_c_imtf: f64,
    pub mean_gain: f64,
    /// Sample standard deviation of the gain; zero for a single trial.
    pub stddev_gain: f64,
}

/// All trials of one spec row plus their summary.
#[derive(Debug, Clone, PartialEq)]
pub struct CellResult {
    pub rows: Vec<ExperimentRow>,
    pub summary: CellSummary,
}

/// Runs both policies on one workload.
pub fn run_row(row: &RowSpec, model: CostModel) -> Result<ExperimentRow> {
    let (seq, list) = match row {
        RowSpec::Generated(spec) => {
            let seq = gen_sequence(spec);
            let list = build_list(&seq)?;
            (seq, list)
        }
        RowSpec::Given { seq, list } => {
            let list = match list {
                Some(list) => list.clone(),
                None => build_list(seq)?,
            };
            (seq.clone(), list)
        }
    };

    let mtf = run_mtf(&list, &seq, model)?;
    let imtf = run_imtf(&list, &seq, model)?;
    Ok(ExperimentRow {
        n: seq.len(),
        l: list.len(),
        c_mtf: mtf.total_cost,
        c_imtf: imtf.total_cost,
        gain_percent: gain(mtf.total_cost, imtf.total_cost)?,
    })
}

fn rerun_spec(row: &RowSpec, trial: u32) -> RowSpec {
    match row {
        RowSpec::Generated(spec) => RowSpec::Generated(GenSpec {
            seed: spec.seed.wrapping_add(trial as u64),
            ..*spec
        }),
        given => given.clone(),
    }
}

/// Runs every row of the spec, `spec.trials` times each.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<Vec<CellResult>> {
    if spec.rows.is_empty() {
        return Err(Error::NoRows);
    }
    let trials = spec.trials.max(1);

    let mut cells = Vec::with_capacity(spec.rows.len());
    for row_spec in &spec.rows {
        let rows = (0..trials)
            .map(|t| run_row(&rerun_spec(row_spec, t), spec.model))
            .collect::<Result<Vec<_>>>()?;
        let summary = summarize(&rows);
        cells.push(CellResult { rows, summary });
    }
    Ok(cells)
}

fn summarize(rows: &[ExperimentRow]) -> CellSummary {
    let trials = rows.len();
    let mean = |f: &dyn Fn(&ExperimentRow) -> f64| rows.iter().map(f).sum::<f64>() / trials as f64;
    let mean_gain = mean(&|r| r.gain_percent);
    let stddev_gain = if trials > 1 {
        let var = rows
            .iter()
            .map(|r| (r.gain_percent - mean_gain).powi(2))
            .sum::<f64>()
            / (trials - 1) as f64;
        var.sqrt()
    } else {
        0.0
    };

    CellSummary {
        n: rows[0].n,
        trials: trials as u32,
        mean_l: mean(&|r| r.l as f64),
        mean_c_mtf: mean(&|r| r.c_mtf as f64),
        mean_c_imtf: mean(&|r| r.c_imtf as f64),
        mean_gain,
        stddev_gain,
    }
}

/// All trial rows of all cells, in run order.
pub fn flatten_rows(cells: &[CellResult]) -> Vec<ExperimentRow> {
    cells.iter().flat_map(|c| c.rows.iter().cloned()).collect()
}

/// Rounds to two decimals, ties away from zero.
fn round2(x: f64) -> f64 {
    (x * 100.0).round() / 100.0
}

pub const CSV_HEADER: &str = "N,L,C_MTF,C_IMTF,g_percent";

/// Serializes rows as CSV: `N,L,C_MTF,C_IMTF,g_percent`, gain with two
/// decimals.
pub fn emit_csv(rows: &[ExperimentRow]) -> Result<String> {
    if rows.is_empty() {
        return Err(Error::NoRows);
    }
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{:.2}\n",
            row.n,
            row.l,
            row.c_mtf,
            row.c_imtf,
            round2(row.gain_percent)
        ));
    }
    Ok(out)
}

/// Serializes per-cell trial summaries; clearly a multi-trial format.
pub fn emit_trials_csv(cells: &[CellResult]) -> Result<String> {
    if cells.is_empty() {
        return Err(Error::NoRows);
    }
    let mut out = String::from("N,trials,L_mean,C_MTF_mean,C_IMTF_mean,g_mean,g_stddev\n");
    for cell in cells {
        let s = &cell.summary;
        out.push_str(&format!(
            "{},{},{:.2},{:.2},{:.2},{:.2},{:.2}\n",
            s.n,
            s.trials,
            round2(s.mean_l),
            round2(s.mean_c_mtf),
            round2(s.mean_c_imtf),
            round2(s.mean_gain),
            round2(s.stddev_gain)
        ));
    }
    Ok(out)
}

/// Parses rows back from [`emit_csv`] output.
pub fn parse_csv(text: &str) -> Result<Vec<ExperimentRow>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header.trim_end() == CSV_HEADER => {}
        Some((_, header)) => {
            return Err(Error::CsvParse {
                line: 1,
                message: format!("expected header '{CSV_HEADER}', found '{header}'"),
            })
        }
        None => {
            return Err(Error::CsvParse {
                line: 1,
                message: "missing header".into(),
            })
        }
    }

    let mut rows = Vec::new();
    for (i, line) in lines {
        let line = line.trim_end();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        let parse = |what: &str, field: &str| -> Result<u64> {
            field.trim().parse().map_err(|_| Error::CsvParse {
                line: i + 1,
                message: format!("invalid {what}: '{field}'"),
            })
        };
        if fields.len() != 5 {
            return Err(Error::CsvParse {
                line: i + 1,
                message: format!("expected 5 fields, found {}", fields.len()),
            });
        }
        rows.push(ExperimentRow {
            n: parse("N", fields[0])? as usize,
            l: parse("L", fields[1])? as usize,
            c_mtf: parse("C_MTF", fields[2])?,
            c_imtf: parse("C_IMTF", fields[3])?,
            gain_percent: fields[4].trim().parse().map_err(|_| Error::CsvParse {
                line: i + 1,
                message: format!("invalid g_percent: '{}'", fields[4]),
            })?,
        });
    }
    if rows.is_empty() {
        return Err(Error::NoRows);
    }
    Ok(rows)
}

/// Parses a plain-text experiment config: one row per line, either
/// `alpha <n> <seed>` or `numeric <base> <n> <seed>`. Blank lines and `#`
/// comments are skipped.
pub fn parse_spec_config(text: &str) -> Result<Vec<RowSpec>> {
    let mut rows = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::ConfigParse {
            line: i + 1,
            message,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let parse_num = |what: &str, tok: &str| -> Result<u64> {
            tok.parse()
                .map_err(|_| err(format!("invalid {what}: '{tok}'")))
        };

        let family = match (tokens[0], tokens.len()) {
            ("alpha", 3) => Family::AlphaSpecial,
            ("numeric", 4) => {
                let base = parse_num("base", tokens[1])? as u32;
                Family::Numeric(Base::try_from(base).map_err(|e| err(e.to_string()))?)
            }
            ("alpha", n) => {
                return Err(err(format!(
                    "expected 'alpha <n> <seed>', found {n} tokens"
                )))
            }
            ("numeric", n) => {
                return Err(err(format!(
                    "expected 'numeric <base> <n> <seed>', found {n} tokens"
                )))
            }
            (other, _) => return Err(err(format!("unknown family '{other}'"))),
        };
        let n = parse_num("n", tokens[tokens.len() - 2])? as usize;
        let seed = parse_num("seed", tokens[tokens.len() - 1])?;
        if n == 0 {
            return Err(err("n must be at least 1".into()));
        }
        rows.push(RowSpec::Generated(GenSpec { family, n, seed }));
    }
    Ok(rows)
}
