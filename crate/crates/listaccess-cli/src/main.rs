//! Command-line front end: seeded workload generation, single policy runs,
//! MTF/IMTF comparisons with CSV and chart artifacts, and an exhaustive-oracle
//! self check.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use listaccess::chart::{emit_chart, ChartKind, SeriesKind};
use listaccess::experiment::{
    emit_csv, flatten_rows, parse_csv, parse_spec_config, run_experiment, CellResult,
    ExperimentSpec, RowSpec,
};
use listaccess::parse::{parse_list, parse_sequence};
use listaccess::{
    run_bruteforce_oracle, run_imtf, run_mtf, run_static, Base, CostModel, CostReport, Family,
    GenSpec, ListConfiguration, RequestSequence, DEFAULT_ORACLE_LIMIT,
};

#[derive(Parser)]
#[command(
    name = "listaccess",
    version,
    about = "Self-organizing list search: policies, workloads, comparisons"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a seeded request sequence file
    Gen(GenArgs),
    /// Run one policy over a sequence file and report its cost
    Run(RunArgs),
    /// Compare MTF against IMTF and write result artifacts
    Compare(CompareArgs),
    /// Render a chart from a results CSV
    Chart(ChartArgs),
    /// Check MTF and IMTF against the exhaustive move/stay oracle
    Oracle(OracleArgs),
}

#[derive(Args, Clone, Copy)]
struct FamilyArgs {
    /// Symbol family of the workload
    #[arg(long, value_enum, default_value_t = FamilyArg::Alpha)]
    family: FamilyArg,
    /// Numeral base for the numeric family
    #[arg(long, default_value_t = 10)]
    base: u32,
}

impl FamilyArgs {
    fn resolve(self) -> Result<Family> {
        Ok(match self.family {
            FamilyArg::Alpha => Family::AlphaSpecial,
            FamilyArg::Numeric => Family::Numeric(Base::try_from(self.base)?),
        })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    /// Letters, digits, and special characters (92 symbols)
    Alpha,
    /// Digits of the selected base
    Numeric,
}

#[derive(Clone, Copy, ValueEnum)]
enum Alg {
    Mtf,
    Imtf,
    Static,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    /// Accessing position i costs i
    Full,
    /// Accessing position i costs i - 1
    Partial,
}

impl From<ModelArg> for CostModel {
    fn from(value: ModelArg) -> Self {
        match value {
            ModelArg::Full => CostModel::Full,
            ModelArg::Partial => CostModel::Partial,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ChartKindArg {
    Line,
    Bar,
}

impl From<ChartKindArg> for ChartKind {
    fn from(value: ChartKindArg) -> Self {
        match value {
            ChartKindArg::Line => ChartKind::Line,
            ChartKindArg::Bar => ChartKind::Bar,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesArg {
    #[value(name = "c_mtf")]
    CMtf,
    #[value(name = "c_imtf")]
    CImtf,
    #[value(name = "g")]
    G,
}

impl From<SeriesArg> for SeriesKind {
    fn from(value: SeriesArg) -> Self {
        match value {
            SeriesArg::CMtf => SeriesKind::CMtf,
            SeriesArg::CImtf => SeriesKind::CImtf,
            SeriesArg::G => SeriesKind::Gain,
        }
    }
}

fn series_kinds(series: &Option<Vec<SeriesArg>>) -> Vec<SeriesKind> {
    series
        .clone()
        .unwrap_or_else(|| vec![SeriesArg::CMtf, SeriesArg::CImtf])
        .into_iter()
        .map(SeriesKind::from)
        .collect()
}

#[derive(Args)]
struct GenArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Number of requests to generate
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
    /// RNG seed
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file for the sequence
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct RunArgs {
    /// Policy to run
    #[arg(long, value_enum)]
    alg: Alg,
    /// Sequence file to serve
    #[arg(long)]
    seq: PathBuf,
    /// Initial list given inline as a string of symbols
    #[arg(long, conflicts_with = "list_file")]
    list: Option<String>,
    /// Initial list read from a file
    #[arg(long)]
    list_file: Option<PathBuf>,
    #[command(flatten)]
    family: FamilyArgs,
    /// Cost model charged per access
    #[arg(long, value_enum, default_value_t = ModelArg::Full)]
    model: ModelArg,
    /// Print the per-access cost trace
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
#[command(group = ArgGroup::new("workload").required(true).args(["spec", "seq", "n"]))]
struct CompareArgs {
    /// Workload config: one row per line, `alpha <n> <seed>` or `numeric <base> <n> <seed>`
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Compare over one given sequence file
    #[arg(long)]
    seq: Option<PathBuf>,
    /// Initial list for --seq, inline as a string of symbols
    #[arg(long, requires = "seq", conflicts_with = "list_file")]
    list: Option<String>,
    /// Initial list for --seq, read from a file
    #[arg(long, requires = "seq")]
    list_file: Option<PathBuf>,
    #[command(flatten)]
    family: FamilyArgs,
    /// Generate one workload of this length instead of reading files
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: Option<u64>,
    /// RNG seed for --n; trials step it by one
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Cost model charged per access
    #[arg(long, value_enum, default_value_t = ModelArg::Full)]
    model: ModelArg,
    /// Trials per row, reported as mean and standard deviation
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    trials: u32,
    /// Write per-trial results as CSV
    #[arg(long)]
    out_csv: Option<PathBuf>,
    /// Render the results as a chart file
    #[arg(long)]
    out_chart: Option<PathBuf>,
    /// Chart style for --out-chart
    #[arg(long, value_enum, default_value_t = ChartKindArg::Line)]
    chart_kind: ChartKindArg,
    /// Series to plot, comma separated (default c_mtf,c_imtf)
    #[arg(long, value_enum, value_delimiter = ',')]
    series: Option<Vec<SeriesArg>>,
}

#[derive(Args)]
struct ChartArgs {
    /// Results CSV written by compare
    #[arg(long)]
    csv: PathBuf,
    /// Output chart file
    #[arg(long)]
    out: PathBuf,
    /// Chart style
    #[arg(long, value_enum, default_value_t = ChartKindArg::Line)]
    kind: ChartKindArg,
    /// Series to plot, comma separated (default c_mtf,c_imtf)
    #[arg(long, value_enum, value_delimiter = ',')]
    series: Option<Vec<SeriesArg>>,
}

#[derive(Args)]
struct OracleArgs {
    /// Sequence file to serve
    #[arg(long)]
    seq: PathBuf,
    /// Initial list given inline as a string of symbols
    #[arg(long, conflicts_with = "list_file")]
    list: Option<String>,
    /// Initial list read from a file
    #[arg(long)]
    list_file: Option<PathBuf>,
    #[command(flatten)]
    family: FamilyArgs,
    /// Cost model charged per access
    #[arg(long, value_enum, default_value_t = ModelArg::Full)]
    model: ModelArg,
    /// Largest sequence length the exhaustive search accepts
    #[arg(long, env = "LISTACCESS_ORACLE_MAX_N", default_value_t = DEFAULT_ORACLE_LIMIT)]
    max_n: usize,
}

fn main() -> Result<()> {
    match Cli::parse().command {
        Command::Gen(args) => cmd_gen(args),
        Command::Run(args) => cmd_run(args),
        Command::Compare(args) => cmd_compare(args),
        Command::Chart(args) => cmd_chart(args),
        Command::Oracle(args) => cmd_oracle(args),
    }
}

fn cmd_gen(args: GenArgs) -> Result<()> {
    let family = args.family.resolve()?;
    let seq = listaccess::gen_sequence(&GenSpec {
        family,
        n: args.n as usize,
        seed: args.seed,
    });
    let text: String = seq.requests().iter().map(|s| s.as_char()).collect();
    fs::write(&args.out, format!("{text}\n"))
        .with_context(|| format!("writing {}", args.out.display()))?;

    let distinct: BTreeSet<_> = seq.requests().iter().collect();
    println!(
        "wrote {} requests ({} distinct) to {}",
        seq.len(),
        distinct.len(),
        args.out.display()
    );
    Ok(())
}

fn cmd_run(args: RunArgs) -> Result<()> {
    let family = args.family.resolve()?;
    let seq = load_sequence(&args.seq, family)?;
    let list = resolve_list(&args.list, &args.list_file, family, &seq)?;

    let run = match args.alg {
        Alg::Mtf => run_mtf,
        Alg::Imtf => run_imtf,
        Alg::Static => run_static,
    };
    let report = run(&list, &seq, args.model.into())?;

    println!("requests: {}", seq.len());
    println!("list size: {}", list.len());
    println!("total cost: {}", report.total_cost);
    println!("moves: {}", report.move_count);
    if args.trace {
        let costs: Vec<String> = report.per_access_costs.iter().map(u64::to_string).collect();
        println!("trace: {}", costs.join(" "));
    }
    Ok(())
}

fn cmd_compare(args: CompareArgs) -> Result<()> {
    let family = args.family.resolve()?;
    let rows = if let Some(path) = &args.spec {
        let text =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        parse_spec_config(&text).with_context(|| format!("parsing {}", path.display()))?
    } else if let Some(path) = &args.seq {
        let seq = load_sequence(path, family)?;
        let list = match (&args.list, &args.list_file) {
            (None, None) => None,
            _ => Some(resolve_list(&args.list, &args.list_file, family, &seq)?),
        };
        vec![RowSpec::Given { seq, list }]
    } else {
        let n = args.n.expect("the workload arg group requires --n here");
        vec![RowSpec::Generated(GenSpec {
            family,
            n: n as usize,
            seed: args.seed,
        })]
    };

    let cells = run_experiment(&ExperimentSpec {
        rows,
        model: args.model.into(),
        trials: args.trials,
    })?;
    print_results(&cells, args.trials);

    let flat = flatten_rows(&cells);
    if let Some(path) = &args.out_csv {
        fs::write(path, emit_csv(&flat)?).with_context(|| format!("writing {}", path.display()))?;
        println!("wrote {}", path.display());
    }
    if let Some(path) = &args.out_chart {
        let chart = emit_chart(&flat, args.chart_kind.into(), &series_kinds(&args.series))?;
        fs::write(path, chart).with_context(|| format!("writing {}", path.display()))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn cmd_chart(args: ChartArgs) -> Result<()> {
    let text =
        fs::read_to_string(&args.csv).with_context(|| format!("reading {}", args.csv.display()))?;
    let rows = parse_csv(&text).with_context(|| format!("parsing {}", args.csv.display()))?;
    let chart = emit_chart(&rows, args.kind.into(), &series_kinds(&args.series))?;
    fs::write(&args.out, chart).with_context(|| format!("writing {}", args.out.display()))?;
    println!("wrote {}", args.out.display());
    Ok(())
}

fn cmd_oracle(args: OracleArgs) -> Result<()> {
    let family = args.family.resolve()?;
    let seq = load_sequence(&args.seq, family)?;
    let list = resolve_list(&args.list, &args.list_file, family, &seq)?;
    let model: CostModel = args.model.into();

    let oracle = run_bruteforce_oracle(&list, &seq, model, args.max_n)?;
    let mtf = run_mtf(&list, &seq, model)?;
    let imtf = run_imtf(&list, &seq, model)?;
    let show = |name: &str, report: &CostReport| {
        println!(
            "{name:>6}: total {} ({} moves)",
            report.total_cost, report.move_count
        );
    };
    show("oracle", &oracle);
    show("mtf", &mtf);
    show("imtf", &imtf);

    if oracle.total_cost > mtf.total_cost || oracle.total_cost > imtf.total_cost {
        bail!(
            "oracle total {} exceeds a policy total (mtf {}, imtf {})",
            oracle.total_cost,
            mtf.total_cost,
            imtf.total_cost
        );
    }
    Ok(())
}

fn print_results(cells: &[CellResult], trials: u32) {
    if trials <= 1 {
        println!(
            "{:>6} {:>5} {:>10} {:>10} {:>8}",
            "N", "L", "C_MTF", "C_IMTF", "g%"
        );
        for row in cells.iter().flat_map(|c| &c.rows) {
            println!(
                "{:>6} {:>5} {:>10} {:>10} {:>8.2}",
                row.n, row.l, row.c_mtf, row.c_imtf, row.gain_percent
            );
        }
    } else {
        println!(
            "{:>6} {:>7} {:>8} {:>12} {:>12} {:>8} {:>9}",
            "N", "trials", "L_mean", "C_MTF_mean", "C_IMTF_mean", "g_mean", "g_stddev"
        );
        for cell in cells {
            let s = &cell.summary;
            println!(
                "{:>6} {:>7} {:>8.1} {:>12.1} {:>12.1} {:>8.2} {:>9.2}",
                s.n, s.trials, s.mean_l, s.mean_c_mtf, s.mean_c_imtf, s.mean_gain, s.stddev_gain
            );
        }
    }
    if let [cell] = cells {
        if let [row] = &cell.rows[..] {
            println!("g = {:.2}%", row.gain_percent);
        }
    }
}

fn load_sequence(path: &Path, family: Family) -> Result<RequestSequence> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let parsed = parse_sequence(&text, family);
    if parsed.skipped > 0 {
        eprintln!(
            "warning: skipped {} character(s) outside the {family} alphabet in {}",
            parsed.skipped,
            path.display()
        );
    }
    if parsed.sequence.is_empty() {
        bail!("{} contains no usable requests", path.display());
    }
    Ok(parsed.sequence)
}

/// Builds the initial list from an inline string, a file, or (when neither is
/// given) the sequence's distinct symbols in first-occurrence order.
fn resolve_list(
    inline: &Option<String>,
    file: &Option<PathBuf>,
    family: Family,
    seq: &RequestSequence,
) -> Result<ListConfiguration> {
    let text = match (inline, file) {
        (Some(text), _) => text.clone(),
        (None, Some(path)) => {
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
        }
        (None, None) => return Ok(listaccess::build_list(seq)?),
    };
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    Ok(parse_list(&compact, family)?)
}
