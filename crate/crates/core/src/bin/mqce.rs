use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgAction, Args, Parser, Subcommand};

use mqce::generator::{gen_er_edges, GenSpec};
use mqce::io::{read_graph, read_qc_lines, to_label_sets, write_qc_lines, write_stats};
use mqce::run::{default_bench_configs, enumerate_labels, er_corpus, run_bench, BenchCase};
use mqce::{filter_maximal, oracle, Algo, Error, QcParams, RunConfig, Strategy};

#[derive(Parser)]
#[command(name = "mqce", version, about = "Maximal quasi-clique enumeration")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Enumerate maximal quasi-cliques of an edge-list graph.
    Enum(EnumArgs),
    /// Generate an Erdős–Rényi edge list with exactly m edges.
    Gen(GenArgs),
    /// Brute-force reference answer for a small graph.
    Oracle(OracleArgs),
    /// Keep only the inclusion-maximal sets of a QC-line file.
    Filter(FilterArgs),
    /// Compare algorithm configurations on an ER corpus.
    Bench(BenchArgs),
}

#[derive(Args)]
struct Thresholds {
    /// Fraction threshold, a decimal in [0.5, 1].
    #[arg(short, long)]
    gamma: String,
    /// Size threshold, at least 1.
    #[arg(short, long)]
    theta: usize,
}

impl Thresholds {
    fn params(&self) -> mqce::Result<QcParams> {
        QcParams::parse(&self.gamma, self.theta)
    }
}

#[derive(Args)]
struct EnumArgs {
    /// Edge-list file.
    #[arg(short, long)]
    input: PathBuf,
    #[command(flatten)]
    thresholds: Thresholds,
    #[arg(long, default_value = "dc-fastqc")]
    algo: Algo,
    #[arg(long, default_value = "hybrid")]
    branching: Strategy,
    #[arg(long, default_value_t = 2)]
    max_round: usize,
    /// Two-hop pruning in the divide-and-conquer driver.
    #[arg(long, default_value = "on", value_parser = on_off, action = ArgAction::Set)]
    two_hop: bool,
    /// Remove non-maximal sets before writing.
    #[arg(long, default_value = "on", value_parser = on_off, action = ArgAction::Set)]
    filter: bool,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Output file; stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Stats JSON file.
    #[arg(long)]
    stats: Option<PathBuf>,
}

#[derive(Args)]
struct GenArgs {
    #[arg(short, long)]
    n: usize,
    #[arg(short, long)]
    m: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(short, long)]
    input: PathBuf,
    #[command(flatten)]
    thresholds: Thresholds,
    /// List every QC of size at least theta instead of the maximal ones.
    #[arg(long)]
    all: bool,
    #[arg(long, default_value_t = oracle::DEFAULT_MAX_N)]
    max_n: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct FilterArgs {
    #[arg(short, long)]
    input: PathBuf,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    #[command(flatten)]
    thresholds: Thresholds,
    /// Number of generated graphs.
    #[arg(long, default_value_t = 10)]
    graphs: usize,
    #[arg(long, default_value_t = 40)]
    n_min: usize,
    #[arg(long, default_value_t = 80)]
    n_max: usize,
    /// Lower bound on m/n.
    #[arg(long, default_value_t = 5.0)]
    density_min: f64,
    /// Upper bound on m/n.
    #[arg(long, default_value_t = 15.0)]
    density_max: f64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Extra edge-list files added to the corpus.
    #[arg(long)]
    input: Vec<PathBuf>,
    #[arg(long, default_value_t = 2)]
    max_round: usize,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Per-run CSV; stdout when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Per-configuration medians as CSV.
    #[arg(long)]
    summary: Option<PathBuf>,
}

fn on_off(s: &str) -> Result<bool, String> {
    match s {
        "on" | "true" => Ok(true),
        "off" | "false" => Ok(false),
        _ => Err(format!("expected on or off, got {s:?}")),
    }
}

fn sink(path: Option<&Path>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn cmd_enum(a: EnumArgs) -> mqce::Result<()> {
    let params = a.thresholds.params()?;
    if a.max_round == 0 || a.jobs == 0 {
        return Err(Error::InvalidParams(
            "max-round and jobs must be at least 1".into(),
        ));
    }
    let g = read_graph(&a.input)?;
    let cfg = RunConfig {
        algo: a.algo,
        strategy: a.branching,
        max_round: a.max_round,
        two_hop: a.two_hop,
        filter_maximal: a.filter,
        jobs: a.jobs,
    };
    let (sets, stats) = enumerate_labels(&g, &params, &cfg);
    let mut out = sink(a.output.as_deref())?;
    write_qc_lines(&sets, &mut out)?;
    out.flush()?;
    if let Some(p) = a.stats {
        write_stats(&stats, File::create(p)?)?;
    }
    Ok(())
}

fn cmd_gen(a: GenArgs) -> mqce::Result<()> {
    let edges = gen_er_edges(&GenSpec::new(a.n, a.m, a.seed))?;
    let mut out = sink(a.output.as_deref())?;
    for (u, v) in edges {
        writeln!(out, "{u} {v}")?;
    }
    out.flush()?;
    Ok(())
}

fn cmd_oracle(a: OracleArgs) -> mqce::Result<()> {
    let params = a.thresholds.params()?;
    let g = read_graph(&a.input)?;
    let sets = if a.all {
        oracle::all_qcs_limited(&g, &params, a.max_n)?
    } else {
        oracle::all_mqcs_limited(&g, &params, a.max_n)?
    };
    let mut out = sink(a.output.as_deref())?;
    write_qc_lines(&to_label_sets(&g, &sets), &mut out)?;
    out.flush()?;
    Ok(())
}

fn cmd_filter(a: FilterArgs) -> mqce::Result<()> {
    let sets = read_qc_lines(BufReader::new(File::open(&a.input)?))?;
    let mut out = sink(a.output.as_deref())?;
    write_qc_lines(&filter_maximal(&sets), &mut out)?;
    out.flush()?;
    Ok(())
}

fn cmd_bench(a: BenchArgs) -> mqce::Result<()> {
    let params = a.thresholds.params()?;
    if a.n_min > a.n_max || a.density_min > a.density_max || a.max_round == 0 || a.jobs == 0 {
        return Err(Error::InvalidParams(
            "empty corpus range or zero rounds/jobs".into(),
        ));
    }
    let mut cases = er_corpus(
        a.graphs,
        (a.n_min, a.n_max),
        (a.density_min, a.density_max),
        params,
        a.seed,
    )?;
    for path in &a.input {
        cases.push(BenchCase {
            name: path.display().to_string(),
            graph: read_graph(path)?,
            params,
        });
    }
    let report = run_bench(&cases, &default_bench_configs(), a.max_round, a.jobs);
    let mut out = sink(a.output.as_deref())?;
    report.write_rows_csv(&mut out)?;
    out.flush()?;
    if let Some(p) = a.summary {
        report.write_summary_csv(File::create(p)?)?;
    }
    for s in &report.summary {
        eprintln!(
            "{:<32} median branches {:>12.1}  median ms {:>10.3}",
            s.config, s.median_branches, s.median_wall_ms
        );
    }
    for m in &report.mismatches {
        eprintln!("output mismatch: {m}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Enum(a) => cmd_enum(a),
        Cmd::Gen(a) => cmd_gen(a),
        Cmd::Oracle(a) => cmd_oracle(a),
        Cmd::Filter(a) => cmd_filter(a),
        Cmd::Bench(a) => cmd_bench(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(
            e @ (Error::InvalidParams(_) | Error::TooManyEdges { .. } | Error::OracleLimit { .. }),
        ) => {
            eprintln!("mqce: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("mqce: {e}");
            ExitCode::from(1)
        }
    }
}
