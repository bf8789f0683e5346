use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use lpsearch_bench::config::{parse_functions, parse_list, Preset};
use lpsearch_bench::{emit_report, quasi_vs_random, run_benchmark, BenchError, Format, RunConfig};

/// Global-search sweeps over the test suite with quasi-random, random and
/// grid trial points.
#[derive(Parser, Debug)]
#[command(name = "lpbench", version)]
struct Cli {
    /// key = value file; flags given on the command line take precedence
    #[arg(long)]
    config: Option<PathBuf>,
    /// paper-tables or quasi-vs-random
    #[arg(long)]
    preset: Option<Preset>,
    /// Function ids, comma separated, or "all"
    #[arg(long, short)]
    function: Option<String>,
    /// halton, sobol (or lp), hybrid, random, grid; comma separated
    #[arg(long, short)]
    method: Option<String>,
    /// Trial counts, comma separated [default: 2000,8192,32767,65535]
    #[arg(long, short = 'n')]
    points: Option<String>,
    /// Also refine every incumbent
    #[arg(long)]
    refine: bool,
    /// Gradient-norm tolerance for refinement
    #[arg(long)]
    epsilon: Option<f64>,
    /// Seed for random and hybrid points (hybrid defaults to 0)
    #[arg(long)]
    seed: Option<u64>,
    /// csv or json
    #[arg(long)]
    format: Option<Format>,
    /// Output file; stdout if omitted
    #[arg(long, short)]
    out: Option<PathBuf>,
    /// builtin, bratley-fox, or a path to a "j s numerator" table file
    #[arg(long)]
    direction_table: Option<String>,
    /// Run Fletcher-Powell on x1 in [0, 1]
    #[arg(long)]
    published_boxes: bool,
    /// Report wall time as 0 so repeated runs are byte-identical
    #[arg(long)]
    no_timing: bool,
    /// Random-search seeds for the quasi-vs-random preset
    #[arg(long, default_value_t = 100)]
    seeds: u64,
}

fn build_config(cli: &Cli) -> Result<RunConfig, BenchError> {
    let mut config = match cli.preset {
        Some(Preset::Published) => RunConfig::published_tables(),
        _ => RunConfig::default(),
    };
    if let Some(path) = &cli.config {
        config.apply_file(path)?;
    }
    if let Some(s) = &cli.function {
        config.functions = parse_functions(s)?;
    }
    if let Some(s) = &cli.method {
        config.methods = parse_list(s)?;
    }
    if let Some(s) = &cli.points {
        config.points = parse_list(s)?;
    }
    if cli.refine {
        config.refine = true;
    }
    if let Some(e) = cli.epsilon {
        config.epsilon = e;
    }
    if cli.seed.is_some() {
        config.seed = cli.seed;
    }
    if let Some(f) = cli.format {
        config.format = f;
    }
    if cli.out.is_some() {
        config.out = cli.out.clone();
    }
    if let Some(t) = &cli.direction_table {
        config.direction_table = t.parse()?;
    }
    if cli.published_boxes {
        config.published_boxes = true;
    }
    if cli.no_timing {
        config.timing = false;
    }
    config.validate()?;
    Ok(config)
}

fn run(cli: &Cli) -> Result<(), BenchError> {
    let config = build_config(cli)?;
    if cli.preset == Some(Preset::QuasiVsRandom) {
        let table = config.direction_table.load()?;
        let cmp = quasi_vs_random(cli.seeds, config.seed.unwrap_or(0), 0.05, 1 << 20, table)?;
        let text = match config.format {
            Format::Json => serde_json::to_string_pretty(&cmp)? + "\n",
            Format::Csv => {
                let show = |h: Option<u64>| h.map_or("none".to_string(), |v| v.to_string());
                format!(
                    "method,runs,first_hit_n\nsobol,1,{}\nhalton,1,{}\nrandom_median,{},{:.1}\n# ratio random_median/sobol = {}\n",
                    show(cmp.sobol),
                    show(cmp.halton),
                    cmp.random.len(),
                    cmp.random_median,
                    cmp.ratio.map_or("n/a".into(), |r| format!("{r:.2}")),
                )
            }
        };
        match &config.out {
            Some(p) => std::fs::write(p, text)?,
            None => print!("{text}"),
        }
        return Ok(());
    }
    let report = run_benchmark(&config)?;
    emit_report(&report, config.format, config.out.as_deref())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("lpbench: {e}");
            ExitCode::FAILURE
        }
    }
}
