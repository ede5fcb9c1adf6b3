use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use fuzzy_rabi::config::{default_values, FileConfig, RunConfig};
use fuzzy_rabi::harness::{self, ManifestCell, RunManifest, SweepReport, SweepSpec};
use fuzzy_rabi::readout::parse_curve_dump;
use fuzzy_rabi::{EnsembleMetrics, EnsembleRunner, ScheduleKind};

/// Monte Carlo sweeps of continuous fuzzy measurement on a driven two-level atom.
#[derive(Debug, Parser)]
#[command(name = "fuzzy-rabi", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Sweep one schedule family and write the (r, s) metrics table.
    Sweep(SweepArgs),
    /// Run the configured schedule once and write density rasters.
    Density(CommonArgs),
    /// Rebuild single trajectories from their index or from a curve dump.
    Replay(ReplayArgs),
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// TOML configuration file; defaults apply to every missing key.
    #[arg(short, long)]
    config: Option<PathBuf>,
    /// Output directory.
    #[arg(short, long, default_value = "out")]
    out: PathBuf,
    /// Worker threads (0 = one per core).
    #[arg(short, long, default_value_t = 0)]
    workers: usize,
    /// Base seed, overriding the configuration.
    #[arg(long)]
    seed: Option<u64>,
    /// Trajectories per cell, overriding the configuration.
    #[arg(short = 'n', long)]
    samples: Option<usize>,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Schedule family to sweep: constant, time-gaussian or energy-gaussian.
    #[arg(long)]
    family: Option<ScheduleKind>,
    /// Comma-separated parameter values (t_eff, δT or δE).
    #[arg(long, value_delimiter = ',')]
    values: Option<Vec<f64>>,
}

#[derive(Debug, Args)]
struct ReplayArgs {
    #[arg(short, long)]
    config: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    /// Trajectory index to rebuild from the seed.
    #[arg(long, conflicts_with = "dump", required_unless_present = "dump")]
    index: Option<u64>,
    /// Curve dump to re-evaluate under the configured schedule.
    #[arg(long)]
    dump: Option<PathBuf>,
    /// Write the CSV here instead of standard output.
    #[arg(short, long)]
    out: Option<PathBuf>,
}

fn load(config: Option<&Path>, seed: Option<u64>, samples: Option<usize>) -> Result<(FileConfig, RunConfig)> {
    let mut file = match config {
        Some(p) => FileConfig::load(p)?,
        None => FileConfig::default(),
    };
    if let Some(s) = seed {
        file.sweep.base_seed = s;
    }
    if let Some(n) = samples {
        file.sweep.n_samples = n;
    }
    let run = file.resolve()?;
    Ok((file, run))
}

fn finish(
    command: &str,
    file: &FileConfig,
    run: &RunConfig,
    spec: &SweepSpec,
    report: &SweepReport,
    out: &Path,
    workers: usize,
    started: Instant,
) -> Result<ExitCode> {
    let mut written = harness::write_outputs(report, spec, out)?;
    let manifest = RunManifest {
        tool: env!("CARGO_PKG_NAME"),
        version: env!("CARGO_PKG_VERSION"),
        command,
        config: file,
        workers,
        base_seed: run.sweep.base_seed,
        n_samples: spec.n_samples,
        cells: ManifestCell::from_report(report),
        total_wall_time_s: started.elapsed().as_secs_f64(),
        outputs: written.iter().map(|p| p.display().to_string()).collect(),
    };
    written.push(harness::write_manifest(out, &manifest)?);
    print!("{}", harness::metrics_csv(report));
    eprintln!("wrote {} files to {}", written.len(), out.display());
    let failures = report.failures();
    if failures > 0 {
        eprintln!("{failures} trajectories failed to integrate");
        return Ok(ExitCode::from(3));
    }
    Ok(ExitCode::SUCCESS)
}

fn sweep(args: SweepArgs) -> Result<ExitCode> {
    let started = Instant::now();
    let c = &args.common;
    let (mut file, _) = load(c.config.as_deref(), c.seed, c.samples)?;
    if let Some(f) = args.family {
        file.sweep.family = Some(f);
        if args.values.is_none() {
            file.sweep.values = Some(default_values(f));
        }
    }
    if let Some(v) = args.values {
        file.sweep.values = Some(v);
    }
    let run = file.resolve()?;
    let report = harness::run_sweep(&run.sweep, &run.phys, &run.integrator, &run.sampler, c.workers)?;
    finish("sweep", &file, &run, &run.sweep, &report, &c.out, c.workers, started)
}

fn density(args: CommonArgs) -> Result<ExitCode> {
    let started = Instant::now();
    let (file, run) = load(args.config.as_deref(), args.seed, args.samples)?;
    let mut spec = run.sweep.clone();
    spec.template = run.schedule.clone();
    spec.values = vec![run.schedule.parameter()];
    spec.outputs.density_grids = true;
    let report = harness::run_sweep(&spec, &run.phys, &run.integrator, &run.sampler, args.workers)?;
    finish("density", &file, &run, &spec, &report, &args.out, args.workers, started)
}

fn replay(args: ReplayArgs) -> Result<ExitCode> {
    let (_, run) = load(args.config.as_deref(), args.seed, None)?;
    let runner = EnsembleRunner::new(&run.phys, &run.integrator, &run.sampler)?;
    let text = match (args.index, &args.dump) {
        (Some(index), _) => {
            let r = harness::replay_index(&runner, &run.schedule, index)?;
            eprintln!("{}", r.curve.dump_line(index));
            eprintln!(
                "weight = {:e}, final |c2|^2 = {:.6}, underflow = {}",
                r.result.weight, r.result.final_c2sq, r.result.underflow
            );
            r.series_csv(&run.integrator)
        }
        (None, Some(path)) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let curves = parse_curve_dump(&text, run.phys.t_total)?;
            let summaries = harness::replay_dump(&runner, &run.schedule, curves)?;
            if summaries.len() >= 2 {
                let m = EnsembleMetrics::from_summaries(&summaries, run.sweep.deviation)?;
                eprintln!(
                    "s = {:.6} ± {:.6}, d = {:.6} ± {:.6}, r = {:.6}, ess = {:.1}",
                    m.softness, m.softness_se, m.deviation, m.deviation_se, m.reliability, m.effective_sample_size
                );
            }
            let mut out = String::from("index,weight,final_c2sq,msd_raw,msd_smoothed,underflow\n");
            for s in summaries {
                out.push_str(&format!(
                    "{},{:.9e},{:.9e},{:.9e},{:.9e},{}\n",
                    s.index, s.weight, s.final_c2sq, s.msd_raw, s.msd_smoothed, s.underflow
                ));
            }
            out
        }
        (None, None) => bail!("either --index or --dump is required"),
    };
    match args.out {
        Some(p) => fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Sweep(a) => sweep(a),
        Command::Density(a) => density(a),
        Command::Replay(a) => replay(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
