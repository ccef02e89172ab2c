use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use noma_sim::experiments::{
    angle_rows, default_gamma_grid, gamma_sweep_rows, oracle_rows, pareto_rows, ScalarChannel,
    ANGLE_HEADER, GAMMA_HEADER, ORACLE_HEADER, PARETO_HEADER,
};
use noma_sim::output::{write_csv, write_jsonl, write_labeled_csv};
use noma_sim::{run_monte_carlo, SimConfig, SimError, SimResult};

const TRIAL_HEADER: [&str; 7] = [
    "trial_id",
    "noma_sum_rate",
    "noma_strong_rate",
    "noma_weak_rate",
    "baseline_sum_rate",
    "baseline_strong_rate",
    "baseline_weak_rate",
];

#[derive(Parser)]
#[command(
    name = "noma-sim",
    version,
    about = "MU-MISO NOMA beam design and scheduling experiments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Two-user rate-region boundary, fixed and allocated power
    ParetoBoundary {
        #[command(flatten)]
        channel: ChannelArgs,
        #[arg(long, default_value_t = 2.0)]
        power: f64,
        #[arg(long, default_value_t = 101)]
        points: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Weak-user SINR against the channel angle
    AngleSweep {
        #[arg(long, default_value_t = 10.0)]
        lambda1: f64,
        #[arg(long, default_value_t = 0.1)]
        lambda2: f64,
        #[arg(long, default_value_t = 2.0)]
        gamma: f64,
        #[arg(long, default_value_t = 10.0)]
        power: f64,
        #[arg(long, default_value_t = 1001)]
        points: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Mean group rates against the strong-user target
    GammaSweep {
        #[command(flatten)]
        sim: SimArgs,
        /// Comma-separated target list; defaults to an even grid up to the
        /// per-cluster power
        #[arg(long, value_delimiter = ',')]
        gammas: Option<Vec<f64>>,
        #[arg(long, default_value_t = 8)]
        points: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Per-trial NOMA and baseline rates plus their mean
    ScheduleSim {
        #[command(flatten)]
        sim: SimArgs,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write `<out>.beams.jsonl` with channels, beams and rates
        #[arg(long, requires = "out")]
        dump_beams: bool,
    },
    /// Design against the brute-force oracle on random instances
    OracleCheck {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        instances: usize,
        #[arg(long, default_value_t = 512)]
        grid: usize,
        /// Largest accepted relative error
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ChannelArgs {
    #[arg(long, default_value_t = 20.0)]
    lambda1: f64,
    #[arg(long, default_value_t = 3.0)]
    lambda2: f64,
    #[arg(long, default_value_t = 0.5)]
    theta: f64,
}

/// Flags overriding the JSON config file, which overrides the defaults.
#[derive(Args)]
struct SimArgs {
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    nt: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, allow_negative_numbers = true)]
    pt_db: Option<f64>,
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long)]
    delta: Option<f64>,
    #[arg(long)]
    trials: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
}

impl SimArgs {
    fn resolve(&self) -> SimResult<SimConfig> {
        let mut cfg = match &self.config {
            Some(path) => SimConfig::from_json_file(path)?,
            None => SimConfig::default(),
        };
        if let Some(v) = self.nt {
            cfg.nt = v;
        }
        if let Some(v) = self.k {
            cfg.k_users = v;
        }
        if let Some(v) = self.pt_db {
            cfg.pt_db = v;
        }
        if let Some(v) = self.gamma {
            cfg.gamma = v;
        }
        if let Some(v) = self.delta {
            cfg.delta = v;
        }
        if let Some(v) = self.trials {
            cfg.trials = v;
        }
        if let Some(v) = self.seed {
            cfg.seed = v;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

fn sink(out: Option<&Path>) -> SimResult<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn beams_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".beams.jsonl");
    PathBuf::from(s)
}

/// Returns whether every check passed (always true except for oracle-check).
fn run(cli: Cli) -> SimResult<bool> {
    match cli.command {
        Command::ParetoBoundary {
            channel,
            power,
            points,
            out,
        } => {
            let sc = ScalarChannel {
                lambda1: channel.lambda1,
                lambda2: channel.lambda2,
                theta: channel.theta,
                power,
            };
            write_csv(
                sink(out.as_deref())?,
                &PARETO_HEADER,
                &pareto_rows(&sc, points)?,
            )?;
        }
        Command::AngleSweep {
            lambda1,
            lambda2,
            gamma,
            power,
            points,
            out,
        } => {
            let rows = angle_rows(lambda1, lambda2, gamma, power, points)?;
            write_csv(sink(out.as_deref())?, &ANGLE_HEADER, &rows)?;
        }
        Command::GammaSweep {
            sim,
            gammas,
            points,
            out,
        } => {
            let cfg = sim.resolve()?;
            let gammas = gammas.unwrap_or_else(|| default_gamma_grid(&cfg, points));
            write_csv(
                sink(out.as_deref())?,
                &GAMMA_HEADER,
                &gamma_sweep_rows(&cfg, &gammas)?,
            )?;
        }
        Command::ScheduleSim {
            sim,
            out,
            dump_beams,
        } => {
            let cfg = sim.resolve()?;
            let run = run_monte_carlo(&cfg, dump_beams)?;
            let mut rows: Vec<(String, Vec<f64>)> = run
                .records
                .iter()
                .map(|r| (r.trial_id.to_string(), r.rates().to_vec()))
                .collect();
            rows.push(("mean".to_owned(), run.mean.rates().to_vec()));
            write_labeled_csv(sink(out.as_deref())?, &TRIAL_HEADER, &rows)?;
            if let (true, Some(out)) = (dump_beams, &out) {
                write_jsonl(BufWriter::new(File::create(beams_path(out))?), &run.beams)?;
            }
        }
        Command::OracleCheck {
            seed,
            instances,
            grid,
            tol,
            out,
        } => {
            let rows = oracle_rows(seed, instances, grid)?;
            let worst = rows.iter().map(|r| r[7]).fold(0.0, f64::max);
            let failed = rows.iter().filter(|r| r[7].is_nan() || r[7] > tol).count();
            write_csv(sink(out.as_deref())?, &ORACLE_HEADER, &rows)?;
            eprintln!(
                "{instances} instances, worst relative error {worst:.3e}, {failed} above {tol:e}"
            );
            return Ok(failed == 0);
        }
    }
    Ok(true)
}

fn exit_code(err: &SimError) -> u8 {
    if err.is_infeasible() {
        3
    } else if matches!(err, SimError::Config { .. } | SimError::Json(_)) {
        2
    } else {
        match err {
            SimError::Core(noma_core::Error::InvalidArgument { .. }) => 2,
            _ => 1,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
