//! Command-line front end: CSV tables for the game payoffs, channel
//! thresholds, payoff curves, and the randomized verification suites.
//!
//! Exit codes: 0 success, 1 usage error, 2 internal/domain failure,
//! 3 I/O failure, 4 verification-suite failure.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::channel::{advantage_threshold, payoff_curve, ChannelFamily};
use crate::csvio::{
    curve_to_csv, fmt_f64, payoff_report_to_csv, threshold_to_csv,
};
use crate::game::{classical_max_payoff, quantum_payoff, table1_strategies, PayoffReport};
use crate::maximin::OptimizerConfig;
use crate::verify::{run_suite, Suite, SuiteReport};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;
pub const EXIT_IO: i32 = 3;
pub const EXIT_VERIFY: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "quoins",
    version,
    about = "Shared randomness as a resource: subsidy-game payoffs, channel advantage thresholds, and property verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reproduce the known-optimal classical strategies and re-derive them
    /// by maximin search
    Table1 {
        #[command(flatten)]
        optimizer: OptimizerArgs,
        /// Write CSV here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate one resource's payoff in the n-restaurant subsidy game
    Game {
        /// Number of restaurants (and coin faces / measurement outcomes)
        #[arg(long)]
        n: usize,
        /// Resource powering the strategy
        #[arg(long, value_enum)]
        resource: ResourceArg,
        /// Werner noise parameter in [0,1]; required for --resource werner
        #[arg(long)]
        p: Option<f64>,
        #[command(flatten)]
        optimizer: OptimizerArgs,
        /// Write CSV here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Bisect the noise level where a channel's distributed payoff meets
    /// the classical benchmark
    Threshold {
        #[arg(long, value_enum)]
        channel: ChannelArg,
        /// Game size, 3 or 4
        #[arg(long)]
        n: usize,
        /// Write CSV here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample payoff (and capacity where available) on a uniform noise grid
    Curve {
        #[arg(long, value_enum)]
        channel: ChannelArg,
        /// Game size, 3 or 4
        #[arg(long)]
        n: usize,
        /// Number of grid points (at least 2)
        #[arg(long, default_value_t = 101)]
        points: usize,
        /// Write CSV here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run randomized property suites and report pass/fail per property
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Trial count (optimizer starts for lemma2)
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the report here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Multi-start optimizer knobs, shared by the subcommands that search.
#[derive(Args, Clone, Copy, Debug)]
struct OptimizerArgs {
    /// Number of random restarts
    #[arg(long, default_value_t = 200)]
    starts: usize,
    /// Local-search sweep budget per start
    #[arg(long, default_value_t = 2000)]
    iters: usize,
    /// Seed for the deterministic search trajectory
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Objective stall threshold
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Soft-min warm-phase starting temperature
    #[arg(long, default_value_t = 50.0)]
    beta: f64,
}

impl OptimizerArgs {
    fn to_config(self) -> OptimizerConfig {
        OptimizerConfig {
            max_starts: self.starts,
            max_iters_per_start: self.iters,
            seed: self.seed,
            convergence_tol: self.tol,
            smoothing_beta: self.beta,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ResourceArg {
    Classical2,
    Classical3,
    Singlet,
    Werner,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ChannelArg {
    Phaseflip,
    Depolarizing,
}

impl From<ChannelArg> for ChannelFamily {
    fn from(value: ChannelArg) -> Self {
        match value {
            ChannelArg::Phaseflip => ChannelFamily::PhaseFlip,
            ChannelArg::Depolarizing => ChannelFamily::Depolarizing,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Monotone,
    Lemma1,
    Lemma2,
    Theorem5,
    WernerPpt,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(value: SuiteArg) -> Self {
        match value {
            SuiteArg::Monotone => Suite::Monotone,
            SuiteArg::Lemma1 => Suite::Lemma1,
            SuiteArg::Lemma2 => Suite::Lemma2,
            SuiteArg::Theorem5 => Suite::Theorem5,
            SuiteArg::WernerPpt => Suite::WernerPpt,
            SuiteArg::All => Suite::All,
        }
    }
}

/// A failure on its way to becoming a process exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Internal(String),
    Io(String),
}

impl Failure {
    fn report(self) -> i32 {
        match self {
            Failure::Usage(msg) => {
                eprintln!("usage error: {msg}");
                EXIT_USAGE
            }
            Failure::Internal(msg) => {
                eprintln!("error: {msg}");
                EXIT_INTERNAL
            }
            Failure::Io(msg) => {
                eprintln!("i/o error: {msg}");
                EXIT_IO
            }
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

/// Parses arguments, runs the selected subcommand, and returns the exit
/// code for the process.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version land here too; they are not failures.
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(failure) => failure.report(),
    }
}

fn dispatch(command: Command) -> Result<i32, Failure> {
    match command {
        Command::Table1 { optimizer, out } => {
            let text = render_table1(&optimizer.to_config())?;
            emit(&text, out.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::Game {
            n,
            resource,
            p,
            optimizer,
            out,
        } => {
            let text = render_game(n, resource, p, &optimizer.to_config())?;
            emit(&text, out.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::Threshold { channel, n, out } => {
            check_game_size(n)?;
            let family = ChannelFamily::from(channel);
            let result = advantage_threshold(family, n)?;
            emit(&threshold_to_csv(family, n, &result), out.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::Curve {
            channel,
            n,
            points,
            out,
        } => {
            check_game_size(n)?;
            if points < 2 {
                return Err(Failure::Usage(format!(
                    "--points must be at least 2, got {points}"
                )));
            }
            let rows = payoff_curve(ChannelFamily::from(channel), n, points)?;
            emit(&curve_to_csv(&rows), out.as_deref())?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            suite,
            trials,
            seed,
            out,
        } => {
            if trials < 1 {
                return Err(Failure::Usage("--trials must be at least 1".into()));
            }
            let reports = run_suite(Suite::from(suite), trials, seed)?;
            let text = render_verify(&reports);
            emit(&text, out.as_deref())?;
            if reports.iter().all(|r| r.passed) {
                Ok(EXIT_OK)
            } else {
                Ok(EXIT_VERIFY)
            }
        }
    }
}

fn check_game_size(n: usize) -> Result<(), Failure> {
    if matches!(n, 3 | 4) {
        Ok(())
    } else {
        Err(Failure::Usage(format!(
            "--n must be 3 or 4 for channel commands, got {n}"
        )))
    }
}

/// Runs classical_max_payoff but keeps the best value when the budget runs
/// out without convergence, marking the row as non-certified.
fn optimized_report(m: usize, n: usize, cfg: &OptimizerConfig) -> Result<PayoffReport, Failure> {
    match classical_max_payoff(m, n, cfg) {
        Ok(report) => Ok(report),
        Err(Error::OptimizerBudgetExhausted { report }) => {
            eprintln!(
                "warning: optimizer budget exhausted for ({m}, {n}); reporting best non-certified value"
            );
            let mut report = *report;
            report.resource_label.push_str(" [non-certified]");
            Ok(report)
        }
        Err(e) => Err(e.into()),
    }
}

fn render_table1(cfg: &OptimizerConfig) -> Result<String, Failure> {
    let mut out = String::from("m,n,payoff_exact,payoff_optimized,gap\n");
    for row in table1_strategies() {
        let optimized = optimized_report(row.m, row.n, cfg)?;
        let gap = (row.payoff - optimized.value).abs();
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            row.m,
            row.n,
            fmt_f64(row.payoff),
            fmt_f64(optimized.value),
            fmt_f64(gap),
        ));
    }
    Ok(out)
}

fn render_game(
    n: usize,
    resource: ResourceArg,
    p: Option<f64>,
    cfg: &OptimizerConfig,
) -> Result<String, Failure> {
    if p.is_some() && !matches!(resource, ResourceArg::Werner) {
        return Err(Failure::Usage(
            "--p only applies to --resource werner".into(),
        ));
    }
    let report = match resource {
        ResourceArg::Classical2 | ResourceArg::Classical3 => {
            let m = if matches!(resource, ResourceArg::Classical2) {
                2
            } else {
                3
            };
            if n < 2 {
                return Err(Failure::Usage("--n must be at least 2".into()));
            }
            optimized_report(m, n, cfg)?
        }
        ResourceArg::Singlet => {
            if n < 3 {
                return Err(Failure::Usage(
                    "--resource singlet needs --n of at least 3".into(),
                ));
            }
            quantum_payoff(n, 1.0)?
        }
        ResourceArg::Werner => {
            let p = p.ok_or_else(|| {
                Failure::Usage("--resource werner requires --p <noise>".into())
            })?;
            if !(0.0..=1.0).contains(&p) {
                return Err(Failure::Usage(format!("--p must lie in [0,1], got {p}")));
            }
            if n < 3 {
                return Err(Failure::Usage(
                    "--resource werner needs --n of at least 3".into(),
                ));
            }
            quantum_payoff(n, p)?
        }
    };
    Ok(payoff_report_to_csv(&report))
}

fn render_verify(reports: &[SuiteReport]) -> String {
    let mut out = String::new();
    for report in reports {
        let status = if report.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!(
            "{status} {}: {} ({} trials)\n",
            report.name, report.detail, report.trials
        ));
    }
    out
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick_cfg() -> OptimizerConfig {
        OptimizerConfig {
            max_starts: 30,
            max_iters_per_start: 800,
            ..OptimizerConfig::default()
        }
    }

    #[test]
    fn table1_rendering_recovers_the_known_payoffs() {
        let text = render_table1(&quick_cfg()).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "m,n,payoff_exact,payoff_optimized,gap");
        assert_eq!(lines.len(), 4);
        assert!(lines[1].starts_with("2,3,0.125,"));
        for line in &lines[1..] {
            let gap: f64 = line.split(',').last().unwrap().parse().unwrap();
            assert!(gap <= 1e-4, "{line}");
        }
    }

    #[test]
    fn game_rendering_covers_each_resource() {
        let singlet = render_game(3, ResourceArg::Singlet, None, &quick_cfg()).unwrap();
        assert!(singlet.contains("singlet+trine"));
        assert!(singlet.contains(&format!(",{},", fmt_f64(1.0 / 6.0))));
        let werner = render_game(3, ResourceArg::Werner, Some(0.3), &quick_cfg()).unwrap();
        assert!(werner.contains(&fmt_f64((2.0 + 0.3) / 18.0)));
        let classical = render_game(3, ResourceArg::Classical2, None, &quick_cfg()).unwrap();
        let value: f64 = classical
            .lines()
            .nth(1)
            .unwrap()
            .split(',')
            .nth(2)
            .unwrap()
            .parse()
            .unwrap();
        assert!((value - 0.125).abs() <= 1e-4);
    }

    #[test]
    fn invalid_flag_combinations_are_usage_errors() {
        assert!(matches!(
            render_game(3, ResourceArg::Singlet, Some(0.5), &quick_cfg()),
            Err(Failure::Usage(_))
        ));
        assert!(matches!(
            render_game(3, ResourceArg::Werner, None, &quick_cfg()),
            Err(Failure::Usage(_))
        ));
        assert!(matches!(
            render_game(3, ResourceArg::Werner, Some(1.5), &quick_cfg()),
            Err(Failure::Usage(_))
        ));
        assert!(matches!(
            render_game(2, ResourceArg::Singlet, None, &quick_cfg()),
            Err(Failure::Usage(_))
        ));
    }

    #[test]
    fn verify_rendering_lists_one_line_per_suite() {
        let reports = run_suite(Suite::WernerPpt, 1, 0).unwrap();
        let text = render_verify(&reports);
        assert!(text.starts_with("PASS werner-ppt: "));
        assert!(text.trim_end().ends_with("(1 trials)"));
    }
}
