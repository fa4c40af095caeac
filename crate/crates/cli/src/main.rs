//! `tfe`: generate test signals, compute TFD-IF / TFD-FT distributions and
//! their marginals, and export them as CSV.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use tfe_core::io::{self, ColumnSelector};
use tfe_core::signals;
use tfe_core::{
    bin_grid, marginal_over_frequency, marginal_over_time, tfd_ft_padded, tfd_if, uniform_bands,
    Error, Signal,
};

#[derive(Debug, Parser)]
#[command(
    name = "tfe",
    version,
    about = "Time-frequency-energy analysis via IF and frequentaneous time"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a synthetic test signal as a one-column CSV.
    Generate {
        #[command(subcommand)]
        kind: GenerateKind,
    },
    /// Compute a TFE distribution from a signal CSV.
    Analyze(AnalyzeArgs),
    /// Sum a distribution along one axis.
    Marginal(MarginalArgs),
}

#[derive(Debug, Subcommand)]
enum GenerateKind {
    /// Sum of cosines.
    Tones {
        #[arg(long, value_delimiter = ',', required = true)]
        freqs: Vec<f64>,
        /// Amplitudes, one per frequency (default: all 1).
        #[arg(long, value_delimiter = ',')]
        amps: Vec<f64>,
        #[arg(long)]
        fs: f64,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "signal.csv")]
        out: PathBuf,
    },
    /// Linear chirp sweeping f0 to f1 over the record. Comma-separated
    /// lists give a sum of chirps, paired in order.
    Chirp {
        #[arg(long, value_delimiter = ',', required = true)]
        f0: Vec<f64>,
        #[arg(long, value_delimiter = ',', required = true)]
        f1: Vec<f64>,
        #[arg(long, default_value_t = signals::CHIRP_DEFAULT_FS)]
        fs: f64,
        #[arg(long, default_value_t = signals::CHIRP_DEFAULT_LEN)]
        n: usize,
        #[arg(long, default_value_t = 1.0)]
        amplitude: f64,
        #[arg(long, default_value = "signal.csv")]
        out: PathBuf,
    },
    /// Unit samples at the given positions.
    Impulses {
        #[arg(long, value_delimiter = ',')]
        pos: Vec<usize>,
        #[arg(long)]
        fs: f64,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "signal.csv")]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Frequentaneous time (TFD-FT).
    Ft,
    /// Instantaneous frequency (TFD-IF).
    If,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct GridDims {
    time: usize,
    freq: usize,
}

impl FromStr for GridDims {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (t, f) = s
            .split_once(['x', 'X'])
            .ok_or_else(|| format!("expected TIMExFREQ, got {s:?}"))?;
        let parse = |v: &str| {
            v.trim()
                .parse::<usize>()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| format!("grid dimension {v:?} must be a positive integer"))
        };
        Ok(GridDims {
            time: parse(t)?,
            freq: parse(f)?,
        })
    }
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    #[arg(long, value_enum)]
    method: MethodArg,
    #[arg(long = "in")]
    input: PathBuf,
    /// Sample rate of the input in Hz.
    #[arg(long)]
    fs: f64,
    /// Column index or header name holding the samples.
    #[arg(long, default_value = "0")]
    column: ColumnSelector,
    /// Number of equal-width bands (method `if` only).
    #[arg(long)]
    bands: Option<usize>,
    /// Sample index treated as time zero (method `ft`).
    #[arg(long, default_value_t = 0)]
    origin: usize,
    /// Frequency-grid refinement, a power of two (method `ft`).
    #[arg(long, default_value_t = 1)]
    pad: usize,
    #[arg(long, default_value = "distribution.csv")]
    out: PathBuf,
    /// Also write a dense grid, e.g. `200x100` (time x frequency cells).
    #[arg(long)]
    grid: Option<GridDims>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AxisArg {
    /// Sum over time: power spectrum of a TFD-FT distribution.
    Time,
    /// Sum over frequency: instantaneous energy of a TFD-IF distribution.
    Frequency,
}

#[derive(Debug, Args)]
struct MarginalArgs {
    #[arg(long, value_enum)]
    axis: AxisArg,
    /// Distribution CSV; its `.json` sidecar must sit next to it.
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, default_value = "marginal.csv")]
    out: PathBuf,
}

enum Failure {
    Usage(String),
    Run(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Run(e)
    }
}

fn generate(kind: GenerateKind) -> Result<(), Failure> {
    let (signal, out): (Signal, PathBuf) = match kind {
        GenerateKind::Tones {
            freqs,
            amps,
            fs,
            n,
            out,
        } => {
            let amps = if amps.is_empty() {
                vec![1.0; freqs.len()]
            } else {
                amps
            };
            (signals::gen_tones(&freqs, &amps, fs, n)?, out)
        }
        GenerateKind::Chirp {
            f0,
            f1,
            fs,
            n,
            amplitude,
            out,
        } => {
            if f0.len() != f1.len() {
                return Err(Failure::Usage(format!(
                    "{} start frequencies but {} end frequencies",
                    f0.len(),
                    f1.len()
                )));
            }
            let mut sum = vec![0.0; n];
            for (&a, &b) in f0.iter().zip(&f1) {
                let chirp = signals::gen_chirp(a, b, fs, n, amplitude)?;
                for (acc, x) in sum.iter_mut().zip(chirp.samples()) {
                    *acc += x;
                }
            }
            (Signal::new(sum, fs)?, out)
        }
        GenerateKind::Impulses { pos, fs, n, out } => (signals::gen_impulses(&pos, fs, n)?, out),
    };
    io::write_signal_csv(&signal, &out)?;
    eprintln!("wrote {} samples to {}", signal.len(), out.display());
    Ok(())
}

fn grid_path(out: &Path) -> PathBuf {
    out.with_extension("grid.csv")
}

fn analyze(args: AnalyzeArgs) -> Result<(), Failure> {
    if args.method == MethodArg::Ft && args.bands.is_some() {
        return Err(Failure::Usage(
            "--bands only applies to --method if".to_string(),
        ));
    }
    if args.method == MethodArg::If && (args.pad != 1 || args.origin != 0) {
        return Err(Failure::Usage(
            "--pad and --origin only apply to --method ft".to_string(),
        ));
    }
    let signal: Signal = io::read_signal_csv(&args.input, args.fs, &args.column)?;
    let signal = Signal::with_origin(signal.into_samples(), args.fs, args.origin)?;

    let dist = match args.method {
        MethodArg::Ft => tfd_ft_padded(&signal, args.pad)?,
        MethodArg::If => {
            let bands = uniform_bands(args.bands.unwrap_or(1))?;
            tfd_if(&signal, Some(&bands))?
        }
    };
    io::write_distribution(&dist, &args.out)?;
    eprintln!(
        "wrote {} {} points to {}",
        dist.points.len(),
        dist.method.name(),
        args.out.display()
    );
    if dist.out_of_record > 0 {
        eprintln!(
            "note: {} points lie outside the record duration",
            dist.out_of_record
        );
    }
    if let Some(dims) = args.grid {
        let grid = bin_grid(&dist, dims.time, dims.freq)?;
        let path = grid_path(&args.out);
        io::write_grid_csv(&grid, &path)?;
        eprintln!(
            "wrote {}x{} grid to {}",
            dims.time,
            dims.freq,
            path.display()
        );
    }
    Ok(())
}

fn marginal(args: MarginalArgs) -> Result<(), Failure> {
    let dist = io::read_distribution(&args.input)?;
    let (values, label) = match args.axis {
        AxisArg::Time => (marginal_over_time(&dist), "freq_hz"),
        AxisArg::Frequency => (marginal_over_frequency(&dist), "time_s"),
    };
    let values = values.map_err(|e| Failure::Usage(e.to_string()))?;
    io::write_marginal_csv(&values, label, &args.out)?;
    eprintln!("wrote {} rows to {}", values.len(), args.out.display());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate { kind } => generate(kind),
        Command::Analyze(args) => analyze(args),
        Command::Marginal(args) => marginal(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Run(e)) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
