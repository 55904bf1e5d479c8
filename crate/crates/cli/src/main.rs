//! Batch front end for the sampling, estimation, and benchmark machinery.
//!
//! Exit codes: 0 on success, 1 on usage errors (nothing is written), 2 on
//! data or degeneracy errors with a one-line diagnostic on stderr.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sensa_core::estimators::{vars_total, EstimatorId, EvaluationSet, TotalOrderEstimate};
use sensa_core::harness::{
    read_records, run_benchmark, sobol_sa_on_results, summarize, BenchmarkConfig, Mode, OutputKind,
};
use sensa_core::metafunction::{evaluate, generate_spec, MetafunctionSpec};
use sensa_core::sampling::{
    build_star_design, random_points, sobol_points, EstimatorClass, MatrixMetadata, SampleMatrix,
};
use sensa_core::{Error, Result};

#[derive(Parser)]
#[command(
    name = "sensa",
    version,
    about = "Variance-based sensitivity analysis: samplers, total-order estimators, and an estimator benchmark"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SampleMethod {
    /// Seeded pseudo-random points.
    Random,
    /// Quasi-random low-discrepancy points, optionally scrambled.
    Sobol,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Rank,
    Mae,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Rank => Mode::Rank,
            ModeArg::Mae => Mode::Mae,
        }
    }
}

fn parse_estimator(name: &str) -> Result<EstimatorId> {
    EstimatorId::parse(name)
}

#[derive(Subcommand)]
enum Command {
    /// Write a matrix of points in [0,1)^d as headerless CSV, plus a
    /// .meta.json provenance sidecar.
    Sample {
        #[arg(long, value_enum)]
        method: SampleMethod,
        /// Log2 of the number of points.
        #[arg(long)]
        rows_exp: u32,
        /// Number of dimensions.
        #[arg(long)]
        dims: usize,
        /// Stream seed (random) or scramble seed (sobol; omit for the plain
        /// sequence).
        #[arg(long, required_if_eq("method", "random"))]
        seed: Option<u64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Generate a randomized test function or evaluate one on a matrix.
    #[command(subcommand)]
    Metafunction(MetafunctionCommand),
    /// Compute total-order index estimates from design evaluations.
    ///
    /// The evaluations CSV layout depends on the estimator's design family:
    /// jansen, homma-saltelli, janon-monod, glen-isaacs take columns
    /// [yA, yAB_1..k]; saltelli-2008 takes [yA, yB, yBA_1..k]; azzini-rosati
    /// takes [yA, yB, yAB_1..k, yBA_1..k]; pseudo-owen takes
    /// [yA, yB, yBA_1..k, yCB_1..k]; razavi-gupta takes a single y column in
    /// star-design row order and needs --centers and --delta-h.
    Estimate {
        #[arg(long, value_parser = parse_estimator)]
        estimator: EstimatorId,
        /// Design evaluations CSV.
        #[arg(long)]
        evals: PathBuf,
        /// Star centers CSV (razavi-gupta only).
        #[arg(long)]
        centers: Option<PathBuf>,
        /// Grid step of the star design (razavi-gupta only).
        #[arg(long)]
        delta_h: Option<f64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the full estimator benchmark described by a config file.
    Benchmark {
        /// Flat key=value config: global_seed, rows_exp, truth_rows_exp,
        /// mode, delta_h, parallelism, out_path, clusters.
        #[arg(long)]
        config: PathBuf,
        /// Override the config's global seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Override the config's design size.
        #[arg(long)]
        rows_exp: Option<u32>,
        /// Override the reference-run design size.
        #[arg(long)]
        truth_rows_exp: Option<u32>,
        /// Override the scoring mode.
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        /// Override the records output path.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Swap the three parameter clusters jointly instead of the seven
        /// individual groups.
        #[arg(long)]
        clusters: bool,
    },
    /// Median scores binned by runs per input, plus out-of-range diagnostics
    /// over rank-reversed records.
    Summarize {
        /// Records CSV produced by `benchmark`.
        #[arg(long)]
        records: PathBuf,
        /// Width of the runs-per-input bins.
        #[arg(long, default_value_t = 20.0)]
        bin_width: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// First- and total-order indices of the benchmark parameters with
    /// respect to each estimator's score.
    Analyze {
        /// Records CSV produced by `benchmark`.
        #[arg(long)]
        records: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum MetafunctionCommand {
    /// Materialize the function drawn for (k, k2, k3, seed) and write its
    /// text form.
    Generate {
        /// Number of inputs.
        #[arg(long)]
        k: usize,
        /// Fraction of pairwise interactions activated.
        #[arg(long)]
        k2: f64,
        /// Fraction of three-way interactions activated.
        #[arg(long)]
        k3: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Evaluate a function spec on a CSV matrix of points in [0,1]^k; writes
    /// one output per line.
    Evaluate {
        /// Function spec file written by `metafunction generate`.
        #[arg(long)]
        spec: PathBuf,
        /// Input matrix CSV.
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Sample {
            method,
            rows_exp,
            dims,
            seed,
            out,
        } => cmd_sample(method, rows_exp, dims, seed, &out),
        Command::Metafunction(mc) => match mc {
            MetafunctionCommand::Generate {
                k,
                k2,
                k3,
                seed,
                out,
            } => {
                let spec = generate_spec(k, k2, k3, seed)?;
                fs::write(&out, spec.to_text())?;
                println!("wrote function spec to {}", out.display());
                Ok(())
            }
            MetafunctionCommand::Evaluate { spec, matrix, out } => {
                let spec = MetafunctionSpec::from_text(&fs::read_to_string(&spec)?)?;
                let m = SampleMatrix::read_csv(&matrix)?;
                let y = evaluate(&spec, &m)?;
                let mut text = String::new();
                for v in &y {
                    text.push_str(&v.to_string());
                    text.push('\n');
                }
                fs::write(&out, text)?;
                println!("wrote {} outputs to {}", y.len(), out.display());
                Ok(())
            }
        },
        Command::Estimate {
            estimator,
            evals,
            centers,
            delta_h,
            out,
        } => cmd_estimate(estimator, &evals, centers.as_deref(), delta_h, &out),
        Command::Benchmark {
            config,
            seed,
            rows_exp,
            truth_rows_exp,
            mode,
            out,
            clusters,
        } => {
            let mut cfg = BenchmarkConfig::from_file(&config)?;
            if let Some(s) = seed {
                cfg.global_seed = s;
            }
            if let Some(e) = rows_exp {
                cfg.rows_exp = e;
            }
            if let Some(e) = truth_rows_exp {
                cfg.truth_rows_exp = e;
            }
            if let Some(m) = mode {
                cfg.mode = m.into();
            }
            if let Some(p) = out {
                cfg.out_path = p;
            }
            if clusters {
                cfg.clusters = true;
            }
            let records = run_benchmark(&cfg)?;
            println!(
                "wrote {} records to {}",
                records.len(),
                cfg.out_path.display()
            );
            Ok(())
        }
        Command::Summarize {
            records,
            bin_width,
            out,
        } => {
            let (meta, records) = read_records(&records)?;
            let kind = output_kind(meta.mode);
            let table = summarize(&records, kind, bin_width)?;
            fs::write(&out, table.to_csv())?;
            println!("wrote summary to {}", out.display());
            Ok(())
        }
        Command::Analyze { records, out } => {
            let (meta, records) = read_records(&records)?;
            let kind = output_kind(meta.mode);
            let report = sobol_sa_on_results(&records, &meta.grouping, kind)?;
            fs::write(&out, report.to_csv())?;
            println!("wrote sensitivity report to {}", out.display());
            Ok(())
        }
    }
}

fn output_kind(mode: Mode) -> OutputKind {
    match mode {
        Mode::Rank => OutputKind::R,
        Mode::Mae => OutputKind::Mae,
    }
}

fn cmd_sample(
    method: SampleMethod,
    rows_exp: u32,
    dims: usize,
    seed: Option<u64>,
    out: &Path,
) -> Result<()> {
    if rows_exp > 30 {
        return Err(Error::InvalidInput(format!(
            "rows_exp must be at most 30, got {rows_exp}"
        )));
    }
    let n = 1usize << rows_exp;
    let (matrix, meta) = match method {
        SampleMethod::Random => {
            // clap enforces the seed's presence for this method.
            let seed = seed.expect("seed required");
            (
                random_points(n, dims, seed)?,
                MatrixMetadata {
                    method: "random".to_string(),
                    seed: Some(seed),
                    scramble_seed: None,
                    rows: n,
                    cols: dims,
                },
            )
        }
        SampleMethod::Sobol => (
            sobol_points(n, dims, seed)?,
            MatrixMetadata {
                method: "sobol".to_string(),
                seed: None,
                scramble_seed: seed,
                rows: n,
                cols: dims,
            },
        ),
    };
    matrix.write_csv(out)?;
    meta.write_sidecar(out)?;
    println!("wrote {n} x {dims} matrix to {}", out.display());
    Ok(())
}

fn column(m: &SampleMatrix, c: usize) -> Vec<f64> {
    (0..m.rows()).map(|r| m.get(r, c)).collect()
}

fn columns(m: &SampleMatrix, from: usize, count: usize) -> Vec<Vec<f64>> {
    (from..from + count).map(|c| column(m, c)).collect()
}

/// Split a column-oriented evaluations matrix into the lists the estimator's
/// design family expects; the input count k is implied by the column count.
fn split_evaluations(class: EstimatorClass, m: &SampleMatrix) -> Result<EvaluationSet> {
    let cols = m.cols();
    let bad = |need: &str| {
        Err(Error::InvalidInput(format!(
            "this design family needs {need} columns, got {cols}"
        )))
    };
    match class {
        EstimatorClass::AbK => {
            if cols < 2 {
                return bad("1 + k >= 2");
            }
            Ok(EvaluationSet {
                y_a: column(m, 0),
                y_ab: columns(m, 1, cols - 1),
                ..Default::default()
            })
        }
        EstimatorClass::AbKPlusB => {
            if cols < 3 {
                return bad("2 + k >= 3");
            }
            Ok(EvaluationSet {
                y_a: column(m, 0),
                y_b: column(m, 1),
                y_ba: columns(m, 2, cols - 2),
                ..Default::default()
            })
        }
        EstimatorClass::DoubleRadial => {
            if cols < 4 || (cols - 2) % 2 != 0 {
                return bad("2 + 2k >= 4");
            }
            let k = (cols - 2) / 2;
            Ok(EvaluationSet {
                y_a: column(m, 0),
                y_b: column(m, 1),
                y_ab: columns(m, 2, k),
                y_ba: columns(m, 2 + k, k),
                ..Default::default()
            })
        }
        EstimatorClass::PseudoOwen => {
            if cols < 4 || (cols - 2) % 2 != 0 {
                return bad("2 + 2k >= 4");
            }
            let k = (cols - 2) / 2;
            Ok(EvaluationSet {
                y_a: column(m, 0),
                y_b: column(m, 1),
                y_ba: columns(m, 2, k),
                y_cb: columns(m, 2 + k, k),
                ..Default::default()
            })
        }
        EstimatorClass::Stars => Err(Error::InvalidInput(
            "the star design is not column-oriented".to_string(),
        )),
    }
}

fn estimate_csv(estimator: EstimatorId, est: &TotalOrderEstimate) -> String {
    let k = est.t.len();
    // f0 and Vy may be reported per input, pooled, or not at all.
    let at = |v: &[f64], i: usize| -> String {
        match v.len() {
            0 => String::new(),
            1 => v[0].to_string(),
            n if n == k => v[i].to_string(),
            _ => String::new(),
        }
    };
    let mut out = String::from("estimator,input,T_hat,f0,Vy\n");
    for i in 0..k {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            estimator.name(),
            i + 1,
            est.t[i],
            at(&est.f0, i),
            at(&est.v_y, i)
        ));
    }
    out
}

fn cmd_estimate(
    estimator: EstimatorId,
    evals: &Path,
    centers: Option<&Path>,
    delta_h: Option<f64>,
    out: &Path,
) -> Result<()> {
    let est = if estimator == EstimatorId::RazaviGupta {
        let centers = centers
            .ok_or_else(|| Error::InvalidInput("razavi-gupta needs --centers".to_string()))?;
        let delta_h = delta_h
            .ok_or_else(|| Error::InvalidInput("razavi-gupta needs --delta-h".to_string()))?;
        let centers = SampleMatrix::read_csv(centers)?;
        let star = build_star_design(&centers, delta_h)?;
        let m = SampleMatrix::read_csv(evals)?;
        if m.cols() != 1 {
            return Err(Error::InvalidInput(format!(
                "razavi-gupta expects a single output column, got {}",
                m.cols()
            )));
        }
        let (est, _) = vars_total(&star, m.data())?;
        est
    } else {
        if centers.is_some() || delta_h.is_some() {
            return Err(Error::InvalidInput(
                "--centers and --delta-h apply to razavi-gupta only".to_string(),
            ));
        }
        let m = SampleMatrix::read_csv(evals)?;
        let ev = split_evaluations(estimator.class(), &m)?;
        estimator.run_matrix(&ev)?
    };
    fs::write(out, estimate_csv(estimator, &est))?;
    println!(
        "wrote {} estimates for {} inputs to {}",
        estimator.name(),
        est.t.len(),
        out.display()
    );
    Ok(())
}
