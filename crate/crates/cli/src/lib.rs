//! Command implementations behind the `raypip` binary.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use raypip::bench::{
    emit_report, error_report, fit_by_algorithm, r_squared, read_timings_csv, run_scaling_bench,
    BenchConfig, BenchError, BenchReport, NamedFit, TimingSample,
};
use raypip::io::{
    read_points_csv, read_polygon_geojson, write_results_csv, ColumnRef, PointsFileSpec,
    ResultRecord,
};
use raypip::{bbox_of, classify_batch, prefilter_bbox, BatchStats, CrossingMode, Parallelism};

#[derive(Debug, Parser)]
#[command(
    name = "raypip",
    version,
    about = "Ray-casting point-in-polygon classification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify every point of a CSV file against a GeoJSON polygon.
    Classify(ClassifyArgs),
    /// Time classification over a range of batch sizes and fit t = a·n + b.
    Bench(BenchArgs),
    /// Fit and evaluate existing timing tables without running anything.
    FitReport(FitReportArgs),
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long, value_name = "PATH")]
    pub points: PathBuf,
    #[arg(long, value_name = "PATH")]
    pub polygon: PathBuf,
    /// Results CSV (`index,x,y,verdict`).
    #[arg(long, value_name = "PATH")]
    pub out: PathBuf,
    #[arg(long, default_value = "robust", value_name = "MODE")]
    pub mode: CrossingMode,
    #[arg(long, default_value = "auto", value_name = "N|auto")]
    pub parallelism: Parallelism,
    /// x column: header name or zero-based index.
    #[arg(long, default_value = "0")]
    pub x_column: ColumnRef,
    /// y column: header name or zero-based index.
    #[arg(long, default_value = "1")]
    pub y_column: ColumnRef,
    /// The points file has no header row.
    #[arg(long)]
    pub no_header: bool,
    #[arg(long, default_value_t = ',')]
    pub delimiter: char,
    /// Skip unparseable rows instead of failing.
    #[arg(long)]
    pub lenient: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_name = "PATH")]
    pub polygon: PathBuf,
    /// JSON report; the flat table goes next to it with a `.csv` extension
    /// unless `--table` is given.
    #[arg(long, value_name = "PATH")]
    pub out: PathBuf,
    #[arg(long, value_name = "PATH")]
    pub table: Option<PathBuf>,
    /// Batch sizes used for the fit.
    #[arg(long, value_delimiter = ',', required = true, value_name = "N,N,...")]
    pub sizes: Vec<usize>,
    /// Larger sizes to measure and compare against the fit's predictions.
    #[arg(long, value_delimiter = ',', value_name = "N,N,...")]
    pub predict: Vec<usize>,
    /// One or more modes; each is benchmarked and fitted separately.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "robust",
        value_name = "MODE"
    )]
    pub mode: Vec<CrossingMode>,
    #[arg(long, default_value = "auto", value_name = "N|auto")]
    pub parallelism: Parallelism,
    #[arg(long, default_value_t = 3)]
    pub reps: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct FitReportArgs {
    /// Timings to fit (`n,algorithm,seconds`).
    #[arg(long, value_name = "PATH")]
    pub timings: PathBuf,
    /// Timings to compare against the fitted predictions.
    #[arg(long, value_name = "PATH")]
    pub actual: Option<PathBuf>,
    #[arg(long, value_name = "PATH")]
    pub out: PathBuf,
    #[arg(long, value_name = "PATH")]
    pub table: Option<PathBuf>,
}

pub fn run(cli: Cli, out: &mut impl Write) -> Result<()> {
    match cli.command {
        Command::Classify(args) => cmd_classify(&args, out).map(|_| ()),
        Command::Bench(args) => cmd_bench(&args, out).map(|_| ()),
        Command::FitReport(args) => cmd_fit_report(&args, out).map(|_| ()),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassifySummary {
    pub stats: BatchStats,
    pub prefiltered: usize,
    pub skipped_rows: usize,
    pub elapsed_seconds: f64,
}

pub fn cmd_classify(args: &ClassifyArgs, out: &mut impl Write) -> Result<ClassifySummary> {
    if !args.delimiter.is_ascii() {
        bail!("delimiter must be a single ASCII character");
    }
    let poly = read_polygon_geojson(&args.polygon)
        .with_context(|| format!("reading polygon {}", args.polygon.display()))?;
    let spec = PointsFileSpec::new(&args.points)
        .columns(args.x_column.clone(), args.y_column.clone())
        .header(!args.no_header)
        .delimiter(args.delimiter as u8)
        .lenient(args.lenient);
    let points = read_points_csv(&spec)
        .with_context(|| format!("reading points {}", args.points.display()))?;
    let batch = points.batch;

    let start = Instant::now();
    let filtered = prefilter_bbox(&batch, &bbox_of(&poly));
    let inner = classify_batch(&filtered.inside_box, &poly, args.mode, args.parallelism);
    let verdicts = filtered.scatter(&inner.verdicts);
    let elapsed_seconds = start.elapsed().as_secs_f64();

    let records: Vec<ResultRecord> = batch
        .iter()
        .zip(&verdicts)
        .enumerate()
        .map(|(index, (p, &verdict))| ResultRecord {
            index,
            x: p.x(),
            y: p.y(),
            verdict,
        })
        .collect();
    write_results_csv(&records, &args.out)
        .with_context(|| format!("writing results {}", args.out.display()))?;

    let summary = ClassifySummary {
        stats: BatchStats::from_verdicts(&verdicts),
        prefiltered: filtered.outside_count,
        skipped_rows: points.skipped_rows,
        elapsed_seconds,
    };
    let s = &summary.stats;
    writeln!(
        out,
        "points={} inside={} outside={} boundary={} error={} prefiltered={} skipped_rows={} mode={} elapsed_s={:.6}",
        batch.len(),
        s.inside,
        s.outside,
        s.boundary,
        s.degenerate,
        summary.prefiltered,
        summary.skipped_rows,
        args.mode,
        elapsed_seconds
    )?;
    Ok(summary)
}

fn table_path(out: &Path, table: &Option<PathBuf>) -> PathBuf {
    table.clone().unwrap_or_else(|| out.with_extension("csv"))
}

fn print_fits(out: &mut impl Write, fits: &[NamedFit], samples: &[TimingSample]) -> Result<()> {
    for f in fits {
        let own: Vec<_> = samples
            .iter()
            .filter(|s| s.algorithm == f.algorithm)
            .cloned()
            .collect();
        writeln!(
            out,
            "algorithm={} slope={:.9e} intercept={:.9e} r2={:.6}",
            f.algorithm,
            f.slope,
            f.intercept,
            r_squared(&own, f.coefficients())
        )?;
    }
    Ok(())
}

fn print_errors(out: &mut impl Write, report: &BenchReport) -> Result<()> {
    for e in &report.errors {
        let rel = e
            .rel_error
            .map_or_else(|| "nan".to_string(), |r| format!("{r:.6}"));
        writeln!(
            out,
            "n={} algorithm={} actual_s={:.6} predicted_s={:.6} abs_error={:.6} rel_error={}",
            e.n_points, e.algorithm, e.actual_s, e.predicted_s, e.abs_error, rel
        )?;
    }
    Ok(())
}

/// Fits `samples`, evaluates on `actual`, and writes the report. A fit that
/// cannot be computed still leaves the samples on disk before failing.
fn fit_and_emit(
    samples: Vec<TimingSample>,
    actual: &[TimingSample],
    json: &Path,
    table: &Path,
    out: &mut impl Write,
) -> Result<BenchReport> {
    let fits = match fit_by_algorithm(&samples) {
        Ok(f) => f,
        Err(e @ BenchError::DegenerateFit(_)) => {
            let partial = BenchReport {
                samples,
                ..Default::default()
            };
            emit_report(&partial, json, table)?;
            writeln!(
                out,
                "report={} table={} partial=true",
                json.display(),
                table.display()
            )?;
            return Err(e).context("least-squares fit failed; partial report written");
        }
        Err(e) => return Err(e.into()),
    };
    let errors = error_report(&fits, actual)?.rows;
    let report = BenchReport {
        samples,
        fits,
        errors,
    };
    emit_report(&report, json, table)?;
    print_fits(out, &report.fits, &report.samples)?;
    print_errors(out, &report)?;
    writeln!(out, "report={} table={}", json.display(), table.display())?;
    Ok(report)
}

pub fn cmd_bench(args: &BenchArgs, out: &mut impl Write) -> Result<BenchReport> {
    let poly = read_polygon_geojson(&args.polygon)
        .with_context(|| format!("reading polygon {}", args.polygon.display()))?;
    let mut samples = Vec::new();
    let mut actual = Vec::new();
    for &mode in &args.mode {
        let mut config = BenchConfig::new(args.sizes.clone(), mode);
        config.parallelism = args.parallelism;
        config.repetitions = args.reps;
        config.seed = args.seed;
        samples.extend(run_scaling_bench(&poly, &config)?);
        if !args.predict.is_empty() {
            config.sizes = args.predict.clone();
            actual.extend(run_scaling_bench(&poly, &config)?);
        }
    }
    for s in samples.iter().chain(&actual) {
        writeln!(
            out,
            "n={} algorithm={} seconds={:.9}",
            s.n_points, s.algorithm, s.elapsed_seconds
        )?;
    }
    fit_and_emit(
        samples,
        &actual,
        &args.out,
        &table_path(&args.out, &args.table),
        out,
    )
}

pub fn cmd_fit_report(args: &FitReportArgs, out: &mut impl Write) -> Result<BenchReport> {
    let samples = read_timings_csv(&args.timings)
        .with_context(|| format!("reading timings {}", args.timings.display()))?;
    let actual = match &args.actual {
        Some(p) => {
            read_timings_csv(p).with_context(|| format!("reading timings {}", p.display()))?
        }
        None => Vec::new(),
    };
    fit_and_emit(
        samples,
        &actual,
        &args.out,
        &table_path(&args.out, &args.table),
        out,
    )
}
