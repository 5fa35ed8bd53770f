use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{predict, BenchError, ErrorRow, NamedFit, TimingSample};
use crate::io::{format_g17, IoError};

pub const TABLE_HEADER: &str = "n,algorithm,actual_s,predicted_s";

/// Everything a scaling study produces: the fitted samples, the per
/// algorithm coefficients, and the prediction errors on held-out sizes.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct BenchReport {
    pub samples: Vec<TimingSample>,
    pub fits: Vec<NamedFit>,
    pub errors: Vec<ErrorRow>,
}

impl BenchReport {
    /// `(n, algorithm, actual, predicted)` for every sample and error row;
    /// `predicted` is `None` when the algorithm has no fit.
    pub fn flat_rows(&self) -> Vec<(usize, &str, f64, Option<f64>)> {
        let fit_for = |alg: &str| self.fits.iter().find(|f| f.algorithm == alg);
        self.samples
            .iter()
            .map(|s| {
                let pred = fit_for(&s.algorithm).map(|f| predict(f.coefficients(), s.n_points));
                (s.n_points, s.algorithm.as_str(), s.elapsed_seconds, pred)
            })
            .chain(self.errors.iter().map(|e| {
                (
                    e.n_points,
                    e.algorithm.as_str(),
                    e.actual_s,
                    Some(e.predicted_s),
                )
            }))
            .collect()
    }
}

/// Writes the JSON report to `json_path` and the plot-ready table to
/// `table_path`.
pub fn emit_report(
    report: &BenchReport,
    json_path: &Path,
    table_path: &Path,
) -> Result<(), BenchError> {
    let text = serde_json::to_string_pretty(report).expect("report serializes");
    std::fs::write(json_path, text).map_err(|e| IoError::io(json_path, e))?;

    let file = File::create(table_path).map_err(|e| IoError::io(table_path, e))?;
    let mut w = BufWriter::new(file);
    let mut body = || -> std::io::Result<()> {
        writeln!(w, "{TABLE_HEADER}")?;
        for (n, alg, actual, pred) in report.flat_rows() {
            let pred = pred.map(format_g17).unwrap_or_default();
            writeln!(w, "{n},{alg},{},{pred}", format_g17(actual))?;
        }
        w.flush()
    };
    body().map_err(|e| IoError::io(table_path, e))?;
    Ok(())
}

pub fn read_report(json_path: &Path) -> Result<BenchReport, BenchError> {
    let text = std::fs::read_to_string(json_path).map_err(|e| IoError::io(json_path, e))?;
    serde_json::from_str(&text)
        .map_err(|e| BenchError::Io(IoError::InvalidGeoJson(format!("report: {e}"))))
}


pub const TIMINGS_HEADER: &str = "n,algorithm,seconds";

#[derive(Deserialize)]
struct TimingRow {
    n: usize,
    algorithm: String,
    seconds: f64,
}

/// Reads a long-format timing table with header `n,algorithm,seconds`.
pub fn read_timings_csv(path: &Path) -> Result<Vec<TimingSample>, BenchError> {
    let file = File::open(path).map_err(|e| IoError::io(path, e))?;
    let mut reader = csv::Reader::from_reader(file);
    let mut out = Vec::new();
    for row in reader.deserialize::<TimingRow>() {
        let row = row.map_err(|e| IoError::csv(path, e))?;
        if !(row.seconds.is_finite() && row.seconds >= 0.0) || row.n == 0 {
            return Err(IoError::Parse {
                row: out.len() as u64 + 2,
                column: "seconds".into(),
                reason: format!("invalid sample n={} seconds={}", row.n, row.seconds),
            }
            .into());
        }
        out.push(TimingSample::new(row.n, row.algorithm, row.seconds));
    }
    Ok(out)
}

pub fn write_timings_csv(samples: &[TimingSample], path: &Path) -> Result<(), BenchError> {
    let file = File::create(path).map_err(|e| IoError::io(path, e))?;
    let mut w = BufWriter::new(file);
    let mut body = || -> std::io::Result<()> {
        writeln!(w, "{TIMINGS_HEADER}")?;
        for s in samples {
            writeln!(
                w,
                "{},{},{}",
                s.n_points,
                s.algorithm,
                format_g17(s.elapsed_seconds)
            )?;
        }
        w.flush()
    };
    body().map_err(|e| IoError::io(path, e))?;
    Ok(())
}

/// Reads coefficients with header `algorithm,slope,intercept`.
pub fn read_fits_csv(path: &Path) -> Result<Vec<NamedFit>, BenchError> {
    let file = File::open(path).map_err(|e| IoError::io(path, e))?;
    let mut reader = csv::Reader::from_reader(file);
    let fits = reader
        .deserialize::<NamedFit>()
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| IoError::csv(path, e))?;
    Ok(fits)
}
