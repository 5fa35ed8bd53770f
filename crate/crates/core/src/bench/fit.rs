use num_traits::Float;
use serde::{Deserialize, Serialize};

use super::{BenchError, TimingSample};

/// `t ≈ slope·n + intercept`, seconds per point and seconds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FitCoefficients {
    pub slope: f64,
    pub intercept: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NamedFit {
    pub algorithm: String,
    pub slope: f64,
    pub intercept: f64,
}

impl NamedFit {
    pub fn coefficients(&self) -> FitCoefficients {
        FitCoefficients {
            slope: self.slope,
            intercept: self.intercept,
        }
    }
}

/// Least-squares line through `(xs[i], ys[i])` from the normal equations of
/// the mean-centred data. `None` when fewer than two distinct `xs`.
pub fn fit_line<T: Float>(xs: &[T], ys: &[T]) -> Option<(T, T)> {
    assert_eq!(xs.len(), ys.len());
    if xs.len() < 2 {
        return None;
    }
    let n = T::from(xs.len())?;
    let mean_x = xs.iter().fold(T::zero(), |a, &x| a + x) / n;
    let mean_y = ys.iter().fold(T::zero(), |a, &y| a + y) / n;
    let (sxx, sxy) = xs
        .iter()
        .zip(ys)
        .fold((T::zero(), T::zero()), |(sxx, sxy), (&x, &y)| {
            let dx = x - mean_x;
            (sxx + dx * dx, sxy + dx * (y - mean_y))
        });
    if sxx == T::zero() {
        return None;
    }
    let slope = sxy / sxx;
    Some((slope, mean_y - slope * mean_x))
}

/// Fits every sample regardless of its algorithm label.
pub fn least_squares_fit(samples: &[TimingSample]) -> Result<FitCoefficients, BenchError> {
    let xs: Vec<f64> = samples.iter().map(|s| s.n_points as f64).collect();
    let ys: Vec<f64> = samples.iter().map(|s| s.elapsed_seconds).collect();
    let (slope, intercept) = fit_line(&xs, &ys).ok_or_else(|| {
        BenchError::DegenerateFit(format!(
            "need at least two distinct point counts, got {} sample(s)",
            samples.len()
        ))
    })?;
    if slope < 0.0 {
        eprintln!("warning: negative slope {slope:e} s/point; timings may be noise-dominated");
    }
    Ok(FitCoefficients { slope, intercept })
}

/// One fit per algorithm label, in order of first appearance.
pub fn fit_by_algorithm(samples: &[TimingSample]) -> Result<Vec<NamedFit>, BenchError> {
    let mut labels: Vec<&str> = Vec::new();
    for s in samples {
        if !labels.contains(&s.algorithm.as_str()) {
            labels.push(&s.algorithm);
        }
    }
    labels
        .into_iter()
        .map(|label| {
            let group: Vec<_> = samples
                .iter()
                .filter(|s| s.algorithm == label)
                .cloned()
                .collect();
            let fit = least_squares_fit(&group).map_err(|e| match e {
                BenchError::DegenerateFit(m) => BenchError::DegenerateFit(format!("{label}: {m}")),
                e => e,
            })?;
            Ok(NamedFit {
                algorithm: label.to_string(),
                slope: fit.slope,
                intercept: fit.intercept,
            })
        })
        .collect()
}

pub fn predict(fit: FitCoefficients, n_points: usize) -> f64 {
    fit.slope * n_points as f64 + fit.intercept
}

/// Coefficient of determination of `fit` over `samples`.
pub fn r_squared(samples: &[TimingSample], fit: FitCoefficients) -> f64 {
    let n = samples.len() as f64;
    let mean = samples.iter().map(|s| s.elapsed_seconds).sum::<f64>() / n;
    let (ss_res, ss_tot) = samples.iter().fold((0.0, 0.0), |(r, t), s| {
        let e = s.elapsed_seconds - predict(fit, s.n_points);
        let d = s.elapsed_seconds - mean;
        (r + e * e, t + d * d)
    });
    if ss_tot == 0.0 {
        if ss_res == 0.0 {
            1.0
        } else {
            0.0
        }
    } else {
        1.0 - ss_res / ss_tot
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorRow {
    pub n_points: usize,
    pub algorithm: String,
    pub predicted_s: f64,
    pub actual_s: f64,
    pub abs_error: f64,
    /// `abs_error / actual_s`; absent when `actual_s` is zero.
    pub rel_error: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct ErrorReport {
    pub rows: Vec<ErrorRow>,
}

/// Compares each actual sample with the prediction of its algorithm's fit.
pub fn error_report(fits: &[NamedFit], actual: &[TimingSample]) -> Result<ErrorReport, BenchError> {
    let rows = actual
        .iter()
        .map(|s| {
            let fit = fits
                .iter()
                .find(|f| f.algorithm == s.algorithm)
                .ok_or_else(|| BenchError::MissingFit(s.algorithm.clone()))?;
            let predicted_s = predict(fit.coefficients(), s.n_points);
            let abs_error = (predicted_s - s.elapsed_seconds).abs();
            Ok(ErrorRow {
                n_points: s.n_points,
                algorithm: s.algorithm.clone(),
                predicted_s,
                actual_s: s.elapsed_seconds,
                abs_error,
                rel_error: (s.elapsed_seconds > 0.0).then(|| abs_error / s.elapsed_seconds),
            })
        })
        .collect::<Result<_, BenchError>>()?;
    Ok(ErrorReport { rows })
}
