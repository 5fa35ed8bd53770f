//! Least-squares arithmetic against the published timing tables in
//! `data/reference/`.

use std::path::PathBuf;

use raypip::bench::{
    error_report, fit_by_algorithm, predict, read_fits_csv, read_timings_csv, FitCoefficients,
    TimingSample,
};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data/reference")
        .join(name)
}

fn published_values(name: &str) -> Vec<(usize, String, f64)> {
    let mut r = csv::Reader::from_path(data(name)).unwrap();
    r.records()
        .map(|rec| {
            let rec = rec.unwrap();
            (
                rec[0].parse().unwrap(),
                rec[1].to_string(),
                rec[2].parse().unwrap(),
            )
        })
        .collect()
}

#[test]
fn small_table_fit_matches_published_coefficients() {
    let fits =
        fit_by_algorithm(&read_timings_csv(&data("timings_10_to_10000.csv")).unwrap()).unwrap();
    let published = read_fits_csv(&data("fit_coefficients.csv")).unwrap();
    assert_eq!(fits.len(), published.len());
    for p in &published {
        let f = fits.iter().find(|f| f.algorithm == p.algorithm).unwrap();
        assert!(
            (f.slope - p.slope).abs() <= 1e-6,
            "{} slope {} vs {}",
            p.algorithm,
            f.slope,
            p.slope
        );
        assert!(
            (f.intercept - p.intercept).abs() <= 1e-6,
            "{} intercept {} vs {}",
            p.algorithm,
            f.intercept,
            p.intercept
        );
    }
    let shapely = fits.iter().find(|f| f.algorithm == "shapely").unwrap();
    assert!((shapely.slope - 0.003462).abs() <= 1e-6);
    assert!((shapely.intercept - 0.041119).abs() <= 1e-6);
    let numba_p = fits.iter().find(|f| f.algorithm == "numba_p").unwrap();
    assert!((numba_p.slope - 0.000009).abs() <= 1e-6);
    assert!((numba_p.intercept - 0.001607).abs() <= 1e-6);
}

/// The large-N table coincides with the small-N fit extrapolated, so the
/// prediction error against it is only the rounding of the printed inputs.
#[test]
fn large_table_equals_small_fit_extrapolation() {
    let fits =
        fit_by_algorithm(&read_timings_csv(&data("timings_10_to_10000.csv")).unwrap()).unwrap();
    let large = read_timings_csv(&data("timings_1908647_to_17097823.csv")).unwrap();
    let report = error_report(&fits, &large).unwrap();
    for row in &report.rows {
        let rel = row.rel_error.unwrap();
        assert!(rel < 1e-5, "{} @ {}: {}", row.algorithm, row.n_points, rel);
    }
}

#[test]
fn published_error_tables_are_mutually_consistent() {
    // actual = predicted ± abs, and rel = abs / actual for one of the signs
    let fits = read_fits_csv(&data("fit_coefficients.csv")).unwrap();
    let abs = published_values("absolute_error.csv");
    let rel = published_values("relative_error.csv");
    for ((n, alg, a), (_, _, r)) in abs.iter().zip(&rel) {
        let fit = fits
            .iter()
            .find(|f| &f.algorithm == alg)
            .unwrap()
            .coefficients();
        let pred = predict(fit, *n);
        let best = [pred - a, pred + a]
            .iter()
            .map(|actual| (a / actual - r).abs())
            .fold(f64::INFINITY, f64::min);
        assert!(
            best <= 0.02,
            "{alg} @ {n}: rel {r} inconsistent with abs {a}"
        );
    }
}

#[test]
fn rounded_coefficients_at_largest_size() {
    let opencv = FitCoefficients {
        slope: 0.000049,
        intercept: 0.008094,
    };
    let pred = predict(opencv, 17_097_823);
    assert!((pred - 837.801421).abs() < 1e-6);
    let samples = [TimingSample::new(17_097_823, "opencv", 841.152687)];
    let fits = read_fits_csv(&data("fit_coefficients.csv")).unwrap();
    let row = &error_report(&fits, &samples).unwrap().rows[0];
    assert!((row.abs_error - 3.351266).abs() < 1e-6);
}
