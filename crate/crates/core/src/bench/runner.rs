use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{BenchError, TimingSample};
use crate::batch::{bbox_of, classify_batch, BBox, Parallelism, PointBatch};
use crate::geom::{CrossingMode, Point2, Polygon};

#[derive(Debug, Clone)]
pub struct BenchConfig {
    /// Strictly ascending, positive.
    pub sizes: Vec<usize>,
    pub mode: CrossingMode,
    pub parallelism: Parallelism,
    pub repetitions: usize,
    pub seed: u64,
    /// A timed sample of a size below this runs several passes, each over
    /// its own `n` points, until at least this many points were processed;
    /// the sample is the per-pass time. Keeps short runs from being
    /// dominated by timer and scheduler noise.
    pub min_points_per_sample: usize,
}

impl BenchConfig {
    pub fn new(sizes: Vec<usize>, mode: CrossingMode) -> Self {
        Self {
            sizes,
            mode,
            parallelism: Parallelism::Auto,
            repetitions: 3,
            seed: 0,
            min_points_per_sample: 100_000,
        }
    }

    pub fn validate(&self) -> Result<(), BenchError> {
        if self.sizes.is_empty() {
            return Err(BenchError::InvalidConfig("sizes must not be empty".into()));
        }
        if self.sizes[0] == 0 || self.sizes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(BenchError::InvalidConfig(format!(
                "sizes must be positive and strictly ascending: {:?}",
                self.sizes
            )));
        }
        if self.repetitions == 0 {
            return Err(BenchError::InvalidConfig(
                "repetitions must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

/// Uniform points over `bbox`. The stream depends only on `(seed, n)`.
pub fn generate_points(bbox: &BBox<f64>, n: usize, seed: u64) -> PointBatch<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    (0..n)
        .map(|_| {
            let x = bbox.min_x + rng.gen::<f64>() * bbox.width();
            let y = bbox.min_y + rng.gen::<f64>() * bbox.height();
            Point2::new(x.min(bbox.max_x), y.min(bbox.max_y)).expect("finite box")
        })
        .collect()
}

/// Times `classify_batch` on seeded random points for each size.
///
/// Points cover the polygon's bounding box grown by 10%, so a share of them
/// hits the prefilter. Every size gets one untimed warm-up pass. Timed
/// samples are taken in rounds, each round visiting every size once, so
/// slow drift in machine speed spreads over all sizes instead of landing on
/// the largest; the fastest of `repetitions` samples is kept. A sample of a
/// small size covers several back-to-back passes over distinct point sets
/// (see [`BenchConfig::min_points_per_sample`]). Point generation is not
/// timed.
pub fn run_scaling_bench(
    poly: &Polygon<f64>,
    config: &BenchConfig,
) -> Result<Vec<TimingSample>, BenchError> {
    config.validate()?;
    let area = bbox_of(poly)
        .inflate(0.1)
        .map_err(|e| BenchError::InvalidConfig(format!("polygon bounds: {e}")))?;
    let run = |batch: &PointBatch<f64>| {
        std::hint::black_box(classify_batch(batch, poly, config.mode, config.parallelism));
    };
    // Each pass of a sample gets its own points: replaying one small batch
    // lets the branch predictor learn it and under-reports the cost.
    let sets: Vec<Vec<PointBatch<f64>>> = config
        .sizes
        .iter()
        .map(|&n| {
            let passes = config.min_points_per_sample.div_ceil(n).max(1);
            (0..passes as u64)
                .map(|k| generate_points(&area, n, config.seed.wrapping_add(k)))
                .collect()
        })
        .collect();
    for batches in &sets {
        run(&batches[0]);
    }
    let mut best = vec![f64::INFINITY; config.sizes.len()];
    for _ in 0..config.repetitions {
        for (batches, best) in sets.iter().zip(best.iter_mut()) {
            let start = Instant::now();
            for batch in batches {
                run(batch);
            }
            *best = best.min(start.elapsed().as_secs_f64() / batches.len() as f64);
        }
    }
    let label = config.mode.label();
    Ok(config
        .sizes
        .iter()
        .zip(best)
        .map(|(&n, t)| TimingSample::new(n, label, t))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Ring;

    fn square() -> Polygon<f64> {
        Ring::from_coords(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0), (0.0, 0.0)])
            .unwrap()
            .into()
    }

    #[test]
    fn three_sizes_three_samples() {
        let mut cfg = BenchConfig::new(vec![10, 100, 1000], CrossingMode::Robust);
        cfg.parallelism = Parallelism::serial();
        let s = run_scaling_bench(&square(), &cfg).unwrap();
        assert_eq!(
            s.iter().map(|t| t.n_points).collect::<Vec<_>>(),
            [10, 100, 1000]
        );
        assert!(s
            .iter()
            .all(|t| t.elapsed_seconds > 0.0 && t.algorithm == "robust"));
    }

    #[test]
    fn generation_is_seeded() {
        let b = BBox::new(-1.0, -1.0, 2.0, 3.0).unwrap();
        assert_eq!(generate_points(&b, 500, 42), generate_points(&b, 500, 42));
        assert_ne!(generate_points(&b, 500, 42), generate_points(&b, 500, 43));
        assert!(generate_points(&b, 500, 1).iter().all(|&p| b.contains(p)));
    }

    #[test]
    fn inflated_area_reaches_outside() {
        let area = bbox_of(&square()).inflate(0.1).unwrap();
        let pts = generate_points(&area, 2000, 5);
        let outside = pts
            .iter()
            .filter(|&&p| !bbox_of(&square()).contains(p))
            .count();
        assert!(outside > 0 && outside < 2000);
    }

    #[test]
    fn rejects_bad_config() {
        let bad = |sizes: Vec<usize>, reps| {
            let mut c = BenchConfig::new(sizes, CrossingMode::Robust);
            c.repetitions = reps;
            run_scaling_bench(&square(), &c)
        };
        assert!(matches!(bad(vec![], 1), Err(BenchError::InvalidConfig(_))));
        assert!(matches!(
            bad(vec![100, 10], 1),
            Err(BenchError::InvalidConfig(_))
        ));
        assert!(matches!(
            bad(vec![0, 10], 1),
            Err(BenchError::InvalidConfig(_))
        ));
        assert!(matches!(
            bad(vec![10], 0),
            Err(BenchError::InvalidConfig(_))
        ));
    }
}
