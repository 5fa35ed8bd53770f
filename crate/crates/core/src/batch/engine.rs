use std::num::NonZeroUsize;
use std::str::FromStr;

use super::bbox::bbox_of;
use super::PointBatch;
use crate::geom::{
    contains_with_tolerance, Classification, CrossingMode, Point2, Polygon,
    DEFAULT_BOUNDARY_TOLERANCE,
};
use crate::Scalar;

/// Per-point outcome; `DegenerateEdge` marks a point the selected mode
/// could not classify (a horizontal edge on its ray line under `PaperC2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Inside,
    Outside,
    Boundary,
    DegenerateEdge,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Inside => "inside",
            Verdict::Outside => "outside",
            Verdict::Boundary => "boundary",
            Verdict::DegenerateEdge => "error",
        }
    }
}

impl From<Classification> for Verdict {
    fn from(c: Classification) -> Self {
        match c {
            Classification::Inside => Verdict::Inside,
            Classification::Outside => Verdict::Outside,
            Classification::Boundary => Verdict::Boundary,
        }
    }
}

impl FromStr for Verdict {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "inside" => Ok(Verdict::Inside),
            "outside" => Ok(Verdict::Outside),
            "boundary" => Ok(Verdict::Boundary),
            "error" => Ok(Verdict::DegenerateEdge),
            other => Err(format!("unknown verdict `{other}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BatchStats {
    pub inside: usize,
    pub outside: usize,
    pub boundary: usize,
    pub degenerate: usize,
}

impl BatchStats {
    pub fn from_verdicts(verdicts: &[Verdict]) -> Self {
        let mut s = Self::default();
        for v in verdicts {
            match v {
                Verdict::Inside => s.inside += 1,
                Verdict::Outside => s.outside += 1,
                Verdict::Boundary => s.boundary += 1,
                Verdict::DegenerateEdge => s.degenerate += 1,
            }
        }
        s
    }

    pub fn total(&self) -> usize {
        self.inside + self.outside + self.boundary + self.degenerate
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BatchResult {
    pub verdicts: Vec<Verdict>,
    pub stats: BatchStats,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Parallelism {
    /// One worker per available hardware thread.
    #[default]
    Auto,
    Workers(NonZeroUsize),
}

impl Parallelism {
    pub fn serial() -> Self {
        Parallelism::Workers(NonZeroUsize::MIN)
    }

    pub fn workers(self) -> usize {
        match self {
            Parallelism::Auto => std::thread::available_parallelism().map_or(1, NonZeroUsize::get),
            Parallelism::Workers(n) => n.get(),
        }
    }
}

impl FromStr for Parallelism {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        if s == "auto" {
            return Ok(Parallelism::Auto);
        }
        s.parse::<NonZeroUsize>()
            .map(Parallelism::Workers)
            .map_err(|_| {
                format!("invalid parallelism `{s}` (expected `auto` or a positive integer)")
            })
    }
}

pub fn classify_batch<T: Scalar>(
    batch: &PointBatch<T>,
    poly: &Polygon<T>,
    mode: CrossingMode,
    parallelism: Parallelism,
) -> BatchResult {
    classify_batch_with_tolerance(
        batch,
        poly,
        mode,
        parallelism,
        T::lit(DEFAULT_BOUNDARY_TOLERANCE),
    )
}

/// Classifies every point of `batch`, in order.
///
/// Points outside the polygon's bounding box are `Outside` without running
/// the edge scan. The batch is split into one contiguous chunk per worker
/// and each worker fills its own slice of the output, so the result does
/// not depend on the worker count.
pub fn classify_batch_with_tolerance<T: Scalar>(
    batch: &PointBatch<T>,
    poly: &Polygon<T>,
    mode: CrossingMode,
    parallelism: Parallelism,
    tolerance: T,
) -> BatchResult {
    let points = batch.points();
    let mut verdicts = vec![Verdict::Outside; points.len()];
    let workers = parallelism.workers().clamp(1, points.len().max(1));

    if workers == 1 {
        classify_chunk(points, &mut verdicts, poly, mode, tolerance);
    } else {
        let chunk = points.len().div_ceil(workers);
        std::thread::scope(|scope| {
            for (pts, out) in points.chunks(chunk).zip(verdicts.chunks_mut(chunk)) {
                scope.spawn(move || classify_chunk(pts, out, poly, mode, tolerance));
            }
        });
    }

    let stats = BatchStats::from_verdicts(&verdicts);
    BatchResult { verdicts, stats }
}

fn classify_chunk<T: Scalar>(
    points: &[Point2<T>],
    out: &mut [Verdict],
    poly: &Polygon<T>,
    mode: CrossingMode,
    tolerance: T,
) {
    let bbox = bbox_of(poly);
    for (p, slot) in points.iter().zip(out.iter_mut()) {
        *slot = if !bbox.contains(*p) {
            Verdict::Outside
        } else {
            match contains_with_tolerance(*p, poly, mode, tolerance) {
                Ok(c) => c.into(),
                Err(_) => Verdict::DegenerateEdge,
            }
        };
    }
}
