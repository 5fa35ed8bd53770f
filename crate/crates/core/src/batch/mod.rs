//! Large point-set classification against one polygon.

mod bbox;
mod engine;

pub use bbox::{bbox_of, prefilter_bbox, BBox, Prefiltered};
pub use engine::{
    classify_batch, classify_batch_with_tolerance, BatchResult, BatchStats, Parallelism, Verdict,
};

use crate::geom::Point2;
use crate::Scalar;

/// Dense, order-significant sequence of query points.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PointBatch<T> {
    points: Vec<Point2<T>>,
}

impl<T: Scalar> PointBatch<T> {
    pub fn new(points: Vec<Point2<T>>) -> Self {
        Self { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point2<T>] {
        &self.points
    }

    pub fn iter(&self) -> impl Iterator<Item = &Point2<T>> + '_ {
        self.points.iter()
    }

    pub fn into_points(self) -> Vec<Point2<T>> {
        self.points
    }
}

impl<T: Scalar> From<Vec<Point2<T>>> for PointBatch<T> {
    fn from(points: Vec<Point2<T>>) -> Self {
        Self::new(points)
    }
}

impl<T: Scalar> FromIterator<Point2<T>> for PointBatch<T> {
    fn from_iter<I: IntoIterator<Item = Point2<T>>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}
