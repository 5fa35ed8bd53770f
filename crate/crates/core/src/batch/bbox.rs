use super::engine::Verdict;
use super::PointBatch;
use crate::geom::{GeomError, Point2, Polygon};
use crate::Scalar;

/// Axis-aligned box with closed-interval membership.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BBox<T> {
    pub min_x: T,
    pub min_y: T,
    pub max_x: T,
    pub max_y: T,
}

impl<T: Scalar> BBox<T> {
    pub fn new(min_x: T, min_y: T, max_x: T, max_y: T) -> Option<Self> {
        (min_x <= max_x && min_y <= max_y).then_some(Self {
            min_x,
            min_y,
            max_x,
            max_y,
        })
    }

    #[inline]
    pub fn contains(&self, p: Point2<T>) -> bool {
        p.x() >= self.min_x && p.x() <= self.max_x && p.y() >= self.min_y && p.y() <= self.max_y
    }

    pub fn width(&self) -> T {
        self.max_x - self.min_x
    }

    pub fn height(&self) -> T {
        self.max_y - self.min_y
    }

    /// Grows width and height by `fraction` of their size, split evenly
    /// between both sides.
    pub fn inflate(&self, fraction: T) -> Result<Self, GeomError> {
        let half = fraction / (T::one() + T::one());
        let dx = self.width() * half;
        let dy = self.height() * half;
        let b = Self {
            min_x: self.min_x - dx,
            min_y: self.min_y - dy,
            max_x: self.max_x + dx,
            max_y: self.max_y + dy,
        };
        if [b.min_x, b.min_y, b.max_x, b.max_y]
            .iter()
            .all(|v| v.is_finite())
        {
            Ok(b)
        } else {
            Err(GeomError::NonFinite)
        }
    }
}

/// Tight bounds of the outer ring. Holes lie inside it for valid input.
pub fn bbox_of<T: Scalar>(poly: &Polygon<T>) -> BBox<T> {
    let v = poly.outer().vertices();
    let first = v[0];
    let init = BBox {
        min_x: first.x(),
        min_y: first.y(),
        max_x: first.x(),
        max_y: first.y(),
    };
    v[1..].iter().fold(init, |b, p| BBox {
        min_x: b.min_x.min(p.x()),
        min_y: b.min_y.min(p.y()),
        max_x: b.max_x.max(p.x()),
        max_y: b.max_y.max(p.y()),
    })
}

/// Points kept by [`prefilter_bbox`], with the position of each in the
/// original batch.
#[derive(Debug, Clone, PartialEq)]
pub struct Prefiltered<T> {
    pub inside_box: PointBatch<T>,
    pub index_map: Vec<usize>,
    pub outside_count: usize,
}

impl<T: Scalar> Prefiltered<T> {
    pub fn total(&self) -> usize {
        self.index_map.len() + self.outside_count
    }

    /// Places `verdicts` (aligned with `inside_box`) back at their original
    /// positions; every filtered-out point is `Outside`.
    pub fn scatter(&self, verdicts: &[Verdict]) -> Vec<Verdict> {
        assert_eq!(
            verdicts.len(),
            self.index_map.len(),
            "verdicts must align with inside_box"
        );
        let mut out = vec![Verdict::Outside; self.total()];
        for (&i, &v) in self.index_map.iter().zip(verdicts) {
            out[i] = v;
        }
        out
    }
}

pub fn prefilter_bbox<T: Scalar>(batch: &PointBatch<T>, bbox: &BBox<T>) -> Prefiltered<T> {
    let mut kept = Vec::new();
    let mut index_map = Vec::new();
    for (i, &p) in batch.iter().enumerate() {
        if bbox.contains(p) {
            kept.push(p);
            index_map.push(i);
        }
    }
    Prefiltered {
        outside_count: batch.len() - kept.len(),
        inside_box: PointBatch::new(kept),
        index_map,
    }
}
