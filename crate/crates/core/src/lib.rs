//! Batch point-in-polygon classification by vector-geometric ray casting.
//!
//! The crate is organised in four layers:
//!
//! - [`geom`]: points, rings and polygons, the two crossing-count kernels
//!   (edge-normal side test and parametric crossing test), a robust
//!   half-open variant with boundary detection, and an independent
//!   winding-angle oracle.
//! - [`batch`]: bounding-box prefiltering and deterministic data-parallel
//!   classification of large point sets.
//! - [`io`]: points CSV, GeoJSON polygons, and results CSV.
//! - [`bench`]: runtime scaling measurements and least-squares linearity
//!   analysis.
//!
//! Geometry is generic over the coordinate scalar (`f64` or `f32`); the
//! aliases below fix it to the common choices.

pub mod batch;
pub mod bench;
pub mod geom;
pub mod io;
mod scalar;
pub mod synth;

pub use batch::{
    bbox_of, classify_batch, prefilter_bbox, BBox, BatchResult, BatchStats, Parallelism,
    PointBatch, Prefiltered, Verdict,
};
pub use geom::{
    contains, contains_with_tolerance, oracle_classify, segment_distance, Classification,
    CrossingMode, EdgeNormal, GeomError, Point2, Polygon, Ring, DEFAULT_BOUNDARY_TOLERANCE,
};
pub use scalar::Scalar;

pub type PointF64 = Point2<f64>;
pub type RingF64 = Ring<f64>;
pub type PolygonF64 = Polygon<f64>;
pub type BBoxF64 = BBox<f64>;
pub type PointBatchF64 = PointBatch<f64>;

pub type PointF32 = Point2<f32>;
pub type RingF32 = Ring<f32>;
pub type PolygonF32 = Polygon<f32>;
pub type BBoxF32 = BBox<f32>;
pub type PointBatchF32 = PointBatch<f32>;
