//! Geometric types and ray-crossing kernels.

mod classify;
mod crossing;
mod distance;
mod oracle;
mod point;
mod ring;

pub use classify::{
    contains, contains_with_tolerance, ring_crossings, Classification, CrossingMode,
    DEFAULT_BOUNDARY_TOLERANCE,
};
pub use crossing::{
    count_crossings_c1, count_crossings_c2, count_crossings_half_open, crossing_x_c2,
    detect_sign_changes, edge_normal_c1, signed_offsets, EdgeNormal,
};
pub use distance::segment_distance;
pub use oracle::{oracle_classify, oracle_classify_with_tolerance, winding_number};
pub use point::Point2;
pub use ring::{Polygon, Ring};

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("coordinate is not finite")]
    NonFinite,
    #[error("ring has {0} vertices, at least 4 (closed triangle) required")]
    RingTooShort(usize),
    #[error("ring is not closed: first and last vertex differ")]
    RingNotClosed,
    #[error("ring repeats vertex {0} consecutively")]
    RepeatedVertex(usize),
    #[error("edge {0} is degenerate for this operation")]
    DegenerateEdge(usize),
    #[error("edge index {0} out of range")]
    EdgeOutOfRange(usize),
}
