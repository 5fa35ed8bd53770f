//! Ray-crossing kernels for a horizontal ray cast in direction `(1, 0)`.
//!
//! The ray line through `p` has normal `(0, 1)`, so the signed offset of a
//! vertex `r` from it is `f(r) = (r - p)·(0, 1) = r_y - p_y`. An edge
//! `R_i R_{i+1}` meets the line when `f_i · f_{i+1} <= 0`. The two paper
//! kernels differ only in how they keep the crossings to the right of `p`:
//!
//! - [`count_crossings_c1`]: side-of-edge test against an edge normal whose
//!   x-component is non-negative, `(p - r_i)·n <= 0`.
//! - [`count_crossings_c2`]: parametric intersection
//!   `x = x_i + λ d_x`, `λ = (p_y - y_i) / d_y`, counted when `x > p_x`.
//!
//! Both keep the non-strict sign test, so a vertex lying exactly on the ray
//! is seen by both adjacent edges. [`count_crossings_half_open`] is the
//! robust variant that counts each crossing once.

use super::{GeomError, Point2, Ring};
use crate::Scalar;

/// Edge normal oriented so that `n_x >= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeNormal<T> {
    pub n_x: T,
    pub n_y: T,
}

/// `f_i = y_i - p_y` for every vertex, closing vertex included.
pub fn signed_offsets<T: Scalar>(ring: &Ring<T>, p_y: T) -> Vec<T> {
    ring.vertices().iter().map(|r| r.y() - p_y).collect()
}

/// Indices `i` with `offsets[i] * offsets[i + 1] <= 0`, ascending.
pub fn detect_sign_changes<T: Scalar>(offsets: &[T]) -> Vec<usize> {
    offsets
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] * w[1] <= T::zero())
        .map(|(i, _)| i)
        .collect()
}

/// x-coordinate where the line `y = p_y` meets the infinite line through
/// edge `edge_index`.
pub fn crossing_x_c2<T: Scalar>(ring: &Ring<T>, edge_index: usize, p_y: T) -> Result<T, GeomError> {
    let (a, b) = ring.edge(edge_index)?;
    crossing_x(a, b, p_y).ok_or(GeomError::DegenerateEdge(edge_index))
}

#[inline]
fn crossing_x<T: Scalar>(a: Point2<T>, b: Point2<T>, p_y: T) -> Option<T> {
    let d_x = b.x() - a.x();
    let d_y = b.y() - a.y();
    if d_y == T::zero() {
        return None;
    }
    let lambda = (p_y - a.y()) / d_y;
    Some(a.x() + lambda * d_x)
}

pub fn edge_normal_c1<T: Scalar>(
    ring: &Ring<T>,
    edge_index: usize,
) -> Result<EdgeNormal<T>, GeomError> {
    let (a, b) = ring.edge(edge_index)?;
    if a == b {
        return Err(GeomError::DegenerateEdge(edge_index));
    }
    Ok(normal(a, b))
}

#[inline]
fn normal<T: Scalar>(a: Point2<T>, b: Point2<T>) -> EdgeNormal<T> {
    let n_x = b.y() - a.y();
    let n_y = a.x() - b.x();
    if n_x < T::zero() {
        EdgeNormal {
            n_x: -n_x,
            n_y: -n_y,
        }
    } else {
        EdgeNormal { n_x, n_y }
    }
}

/// Sign-change edges for which `p` is on the left: `(p - r_i)·n <= 0`.
pub fn count_crossings_c1<T: Scalar>(p: Point2<T>, ring: &Ring<T>) -> usize {
    let p_y = p.y();
    let v = ring.vertices();
    let mut count = 0;
    let mut f0 = v[0].y() - p_y;
    for w in v.windows(2) {
        let f1 = w[1].y() - p_y;
        if f0 * f1 <= T::zero() {
            let n = normal(w[0], w[1]);
            let side = (p.x() - w[0].x()) * n.n_x + (p_y - w[0].y()) * n.n_y;
            if side <= T::zero() {
                count += 1;
            }
        }
        f0 = f1;
    }
    count
}

/// Sign-change edges whose crossing abscissa is strictly greater than `p_x`.
///
/// A horizontal edge on the ray line has no defined crossing parameter and
/// yields [`GeomError::DegenerateEdge`].
pub fn count_crossings_c2<T: Scalar>(p: Point2<T>, ring: &Ring<T>) -> Result<usize, GeomError> {
    let p_y = p.y();
    let v = ring.vertices();
    let mut count = 0;
    let mut f0 = v[0].y() - p_y;
    for (i, w) in v.windows(2).enumerate() {
        let f1 = w[1].y() - p_y;
        if f0 * f1 <= T::zero() {
            let x = crossing_x(w[0], w[1], p_y).ok_or(GeomError::DegenerateEdge(i))?;
            if x > p.x() {
                count += 1;
            }
        }
        f0 = f1;
    }
    Ok(count)
}

/// Counts edges with exactly one endpoint strictly above the ray line
/// (`y_i <= p_y < y_{i+1}` or `y_{i+1} <= p_y < y_i`) that pass strictly to
/// the right of `p`. Horizontal edges never qualify.
pub fn count_crossings_half_open<T: Scalar>(p: Point2<T>, ring: &Ring<T>) -> usize {
    let (px, py) = (p.x(), p.y());
    let mut count = 0;
    for w in ring.vertices().windows(2) {
        let (a, b) = (w[0], w[1]);
        let upward = a.y() <= py && py < b.y();
        let downward = b.y() <= py && py < a.y();
        if !(upward || downward) {
            continue;
        }
        // orientation of p relative to a -> b
        let orient = (b.x() - a.x()) * (py - a.y()) - (b.y() - a.y()) * (px - a.x());
        if (upward && orient > T::zero()) || (downward && orient < T::zero()) {
            count += 1;
        }
    }
    count
}
