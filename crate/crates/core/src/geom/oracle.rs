//! Reference classifier based on the winding (sum-of-angles) method.
//!
//! Shares nothing with the crossing kernels beyond the point and ring types,
//! which makes it usable as a cross-check for them.

use super::{segment_distance, Classification, Point2, Polygon, Ring, DEFAULT_BOUNDARY_TOLERANCE};
use crate::Scalar;

/// Number of turns `ring` makes around `p`, from the accumulated signed
/// angle subtended by each edge. Undefined for `p` on the ring.
pub fn winding_number<T: Scalar>(p: Point2<T>, ring: &Ring<T>) -> i64 {
    let total = ring.edges().fold(T::zero(), |acc, (a, b)| {
        let u = a - p;
        let v = b - p;
        acc + u.cross(v).atan2(u.dot(v))
    });
    let two_pi = T::lit(std::f64::consts::TAU);
    (total / two_pi).round().to_i64().unwrap_or(0)
}

pub fn oracle_classify<T: Scalar>(p: Point2<T>, poly: &Polygon<T>) -> Classification {
    oracle_classify_with_tolerance(p, poly, T::lit(DEFAULT_BOUNDARY_TOLERANCE))
}

/// `Boundary` within `tolerance` of any edge, otherwise `Inside` iff an odd
/// number of rings wind around `p`.
pub fn oracle_classify_with_tolerance<T: Scalar>(
    p: Point2<T>,
    poly: &Polygon<T>,
    tolerance: T,
) -> Classification {
    let on_edge = poly
        .rings()
        .flat_map(Ring::edges)
        .any(|(a, b)| segment_distance(p, a, b) <= tolerance);
    if on_edge {
        return Classification::Boundary;
    }
    let enclosing = poly.rings().filter(|r| winding_number(p, r) != 0).count();
    if enclosing % 2 == 1 {
        Classification::Inside
    } else {
        Classification::Outside
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64, y: f64) -> Point2<f64> {
        Point2::new(x, y).unwrap()
    }

    fn square() -> Ring<f64> {
        Ring::from_coords(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0), (0.0, 0.0)]).unwrap()
    }

    #[test]
    fn winding_sign_follows_orientation() {
        let ccw = square();
        let cw = Ring::from_coords(&[(0.0, 0.0), (0.0, 1.0), (1.0, 1.0), (1.0, 0.0), (0.0, 0.0)])
            .unwrap();
        assert_eq!(winding_number(pt(0.5, 0.5), &ccw), 1);
        assert_eq!(winding_number(pt(0.5, 0.5), &cw), -1);
        assert_eq!(winding_number(pt(3.0, 0.5), &ccw), 0);
    }

    #[test]
    fn examples() {
        let sq: Polygon<f64> = square().into();
        assert_eq!(oracle_classify(pt(0.5, 0.5), &sq), Classification::Inside);
        assert_eq!(oracle_classify(pt(1.0, 0.5), &sq), Classification::Boundary);
        assert_eq!(oracle_classify(pt(-1.0, 0.0), &sq), Classification::Outside);
    }

    #[test]
    fn hole_uses_even_odd() {
        let hole = Ring::from_coords(&[
            (0.25, 0.25),
            (0.75, 0.25),
            (0.75, 0.75),
            (0.25, 0.75),
            (0.25, 0.25),
        ])
        .unwrap();
        let poly = Polygon::new(square(), vec![hole]);
        assert_eq!(
            oracle_classify(pt(0.5, 0.5), &poly),
            Classification::Outside
        );
        assert_eq!(oracle_classify(pt(0.1, 0.1), &poly), Classification::Inside);
    }
}
