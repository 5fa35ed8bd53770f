use super::Point2;
use crate::Scalar;

/// Euclidean distance from `p` to the closed segment `ab`.
pub fn segment_distance<T: Scalar>(p: Point2<T>, a: Point2<T>, b: Point2<T>) -> T {
    let ab = b - a;
    let ap = p - a;
    let len2 = ab.dot(ab);
    if len2 == T::zero() {
        return ap.dot(ap).sqrt();
    }
    let t = (ap.dot(ab) / len2).max(T::zero()).min(T::one());
    let dx = ap.x() - t * ab.x();
    let dy = ap.y() - t * ab.y();
    dx.hypot(dy)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64, y: f64) -> Point2<f64> {
        Point2::new(x, y).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(
            segment_distance(pt(0.0, 1.0), pt(-1.0, 0.0), pt(1.0, 0.0)),
            1.0
        );
        assert_eq!(
            segment_distance(pt(5.0, 0.0), pt(0.0, 0.0), pt(1.0, 0.0)),
            4.0
        );
        assert_eq!(
            segment_distance(pt(0.5, 0.0), pt(0.0, 0.0), pt(1.0, 0.0)),
            0.0
        );
    }

    #[test]
    fn degenerate_segment_is_point_distance() {
        assert_eq!(
            segment_distance(pt(3.0, 4.0), pt(0.0, 0.0), pt(0.0, 0.0)),
            5.0
        );
    }

    #[test]
    fn clamps_before_start() {
        assert_eq!(
            segment_distance(pt(-3.0, 4.0), pt(0.0, 0.0), pt(10.0, 0.0)),
            5.0
        );
    }
}
