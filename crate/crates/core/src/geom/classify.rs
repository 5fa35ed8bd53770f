use super::crossing::{count_crossings_c1, count_crossings_c2};
use super::{segment_distance, GeomError, Point2, Polygon, Ring};
use crate::Scalar;

/// Default distance, in coordinate units, under which a point counts as
/// lying on an edge in [`CrossingMode::Robust`].
pub const DEFAULT_BOUNDARY_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Inside,
    Outside,
    Boundary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum CrossingMode {
    /// Sign-change test plus edge-normal side test, non-strict comparisons.
    PaperC1,
    /// Sign-change test plus parametric crossing abscissa, strict `x > p_x`.
    PaperC2,
    /// Half-open crossing rule with explicit boundary detection.
    #[default]
    Robust,
}

impl CrossingMode {
    pub fn label(self) -> &'static str {
        match self {
            CrossingMode::PaperC1 => "paper-c1",
            CrossingMode::PaperC2 => "paper-c2",
            CrossingMode::Robust => "robust",
        }
    }
}

impl std::str::FromStr for CrossingMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "paper-c1" => Ok(CrossingMode::PaperC1),
            "paper-c2" => Ok(CrossingMode::PaperC2),
            "robust" => Ok(CrossingMode::Robust),
            other => Err(format!(
                "unknown mode `{other}` (expected robust, paper-c1 or paper-c2)"
            )),
        }
    }
}

impl std::fmt::Display for CrossingMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// Crossing count of one ring under `mode`. For `Robust` this is the
/// half-open count and ignores boundary proximity.
pub fn ring_crossings<T: Scalar>(
    p: Point2<T>,
    ring: &Ring<T>,
    mode: CrossingMode,
) -> Result<usize, GeomError> {
    match mode {
        CrossingMode::PaperC1 => Ok(count_crossings_c1(p, ring)),
        CrossingMode::PaperC2 => count_crossings_c2(p, ring),
        CrossingMode::Robust => Ok(super::count_crossings_half_open(p, ring)),
    }
}

/// Even-odd classification over all rings with the default boundary
/// tolerance.
pub fn contains<T: Scalar>(
    p: Point2<T>,
    poly: &Polygon<T>,
    mode: CrossingMode,
) -> Result<Classification, GeomError> {
    contains_with_tolerance(p, poly, mode, T::lit(DEFAULT_BOUNDARY_TOLERANCE))
}

/// Even-odd classification summing crossings over the outer ring and holes.
///
/// The paper modes only ever answer `Inside` or `Outside`; `tolerance` is
/// used by `Robust` alone. `PaperC2` fails with `DegenerateEdge` when a
/// horizontal edge lies on the ray line.
pub fn contains_with_tolerance<T: Scalar>(
    p: Point2<T>,
    poly: &Polygon<T>,
    mode: CrossingMode,
    tolerance: T,
) -> Result<Classification, GeomError> {
    let mut total = 0usize;
    match mode {
        CrossingMode::Robust => {
            for ring in poly.rings() {
                match robust_ring(p, ring, tolerance) {
                    Some(c) => total += c,
                    None => return Ok(Classification::Boundary),
                }
            }
        }
        _ => {
            for ring in poly.rings() {
                total += ring_crossings(p, ring, mode)?;
            }
        }
    }
    Ok(parity(total))
}

#[inline]
fn parity(count: usize) -> Classification {
    if count % 2 == 1 {
        Classification::Inside
    } else {
        Classification::Outside
    }
}

/// Half-open count, or `None` when `p` is within `tol` of an edge.
fn robust_ring<T: Scalar>(p: Point2<T>, ring: &Ring<T>, tol: T) -> Option<usize> {
    let (px, py) = (p.x(), p.y());
    let mut count = 0;
    for w in ring.vertices().windows(2) {
        let (a, b) = (w[0], w[1]);
        let (ylo, yhi) = if a.y() <= b.y() {
            (a.y(), b.y())
        } else {
            (b.y(), a.y())
        };
        if py < ylo - tol || py > yhi + tol {
            continue;
        }
        let (xlo, xhi) = if a.x() <= b.x() {
            (a.x(), b.x())
        } else {
            (b.x(), a.x())
        };
        if px >= xlo - tol && px <= xhi + tol && segment_distance(p, a, b) <= tol {
            return None;
        }
        let upward = a.y() <= py && py < b.y();
        let downward = b.y() <= py && py < a.y();
        if upward || downward {
            let orient = (b.x() - a.x()) * (py - a.y()) - (b.y() - a.y()) * (px - a.x());
            if (upward && orient > T::zero()) || (downward && orient < T::zero()) {
                count += 1;
            }
        }
    }
    Some(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::count_crossings_half_open;

    const MODES: [CrossingMode; 3] = [
        CrossingMode::PaperC1,
        CrossingMode::PaperC2,
        CrossingMode::Robust,
    ];

    fn pt(x: f64, y: f64) -> Point2<f64> {
        Point2::new(x, y).unwrap()
    }

    fn square() -> Polygon<f64> {
        Ring::from_coords(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0), (0.0, 0.0)])
            .unwrap()
            .into()
    }

    fn square_with_hole() -> Polygon<f64> {
        let hole = Ring::from_coords(&[
            (0.25, 0.25),
            (0.75, 0.25),
            (0.75, 0.75),
            (0.25, 0.75),
            (0.25, 0.25),
        ])
        .unwrap();
        Polygon::new(square().outer().clone(), vec![hole])
    }

    #[test]
    fn unit_square_any_mode() {
        for mode in MODES {
            assert_eq!(
                contains(pt(0.5, 0.5), &square(), mode),
                Ok(Classification::Inside)
            );
            assert_eq!(
                contains(pt(5.0, 5.0), &square(), mode),
                Ok(Classification::Outside)
            );
        }
    }

    #[test]
    fn hole_is_outside() {
        let poly = square_with_hole();
        for mode in MODES {
            assert_eq!(
                contains(pt(0.5, 0.5), &poly, mode),
                Ok(Classification::Outside)
            );
            assert_eq!(
                contains(pt(0.1, 0.5), &poly, mode),
                Ok(Classification::Inside)
            );
        }
        // per-ring counts: outer 1, hole 1
        let p = pt(0.5, 0.5);
        assert_eq!(count_crossings_half_open(p, poly.outer()), 1);
        assert_eq!(count_crossings_half_open(p, &poly.holes()[0]), 1);
    }

    #[test]
    fn boundary_only_in_robust() {
        let sq = square();
        assert_eq!(
            contains(pt(1.0, 0.5), &sq, CrossingMode::Robust),
            Ok(Classification::Boundary)
        );
        assert_eq!(
            contains(pt(0.0, 0.0), &sq, CrossingMode::Robust),
            Ok(Classification::Boundary)
        );
        assert_eq!(
            contains(pt(0.5, 1.0 + 1e-13), &sq, CrossingMode::Robust),
            Ok(Classification::Boundary)
        );
        assert_eq!(
            contains(pt(0.5, 1.0 + 1e-9), &sq, CrossingMode::Robust),
            Ok(Classification::Outside)
        );
        // wider tolerance
        assert_eq!(
            contains_with_tolerance(pt(0.5, 1.0 + 1e-9), &sq, CrossingMode::Robust, 1e-6),
            Ok(Classification::Boundary)
        );
        // paper modes never report Boundary
        assert_eq!(
            contains(pt(1.0, 0.5), &sq, CrossingMode::PaperC1),
            Ok(Classification::Inside)
        );
        assert_eq!(
            contains(pt(1.0, 0.5), &sq, CrossingMode::PaperC2),
            Ok(Classification::Outside)
        );
    }

    #[test]
    fn horizontal_edge_on_ray() {
        let sq = square();
        let p = pt(0.5, 0.0);
        assert_eq!(
            contains(p, &sq, CrossingMode::PaperC2),
            Err(GeomError::DegenerateEdge(0))
        );
        assert_eq!(
            contains(p, &sq, CrossingMode::Robust),
            Ok(Classification::Boundary)
        );
        // off the edge but on its line
        let q = pt(-0.5, 0.0);
        assert_eq!(
            contains(q, &sq, CrossingMode::PaperC2),
            Err(GeomError::DegenerateEdge(0))
        );
        assert_eq!(
            contains(q, &sq, CrossingMode::Robust),
            Ok(Classification::Outside)
        );
        assert!(contains(q, &sq, CrossingMode::PaperC1).is_ok());
    }

    #[test]
    fn mode_parse_roundtrip() {
        for mode in MODES {
            assert_eq!(mode.label().parse::<CrossingMode>(), Ok(mode));
        }
        assert!("fast".parse::<CrossingMode>().is_err());
    }

    #[test]
    fn f32_polygon() {
        let sq: Polygon<f32> =
            Ring::from_coords(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0), (0.0, 0.0)])
                .unwrap()
                .into();
        let p = Point2::new(0.5f32, 0.5).unwrap();
        for mode in MODES {
            assert_eq!(contains(p, &sq, mode), Ok(Classification::Inside));
        }
    }
}
