use std::ops::{Add, Sub};

use super::GeomError;
use crate::Scalar;

/// A planar coordinate pair. Both components are finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2<T> {
    x: T,
    y: T,
}

impl<T: Scalar> Point2<T> {
    pub fn new(x: T, y: T) -> Result<Self, GeomError> {
        if x.is_finite() && y.is_finite() {
            Ok(Self { x, y })
        } else {
            Err(GeomError::NonFinite)
        }
    }

    #[inline]
    pub fn x(&self) -> T {
        self.x
    }

    #[inline]
    pub fn y(&self) -> T {
        self.y
    }

    #[inline]
    pub fn dot(self, other: Self) -> T {
        self.x * other.x + self.y * other.y
    }

    #[inline]
    pub fn cross(self, other: Self) -> T {
        self.x * other.y - self.y * other.x
    }

    /// Translates by `(dx, dy)`; fails if the result overflows to infinity.
    pub fn translate(self, dx: T, dy: T) -> Result<Self, GeomError> {
        Self::new(self.x + dx, self.y + dy)
    }
}

// Arithmetic on finite values can overflow; these are only used internally
// on differences of in-range coordinates.
impl<T: Scalar> Sub for Point2<T> {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Self {
            x: self.x - rhs.x,
            y: self.y - rhs.y,
        }
    }
}

impl<T: Scalar> Add for Point2<T> {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        Self {
            x: self.x + rhs.x,
            y: self.y + rhs.y,
        }
    }
}

impl<T: Scalar> TryFrom<(T, T)> for Point2<T> {
    type Error = GeomError;
    fn try_from((x, y): (T, T)) -> Result<Self, GeomError> {
        Self::new(x, y)
    }
}

impl<T: Scalar> TryFrom<[T; 2]> for Point2<T> {
    type Error = GeomError;
    fn try_from([x, y]: [T; 2]) -> Result<Self, GeomError> {
        Self::new(x, y)
    }
}

impl<T: Scalar> From<Point2<T>> for (T, T) {
    fn from(p: Point2<T>) -> Self {
        (p.x, p.y)
    }
}
