use super::{GeomError, Point2};
use crate::Scalar;

/// A closed boundary: `vertices[0] == vertices[n]`, at least a triangle,
/// no consecutive repeated vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct Ring<T> {
    vertices: Vec<Point2<T>>,
}

impl<T: Scalar> Ring<T> {
    pub fn new(vertices: Vec<Point2<T>>) -> Result<Self, GeomError> {
        if vertices.len() < 4 {
            return Err(GeomError::RingTooShort(vertices.len()));
        }
        if vertices[0] != vertices[vertices.len() - 1] {
            return Err(GeomError::RingNotClosed);
        }
        if let Some(i) = vertices.windows(2).position(|w| w[0] == w[1]) {
            return Err(GeomError::RepeatedVertex(i + 1));
        }
        Ok(Self { vertices })
    }

    /// Like [`Ring::new`], appending the first vertex when the input is open.
    /// An already closed sequence is taken as is.
    pub fn closing(mut vertices: Vec<Point2<T>>) -> Result<Self, GeomError> {
        if let (Some(first), Some(last)) = (vertices.first().copied(), vertices.last()) {
            if first != *last {
                vertices.push(first);
            }
        }
        Self::new(vertices)
    }

    pub fn from_coords(coords: &[(T, T)]) -> Result<Self, GeomError> {
        let vertices = coords
            .iter()
            .map(|&c| Point2::try_from(c))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(vertices)
    }

    /// All `n + 1` vertices including the closing duplicate.
    #[inline]
    pub fn vertices(&self) -> &[Point2<T>] {
        &self.vertices
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn edge(&self, i: usize) -> Result<(Point2<T>, Point2<T>), GeomError> {
        if i >= self.edge_count() {
            return Err(GeomError::EdgeOutOfRange(i));
        }
        Ok((self.vertices[i], self.vertices[i + 1]))
    }

    pub fn edges(&self) -> impl Iterator<Item = (Point2<T>, Point2<T>)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn translate(&self, dx: T, dy: T) -> Result<Self, GeomError> {
        let vertices = self
            .vertices
            .iter()
            .map(|p| p.translate(dx, dy))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(vertices)
    }

    /// Same boundary, starting at vertex `k` (mod `n`).
    pub fn rotate_start(&self, k: usize) -> Self {
        let n = self.edge_count();
        let k = k % n;
        let mut vertices: Vec<_> = (0..n).map(|i| self.vertices[(i + k) % n]).collect();
        vertices.push(vertices[0]);
        Self { vertices }
    }

    /// Twice the signed area (positive for counter-clockwise).
    pub fn signed_area2(&self) -> T {
        self.edges().fold(T::zero(), |acc, (a, b)| acc + a.cross(b))
    }
}

/// One outer ring plus holes, combined by even-odd parity.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon<T> {
    outer: Ring<T>,
    holes: Vec<Ring<T>>,
}

impl<T: Scalar> Polygon<T> {
    pub fn new(outer: Ring<T>, holes: Vec<Ring<T>>) -> Self {
        Self { outer, holes }
    }

    pub fn outer(&self) -> &Ring<T> {
        &self.outer
    }

    pub fn holes(&self) -> &[Ring<T>] {
        &self.holes
    }

    /// Outer ring first, then holes in order.
    pub fn rings(&self) -> impl Iterator<Item = &Ring<T>> + '_ {
        std::iter::once(&self.outer).chain(self.holes.iter())
    }

    pub fn edge_count(&self) -> usize {
        self.rings().map(Ring::edge_count).sum()
    }

    pub fn translate(&self, dx: T, dy: T) -> Result<Self, GeomError> {
        Ok(Self {
            outer: self.outer.translate(dx, dy)?,
            holes: self
                .holes
                .iter()
                .map(|h| h.translate(dx, dy))
                .collect::<Result<_, _>>()?,
        })
    }
}

impl<T: Scalar> From<Ring<T>> for Polygon<T> {
    fn from(outer: Ring<T>) -> Self {
        Self::new(outer, Vec::new())
    }
}
