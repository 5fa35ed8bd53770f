use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Coordinate scalar accepted by the geometry and batch layers.
pub trait Scalar: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {
    /// Converts an `f64` constant (tolerances, literals) into the scalar.
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal representable in scalar type")
    }
}

impl<T> Scalar for T where T: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {}
