//! Real scalar abstraction shared by every numerical routine in the crate.

use std::fmt::{Debug, Display, LowerExp};

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real floating-point type the simulator is generic over (`f32` or `f64`).
///
/// The tolerances scale with the precision of the type: the `f64` values are
/// the ones the physics contracts are stated in.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + Debug
    + Display
    + LowerExp
    + Default
    + Send
    + Sync
    + 'static
{
    /// Normalization / Hermiticity tolerance for system-side objects.
    fn state_tolerance() -> Self;

    /// Pointer shifts closer than this are treated as one term.
    fn merge_tolerance() -> Self;

    /// Squared norms at or below this count as the zero vector.
    fn zero_norm_floor() -> Self {
        Self::epsilon() * Self::epsilon()
    }

    /// Lossless for `f64`, rounding for `f32`.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("finite literal")
    }
}

impl Scalar for f64 {
    fn state_tolerance() -> Self {
        1e-12
    }

    fn merge_tolerance() -> Self {
        1e-12
    }
}

impl Scalar for f32 {
    fn state_tolerance() -> Self {
        1e-5
    }

    fn merge_tolerance() -> Self {
        1e-6
    }
}
