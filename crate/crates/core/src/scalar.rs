use std::fmt::Display;
use std::iter::Sum;

use num_traits::float::TotalOrder;
use num_traits::{Float, FloatConst};
use rustfft::FftNum;

/// Floating-point scalar usable throughout the crate: `f32` or `f64`.
pub trait Scalar: FftNum + Float + FloatConst + TotalOrder + Default + Display + Sum {
    /// Lossless-enough conversion from an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        <Self as num_traits::NumCast>::from(x).expect("f64 literal fits any float scalar")
    }

    #[inline]
    fn from_index(n: usize) -> Self {
        <Self as num_traits::NumCast>::from(n).expect("usize fits any float scalar")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self).unwrap_or(f64::NAN)
    }

    /// Absolute slack allowed when a computed value overshoots a branch
    /// boundary. `1e-9`, widened to a few ulps for narrow types.
    #[inline]
    fn branch_slack() -> Self {
        Self::lit(1e-9).max(Self::epsilon() * Self::lit(8.0))
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
