//! Numeric field abstraction shared by the floating-point and exact paths.

use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// A field the threshold assembly can run in: `f64` for speed or
/// `BigRational` for exact classification.
pub trait Scalar: Clone + Debug + Num + Signed + FromPrimitive + PartialOrd + Send + Sync {
    /// Exact conversion of a count.
    fn count(v: usize) -> Self {
        Self::from_usize(v).expect("count fits the scalar type")
    }

    /// `1 / v` for a positive count.
    fn recip_count(v: usize) -> Self {
        Self::one() / Self::count(v)
    }

    /// Nearest `f64`.
    fn approx(&self) -> f64;
}

impl Scalar for f64 {
    fn approx(&self) -> f64 {
        *self
    }
}

impl Scalar for BigRational {
    fn approx(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}
