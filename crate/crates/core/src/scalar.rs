//! Floating-point scalar used for search statistics.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// f32 or f64.
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    fn of_int(v: i32) -> Self {
        <Self as FromPrimitive>::from_i32(v).expect("i32 fits any float")
    }

    fn of_count(v: u64) -> Self {
        <Self as FromPrimitive>::from_u64(v).expect("u64 fits any float")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
