//! Scalar abstraction: the floating-point types the evaluators are generic over.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::float::FloatConst;
use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};

/// Floating-point scalar the whole crate is generic over.
///
/// Everything numeric is written against this trait so the same code
/// instantiates at `f64` (the precision all accuracy promises are stated
/// for) and at `f32` (a cheap way to smoke-test that nothing silently
/// depends on double precision). The bound set is the smallest one the
/// numerics actually use.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssign
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
}

impl Real for f32 {}
impl Real for f64 {}

/// Converts an `f64` constant into the working scalar.
///
/// Never fails for the provided implementors: `FromPrimitive` for floats is
/// a saturating `as` cast.
#[inline]
pub(crate) fn r<F: Real>(x: f64) -> F {
    F::from_f64(x).expect("f64 constant converts into the Real scalar")
}

/// Complex constant in the working scalar.
#[inline]
pub(crate) fn cx<F: Real>(re: f64, im: f64) -> Complex<F> {
    Complex::new(r(re), r(im))
}
