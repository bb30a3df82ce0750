//! Coordinate scalars for interval endpoints.
//!
//! Everything geometric in the crate is generic over [`Coord`]. Exactness of
//! the intersection tests depends on the scalar: [`Rational`](crate::Rational)
//! (the default used by the CLI and the JSON schema) and `BigRational` are
//! exact, `f64` is not. Unit-interval realization divides, so it needs a
//! field; with `f64` it is only approximately correct.

use std::fmt::Debug;

use num_traits::{FromPrimitive, Num};

pub trait Coord: Num + FromPrimitive + PartialOrd + Clone + Debug {
    fn from_index(i: usize) -> Self {
        Self::from_usize(i).expect("index representable in coordinate type")
    }

    fn min_of(a: Self, b: Self) -> Self {
        if b < a {
            b
        } else {
            a
        }
    }

    fn max_of(a: Self, b: Self) -> Self {
        if b > a {
            b
        } else {
            a
        }
    }
}

impl<T> Coord for T where T: Num + FromPrimitive + PartialOrd + Clone + Debug {}

/// `⌈log₂ x⌉` for `x ≥ 1`, with `⌈log₂ 1⌉ = 0`.
pub fn ceil_log2(x: usize) -> usize {
    assert!(x >= 1, "ceil_log2 of zero");
    (usize::BITS - (x - 1).leading_zeros()) as usize
}
