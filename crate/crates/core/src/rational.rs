//! Exact rationals. Every construction on a finite ground set lands in the
//! rationals, so no floating point is used anywhere in the library.

use num::{BigInt, BigRational, One, Zero};

pub type Rat = BigRational;

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// `2^(-k)`.
pub fn dyadic(k: u32) -> Rat {
    Rat::new(BigInt::one(), BigInt::one() << k as usize)
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}
