//! The scalar abstraction the linear algebra and geometry layers are generic
//! over.
//!
//! Everything downstream needs exact zero tests, so the implementors are the
//! exact types: [`BigRational`] for fast numeric work and [`Fraction`] for
//! symbolic work.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::scalar::Fraction;

pub trait Field:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// Sign relative to zero, when it can be decided.
    fn sign(&self) -> Option<Ordering>;

    fn from_rational(r: BigRational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    fn sign(&self) -> Option<Ordering> {
        Some(self.cmp(&BigRational::zero()))
    }

    fn from_rational(r: BigRational) -> Self {
        r
    }
}

impl Field for Fraction {
    fn inv(&self) -> Option<Self> {
        self.try_inv().ok()
    }

    fn sign(&self) -> Option<Ordering> {
        Fraction::sign(self)
    }

    fn from_rational(r: BigRational) -> Self {
        Fraction::constant(r)
    }
}
