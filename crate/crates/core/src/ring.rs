//! Minimal algebraic interfaces shared by scalars, octonions, duals and series.
//!
//! Identity elements are produced from an existing value (`zero_like`,
//! `one_like`) because some rings carry context: a [`QuadScalar`] knows its
//! discriminant, so a context-free `zero()` cannot exist for it.
//!
//! [`QuadScalar`]: crate::scalar::QuadScalar

use std::fmt::Debug;

use crate::error::Result;
use crate::scalar::BigRat;
use num_traits::{One, Zero};

/// A (possibly non-commutative, possibly non-associative) unital ring.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
}

/// Commutative ring elements that may be inverted when they are units.
pub trait Field: Ring {
    fn inv(&self) -> Result<Self>;
}

/// Multiplication by a scalar from a (commutative) coefficient ring `S`.
pub trait Scale<S> {
    fn scale(&self, s: &S) -> Self;
}

/// Involutive conjugation. Scalars conjugate to themselves.
pub trait Conjugate {
    fn conj(&self) -> Self;
}

impl Ring for BigRat {
    fn zero_like(&self) -> Self {
        BigRat::zero()
    }
    fn one_like(&self) -> Self {
        BigRat::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        if self.is_integer() && rhs.is_integer() {
            return BigRat::from_integer(self.numer() + rhs.numer());
        }
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        if self.is_integer() && rhs.is_integer() {
            return BigRat::from_integer(self.numer() - rhs.numer());
        }
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.is_integer() && rhs.is_integer() {
            return BigRat::from_integer(self.numer() * rhs.numer());
        }
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Field for BigRat {
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(crate::Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}

impl Scale<BigRat> for BigRat {
    fn scale(&self, s: &BigRat) -> Self {
        self * s
    }
}

impl Conjugate for BigRat {
    fn conj(&self) -> Self {
        self.clone()
    }
}

/// `x^n` by square-and-multiply, with `x^0 = 1` for every `x` (including 0).
pub fn pow<R: Ring>(x: &R, mut n: u64) -> R {
    let mut acc = x.one_like();
    let mut base = x.clone();
    while n > 0 {
        if n & 1 == 1 {
            acc = acc.mul_ref(&base);
        }
        n >>= 1;
        if n > 0 {
            base = base.mul_ref(&base);
        }
    }
    acc
}
