//! Exact scalars: arbitrary-precision rationals and the formal quadratic
//! extension `Q(ω)`, `ω² = D`, in which the characteristic roots live.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::horadam::HoradamParams;
use crate::ring::{self, Conjugate, Field, Ring, Scale};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type BigRat = num_rational::BigRational;

pub fn rat(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"3"`, `"-3"` or `"3/2"`. Whitespace around the parts is rejected.
pub fn parse_rat(s: &str) -> Result<BigRat> {
    let bad = || Error::ParseRational(s.to_string());
    let int = |t: &str| -> Result<BigInt> {
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        BigInt::from_str(t).map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(BigRat::from_integer(int(s)?)),
        Some((n, d)) => {
            if d.starts_with(['-', '+']) {
                return Err(bad());
            }
            let d = int(d)?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRat::new(int(n)?, d))
        }
    }
}

/// Canonical text form: `"num/den"`, integers without `"/1"`.
pub fn fmt_rat(x: &BigRat) -> String {
    x.to_string()
}

/// Element `x + y·ω` of `Q(ω)` with `ω² = D`.
///
/// `D` may be negative or a perfect square; the arithmetic is purely formal.
/// Combining values with different discriminants panics.
#[derive(Clone)]
pub struct QuadScalar {
    pub x: BigRat,
    pub y: BigRat,
    d: Arc<BigRat>,
}

impl QuadScalar {
    pub fn new(x: BigRat, y: BigRat, d: &Arc<BigRat>) -> Self {
        QuadScalar { x, y, d: Arc::clone(d) }
    }

    pub fn from_rat(x: BigRat, d: &Arc<BigRat>) -> Self {
        Self::new(x, BigRat::zero(), d)
    }

    /// The generator `ω`.
    pub fn omega(d: &Arc<BigRat>) -> Self {
        Self::new(BigRat::zero(), BigRat::one(), d)
    }

    pub fn discriminant(&self) -> &BigRat {
        &self.d
    }

    pub fn discriminant_arc(&self) -> &Arc<BigRat> {
        &self.d
    }

    /// `x² - D·y²`, the field norm. Zero exactly when the element is not a unit.
    pub fn norm(&self) -> BigRat {
        &self.x * &self.x - &*self.d * &self.y * &self.y
    }

    /// Galois conjugate `x - y·ω`.
    pub fn galois_conj(&self) -> Self {
        Self::new(self.x.clone(), -&self.y, &self.d)
    }

    pub fn is_rational(&self) -> bool {
        self.y.is_zero()
    }

    pub fn to_rational(&self) -> Result<BigRat> {
        if self.is_rational() {
            Ok(self.x.clone())
        } else {
            Err(Error::Irrational)
        }
    }

    pub fn pow(&self, n: u64) -> Self {
        ring::pow(self, n)
    }

    fn check(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.d, &other.d) || *self.d == *other.d,
            "mixed discriminants: {} vs {}",
            self.d,
            other.d
        );
    }
}

impl PartialEq for QuadScalar {
    fn eq(&self, other: &Self) -> bool {
        self.check(other);
        self.x == other.x && self.y == other.y
    }
}

impl Eq for QuadScalar {}

impl fmt::Debug for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadScalar({}, {}; D={})", self.x, self.y, self.d)
    }
}

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let root = if self.d.is_integer() && !self.d.is_negative() {
            format!("√{}", self.d)
        } else {
            format!("√({})", self.d)
        };
        match (self.x.is_zero(), self.y.is_zero()) {
            (_, true) => write!(f, "{}", self.x),
            (true, false) => write!(f, "{}{}", self.y, root),
            (false, false) if self.y.is_negative() => {
                write!(f, "{} - {}{}", self.x, -&self.y, root)
            }
            (false, false) => write!(f, "{} + {}{}", self.x, self.y, root),
        }
    }
}

impl Ring for QuadScalar {
    fn zero_like(&self) -> Self {
        Self::from_rat(BigRat::zero(), &self.d)
    }
    fn one_like(&self) -> Self {
        Self::from_rat(BigRat::one(), &self.d)
    }
    fn is_zero_elem(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.check(rhs);
        Self::new(self.x.add_ref(&rhs.x), self.y.add_ref(&rhs.y), &self.d)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.check(rhs);
        Self::new(self.x.sub_ref(&rhs.x), self.y.sub_ref(&rhs.y), &self.d)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.check(rhs);
        if self.y.is_zero() && rhs.y.is_zero() {
            return Self::from_rat(self.x.mul_ref(&rhs.x), &self.d);
        }
        let x = self.x.mul_ref(&rhs.x).add_ref(&self.d.mul_ref(&self.y.mul_ref(&rhs.y)));
        let y = self.x.mul_ref(&rhs.y).add_ref(&rhs.x.mul_ref(&self.y));
        Self::new(x, y, &self.d)
    }
    fn neg_ref(&self) -> Self {
        Self::new(-&self.x, -&self.y, &self.d)
    }
}

impl Field for QuadScalar {
    fn inv(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::new(&self.x / &n, -&self.y / &n, &self.d))
    }
}

impl Scale<QuadScalar> for QuadScalar {
    fn scale(&self, s: &QuadScalar) -> Self {
        self.mul_ref(s)
    }
}

impl Scale<BigRat> for QuadScalar {
    fn scale(&self, s: &BigRat) -> Self {
        Self::new(self.x.mul_ref(s), self.y.mul_ref(s), &self.d)
    }
}

impl Conjugate for QuadScalar {
    /// Octonion conjugation leaves coefficients alone; see [`QuadScalar::galois_conj`]
    /// for the field automorphism.
    fn conj(&self) -> Self {
        self.clone()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr for QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: QuadScalar) -> QuadScalar {
                self.$inner(&rhs)
            }
        }
        impl<'a> $tr<&'a QuadScalar> for &'a QuadScalar {
            type Output = QuadScalar;
            fn $method(self, rhs: &'a QuadScalar) -> QuadScalar {
                self.$inner(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> QuadScalar {
        self.neg_ref()
    }
}

/// Characteristic roots of `t² - p·t - q` and the Binet weights
/// `A = b - a·β`, `B = b - a·α`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootPair {
    pub alpha: QuadScalar,
    pub beta: QuadScalar,
    pub a_weight: QuadScalar,
    pub b_weight: QuadScalar,
}

impl RootPair {
    pub fn discriminant(&self) -> &Arc<BigRat> {
        self.alpha.discriminant_arc()
    }

    /// `α - β = ω`.
    pub fn delta(&self) -> QuadScalar {
        self.alpha.sub_ref(&self.beta)
    }
}

/// `α, β = (p ± ω)/2` with `ω² = p² + 4q`.
pub fn roots(params: &HoradamParams) -> Result<RootPair> {
    let d = params.discriminant();
    if d.is_zero() {
        return Err(Error::DegenerateDiscriminant);
    }
    let d = Arc::new(d);
    let half = ratio(1, 2);
    let p_half = &params.p * &half;
    let alpha = QuadScalar::new(p_half.clone(), half.clone(), &d);
    let beta = QuadScalar::new(p_half, -half, &d);
    let a = QuadScalar::from_rat(params.a.clone(), &d);
    let b = QuadScalar::from_rat(params.b.clone(), &d);
    let a_weight = b.sub_ref(&a.mul_ref(&beta));
    let b_weight = b.sub_ref(&a.mul_ref(&alpha));
    Ok(RootPair {
        alpha,
        beta,
        a_weight,
        b_weight,
    })
}
