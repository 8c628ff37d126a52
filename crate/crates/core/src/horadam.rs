//! The scalar Horadam sequence `w_n = p·w_{n-1} + q·w_{n-2}`, `w_0 = a`,
//! `w_1 = b`, and its classical closed forms.
//!
//! The iterated recurrence is the reference. Closed forms evaluated here are
//! returned exactly as written, including the printed Cassini and summation
//! right-hand sides whose sign conventions do not agree with the recurrence;
//! the `*_neg_q`, `*_corrected` and `*_neg_qw` variants are candidate
//! corrections kept alongside for comparison.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::{pow, Field, Ring, Scale};
use crate::scalar::{self, rat, BigRat, QuadScalar, RootPair};
use crate::series::TruncSeries;

/// The four defining scalars `(a, b; p, q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HoradamParams {
    pub a: BigRat,
    pub b: BigRat,
    pub p: BigRat,
    pub q: BigRat,
}

impl HoradamParams {
    pub fn new(a: BigRat, b: BigRat, p: BigRat, q: BigRat) -> Self {
        HoradamParams { a, b, p, q }
    }

    pub fn from_ints(a: i64, b: i64, p: i64, q: i64) -> Self {
        Self::new(rat(a), rat(b), rat(p), rat(q))
    }

    pub fn fibonacci() -> Self {
        Self::from_ints(0, 1, 1, 1)
    }

    pub fn lucas() -> Self {
        Self::from_ints(2, 1, 1, 1)
    }

    pub fn pell() -> Self {
        Self::from_ints(0, 1, 2, 1)
    }

    pub fn named(name: &str) -> Result<Self> {
        match name {
            "fibonacci" => Ok(Self::fibonacci()),
            "lucas" => Ok(Self::lucas()),
            "pell" => Ok(Self::pell()),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }

    /// `D = p² + 4q`.
    pub fn discriminant(&self) -> BigRat {
        &self.p * &self.p + rat(4) * &self.q
    }

    /// `1 - p - q`, the denominator of the summation formula.
    pub fn unit_root_gap(&self) -> BigRat {
        BigRat::one() - &self.p - &self.q
    }

    pub fn is_fibonacci(&self) -> bool {
        *self == Self::fibonacci()
    }

    pub fn roots(&self) -> Result<RootPair> {
        scalar::roots(self)
    }

    /// `"a,b,p,q"` in canonical rational form.
    pub fn key(&self) -> String {
        [&self.a, &self.b, &self.p, &self.q].map(scalar::fmt_rat).join(",")
    }
}

impl fmt::Display for HoradamParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}; {}, {})", self.a, self.b, self.p, self.q)
    }
}

/// Consecutive terms `w_start, w_{start+1}, ...`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeqWindow {
    pub start: u64,
    pub values: Vec<BigRat>,
}

impl SeqWindow {
    pub fn satisfies_recurrence(&self, params: &HoradamParams) -> bool {
        self.values
            .windows(3)
            .all(|w| w[2] == &params.p * &w[1] + &params.q * &w[0])
    }
}

/// Memoized iteration of the recurrence for one parameter set.
#[derive(Clone, Debug)]
pub struct Sequence {
    params: HoradamParams,
    values: Vec<BigRat>,
}

impl Sequence {
    pub fn new(params: &HoradamParams) -> Self {
        Sequence {
            params: params.clone(),
            values: vec![params.a.clone(), params.b.clone()],
        }
    }

    pub fn params(&self) -> &HoradamParams {
        &self.params
    }

    fn extend_to(&mut self, n: usize) {
        while self.values.len() <= n {
            let k = self.values.len();
            let next = &self.params.p * &self.values[k - 1] + &self.params.q * &self.values[k - 2];
            self.values.push(next);
        }
    }

    pub fn w(&mut self, n: u64) -> BigRat {
        self.extend_to(n as usize);
        self.values[n as usize].clone()
    }

    pub fn window(&mut self, start: u64, len: usize) -> SeqWindow {
        let s = start as usize;
        self.extend_to(s + len);
        SeqWindow {
            start,
            values: self.values[s..s + len].to_vec(),
        }
    }

    /// `Σ_{i=0}^{n} w_i` by direct summation.
    pub fn partial_sum(&mut self, n: u64) -> BigRat {
        self.extend_to(n as usize);
        self.values[..=n as usize].iter().fold(BigRat::zero(), |acc, x| acc + x)
    }
}

/// `w_n` by iterating the recurrence from `(a, b)`.
pub fn w(params: &HoradamParams, n: u64) -> BigRat {
    Sequence::new(params).w(n)
}

/// `(A αⁿ - B βⁿ) / (α - β)`, reduced to a rational.
pub fn binet_w(params: &HoradamParams, n: u64) -> Result<BigRat> {
    binet_w_with(&params.roots()?, n)
}

pub fn binet_w_with(roots: &RootPair, n: u64) -> Result<BigRat> {
    binet_quad(roots, n)?.to_rational()
}

fn binet_quad(roots: &RootPair, n: u64) -> Result<QuadScalar> {
    let num = roots
        .a_weight
        .mul_ref(&roots.alpha.pow(n))
        .sub_ref(&roots.b_weight.mul_ref(&roots.beta.pow(n)));
    Ok(num.mul_ref(&roots.delta().inv()?))
}

/// `1 - p t - q t²` truncated to `order`.
pub fn characteristic_series(params: &HoradamParams, order: usize) -> TruncSeries<BigRat> {
    TruncSeries::new(vec![BigRat::one(), -&params.p, -&params.q], order)
}

/// `(w_0 + (w_1 - p w_0) t) / (1 - p t - q t²)` expanded to `order` terms.
pub fn gen_series_scalar(params: &HoradamParams, order: usize) -> TruncSeries<BigRat> {
    let num = TruncSeries::new(vec![params.a.clone(), &params.b - &params.p * &params.a], order);
    num.div_scalar_series(&characteristic_series(params, order))
        .expect("1 - pt - qt² has unit constant term")
}

/// Generic helper used by the octonion-valued generating function too:
/// `(x_0 + (x_1 - p x_0) t) / (1 - p t - q t²)`.
pub fn gen_series_from_seeds<R: Ring + Scale<BigRat>>(
    params: &HoradamParams,
    x0: &R,
    x1: &R,
    order: usize,
) -> TruncSeries<R> {
    let lin = x1.sub_ref(&x0.scale(&params.p));
    let num = TruncSeries::new(vec![x0.clone(), lin], order);
    num.div_scalar_series(&characteristic_series(params, order))
        .expect("1 - pt - qt² has unit constant term")
}

/// `w_{n+1} w_{n-1} - w_n²` from the recurrence. Requires `n ≥ 1`.
pub fn cassini_scalar_lhs(seq: &mut Sequence, n: u64) -> BigRat {
    assert!(n >= 1, "Cassini needs n >= 1");
    let wn = seq.w(n);
    seq.w(n + 1) * seq.w(n - 1) - &wn * &wn
}

fn cassini_bracket(params: &HoradamParams, w0_sq_sign: i64) -> BigRat {
    let (a, b, p, q) = (&params.a, &params.b, &params.p, &params.q);
    p * a * b - b * b + rat(w0_sq_sign) * a * a * q
}

/// `q^{n-1} (p w_0 w_1 - w_1² - w_0² q)`, as printed.
pub fn cassini_scalar_rhs_paper(params: &HoradamParams, n: u64) -> BigRat {
    pow(&params.q, n - 1) * cassini_bracket(params, -1)
}

/// Printed bracket with the power base changed to `-q`.
pub fn cassini_scalar_rhs_neg_q(params: &HoradamParams, n: u64) -> BigRat {
    pow(&-&params.q, n - 1) * cassini_bracket(params, -1)
}

/// `(-q)^{n-1} (p w_0 w_1 - w_1² + w_0² q)`, i.e. `(-q)^{n-1}(w_2 w_0 - w_1²)`.
pub fn cassini_scalar_rhs_corrected(params: &HoradamParams, n: u64) -> BigRat {
    pow(&-&params.q, n - 1) * cassini_bracket(params, 1)
}

pub fn sum_scalar_lhs(seq: &mut Sequence, n: u64) -> BigRat {
    seq.partial_sum(n)
}

fn sum_closed(seq: &mut Sequence, n: u64, qw_sign: i64) -> Result<BigRat> {
    let params = seq.params().clone();
    let gap = params.unit_root_gap();
    if gap.is_zero() {
        return Err(Error::UnitRootDenominator);
    }
    let num = &params.b - &params.a * (&params.p - BigRat::one()) + rat(qw_sign) * &params.q * seq.w(n) - seq.w(n + 1);
    Ok(num / gap)
}

/// `(w_1 - w_0 (p - 1) + q w_n - w_{n+1}) / (1 - p - q)`, as printed.
pub fn sum_scalar_rhs_paper(seq: &mut Sequence, n: u64) -> Result<BigRat> {
    sum_closed(seq, n, 1)
}

/// Printed form with `+ q w_n` replaced by `- q w_n`.
pub fn sum_scalar_rhs_neg_qw(seq: &mut Sequence, n: u64) -> Result<BigRat> {
    sum_closed(seq, n, -1)
}
