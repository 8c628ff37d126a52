//! Truncated formal power series `Σ_{k<N} c_k t^k`.

use crate::error::{Error, Result};
use crate::ring::{Field, Ring, Scale};

/// Default truncation order for generating-function checks.
pub const DEFAULT_ORDER: usize = 32;

#[derive(Clone, Debug, PartialEq)]
pub struct TruncSeries<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncSeries<R> {
    /// Builds a series of order `order`, padding `coeffs` with zeros or
    /// truncating it. `coeffs` must be non-empty so the ring is known.
    pub fn new(mut coeffs: Vec<R>, order: usize) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least one coefficient");
        assert!(order >= 1, "series order must be at least 1");
        let zero = coeffs[0].zero_like();
        coeffs.resize(order, zero);
        TruncSeries { coeffs }
    }

    /// `c·t^k` truncated to `order`.
    pub fn monomial(c: R, k: usize, order: usize) -> Self {
        let mut coeffs = vec![c.zero_like(); order.max(1)];
        if k < order {
            coeffs[k] = c;
        }
        Self::new(coeffs, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Option<&R> {
        self.coeffs.get(k)
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..order.min(self.order())].to_vec(), order)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.same_order(rhs.order())?;
        Ok(TruncSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(x, y)| x.add_ref(y)).collect(),
        })
    }

    /// Cauchy product truncated to the common order.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.same_order(rhs.order())?;
        Ok(self.convolve(rhs, |x, y| x.mul_ref(y)))
    }

    /// Product with a series over the coefficient ring `S`.
    pub fn mul_scalar_series<S: Ring>(&self, rhs: &TruncSeries<S>) -> Result<Self>
    where
        R: Scale<S>,
    {
        self.same_order(rhs.order())?;
        Ok(self.convolve(rhs, |x, s| x.scale(s)))
    }

    /// `h` with `h·g = f` to order `N`, solving for one coefficient at a time:
    /// `h_k = g_0⁻¹ (f_k - Σ_{j=1}^{k} g_j h_{k-j})`.
    pub fn div_scalar_series<S: Field>(&self, g: &TruncSeries<S>) -> Result<Self>
    where
        R: Scale<S>,
    {
        self.same_order(g.order())?;
        let g0_inv = g.coeffs[0].inv().map_err(|_| Error::NonUnitConstantTerm)?;
        let mut h: Vec<R> = Vec::with_capacity(self.order());
        for k in 0..self.order() {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                if g.coeffs[j].is_zero_elem() {
                    continue;
                }
                acc = acc.sub_ref(&h[k - j].scale(&g.coeffs[j]));
            }
            h.push(acc.scale(&g0_inv));
        }
        Ok(TruncSeries { coeffs: h })
    }

    fn convolve<S>(&self, rhs: &TruncSeries<S>, mul: impl Fn(&R, &S) -> R) -> Self {
        let n = self.order();
        let coeffs = (0..n)
            .map(|k| {
                (0..=k).fold(self.coeffs[0].zero_like(), |acc, i| {
                    acc.add_ref(&mul(&self.coeffs[i], &rhs.coeffs[k - i]))
                })
            })
            .collect();
        TruncSeries { coeffs }
    }

    fn same_order(&self, other: usize) -> Result<()> {
        if self.order() == other {
            Ok(())
        } else {
            Err(Error::OrderMismatch(self.order(), other))
        }
    }
}

impl<R: Field> TruncSeries<R> {
    pub fn div(&self, g: &Self) -> Result<Self>
    where
        R: Scale<R>,
    {
        self.div_scalar_series(g)
    }
}
