//! Dual numbers `re + du·ε`, `ε² = 0`, over an arbitrary algebra.

use std::fmt;

use crate::ring::{Conjugate, Ring, Scale};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DualElem<A> {
    pub re: A,
    pub du: A,
}

impl<A> DualElem<A> {
    pub fn new(re: A, du: A) -> Self {
        DualElem { re, du }
    }

    pub fn map<B>(&self, mut f: impl FnMut(&A) -> B) -> DualElem<B> {
        DualElem {
            re: f(&self.re),
            du: f(&self.du),
        }
    }

    pub fn try_map<B, E>(&self, mut f: impl FnMut(&A) -> Result<B, E>) -> Result<DualElem<B>, E> {
        Ok(DualElem {
            re: f(&self.re)?,
            du: f(&self.du)?,
        })
    }
}

impl<A: Ring> DualElem<A> {
    /// `x + 0ε`.
    pub fn real(x: A) -> Self {
        let du = x.zero_like();
        DualElem { re: x, du }
    }

    /// The dual unit `ε = 0 + 1ε`, with `like` fixing the algebra.
    pub fn epsilon(like: &A) -> Self {
        DualElem {
            re: like.zero_like(),
            du: like.one_like(),
        }
    }
}

impl<A: Ring> Ring for DualElem<A> {
    fn zero_like(&self) -> Self {
        DualElem::new(self.re.zero_like(), self.re.zero_like())
    }
    fn one_like(&self) -> Self {
        DualElem::new(self.re.one_like(), self.re.zero_like())
    }
    fn is_zero_elem(&self) -> bool {
        self.re.is_zero_elem() && self.du.is_zero_elem()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        DualElem::new(self.re.add_ref(&rhs.re), self.du.add_ref(&rhs.du))
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        DualElem::new(self.re.sub_ref(&rhs.re), self.du.sub_ref(&rhs.du))
    }
    /// `(p, q)(r, s) = (pr, ps + qr)`, operand order preserved.
    fn mul_ref(&self, rhs: &Self) -> Self {
        DualElem::new(
            self.re.mul_ref(&rhs.re),
            self.re.mul_ref(&rhs.du).add_ref(&self.du.mul_ref(&rhs.re)),
        )
    }
    fn neg_ref(&self) -> Self {
        DualElem::new(self.re.neg_ref(), self.du.neg_ref())
    }
}

impl<A: Conjugate> Conjugate for DualElem<A> {
    fn conj(&self) -> Self {
        DualElem::new(self.re.conj(), self.du.conj())
    }
}

impl<S, A: Scale<S>> Scale<S> for DualElem<A> {
    fn scale(&self, s: &S) -> Self {
        DualElem::new(self.re.scale(s), self.du.scale(s))
    }
}

impl<A: Ring + Conjugate> DualElem<A> {
    /// `x · conj(x) = (re∘conj(re), re∘conj(du) + du∘conj(re))`.
    pub fn norm(&self) -> Self {
        self.mul_ref(&self.conj())
    }

    /// `conj(x) · x`.
    pub fn norm_right(&self) -> Self {
        self.conj().mul_ref(self)
    }
}

impl<R: Ring> DualElem<crate::Octonion<R>> {
    /// The dual norm with both parts reduced to their `e_0` coefficients.
    ///
    /// Panics if either part has an imaginary component.
    pub fn scalar_norm(&self) -> DualElem<R> {
        let n = self.norm();
        assert!(n.re.is_real() && n.du.is_real(), "dual octonion norm is not real");
        n.map(|o| o.c[0].clone())
    }
}

impl<A: fmt::Display + Ring> fmt::Display for DualElem<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}ε", self.re, self.du)
    }
}

impl<A: fmt::Debug> fmt::Debug for DualElem<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?}ε)", self.re, self.du)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, BigRat};
    use crate::Octonion;

    fn e(i: usize) -> Octonion<BigRat> {
        Octonion::basis(i, &rat(0))
    }

    #[test]
    fn epsilon_squares_to_zero() {
        let eps = DualElem::epsilon(&rat(0));
        assert!(!eps.is_zero_elem());
        assert!(eps.mul_ref(&eps).is_zero_elem());
    }

    #[test]
    fn cross_terms_cancel() {
        let x = DualElem::new(rat(1), rat(1));
        let y = DualElem::new(rat(1), rat(-1));
        assert_eq!(x.mul_ref(&y), DualElem::real(rat(1)));
    }

    #[test]
    fn pure_dual_products_vanish() {
        let x = DualElem::new(e(0).zero_like(), e(1));
        let y = DualElem::new(e(0).zero_like(), e(2));
        assert!(x.mul_ref(&y).is_zero_elem());
    }

    #[test]
    fn conjugates() {
        let eps = DualElem::epsilon(&e(0));
        assert_eq!(eps.conj(), eps);
        let x = DualElem::new(e(1), e(2));
        assert_eq!(x.conj(), DualElem::new(e(1).neg_ref(), e(2).neg_ref()));
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn degenerate_norm() {
        let one_eps = DualElem::epsilon(&e(0));
        assert!(one_eps.norm().is_zero_elem());
        assert_eq!(DualElem::real(e(0)).scalar_norm(), DualElem::new(rat(1), rat(0)));
    }

    #[test]
    fn norm_of_first_fibonacci_dual_octonion() {
        let x = DualElem::new(
            Octonion::from_ints([0, 1, 1, 2, 3, 5, 8, 13]),
            Octonion::from_ints([1, 1, 2, 3, 5, 8, 13, 21]),
        );
        assert_eq!(x.scalar_norm(), DualElem::new(rat(273), rat(882)));
        assert_eq!(x.norm(), x.norm_right());
    }

    #[test]
    fn display() {
        assert_eq!(DualElem::new(rat(273), rat(882)).to_string(), "273 + 882ε");
    }
}
