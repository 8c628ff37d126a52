//! Horadam octonions `OG_n = Σ w_{n+i} e_i` and dual Horadam octonions
//! `ÔG_n = OG_n + OG_{n+1} ε`, with their closed forms.
//!
//! Direct constructions ([`og`], [`dog`] and the `*_lhs` functions) are the
//! reference values. Closed forms are evaluated in `Q(ω)` and reduced to
//! rationals only after every `ω` component has been checked to vanish.
//! Non-commutative products keep the operand order in which the formulas are
//! written.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::dual::DualElem;
use crate::error::{Error, Result};
use crate::horadam::{gen_series_from_seeds, HoradamParams, Sequence};
use crate::octonion::Octonion;
use crate::ring::{pow, Field, Ring, Scale};
use crate::scalar::{rat, BigRat, QuadScalar, RootPair};
use crate::series::TruncSeries;

pub type RatOct = Octonion<BigRat>;
pub type QuadOct = Octonion<QuadScalar>;
pub type DualOct = DualElem<RatOct>;
pub type DualQuadOct = DualElem<QuadOct>;

/// `OG_n` together with its index.
#[derive(Clone, Debug, PartialEq)]
pub struct HoradamOctonion {
    pub n: u64,
    pub value: RatOct,
}

/// `ÔG_n` together with its index.
#[derive(Clone, Debug, PartialEq)]
pub struct DualHoradamOctonion {
    pub n: u64,
    pub value: DualOct,
}

pub fn og_from(seq: &mut Sequence, n: u64) -> RatOct {
    let w = seq.window(n, 8).values;
    Octonion::new(w.try_into().expect("window of eight"))
}

pub fn dog_from(seq: &mut Sequence, n: u64) -> DualOct {
    DualElem::new(og_from(seq, n), og_from(seq, n + 1))
}

pub fn og(params: &HoradamParams, n: u64) -> HoradamOctonion {
    HoradamOctonion {
        n,
        value: og_from(&mut Sequence::new(params), n),
    }
}

pub fn dog(params: &HoradamParams, n: u64) -> DualHoradamOctonion {
    DualHoradamOctonion {
        n,
        value: dog_from(&mut Sequence::new(params), n),
    }
}

/// `Σ_{i=0}^{n} ÔG_i` by direct summation.
pub fn sum_dog_lhs(seq: &mut Sequence, n: u64) -> DualOct {
    let mut acc = dog_from(seq, 0);
    for i in 1..=n {
        acc = acc.add_ref(&dog_from(seq, i));
    }
    acc
}

/// `ÔG_{n-1} ÔG_{n+1} - ÔG_n²`, requires `n ≥ 1`.
pub fn cassini_dog_lhs(seq: &mut Sequence, n: u64) -> DualOct {
    assert!(n >= 1, "Cassini needs n >= 1");
    let prev = dog_from(seq, n - 1);
    let next = dog_from(seq, n + 1);
    let cur = dog_from(seq, n);
    prev.mul_ref(&next).sub_ref(&cur.mul_ref(&cur))
}

/// `Nr(ÔG_n)` reduced to scalars `(Σ w_{n+i}², ...)`.
pub fn norm_dog_lhs(seq: &mut Sequence, n: u64) -> DualElem<BigRat> {
    dog_from(seq, n).scalar_norm()
}

/// `2 Σ_{i=0}^{7} w_{n+i} w_{n+1+i}`.
pub fn norm_dual_part_closed(seq: &mut Sequence, n: u64) -> BigRat {
    let w = seq.window(n, 9).values;
    let s = w.windows(2).fold(BigRat::zero(), |acc, pair| acc + &pair[0] * &pair[1]);
    s * rat(2)
}

/// Generating-function expansion `(ÔG_0 + (ÔG_1 - p ÔG_0) t) / (1 - p t - q t²)`.
pub fn gen_dog_series(params: &HoradamParams, order: usize) -> TruncSeries<DualOct> {
    let mut seq = Sequence::new(params);
    gen_series_from_seeds(params, &dog_from(&mut seq, 0), &dog_from(&mut seq, 1), order)
}

/// Which printed form of the Cassini real part `c₁` to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CassiniVariant {
    /// `β α̲β̲ - α β̲α̲`
    Theorem,
    /// `β β̲α̲ - α α̲β̲`
    Proof,
}

/// Leading term of the alternating sum inside `L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormLeadingTerm {
    /// The literal `a + (-q) + ... + (-q)⁷`.
    SeedA,
    /// `1 + (-q) + ... + (-q)⁷`.
    One,
}

/// Named intermediate quantities of the closed forms at one index.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ClosedFormIntermediates {
    pub k: Option<QuadOct>,
    pub l: Option<QuadScalar>,
    pub c1: Option<QuadOct>,
    pub c2: Option<QuadOct>,
    pub d1: Option<QuadOct>,
    pub d2: Option<QuadOct>,
    pub e1: Option<QuadScalar>,
    pub e2: Option<QuadScalar>,
}

/// Per-parameter data shared by every closed form: roots, `(α - β)⁻¹`,
/// `α̲`, `β̲` and their two products.
#[derive(Clone, Debug)]
pub struct ClosedForms {
    params: HoradamParams,
    roots: RootPair,
    delta_inv: QuadScalar,
    under_alpha: QuadOct,
    under_beta: QuadOct,
    ab: QuadOct,
    ba: QuadOct,
    /// `A²(α - 1)² α̲² / (α - β)²` and its `β` counterpart.
    c2_sq: (QuadOct, QuadOct),
    /// `α̲β̲ (β² + αβ³ - αβ² - α²β) + β̲α̲ (α² + α³β - α²β - αβ²)`.
    c2_cross: QuadOct,
    /// `(1 - α)⁻¹` and `(1 - β)⁻¹`.
    unit_inv: Result<(QuadScalar, QuadScalar)>,
    og0: QuadOct,
    /// `A² Σ α²ⁱ / (α - β)²` and its `β` counterpart, `i = 0..7`.
    norm_even: (QuadScalar, QuadScalar),
}

impl ClosedForms {
    pub fn new(params: &HoradamParams) -> Result<Self> {
        let roots = params.roots()?;
        let delta_inv = roots.delta().inv()?;
        let under_alpha = Octonion::underline(&roots.alpha);
        let under_beta = Octonion::underline(&roots.beta);
        let ab = under_alpha.mul_ref(&under_beta);
        let ba = under_beta.mul_ref(&under_alpha);

        let (al, be) = (&roots.alpha, &roots.beta);
        let one = al.one_like();
        let delta_inv_sq = delta_inv.mul_ref(&delta_inv);
        let sq = |u: &QuadOct, w: &QuadScalar, r: &QuadScalar| {
            let rm1 = r.sub_ref(&one);
            u.mul_ref(u)
                .scale(&w.mul_ref(w).mul_ref(&rm1.mul_ref(&rm1)).mul_ref(&delta_inv_sq))
        };
        let c2_sq = (
            sq(&under_alpha, &roots.a_weight, al),
            sq(&under_beta, &roots.b_weight, be),
        );
        let x = be
            .pow(2)
            .add_ref(&al.mul_ref(&be.pow(3)))
            .sub_ref(&al.mul_ref(&be.pow(2)))
            .sub_ref(&al.pow(2).mul_ref(be));
        let y = al
            .pow(2)
            .add_ref(&al.pow(3).mul_ref(be))
            .sub_ref(&al.pow(2).mul_ref(be))
            .sub_ref(&al.mul_ref(be).mul_ref(be));
        let c2_cross = ab.scale(&x).add_ref(&ba.scale(&y));

        let unit_inv = one
            .sub_ref(al)
            .inv()
            .and_then(|ia| Ok((ia, one.sub_ref(be).inv()?)))
            .map_err(|_| Error::UnitRootDenominator);
        let d = roots.discriminant().clone();
        let og0 = og_from(&mut Sequence::new(params), 0).lift(&d);
        let even = |w: &QuadScalar, r: &QuadScalar| {
            let r2 = r.mul_ref(r);
            let s = (0..8u64).fold(r.zero_like(), |acc, i| acc.add_ref(&r2.pow(i)));
            w.mul_ref(w).mul_ref(&s).mul_ref(&delta_inv_sq)
        };
        let norm_even = (even(&roots.a_weight, al), even(&roots.b_weight, be));
        Ok(ClosedForms {
            params: params.clone(),
            roots,
            delta_inv,
            under_alpha,
            under_beta,
            ab,
            ba,
            c2_sq,
            c2_cross,
            unit_inv,
            og0,
            norm_even,
        })
    }

    pub fn params(&self) -> &HoradamParams {
        &self.params
    }

    pub fn roots(&self) -> &RootPair {
        &self.roots
    }

    pub fn under_alpha(&self) -> &QuadOct {
        &self.under_alpha
    }

    pub fn under_beta(&self) -> &QuadOct {
        &self.under_beta
    }

    fn d(&self) -> &Arc<BigRat> {
        self.roots.discriminant()
    }

    fn lift(&self, x: &BigRat) -> QuadScalar {
        QuadScalar::from_rat(x.clone(), self.d())
    }

    /// `A α̲ α^k` and `B β̲ β^k`.
    fn weighted(&self, k: u64) -> (QuadOct, QuadOct) {
        let r = &self.roots;
        (
            self.under_alpha.scale(&r.a_weight.mul_ref(&r.alpha.pow(k))),
            self.under_beta.scale(&r.b_weight.mul_ref(&r.beta.pow(k))),
        )
    }

    /// `(A α̲ αⁿ - B β̲ βⁿ) / (α - β)` in `Q(ω)`.
    pub fn binet_og_quad(&self, n: u64) -> QuadOct {
        let (a, b) = self.weighted(n);
        a.sub_ref(&b).scale(&self.delta_inv)
    }

    /// `(A α̲ αⁿ (1 + α ε) - B β̲ βⁿ (1 + β ε)) / (α - β)` in `Q(ω)`.
    pub fn binet_dog_quad(&self, n: u64) -> DualQuadOct {
        let (a, b) = self.weighted(n);
        let a_term = DualElem::new(a.clone(), a.scale(&self.roots.alpha));
        let b_term = DualElem::new(b.clone(), b.scale(&self.roots.beta));
        a_term.sub_ref(&b_term).scale(&self.delta_inv)
    }

    pub fn binet_dog(&self, n: u64) -> Result<DualOct> {
        rationalize_dual(&self.binet_dog_quad(n))
    }

    /// `AB (αβ)^{n-1}`.
    fn cassini_prefactor(&self, n: u64) -> QuadScalar {
        let r = &self.roots;
        r.a_weight
            .mul_ref(&r.b_weight)
            .mul_ref(&r.alpha.mul_ref(&r.beta).pow(n - 1))
    }

    pub fn cassini_c1(&self, n: u64, variant: CassiniVariant) -> QuadOct {
        let r = &self.roots;
        let inner = match variant {
            CassiniVariant::Theorem => self.ab.scale(&r.beta).sub_ref(&self.ba.scale(&r.alpha)),
            CassiniVariant::Proof => self.ba.scale(&r.beta).sub_ref(&self.ab.scale(&r.alpha)),
        };
        inner.scale(&self.cassini_prefactor(n).mul_ref(&self.delta_inv))
    }

    /// The printed dual part `c₂`.
    pub fn cassini_c2(&self, n: u64) -> QuadOct {
        let r = &self.roots;
        let first = self
            .c2_sq
            .0
            .scale(&r.alpha.pow(2 * n))
            .add_ref(&self.c2_sq.1.scale(&r.beta.pow(2 * n)));
        first.sub_ref(&self.c2_cross.scale(&self.cassini_prefactor(n)))
    }

    /// `(c₁, c₂)` exactly as printed, with the chosen `c₁` variant.
    pub fn cassini_dog_rhs_paper(&self, n: u64, variant: CassiniVariant) -> Result<DualOct> {
        rationalize_dual(&DualElem::new(self.cassini_c1(n, variant), self.cassini_c2(n)))
    }

    /// Theorem `c₁` with dual part `p·c₁`, the value obtained by expanding
    /// `OG_{n-1} OG_{n+2} - OG_{n+1} OG_n` through the Binet form.
    pub fn cassini_dog_rhs_candidate(&self, n: u64) -> Result<DualOct> {
        let c1 = self.cassini_c1(n, CassiniVariant::Theorem);
        let c2 = c1.scale(&self.params.p);
        rationalize_dual(&DualElem::new(c1, c2))
    }

    fn unit_root_inverses(&self) -> Result<(QuadScalar, QuadScalar)> {
        self.unit_inv.clone()
    }

    /// `K = (A α̲ (1 - β) - B β̲ (1 - α)) / ((α - β)(1 - α)(1 - β))`.
    pub fn sum_k(&self) -> Result<QuadOct> {
        let (ia, ib) = self.unit_root_inverses()?;
        let r = &self.roots;
        let one = r.alpha.one_like();
        let num = self
            .under_alpha
            .scale(&r.a_weight.mul_ref(&one.sub_ref(&r.beta)))
            .sub_ref(&self.under_beta.scale(&r.b_weight.mul_ref(&one.sub_ref(&r.alpha))));
        Ok(num.scale(&self.delta_inv.mul_ref(&ia).mul_ref(&ib)))
    }

    /// `(B β̲ β^k / (1 - β) - A α̲ α^k / (1 - α)) / (α - β)`.
    fn sum_tail(&self, k: u64) -> Result<QuadOct> {
        let (ia, ib) = self.unit_root_inverses()?;
        let (a, b) = self.weighted(k);
        Ok(b.scale(&ib).sub_ref(&a.scale(&ia)).scale(&self.delta_inv))
    }

    pub fn sum_d1(&self, n: u64) -> Result<QuadOct> {
        Ok(self.sum_tail(n + 1)?.add_ref(&self.sum_k()?))
    }

    pub fn sum_d2(&self, n: u64) -> Result<QuadOct> {
        Ok(self.sum_tail(n + 2)?.sub_ref(&self.og0).add_ref(&self.sum_k()?))
    }

    pub fn sum_dog_rhs_paper(&self, n: u64) -> Result<DualOct> {
        rationalize_dual(&DualElem::new(self.sum_d1(n)?, self.sum_d2(n)?))
    }

    /// `L = 2AB(-q)ⁿ (lead + (-q) + ... + (-q)⁷) / (α - β)²`.
    pub fn norm_l(&self, n: u64, lead: NormLeadingTerm) -> QuadScalar {
        let r = &self.roots;
        let neg_q = -&self.params.q;
        let lead = match lead {
            NormLeadingTerm::SeedA => self.params.a.clone(),
            NormLeadingTerm::One => BigRat::one(),
        };
        let alt = (1..=7u64).fold(lead, |acc, i| acc + pow(&neg_q, i));
        let scalar = rat(2) * pow(&neg_q, n) * alt;
        r.a_weight
            .mul_ref(&r.b_weight)
            .scale(&scalar)
            .mul_ref(&self.delta_inv)
            .mul_ref(&self.delta_inv)
    }

    /// `(A²α²ⁿ Σ_{i=0}^{7} α²ⁱ + B²β²ⁿ Σ_{i=0}^{7} β²ⁱ) / (α - β)² - L`.
    pub fn norm_e1(&self, n: u64, lead: NormLeadingTerm) -> QuadScalar {
        let r = &self.roots;
        let a_part = self.norm_even.0.mul_ref(&r.alpha.pow(2 * n));
        let b_part = self.norm_even.1.mul_ref(&r.beta.pow(2 * n));
        a_part.add_ref(&b_part).sub_ref(&self.norm_l(n, lead))
    }

    pub fn norm_dog_rhs(&self, seq: &mut Sequence, n: u64, lead: NormLeadingTerm) -> Result<DualElem<BigRat>> {
        Ok(DualElem::new(
            self.norm_e1(n, lead).to_rational()?,
            norm_dual_part_closed(seq, n),
        ))
    }

    /// Every named intermediate at index `n`, leaving slots empty where a
    /// precondition fails (`n = 0` for Cassini, `p + q = 1` for the sum).
    pub fn intermediates(&self, n: u64) -> ClosedFormIntermediates {
        let mut seq = Sequence::new(&self.params);
        ClosedFormIntermediates {
            k: self.sum_k().ok(),
            l: Some(self.norm_l(n, NormLeadingTerm::SeedA)),
            c1: (n >= 1).then(|| self.cassini_c1(n, CassiniVariant::Theorem)),
            c2: (n >= 1).then(|| self.cassini_c2(n)),
            d1: self.sum_d1(n).ok(),
            d2: self.sum_d2(n).ok(),
            e1: Some(self.norm_e1(n, NormLeadingTerm::SeedA)),
            e2: Some(self.lift(&norm_dual_part_closed(&mut seq, n))),
        }
    }
}

pub fn rationalize_dual(x: &DualQuadOct) -> Result<DualOct> {
    x.try_map(QuadOct::to_rational)
}

pub fn binet_dog(params: &HoradamParams, n: u64) -> Result<DualOct> {
    ClosedForms::new(params)?.binet_dog(n)
}

pub fn cassini_dog_rhs_paper(params: &HoradamParams, n: u64, variant: CassiniVariant) -> Result<DualOct> {
    ClosedForms::new(params)?.cassini_dog_rhs_paper(n, variant)
}

pub fn sum_dog_rhs_paper(params: &HoradamParams, n: u64) -> Result<DualOct> {
    ClosedForms::new(params)?.sum_dog_rhs_paper(n)
}

pub fn norm_dog_rhs_paper(params: &HoradamParams, n: u64) -> Result<DualElem<BigRat>> {
    ClosedForms::new(params)?.norm_dog_rhs(&mut Sequence::new(params), n, NormLeadingTerm::SeedA)
}

/// Specializations quoted for the dual Fibonacci octonions `Ô_n`.
pub mod fibonacci {
    use super::*;

    fn seq() -> Sequence {
        Sequence::new(&HoradamParams::fibonacci())
    }

    pub fn f(n: u64) -> BigRat {
        seq().w(n)
    }

    /// `(α̲ αⁿ (1 + α ε) - β̲ βⁿ (1 + β ε)) / (α - β)` with the golden-ratio roots.
    pub fn binet(n: u64) -> Result<DualOct> {
        let roots = HoradamParams::fibonacci().roots()?;
        let ua = Octonion::underline(&roots.alpha).scale(&roots.alpha.pow(n));
        let ub = Octonion::underline(&roots.beta).scale(&roots.beta.pow(n));
        let a_term = DualElem::new(ua.clone(), ua.scale(&roots.alpha));
        let b_term = DualElem::new(ub.clone(), ub.scale(&roots.beta));
        rationalize_dual(&a_term.sub_ref(&b_term).scale(&roots.delta().inv()?))
    }

    /// `(Ô_0 + (Ô_1 - Ô_0) t) / (1 - t - t²)`.
    pub fn gen_series(order: usize) -> TruncSeries<DualOct> {
        let mut s = seq();
        let o0 = dog_from(&mut s, 0);
        let o1 = dog_from(&mut s, 1);
        let num = TruncSeries::new(vec![o0.clone(), o1.sub_ref(&o0)], order);
        let den = TruncSeries::new(vec![rat(1), rat(-1), rat(-1)], order);
        num.div_scalar_series(&den).expect("unit constant term")
    }

    fn sign(n: u64) -> BigRat {
        if n.is_multiple_of(2) {
            rat(1)
        } else {
            rat(-1)
        }
    }

    /// `(-1)ⁿ (Ô_1² - Ô_0² - Ô_1 Ô_0)`, as quoted.
    pub fn cassini_rhs(n: u64) -> DualOct {
        let mut s = seq();
        let (o0, o1) = (dog_from(&mut s, 0), dog_from(&mut s, 1));
        o1.mul_ref(&o1)
            .sub_ref(&o0.mul_ref(&o0))
            .sub_ref(&o1.mul_ref(&o0))
            .scale(&sign(n))
    }

    /// `(-1)ⁿ (Ô_1² - Ô_0² - Ô_0 Ô_1)`: the last product with its operands
    /// swapped, which is what `Ô_0 Ô_2 - Ô_1²` expands to.
    pub fn cassini_rhs_candidate(n: u64) -> DualOct {
        let mut s = seq();
        let (o0, o1) = (dog_from(&mut s, 0), dog_from(&mut s, 1));
        o1.mul_ref(&o1)
            .sub_ref(&o0.mul_ref(&o0))
            .sub_ref(&o0.mul_ref(&o1))
            .scale(&sign(n))
    }

    /// `Σ_{i=1}^{n} Ô_i` by direct summation.
    pub fn sum_lhs(n: u64) -> DualOct {
        let mut s = seq();
        let mut acc = dog_from(&mut s, 0).zero_like();
        for i in 1..=n {
            acc = acc.add_ref(&dog_from(&mut s, i));
        }
        acc
    }

    /// `Ô_2 F_{n+1} + Ô_1 F_{n-1} - Ô_2`, as quoted. Requires `n ≥ 1`.
    pub fn sum_rhs(n: u64) -> DualOct {
        sum_with(n, n - 1)
    }

    /// `Ô_2 F_{n+1} + Ô_1 F_n - Ô_2`.
    pub fn sum_rhs_candidate(n: u64) -> DualOct {
        sum_with(n, n)
    }

    fn sum_with(n: u64, second: u64) -> DualOct {
        let mut s = seq();
        let (o1, o2) = (dog_from(&mut s, 1), dog_from(&mut s, 2));
        o2.scale(&s.w(n + 1)).add_ref(&o1.scale(&s.w(second))).sub_ref(&o2)
    }

    /// `21 (F_{2n+7} + 2 F_{2n+8} ε)`.
    pub fn norm_rhs(n: u64) -> DualElem<BigRat> {
        let mut s = seq();
        DualElem::new(rat(21) * s.w(2 * n + 7), rat(42) * s.w(2 * n + 8))
    }
}
