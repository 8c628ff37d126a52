//! Octonions over an arbitrary exact ring.
//!
//! The multiplication table is generated from seven oriented index triples
//! `(i, j, k)`, each read as a 3-cycle: `e_i e_j = e_k`, `e_j e_k = e_i`,
//! `e_k e_i = e_j`, with the reversed products negated. A freshly built
//! table is certified by checking norm multiplicativity on random rational
//! octonions before it is accepted.

use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ring::{self, Conjugate, Ring, Scale};
use crate::scalar::{ratio, BigRat, QuadScalar};

/// The seven oriented triples used throughout this crate.
pub const STANDARD_TRIPLES: [[usize; 3]; 7] = [
    [1, 2, 3],
    [1, 4, 5],
    [1, 7, 6],
    [2, 4, 6],
    [2, 5, 7],
    [3, 4, 7],
    [3, 6, 5],
];

const SELF_TEST_SAMPLES: usize = 100;
const SELF_TEST_SEED: u64 = 0x0c70_4e10;

/// `e_i ∘ e_j = sign[i][j] · e_{index[i][j]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MulTable {
    pub sign: [[i8; 8]; 8],
    pub index: [[usize; 8]; 8],
}

impl MulTable {
    /// Builds and certifies a table from seven oriented triples.
    pub fn build(triples: &[[usize; 3]]) -> Result<Self> {
        if triples.len() != 7 {
            return Err(Error::InvalidTable(format!(
                "expected 7 triples, got {}",
                triples.len()
            )));
        }
        let mut sign = [[0i8; 8]; 8];
        let mut index = [[0usize; 8]; 8];
        for i in 0..8 {
            sign[0][i] = 1;
            index[0][i] = i;
            sign[i][0] = 1;
            index[i][0] = i;
        }
        for i in 1..8 {
            sign[i][i] = -1;
            index[i][i] = 0;
        }
        for &[i, j, k] in triples {
            if [i, j, k].iter().any(|&x| x == 0 || x > 7) || i == j || j == k || i == k {
                return Err(Error::InvalidTable(format!("bad triple ({i}, {j}, {k})")));
            }
            for (x, y, z) in [(i, j, k), (j, k, i), (k, i, j)] {
                if sign[x][y] != 0 {
                    return Err(Error::InvalidTable(format!("pair ({x}, {y}) appears twice")));
                }
                sign[x][y] = 1;
                index[x][y] = z;
                sign[y][x] = -1;
                index[y][x] = z;
            }
        }
        if let Some((i, j)) = (1..8)
            .flat_map(|i| (1..8).map(move |j| (i, j)))
            .find(|&(i, j)| sign[i][j] == 0)
        {
            return Err(Error::InvalidTable(format!("pair ({i}, {j}) is not covered")));
        }
        let table = MulTable { sign, index };
        table.self_test()?;
        Ok(table)
    }

    /// The certified table for [`STANDARD_TRIPLES`], built once.
    pub fn standard() -> &'static MulTable {
        static TABLE: OnceLock<MulTable> = OnceLock::new();
        TABLE.get_or_init(|| MulTable::build(&STANDARD_TRIPLES).expect("standard table certifies"))
    }

    fn self_test(&self) -> Result<()> {
        let mut rng = ChaCha8Rng::seed_from_u64(SELF_TEST_SEED);
        for _ in 0..SELF_TEST_SAMPLES {
            let x = random_rational(&mut rng);
            let y = random_rational(&mut rng);
            let xy = x.mul_with(&y, self);
            if xy.sum_of_squares() != x.sum_of_squares() * y.sum_of_squares() {
                return Err(Error::InvalidTable("norm is not multiplicative".into()));
            }
        }
        Ok(())
    }
}

/// Small random rational octonion, used by the table self-test and tests.
pub fn random_rational<G: rand::Rng>(rng: &mut G) -> Octonion<BigRat> {
    Octonion::new(std::array::from_fn(|_| {
        ratio(rng.gen_range(-9..=9), rng.gen_range(1..=4))
    }))
}

/// `c[0] e_0 + c[1] e_1 + ... + c[7] e_7`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Octonion<R> {
    pub c: [R; 8],
}

impl<R> Octonion<R> {
    pub fn new(c: [R; 8]) -> Self {
        Octonion { c }
    }

    pub fn map<S>(&self, f: impl FnMut(&R) -> S) -> Octonion<S> {
        Octonion {
            c: self.c.each_ref().map(f),
        }
    }

    pub fn try_map<S, E>(
        &self,
        mut f: impl FnMut(&R) -> std::result::Result<S, E>,
    ) -> std::result::Result<Octonion<S>, E> {
        let mut out = Vec::with_capacity(8);
        for x in &self.c {
            out.push(f(x)?);
        }
        Ok(Octonion {
            c: out.try_into().ok().expect("eight coefficients"),
        })
    }

    pub fn real(&self) -> &R {
        &self.c[0]
    }
}

impl<R: Ring> Octonion<R> {
    pub fn zero(like: &R) -> Self {
        Octonion::new(std::array::from_fn(|_| like.zero_like()))
    }

    /// `s · e_0`.
    pub fn scalar(s: R) -> Self {
        let mut o = Self::zero(&s);
        o.c[0] = s;
        o
    }

    /// The basis unit `e_i`, with coefficients in the ring of `like`.
    pub fn basis(i: usize, like: &R) -> Self {
        let mut o = Self::zero(like);
        o.c[i] = like.one_like();
        o
    }

    pub fn mul_with(&self, rhs: &Self, table: &MulTable) -> Self {
        let mut out = Self::zero(&self.c[0]);
        for i in 0..8 {
            if self.c[i].is_zero_elem() {
                continue;
            }
            for j in 0..8 {
                if rhs.c[j].is_zero_elem() {
                    continue;
                }
                let prod = self.c[i].mul_ref(&rhs.c[j]);
                let k = table.index[i][j];
                out.c[k] = if table.sign[i][j] > 0 {
                    out.c[k].add_ref(&prod)
                } else {
                    out.c[k].sub_ref(&prod)
                };
            }
        }
        out
    }

    /// `Σ c_i²`.
    pub fn sum_of_squares(&self) -> R {
        self.c
            .iter()
            .fold(self.c[0].zero_like(), |acc, x| acc.add_ref(&x.mul_ref(x)))
    }

    /// `x ∘ conj(x)` reduced to its `e_0` coefficient.
    ///
    /// Panics if the product has a nonzero imaginary part, which would mean
    /// the table is not a composition algebra.
    pub fn norm(&self) -> R {
        let full = self.mul_ref(&self.conj());
        assert!(
            full.c[1..].iter().all(Ring::is_zero_elem),
            "x∘conj(x) has a nonzero imaginary part"
        );
        full.c[0].clone()
    }

    pub fn is_real(&self) -> bool {
        self.c[1..].iter().all(Ring::is_zero_elem)
    }
}

impl<R: Ring> Ring for Octonion<R> {
    fn zero_like(&self) -> Self {
        Self::zero(&self.c[0])
    }
    fn one_like(&self) -> Self {
        Self::scalar(self.c[0].one_like())
    }
    fn is_zero_elem(&self) -> bool {
        self.c.iter().all(Ring::is_zero_elem)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        Octonion::new(std::array::from_fn(|i| self.c[i].add_ref(&rhs.c[i])))
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        Octonion::new(std::array::from_fn(|i| self.c[i].sub_ref(&rhs.c[i])))
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul_with(rhs, MulTable::standard())
    }
    fn neg_ref(&self) -> Self {
        self.map(Ring::neg_ref)
    }
}

impl<R: Ring> Conjugate for Octonion<R> {
    fn conj(&self) -> Self {
        let mut out = self.map(Ring::neg_ref);
        out.c[0] = self.c[0].clone();
        out
    }
}

impl<S, R: Scale<S>> Scale<S> for Octonion<R> {
    fn scale(&self, s: &S) -> Self {
        self.map(|x| x.scale(s))
    }
}

impl Octonion<QuadScalar> {
    /// `1 e_0 + s e_1 + s² e_2 + ... + s⁷ e_7`.
    pub fn underline(s: &QuadScalar) -> Self {
        let mut c = Vec::with_capacity(8);
        let mut acc = s.one_like();
        for _ in 0..8 {
            c.push(acc.clone());
            acc = acc.mul_ref(s);
        }
        Octonion {
            c: c.try_into().expect("eight powers"),
        }
    }

    pub fn to_rational(&self) -> Result<Octonion<BigRat>> {
        self.try_map(QuadScalar::to_rational)
    }

    pub fn is_rational(&self) -> bool {
        self.c.iter().all(QuadScalar::is_rational)
    }
}

impl Octonion<BigRat> {
    pub fn from_ints(c: [i64; 8]) -> Self {
        Octonion::new(c.map(crate::scalar::rat))
    }

    pub fn lift(&self, d: &std::sync::Arc<BigRat>) -> Octonion<QuadScalar> {
        self.map(|x| QuadScalar::from_rat(x.clone(), d))
    }

    /// Coefficientwise `e_0`-only test against a rational constant.
    pub fn is_scalar(&self, s: &BigRat) -> bool {
        self.c[0] == *s && self.c[1..].iter().all(Zero::is_zero)
    }
}

impl<R: fmt::Display> fmt::Display for Octonion<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.c.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl<R: fmt::Debug> fmt::Debug for Octonion<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.c.iter()).finish()
    }
}

/// `x^n` for a single octonion (power-associative, so unambiguous).
pub fn oct_pow<R: Ring>(x: &Octonion<R>, n: u64) -> Octonion<R> {
    ring::pow(x, n)
}
