//! Exact scalars, the x/y/X/Y polynomial ring, and the coefficient-ring
//! contract the series layer is written against.

mod poly;
mod rational;

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::One;

pub use poly::{Monomial, Point, PolyXY, Var};
pub use rational::Rational;

/// Coefficient domain for truncated series.
///
/// Implemented by [`Rational`] (numeric evaluation) and [`PolyXY`]
/// (symbolic coefficient tables); both paths share all series code.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn from_rational(q: &Rational) -> Self;
    /// Multiplicative inverse, if one exists in the ring.
    fn inverse(&self) -> Option<Self>;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }

    fn scaled(&self, q: &Rational) -> Self {
        self.times(&Self::from_rational(q))
    }

    fn power(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| acc.times(self))
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn inverse(&self) -> Option<Self> {
        self.recip()
    }
    fn scaled(&self, q: &Rational) -> Self {
        self * q
    }
    fn power(&self, exp: u32) -> Self {
        self.pow(exp as i32)
    }
}

impl Ring for PolyXY {
    fn zero() -> Self {
        PolyXY::zero()
    }
    fn one() -> Self {
        PolyXY::one()
    }
    fn is_zero(&self) -> bool {
        PolyXY::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn from_rational(q: &Rational) -> Self {
        PolyXY::constant(q.clone())
    }
    /// Only nonzero constants are units.
    fn inverse(&self) -> Option<Self> {
        self.as_constant()
            .and_then(|c| c.recip())
            .map(PolyXY::constant)
    }
    fn scaled(&self, q: &Rational) -> Self {
        self.scale(q)
    }
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // exact at every step: acc = C(n, i+1) after the division
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}
