//! Truncated formal power series in `t`.
//!
//! A `Series<R>` of order `N` stores the coefficients of `t^0..=t^N` and is
//! exact modulo `t^(N+1)`. Binary operations require equal orders; callers
//! [`truncate`](Series::truncate) first.

use crate::algebra::{factorial, Rational, Ring};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Debug)]
pub struct Series<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Series<R> {
    /// Series from explicit coefficients; the order is `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series holds at least the constant term"
        );
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![R::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c * t^power`, which is the zero series if `power > order`.
    pub fn monomial(c: R, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Result<&R> {
        self.coeffs.get(k).ok_or(Error::IndexOutOfRange {
            index: k,
            order: self.order(),
        })
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Smallest `k` with a nonzero coefficient; `None` if every stored
    /// coefficient vanishes.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Drops or zero-pads coefficients to reach `order`.
    ///
    /// Padding with zeros is only sound when the caller knows the tail
    /// vanishes (polynomials, monomials); raising the order of a genuinely
    /// truncated series is a logic error the type cannot detect.
    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs: Vec<R> = self.coeffs.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, R::zero());
        Series { coeffs }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.plus(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.minus(b))
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(R::negated).collect(),
        }
    }

    /// Multiplies every coefficient by the ring element `c`.
    pub fn mul_scalar(&self, c: &R) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a.times(c)).collect(),
        }
    }

    pub fn mul_rational(&self, q: &Rational) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a.scaled(q)).collect(),
        }
    }

    /// Multiplication by `t^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let mut coeffs = vec![R::zero(); n + 1];
        coeffs[k..=n].clone_from_slice(&self.coeffs[..=n - k]);
        Series { coeffs }
    }

    /// Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut coeffs = vec![R::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].plus(&a.times(b));
                }
            }
        }
        Ok(Series { coeffs })
    }

    /// Quotient `num / den` with valuation cancellation.
    ///
    /// With `v = valuation(den)`, the common factor `t^v` is removed from
    /// both operands, so the result has order `N - v` and satisfies
    /// `q * den == num (mod t^(N-v+1))`.
    pub fn div(&self, den: &Self) -> Result<Self> {
        self.check_order(den)?;
        let v = den.valuation().ok_or(Error::ZeroDivisor)?;
        if let Some(nv) = self.valuation() {
            if nv < v {
                return Err(Error::NonSeriesQuotient {
                    numerator: nv,
                    denominator: v,
                });
            }
        }
        let num = &self.coeffs[v..];
        let den = &den.coeffs[v..];
        let lead_inv = den[0].inverse().ok_or(Error::NotInvertible)?;
        let mut q: Vec<R> = Vec::with_capacity(num.len());
        for k in 0..num.len() {
            let mut acc = num[k].clone();
            for i in 1..=k {
                if !den[i].is_zero() {
                    acc = acc.minus(&den[i].times(&q[k - i]));
                }
            }
            q.push(acc.times(&lead_inv));
        }
        Ok(Series { coeffs: q })
    }

    /// `m`-fold product; `m = 0` gives the one series.
    pub fn pow(&self, m: u32) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = m;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("equal orders");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("equal orders");
            }
        }
        result
    }

    /// `exp(c * t^s) = sum_k c^k t^(s k) / k!`, truncated at `order`.
    pub fn exp_monomial(c: &R, s: usize, order: usize) -> Self {
        assert!(s >= 1, "exponent of t must be positive");
        let mut out = Self::zero(order);
        let mut power = R::one();
        let mut k = 0usize;
        while s * k <= order {
            let inv_fact = Rational::new(1, factorial(k as u64)).expect("k! > 0");
            out.coeffs[s * k] = power.scaled(&inv_fact);
            power = power.times(c);
            k += 1;
        }
        out
    }

    /// The substitution `t -> c t`: coefficient `k` becomes `c^k a_k`.
    pub fn scale_t(&self, c: &Rational) -> Self {
        let mut factor = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.scaled(&factor));
            factor = &factor * c;
        }
        Series { coeffs }
    }

    /// `n! * [t^n]`, the coefficient in the `sum f_n t^n / n!` convention.
    pub fn coeff_factorial(&self, n: usize) -> Result<R> {
        let c = self.coeff(n)?;
        Ok(c.scaled(&Rational::from(factorial(n as u64))))
    }

    /// `n! * [t^n]` for every stored `n`.
    pub fn egf_coeffs(&self) -> Vec<R> {
        let mut fact = Rational::one();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    fact = &fact * &Rational::from(n as i64);
                }
                c.scaled(&fact)
            })
            .collect()
    }

    /// Coefficientwise image under a ring map.
    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Series<S> {
        Series {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl Series<Rational> {
    /// Embeds a rational series into another coefficient ring.
    pub fn lift<S: Ring>(&self) -> Series<S> {
        self.map(S::from_rational)
    }
}
