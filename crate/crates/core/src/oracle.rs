//! Second, independent routes to the kernel, the family values and the
//! generalized power sums. Used only by tests to cross-check the main
//! series path.
//!
//! Nothing here calls series division. Coefficient vectors are multiplied
//! with a local Cauchy product, the reciprocal `1/(lambda e^t + 1)` comes
//! from a finite difference expansion, and the singular `lambda = -1` case
//! goes through Bernoulli numbers from their recurrence.

use crate::algebra::{binomial, factorial, Rational, Ring};
use crate::error::{Error, Result};
use crate::families::{classical_reduce, BaseKind, Classical, FamilyParams, PolySeq, SumKind};
use crate::series::Series;

/// Ranges the oracle checks sweep over.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleConfig {
    /// Truncation order for kernel comparisons.
    pub order: usize,
    pub lambdas: Vec<Rational>,
    pub m_max: u32,
    pub n_max: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            order: 20,
            lambdas: [(1, 1), (2, 1), (1, 2), (-2, 1), (3, 1)]
                .iter()
                .map(|&(p, q)| Rational::frac(p, q))
                .collect(),
            m_max: 3,
            n_max: 8,
        }
    }
}

fn cauchy<R: Ring>(a: &[R], b: &[R], order: usize) -> Vec<R> {
    (0..=order)
        .map(|k| {
            let mut acc = R::zero();
            for i in 0..=k {
                if let (Some(u), Some(v)) = (a.get(i), b.get(k - i)) {
                    acc = acc.plus(&u.times(v));
                }
            }
            acc
        })
        .collect()
}

fn q_of(n: &num_bigint::BigInt) -> Rational {
    Rational::from(n.clone())
}

/// `1/(lambda e^t + 1)` up to `t^order` as
/// `1/(lambda+1) sum_{j<=order} (-lambda/(lambda+1))^j (e^t - 1)^j`.
pub fn kernel_via_difference_expansion(
    lambda: &Rational,
    order: usize,
) -> Result<Series<Rational>> {
    let shifted = lambda + &Rational::one();
    let inv = shifted
        .recip()
        .ok_or_else(|| Error::InvalidParameter("difference expansion needs lambda != -1".into()))?;
    let ratio = -(lambda * &inv);

    // e^t - 1
    let step: Vec<Rational> = (0..=order)
        .map(|k| {
            if k == 0 {
                Rational::zero()
            } else {
                Rational::new(1, factorial(k as u64)).expect("nonzero")
            }
        })
        .collect();

    let mut total = vec![Rational::zero(); order + 1];
    let mut power = {
        let mut one = vec![Rational::zero(); order + 1];
        one[0] = Rational::one();
        one
    };
    let mut weight = inv.clone();
    for _ in 0..=order {
        for (t, p) in total.iter_mut().zip(&power) {
            *t = &*t + &(&weight * p);
        }
        power = cauchy(&power, &step, order);
        weight = &weight * &ratio;
    }
    Ok(Series::from_coeffs(total))
}

/// `B_0 ..= B_n` from `sum_{j<=k} C(k+1, j) B_j = 0`, so `B_1 = -1/2`.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
    b.push(Rational::one());
    for k in 1..=n {
        let s: Rational = (0..k)
            .map(|j| q_of(&binomial((k + 1) as u64, j as u64)) * &b[j])
            .sum();
        b.push(-(s / Rational::from((k + 1) as i64)));
    }
    b
}

/// `2^mu t^nu / (lambda e^t + 1)` up to `t^order`.
fn order_one_kernel(lambda: &Rational, mu: i32, nu: u32, order: usize) -> Result<Vec<Rational>> {
    if lambda.is_zero() {
        return Err(Error::InvalidParameter("lambda must be nonzero".into()));
    }
    let scale = Rational::from(2).pow(mu);
    let nu = nu as usize;
    let mut out = vec![Rational::zero(); order + 1];
    if *lambda == -Rational::one() {
        // 2^mu t^nu / (1 - e^t) = -2^mu t^(nu-1) sum B_k t^k / k!
        if nu == 0 {
            return Err(Error::InvalidParameter(
                "lambda = -1 requires nu >= 1".into(),
            ));
        }
        let b = bernoulli_numbers(order);
        for k in 0..=order {
            if k + nu - 1 <= order {
                let c = &b[k] / &q_of(&factorial(k as u64));
                out[k + nu - 1] = -(&scale * &c);
            }
        }
        return Ok(out);
    }
    let base = kernel_via_difference_expansion(lambda, order)?;
    for (k, c) in base.coeffs().iter().enumerate() {
        if k + nu <= order {
            out[k + nu] = &scale * c;
        }
    }
    Ok(out)
}

/// `i! [t^i] phi(y, t)` for `i <= order`, written out per base.
fn base_egf<R: Ring>(base: BaseKind, y: &R, order: usize) -> Vec<R> {
    let mut out = vec![R::zero(); order + 1];
    let graded = |out: &mut Vec<R>, step: usize, weight: &dyn Fn(usize) -> Rational| {
        let mut k = 0;
        while k * step <= order {
            let i = k * step;
            let w = q_of(&factorial(i as u64)) * weight(k);
            out[i] = y.power(k as u32).scaled(&w);
            k += 1;
        }
    };
    match base {
        BaseKind::Unit => out[0] = R::one(),
        BaseKind::Exp => graded(&mut out, 1, &|k| {
            Rational::new(1, factorial(k as u64)).expect("nonzero")
        }),
        BaseKind::GouldHopper(s) => graded(&mut out, s as usize, &|k| {
            Rational::new(1, factorial(k as u64)).expect("nonzero")
        }),
        BaseKind::Laguerre(s) => graded(&mut out, s as usize, &|k| {
            let f = factorial(k as u64);
            Rational::new(1, &f * &f).expect("nonzero")
        }),
        BaseKind::TruncExp(r) => graded(&mut out, r as usize, &|_| Rational::one()),
    }
    out
}

/// Family values built from an explicit `m`-fold product of order-one
/// kernels and a binomial convolution with
/// `q_n(x, y) = sum_i C(n, i) x^(n-i) phi_i(y)`.
pub fn atp_via_factored_product<R: Ring>(
    params: &FamilyParams,
    x: &R,
    y: &R,
    n_max: usize,
) -> Result<PolySeq<R>> {
    let one = order_one_kernel(&params.lambda, params.mu, params.nu, n_max);
    let mut kernel = vec![Rational::zero(); n_max + 1];
    kernel[0] = Rational::one();
    if params.m > 0 {
        let one = one?;
        for _ in 0..params.m {
            kernel = cauchy(&kernel, &one, n_max);
        }
    } else if params.lambda.is_zero() {
        return Err(Error::InvalidParameter("lambda must be nonzero".into()));
    }
    // to exponential normalization
    let kernel: Vec<Rational> = kernel
        .iter()
        .enumerate()
        .map(|(k, c)| c * &q_of(&factorial(k as u64)))
        .collect();

    let phi = base_egf(params.base, y, n_max);
    let q: Vec<R> = (0..=n_max)
        .map(|n| {
            let mut acc = R::zero();
            for (i, p) in phi.iter().enumerate().take(n + 1) {
                let term = x
                    .power((n - i) as u32)
                    .times(p)
                    .scaled(&q_of(&binomial(n as u64, i as u64)));
                acc = acc.plus(&term);
            }
            acc
        })
        .collect();

    let values = (0..=n_max)
        .map(|n| {
            let mut acc = R::zero();
            for k in 0..=n {
                let w = q_of(&binomial(n as u64, k as u64)) * &kernel[k];
                acc = acc.plus(&q[n - k].scaled(&w));
            }
            acc
        })
        .collect();
    Ok(PolySeq::new(values))
}

/// Checks `G_n^(m) = n!/(n-m)! E_(n-m)^(m)` for `m <= n <= n_max` and
/// `G_n^(m) = 0` below `m`, on the main computation path.
pub fn genocchi_shift_oracle<R: Ring>(
    m: u32,
    lambda: &Rational,
    x: &R,
    y: &R,
    base: BaseKind,
    n_max: usize,
) -> bool {
    let (Ok(g), Ok(e)) = (
        classical_reduce(Classical::Genocchi, m, lambda, x, y, base, n_max),
        classical_reduce(Classical::Euler, m, lambda, x, y, base, n_max),
    ) else {
        return false;
    };
    let m = m as usize;
    (0..=n_max).all(|n| {
        if n < m {
            return g.get(n).is_zero();
        }
        let falling = q_of(&factorial(n as u64)) / q_of(&factorial((n - m) as u64));
        *g.get(n) == e.get(n - m).scaled(&falling)
    })
}

/// Generalized power sums `0 ..= k_max`: the numerator of the generating
/// function times the difference-expansion reciprocal of its denominator.
/// Where the denominator vanishes at `t = 0` the quotient is the plain sum
/// `sum_{i<=n} e^(it)`, summed directly.
pub fn gen_power_sums_oracle(
    kind: SumKind,
    k_max: usize,
    n: u64,
    lambda: &Rational,
) -> Result<Vec<Rational>> {
    if lambda.is_zero() {
        return Err(Error::InvalidParameter("lambda must be nonzero".into()));
    }
    let one = Rational::one();
    let plain = || {
        (0..=k_max)
            .map(|k| crate::families::power_sum_direct(SumKind::S, k as u32, n))
            .collect()
    };
    // numerator a + b e^((n+1)t) and the lambda of 1/(lambda' e^t + 1)
    let (a, b, recip_lambda, recip_sign) = match kind {
        SumKind::S if lambda.is_one() => return Ok(plain()),
        SumKind::S => (-one.clone(), lambda.clone(), -lambda, -one.clone()),
        SumKind::M if *lambda == -one.clone() => {
            if n % 2 == 1 {
                return Err(Error::NonSeriesQuotient {
                    numerator: 0,
                    denominator: 1,
                });
            }
            return Ok(plain());
        }
        SumKind::M => (
            one.clone(),
            -(lambda * &Rational::sign_power(n + 1)),
            lambda.clone(),
            one.clone(),
        ),
    };
    let recip = kernel_via_difference_expansion(&recip_lambda, k_max)?;
    let base = Rational::from((n + 1) as i64);
    let numerator: Vec<Rational> = (0..=k_max)
        .map(|k| {
            let e = base.pow(k as i32) / q_of(&factorial(k as u64));
            let c = &b * &e;
            if k == 0 {
                &a + &c
            } else {
                c
            }
        })
        .collect();
    let product = cauchy(&numerator, recip.coeffs(), k_max);
    Ok(product
        .iter()
        .enumerate()
        .map(|(k, c)| c * &recip_sign * q_of(&factorial(k as u64)))
        .collect())
}
