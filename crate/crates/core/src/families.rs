//! Polynomial families and power sums assembled from their generating
//! functions.
//!
//! Every family here has the shape
//!
//! ```text
//! (2^mu t^nu / (lambda e^t + 1))^m  *  e^(x t)  *  phi(y, t)  =  sum_n F_n(x, y) t^n / n!
//! ```
//!
//! for one of the base functions `phi` in [`BaseKind`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{factorial, Rational, Ring};
use crate::error::{Error, Result};
use crate::series::Series;

/// The second factor `phi(y, t)` of the generating function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BaseKind {
    /// `phi = 1`; the one-variable family.
    Unit,
    /// `phi = e^(y t)`.
    Exp,
    /// `phi = e^(y t^s)`.
    GouldHopper(u32),
    /// `phi = C0(-y t^s) = sum_k y^k t^(s k) / (k!)^2`.
    Laguerre(u32),
    /// `phi = 1 / (1 - y t^r)`.
    TruncExp(u32),
}

impl BaseKind {
    /// Exponent `e` with `phi(y, a t) = phi(a^e y, t)`. The unit base
    /// ignores `y`, so any value works; 1 is returned.
    pub fn scaling_exponent(&self) -> u32 {
        match *self {
            BaseKind::Unit | BaseKind::Exp => 1,
            BaseKind::GouldHopper(s) | BaseKind::Laguerre(s) | BaseKind::TruncExp(s) => s,
        }
    }

    pub fn degree(&self) -> Option<u32> {
        match *self {
            BaseKind::Unit | BaseKind::Exp => None,
            BaseKind::GouldHopper(s) | BaseKind::Laguerre(s) | BaseKind::TruncExp(s) => Some(s),
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            BaseKind::Unit => "unit",
            BaseKind::Exp => "exp",
            BaseKind::GouldHopper(_) => "gould_hopper",
            BaseKind::Laguerre(_) => "laguerre",
            BaseKind::TruncExp(_) => "trunc_exp",
        }
    }

    /// Builds a base from its tag and (for the graded bases) degree.
    pub fn from_tag(tag: &str, degree: Option<u32>) -> Result<Self> {
        let need = |d: Option<u32>| -> Result<u32> {
            match d {
                Some(0) => Err(Error::InvalidParameter(format!(
                    "{tag} degree must be positive"
                ))),
                Some(d) => Ok(d),
                None => Err(Error::InvalidParameter(format!("{tag} requires a degree"))),
            }
        };
        match tag {
            "unit" => Ok(BaseKind::Unit),
            "exp" => Ok(BaseKind::Exp),
            "gould_hopper" => Ok(BaseKind::GouldHopper(need(degree)?)),
            "laguerre" => Ok(BaseKind::Laguerre(need(degree)?)),
            "trunc_exp" => Ok(BaseKind::TruncExp(need(degree)?)),
            other => Err(Error::InvalidParameter(format!("unknown base {other:?}"))),
        }
    }
}

impl fmt::Display for BaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degree() {
            Some(s) => write!(f, "{}:{}", self.tag(), s),
            None => f.write_str(self.tag()),
        }
    }
}

/// Parses `unit`, `exp`, `gould_hopper:s`, `laguerre:s`, `trunc_exp:r`.
impl FromStr for BaseKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            None => BaseKind::from_tag(s, None),
            Some((tag, deg)) => {
                let d = deg
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidParameter(format!("bad base degree in {s:?}")))?;
                if matches!(tag, "unit" | "exp") {
                    return Err(Error::InvalidParameter(format!("{tag} takes no degree")));
                }
                BaseKind::from_tag(tag, Some(d))
            }
        }
    }
}

impl Serialize for BaseKind {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BaseKind {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `phi(y, t)` truncated at `order`.
pub fn base_phi<R: Ring>(base: BaseKind, y: &R, order: usize) -> Series<R> {
    match base {
        BaseKind::Unit => Series::one(order),
        BaseKind::Exp => Series::exp_monomial(y, 1, order),
        BaseKind::GouldHopper(s) => Series::exp_monomial(y, s as usize, order),
        BaseKind::Laguerre(s) => graded_series(y, s as usize, order, |k| {
            let f = factorial(k as u64);
            Rational::new(1, &f * &f).expect("nonzero")
        }),
        BaseKind::TruncExp(r) => graded_series(y, r as usize, order, |_| Rational::one()),
    }
}

/// `sum_k weight(k) y^k t^(step k)`.
fn graded_series<R: Ring>(
    y: &R,
    step: usize,
    order: usize,
    weight: impl Fn(usize) -> Rational,
) -> Series<R> {
    let mut coeffs = vec![R::zero(); order + 1];
    let mut power = R::one();
    let mut k = 0;
    while k * step <= order {
        coeffs[k * step] = power.scaled(&weight(k));
        power = power.times(y);
        k += 1;
    }
    Series::from_coeffs(coeffs)
}

/// Parameters `(m, lambda, mu, nu, base)` of one family instance.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyParams {
    pub m: u32,
    pub lambda: Rational,
    pub mu: i32,
    pub nu: u32,
    pub base: BaseKind,
}

impl FamilyParams {
    pub fn new(m: u32, lambda: Rational, mu: i32, nu: u32, base: BaseKind) -> Self {
        FamilyParams {
            m,
            lambda,
            mu,
            nu,
            base,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.lambda.is_zero() {
            return Err(Error::InvalidParameter("lambda must be nonzero".into()));
        }
        if self.lambda == -Rational::one() && self.nu == 0 && self.m > 0 {
            return Err(Error::InvalidParameter(
                "lambda = -1 requires nu >= 1 (the kernel has a pole at t = 0)".into(),
            ));
        }
        Ok(())
    }

    /// Working truncation order for entries `0..=n_max`.
    pub fn truncation_order(&self, n_max: usize) -> usize {
        n_max + (self.nu * self.m) as usize + 2
    }

    pub fn with_order(&self, m: u32) -> Self {
        FamilyParams { m, ..self.clone() }
    }
}

/// Values `F_0 ..= F_{n_max}` of one family at fixed arguments.
#[derive(Debug, Clone, PartialEq)]
pub struct PolySeq<R> {
    values: Vec<R>,
}

impl<R> PolySeq<R> {
    pub fn new(values: Vec<R>) -> Self {
        PolySeq { values }
    }

    pub fn get(&self, n: usize) -> &R {
        &self.values[n]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[R] {
        &self.values
    }

    pub fn into_values(self) -> Vec<R> {
        self.values
    }

    pub fn iter(&self) -> std::slice::Iter<'_, R> {
        self.values.iter()
    }
}

/// `(2^mu t^nu / (lambda e^t + 1))^m` truncated at `order`.
///
/// At `lambda = -1` the denominator vanishes at `t = 0`; the simple zero is
/// cancelled against `t^nu`, which fails with a division error when
/// `nu = 0`.
pub fn apostol_kernel(
    m: u32,
    lambda: &Rational,
    mu: i32,
    nu: u32,
    order: usize,
) -> Result<Series<Rational>> {
    if m == 0 {
        return Ok(Series::one(order));
    }
    if lambda.is_zero() {
        return Err(Error::InvalidParameter("lambda must be nonzero".into()));
    }
    let work = if *lambda == -Rational::one() {
        order + 1
    } else {
        order
    };
    let den = Series::exp_monomial(&Rational::one(), 1, work)
        .mul_rational(lambda)
        .add(&Series::one(work))?;
    let num = Series::monomial(Rational::from(2).pow(mu), nu as usize, work);
    let factor = num.div(&den)?.truncate(order);
    Ok(factor.pow(m))
}

/// `n! [t^n]` of `kernel * e^(x t) * phi(y, t)` for `n <= n_max`, given
/// an already assembled kernel of sufficient order.
pub fn sequence_from_kernel<R: Ring>(
    kernel: &Series<Rational>,
    base: BaseKind,
    x: &R,
    y: &R,
    n_max: usize,
) -> Result<PolySeq<R>> {
    let order = kernel.order();
    if order < n_max {
        return Err(Error::IndexOutOfRange {
            index: n_max,
            order,
        });
    }
    let appell = Series::exp_monomial(x, 1, order).mul(&base_phi(base, y, order))?;
    let full = kernel.lift::<R>().mul(&appell)?;
    let mut values = full.truncate(n_max).egf_coeffs();
    values.truncate(n_max + 1);
    Ok(PolySeq::new(values))
}

/// The 2-variable Apostol-type values `F_0 ..= F_{n_max}` at `(x, y)`.
pub fn atp_sequence<R: Ring>(
    params: &FamilyParams,
    x: &R,
    y: &R,
    n_max: usize,
) -> Result<PolySeq<R>> {
    params.validate()?;
    let order = params.truncation_order(n_max);
    let kernel = apostol_kernel(params.m, &params.lambda, params.mu, params.nu, order)?;
    sequence_from_kernel(&kernel, params.base, x, y, n_max)
}

/// The three classical specializations of the unified family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Classical {
    Bernoulli,
    Euler,
    Genocchi,
}

impl Classical {
    /// The unified-family parameters realizing this family, and the sign
    /// relating the two.
    ///
    /// Bernoulli: `B^(m)(x; lambda) = (-1)^m F^(m)(x; -lambda; 0, 1)`.
    /// Euler: `mu = 1, nu = 0`. Genocchi: `mu = 1, nu = 1`.
    pub fn unified(&self, m: u32, lambda: &Rational, base: BaseKind) -> (FamilyParams, Rational) {
        match self {
            Classical::Bernoulli => (
                FamilyParams::new(m, -lambda, 0, 1, base),
                Rational::sign_power(m as u64),
            ),
            Classical::Euler => (
                FamilyParams::new(m, lambda.clone(), 1, 0, base),
                Rational::one(),
            ),
            Classical::Genocchi => (
                FamilyParams::new(m, lambda.clone(), 1, 1, base),
                Rational::one(),
            ),
        }
    }

    /// The `nu` of the unified parameters (the power of `t` in the kernel).
    pub fn nu(&self) -> u32 {
        match self {
            Classical::Euler => 0,
            Classical::Bernoulli | Classical::Genocchi => 1,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Classical::Bernoulli => "bernoulli",
            Classical::Euler => "euler",
            Classical::Genocchi => "genocchi",
        }
    }
}

impl FromStr for Classical {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bernoulli" => Ok(Classical::Bernoulli),
            "euler" => Ok(Classical::Euler),
            "genocchi" => Ok(Classical::Genocchi),
            _ => Err(Error::InvalidParameter(format!("unknown family {s:?}"))),
        }
    }
}

/// Apostol-Bernoulli, -Euler or -Genocchi values of order `m` via the
/// unified family.
pub fn classical_reduce<R: Ring>(
    which: Classical,
    m: u32,
    lambda: &Rational,
    x: &R,
    y: &R,
    base: BaseKind,
    n_max: usize,
) -> Result<PolySeq<R>> {
    let (params, sign) = which.unified(m, lambda, base);
    let seq = atp_sequence(&params, x, y, n_max)?;
    if sign.is_one() {
        return Ok(seq);
    }
    Ok(PolySeq::new(seq.iter().map(|v| v.scaled(&sign)).collect()))
}

/// Plain (`S`) or alternating (`M`) power sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SumKind {
    S,
    M,
}

/// `sum_{i=0}^{n} i^k` (kind `S`) or `sum_{i=0}^{n} (-1)^i i^k` (kind `M`),
/// with `0^0 = 1`.
pub fn power_sum_direct(kind: SumKind, k: u32, n: u64) -> Rational {
    let mut total = num_bigint::BigInt::from(0);
    for i in 0..=n {
        let term = num_traits::pow(num_bigint::BigInt::from(i), k as usize);
        match kind {
            SumKind::M if i % 2 == 1 => total -= term,
            _ => total += term,
        }
    }
    Rational::from(total)
}

/// Generalized power sums `0 ..= k_max` for fixed `n` and `lambda`:
///
/// * `S`: `k! [t^k] (lambda e^((n+1)t) - 1) / (lambda e^t - 1)`
/// * `M`: `k! [t^k] (1 - lambda (-e^t)^(n+1)) / (lambda e^t + 1)`
pub fn gen_power_sums(
    kind: SumKind,
    k_max: usize,
    n: u64,
    lambda: &Rational,
) -> Result<Vec<Rational>> {
    if lambda.is_zero() {
        return Err(Error::InvalidParameter("lambda must be nonzero".into()));
    }
    // one spare coefficient for a cancelled simple zero
    let order = k_max + 1;
    let one = Series::<Rational>::one(order);
    let e_t = Series::exp_monomial(&Rational::one(), 1, order).mul_rational(lambda);
    let e_n = Series::exp_monomial(&Rational::from((n + 1) as i64), 1, order).mul_rational(lambda);
    let (num, den) = match kind {
        SumKind::S => (e_n.sub(&one)?, e_t.sub(&one)?),
        SumKind::M => {
            let sign = Rational::sign_power(n + 1);
            (one.sub(&e_n.mul_rational(&sign))?, e_t.add(&one)?)
        }
    };
    let q = num.div(&den)?.truncate(k_max);
    Ok(q.egf_coeffs())
}

pub fn gen_power_sum(kind: SumKind, k: u32, n: u64, lambda: &Rational) -> Result<Rational> {
    let mut v = gen_power_sums(kind, k as usize, n, lambda)?;
    Ok(v.swap_remove(k as usize))
}
