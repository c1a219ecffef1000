//! The symmetric generating functions whose two expansions give the
//! power-sum and shifted identities, assembled directly from series
//! primitives.
//!
//! Comparing `c^(nu m) d^(nu m) n! [t^n]` of these series with the
//! evaluated identity sides ties each identity statement to the generating
//! function it is read off from.

use super::IdentityPoint;
use crate::algebra::{Rational, Ring};
use crate::error::Result;
use crate::families::{base_phi, FamilyParams};
use crate::series::Series;

/// `lambda e^(a t) + 1` at `order`.
fn shifted_exp(lambda: &Rational, a: &Rational, order: usize) -> Result<Series<Rational>> {
    Series::exp_monomial(a, 1, order)
        .mul_rational(lambda)
        .add(&Series::one(order))
}

/// `e^(cd x t) phi(y, cd t) e^(cd X t) phi(Y, cd t)`.
fn argument_factor(p: &FamilyParams, pt: &IdentityPoint, order: usize) -> Result<Series<Rational>> {
    let cd = Rational::from((pt.c * pt.d) as i64);
    let ex = Series::exp_monomial(&(&cd * &pt.x), 1, order);
    let ey = base_phi(p.base, &pt.y, order).scale_t(&cd);
    let ebx = Series::exp_monomial(&(&cd * &pt.big_x), 1, order);
    let eby = base_phi(p.base, &pt.big_y, order).scale_t(&cd);
    ex.mul(&ey)?.mul(&ebx)?.mul(&eby)
}

/// Working order leaving room for the zeros at `t = 0` cancelled in the
/// division when `lambda = -1`.
fn work_order(pt: &IdentityPoint, n: usize) -> usize {
    n + 2 * (pt.m as usize + 1) + 2
}

/// ```text
/// G(t) = 2^(mu(2m-1)) t^(nu(2m-1)) e^(cdxt) phi(y,cdt) (lambda e^(cdt) + 1) e^(cdXt) phi(Y,cdt)
///        / ((lambda e^(ct) + 1)^m (lambda e^(dt) + 1)^m)
/// ```
/// for the unified family at `pt`, truncated at order `n`.
pub fn g_series(pt: &IdentityPoint, n: usize) -> Result<Series<Rational>> {
    let p = pt.family_params();
    let order = work_order(pt, n);
    let (c, d) = (Rational::from(pt.c as i64), Rational::from(pt.d as i64));
    let cd = &c * &d;
    let m = p.m;

    let power = 2 * m - 1;
    let prefactor = Series::monomial(
        Rational::from(2).pow(p.mu * power as i32),
        (p.nu * power) as usize,
        order,
    );
    let num = prefactor
        .mul(&argument_factor(&p, pt, order)?)?
        .mul(&shifted_exp(&p.lambda, &cd, order)?)?;
    let den = shifted_exp(&p.lambda, &c, order)?
        .pow(m)
        .mul(&shifted_exp(&p.lambda, &d, order)?.pow(m))?;
    Ok(num.div(&den)?.truncate(n))
}

/// ```text
/// H(t) = 2^(2 mu m) t^(2 nu m) e^(cdxt) phi(y,cdt) (lambda^c e^(cdt) + 1) (lambda^d e^(cdt) + 1)
///        e^(cdXt) phi(Y,cdt) / ((lambda e^(ct) + 1)^(m+1) (lambda e^(dt) + 1)^(m+1))
/// ```
/// truncated at order `n`.
pub fn h_series(pt: &IdentityPoint, n: usize) -> Result<Series<Rational>> {
    let p = pt.family_params();
    let order = work_order(pt, n);
    let (c, d) = (Rational::from(pt.c as i64), Rational::from(pt.d as i64));
    let cd = &c * &d;
    let m = p.m;

    let prefactor = Series::monomial(
        Rational::from(2).pow(2 * p.mu * m as i32),
        (2 * p.nu * m) as usize,
        order,
    );
    let num = prefactor
        .mul(&argument_factor(&p, pt, order)?)?
        .mul(&shifted_exp(&p.lambda.pow(pt.c as i32), &cd, order)?)?
        .mul(&shifted_exp(&p.lambda.pow(pt.d as i32), &cd, order)?)?;
    let den = shifted_exp(&p.lambda, &c, order)?
        .pow(m + 1)
        .mul(&shifted_exp(&p.lambda, &d, order)?.pow(m + 1))?;
    Ok(num.div(&den)?.truncate(n))
}

/// `c^(nu m) d^(nu m) n! [t^n] s`, the normalization under which the
/// generating-function coefficient equals an identity side.
pub fn proof_coefficient(pt: &IdentityPoint, s: &Series<Rational>) -> Result<Rational> {
    let scale = Rational::from((pt.c * pt.d) as i64).pow((pt.nu * pt.m) as i32);
    Ok(s.coeff_factorial(pt.n as usize)?.scaled(&scale))
}
