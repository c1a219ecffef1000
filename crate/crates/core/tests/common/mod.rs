//! Reference computations shared by the integration tests. Everything here
//! works on plain coefficient vectors with its own schoolbook arithmetic.

#![allow(dead_code)]

pub mod checks;
pub mod cli;

use apostol::{binomial, factorial, BaseKind, Classical, PolyXY, Rational, Var};

pub fn q(p: i64, d: i64) -> Rational {
    Rational::frac(p, d)
}

pub fn test_lambdas() -> Vec<Rational> {
    vec![q(1, 1), q(2, 1), q(1, 2), q(-2, 1), q(3, 1)]
}

pub fn all_bases() -> Vec<BaseKind> {
    let mut out = vec![BaseKind::Unit, BaseKind::Exp];
    for s in 1..=3 {
        out.push(BaseKind::GouldHopper(s));
        out.push(BaseKind::Laguerre(s));
        out.push(BaseKind::TruncExp(s));
    }
    out
}

fn fact(n: usize) -> Rational {
    Rational::from(factorial(n as u64))
}

pub fn mul(a: &[Rational], b: &[Rational], order: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); order + 1];
    for (i, x) in a.iter().enumerate().take(order + 1) {
        for (j, y) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    out
}

pub fn pow(a: &[Rational], m: u32, order: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); order + 1];
    out[0] = Rational::one();
    for _ in 0..m {
        out = mul(&out, a, order);
    }
    out
}

/// `sum_k c^k t^k / k!`.
pub fn exp_coeffs(c: &Rational, order: usize) -> Vec<Rational> {
    (0..=order).map(|k| c.pow(k as i32) / fact(k)).collect()
}

/// Ordinary coefficients of `phi(y, t)`.
pub fn phi_coeffs(base: BaseKind, y: &Rational, order: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); order + 1];
    let (step, weight): (usize, Box<dyn Fn(usize) -> Rational>) = match base {
        BaseKind::Unit => {
            out[0] = Rational::one();
            return out;
        }
        BaseKind::Exp => (1, Box::new(|k| Rational::one() / fact(k))),
        BaseKind::GouldHopper(s) => (s as usize, Box::new(|k| Rational::one() / fact(k))),
        BaseKind::Laguerre(s) => (
            s as usize,
            Box::new(|k| Rational::one() / (fact(k) * fact(k))),
        ),
        BaseKind::TruncExp(r) => (r as usize, Box::new(|_| Rational::one())),
    };
    let mut k = 0;
    while k * step <= order {
        out[k * step] = y.pow(k as i32) * weight(k);
        k += 1;
    }
    out
}

/// Quotient of truncated series by long division, after cancelling the
/// common power of `t`. Inputs need `order + v + 1` coefficients where `v`
/// is the valuation of `den`.
pub fn long_divide(num: &[Rational], den: &[Rational], order: usize) -> Option<Vec<Rational>> {
    let v = den.iter().position(|c| !c.is_zero())?;
    if num.iter().take(v).any(|c| !c.is_zero()) {
        return None;
    }
    let (n, d) = (&num[v..], &den[v..]);
    let mut out: Vec<Rational> = Vec::with_capacity(order + 1);
    for (k, nk) in n.iter().enumerate().take(order + 1) {
        let mut r = nk.clone();
        for (j, qj) in out.iter().enumerate() {
            if let Some(dk) = d.get(k - j) {
                r = r - qj * dk;
            }
        }
        out.push(r / d[0].clone());
    }
    Some(out)
}

/// `F_0 ..= F_{n_max}` of an Apostol-Bernoulli, -Euler or -Genocchi family
/// read off its own generating function:
/// `(t/(lambda e^t - 1))^m`, `(2/(lambda e^t + 1))^m` or
/// `(2t/(lambda e^t + 1))^m`, times `e^(xt) phi(y, t)`.
pub fn classical_by_division(
    which: Classical,
    m: u32,
    lambda: &Rational,
    x: &Rational,
    y: &Rational,
    base: BaseKind,
    n_max: usize,
) -> Option<Vec<Rational>> {
    let work = n_max + m as usize + 1;
    let mut e = exp_coeffs(&Rational::one(), work);
    for c in e.iter_mut() {
        *c = &*c * lambda;
    }
    let (top, shift): (Vec<Rational>, Rational) = match which {
        Classical::Bernoulli => (vec![Rational::zero(), Rational::one()], -Rational::one()),
        Classical::Euler => (vec![q(2, 1)], Rational::one()),
        Classical::Genocchi => (vec![Rational::zero(), q(2, 1)], Rational::one()),
    };
    e[0] = &e[0] + &shift;
    let num = mul(
        &mul(&pow(&top, m, work), &exp_coeffs(x, work), work),
        &phi_coeffs(base, y, work),
        work,
    );
    let den = pow(&e, m, work);
    let quotient = long_divide(&num, &den, n_max)?;
    Some(
        quotient
            .iter()
            .enumerate()
            .map(|(n, c)| c * &fact(n))
            .collect(),
    )
}

/// Bernoulli numbers from `sum_{j<=k} C(k+1, j) B_j = 0`.
pub fn bernoulli_numbers(n: usize) -> Vec<Rational> {
    let mut b = vec![Rational::one()];
    for k in 1..=n {
        let mut s = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            s = s + Rational::from(binomial((k + 1) as u64, j as u64)) * bj;
        }
        b.push(-(s / Rational::from((k + 1) as i64)));
    }
    b
}

fn x_pow(k: usize) -> PolyXY {
    PolyXY::var(Var::X).pow(k as u32)
}

/// `B_n(x) = sum_k C(n, k) B_k x^(n-k)`.
pub fn bernoulli_polys(n_max: usize) -> Vec<PolyXY> {
    let b = bernoulli_numbers(n_max);
    (0..=n_max)
        .map(|n| {
            let mut p = PolyXY::zero();
            for (k, bk) in b.iter().enumerate().take(n + 1) {
                let c = Rational::from(binomial(n as u64, k as u64)) * bk;
                p = p.add(&x_pow(n - k).scale(&c));
            }
            p
        })
        .collect()
}

/// `E_n(x) = x^n - 1/2 sum_{k<n} C(n, k) E_k(x)`, from
/// `E_n(x + 1) + E_n(x) = 2 x^n`.
pub fn euler_polys(n_max: usize) -> Vec<PolyXY> {
    let mut e: Vec<PolyXY> = Vec::new();
    for n in 0..=n_max {
        let mut p = x_pow(n);
        for (k, ek) in e.iter().enumerate() {
            let c = Rational::from(binomial(n as u64, k as u64)) * q(-1, 2);
            p = p.add(&ek.scale(&c));
        }
        e.push(p);
    }
    e
}

/// `G_n(x) = n E_(n-1)(x)`, `G_0 = 0`.
pub fn genocchi_polys(n_max: usize) -> Vec<PolyXY> {
    let e = euler_polys(n_max);
    (0..=n_max)
        .map(|n| {
            if n == 0 {
                PolyXY::zero()
            } else {
                e[n - 1].scale(&Rational::from(n as i64))
            }
        })
        .collect()
}
