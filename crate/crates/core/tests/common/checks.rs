//! Criterion-sized checks. Each returns a short summary on success and the
//! first discrepancy on failure.

use apostol::identities::{
    default_grid, g_series, h_series, proof_coefficient, thm21_sides, thm22_sides,
};
use apostol::oracle::{
    atp_via_factored_product, gen_power_sums_oracle, genocchi_shift_oracle,
    kernel_via_difference_expansion, OracleConfig,
};
use apostol::{
    apostol_kernel, atp_sequence, classical_reduce, gen_power_sum, gen_power_sums,
    power_sum_direct, BaseKind, Classical, FamilyParams, IdentityId, IdentityPoint, PolyXY,
    Rational, Shape, SumKind, Var,
};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use super::{
    all_bases, bernoulli_polys, classical_by_division, euler_polys, genocchi_polys, q, test_lambdas,
};

pub type Check = Result<String, String>;

/// Order-1 classical sequences at `lambda = 1` against the textbook
/// polynomials, symbolically, and orders up to 3 against division of the
/// classical generating functions.
pub fn classical_at_one() -> Check {
    let n_max = 10;
    let x = PolyXY::var(Var::X);
    let y = PolyXY::var(Var::Y);
    let refs = [
        (Classical::Bernoulli, bernoulli_polys(n_max)),
        (Classical::Euler, euler_polys(n_max)),
        (Classical::Genocchi, genocchi_polys(n_max)),
    ];
    let mut count = 0;
    for (which, expected) in &refs {
        let got = classical_reduce(*which, 1, &Rational::one(), &x, &y, BaseKind::Unit, n_max)
            .map_err(|e| e.to_string())?;
        if got.values() != expected.as_slice() {
            return Err(format!(
                "{} order 1 differs from the textbook polynomials",
                which.name()
            ));
        }
        count += got.len();
    }
    let (xv, yv) = (q(1, 2), q(1, 3));
    for which in [Classical::Bernoulli, Classical::Euler, Classical::Genocchi] {
        for m in 1..=3 {
            for base in all_bases() {
                let got = classical_reduce(which, m, &Rational::one(), &xv, &yv, base, 8)
                    .map_err(|e| e.to_string())?;
                let want = classical_by_division(which, m, &Rational::one(), &xv, &yv, base, 8)
                    .ok_or("reference division failed")?;
                if got.values() != want.as_slice() {
                    return Err(format!("{} m={m} base {base} at lambda 1", which.name()));
                }
                count += want.len();
            }
        }
    }
    Ok(format!("{count} values"))
}

/// The unified family under the Bernoulli, Euler and Genocchi parameter
/// maps against each family's own generating function.
pub fn order_m_maps() -> Check {
    let (x, y) = (q(1, 2), q(1, 3));
    let mut count = 0;
    for lambda in test_lambdas() {
        for m in 0..=3u32 {
            for base in all_bases() {
                let maps = [
                    (
                        Classical::Bernoulli,
                        FamilyParams::new(m, -&lambda, 0, 1, base),
                        Rational::sign_power(m as u64),
                    ),
                    (
                        Classical::Euler,
                        FamilyParams::new(m, lambda.clone(), 1, 0, base),
                        Rational::one(),
                    ),
                    (
                        Classical::Genocchi,
                        FamilyParams::new(m, lambda.clone(), 1, 1, base),
                        Rational::one(),
                    ),
                ];
                for (which, params, sign) in maps {
                    let want = classical_by_division(which, m, &lambda, &x, &y, base, 8)
                        .ok_or("reference division failed")?;
                    let unified = atp_sequence(&params, &x, &y, 8).map_err(|e| e.to_string())?;
                    let scaled: Vec<Rational> = unified.iter().map(|v| v * &sign).collect();
                    let reduced = classical_reduce(which, m, &lambda, &x, &y, base, 8)
                        .map_err(|e| e.to_string())?;
                    if scaled != want || reduced.values() != want.as_slice() {
                        return Err(format!(
                            "{} m={m} lambda={lambda} base {base}",
                            which.name()
                        ));
                    }
                    count += want.len();
                }
            }
        }
    }
    Ok(format!("{count} values"))
}

/// Generalized sums at `lambda = 1` against direct summation, `k, n <= 10`.
pub fn sums_at_one() -> Check {
    for kind in [SumKind::S, SumKind::M] {
        for k in 0..=10 {
            for n in 0..=10 {
                let g = gen_power_sum(kind, k, n, &Rational::one()).map_err(|e| e.to_string())?;
                if g != power_sum_direct(kind, k, n) {
                    return Err(format!("{kind:?} k={k} n={n}"));
                }
            }
        }
    }
    Ok("242 sums".into())
}

/// `S_k(n; -lambda) = M_k(n; lambda)` for even `n <= 8`, `k <= 8`.
pub fn alternating_relation() -> Check {
    let mut count = 0;
    for lambda in [q(2, 1), q(1, 2), q(3, 1)] {
        for n in (0..=8).step_by(2) {
            for k in 0..=8 {
                let s = gen_power_sum(SumKind::S, k, n, &-&lambda).map_err(|e| e.to_string())?;
                let m = gen_power_sum(SumKind::M, k, n, &lambda).map_err(|e| e.to_string())?;
                if s != m {
                    return Err(format!("k={k} n={n} lambda={lambda}"));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} pairs"))
}

/// Generalized sums for general `lambda` against the oracle route.
pub fn sums_oracle_route() -> Check {
    let mut lambdas = test_lambdas();
    lambdas.push(-Rational::one());
    let mut count = 0;
    for lambda in &lambdas {
        for kind in [SumKind::S, SumKind::M] {
            for n in 0..=10 {
                let main = gen_power_sums(kind, 10, n, lambda);
                let alt = gen_power_sums_oracle(kind, 10, n, lambda);
                match (main, alt) {
                    (Ok(a), Ok(b)) if a == b => count += a.len(),
                    (Err(_), Err(_)) => {}
                    _ => return Err(format!("{kind:?} n={n} lambda={lambda}")),
                }
            }
        }
    }
    Ok(format!("{count} sums"))
}

/// Main kernel against the difference expansion, `N <= 20`.
pub fn kernel_routes() -> Check {
    let cfg = OracleConfig::default();
    for lambda in &cfg.lambdas {
        for order in 0..=cfg.order {
            let main = apostol_kernel(1, lambda, 0, 0, order).map_err(|e| e.to_string())?;
            let alt = kernel_via_difference_expansion(lambda, order).map_err(|e| e.to_string())?;
            if main != alt {
                return Err(format!("lambda={lambda} N={order}"));
            }
        }
    }
    Ok("105 kernels".into())
}

/// Every family instance and argument pair the default grids evaluate,
/// through both routes.
pub fn family_routes() -> Check {
    let cfg = OracleConfig::default();
    let mut lambdas = cfg.lambdas.clone();
    lambdas.push(-Rational::one());
    let args = [(q(1, 2), q(1, 3)), (q(1, 5), q(2, 7))];
    let mut count = 0;
    for lambda in &lambdas {
        for m in 0..=cfg.m_max {
            for (mu, nu) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                for base in all_bases() {
                    let params = FamilyParams::new(m, lambda.clone(), mu, nu, base);
                    if params.validate().is_err() {
                        continue;
                    }
                    for (x, y) in &args {
                        let a =
                            atp_sequence(&params, x, y, cfg.n_max).map_err(|e| e.to_string())?;
                        let b = atp_via_factored_product(&params, x, y, cfg.n_max)
                            .map_err(|e| e.to_string())?;
                        if a != b {
                            return Err(format!("{params:?} at ({x}, {y})"));
                        }
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{count} sequences"))
}

pub fn genocchi_shift() -> Check {
    let (x, y) = (q(1, 2), q(1, 3));
    let mut count = 0;
    for lambda in test_lambdas() {
        for m in 1..=3 {
            for base in all_bases() {
                if !genocchi_shift_oracle(m, &lambda, &x, &y, base, 10) {
                    return Err(format!("m={m} lambda={lambda} base {base}"));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} sequences, n <= 10"))
}

fn random_rational(rng: &mut StdRng) -> Rational {
    let p: i64 = rng.gen_range(-9..=9);
    let d: i64 = rng.gen_range(1..=9);
    q(p, d)
}

/// Statement sides against the generating functions they come from, at
/// points drawn from the grid ranges with random arguments.
pub fn proof_consistency(seed: u64) -> Check {
    let mut rng = StdRng::seed_from_u64(seed);
    let lambdas = [q(2, 1), q(1, 2), q(-2, 1), q(3, 1)];
    let bases = all_bases();
    let draw = |shape: Shape, cd: &[u32], rng: &mut StdRng| IdentityPoint {
        shape,
        n: rng.gen_range(0..=8),
        m: rng.gen_range(1..=3),
        c: *cd.choose(rng).unwrap(),
        d: *cd.choose(rng).unwrap(),
        lambda: lambdas.choose(rng).unwrap().clone(),
        mu: rng.gen_range(0..=1),
        nu: rng.gen_range(0..=1),
        base: *bases.choose(rng).unwrap(),
        x: random_rational(rng),
        y: random_rational(rng),
        big_x: random_rational(rng),
        big_y: random_rational(rng),
    };
    for _ in 0..20 {
        let pt = draw(Shape::PowerSum, &[1, 2, 3], &mut rng);
        let s = thm21_sides(&pt).map_err(|e| e.to_string())?;
        let g = g_series(&pt, pt.n as usize).map_err(|e| e.to_string())?;
        let c = proof_coefficient(&pt, &g).map_err(|e| e.to_string())?;
        if c != s.lhs || c != s.rhs {
            return Err(format!("power-sum point {pt:?}"));
        }
    }
    for _ in 0..10 {
        let pt = draw(Shape::Shifted, &[1, 3, 5], &mut rng);
        let s = thm22_sides(&pt).map_err(|e| e.to_string())?;
        let h = h_series(&pt, pt.n as usize).map_err(|e| e.to_string())?;
        let c = proof_coefficient(&pt, &h).map_err(|e| e.to_string())?;
        if c != s.lhs || c != s.rhs {
            return Err(format!("shifted point {pt:?}"));
        }
    }
    Ok("20 + 10 points".into())
}
