use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use super::{IdentityId, IdentityPoint, Shape};
use crate::algebra::{binomial, Rational};
use crate::error::{Error, Result};
use crate::families::{
    apostol_kernel, gen_power_sums, power_sum_direct, sequence_from_kernel, BaseKind, Classical,
    FamilyParams, SumKind,
};
use crate::series::Series;

/// Left and right side of an identity at one point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sides {
    pub lhs: Rational,
    pub rhs: Rational,
}

impl Sides {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Family whose values enter an identity.
#[derive(Debug, Clone)]
enum Family {
    Unified { lambda: Rational, mu: i32, nu: u32 },
    Classical { which: Classical, lambda: Rational },
}

impl Family {
    fn nu(&self) -> u32 {
        match self {
            Family::Unified { nu, .. } => *nu,
            Family::Classical { which, .. } => which.nu(),
        }
    }

    fn unified(&self, m: u32, base: BaseKind) -> (FamilyParams, Rational) {
        match self {
            Family::Unified { lambda, mu, nu } => (
                FamilyParams::new(m, lambda.clone(), *mu, *nu, base),
                Rational::one(),
            ),
            Family::Classical { which, lambda } => which.unified(m, lambda, base),
        }
    }
}

#[derive(Debug, Clone)]
enum SumSource {
    /// Generalized sums from their generating function.
    Generalized(SumKind, Rational),
    /// Classical sums by direct summation.
    Direct(SumKind),
}

/// Everything needed to evaluate one point, after the identity's
/// substitutions are applied.
#[derive(Debug, Clone)]
struct Plan {
    family: Family,
    base: BaseKind,
    sums: SumSource,
    weight: Rational,
}

fn plan(id: IdentityId, pt: &IdentityPoint) -> Plan {
    let lambda = pt.lambda.clone();
    let (family, sums, weight) = match id.table_family() {
        None => (
            Family::Unified {
                lambda: lambda.clone(),
                mu: pt.mu,
                nu: pt.nu,
            },
            SumSource::Generalized(SumKind::S, -&lambda),
            -&lambda,
        ),
        Some(which) => {
            let family = Family::Classical {
                which,
                lambda: lambda.clone(),
            };
            let kind = match which {
                Classical::Bernoulli => SumKind::S,
                Classical::Euler | Classical::Genocchi => SumKind::M,
            };
            if id.is_classical_table() {
                (family, SumSource::Direct(kind), Rational::one())
            } else {
                let weight = match which {
                    Classical::Bernoulli => lambda.clone(),
                    _ => -&lambda,
                };
                (family, SumSource::Generalized(kind, lambda.clone()), weight)
            }
        }
    };
    Plan {
        family,
        base: pt.base,
        sums,
        weight,
    }
}

type KernelKey = (u32, Rational, i32, u32, usize);
type SumKey = (SumKind, u64, Rational, usize);
type ValueKey = (FamilyParams, Rational, Rational, Rational);

/// Family values are computed to at least this index so that points
/// differing only in `n` share one expansion.
const MIN_VALUES: usize = 8;

/// Evaluates identity sides, caching kernels, power sums and family values
/// across points. Safe to share between threads.
#[derive(Default)]
pub struct Evaluator {
    kernels: Mutex<HashMap<KernelKey, Arc<Series<Rational>>>>,
    sums: Mutex<HashMap<SumKey, Arc<Vec<Rational>>>>,
    values: Mutex<HashMap<ValueKey, Arc<Vec<Rational>>>>,
}

impl Evaluator {
    pub fn new() -> Self {
        Self::default()
    }

    fn kernel(&self, p: &FamilyParams, order: usize) -> Result<Arc<Series<Rational>>> {
        let key = (p.m, p.lambda.clone(), p.mu, p.nu, order);
        if let Some(k) = self.kernels.lock().unwrap().get(&key) {
            return Ok(k.clone());
        }
        let k = Arc::new(apostol_kernel(p.m, &p.lambda, p.mu, p.nu, order)?);
        self.kernels.lock().unwrap().insert(key, k.clone());
        Ok(k)
    }

    fn power_sums(&self, source: &SumSource, n: u64, k_max: usize) -> Result<Arc<Vec<Rational>>> {
        match source {
            SumSource::Direct(kind) => Ok(Arc::new(
                (0..=k_max as u32)
                    .map(|k| power_sum_direct(*kind, k, n))
                    .collect(),
            )),
            SumSource::Generalized(kind, lambda) => {
                let key = (*kind, n, lambda.clone(), k_max);
                if let Some(s) = self.sums.lock().unwrap().get(&key) {
                    return Ok(s.clone());
                }
                let s = Arc::new(gen_power_sums(*kind, k_max, n, lambda)?);
                self.sums.lock().unwrap().insert(key, s.clone());
                Ok(s)
            }
        }
    }

    /// Values `0..=n_max` of the planned family of order `m` at `(x, y)`.
    fn family_values(
        &self,
        plan: &Plan,
        m: u32,
        x: &Rational,
        y: &Rational,
        n_max: usize,
    ) -> Result<Arc<Vec<Rational>>> {
        let (params, sign) = plan.family.unified(m, plan.base);
        params.validate()?;
        let key = (params, sign, x.clone(), y.clone());
        if let Some(v) = self.values.lock().unwrap().get(&key) {
            if v.len() > n_max {
                return Ok(v.clone());
            }
        }
        let params = &key.0;
        let len = n_max.max(MIN_VALUES);
        let kernel = self.kernel(params, params.truncation_order(len))?;
        let seq = sequence_from_kernel(&kernel, params.base, x, y, len)?;
        let mut values = seq.into_values();
        if !key.1.is_one() {
            for v in values.iter_mut() {
                *v = &*v * &key.1;
            }
        }
        let values = Arc::new(values);
        self.values.lock().unwrap().insert(key, values.clone());
        Ok(values)
    }

    /// Both sides of `id` at `pt`.
    pub fn sides(&self, id: IdentityId, pt: &IdentityPoint) -> Result<Sides> {
        let pt = id.normalize(pt)?;
        let plan = plan(id, &pt);
        let side = |p: &IdentityPoint| match pt.shape {
            Shape::PowerSum => self.power_sum_side(&plan, p),
            Shape::Shifted => self.shifted_side(&plan, p),
        };
        Ok(Sides {
            lhs: side(&pt)?,
            rhs: side(&pt.swapped())?,
        })
    }

    /// `sum_k C(n,k) c^(n-k) d^(nu+k) F^(m)_(n-k)(d x, d^e y)
    ///      * sum_l C(k,l) S_l(c-1) F^(m-1)_(k-l)(c X, c^e Y)`
    /// where `e` is the scaling exponent of the base.
    fn power_sum_side(&self, plan: &Plan, pt: &IdentityPoint) -> Result<Rational> {
        let n = pt.n as usize;
        let (c, d) = (Rational::from(pt.c as i64), Rational::from(pt.d as i64));
        let e = plan.base.scaling_exponent() as i32;
        let outer = self.family_values(plan, pt.m, &(&d * &pt.x), &(&d.pow(e) * &pt.y), n)?;
        let inner = self.family_values(
            plan,
            pt.m - 1,
            &(&c * &pt.big_x),
            &(&c.pow(e) * &pt.big_y),
            n,
        )?;
        let sums = self.power_sums(&plan.sums, (pt.c - 1) as u64, n)?;
        let nu = plan.family.nu() as i32;

        let mut total = Rational::zero();
        for k in 0..=n {
            let conv: Rational = (0..=k)
                .map(|l| Rational::from(binomial(k as u64, l as u64)) * &sums[l] * &inner[k - l])
                .sum();
            let term = Rational::from(binomial(n as u64, k as u64))
                * c.pow((n - k) as i32)
                * d.pow(nu + k as i32)
                * &outer[n - k]
                * conv;
            total = total + term;
        }
        Ok(total)
    }

    /// `sum_k C(n,k) sum_{i<c} sum_{j<d} w^(i+j) c^k d^(n-k)
    ///      F^(m)_k(d x + (d/c) i, d^e y) F^(m)_(n-k)(c X + (c/d) j, c^e Y)`.
    fn shifted_side(&self, plan: &Plan, pt: &IdentityPoint) -> Result<Rational> {
        let n = pt.n as usize;
        let (c, d) = (Rational::from(pt.c as i64), Rational::from(pt.d as i64));
        let e = plan.base.scaling_exponent() as i32;

        // the double sum factors into an i-part and a j-part
        let lattice_sum = |steps: u32, start: Rational, step: Rational, y: Rational| {
            let mut acc = vec![Rational::zero(); n + 1];
            let mut w = Rational::one();
            for i in 0..steps {
                let arg = &start + &(&step * &Rational::from(i as i64));
                let vals = self.family_values(plan, pt.m, &arg, &y, n)?;
                for (a, v) in acc.iter_mut().zip(vals.iter()) {
                    *a = &*a + &(&w * v);
                }
                w = &w * &plan.weight;
            }
            Ok::<_, Error>(acc)
        };
        let left = lattice_sum(pt.c, &d * &pt.x, &d / &c, &d.pow(e) * &pt.y)?;
        let right = lattice_sum(pt.d, &c * &pt.big_x, &c / &d, &c.pow(e) * &pt.big_y)?;

        let mut total = Rational::zero();
        for k in 0..=n {
            total = total
                + Rational::from(binomial(n as u64, k as u64))
                    * c.pow(k as i32)
                    * d.pow((n - k) as i32)
                    * &left[k]
                    * &right[n - k];
        }
        Ok(total)
    }
}

/// Sides of identity `id` at `pt` with a fresh evaluator.
pub fn sides(id: IdentityId, pt: &IdentityPoint) -> Result<Sides> {
    Evaluator::new().sides(id, pt)
}

/// Power-sum shape for the unified family with the point's `(m, lambda,
/// mu, nu, base)`; arguments scale as `d x, d^e y` with `e` the base's
/// scaling exponent.
pub fn thm21_sides(pt: &IdentityPoint) -> Result<Sides> {
    sides(IdentityId::Thm21, pt)
}

/// Shifted-argument shape for the unified family.
pub fn thm22_sides(pt: &IdentityPoint) -> Result<Sides> {
    sides(IdentityId::Thm22, pt)
}

pub fn corollary_sides(id: IdentityId, pt: &IdentityPoint) -> Result<Sides> {
    if !id.is_corollary() {
        return Err(Error::UnknownIdentity(format!("{id} is not a corollary")));
    }
    sides(id, pt)
}

pub fn table_sides(id: IdentityId, pt: &IdentityPoint) -> Result<Sides> {
    if !id.is_table() {
        return Err(Error::UnknownIdentity(format!("{id} is not a table row")));
    }
    sides(id, pt)
}
