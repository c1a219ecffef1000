//! Sparse polynomials over `Rational` in the fixed indeterminates x, y, X, Y.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use super::rational::Rational;
use crate::error::{Error, Result};

/// One of the four indeterminates. Declaration order is the variable order
/// used for printing: x < y < X < Y.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X,
    Y,
    BigX,
    BigY,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::X, Var::Y, Var::BigX, Var::BigY];

    fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Y => "y",
            Var::BigX => "X",
            Var::BigY => "Y",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// Dense exponent vector, ordered graded-lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u32; 4]);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Assignment of rational values to indeterminates.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Point([Option<Rational>; 4]);

impl Point {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, var: Var, value: Rational) -> Self {
        self.0[var.index()] = Some(value);
        self
    }

    pub fn get(&self, var: Var) -> Option<&Rational> {
        self.0[var.index()].as_ref()
    }
}

/// Polynomial in x, y, X, Y. No stored coefficient is ever zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyXY {
    terms: BTreeMap<Monomial, Rational>,
}

impl PolyXY {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, Monomial::default())
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 4];
        e[v.index()] = 1;
        Self::monomial(Rational::one(), Monomial(e))
    }

    pub fn monomial(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        PolyXY { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The constant term when the polynomial has no other terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::default()).cloned(),
            _ => None,
        }
    }

    fn accumulate(terms: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
        use std::collections::btree_map::Entry;
        match terms.entry(m) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &PolyXY) -> PolyXY {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::accumulate(&mut terms, *m, c.clone());
        }
        PolyXY { terms }
    }

    pub fn neg(&self) -> PolyXY {
        PolyXY {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &PolyXY) -> PolyXY {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &PolyXY) -> PolyXY {
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                Self::accumulate(&mut terms, ma.times(mb), ca * cb);
            }
        }
        PolyXY { terms }
    }

    pub fn scale(&self, c: &Rational) -> PolyXY {
        if c.is_zero() {
            return PolyXY::zero();
        }
        PolyXY {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> PolyXY {
        (0..exp).fold(PolyXY::one(), |acc, _| acc.mul(self))
    }

    /// Exact value at `point`; every indeterminate present in `self` must be assigned.
    pub fn eval(&self, point: &Point) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for v in Var::ALL {
                let e = m.0[v.index()];
                if e > 0 {
                    let val = point.get(v).ok_or(Error::MissingAssignment(v))?;
                    term = term * val.pow(e as i32);
                }
            }
            total = total + term;
        }
        Ok(total)
    }
}

impl From<Rational> for PolyXY {
    fn from(c: Rational) -> Self {
        PolyXY::constant(c)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for v in Var::ALL {
        let e = m.0[v.index()];
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{v}")?;
        } else {
            write!(f, "{v}^{e}")?;
        }
    }
    Ok(())
}

/// Canonical form: descending graded-lex, e.g. `x^2 - x + 1/6`, `3/2*x*y^2`.
impl fmt::Display for PolyXY {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mag = if c.is_negative() { -c } else { c.clone() };
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.degree() == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write_monomial(f, m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyXY {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyXY({self})")
    }
}
