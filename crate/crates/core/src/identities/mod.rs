//! Registry of symmetry identities and their exact evaluators.
//!
//! Every identity has one of two shapes:
//!
//! * [`Shape::PowerSum`]: a double convolution of an order-`m` family, an
//!   order-`m-1` family and a generalized power sum,
//! * [`Shape::Shifted`]: a convolution of two order-`m` families whose
//!   arguments are shifted along `i/c` and `j/d` lattices.
//!
//! The left side is the expression at `(c, d)` and the right side the same
//! expression at `(d, c)`; an identity holds at a point when the two are
//! equal as rationals.

mod eval;
mod expansion;
mod grid;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::Rational;
use crate::error::{Error, Result};
use crate::families::{BaseKind, Classical, FamilyParams};

pub use eval::{corollary_sides, sides, table_sides, thm21_sides, thm22_sides, Evaluator, Sides};
pub use expansion::{g_series, h_series, proof_coefficient};
pub use grid::{
    default_grid, verify_grid, verify_grid_with, PointOutcome, PointResult, ReportSummary,
    VerificationReport, REPORT_SCHEMA,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    Cor31,
    Cor32,
    Cor33,
    Cor34,
    Cor35,
    Cor36,
    Tbl21B,
    Tbl21E,
    Tbl21G,
    Tbl22B,
    Tbl22E,
    Tbl22G,
    Tbl31B,
    Tbl31E,
    Tbl31G,
    Tbl32B,
    Tbl32E,
    Tbl32G,
    Tbl33B,
    Tbl33E,
    Tbl33G,
    Thm21,
    Thm22,
}

/// The two identity shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    PowerSum,
    Shifted,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::PowerSum => "power_sum",
            Shape::Shifted => "shifted",
        })
    }
}

/// Which base kind an identity is stated for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseConstraint {
    Any,
    Kind(&'static str),
}

/// Static description of one registry entry.
#[derive(Debug, Clone, Serialize)]
pub struct Descriptor {
    pub tag: &'static str,
    pub anchor: &'static str,
    pub shapes: Vec<Shape>,
    pub base: &'static str,
    pub substitution: &'static str,
}

impl IdentityId {
    /// All identities, sorted by tag.
    pub const ALL: [IdentityId; 23] = [
        IdentityId::Cor31,
        IdentityId::Cor32,
        IdentityId::Cor33,
        IdentityId::Cor34,
        IdentityId::Cor35,
        IdentityId::Cor36,
        IdentityId::Tbl21B,
        IdentityId::Tbl21E,
        IdentityId::Tbl21G,
        IdentityId::Tbl22B,
        IdentityId::Tbl22E,
        IdentityId::Tbl22G,
        IdentityId::Tbl31B,
        IdentityId::Tbl31E,
        IdentityId::Tbl31G,
        IdentityId::Tbl32B,
        IdentityId::Tbl32E,
        IdentityId::Tbl32G,
        IdentityId::Tbl33B,
        IdentityId::Tbl33E,
        IdentityId::Tbl33G,
        IdentityId::Thm21,
        IdentityId::Thm22,
    ];

    pub fn tag(&self) -> &'static str {
        use IdentityId::*;
        match self {
            Thm21 => "thm21",
            Thm22 => "thm22",
            Cor31 => "cor31",
            Cor32 => "cor32",
            Cor33 => "cor33",
            Cor34 => "cor34",
            Cor35 => "cor35",
            Cor36 => "cor36",
            Tbl21B => "tbl21_B",
            Tbl21E => "tbl21_E",
            Tbl21G => "tbl21_G",
            Tbl22B => "tbl22_B",
            Tbl22E => "tbl22_E",
            Tbl22G => "tbl22_G",
            Tbl31B => "tbl31_B",
            Tbl31E => "tbl31_E",
            Tbl31G => "tbl31_G",
            Tbl32B => "tbl32_B",
            Tbl32E => "tbl32_E",
            Tbl32G => "tbl32_G",
            Tbl33B => "tbl33_B",
            Tbl33E => "tbl33_E",
            Tbl33G => "tbl33_G",
        }
    }

    pub fn is_table(&self) -> bool {
        self.table_family().is_some()
    }

    pub fn is_corollary(&self) -> bool {
        use IdentityId::*;
        matches!(self, Cor31 | Cor32 | Cor33 | Cor34 | Cor35 | Cor36)
    }

    /// The shape, when the identity fixes one (theorems and corollaries).
    pub fn fixed_shape(&self) -> Option<Shape> {
        use IdentityId::*;
        match self {
            Thm21 | Cor31 | Cor33 | Cor35 => Some(Shape::PowerSum),
            Thm22 | Cor32 | Cor34 | Cor36 => Some(Shape::Shifted),
            _ => None,
        }
    }

    pub fn shapes(&self) -> Vec<Shape> {
        match self.fixed_shape() {
            Some(s) => vec![s],
            None => vec![Shape::PowerSum, Shape::Shifted],
        }
    }

    /// Classical family of a table row.
    pub fn table_family(&self) -> Option<Classical> {
        use IdentityId::*;
        match self {
            Tbl21B | Tbl22B | Tbl31B | Tbl32B | Tbl33B => Some(Classical::Bernoulli),
            Tbl21E | Tbl22E | Tbl31E | Tbl32E | Tbl33E => Some(Classical::Euler),
            Tbl21G | Tbl22G | Tbl31G | Tbl32G | Tbl33G => Some(Classical::Genocchi),
            _ => None,
        }
    }

    /// Rows of the lambda = 1 table, which use the classical power sums.
    pub fn is_classical_table(&self) -> bool {
        use IdentityId::*;
        matches!(self, Tbl22B | Tbl22E | Tbl22G)
    }

    pub fn base_constraint(&self) -> BaseConstraint {
        use IdentityId::*;
        match self {
            Cor31 | Cor32 | Tbl31B | Tbl31E | Tbl31G => BaseConstraint::Kind("gould_hopper"),
            Cor33 | Cor34 | Tbl32B | Tbl32E | Tbl32G => BaseConstraint::Kind("laguerre"),
            Cor35 | Cor36 | Tbl33B | Tbl33E | Tbl33G => BaseConstraint::Kind("trunc_exp"),
            _ => BaseConstraint::Any,
        }
    }

    pub fn anchor(&self) -> &'static str {
        use IdentityId::*;
        match self {
            Thm21 => "Theorem 2.1",
            Thm22 => "Theorem 2.2",
            Cor31 => "Corollary 3.1",
            Cor32 => "Corollary 3.2",
            Cor33 => "Corollary 3.3",
            Cor34 => "Corollary 3.4",
            Cor35 => "Corollary 3.5",
            Cor36 => "Corollary 3.6",
            Tbl21B => "Table 2.1, row I",
            Tbl21E => "Table 2.1, row II",
            Tbl21G => "Table 2.1, row III",
            Tbl22B => "Table 2.2, row I",
            Tbl22E => "Table 2.2, row II",
            Tbl22G => "Table 2.2, row III",
            Tbl31B => "Table 3.1, row I",
            Tbl31E => "Table 3.1, row II",
            Tbl31G => "Table 3.1, row III",
            Tbl32B => "Table 3.2, row I",
            Tbl32E => "Table 3.2, row II",
            Tbl32G => "Table 3.2, row III",
            Tbl33B => "Table 3.3, row I",
            Tbl33E => "Table 3.3, row II",
            Tbl33G => "Table 3.3, row III",
        }
    }

    pub fn substitution(&self) -> &'static str {
        use IdentityId::*;
        match self {
            Thm21 | Cor31 | Cor33 | Cor35 => {
                "general (m, lambda, mu, nu); power sums S_l(c-1; -lambda)"
            }
            Thm22 | Cor32 | Cor34 | Cor36 => "general (m, lambda, mu, nu); weights (-lambda)^(i+j)",
            Tbl21B | Tbl31B | Tbl32B | Tbl33B => {
                "lambda -> -lambda, mu = 0, nu = 1, sign (-1)^m; S_l(c-1; lambda); weights lambda^(i+j)"
            }
            Tbl21E | Tbl31E | Tbl32E | Tbl33E => {
                "mu = 1, nu = 0; M_l(c-1; lambda); weights (-lambda)^(i+j)"
            }
            Tbl21G | Tbl31G | Tbl32G | Tbl33G => {
                "mu = 1, nu = 1; M_l(c-1; lambda); weights (-lambda)^(i+j)"
            }
            Tbl22B => "lambda = 1 in row I: mu = 0, nu = 1; S_l(c-1); unit weights",
            Tbl22E => "lambda = 1 in row II: mu = 1, nu = 0; M_l(c-1); unit weights",
            Tbl22G => "lambda = 1 in row III: mu = 1, nu = 1; M_l(c-1); unit weights",
        }
    }

    pub fn descriptor(&self) -> Descriptor {
        Descriptor {
            tag: self.tag(),
            anchor: self.anchor(),
            shapes: self.shapes(),
            base: match self.base_constraint() {
                BaseConstraint::Any => "any",
                BaseConstraint::Kind(k) => k,
            },
            substitution: self.substitution(),
        }
    }

    /// Brings a point to the form this identity evaluates: forces the shape
    /// of theorems and corollaries, the `(mu, nu)` of table rows and
    /// `lambda = 1` for the classical table; rejects a base of the wrong kind.
    pub fn normalize(&self, pt: &IdentityPoint) -> Result<IdentityPoint> {
        let mut p = pt.clone();
        if let Some(shape) = self.fixed_shape() {
            p.shape = shape;
        }
        if let Some(fam) = self.table_family() {
            let (mu, nu) = match fam {
                Classical::Bernoulli => (0, 1),
                Classical::Euler => (1, 0),
                Classical::Genocchi => (1, 1),
            };
            p.mu = mu;
            p.nu = nu;
        }
        if self.is_classical_table() {
            p.lambda = Rational::one();
        }
        if let BaseConstraint::Kind(kind) = self.base_constraint() {
            if p.base.tag() != kind {
                return Err(Error::InvalidParameter(format!(
                    "{} is stated for base {kind}, got {}",
                    self.tag(),
                    p.base
                )));
            }
        }
        if p.m == 0 {
            return Err(Error::InvalidParameter(
                "identities need order m >= 1".into(),
            ));
        }
        if p.c == 0 || p.d == 0 {
            return Err(Error::InvalidParameter("c and d must be positive".into()));
        }
        if p.lambda.is_zero() {
            return Err(Error::InvalidParameter("lambda must be nonzero".into()));
        }
        Ok(p)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.tag() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.tag())
    }
}

impl<'de> Deserialize<'de> for IdentityId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// One evaluation point of an identity. Field order is the report sort key.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct IdentityPoint {
    #[serde(default = "default_shape")]
    pub shape: Shape,
    pub n: u32,
    pub m: u32,
    pub c: u32,
    pub d: u32,
    pub lambda: Rational,
    #[serde(default)]
    pub mu: i32,
    #[serde(default)]
    pub nu: u32,
    #[serde(default = "default_base")]
    pub base: BaseKind,
    pub x: Rational,
    pub y: Rational,
    #[serde(rename = "X")]
    pub big_x: Rational,
    #[serde(rename = "Y")]
    pub big_y: Rational,
}

fn default_shape() -> Shape {
    Shape::PowerSum
}

fn default_base() -> BaseKind {
    BaseKind::Unit
}

impl IdentityPoint {
    /// The unified-family parameters at this point (order `m`).
    pub fn family_params(&self) -> FamilyParams {
        FamilyParams::new(self.m, self.lambda.clone(), self.mu, self.nu, self.base)
    }

    /// The same point with `c` and `d` exchanged.
    pub fn swapped(&self) -> IdentityPoint {
        IdentityPoint {
            c: self.d,
            d: self.c,
            ..self.clone()
        }
    }
}

/// Registry listing sorted by tag.
pub fn catalog() -> Vec<Descriptor> {
    IdentityId::ALL.iter().map(IdentityId::descriptor).collect()
}
