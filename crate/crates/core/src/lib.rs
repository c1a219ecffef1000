//! Exact computation of 2-variable Apostol-type polynomials (Apostol
//! Bernoulli, Euler and Genocchi families over several base functions),
//! generalized power sums, and pointwise-exact verification of their
//! symmetry identities.
//!
//! All arithmetic is over arbitrary-precision rationals; there is no
//! floating point anywhere in the computation path.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod families;
pub mod identities;
#[cfg(any(test, feature = "oracle"))]
pub mod oracle;
pub mod series;

pub use algebra::{binomial, factorial, Monomial, Point, PolyXY, Rational, Ring, Var};
pub use error::{Error, Result};
pub use families::{
    apostol_kernel, atp_sequence, base_phi, classical_reduce, gen_power_sum, gen_power_sums,
    power_sum_direct, sequence_from_kernel, BaseKind, Classical, FamilyParams, PolySeq, SumKind,
};
pub use identities::{IdentityId, IdentityPoint, Shape, VerificationReport};
pub use series::Series;
