//! Exact-arithmetic toolkit connecting discrete concavity with stable polynomials.
//!
//! The crate has three layers:
//!
//! * lattice combinatorics — finite point sets with the jump-system /
//!   Δ-matroid / matroid exchange axioms ([`lattice`]), and rational-valued
//!   functions on them with the M-concavity axioms and hive inequalities
//!   ([`dfunc`]);
//! * an ordered field of finite generalized Puiseux series ([`puiseux`]) and
//!   sparse polynomials over it ([`tpoly`]), including tropicalization, which
//!   sends a polynomial to the valuations of its coefficients;
//! * stability certificates ([`stability`]) — Newton/valuation-Newton
//!   inequalities, Hutchinson's bound, Sturm chains, rhombus-quotient bounds —
//!   and instance generators ([`generators`]) whose tropicalizations are
//!   provably M-concave.
//!
//! Everything is exact: rationals via `num_rational::BigRational`, series with
//! rational exponents and coefficients, no floating point anywhere. Checkers
//! return [`report::CheckReport`] values whose witnesses can be re-verified
//! independently of this crate.

pub mod dfunc;
pub mod error;
pub mod generators;
pub mod lattice;
pub mod puiseux;
pub mod rat;
pub mod report;
pub mod stability;
pub mod tpoly;

pub use error::Error;
pub use report::{CheckReport, Witness};
