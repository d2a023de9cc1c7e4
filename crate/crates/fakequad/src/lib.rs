//! Exact-arithmetic toolkit for quaternionic fake quadrics.
//!
//! A fake quadric is a smooth minimal surface of general type with the same
//! numerical invariants as P^1 x P^1: c_1^2 = 8, c_2 = 4, q = p_g = 0. The
//! quaternionic ones arise from norm-one groups of maximal orders in
//! quaternion algebras over real quadratic fields. This crate computes,
//! entirely in exact arithmetic:
//!
//! - Euler numbers of the arithmetic quotients (Shimizu's volume formula
//!   with the Dedekind zeta value from Siegel's finite sum),
//! - torsion and torsion-freeness criteria for congruence subgroups, and
//!   the automorphism groups of the known fake quadrics,
//! - fixed-point configurations of automorphisms via the holomorphic
//!   Lefschetz formula, with the resulting cyclic quotient singularities,
//! - Hirzebruch-Jung resolutions, discrepancies, and the invariants of the
//!   minimal resolution of each quotient surface,
//! - the reverse constructions: weight-4 binary codes, double/bidouble and
//!   triple covers that rebuild a fake quadric from a quotient.
//!
//! Start with the `examples/` directory for runnable walkthroughs of each
//! capability, or the `fakequad` binary for the command-line interface.

pub mod arith;
pub mod covers;
pub mod error;
pub mod exact;
pub mod fixedpoints;
pub mod quadfield;
pub mod quatalg;
pub mod quotient;
pub mod registry;
pub mod singres;

pub mod cli;

pub use error::{Error, Result};
pub use exact::Rational;
