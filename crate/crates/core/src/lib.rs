//! Exact computations for quadratic operads generated by one binary
//! operation without symmetry.
//!
//! The crate is organised bottom-up:
//!
//! * [`treekit`] enumerates multilinear planar binary trees and implements
//!   grafting, relabelling and mirroring.
//! * [`idlang`] parses degree-three identities and builds symmetric-group
//!   stable relation spaces.
//! * [`exactla`] is sparse linear algebra over the rationals and prime fields.
//! * [`idealgen`] generates the operadic ideal in each arity and computes
//!   component dimensions.
//! * [`koszul`] and [`lieadm`] compute Koszul duals by two independent routes.
//! * [`genseries`] composes generating series and reports obstructions to
//!   Koszulity.
//! * [`presets`] holds the built-in relation sets.

pub mod error;
pub mod exactla;
pub mod genseries;
pub mod idealgen;
pub mod idlang;
pub mod koszul;
pub mod lieadm;
pub mod presets;
pub mod treekit;

pub use error::{Error, Result};

/// Arbitrary-precision rational used for every exact coefficient.
pub type Rational = num_rational::BigRational;

/// Version of this crate, recorded in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
