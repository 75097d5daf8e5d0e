//! Exact valuation calculus around Rees valuations of ideals.
//!
//! - [`numcore`]: big integers, rationals, subgroups of ℚ.
//! - [`monomial`]: Newton polyhedra, Rees valuations and integral closures
//!   of monomial ideals in at most three variables.
//! - [`dvrcalc`]: symbolic DVR extension towers and their invariants.
//! - [`puiseux`]: an independent value-group and Newton-polygon check of
//!   the ramification of `u^{1/k}` extensions.
//! - [`itoh`]: Itoh valuation reports, radicality tests and the semilocal
//!   Dedekind exponent model.
//! - [`krull`]: consistent systems and realization planning.
//! - [`cli`]: report rendering for the `reesval` binary.

pub mod cli;
pub mod dvrcalc;
pub mod itoh;
pub mod krull;
pub mod monomial;
pub mod numcore;
pub mod puiseux;
