//! Quasi-plurisubharmonic Green functions on P^1, P^2 and P^1 x P^1.
//!
//! The crate computes and cross-checks:
//! - exact Lelong numbers of polynomial log-norm potentials,
//! - numerical Lelong estimates from sphere means,
//! - constrained convex envelopes (radial and toric) and their
//!   Monge-Ampere masses via gradient-image areas,
//! - grid Monge-Ampere measures with Dirac-mass accounting,
//! - dynamical Green functions of weakly regular polynomial endomorphisms.

pub mod error;
pub mod exact;
pub mod poly;
pub mod geometry;
pub mod potential;
pub mod families;

pub use error::{Error, Result};
