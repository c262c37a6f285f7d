//! Exact hyperbolic k-Fibonacci quaternion algebra.
//!
//! The crate has four layers: exact coefficient rings ([`ring`]), the
//! k-Fibonacci / k-Lucas sequence engine ([`kfib`]), the hyperbolic
//! quaternion algebra ([`hquat`]), and one verifier per classical identity
//! ([`identities`]). The [`cli`] module drives them and renders reports.
//!
//! Everything is exact: verdicts are EXACT or MISMATCH, never approximate.

pub mod cli;
pub mod hquat;
pub mod identities;
pub mod kfib;
pub mod ring;
