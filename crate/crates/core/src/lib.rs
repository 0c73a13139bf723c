//! Exact invariants of fiber products of rational elliptic surfaces.
//!
//! Pipeline: Weierstrass data (f, g) over the projective line -> places with
//! valuation profiles -> Kodaira fiber classification -> fiber-product
//! singularity table with small-resolution / projectivity verdicts -> Hodge
//! numbers and Euler characteristics -> deformation-space dimension and
//! generic splitting -> Kummer-fibration invariants of the fiberwise
//! involution quotient.
//!
//! All arithmetic is exact (arbitrary-precision rationals); there is no
//! floating point anywhere in this crate.

pub mod config;
pub mod deform;
pub mod error;
pub mod hodge;
pub mod kodaira;
pub mod kummer;
pub mod places;
pub mod product;
pub mod qpoly;
pub mod rational;

pub use error::Error;
pub use rational::Rational;
