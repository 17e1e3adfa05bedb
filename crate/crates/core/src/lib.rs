//! Exact-arithmetic computer algebra for symmetric spaces.
//!
//! The crate decides whether irreducible symmetric spaces admit
//! orientation-reversing isometries and computes the admissible Brouwer
//! degree sets of maps between the corresponding locally symmetric
//! spaces. Everything is exact: root systems are generated by reflection
//! closure from Cartan data, cohomology rings are quotient rings with
//! rational Groebner bases, and signatures come from the Hirzebruch
//! L-genus evaluated against a calibrated fundamental class.
//!
//! Module map:
//! - [`rootsys`]: simple root systems, Weyl data, Dynkin diagram
//!   automorphisms and the parity classification of complex-type spaces.
//! - [`polyring`]: sparse exact-rational polynomials, symmetric-function
//!   constructors, Buchberger bases and normal forms.
//! - [`spaces`]: the catalog of symmetric-space families with parameter
//!   validation and root-theoretic dual-pair data.
//! - [`cohomology`]: quotient-ring presentations of `H*(U/K; Q)`, Hirsch
//!   Poincare polynomials, Euler characteristics, calibrated integration.
//! - [`charclass`]: Chern/Pontrjagin classes from complementary roots,
//!   Pontrjagin numbers, L-genus signatures and quoted closed forms.
//! - [`decide`]: the orientation-reversal classifier, degree sets,
//!   minimal-index arithmetic and the fixed-point certificate.

pub mod charclass;
pub mod cohomology;
pub mod decide;
pub mod error;
pub mod polyring;
pub mod rootsys;
pub mod spaces;

pub use error::{Error, Result};
