//! Evaluation codes of quadrics in finite projective spaces.
//!
//! This crate constructs the linear code obtained by evaluating every
//! homogeneous quadratic form at the points of a non-singular quadric of
//! PG(N,q), and provides the machinery needed to study its small weights:
//!
//! * exact arithmetic in small Galois fields ([`gf`]),
//! * exact linear algebra over those fields ([`linalg`]),
//! * point, hyperplane and subspace enumeration in PG(N,q) ([`projective`]),
//! * quadratic forms, quadrics and their full classification into cones
//!   over non-singular bases ([`quadric`]),
//! * the evaluation code itself with exhaustive weight spectra ([`code`]),
//! * pencils of quadrics and scans for reducible pencil members ([`pencil`]),
//! * closed-form weight/count tables for hyperplane-pair intersections and
//!   the verifier reconciling them against brute force ([`tables`]).
//!
//! Everything is exact integer arithmetic; there are no tolerances anywhere.
//!
//! # Example
//!
//! Build the code of the hyperbolic quadric of PG(5,2) and compute its
//! small-weight spectrum:
//!
//! ```
//! use quadric_codes::gf::Field;
//! use quadric_codes::projective::GeometryContext;
//! use quadric_codes::quadric::{standard_form, Family};
//! use quadric_codes::code::{build_code, weight_spectrum};
//!
//! let ctx = GeometryContext::new(5, Field::new(2, 1).unwrap()).unwrap();
//! let f = standard_form(Family::Hyperbolic, &ctx).unwrap();
//! let code = build_code(&f, &ctx).unwrap();
//! assert_eq!(code.length(), 35);
//! assert_eq!(code.dimension(), 20);
//!
//! let spectrum = weight_spectrum(&code, Some(12), 1, false).unwrap();
//! assert_eq!(spectrum.count_at(6), 280);
//! ```

pub mod code;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod pencil;
pub mod projective;
pub mod quadric;
pub mod tables;

pub use error::{Error, Result};
