//! Exact computations with root systems in lattices, Weyl group orbits,
//! orbit-averaged characters and their polynomial avatars.
//!
//! The crate is organized around a small number of exact-arithmetic layers:
//!
//! * [`lattice`] — ambient rational metric spaces, weights, lattices, and the
//!   maximal root system of a lattice;
//! * [`roots`] — classical and exceptional root systems with fixed simple
//!   systems, sub-root systems, components and embedded type labels;
//! * [`weyl`] — dominant representatives, signed orbits and symmetry groups
//!   between the Weyl group and the full automorphism group;
//! * [`subsystems`] — the catalog of named sub-root systems, classical index
//!   constructions and exhaustive conjugacy-class enumeration;
//! * [`characters`] — the character ring in the orbit-sum basis: `F_{Φ,W}`,
//!   leading terms, equality tests and exact linear-relation discovery;
//! * [`lp`] — the determinant polynomials `a_n, b_n, b'_n, c_n, d_n`, the
//!   embedding `E`, the specializations `ψ` and `E'`, and the generating
//!   functions `f_{Φ,Ψ}`;
//! * [`reports`] — verification of the reference tables and of the relation
//!   catalog, with machine-readable reports.
//!
//! All arithmetic is exact: rational numbers are arbitrary-precision and no
//! floating point is used anywhere. Every public type is immutable after
//! construction and safe to share across threads.

pub mod characters;
pub mod error;
pub mod golden;
pub mod json;
pub mod lattice;
pub mod linalg;
pub mod lp;
pub mod rat;
pub mod reports;
pub mod roots;
pub mod subsystems;
pub mod weyl;

pub use error::{Error, Result};
pub use rat::Q;

// Big integers appear in public signatures (relation vectors, coordinate
// data); re-export the type so downstream crates need no direct dependency.
pub use num_bigint::BigInt;
