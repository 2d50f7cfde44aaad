//! Grothendieck polynomials, Lascoux polynomials and Lascoux atoms, computed
//! exactly by several independent routes:
//!
//! * Demazure–Lascoux divided-difference operators ([`operators`]),
//! * a bialternant determinant for the symmetric case ([`operators::grothendieck_det`]),
//! * partition functions of colored five-vertex lattice models ([`lattice`]),
//! * generating functions of set-valued tableaux and skyline tableaux
//!   ([`tableaux`], [`skyline`]).
//!
//! [`yangbaxter`] checks the RLL relation for each lattice model and
//! [`verify`] bundles the cross-checks into runnable suites.

pub mod algebra;
pub mod gt;
pub mod lattice;
pub mod operators;
pub mod skyline;
pub mod symgroup;
pub mod tableaux;
pub mod verify;
pub mod yangbaxter;

pub use num_bigint::BigInt;

pub use algebra::{AlgebraError, Coeff, MPoly, Monomial, ParsePolyError};
pub use symgroup::{Partition, Permutation, SymGroupError};

/// Polynomials with arbitrary-precision integer coefficients.
pub type Poly = MPoly<BigInt>;
