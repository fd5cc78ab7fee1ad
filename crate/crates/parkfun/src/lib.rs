//! Exact computation with generalized parking functions and their
//! symmetric functions.
//!
//! A preference sequence is an `(r,k)`-parking function when its increasing
//! rearrangement `b` satisfies `b_i <= k + (i-1) r`. This crate enumerates
//! such sequences, computes the Frobenius characteristics of the
//! coordinate-permuting symmetric-group action in the five classical bases
//! of the ring of symmetric functions, manipulates the associated generating
//! series (powers, inverses, logarithms, a q-refinement), constructs the
//! dual objects attached to negative powers of the generating series with
//! their cycle-lemma rotation machinery, and works with the multiplicative
//! basis built from the length-`n` Frobenius characteristics.
//!
//! All arithmetic is exact rational arithmetic; there is no floating point
//! anywhere in the crate. Identities are validated by the machine-checkable
//! suites in [`verify`], which the companion command-line tool exposes as
//! `parkfun verify <suite>`.
//!
//! Module map:
//!
//! - [`partition`]: integer partitions and generalized multinomials
//! - [`symfun`]: the ring of symmetric functions (five bases, omega, the
//!   Hall scalar product, Jacobi-Trudi, principal specializations)
//! - [`parking`]: membership, enumeration, counting, Frobenius
//!   characteristics, and the q-statistic
//! - [`series`]: truncated formal power series with symmetric-function
//!   coefficients, including the compositional-inverse check
//! - [`closed_forms`]: closed-form expansions valid for any integer `k`,
//!   special values, and the mixed scalar-product formula
//! - [`bijection`]: the component-merge bijection between tuples of
//!   `(r,1)`-parking functions and `(r,k)`-parking functions
//! - [`dual`]: the dual set, its rotation orbits, and constructive
//!   per-orbit enumeration
//! - [`fbasis`]: the parking-function basis of the ring and its
//!   unitriangular transition to the `h` basis
//! - [`input`]: parsers and serializers for the textual interchange formats
//! - [`verify`]: the acceptance suites

pub mod bijection;
pub mod closed_forms;
mod convert;
pub mod dual;
pub mod error;
pub mod fbasis;
pub mod input;
pub mod parking;
pub mod partition;
pub mod rational;
pub mod series;
pub mod symfun;
pub mod verify;

pub use convert::{degree_cap, set_degree_cap};
pub use error::{Error, Result};
pub use partition::{enumerate_partitions, gen_multinomial, Partition};
pub use rational::{format_rat, Rat};
pub use symfun::{schur_in_h, schur_principal_specialization, Basis, SymFn};
