//! Decide whether a generalized flag variety `G/P` is an equivariant
//! compactification of the vector group `G_a^n`.
//!
//! A parabolic subgroup is encoded by its marked simple roots. For a simple
//! group the answer is "yes" exactly when the nilradical of the parabolic
//! is commutative, or when `(G, P)` is one of three exceptional pairs whose
//! flag variety is also the flag variety of a larger group with commutative
//! nilradical. For a semisimple group every simple factor must qualify.
//!
//! Modules:
//!
//! - [`rootsys`]: root systems from Cartan matrices, highest roots, duality.
//! - [`weyl`]: reflections, orbits, Weyl dimension formula, minuscule test.
//! - [`parabolic`]: markings, the parabolic grading, nilradicals.
//! - [`classify`]: the per-factor decision, exceptional table, enumeration.
//! - [`liealg`]: Chevalley-basis structure constants as a bracket-level
//!   cross-check.
//! - [`cli`]: spec-string grammar and the command implementations.

pub mod classify;
pub mod cli;
pub mod error;
pub mod liealg;
pub mod parabolic;
pub mod rootsys;
pub mod weyl;

pub use error::{Error, Result};
pub use rootsys::{build_root_system, Family, Root, RootSystem, SimpleType};
