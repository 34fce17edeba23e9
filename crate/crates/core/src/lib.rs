//! Qudit graph states and graph codes over carriers of arbitrary dimension
//! `D >= 2`, with the surrounding toolbox: exact `Z_D` linear algebra,
//! generalized Pauli products, code search and verification, encoding-circuit
//! synthesis, location of encoded information in carrier subsets,
//! entanglement-transformation criteria, local-cloning simulation, and
//! equientangled basis families.
//!
//! Everything combinatorial is exact integer arithmetic mod `D`; dense
//! complex linear algebra appears only in oracles and simulators, guarded by
//! a configurable dimension cap.

pub mod dense;
pub mod error;
pub mod modring;
pub mod pauli;

pub use error::{Error, Result};
