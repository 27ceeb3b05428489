//! Exact angular-momentum recoupling symbols.
//!
//! Triangle checks, Wigner 6j / 9j symbols and the 12j symbol of the first
//! kind, evaluated either exactly (rational coefficients times square roots,
//! [`SurdSum`]) or in fixed-precision big floats. A brute-force
//! Clebsch-Gordan contraction oracle pins every sign convention.

mod bigfloat;
mod cg;
mod factorial;
mod half;
mod ninej;
mod oracle;
mod sixj;
mod surd;
mod twelvej;

pub use bigfloat::{BigF, MIN_PRECISION_BITS};
pub use half::{phase_from_twice, triangle_ok, HalfInt};
pub use ninej::ninej_t;
pub use oracle::{BruteForceOracle, DEFAULT_ORACLE_BOUND};
pub use sixj::{canonical_6j, ExactEngine, FloatEngine, SymbolEngine, SymbolValue};
pub use surd::SurdSum;
pub use twelvej::{twelvej_t, AngmomError, TwelveJInput};
