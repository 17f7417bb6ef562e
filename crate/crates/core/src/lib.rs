//! Exact computer algebra for monoidal Hom-Hopf algebras: axiom checking and
//! Yau twists, the graded universal differential calculus, first-order
//! calculi and their covariance, quantum Hom-tangent spaces, and the quantum
//! Hom-Lie bracket of a bicovariant calculus.
//!
//! Everything is computed over exact rationals; every identity is checked
//! with equality.

#![allow(clippy::needless_range_loop)]

pub mod bicov;
pub mod cli;
pub mod fixtures;
pub mod fodc;
pub mod graded;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod tangent;

pub use hopf::{HomHopfAlgebra, Level};
pub use linalg::{Matrix, Tensor3, Vector};
pub use scalar::Scalar;
