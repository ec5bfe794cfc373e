//! Symbolic calculus of graded abelian groups and Bockstein theory.
//!
//! The crate is organised bottom-up:
//!
//! - [`abelian`]: admissible abelian groups (finite sums of `Z_(l)`, `Z/p^k` and
//!   `Z/p^oo` atoms), their tensor and torsion products, and the Bockstein bases
//!   `sigma(G)` and `tau(G)`.
//! - [`presentation`]: exact integer linear algebra (Smith normal form), groups
//!   from presentations, chain-complex homology and Moore-space data. It also
//!   hosts the presentation-based oracle used to cross-check [`abelian`].
//! - [`graded`]: graded groups standing in for complexes (reduced homology) or
//!   compacta (cohomology), with coefficient homology, Künneth smash products and
//!   the cohomology pairings.
//! - [`bockstein`]: Bockstein dimension functions standing in for compacta.
//! - [`exttype`]: decision procedures for extension types of infinite symmetric
//!   products, Eilenberg-MacLane spaces and Moore spaces.

pub mod abelian;
pub mod bockstein;
pub mod error;
pub mod exttype;
pub mod extnat;
pub mod graded;
pub mod presentation;
pub mod primes;

pub use abelian::{
    sigma, sigma_matches_localization, tau, tensor, tor, AdmissibleGroup, Atom, AtomExpr,
    BocksteinGroup, GroupExpr, PrimePattern, SigmaSet,
};
pub use bockstein::{BocksteinFunction, MinimalComplex, Triple, Violation};
pub use error::{Error, Result};
pub use extnat::ExtNat;
pub use exttype::{Clause, ClauseFailure, ClauseReport, FiniteTypeClass, MooreEmVerdict};
pub use graded::{GradedGroup, IntGraded, LeqGr, Pairing, Vanishing};
pub use presentation::{ChainComplex, IntMatrix, SnfResult};
pub use primes::{Prime, PrimeSet};
