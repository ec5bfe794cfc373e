//! Admissible abelian groups and their Bockstein calculus.
//!
//! An admissible group is a finite direct sum of atoms `Z_(l)` (with `l` finite
//! or cofinite), `Z/p^k` and `Z/p^oo`. The class contains every Bockstein group,
//! `Z`, `Q`, `Z/n` and `Z[1/p]`, and is closed under direct sum, tensor product
//! and torsion product, so every operation here stays inside it.

mod group;
mod sigma;

pub use group::{canonicalize, factor_modulus, tensor, tor, AdmissibleGroup, Atom, AtomExpr, GroupExpr};
pub use sigma::{sigma, sigma_matches_localization, tau, BocksteinGroup, PrimePattern, SigmaSet};
