//! Exact integer linear algebra: Smith normal form, groups from presentations,
//! chain-complex homology and Moore-space data.
//!
//! The [`oracle`] submodule recomputes tensor and torsion products of finitely
//! presented groups from presentation matrices alone, independently of the
//! atom tables in [`crate::abelian`].

mod matrix;
pub mod oracle;
mod snf;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Deserialize;

pub use matrix::IntMatrix;
pub use snf::{snf, SnfResult};

use crate::abelian::{factor_modulus, AdmissibleGroup};
use crate::error::{Error, Result};
use crate::graded::GradedGroup;

/// Group with the given invariant factors and free rank, in canonical form.
fn group_from_factors(free_rank: usize, factors: &[BigInt]) -> Result<AdmissibleGroup> {
    let mut g = AdmissibleGroup::integers().pow(free_rank as u64);
    for d in factors {
        if !d.abs().is_one() {
            g.add_assign(&factor_modulus(d.magnitude())?);
        }
    }
    Ok(g)
}

/// Cokernel of `relations: Z^rows -> Z^generators`: the group generated by
/// `generators` symbols subject to one relation per row.
pub fn group_from_presentation(generators: usize, relations: &IntMatrix) -> Result<AdmissibleGroup> {
    if relations.cols() != generators {
        return Err(Error::ColumnMismatch { expected: generators, found: relations.cols() });
    }
    let factors = snf(relations).invariant_factors();
    group_from_factors(generators - factors.len(), &factors)
}

/// A finite based chain complex `C_N -> ... -> C_1 -> C_0`.
///
/// `boundaries[i - 1]` is `∂_i : C_i -> C_{i-1}`, a `ranks[i-1] x ranks[i]`
/// matrix whose columns are the boundaries of the `i`-cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    ranks: Vec<usize>,
    boundaries: Vec<IntMatrix>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ChainComplexDoc {
    ranks: Vec<usize>,
    boundaries: Vec<Vec<Vec<i64>>>,
}

impl ChainComplex {
    /// Validates shapes and `∂_i ∂_{i+1} = 0`, including the augmentation
    /// `C_0 -> Z` (every `∂_1` column must sum to zero).
    pub fn new(ranks: Vec<usize>, boundaries: Vec<IntMatrix>) -> Result<ChainComplex> {
        if ranks.is_empty() {
            return Err(Error::MalformedComplex("no chain groups".into()));
        }
        if boundaries.len() + 1 != ranks.len() {
            return Err(Error::MalformedComplex(format!(
                "{} chain groups need {} boundary matrices, got {}",
                ranks.len(),
                ranks.len() - 1,
                boundaries.len()
            )));
        }
        for (i, b) in boundaries.iter().enumerate() {
            let (r, c) = (ranks[i], ranks[i + 1]);
            if (b.rows(), b.cols()) != (r, c) {
                return Err(Error::MalformedComplex(format!(
                    "boundary {} is {}x{}, expected {r}x{c}",
                    i + 1,
                    b.rows(),
                    b.cols()
                )));
            }
        }
        let cc = ChainComplex { ranks, boundaries };
        let augmented = cc.augmented_boundaries();
        for i in 0..augmented.len() - 1 {
            if !augmented[i].mul(&augmented[i + 1]).is_zero() {
                return Err(Error::MalformedComplex(format!("boundary composition ∂_{i}∂_{} is nonzero", i + 1)));
            }
        }
        Ok(cc)
    }

    /// Parse the JSON document `{"ranks": [..], "boundaries": [[[..]]]}`.
    pub fn from_json(text: &str) -> Result<ChainComplex> {
        let doc: ChainComplexDoc =
            serde_json::from_str(text).map_err(|e| Error::MalformedComplex(e.to_string()))?;
        let mut mats = Vec::with_capacity(doc.boundaries.len());
        for (i, rows) in doc.boundaries.iter().enumerate() {
            let (r, c) = match (doc.ranks.get(i), doc.ranks.get(i + 1)) {
                (Some(&r), Some(&c)) => (r, c),
                _ => return Err(Error::MalformedComplex("more boundary matrices than chain groups allow".into())),
            };
            let mat = if rows.is_empty() && (r == 0 || c == 0) {
                IntMatrix::zeros(r, c)
            } else {
                IntMatrix::from_rows(rows, c).ok_or_else(|| {
                    Error::MalformedComplex(format!("boundary {} rows must have {c} entries", i + 1))
                })?
            };
            mats.push(mat);
        }
        ChainComplex::new(doc.ranks, mats)
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn boundaries(&self) -> &[IntMatrix] {
        &self.boundaries
    }

    /// `[ε, ∂_1, ..., ∂_N]` where `ε: C_0 -> Z` is the augmentation.
    fn augmented_boundaries(&self) -> Vec<IntMatrix> {
        let r0 = self.ranks[0];
        let eps = if r0 == 0 {
            IntMatrix::zeros(0, 0)
        } else {
            IntMatrix::from_vec(1, r0, vec![BigInt::one(); r0])
        };
        std::iter::once(eps).chain(self.boundaries.iter().cloned()).collect()
    }
}

/// Reduced integral homology `H̃_i = ker ∂_i / im ∂_{i+1}`, with `∂_0` the
/// augmentation.
pub fn chain_homology(c: &ChainComplex) -> Result<GradedGroup> {
    let augmented = c.augmented_boundaries();
    let snfs: Vec<SnfResult> = augmented.iter().map(snf).collect();
    let mut out = GradedGroup::new();
    for (i, &rank) in c.ranks.iter().enumerate() {
        let outgoing = snfs[i].rank();
        let (incoming_rank, torsion) = match snfs.get(i + 1) {
            Some(s) => (s.rank(), s.invariant_factors()),
            None => (0, Vec::new()),
        };
        let free = rank - outgoing - incoming_rank;
        out.insert(i as u32, group_from_factors(free, &torsion)?);
    }
    Ok(out)
}

/// Graded data of the Moore space `M(G, n)`: `G` in degree `n`, nothing else.
pub fn moore_graded(g: &AdmissibleGroup, n: u32) -> Result<GradedGroup> {
    if g.is_trivial() {
        return Err(Error::TrivialGroup);
    }
    if n == 0 {
        return Err(Error::BadDegree(0));
    }
    let mut out = GradedGroup::new();
    out.insert(n, g.clone());
    Ok(out)
}
