//! Tensor and torsion products of finitely presented groups, computed from
//! presentation matrices and Smith normal forms only.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{group_from_presentation, snf, IntMatrix};
use crate::abelian::AdmissibleGroup;
use crate::error::Result;

/// `generators` symbols subject to the rows of `relations`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePresentation {
    pub generators: usize,
    pub relations: IntMatrix,
}

impl FinitePresentation {
    pub fn new(generators: usize, relations: IntMatrix) -> FinitePresentation {
        assert_eq!(relations.cols(), generators, "relation width must equal generator count");
        FinitePresentation { generators, relations }
    }

    pub fn group(&self) -> Result<AdmissibleGroup> {
        group_from_presentation(self.generators, &self.relations)
    }

    /// Cyclic decomposition orders: invariant factors padded with `0` for each
    /// free summand (`Z/0 = Z`).
    pub fn cyclic_orders(&self) -> Vec<BigInt> {
        let factors = snf(&self.relations).invariant_factors();
        let free = self.generators - factors.len();
        factors.into_iter().chain(std::iter::repeat_n(BigInt::zero(), free)).collect()
    }
}

/// `A ⊗ B` presented on `gA·gB` generators by the block relations
/// `[R_A ⊗ I ; I ⊗ R_B]`.
pub fn tensor_by_presentation(a: &FinitePresentation, b: &FinitePresentation) -> Result<AdmissibleGroup> {
    let left = a.relations.kronecker(&IntMatrix::identity(b.generators));
    let right = IntMatrix::identity(a.generators).kronecker(&b.relations);
    group_from_presentation(a.generators * b.generators, &left.vstack(&right))
}

/// `Tor(A, B) = ⊕ Z/gcd(a_i, b_j)` over pairs of finite cyclic orders.
pub fn tor_by_presentation(a: &FinitePresentation, b: &FinitePresentation) -> Result<AdmissibleGroup> {
    let mut gcds = Vec::new();
    for x in a.cyclic_orders().iter().filter(|x| !x.is_zero()) {
        for y in b.cyclic_orders().iter().filter(|y| !y.is_zero()) {
            gcds.push(x.gcd(y));
        }
    }
    group_from_presentation(gcds.len(), &IntMatrix::diagonal(&gcds))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: i64) -> FinitePresentation {
        FinitePresentation::new(1, IntMatrix::diagonal(&[n]))
    }

    #[test]
    fn z4_z6() {
        let two = AdmissibleGroup::cyclic(2).unwrap();
        assert_eq!(tensor_by_presentation(&cyclic(4), &cyclic(6)).unwrap(), two);
        assert_eq!(tor_by_presentation(&cyclic(4), &cyclic(6)).unwrap(), two);
    }

    #[test]
    fn free_summands() {
        let z = FinitePresentation::new(1, IntMatrix::zeros(0, 1));
        assert_eq!(tensor_by_presentation(&z, &cyclic(5)).unwrap(), AdmissibleGroup::cyclic(5).unwrap());
        assert!(tor_by_presentation(&z, &cyclic(5)).unwrap().is_trivial());
        assert_eq!(tensor_by_presentation(&z, &z).unwrap(), AdmissibleGroup::integers());
    }
}
