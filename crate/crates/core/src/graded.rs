//! Graded groups and the Künneth / universal-coefficient calculus.
//!
//! A [`GradedGroup`] stands in either for a CW complex (degree `i` holds the
//! reduced homology `H̃_i`) or for a compactum (degree `d` holds the
//! cohomology `H^d`). Cohomology with coefficients can live in degree `-1`
//! and cohomology with coefficients in a complex in any integer degree, so
//! those results are [`IntGraded`].
//!
//! Reversed cohomology is the same data with the sign of the degree flipped:
//! `rH^n(X) = H^{-n}(X)`. Everything here is indexed by ordinary cohomological
//! degree; use [`IntGraded::reversed`] for the reversed indexing.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::abelian::{tensor, tor, AdmissibleGroup, BocksteinGroup};
use crate::error::{Error, Result};
use crate::extnat::ExtNat;
use crate::primes::Prime;

/// Finitely supported family of groups in degrees `0, 1, 2, ...`.
/// Trivial entries are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GradedGroup {
    entries: BTreeMap<u32, AdmissibleGroup>,
}

/// Finitely supported family of groups indexed by all integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IntGraded {
    entries: BTreeMap<i64, AdmissibleGroup>,
}

macro_rules! graded_common {
    ($ty:ident, $deg:ty) => {
        impl $ty {
            pub fn new() -> Self {
                Self::default()
            }

            /// Replace the entry at `degree`; a trivial group clears it.
            pub fn insert(&mut self, degree: $deg, g: AdmissibleGroup) {
                if g.is_trivial() {
                    self.entries.remove(&degree);
                } else {
                    self.entries.insert(degree, g);
                }
            }

            /// Direct-sum `g` into the entry at `degree`.
            pub fn add_at(&mut self, degree: $deg, g: &AdmissibleGroup) {
                if !g.is_trivial() {
                    self.entries.entry(degree).or_default().add_assign(g);
                }
            }

            pub fn get(&self, degree: $deg) -> Option<&AdmissibleGroup> {
                self.entries.get(&degree)
            }

            /// The entry at `degree`, trivial if absent.
            pub fn at(&self, degree: $deg) -> AdmissibleGroup {
                self.entries.get(&degree).cloned().unwrap_or_default()
            }

            pub fn is_empty(&self) -> bool {
                self.entries.is_empty()
            }

            pub fn degrees(&self) -> impl Iterator<Item = $deg> + '_ {
                self.entries.keys().copied()
            }

            pub fn iter(&self) -> impl Iterator<Item = ($deg, &AdmissibleGroup)> + '_ {
                self.entries.iter().map(|(&d, g)| (d, g))
            }

            pub fn lowest_degree(&self) -> Option<$deg> {
                self.entries.keys().next().copied()
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("{")?;
                for (i, (d, g)) in self.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{d}: {g}")?;
                }
                f.write_str("}")
            }
        }

        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.entries.len()))?;
                for (d, g) in &self.entries {
                    m.serialize_entry(&d.to_string(), &g.to_string())?;
                }
                m.end()
            }
        }
    };
}

graded_common!(GradedGroup, u32);
graded_common!(IntGraded, i64);

impl GradedGroup {
    /// Every prime mentioned by some entry.
    pub fn primes(&self) -> Vec<Prime> {
        let mut v: Vec<Prime> = self.entries.values().flat_map(|g| g.primes()).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn remove(&mut self, degree: u32) -> Option<AdmissibleGroup> {
        self.entries.remove(&degree)
    }
}

impl IntGraded {
    /// Re-index by `n -> -n`.
    pub fn reversed(&self) -> IntGraded {
        IntGraded { entries: self.entries.iter().map(|(&d, g)| (-d, g.clone())).collect() }
    }

    /// Re-index by `n -> n + by`.
    pub fn shifted(&self, by: i64) -> IntGraded {
        IntGraded { entries: self.entries.iter().map(|(&d, g)| (d + by, g.clone())).collect() }
    }
}

impl From<&GradedGroup> for IntGraded {
    fn from(g: &GradedGroup) -> IntGraded {
        IntGraded { entries: g.iter().map(|(d, a)| (i64::from(d), a.clone())).collect() }
    }
}

fn nontrivial(g: &AdmissibleGroup) -> Result<()> {
    if g.is_trivial() {
        Err(Error::TrivialGroup)
    } else {
        Ok(())
    }
}

/// `H_n(K; G) = K_n ⊗ G ⊕ Tor(K_{n-1}, G)`; `G` may be trivial here.
fn homology_with(k: &GradedGroup, g: &AdmissibleGroup) -> GradedGroup {
    let mut out = GradedGroup::new();
    for (d, kd) in k.iter() {
        out.add_at(d, &tensor(kd, g));
        out.add_at(d + 1, &tor(kd, g));
    }
    out
}

/// `H^d(X; G) = X_d ⊗ G ⊕ Tor(X_{d+1}, G)`, `d >= -1`.
fn cohomology_with(x: &GradedGroup, g: &AdmissibleGroup) -> IntGraded {
    let mut out = IntGraded::new();
    for (d, xd) in x.iter() {
        let d = i64::from(d);
        out.add_at(d, &tensor(xd, g));
        out.add_at(d - 1, &tor(xd, g));
    }
    out
}

/// Homology of the complex `K` with coefficients in `G`, by the universal
/// coefficient formula.
pub fn coef_homology(k: &GradedGroup, g: &AdmissibleGroup) -> Result<GradedGroup> {
    nontrivial(g)?;
    Ok(homology_with(k, g))
}

/// Homological dimension `dim_G(K)`: the least degree where `H_*(K; G)` is
/// nonzero, or `Inf`.
pub fn dim_coef(k: &GradedGroup, g: &AdmissibleGroup) -> Result<ExtNat> {
    nontrivial(g)?;
    Ok(lowest(&homology_with(k, g)))
}

fn lowest(g: &GradedGroup) -> ExtNat {
    g.lowest_degree().map_or(ExtNat::Inf, |d| ExtNat::Fin(u64::from(d)))
}

/// Connectivity index, `dim_Z(K)`.
pub fn cin(k: &GradedGroup) -> ExtNat {
    lowest(k)
}

/// Reduced homology of the smash product `K ∧ L` by the Künneth formula:
/// `H_n = ⊕_{i+j=n} (K_i ⊗ L_j ⊕ Tor(K_{i-1}, L_j))`.
pub fn smash(k: &GradedGroup, l: &GradedGroup) -> GradedGroup {
    let mut out = GradedGroup::new();
    for (j, lj) in l.iter() {
        for (i, h) in homology_with(k, lj).iter() {
            out.add_at(i + j, h);
        }
    }
    out
}

/// `r`-fold suspension: every degree moves up by `r`.
pub fn suspend(k: &GradedGroup, r: u32) -> GradedGroup {
    let mut out = GradedGroup::new();
    for (d, g) in k.iter() {
        out.insert(d + r, g.clone());
    }
    out
}

/// Cohomology of a compactum with coefficients in `G`, from its integral
/// cohomology `X` (degree `d` holds `H^d(X)`):
/// `H^d(X; G) = H^d(X) ⊗ G ⊕ Tor(H^{d+1}(X), G)`.
pub fn coef_cohomology(x: &GradedGroup, g: &AdmissibleGroup) -> Result<IntGraded> {
    nontrivial(g)?;
    Ok(cohomology_with(x, g))
}

/// The two evaluations of `H^*(X; K)`, cohomology of a compactum with
/// coefficients in a complex, both indexed by cohomological degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pairing {
    /// `H^N(X; K) = ⊕_n H^{N+n}(X; K_n)`
    pub via_cohomology: IntGraded,
    /// `H^N(X; K) = ⊕_i H_i(K; H^{N+i}(X))`
    pub via_homology: IntGraded,
}

impl Pairing {
    pub fn agrees(&self) -> bool {
        self.via_cohomology == self.via_homology
    }
}

/// Evaluate `H^*(X; K)` through both universal coefficient routes.
pub fn pairing(x: &GradedGroup, k: &GradedGroup) -> Pairing {
    let mut via_cohomology = IntGraded::new();
    for (n, kn) in k.iter() {
        for (d, h) in cohomology_with(x, kn).iter() {
            via_cohomology.add_at(d - i64::from(n), h);
        }
    }
    let mut via_homology = IntGraded::new();
    for (d, xd) in x.iter() {
        for (i, h) in homology_with(k, xd).iter() {
            via_homology.add_at(i64::from(d) - i64::from(i), h);
        }
    }
    Pairing { via_cohomology, via_homology }
}

/// The three equivalent vanishing conditions for `H^n(X; K)` above `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Vanishing {
    /// `H^n(X; K) = 0` for all `n >= m`.
    pub cohomology: bool,
    /// `H_i(K; H^n(X)) = 0` for all `i <= n - m`.
    pub homology_side: bool,
    /// `H^i(X; H_n(K)) = 0` for all `i >= n + m`.
    pub cohomology_side: bool,
}

impl Vanishing {
    pub fn agree(&self) -> bool {
        self.cohomology == self.homology_side && self.homology_side == self.cohomology_side
    }
}

pub fn vanishing_check(x: &GradedGroup, k: &GradedGroup, m: i64) -> Vanishing {
    let cohomology = pairing(x, k).via_cohomology.degrees().all(|n| n < m);
    let homology_side = x.iter().all(|(n, xn)| {
        homology_with(k, xn).degrees().all(|i| i64::from(i) > i64::from(n) - m)
    });
    let cohomology_side = k.iter().all(|(n, kn)| {
        cohomology_with(x, kn).degrees().all(|i| i < i64::from(n) + m)
    });
    Vanishing { cohomology, homology_side, cohomology_side }
}

/// Outcome of comparing `K <=_Gr L` over the Bockstein coefficient family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LeqGr {
    /// `dim_G(K) <= dim_G(L)` for every coefficient in `checked`.
    Holds { checked: Vec<BocksteinGroup> },
    /// A coefficient group with `dim_G(K) > dim_G(L)`.
    Fails { coefficient: BocksteinGroup, dim_k: ExtNat, dim_l: ExtNat },
}

impl LeqGr {
    pub fn holds(&self) -> bool {
        matches!(self, LeqGr::Holds { .. })
    }
}

impl Serialize for LeqGr {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(None)?;
        match self {
            LeqGr::Holds { checked } => {
                m.serialize_entry("holds", &true)?;
                m.serialize_entry("checked", checked)?;
            }
            LeqGr::Fails { coefficient, dim_k, dim_l } => {
                m.serialize_entry("holds", &false)?;
                m.serialize_entry("coefficient", coefficient)?;
                m.serialize_entry("dim_k", dim_k)?;
                m.serialize_entry("dim_l", dim_l)?;
            }
        }
        m.end()
    }
}

/// The coefficient family used by [`leq_gr`]: `Q`, and `Z/p`, `Z/p^oo`,
/// `Z_(p)` for every prime of `K` or `L` plus one fresh prime standing for
/// all the others.
pub fn bockstein_family(k: &GradedGroup, l: &GradedGroup) -> Vec<BocksteinGroup> {
    let mut primes = k.primes();
    primes.extend(l.primes());
    primes.push(Prime::fresh(&primes));
    primes.sort();
    primes.dedup();
    let mut family = vec![BocksteinGroup::Rational];
    for p in primes {
        family.extend([BocksteinGroup::Cyclic(p), BocksteinGroup::Pruefer(p), BocksteinGroup::Local(p)]);
    }
    family
}

/// Decide `dim_G(K) <= dim_G(L)` over [`bockstein_family`]. A failure is a
/// genuine counterexample to `K <=_Gr L`.
pub fn leq_gr(k: &GradedGroup, l: &GradedGroup) -> LeqGr {
    let checked = bockstein_family(k, l);
    for &h in &checked {
        let g = h.to_group();
        let dim_k = lowest(&homology_with(k, &g));
        let dim_l = lowest(&homology_with(l, &g));
        if dim_k > dim_l {
            return LeqGr::Fails { coefficient: h, dim_k, dim_l };
        }
    }
    LeqGr::Holds { checked }
}
