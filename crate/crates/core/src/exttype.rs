//! Extension types of infinite symmetric products, Eilenberg-MacLane spaces
//! and Moore spaces.
//!
//! Complexes enter as the [`GradedGroup`] of their reduced homology. They are
//! assumed connected, so a degree-0 entry is rejected. By Dold-Thom, `SP(L)`
//! is determined by that data. Countability of `L` is vacuous at this level.
//!
//! Two Eilenberg-MacLane spaces `K(G, n)` and `K(G', n)` have the same
//! extension type iff `sigma(G) = sigma(G')` (First Bockstein Theorem); that
//! is the definition used throughout.

use std::fmt;

use serde::Serialize;

use crate::abelian::{sigma, sigma_matches_localization, tau, AdmissibleGroup, BocksteinGroup, SigmaSet};
use crate::error::{Error, Result};
use crate::graded::GradedGroup;
use crate::primes::{Prime, PrimeSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Clause {
    /// `H_i(L) = 0` for `1 <= i < n`.
    A,
    /// `sigma(H_n(L)) = sigma(G)`.
    B,
    /// `sigma(H_i(L)) ⊆ tau(G)` for all `i >= n`.
    C,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClauseFailure {
    pub clause: Clause,
    pub degree: u32,
    /// A Bockstein group witnessing the failure, when there is one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<BocksteinGroup>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClauseReport {
    pub verdict: bool,
    pub failures: Vec<ClauseFailure>,
}

impl ClauseReport {
    fn from_failures(failures: Vec<ClauseFailure>) -> ClauseReport {
        ClauseReport { verdict: failures.is_empty(), failures }
    }
}

fn connected(l: &GradedGroup) -> Result<()> {
    if l.get(0).is_some() {
        Err(Error::DegreeZero)
    } else {
        Ok(())
    }
}

/// Does `SP(L)` have the extension type of `K(G, n)`?
///
/// Holds iff (a) `L_i = 0` for `1 <= i < n`, (b) `sigma(L_n) = sigma(G)` and
/// (c) `sigma(L_i) ⊆ tau(G)` for every `i >= n`. Every violated clause is
/// reported with its degree.
pub fn sp_eq_km(l: &GradedGroup, g: &AdmissibleGroup, n: u32) -> Result<ClauseReport> {
    if n == 0 {
        return Err(Error::BadDegree(0));
    }
    let sg = sigma(g)?;
    let tg = tau(g)?;
    connected(l)?;

    let mut failures = Vec::new();
    for (i, _) in l.iter().filter(|&(i, _)| i < n) {
        failures.push(ClauseFailure { clause: Clause::A, degree: i, witness: None });
    }
    match l.get(n) {
        None => failures.push(ClauseFailure {
            clause: Clause::B,
            degree: n,
            witness: sg.first_difference(&SigmaSet::empty()),
        }),
        Some(ln) => {
            let sl = sigma(ln)?;
            if sl != sg {
                let witness = sl.first_difference(&sg).or_else(|| sg.first_difference(&sl));
                failures.push(ClauseFailure { clause: Clause::B, degree: n, witness });
            }
        }
    }
    for (i, li) in l.iter().filter(|&(i, _)| i >= n) {
        let sl = sigma(li)?;
        if !sl.is_subset(&tg) {
            failures.push(ClauseFailure { clause: Clause::C, degree: i, witness: sl.first_difference(&tg) });
        }
    }
    Ok(ClauseReport::from_failures(failures))
}

/// `H^*(SP(K); Z/p) = 0`: no nonzero degree has `Z/p^oo` in its Bockstein basis.
pub fn mod_p_trivial(k: &GradedGroup, p: Prime) -> Result<bool> {
    connected(k)?;
    for (_, g) in k.iter() {
        if sigma(g)?.contains(BocksteinGroup::Pruefer(p)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Which Eilenberg-MacLane type, if any, `SP(L)` has among the candidates a
/// finite-dimensional complex can have.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum FiniteTypeClass {
    /// `K(Z_(l), 1)`, with `l` nonempty.
    KZLoc { primes: PrimeSet },
    /// `K(Q, m)`, `m >= 1`.
    KQ { degree: u32 },
    NoFiniteType,
}

impl fmt::Display for FiniteTypeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteTypeClass::KZLoc { primes } if primes.is_all() => f.write_str("K(Z,1)"),
            FiniteTypeClass::KZLoc { primes } => write!(f, "K({},1)", AdmissibleGroup::localized(primes.clone())),
            FiniteTypeClass::KQ { degree } => write!(f, "K(Q,{degree})"),
            FiniteTypeClass::NoFiniteType => f.write_str("no finite type"),
        }
    }
}

fn nonempty(l: &GradedGroup) -> Result<()> {
    if l.is_empty() {
        Err(Error::TrivialGroup)
    } else {
        Ok(())
    }
}

/// Decide which of `K(Z_(l), 1)` or `K(Q, m)` the symmetric product `SP(L)`
/// matches. `K(Z_(∅), 1) = K(Q, 1)` is reported as `KQ { degree: 1 }`.
pub fn classify_finite_type(l: &GradedGroup) -> Result<FiniteTypeClass> {
    nonempty(l)?;
    connected(l)?;
    if let Some(l1) = l.get(1) {
        if let Some(primes) = sigma_matches_localization(&sigma(l1)?) {
            if !primes.is_empty() && sp_eq_km(l, &AdmissibleGroup::localized(primes.clone()), 1)?.verdict {
                return Ok(FiniteTypeClass::KZLoc { primes });
            }
        }
    }
    let m = l.lowest_degree().expect("nonempty");
    let lowest = l.get(m).expect("lowest degree present");
    if sigma(lowest)?.is_only_rational() && sp_eq_km(l, &AdmissibleGroup::rationals(), m)?.verdict {
        return Ok(FiniteTypeClass::KQ { degree: m });
    }
    Ok(FiniteTypeClass::NoFiniteType)
}

/// `SP(L)` has the extension type of `S^1 = K(Z, 1)`.
pub fn has_compact_type(l: &GradedGroup) -> Result<bool> {
    Ok(matches!(classify_finite_type(l)?, FiniteTypeClass::KZLoc { primes } if primes.is_all()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "answer", rename_all = "snake_case")]
pub enum MooreEmVerdict {
    /// `n = 1` and `K(G, 1) ~ K(Z_(l), 1)`.
    Localization { primes: PrimeSet },
    /// `n >= 2` and `K(G, n) ~ K(Q, n)`.
    Rational,
    No,
}

impl MooreEmVerdict {
    pub fn is_yes(&self) -> bool {
        !matches!(self, MooreEmVerdict::No)
    }
}

/// Are `M(G, n)` and `K(G, n)` of the same extension type?
pub fn moore_eq_em(g: &AdmissibleGroup, n: u32) -> Result<MooreEmVerdict> {
    if n == 0 {
        return Err(Error::BadDegree(0));
    }
    let s = sigma(g)?;
    Ok(if n == 1 {
        match sigma_matches_localization(&s) {
            Some(primes) => MooreEmVerdict::Localization { primes },
            None => MooreEmVerdict::No,
        }
    } else if s.is_only_rational() {
        MooreEmVerdict::Rational
    } else {
        MooreEmVerdict::No
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::moore_graded;

    fn p(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn z(n: u64) -> AdmissibleGroup {
        AdmissibleGroup::cyclic(n).unwrap()
    }

    fn gr(entries: &[(u32, AdmissibleGroup)]) -> GradedGroup {
        let mut g = GradedGroup::new();
        for (d, a) in entries {
            g.add_at(*d, a);
        }
        g
    }

    #[test]
    fn moore_spaces_pass() {
        for (g, n) in [(z(6), 1), (AdmissibleGroup::rationals(), 3), (AdmissibleGroup::integers(), 2)] {
            assert!(sp_eq_km(&moore_graded(&g, n).unwrap(), &g, n).unwrap().verdict);
        }
    }

    #[test]
    fn clause_examples() {
        let l = gr(&[(1, AdmissibleGroup::integers()), (3, AdmissibleGroup::rationals())]);
        assert!(sp_eq_km(&l, &AdmissibleGroup::integers(), 1).unwrap().verdict);

        let l = gr(&[(1, z(4)), (2, AdmissibleGroup::rationals())]);
        let r = sp_eq_km(&l, &z(4), 1).unwrap();
        assert!(!r.verdict);
        assert_eq!(r.failures, vec![ClauseFailure { clause: Clause::C, degree: 2, witness: Some(BocksteinGroup::Rational) }]);

        let r = sp_eq_km(&gr(&[(1, z(2)), (3, z(2))]), &z(2), 2).unwrap();
        assert_eq!(r.failures.iter().map(|f| (f.clause, f.degree)).collect::<Vec<_>>(), vec![(Clause::A, 1), (Clause::B, 2)]);

        let r = sp_eq_km(&gr(&[(2, z(3))]), &z(2), 2).unwrap();
        assert_eq!(r.failures[0].clause, Clause::B);
        assert_eq!(r.failures[0].witness, Some(BocksteinGroup::Cyclic(p(3))));
    }

    #[test]
    fn errors() {
        let with_zero = gr(&[(0, AdmissibleGroup::integers())]);
        assert_eq!(sp_eq_km(&with_zero, &z(2), 1), Err(Error::DegreeZero));
        assert_eq!(sp_eq_km(&GradedGroup::new(), &AdmissibleGroup::trivial(), 1), Err(Error::TrivialGroup));
        assert_eq!(mod_p_trivial(&with_zero, p(2)), Err(Error::DegreeZero));
        assert_eq!(classify_finite_type(&GradedGroup::new()), Err(Error::TrivialGroup));
        assert_eq!(moore_eq_em(&AdmissibleGroup::trivial(), 1), Err(Error::TrivialGroup));
        assert_eq!(moore_eq_em(&z(2), 0), Err(Error::BadDegree(0)));
    }

    #[test]
    fn mod_p_examples() {
        let inv2 = AdmissibleGroup::localized(PrimeSet::all_except([p(2)]));
        assert!(mod_p_trivial(&gr(&[(1, inv2.clone())]), p(2)).unwrap());
        assert!(!mod_p_trivial(&gr(&[(1, inv2)]), p(3)).unwrap());
        for q in [2, 3, 101] {
            assert!(!mod_p_trivial(&gr(&[(1, AdmissibleGroup::integers())]), p(q)).unwrap());
            assert!(mod_p_trivial(&gr(&[(1, AdmissibleGroup::rationals().pow(5))]), p(q)).unwrap());
        }
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            classify_finite_type(&gr(&[(1, AdmissibleGroup::integers())])).unwrap(),
            FiniteTypeClass::KZLoc { primes: PrimeSet::all() }
        );
        for m in 1..5 {
            assert_eq!(
                classify_finite_type(&gr(&[(m, AdmissibleGroup::rationals())])).unwrap(),
                FiniteTypeClass::KQ { degree: m }
            );
            assert!(!has_compact_type(&gr(&[(m, AdmissibleGroup::rationals())])).unwrap());
        }
        assert_eq!(classify_finite_type(&gr(&[(1, z(2))])).unwrap(), FiniteTypeClass::NoFiniteType);
        assert!(has_compact_type(&gr(&[(1, AdmissibleGroup::integers())])).unwrap());
        let z2loc = AdmissibleGroup::localized(PrimeSet::finite([p(2)]));
        assert!(!has_compact_type(&gr(&[(1, z2loc)])).unwrap());
        // higher rational homology stays inside tau(Z)
        let l = gr(&[(1, AdmissibleGroup::integers()), (4, AdmissibleGroup::rationals())]);
        assert!(has_compact_type(&l).unwrap());
    }

    #[test]
    fn moore_em_examples() {
        assert_eq!(moore_eq_em(&AdmissibleGroup::rationals(), 2).unwrap(), MooreEmVerdict::Rational);
        assert_eq!(moore_eq_em(&z(2), 1).unwrap(), MooreEmVerdict::No);
        assert_eq!(moore_eq_em(&AdmissibleGroup::integers(), 2).unwrap(), MooreEmVerdict::No);
        assert_eq!(
            moore_eq_em(&AdmissibleGroup::integers(), 1).unwrap(),
            MooreEmVerdict::Localization { primes: PrimeSet::all() }
        );
    }
}
