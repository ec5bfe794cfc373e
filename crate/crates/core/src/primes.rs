//! Primes and finite-or-cofinite sets of primes.

use std::collections::BTreeSet;
use std::fmt;

use num_prime::nt_funcs::is_prime64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A rational prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Prime> {
        if is_prime64(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p.to_string()))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// The least prime strictly greater than `n`.
    pub fn next_after(n: u64) -> Prime {
        let mut c = n + 1;
        while !is_prime64(c) {
            c += 1;
        }
        Prime(c)
    }

    /// The least prime not contained in `avoid`.
    pub fn fresh<'a>(avoid: impl IntoIterator<Item = &'a Prime>) -> Prime {
        let avoid: BTreeSet<u64> = avoid.into_iter().map(|p| p.0).collect();
        let mut p = Prime(2);
        while avoid.contains(&p.0) {
            p = Prime::next_after(p.0);
        }
        p
    }
}

impl TryFrom<u64> for Prime {
    type Error = Error;

    fn try_from(p: u64) -> Result<Prime> {
        Prime::new(p)
    }
}

impl From<Prime> for u64 {
    fn from(p: Prime) -> u64 {
        p.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite set of primes, or the complement of one.
///
/// `Cofinite(vec![])` is the set of all primes and `Finite(vec![])` is empty.
/// The member list is strictly increasing; use the constructors to keep it so.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PrimeSet {
    Finite(Vec<Prime>),
    /// The listed primes are the excluded ones.
    Cofinite(Vec<Prime>),
}

fn normalized(primes: impl IntoIterator<Item = Prime>) -> Vec<Prime> {
    let set: BTreeSet<Prime> = primes.into_iter().collect();
    set.into_iter().collect()
}

impl PrimeSet {
    pub fn all() -> PrimeSet {
        PrimeSet::Cofinite(Vec::new())
    }

    pub fn empty() -> PrimeSet {
        PrimeSet::Finite(Vec::new())
    }

    pub fn finite(primes: impl IntoIterator<Item = Prime>) -> PrimeSet {
        PrimeSet::Finite(normalized(primes))
    }

    pub fn all_except(primes: impl IntoIterator<Item = Prime>) -> PrimeSet {
        PrimeSet::Cofinite(normalized(primes))
    }

    pub fn contains(&self, p: Prime) -> bool {
        match self {
            PrimeSet::Finite(v) => v.binary_search(&p).is_ok(),
            PrimeSet::Cofinite(v) => v.binary_search(&p).is_err(),
        }
    }

    pub fn is_all(&self) -> bool {
        matches!(self, PrimeSet::Cofinite(v) if v.is_empty())
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, PrimeSet::Finite(v) if v.is_empty())
    }

    /// The primes named explicitly (members or exclusions).
    pub fn listed(&self) -> &[Prime] {
        match self {
            PrimeSet::Finite(v) | PrimeSet::Cofinite(v) => v,
        }
    }

    pub fn intersection(&self, other: &PrimeSet) -> PrimeSet {
        use PrimeSet::*;
        match (self, other) {
            (Finite(a), Finite(b)) => Finite(a.iter().filter(|p| b.contains(p)).copied().collect()),
            (Finite(a), Cofinite(b)) | (Cofinite(b), Finite(a)) => {
                Finite(a.iter().filter(|p| !b.contains(p)).copied().collect())
            }
            (Cofinite(a), Cofinite(b)) => PrimeSet::all_except(a.iter().chain(b).copied()),
        }
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[Prime]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
        match self {
            PrimeSet::Finite(v) => write!(f, "{{{}}}", list(v)),
            PrimeSet::Cofinite(v) if v.is_empty() => f.write_str("all primes"),
            PrimeSet::Cofinite(v) => write!(f, "all primes except {{{}}}", list(v)),
        }
    }
}

impl Serialize for PrimeSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("PrimeSet", 2)?;
        match self {
            PrimeSet::Finite(v) => {
                st.serialize_field("kind", "finite")?;
                st.serialize_field("primes", v)?;
            }
            PrimeSet::Cofinite(v) => {
                st.serialize_field("kind", "cofinite")?;
                st.serialize_field("primes", v)?;
            }
        }
        st.end()
    }
}
