use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{SerializeMap, SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use super::group::{tensor, tor, AdmissibleGroup};
use crate::error::{Error, Result};
use crate::primes::{Prime, PrimeSet};

/// One of the Bockstein groups `Q`, `Z/p`, `Z/p^oo`, `Z_(p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BocksteinGroup {
    Rational,
    Cyclic(Prime),
    Pruefer(Prime),
    Local(Prime),
}

impl BocksteinGroup {
    pub fn to_group(self) -> AdmissibleGroup {
        match self {
            BocksteinGroup::Rational => AdmissibleGroup::rationals(),
            BocksteinGroup::Cyclic(p) => AdmissibleGroup::cyclic_prime_power(p, 1),
            BocksteinGroup::Pruefer(p) => AdmissibleGroup::pruefer(p),
            BocksteinGroup::Local(p) => AdmissibleGroup::localized(PrimeSet::finite([p])),
        }
    }

    pub fn prime(self) -> Option<Prime> {
        match self {
            BocksteinGroup::Rational => None,
            BocksteinGroup::Cyclic(p) | BocksteinGroup::Pruefer(p) | BocksteinGroup::Local(p) => Some(p),
        }
    }

    /// The per-prime flag this group occupies, if it is not `Q`.
    pub fn flag(self) -> Option<PrimePattern> {
        match self {
            BocksteinGroup::Rational => None,
            BocksteinGroup::Cyclic(_) => Some(PrimePattern::P),
            BocksteinGroup::Pruefer(_) => Some(PrimePattern::PINF),
            BocksteinGroup::Local(_) => Some(PrimePattern::PLOC),
        }
    }

    pub fn at_prime(flag: PrimePattern, p: Prime) -> BocksteinGroup {
        match flag {
            PrimePattern::P => BocksteinGroup::Cyclic(p),
            PrimePattern::PINF => BocksteinGroup::Pruefer(p),
            PrimePattern::PLOC => BocksteinGroup::Local(p),
            _ => panic!("not a single flag: {flag:?}"),
        }
    }
}

impl fmt::Display for BocksteinGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BocksteinGroup::Rational => f.write_str("Q"),
            BocksteinGroup::Cyclic(p) => write!(f, "Z/{p}"),
            BocksteinGroup::Pruefer(p) => write!(f, "Z/{p}^oo"),
            BocksteinGroup::Local(p) => write!(f, "Z_({p})"),
        }
    }
}

impl Serialize for BocksteinGroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Which of `Z/p`, `Z/p^oo`, `Z_(p)` are present at one prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PrimePattern(u8);

impl PrimePattern {
    pub const EMPTY: PrimePattern = PrimePattern(0);
    /// `Z/p`
    pub const P: PrimePattern = PrimePattern(1);
    /// `Z/p^oo`
    pub const PINF: PrimePattern = PrimePattern(2);
    /// `Z_(p)`
    pub const PLOC: PrimePattern = PrimePattern(4);
    pub const FULL: PrimePattern = PrimePattern(7);

    /// Flags in the order `P`, `PINF`, `PLOC`.
    pub const FLAGS: [PrimePattern; 3] = [Self::P, Self::PINF, Self::PLOC];

    pub fn from_bits(bits: u8) -> PrimePattern {
        PrimePattern(bits & 7)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn contains(self, flag: PrimePattern) -> bool {
        self.0 & flag.0 == flag.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: PrimePattern) -> PrimePattern {
        PrimePattern(self.0 | other.0)
    }

    pub fn is_subset(self, other: PrimePattern) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn with(self, flag: PrimePattern, on: bool) -> PrimePattern {
        if on {
            self.union(flag)
        } else {
            self
        }
    }

    pub fn flags(self) -> impl Iterator<Item = PrimePattern> {
        Self::FLAGS.into_iter().filter(move |f| self.contains(*f))
    }
}

impl Serialize for PrimePattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let names: Vec<&str> = self
            .flags()
            .map(|f| match f {
                PrimePattern::P => "Zp",
                PrimePattern::PINF => "ZpInf",
                _ => "Zploc",
            })
            .collect();
        let mut seq = s.serialize_seq(Some(names.len()))?;
        for n in names {
            seq.serialize_element(n)?;
        }
        seq.end()
    }
}

/// A set of Bockstein groups: membership of `Q`, a pattern shared by all
/// unlisted primes, and finitely many exceptional primes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SigmaSet {
    rational: bool,
    default: PrimePattern,
    exceptions: BTreeMap<Prime, PrimePattern>,
}

impl SigmaSet {
    /// Builds a set, discarding exceptions equal to the default.
    pub fn new(rational: bool, default: PrimePattern, exceptions: impl IntoIterator<Item = (Prime, PrimePattern)>) -> SigmaSet {
        let exceptions = exceptions.into_iter().filter(|(_, pat)| *pat != default).collect();
        SigmaSet { rational, default, exceptions }
    }

    pub fn empty() -> SigmaSet {
        SigmaSet::new(false, PrimePattern::EMPTY, [])
    }

    pub fn rational(&self) -> bool {
        self.rational
    }

    pub fn default_pattern(&self) -> PrimePattern {
        self.default
    }

    pub fn exceptions(&self) -> &BTreeMap<Prime, PrimePattern> {
        &self.exceptions
    }

    pub fn pattern_at(&self, p: Prime) -> PrimePattern {
        self.exceptions.get(&p).copied().unwrap_or(self.default)
    }

    pub fn contains(&self, h: BocksteinGroup) -> bool {
        match (h.prime(), h.flag()) {
            (Some(p), Some(flag)) => self.pattern_at(p).contains(flag),
            _ => self.rational,
        }
    }

    pub fn is_empty(&self) -> bool {
        !self.rational && self.default.is_empty() && self.exceptions.is_empty()
    }

    /// `{Q}` exactly.
    pub fn is_only_rational(&self) -> bool {
        self.rational && self.default.is_empty() && self.exceptions.is_empty()
    }

    /// Primes at which `self` and `other` may differ from their common
    /// generic behaviour, plus one fresh representative of all other primes.
    pub fn witness_primes(&self, other: &SigmaSet) -> Vec<Prime> {
        let mut v: Vec<Prime> = self.exceptions.keys().chain(other.exceptions.keys()).copied().collect();
        v.push(Prime::fresh(&v));
        v.sort();
        v.dedup();
        v
    }

    pub fn union(&self, other: &SigmaSet) -> SigmaSet {
        self.combine(other, PrimePattern::union)
    }

    fn combine(&self, other: &SigmaSet, op: impl Fn(PrimePattern, PrimePattern) -> PrimePattern) -> SigmaSet {
        let primes: Vec<Prime> = self.exceptions.keys().chain(other.exceptions.keys()).copied().collect();
        SigmaSet::new(
            self.rational || other.rational,
            op(self.default, other.default),
            primes.into_iter().map(|p| (p, op(self.pattern_at(p), other.pattern_at(p)))),
        )
    }

    pub fn is_subset(&self, other: &SigmaSet) -> bool {
        (!self.rational || other.rational)
            && self
                .witness_primes(other)
                .into_iter()
                .all(|p| self.pattern_at(p).is_subset(other.pattern_at(p)))
    }

    /// The least member of `self` missing from `other`, with `Q` first and
    /// then primes in increasing order.
    pub fn first_difference(&self, other: &SigmaSet) -> Option<BocksteinGroup> {
        if self.rational && !other.rational {
            return Some(BocksteinGroup::Rational);
        }
        self.differences(other).next()
    }

    /// Per-prime members of `self` missing from `other`, over the witness primes.
    pub fn differences<'a>(&'a self, other: &'a SigmaSet) -> impl Iterator<Item = BocksteinGroup> + 'a {
        self.witness_primes(other).into_iter().flat_map(move |p| {
            let mine = self.pattern_at(p);
            let theirs = other.pattern_at(p);
            mine.flags()
                .filter(move |f| !theirs.contains(*f))
                .map(move |f| BocksteinGroup::at_prime(f, p))
        })
    }
}

impl fmt::Display for SigmaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.rational {
            parts.push("Q".into());
        }
        for (&p, pat) in &self.exceptions {
            parts.extend(pat.flags().map(|fl| BocksteinGroup::at_prime(fl, p).to_string()));
        }
        if !self.default.is_empty() {
            let generic: Vec<&str> = self
                .default
                .flags()
                .map(|fl| match fl {
                    PrimePattern::P => "Z/p",
                    PrimePattern::PINF => "Z/p^oo",
                    _ => "Z_(p)",
                })
                .collect();
            let qualifier = if self.exceptions.is_empty() { "every prime p" } else { "every other prime p" };
            parts.push(format!("{} for {qualifier}", generic.join(", ")));
        }
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl Serialize for SigmaSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Exceptions<'a>(&'a BTreeMap<Prime, PrimePattern>);
        impl Serialize for Exceptions<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for (p, pat) in self.0 {
                    m.serialize_entry(&p.to_string(), pat)?;
                }
                m.end()
            }
        }
        let mut st = s.serialize_struct("SigmaSet", 3)?;
        st.serialize_field("rational", &self.rational)?;
        st.serialize_field("default", &self.default)?;
        st.serialize_field("exceptions", &Exceptions(&self.exceptions))?;
        st.end()
    }
}

fn pattern_of(g: &AdmissibleGroup, p: Prime) -> PrimePattern {
    let zp = AdmissibleGroup::cyclic_prime_power(p, 1);
    let pru = AdmissibleGroup::pruefer(p);
    let has_zp = !tensor(&zp, g).is_trivial();
    let has_loc = !tensor(&pru, g).is_trivial();
    let has_inf = !tor(&pru, g).is_trivial() || has_zp;
    PrimePattern::EMPTY
        .with(PrimePattern::P, has_zp)
        .with(PrimePattern::PINF, has_inf)
        .with(PrimePattern::PLOC, has_loc)
}

/// The Bockstein basis of `G`.
///
/// Membership follows four clauses: `Q` iff `Q ⊗ G != 0`; `Z/p` iff
/// `Z/p ⊗ G != 0`; `Z_(p)` iff `Z/p^oo ⊗ G != 0`; `Z/p^oo` iff
/// `Tor(Z/p^oo, G) != 0` or `Z/p ⊗ G != 0`. Each clause is evaluated with
/// [`tensor`] and [`tor`]; primes not mentioned by `G` all behave like one
/// fresh prime.
pub fn sigma(g: &AdmissibleGroup) -> Result<SigmaSet> {
    if g.is_trivial() {
        return Err(Error::TrivialGroup);
    }
    let primes = g.primes();
    let rational = !tensor(&AdmissibleGroup::rationals(), g).is_trivial();
    let default = pattern_of(g, Prime::fresh(&primes));
    Ok(SigmaSet::new(rational, default, primes.iter().map(|&p| (p, pattern_of(g, p)))))
}

/// `tau(G)`: `sigma(G)` plus `Z/p` whenever `Z/p^oo ∈ sigma(G)`, plus `Z_(p)`
/// whenever both `Z/p^oo` and `Q` are in `sigma(G)`.
pub fn tau(g: &AdmissibleGroup) -> Result<SigmaSet> {
    let s = sigma(g)?;
    let enlarge = |pat: PrimePattern| {
        let inf = pat.contains(PrimePattern::PINF);
        pat.with(PrimePattern::P, inf).with(PrimePattern::PLOC, inf && s.rational)
    };
    Ok(SigmaSet::new(
        s.rational,
        enlarge(s.default),
        s.exceptions.iter().map(|(&p, &pat)| (p, enlarge(pat))),
    ))
}

/// The prime set `l` with `S = sigma(Z_(l))`, if there is one.
pub fn sigma_matches_localization(s: &SigmaSet) -> Option<PrimeSet> {
    let full_or_empty = |pat: PrimePattern| pat == PrimePattern::FULL || pat.is_empty();
    if !s.rational || !full_or_empty(s.default) || !s.exceptions.values().all(|&pat| full_or_empty(pat)) {
        return None;
    }
    Some(if s.default == PrimePattern::FULL {
        PrimeSet::all_except(s.exceptions.keys().copied())
    } else {
        PrimeSet::finite(s.exceptions.keys().copied())
    })
}
