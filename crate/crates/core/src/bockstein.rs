//! Bockstein dimension functions.
//!
//! A compactum is never constructed here. Its dimension type is recorded as a
//! [`BocksteinFunction`]: a value `dim_H(X)` for each Bockstein group `H`.
//! Any function satisfying the Bockstein inequalities is realised by some
//! compactum, so "there is a compactum with ..." becomes "there is a valid
//! Bockstein function with ...". Value `0` is accepted syntactically; the
//! realisation argument is only relied on for values `>= 1`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::abelian::{sigma, tau, AdmissibleGroup, BocksteinGroup, PrimePattern, SigmaSet};
use crate::error::{Error, Result};
use crate::extnat::ExtNat;
use crate::graded::GradedGroup;
use crate::primes::Prime;

/// Values at `Z/p`, `Z/p^oo` and `Z_(p)` for one prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Triple {
    #[serde(rename = "Zp")]
    pub zp: ExtNat,
    #[serde(rename = "ZpInf")]
    pub zp_inf: ExtNat,
    #[serde(rename = "Zploc")]
    pub zp_loc: ExtNat,
}

impl Triple {
    pub fn uniform(v: ExtNat) -> Triple {
        Triple { zp: v, zp_inf: v, zp_loc: v }
    }

    pub fn get(&self, flag: PrimePattern) -> ExtNat {
        match flag {
            PrimePattern::P => self.zp,
            PrimePattern::PINF => self.zp_inf,
            PrimePattern::PLOC => self.zp_loc,
            _ => panic!("not a single flag: {flag:?}"),
        }
    }

    fn set(&mut self, flag: PrimePattern, v: ExtNat) {
        match flag {
            PrimePattern::P => self.zp = v,
            PrimePattern::PINF => self.zp_inf = v,
            PrimePattern::PLOC => self.zp_loc = v,
            _ => panic!("not a single flag: {flag:?}"),
        }
    }

    fn max_over(&self, pattern: PrimePattern) -> Option<ExtNat> {
        pattern.flags().map(|f| self.get(f)).max()
    }

    fn max(&self) -> ExtNat {
        self.zp.max(self.zp_inf).max(self.zp_loc)
    }

    fn le(&self, other: &Triple) -> bool {
        self.zp <= other.zp && self.zp_inf <= other.zp_inf && self.zp_loc <= other.zp_loc
    }
}

/// `dim_H(X)` for every Bockstein group `H`: a value at `Q`, a triple shared
/// by all unlisted primes, and finitely many exceptional primes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BocksteinFunction {
    rational: ExtNat,
    default: Triple,
    exceptions: BTreeMap<Prime, Triple>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    #[serde(rename = "Q")]
    rational: ExtNat,
    default: Triple,
    #[serde(default)]
    exceptions: BTreeMap<String, Triple>,
}

impl BocksteinFunction {
    /// Exceptions equal to the default triple are dropped.
    pub fn new(rational: ExtNat, default: Triple, exceptions: impl IntoIterator<Item = (Prime, Triple)>) -> Self {
        let exceptions = exceptions.into_iter().filter(|(_, t)| *t != default).collect();
        BocksteinFunction { rational, default, exceptions }
    }

    pub fn constant(v: ExtNat) -> Self {
        BocksteinFunction::new(v, Triple::uniform(v), [])
    }

    pub fn rational(&self) -> ExtNat {
        self.rational
    }

    pub fn default_triple(&self) -> Triple {
        self.default
    }

    pub fn exceptions(&self) -> &BTreeMap<Prime, Triple> {
        &self.exceptions
    }

    pub fn triple_at(&self, p: Prime) -> Triple {
        self.exceptions.get(&p).copied().unwrap_or(self.default)
    }

    pub fn value(&self, h: BocksteinGroup) -> ExtNat {
        match (h.prime(), h.flag()) {
            (Some(p), Some(flag)) => self.triple_at(p).get(flag),
            _ => self.rational,
        }
    }

    /// Pointwise `self <= other`.
    pub fn le(&self, other: &BocksteinFunction) -> bool {
        self.rational <= other.rational
            && self.default.le(&other.default)
            && self.exceptions.keys().chain(other.exceptions.keys()).all(|&p| self.triple_at(p).le(&other.triple_at(p)))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Document = serde_json::from_str(text).map_err(|e| Error::BadDocument(e.to_string()))?;
        let mut exceptions = Vec::with_capacity(doc.exceptions.len());
        for (key, t) in doc.exceptions {
            let p: u64 = key.parse().map_err(|_| Error::BadDocument(format!("exception key {key:?} is not a prime")))?;
            exceptions.push((Prime::new(p)?, t));
        }
        Ok(BocksteinFunction::new(doc.rational, doc.default, exceptions))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

impl Serialize for BocksteinFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Document {
            rational: self.rational,
            default: self.default,
            exceptions: self.exceptions.iter().map(|(p, t)| (p.to_string(), *t)).collect(),
        }
        .serialize(s)
    }
}

impl fmt::Display for BocksteinFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = |t: &Triple| format!("(Z/p: {}, Z/p^oo: {}, Z_(p): {})", t.zp, t.zp_inf, t.zp_loc);
        write!(f, "Q: {}; generic prime: {}", self.rational, t(&self.default))?;
        for (p, tr) in &self.exceptions {
            write!(f, "; p = {p}: {}", t(tr))?;
        }
        Ok(())
    }
}

/// A failed Bockstein inequality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// `None` means the shared triple of all unlisted primes.
    pub prime: Option<Prime>,
    /// Which inequality, numbered 1 to 5.
    pub inequality: u8,
    pub message: String,
}

fn check_triple(q: ExtNat, t: &Triple, prime: Option<Prime>, out: &mut Vec<Violation>) {
    let mut fail = |inequality: u8, message: String| out.push(Violation { prime, inequality, message });
    if !(t.zp_inf <= t.zp && t.zp <= t.zp_inf + 1) {
        fail(1, format!("need Z/p^oo <= Z/p <= Z/p^oo + 1, have {} and {}", t.zp_inf, t.zp));
    }
    if t.zp > t.zp_loc {
        fail(2, format!("need Z/p <= Z_(p), have {} > {}", t.zp, t.zp_loc));
    }
    if q > t.zp_loc {
        fail(3, format!("need Q <= Z_(p), have {q} > {}", t.zp_loc));
    }
    if t.zp_loc > q.max(t.zp_inf + 1) {
        fail(4, format!("need Z_(p) <= max(Q, Z/p^oo + 1), have {} > max({q}, {})", t.zp_loc, t.zp_inf + 1));
    }
    let loc_minus_one = match t.zp_loc {
        ExtNat::Inf => ExtNat::Inf,
        ExtNat::Fin(0) => q,
        ExtNat::Fin(n) => ExtNat::Fin(n - 1).max(q),
    };
    if t.zp_inf > q.max(loc_minus_one) {
        fail(5, format!("need Z/p^oo <= max(Q, Z_(p) - 1), have {} with Q = {q}, Z_(p) = {}", t.zp_inf, t.zp_loc));
    }
}

/// All violated Bockstein inequalities; empty iff `alpha` is a Bockstein function.
pub fn validate_bf(alpha: &BocksteinFunction) -> Vec<Violation> {
    let mut out = Vec::new();
    check_triple(alpha.rational, &alpha.default, None, &mut out);
    for (&p, t) in &alpha.exceptions {
        check_triple(alpha.rational, t, Some(p), &mut out);
    }
    out
}

fn max_over_sigma(alpha: &BocksteinFunction, s: &SigmaSet) -> ExtNat {
    let mut best: Option<ExtNat> = s.rational().then_some(alpha.rational);
    let mut consider = |v: Option<ExtNat>| {
        if let Some(v) = v {
            best = Some(best.map_or(v, |b| b.max(v)));
        }
    };
    for &p in s.exceptions().keys().chain(alpha.exceptions.keys()) {
        consider(alpha.triple_at(p).max_over(s.pattern_at(p)));
    }
    // infinitely many primes are listed in neither
    consider(alpha.default.max_over(s.default_pattern()));
    best.expect("sigma of a nontrivial group is nonempty")
}

/// `dim_G(X) = max { dim_H(X) : H in sigma(G) }`.
pub fn bf_dim(alpha: &BocksteinFunction, g: &AdmissibleGroup) -> Result<ExtNat> {
    Ok(max_over_sigma(alpha, &sigma(g)?))
}

/// Covering dimension: the largest value of `alpha`.
pub fn covering_dim(alpha: &BocksteinFunction) -> ExtNat {
    alpha.exceptions.values().map(Triple::max).fold(alpha.rational.max(alpha.default.max()), ExtNat::max)
}

/// `SP(K) ∈ AE(X)`: `dim_{K_i}(X) <= i` for every nonzero degree `i`.
pub fn sp_in_ae(alpha: &BocksteinFunction, k: &GradedGroup) -> bool {
    k.iter().all(|(i, g)| {
        let s = sigma(g).expect("graded entries are nontrivial");
        max_over_sigma(alpha, &s) <= ExtNat::Fin(u64::from(i))
    })
}

/// Finite values of one prime's triple; `None` where the value is infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FiniteTriple {
    #[serde(rename = "Zp")]
    pub zp: Option<u64>,
    #[serde(rename = "ZpInf")]
    pub zp_inf: Option<u64>,
    #[serde(rename = "Zploc")]
    pub zp_loc: Option<u64>,
}

impl From<Triple> for FiniteTriple {
    fn from(t: Triple) -> Self {
        FiniteTriple { zp: t.zp.finite(), zp_inf: t.zp_inf.finite(), zp_loc: t.zp_loc.finite() }
    }
}

impl FiniteTriple {
    fn entries(&self) -> impl Iterator<Item = (PrimePattern, u64)> {
        [(PrimePattern::P, self.zp), (PrimePattern::PINF, self.zp_inf), (PrimePattern::PLOC, self.zp_loc)]
            .into_iter()
            .filter_map(|(f, v)| v.map(|v| (f, v)))
    }
}

/// Wedge data of the minimal complex `⋁ K(H, dim_H(X))` over the Bockstein
/// groups `H` with finite `dim_H(X)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalComplex {
    #[serde(rename = "Q")]
    pub rational: Option<u64>,
    pub default: FiniteTriple,
    pub exceptions: BTreeMap<Prime, FiniteTriple>,
}

impl MinimalComplex {
    pub fn is_empty(&self) -> bool {
        self.rational.is_none()
            && self.default.entries().next().is_none()
            && self.exceptions.values().all(|t| t.entries().next().is_none())
    }

    /// Summands at the exceptional primes and `Q`, in order.
    pub fn listed_summands(&self) -> Vec<(BocksteinGroup, u64)> {
        let mut out: Vec<(BocksteinGroup, u64)> = self.rational.map(|v| (BocksteinGroup::Rational, v)).into_iter().collect();
        for (&p, t) in &self.exceptions {
            out.extend(t.entries().map(|(f, v)| (BocksteinGroup::at_prime(f, p), v)));
        }
        out
    }

    /// Summands shared by every unlisted prime, as `(flag, degree)`.
    pub fn generic_summands(&self) -> Vec<(PrimePattern, u64)> {
        self.default.entries().collect()
    }
}

impl fmt::Display for MinimalComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.listed_summands().iter().map(|(h, v)| format!("K({h},{v})")).collect();
        for (flag, v) in self.generic_summands() {
            let h = match flag {
                PrimePattern::P => "Z/p",
                PrimePattern::PINF => "Z/p^oo",
                _ => "Z_(p)",
            };
            let qualifier = if self.exceptions.is_empty() { "every prime p" } else { "every other prime p" };
            parts.push(format!("K({h},{v}) for {qualifier}"));
        }
        if parts.is_empty() {
            f.write_str("point")
        } else {
            f.write_str(&parts.join(" v "))
        }
    }
}

/// Wedge data of the cohomological-dimension complex `K_X`.
pub fn coh_dim_min(alpha: &BocksteinFunction) -> MinimalComplex {
    let default = FiniteTriple::from(alpha.default);
    MinimalComplex {
        rational: alpha.rational.finite(),
        default,
        exceptions: alpha
            .exceptions
            .iter()
            .map(|(&p, &t)| (p, FiniteTriple::from(t)))
            .filter(|(_, t)| *t != default)
            .collect(),
    }
}

fn nonzero_degree(m: u32) -> Result<u64> {
    if m == 0 {
        Err(Error::BadDegree(0))
    } else {
        Ok(u64::from(m))
    }
}

/// When `sigma(F)` is not inside `tau(G)`: a Bockstein function with
/// `dim_G = m` and `dim_F = Inf`. It takes the value `m` on `sigma(G)`,
/// `m + 1` on `tau(G) \ sigma(G)` and `Inf` elsewhere.
pub fn witness_7_3(g: &AdmissibleGroup, f: &AdmissibleGroup, m: u32) -> Result<BocksteinFunction> {
    let m = nonzero_degree(m)?;
    let (sg, tg, sf) = (sigma(g)?, tau(g)?, sigma(f)?);
    if sf.is_subset(&tg) {
        return Err(Error::NotSeparable);
    }
    let level = |in_sigma: bool, in_tau: bool| match (in_sigma, in_tau) {
        (true, _) => ExtNat::Fin(m),
        (false, true) => ExtNat::Fin(m + 1),
        (false, false) => ExtNat::Inf,
    };
    let triple = |s: PrimePattern, t: PrimePattern| {
        let mut out = Triple::uniform(ExtNat::Inf);
        for flag in PrimePattern::FLAGS {
            out.set(flag, level(s.contains(flag), t.contains(flag)));
        }
        out
    };
    let primes: Vec<Prime> = sg.exceptions().keys().chain(tg.exceptions().keys()).copied().collect();
    Ok(BocksteinFunction::new(
        level(sg.rational(), tg.rational()),
        triple(sg.default_pattern(), tg.default_pattern()),
        primes.into_iter().map(|p| (p, triple(sg.pattern_at(p), tg.pattern_at(p)))),
    ))
}

/// When `sigma(F) ⊆ tau(G)` and `sigma(F) \ sigma(G)` is nonempty: a Bockstein
/// function with `dim_F = dim = m + 1` and `dim_G = m`.
///
/// If some `Z/q` lies in `sigma(F) \ sigma(G)`, the smallest such `q` gets
/// `m + 1` at `Z/q` and `Z_(q)`; otherwise the smallest `q` with `Z_(q)` in
/// the difference gets `m + 1` at `Z_(q)`. Everything else is `m`.
pub fn witness_7_4(g: &AdmissibleGroup, f: &AdmissibleGroup, m: u32) -> Result<BocksteinFunction> {
    let m = nonzero_degree(m)?;
    let (sg, tg, sf) = (sigma(g)?, tau(g)?, sigma(f)?);
    if !sf.is_subset(&tg) {
        return Err(Error::NotApplicable("sigma(F) is not contained in tau(G)".into()));
    }
    let missing = |flag: PrimePattern| {
        sf.witness_primes(&sg)
            .into_iter()
            .find(|&p| sf.pattern_at(p).contains(flag) && !sg.pattern_at(p).contains(flag))
    };
    let base = Triple::uniform(ExtNat::Fin(m));
    let (q, raised) = if let Some(q) = missing(PrimePattern::P) {
        (q, Triple { zp: ExtNat::Fin(m + 1), zp_loc: ExtNat::Fin(m + 1), ..base })
    } else if let Some(q) = missing(PrimePattern::PLOC) {
        (q, Triple { zp_loc: ExtNat::Fin(m + 1), ..base })
    } else {
        return Err(Error::NotApplicable("sigma(F) \\ sigma(G) has no Z/q or Z_(q)".into()));
    };
    Ok(BocksteinFunction::new(ExtNat::Fin(m), base, [(q, raised)]))
}
