use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_prime::nt_funcs::{factorize128, factors};
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::primes::{Prime, PrimeSet};

/// An indecomposable summand of an admissible group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    /// `Z_(l)`: rationals whose denominators avoid every prime of `l`.
    /// `Loc(all)` is `Z`, `Loc(empty)` is `Q`.
    Loc(PrimeSet),
    /// `Z/p^k`, `k >= 1`.
    Cyc { p: Prime, k: u32 },
    /// The Prüfer group `Z/p^oo`.
    Pru(Prime),
}

impl Atom {
    pub fn integers() -> Atom {
        Atom::Loc(PrimeSet::all())
    }

    pub fn rationals() -> Atom {
        Atom::Loc(PrimeSet::empty())
    }

    pub fn is_torsion(&self) -> bool {
        !matches!(self, Atom::Loc(_))
    }

    /// Primes that the atom treats differently from a generic prime.
    pub fn primes(&self) -> &[Prime] {
        match self {
            Atom::Loc(l) => l.listed(),
            Atom::Cyc { p, .. } | Atom::Pru(p) => std::slice::from_ref(p),
        }
    }

    fn tensor(&self, other: &Atom) -> Option<Atom> {
        use Atom::*;
        match (self, other) {
            (Loc(a), Loc(b)) => Some(Loc(a.intersection(b))),
            (Loc(l), t @ (Cyc { p, .. } | Pru(p))) | (t @ (Cyc { p, .. } | Pru(p)), Loc(l)) => {
                l.contains(*p).then(|| t.clone())
            }
            (Cyc { p, k }, Cyc { p: q, k: m }) if p == q => Some(Cyc { p: *p, k: (*k).min(*m) }),
            _ => None,
        }
    }

    fn tor(&self, other: &Atom) -> Option<Atom> {
        use Atom::*;
        match (self, other) {
            (Loc(_), _) | (_, Loc(_)) => None,
            (Cyc { p, k }, Cyc { p: q, k: m }) if p == q => Some(Cyc { p: *p, k: (*k).min(*m) }),
            (Pru(p), c @ Cyc { p: q, .. }) | (c @ Cyc { p: q, .. }, Pru(p)) if p == q => {
                Some(c.clone())
            }
            (Pru(p), Pru(q)) if p == q => Some(Pru(*p)),
            _ => None,
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[Prime]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
        match self {
            Atom::Loc(PrimeSet::Cofinite(v)) if v.is_empty() => f.write_str("Z"),
            Atom::Loc(PrimeSet::Finite(v)) if v.is_empty() => f.write_str("Q"),
            Atom::Loc(PrimeSet::Cofinite(v)) if v.len() == 1 => write!(f, "Z[1/{}]", v[0]),
            Atom::Loc(PrimeSet::Cofinite(v)) => write!(f, "Z_(~{})", list(v)),
            Atom::Loc(PrimeSet::Finite(v)) => write!(f, "Z_({})", list(v)),
            Atom::Cyc { p, k: 1 } => write!(f, "Z/{p}"),
            Atom::Cyc { p, k } => {
                let modulus = BigUint::from(p.get()).pow(*k);
                write!(f, "Z/{modulus}")
            }
            Atom::Pru(p) => write!(f, "Z/{p}^oo"),
        }
    }
}

/// A finite direct sum of atoms, kept in canonical form.
///
/// Two admissible groups are isomorphic iff they compare equal.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissibleGroup {
    atoms: BTreeMap<Atom, u64>,
}

impl AdmissibleGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn integers() -> Self {
        Atom::integers().into()
    }

    pub fn rationals() -> Self {
        Atom::rationals().into()
    }

    pub fn localized(l: PrimeSet) -> Self {
        Atom::Loc(l).into()
    }

    pub fn cyclic_prime_power(p: Prime, k: u32) -> Self {
        assert!(k >= 1, "cyclic exponent must be positive");
        Atom::Cyc { p, k }.into()
    }

    pub fn pruefer(p: Prime) -> Self {
        Atom::Pru(p).into()
    }

    /// `Z/n`, split into its prime-power parts.
    pub fn cyclic(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadModulus(n.to_string()));
        }
        factor_modulus(&BigUint::from(n))
    }

    pub fn is_trivial(&self) -> bool {
        self.atoms.is_empty()
    }

    /// Atoms with their multiplicities, in canonical order.
    pub fn atoms(&self) -> impl Iterator<Item = (&Atom, u64)> + '_ {
        self.atoms.iter().map(|(a, &m)| (a, m))
    }

    pub fn multiplicity(&self, atom: &Atom) -> u64 {
        self.atoms.get(atom).copied().unwrap_or(0)
    }

    /// Every prime mentioned by some atom, sorted and deduplicated.
    pub fn primes(&self) -> Vec<Prime> {
        let mut v: Vec<Prime> = self.atoms.keys().flat_map(|a| a.primes().iter().copied()).collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn add_atom(&mut self, atom: Atom, mult: u64) {
        if mult > 0 {
            let e = self.atoms.entry(atom).or_insert(0);
            *e = e.checked_add(mult).expect("multiplicity overflow");
        }
    }

    pub fn direct_sum(&self, other: &AdmissibleGroup) -> AdmissibleGroup {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &AdmissibleGroup) {
        for (a, m) in other.atoms() {
            self.add_atom(a.clone(), m);
        }
    }

    /// `n`-fold direct sum.
    pub fn pow(&self, n: u64) -> AdmissibleGroup {
        let atoms = if n == 0 {
            BTreeMap::new()
        } else {
            self.atoms
                .iter()
                .map(|(a, &m)| (a.clone(), m.checked_mul(n).expect("multiplicity overflow")))
                .collect()
        };
        AdmissibleGroup { atoms }
    }

    /// Direct sum of a family.
    pub fn sum<'a>(groups: impl IntoIterator<Item = &'a AdmissibleGroup>) -> AdmissibleGroup {
        let mut out = AdmissibleGroup::trivial();
        for g in groups {
            out.add_assign(g);
        }
        out
    }
}

impl From<Atom> for AdmissibleGroup {
    fn from(atom: Atom) -> Self {
        let mut g = AdmissibleGroup::trivial();
        g.add_atom(atom, 1);
        g
    }
}

impl fmt::Display for AdmissibleGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        for (i, (a, m)) in self.atoms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m == 1 {
                write!(f, "{a}")?;
            } else {
                write!(f, "{a}^{m}")?;
            }
        }
        Ok(())
    }
}

fn bilinear(a: &AdmissibleGroup, b: &AdmissibleGroup, op: impl Fn(&Atom, &Atom) -> Option<Atom>) -> AdmissibleGroup {
    let mut out = AdmissibleGroup::trivial();
    for (x, m) in a.atoms() {
        for (y, n) in b.atoms() {
            if let Some(z) = op(x, y) {
                out.add_atom(z, m.checked_mul(n).expect("multiplicity overflow"));
            }
        }
    }
    out
}

/// Tensor product `A ⊗ B`, computed atom by atom.
pub fn tensor(a: &AdmissibleGroup, b: &AdmissibleGroup) -> AdmissibleGroup {
    bilinear(a, b, Atom::tensor)
}

/// Torsion product `Tor(A, B)`, computed atom by atom.
pub fn tor(a: &AdmissibleGroup, b: &AdmissibleGroup) -> AdmissibleGroup {
    bilinear(a, b, Atom::tor)
}

/// Split `Z/n` into prime-power cyclic atoms.
pub fn factor_modulus(n: &BigUint) -> Result<AdmissibleGroup> {
    if *n < BigUint::from(2u8) {
        return Err(Error::BadModulus(n.to_string()));
    }
    let factored: Vec<(BigUint, usize)> = match n.to_u128() {
        Some(small) => factorize128(small).into_iter().map(|(p, e)| (BigUint::from(p), e)).collect(),
        None => {
            let (found, rest) = factors(n.clone(), None);
            if rest.is_some() {
                return Err(Error::Unfactorable(n.to_string()));
            }
            found.into_iter().collect()
        }
    };
    let mut g = AdmissibleGroup::trivial();
    for (p, e) in factored {
        let p = p.to_u64().ok_or_else(|| Error::Unfactorable(n.to_string()))?;
        let k = u32::try_from(e).map_err(|_| Error::Unfactorable(n.to_string()))?;
        g.add_atom(Atom::Cyc { p: Prime::new(p)?, k }, 1);
    }
    debug_assert!(!n.is_one());
    Ok(g)
}

/// Surface-level atom as written by a user, before validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AtomExpr {
    Integers,
    Rationals,
    /// `Z/n` for an arbitrary modulus.
    Cyclic(BigUint),
    /// `Z/p^oo`.
    Pruefer(u64),
    /// `Z_(p1,...,pk)`, or `Z_(~p1,...,pk)` when `cofinite`.
    Localized { cofinite: bool, primes: Vec<u64> },
    /// `Z[1/p]`.
    InvertPrime(u64),
}

/// A direct sum of repeated atoms: `atom^exp + atom^exp + ...`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GroupExpr {
    pub terms: Vec<(AtomExpr, u64)>,
}

fn checked_primes(v: &[u64]) -> Result<Vec<Prime>> {
    v.iter().map(|&p| Prime::new(p)).collect()
}

impl AtomExpr {
    fn to_group(&self) -> Result<AdmissibleGroup> {
        Ok(match self {
            AtomExpr::Integers => AdmissibleGroup::integers(),
            AtomExpr::Rationals => AdmissibleGroup::rationals(),
            AtomExpr::Cyclic(n) => factor_modulus(n)?,
            AtomExpr::Pruefer(p) => AdmissibleGroup::pruefer(Prime::new(*p)?),
            AtomExpr::Localized { cofinite: false, primes } => {
                AdmissibleGroup::localized(PrimeSet::finite(checked_primes(primes)?))
            }
            AtomExpr::Localized { cofinite: true, primes } => {
                AdmissibleGroup::localized(PrimeSet::all_except(checked_primes(primes)?))
            }
            AtomExpr::InvertPrime(p) => AdmissibleGroup::localized(PrimeSet::all_except([Prime::new(*p)?])),
        })
    }
}

/// Validate a group expression and bring it to canonical form.
pub fn canonicalize(expr: &GroupExpr) -> Result<AdmissibleGroup> {
    let mut out = AdmissibleGroup::trivial();
    for (atom, exp) in &expr.terms {
        let g = atom.to_group()?;
        out.add_assign(&g.pow(*exp));
    }
    Ok(out)
}
