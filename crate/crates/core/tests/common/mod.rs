#![allow(dead_code)]

use extcalc::{AdmissibleGroup, Atom, BocksteinFunction, ExtNat, GradedGroup, IntMatrix, Prime, PrimeSet, Triple};
use proptest::collection::{btree_map, vec};
use proptest::prelude::*;

pub const SMALL_PRIMES: [u64; 6] = [2, 3, 5, 7, 11, 13];

pub fn p(n: u64) -> Prime {
    Prime::new(n).unwrap()
}

pub fn arb_prime() -> impl Strategy<Value = Prime> {
    proptest::sample::select(SMALL_PRIMES.to_vec()).prop_map(p)
}

pub fn arb_prime_set() -> impl Strategy<Value = PrimeSet> {
    (any::<bool>(), vec(arb_prime(), 0..3)).prop_map(|(cofinite, ps)| {
        if cofinite {
            PrimeSet::all_except(ps)
        } else {
            PrimeSet::finite(ps)
        }
    })
}

pub fn arb_atom() -> impl Strategy<Value = Atom> {
    prop_oneof![
        arb_prime_set().prop_map(Atom::Loc),
        Just(Atom::integers()),
        Just(Atom::rationals()),
        (arb_prime(), 1u32..4).prop_map(|(p, k)| Atom::Cyc { p, k }),
        arb_prime().prop_map(Atom::Pru),
    ]
}

pub fn arb_group() -> impl Strategy<Value = AdmissibleGroup> {
    vec((arb_atom(), 1u64..3), 0..4).prop_map(|atoms| {
        let mut g = AdmissibleGroup::trivial();
        for (a, m) in atoms {
            g.add_atom(a, m);
        }
        g
    })
}

pub fn arb_nontrivial_group() -> impl Strategy<Value = AdmissibleGroup> {
    (arb_atom(), arb_group()).prop_map(|(a, g)| g.direct_sum(&a.into()))
}

fn graded_from(entries: std::collections::BTreeMap<u32, AdmissibleGroup>) -> GradedGroup {
    let mut out = GradedGroup::new();
    for (d, g) in entries {
        out.insert(d, g);
    }
    out
}

pub fn arb_graded() -> impl Strategy<Value = GradedGroup> {
    btree_map(0u32..6, arb_group(), 0..4).prop_map(graded_from)
}

/// No degree-0 entry.
pub fn arb_connected_graded() -> impl Strategy<Value = GradedGroup> {
    btree_map(1u32..6, arb_group(), 0..4).prop_map(graded_from)
}

pub fn arb_extnat() -> impl Strategy<Value = ExtNat> {
    prop_oneof![4 => (0u64..5).prop_map(ExtNat::Fin), 1 => Just(ExtNat::Inf)]
}

pub fn arb_triple() -> impl Strategy<Value = Triple> {
    (arb_extnat(), arb_extnat(), arb_extnat()).prop_map(|(zp, zp_inf, zp_loc)| Triple { zp, zp_inf, zp_loc })
}

/// Arbitrary, not necessarily valid, Bockstein function.
pub fn arb_bockstein_function() -> impl Strategy<Value = BocksteinFunction> {
    (arb_extnat(), arb_triple(), vec((arb_prime(), arb_triple()), 0..3))
        .prop_map(|(q, d, ex)| BocksteinFunction::new(q, d, ex))
}

/// Relation matrix with `rels` rows and `gens` columns, entries in `[-bound, bound]`.
pub fn arb_relations(max_gens: usize, max_rels: usize, bound: i64) -> impl Strategy<Value = (usize, IntMatrix)> {
    (0..=max_gens, 0..=max_rels).prop_flat_map(move |(gens, rels)| {
        vec(-bound..=bound, gens * rels).prop_map(move |data| {
            (gens, IntMatrix::from_vec(rels, gens, data.into_iter().map(Into::into).collect()))
        })
    })
}

pub fn arb_atom_expr() -> impl Strategy<Value = extcalc::AtomExpr> {
    use extcalc::AtomExpr;
    let primes = || vec(proptest::sample::select(SMALL_PRIMES.to_vec()), 0..3);
    prop_oneof![
        Just(AtomExpr::Integers),
        Just(AtomExpr::Rationals),
        (2u64..400).prop_map(|n| AtomExpr::Cyclic(n.into())),
        proptest::sample::select(SMALL_PRIMES.to_vec()).prop_map(AtomExpr::Pruefer),
        (any::<bool>(), primes()).prop_map(|(cofinite, primes)| AtomExpr::Localized { cofinite, primes }),
        proptest::sample::select(SMALL_PRIMES.to_vec()).prop_map(AtomExpr::InvertPrime),
    ]
}

pub fn arb_group_expr() -> impl Strategy<Value = extcalc::GroupExpr> {
    vec((arb_atom_expr(), 0u64..3), 0..4).prop_map(|terms| extcalc::GroupExpr { terms })
}

/// The expression spelling out an already canonical group.
pub fn expr_of(g: &AdmissibleGroup) -> extcalc::GroupExpr {
    use extcalc::AtomExpr;
    let atom = |a: &Atom| match a {
        Atom::Loc(PrimeSet::Finite(ps)) => AtomExpr::Localized { cofinite: false, primes: ps.iter().map(|p| p.get()).collect() },
        Atom::Loc(PrimeSet::Cofinite(ps)) => AtomExpr::Localized { cofinite: true, primes: ps.iter().map(|p| p.get()).collect() },
        Atom::Cyc { p, k } => AtomExpr::Cyclic(num_bigint::BigUint::from(p.get()).pow(*k)),
        Atom::Pru(p) => AtomExpr::Pruefer(p.get()),
    };
    extcalc::GroupExpr { terms: g.atoms().map(|(a, m)| (atom(a), m)).collect() }
}
