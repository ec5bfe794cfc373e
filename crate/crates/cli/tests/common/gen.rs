//! Seeded random generators for groups, graded groups, dimension functions and
//! integer presentations.

use extcalc::presentation::oracle::FinitePresentation;
use extcalc::{AdmissibleGroup, Atom, BocksteinFunction, ExtNat, GradedGroup, IntMatrix, Prime, PrimeSet, Triple};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type Rng8 = ChaCha8Rng;

pub const PRIMES_TO_50: [u64; 15] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn prime(rng: &mut Rng8) -> Prime {
    // mostly small primes so that atoms interact
    let p = if rng.gen_bool(0.8) { *[2u64, 3, 5].choose(rng).unwrap() } else { *PRIMES_TO_50.choose(rng).unwrap() };
    Prime::new(p).unwrap()
}

pub fn prime_set(rng: &mut Rng8) -> PrimeSet {
    let n = rng.gen_range(0..3);
    let ps: Vec<Prime> = (0..n).map(|_| prime(rng)).collect();
    if rng.gen_bool(0.5) {
        PrimeSet::all_except(ps)
    } else {
        PrimeSet::finite(ps)
    }
}

pub fn atom(rng: &mut Rng8) -> Atom {
    match rng.gen_range(0..6) {
        0 => Atom::integers(),
        1 => Atom::rationals(),
        2 => Atom::Loc(prime_set(rng)),
        3 | 4 => Atom::Cyc { p: prime(rng), k: rng.gen_range(1..4) },
        _ => Atom::Pru(prime(rng)),
    }
}

pub fn group(rng: &mut Rng8, max_atoms: usize) -> AdmissibleGroup {
    let mut g = AdmissibleGroup::trivial();
    for _ in 0..rng.gen_range(0..=max_atoms) {
        g.add_atom(atom(rng), rng.gen_range(1..3));
    }
    g
}

pub fn nontrivial_group(rng: &mut Rng8, max_atoms: usize) -> AdmissibleGroup {
    let mut g = group(rng, max_atoms.saturating_sub(1));
    g.add_atom(atom(rng), 1);
    g
}

/// Degrees drawn from `min_degree..=max_degree`.
pub fn graded(rng: &mut Rng8, min_degree: u32, max_degree: u32, max_entries: usize) -> GradedGroup {
    let mut k = GradedGroup::new();
    for _ in 0..rng.gen_range(0..=max_entries) {
        let d = rng.gen_range(min_degree..=max_degree);
        if k.get(d).is_none() {
            k.insert(d, group(rng, 3));
        }
    }
    k
}

pub fn ext(rng: &mut Rng8) -> ExtNat {
    if rng.gen_bool(0.15) {
        ExtNat::Inf
    } else {
        ExtNat::Fin(rng.gen_range(0..6))
    }
}

pub fn triple(rng: &mut Rng8) -> Triple {
    Triple { zp: ext(rng), zp_inf: ext(rng), zp_loc: ext(rng) }
}

/// Any function on Bockstein groups; not necessarily a Bockstein function.
pub fn function(rng: &mut Rng8) -> BocksteinFunction {
    let n = rng.gen_range(0..3);
    let exceptions: Vec<(Prime, Triple)> = (0..n).map(|_| (prime(rng), triple(rng))).collect();
    BocksteinFunction::new(ext(rng), triple(rng), exceptions)
}

/// At most 5 generators and 5 relations, entries in `[-20, 20]`.
pub fn presentation(rng: &mut Rng8) -> FinitePresentation {
    let gens = rng.gen_range(0..=5);
    let rels = rng.gen_range(0..=5);
    let data = (0..gens * rels).map(|_| rng.gen_range(-20i64..=20).into()).collect();
    FinitePresentation::new(gens, IntMatrix::from_vec(rels, gens, data))
}
