use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::series::is_solvable;
use super::sylow::{is_nilpotent, sylow_subgroup};
use crate::arith::{factorize, gcd, is_prime};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

/// Random rounds before falling back to subgroups generated by class representatives.
const RANDOM_ROUNDS: usize = 1000;

/// A complement to a normal subgroup of coprime order and index.
///
/// For prime power index a Sylow subgroup is returned directly. Otherwise
/// random elements of order coprime to `|N|` are accumulated into a growing
/// subgroup, restarting whenever it overshoots; the search is reproducible
/// from `seed`.
pub fn hall_complement(g: &FiniteGroup, n: &Subgroup, seed: u64) -> Result<Subgroup> {
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    let order_n = n.order() as u64;
    let index = n.index() as u64;
    if gcd(order_n, index) != 1 {
        return Err(Error::NotCoprime);
    }
    if index == 1 {
        return Ok(Subgroup::trivial(g));
    }
    if n.is_trivial() {
        return Ok(Subgroup::whole(g));
    }
    let target = index as usize;
    let f = factorize(index);
    if f.len() == 1 {
        return Ok(sylow_subgroup(g, f[0].0));
    }
    let coprime: Vec<usize> = g
        .elements()
        .filter(|&x| x != 0 && gcd(g.element_order(x), order_n) == 1)
        .collect();
    let accept = |h: &Subgroup| h.order() == target && h.intersection(n).is_trivial();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = Subgroup::trivial(g);
    for _ in 0..RANDOM_ROUNDS {
        let x = coprime[rng.gen_range(0..coprime.len())];
        let mut gens = current.generators().to_vec();
        gens.push(x);
        match Subgroup::generated_bounded(g, &gens, target) {
            Some(h) if target % h.order() == 0 => {
                if accept(&h) {
                    return Ok(h);
                }
                current = h;
            }
            _ => current = Subgroup::trivial(g),
        }
    }
    let reps: Vec<usize> = g
        .classes()
        .reps
        .iter()
        .copied()
        .filter(|&x| x != 0 && gcd(g.element_order(x), order_n) == 1)
        .collect();
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate().skip(i) {
            for &c in reps.iter().skip(j) {
                if let Some(h) = Subgroup::generated_bounded(g, &[a, b, c], target) {
                    if accept(&h) {
                        return Ok(h);
                    }
                }
            }
        }
    }
    Err(Error::SearchExhausted)
}

/// Evidence that `G` is a Frobenius group with the given kernel.
#[derive(Clone, Debug)]
pub struct FrobeniusWitness {
    pub kernel: Subgroup,
    pub complement: Subgroup,
    pub fixed_point_free: bool,
}

/// Checks that `k` is a Frobenius kernel of `g`: `1 < K < G` normal,
/// centralizers of nontrivial kernel elements stay inside `K`, and a
/// complement exists whose nontrivial elements fix only the identity of `K`.
pub fn is_frobenius_with_kernel(g: &FiniteGroup, k: &Subgroup, seed: u64) -> Option<FrobeniusWitness> {
    if k.is_trivial() || k.is_whole() || !k.is_normal() {
        return None;
    }
    let c = g.classes();
    for i in 1..c.len() {
        let x = c.reps[i];
        if !k.contains(x) {
            continue;
        }
        if g.elements().any(|y| !k.contains(y) && g.commutes(x, y)) {
            return None;
        }
    }
    if gcd(k.order() as u64, k.index() as u64) != 1 {
        return None;
    }
    let h = hall_complement(g, k, seed).ok()?;
    let fixed_point_free = h.members()[1..]
        .iter()
        .all(|&x| k.members()[1..].iter().all(|&y| !g.commutes(x, y)));
    fixed_point_free.then_some(FrobeniusWitness {
        kernel: k.clone(),
        complement: h,
        fixed_point_free,
    })
}

/// Shape of a group all of whose nontrivial elements have prime order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PrimeOrderShape {
    NotAllPrimeOrder,
    PGroupExponentP(u64),
    /// Frobenius with kernel a Sylow `p`-subgroup and complement of order `q`.
    FrobeniusPQ(u64, u64),
    Alt5,
}

pub fn prime_order_classification(g: &FiniteGroup, seed: u64) -> PrimeOrderShape {
    if g.order() == 1 || g.elements().skip(1).any(|x| !is_prime(g.element_order(x))) {
        return PrimeOrderShape::NotAllPrimeOrder;
    }
    let f = factorize(g.order() as u64);
    if is_nilpotent(g) {
        return match f.as_slice() {
            [(p, _)] => PrimeOrderShape::PGroupExponentP(*p),
            _ => PrimeOrderShape::NotAllPrimeOrder,
        };
    }
    if is_solvable(g) {
        if f.len() != 2 {
            return PrimeOrderShape::NotAllPrimeOrder;
        }
        for &(p, _) in &f {
            let q = f.iter().map(|&(r, _)| r).find(|&r| r != p).unwrap();
            let s = sylow_subgroup(g, p);
            if s.is_normal() && s.index() as u64 == q {
                if let Some(w) = is_frobenius_with_kernel(g, &s, seed) {
                    if w.complement.order() as u64 == q {
                        return PrimeOrderShape::FrobeniusPQ(p, q);
                    }
                }
            }
        }
        return PrimeOrderShape::NotAllPrimeOrder;
    }
    let simple = g.classes().reps[1..]
        .iter()
        .all(|&x| crate::group::normal_closure(g, &[x]).is_whole());
    if g.order() == 60 && simple {
        PrimeOrderShape::Alt5
    } else {
        PrimeOrderShape::NotAllPrimeOrder
    }
}
