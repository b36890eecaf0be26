use serde::Serialize;

use crate::arith::is_prime;
use crate::group::{normal_closure, quotient, FiniteGroup, Subgroup};

/// A chief series from `G` down to the trivial subgroup.
#[derive(Clone, Debug)]
pub struct ChiefSeries {
    pub terms: Vec<Subgroup>,
    pub factor_orders: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiefSeriesSummary {
    pub factor_orders: Vec<u64>,
}

/// Minimal normal subgroups, sorted by order and then by member indices.
pub fn minimal_normal_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let c = g.classes();
    let mut closures: Vec<Subgroup> = Vec::new();
    for &x in &c.reps[1..] {
        if !is_prime(g.element_order(x)) {
            continue;
        }
        let n = normal_closure(g, &[x]);
        if !closures.contains(&n) {
            closures.push(n);
        }
    }
    closures.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members().cmp(b.members())));
    let mut minimal: Vec<Subgroup> = Vec::new();
    for n in closures {
        if !minimal.iter().any(|m| m.is_subset_of(&n)) {
            minimal.push(n);
        }
    }
    minimal
}

/// Builds a chief series bottom up by lifting a minimal normal subgroup of
/// each successive quotient.
pub fn chief_series(g: &FiniteGroup) -> ChiefSeries {
    let mut n = Subgroup::trivial(g);
    let mut terms = vec![n.clone()];
    while !n.is_whole() {
        let (q, hom) = quotient(g, &n).expect("series terms are normal");
        let m = minimal_normal_subgroups(&q).into_iter().next().expect("nontrivial quotient");
        n = hom.preimage(&m);
        terms.push(n.clone());
    }
    terms.reverse();
    let factor_orders = terms
        .windows(2)
        .map(|w| (w[0].order() / w[1].order()) as u64)
        .collect();
    ChiefSeries {
        terms,
        factor_orders,
    }
}

/// A normal subgroup of prime order: some `x` of prime order whose class
/// consists of powers of `x`.
fn normal_prime_order_element(g: &FiniteGroup) -> Option<usize> {
    let c = g.classes();
    (1..c.len())
        .filter(|&i| is_prime(g.element_order(c.reps[i])))
        .find(|&i| {
            let x = c.reps[i];
            let p = g.element_order(x);
            (c.sizes[i] as u64) < p
                && c.members[i]
                    .iter()
                    .all(|&y| (1..p).any(|j| g.pow(x, j) == y))
        })
        .map(|i| c.reps[i])
}

/// Every chief factor has prime order. Walks up a series, at each step
/// lifting a normal subgroup of prime order of the current quotient.
pub fn is_supersolvable(g: &FiniteGroup) -> bool {
    let mut n = Subgroup::trivial(g);
    loop {
        if n.is_whole() {
            return true;
        }
        let (q, hom) = quotient(g, &n).expect("series terms are normal");
        match normal_prime_order_element(&q) {
            None => return false,
            Some(x) => n = hom.preimage(&Subgroup::generated(&q, &[x])),
        }
    }
}

/// Some term of the derived series is trivial.
pub fn is_solvable(g: &FiniteGroup) -> bool {
    let mut h = g.clone();
    loop {
        if h.order() == 1 {
            return true;
        }
        let d = crate::group::derived_subgroup(&h);
        if d.is_whole() {
            return false;
        }
        h = h.subgroup_as_group(&d);
    }
}
