use rustc_hash::FxHashMap;

use super::algebra::ClassAlgebra;
use super::modp::{charpoly, left_nullspace, roots, rref, Fp};
use crate::arith::{is_prime, isqrt};
use crate::error::{Error, Result};

/// Smallest prime `p = 1 mod e` with `p > 2 sqrt(|G|)`.
pub fn choose_dixon_prime(group_order: u64, e: u64) -> u64 {
    dixon_primes(group_order, e).next().unwrap()
}

/// All valid Dixon primes in increasing order.
pub fn dixon_primes(group_order: u64, e: u64) -> impl Iterator<Item = u64> {
    let e = e.max(1);
    // p > 2 sqrt(n)  <=>  p^2 > 4 n
    let mut p = 1 + e;
    std::iter::from_fn(move || loop {
        let cand = p;
        p += e;
        if cand * cand > 4 * group_order && is_prime(cand) {
            return Some(cand);
        }
    })
}

/// Characters reduced modulo `p`: central character values and the values
/// of the characters themselves, both indexed `[character][class]`.
#[derive(Clone, Debug)]
pub struct ModularTable {
    pub p: u64,
    pub omegas: Vec<Vec<u64>>,
    pub values: Vec<Vec<u64>>,
    pub degrees: Vec<u64>,
}

/// One invariant subspace: rows in reduced echelon form with their pivots.
struct Space {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

/// Splits `F_p^k` into the common eigenlines of the class matrices.
pub fn modular_character_table(alg: &ClassAlgebra, p: u64) -> Result<ModularTable> {
    let f = Fp::new(p);
    let k = alg.k;
    let identity: Vec<Vec<u64>> = (0..k)
        .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut done: Vec<Vec<u64>> = Vec::new();
    let mut open = vec![Space {
        rows: identity,
        pivots: (0..k).collect(),
    }];
    if k == 1 {
        done.push(vec![1]);
        open.clear();
    }
    let mut order: Vec<usize> = (1..k).collect();
    order.sort_by_key(|&i| (alg.class_sizes[i], i));
    for &i in &order {
        if open.is_empty() {
            break;
        }
        let mut columns: FxHashMap<usize, Vec<u64>> = FxHashMap::default();
        let mut next = Vec::new();
        for space in open {
            for &j in &space.pivots {
                columns
                    .entry(j)
                    .or_insert_with(|| alg.column(i, j).into_iter().map(|v| v % p).collect());
            }
            let a: Vec<Vec<u64>> = space
                .rows
                .iter()
                .map(|row| {
                    space
                        .pivots
                        .iter()
                        .map(|j| {
                            let col = &columns[j];
                            row.iter()
                                .zip(col)
                                .fold(0u64, |acc, (&x, &y)| (acc + x * y) % p)
                        })
                        .collect()
                })
                .collect();
            let lambdas = roots(f, &charpoly(f, &a));
            if lambdas.len() == 1 {
                next.push(space);
                continue;
            }
            for lam in lambdas {
                let shifted: Vec<Vec<u64>> = a
                    .iter()
                    .enumerate()
                    .map(|(r, row)| {
                        row.iter()
                            .enumerate()
                            .map(|(c, &v)| if r == c { f.sub(v, lam) } else { v })
                            .collect()
                    })
                    .collect();
                let u = left_nullspace(f, &shifted);
                let mut rows: Vec<Vec<u64>> = u
                    .iter()
                    .map(|coef| {
                        let mut w = vec![0u64; k];
                        for (c, row) in coef.iter().zip(&space.rows) {
                            if *c == 0 {
                                continue;
                            }
                            for (wv, &rv) in w.iter_mut().zip(row) {
                                *wv = (*wv + c * rv) % p;
                            }
                        }
                        w
                    })
                    .collect();
                let pivots = rref(f, &mut rows);
                if rows.len() == 1 {
                    done.push(rows.pop().unwrap());
                } else {
                    next.push(Space { rows, pivots });
                }
            }
        }
        open = next;
    }
    if let Some(s) = open.first() {
        return Err(Error::SplittingIncomplete { dim: s.rows.len() });
    }
    if done.len() != k {
        return Err(Error::SplittingIncomplete { dim: k - done.len() });
    }
    normalize(alg, f, done)
}

/// Scales eigenvectors to central characters and recovers degrees and values.
fn normalize(alg: &ClassAlgebra, f: Fp, lines: Vec<Vec<u64>>) -> Result<ModularTable> {
    let classes = alg.classes();
    let n = alg.group_order();
    let inv_h: Vec<u64> = alg.class_sizes.iter().map(|&h| f.inv(h % f.p)).collect();
    let inverse_class: Vec<usize> = (0..alg.k).map(|i| classes.inverse_class(i)).collect();
    let bound = isqrt(n);
    let mut omegas = Vec::new();
    let mut values = Vec::new();
    let mut degrees = Vec::new();
    for line in lines {
        let scale = f.inv(line[0]);
        let w: Vec<u64> = line.iter().map(|&v| f.mul(v, scale)).collect();
        let s = (0..alg.k).fold(0, |acc, j| {
            f.add(acc, f.mul(f.mul(w[j], w[inverse_class[j]]), inv_h[j]))
        });
        if s == 0 {
            return Err(Error::LiftInconsistent("zero norm for a central character".into()));
        }
        let d2 = f.mul(n % f.p, f.inv(s));
        let d = (1..=bound)
            .find(|&d| d * d % f.p == d2)
            .ok_or_else(|| Error::LiftInconsistent("no admissible degree".into()))?;
        let theta = (0..alg.k)
            .map(|j| f.mul(f.mul(w[j], d), inv_h[j]))
            .collect();
        omegas.push(w);
        values.push(theta);
        degrees.push(d);
    }
    Ok(ModularTable {
        p: f.p,
        omegas,
        values,
        degrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::algebra::class_structure_constants;
    use crate::constructors::{build_base, Family};

    fn scan(n: u64, e: u64) -> u64 {
        (2..).find(|&p| is_prime(p) && p % e == 1 % e && (p * p) > 4 * n).unwrap()
    }

    #[test]
    fn dixon_primes_match_scan() {
        assert_eq!(choose_dixon_prime(6, 6), 7);
        assert_eq!(choose_dixon_prime(24, 12), 13);
        assert_eq!(choose_dixon_prime(448, 28), 113);
        for n in 1..200u64 {
            for e in 1..20u64 {
                if n % e == 0 {
                    assert_eq!(choose_dixon_prime(n, e), scan(n, e));
                }
            }
        }
        let two: Vec<u64> = dixon_primes(6, 6).take(2).collect();
        assert_eq!(two, vec![7, 13]);
    }

    #[test]
    fn s3_degrees_mod_seven() {
        let g = build_base(Family::Dihedral, &[6], 100).unwrap();
        let alg = class_structure_constants(&g, g.classes());
        let t = modular_character_table(&alg, 7).unwrap();
        let mut d = t.degrees.clone();
        d.sort_unstable();
        assert_eq!(d, vec![1, 1, 2]);
    }

    #[test]
    fn trivial_group_has_one_character() {
        let g = crate::group::FiniteGroup::trivial();
        let alg = class_structure_constants(&g, g.classes());
        let t = modular_character_table(&alg, 3).unwrap();
        assert_eq!(t.degrees, vec![1]);
    }
}
