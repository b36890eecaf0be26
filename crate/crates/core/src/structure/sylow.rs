use crate::arith::{factorize, p_part, prime_divisors};
use crate::group::{FiniteGroup, Subgroup};

/// A Sylow `p`-subgroup, grown inside successive normalizers starting from
/// the first element of order `p`.
pub fn sylow_subgroup(g: &FiniteGroup, p: u64) -> Subgroup {
    let target = p_part(g.order() as u64, p) as usize;
    if target == 1 {
        return Subgroup::trivial(g);
    }
    let x = g
        .elements()
        .find(|&x| g.element_order(x) == p)
        .expect("Cauchy: an element of order p exists");
    let mut sub = Subgroup::generated(g, &[x]);
    while sub.order() < target {
        let norm = sub.normalizer();
        let y = norm
            .members()
            .iter()
            .copied()
            .find(|&y| !sub.contains(y) && sub.contains(g.pow(y, p)))
            .expect("a proper p-subgroup grows inside its normalizer");
        sub = sub.join_element(y);
    }
    sub
}

/// `O_p(G)`: the elements whose whole conjugacy class lies in a Sylow `p`-subgroup.
pub fn p_core(g: &FiniteGroup, p: u64) -> Subgroup {
    let sylow = sylow_subgroup(g, p);
    let c = g.classes();
    let members = c
        .members
        .iter()
        .filter(|cls| cls.iter().all(|&x| sylow.contains(x)))
        .flatten()
        .copied()
        .collect();
    Subgroup::from_members(g, members)
}

/// `F(G)`, the product of the `p`-cores.
pub fn fitting_subgroup(g: &FiniteGroup) -> Subgroup {
    prime_divisors(g.order() as u64)
        .into_iter()
        .fold(Subgroup::trivial(g), |acc, p| acc.join(&p_core(g, p)))
}

/// Every Sylow subgroup is normal.
pub fn is_nilpotent(g: &FiniteGroup) -> bool {
    factorize(g.order() as u64)
        .into_iter()
        .all(|(p, k)| p_core(g, p).order() as u64 == p.pow(k))
}

/// Nilpotency of a subgroup without enumerating it: for each prime `q` the
/// `q`-elements must number exactly the `q`-part of the order.
pub fn is_nilpotent_subgroup(h: &Subgroup) -> bool {
    let g = h.parent();
    factorize(h.order() as u64).into_iter().all(|(q, k)| {
        let count = h
            .members()
            .iter()
            .filter(|&&x| prime_divisors(g.element_order(x)).iter().all(|&r| r == q))
            .count();
        count as u64 == q.pow(k)
    })
}

/// `O_pi(G)` when it is a Hall subgroup: the subgroup generated by all
/// `pi`-elements, provided its order is the `pi`-part of `|G|`.
pub fn normal_hall_subgroup(g: &FiniteGroup, pi: &[u64]) -> Option<Subgroup> {
    let c = g.classes();
    let is_pi = |n: u64| prime_divisors(n).iter().all(|q| pi.contains(q));
    let reps: Vec<usize> = c
        .reps
        .iter()
        .copied()
        .filter(|&x| is_pi(g.element_order(x)))
        .collect();
    let n = crate::group::normal_closure(g, &reps);
    let target = crate::arith::pi_part(g.order() as u64, pi);
    (n.order() as u64 == target).then_some(n)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::constructors::{build_base, extraspecial, sz8_borel, Family, Sign};

    /// Normal subgroups as unions of classes closed under products, by brute force.
    pub(crate) fn normal_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
        let c = g.classes();
        let k = c.len();
        assert!(k <= 16);
        let mut out = Vec::new();
        for mask in 0u32..(1 << k) {
            if mask & 1 == 0 {
                continue;
            }
            let members: Vec<usize> = (0..k)
                .filter(|i| mask >> i & 1 == 1)
                .flat_map(|i| c.members[i].iter().copied())
                .collect();
            let set: std::collections::HashSet<usize> = members.iter().copied().collect();
            if members.iter().all(|&a| members.iter().all(|&b| set.contains(&g.mul(a, b)))) {
                out.push(Subgroup::from_members(g, members));
            }
        }
        out
    }

    fn small_groups() -> Vec<FiniteGroup> {
        vec![
            build_base(Family::Dihedral, &[6], 100).unwrap(),
            build_base(Family::SL23, &[], 100).unwrap(),
            build_base(Family::Alt5, &[], 100).unwrap(),
            extraspecial(2, Sign::Plus).unwrap(),
            build_base(Family::Dihedral, &[12], 100).unwrap(),
            build_base(Family::Cyclic, &[10], 100).unwrap(),
        ]
    }

    #[test]
    fn sylow_orders() {
        for g in small_groups() {
            for p in prime_divisors(g.order() as u64) {
                let s = sylow_subgroup(&g, p);
                assert_eq!(s.order() as u64, p_part(g.order() as u64, p));
            }
        }
        let sl = build_base(Family::SL23, &[], 100).unwrap();
        let s2 = sylow_subgroup(&sl, 2);
        assert_eq!(s2.order(), 8);
        assert!(!s2.is_abelian());
        assert_eq!(sylow_subgroup(&sz8_borel().unwrap(), 2).order(), 64);
        assert!(sylow_subgroup(&sl, 5).is_trivial());
    }

    #[test]
    fn cores_and_fitting_match_brute_force() {
        for g in small_groups() {
            let normals = normal_subgroups(&g);
            for p in prime_divisors(g.order() as u64) {
                let best = normals
                    .iter()
                    .filter(|n| crate::arith::factorize(n.order() as u64).iter().all(|&(q, _)| q == p))
                    .max_by_key(|n| n.order())
                    .unwrap();
                assert_eq!(&p_core(&g, p), best);
            }
            let fit = fitting_subgroup(&g);
            let best = normals
                .iter()
                .filter(|n| is_nilpotent(&g.subgroup_as_group(n)))
                .max_by_key(|n| n.order())
                .unwrap();
            assert_eq!(&fit, best);
        }
        let s3 = build_base(Family::Dihedral, &[6], 100).unwrap();
        assert!(p_core(&s3, 2).is_trivial());
        assert_eq!(fitting_subgroup(&s3).order(), 3);
        let sl = build_base(Family::SL23, &[], 100).unwrap();
        assert_eq!(p_core(&sl, 2).order(), 8);
    }

    #[test]
    fn nilpotency() {
        assert!(is_nilpotent(&extraspecial(2, Sign::Minus).unwrap()));
        assert!(!is_nilpotent(&build_base(Family::Dihedral, &[6], 100).unwrap()));
        assert!(!is_nilpotent(&sz8_borel().unwrap()));
    }
}
