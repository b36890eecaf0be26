use serde::Serialize;

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

/// Outcome of scanning class sizes outside `N C_H(N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OutsideScan {
    /// `N C_H(N) = G`, nothing to scan.
    Degenerate,
    Constant(u64),
    Varying,
}

/// Centralizer conditions over `h in H \ C_H(N)` next to a direct class-size scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SameSizeReport {
    /// Constant `|H : C_H(h)|`, constant `|N : C_N(h)|`,
    /// `C_N(C_H(h)) = C_N(h)`, and `C_N(h)` abelian.
    pub conditions_abcd: [bool; 4],
    pub outside: OutsideScan,
    pub h_index: Option<u64>,
    pub n_index: Option<u64>,
}

impl SameSizeReport {
    pub fn conditions_hold(&self) -> bool {
        self.conditions_abcd.iter().all(|&b| b)
    }

    pub fn constant_outside(&self) -> bool {
        !matches!(self.outside, OutsideScan::Varying)
    }

    /// Whether the conditions and the scan agree.
    pub fn consistent(&self) -> bool {
        self.conditions_hold() == self.constant_outside()
    }
}

/// Checks that `n` is a normal Hall subgroup with complement `h`.
pub fn check_hall_pair(g: &FiniteGroup, n: &Subgroup, h: &Subgroup) -> Result<()> {
    let (order_n, order_h) = (n.order() as u64, h.order() as u64);
    let reason = if !n.is_normal() {
        "N is not normal"
    } else if gcd(order_n, n.index() as u64) != 1 {
        "N is not a Hall subgroup"
    } else if order_n * order_h != g.order() as u64 || !n.intersection(h).is_trivial() {
        "H is not a complement of N"
    } else {
        return Ok(());
    };
    Err(Error::NotHallPair(reason.into()))
}

/// Evaluates the four centralizer conditions and, independently, whether all
/// elements outside `N C_H(N)` share one class size.
pub fn check_same_size_conditions(
    g: &FiniteGroup,
    n: &Subgroup,
    h: &Subgroup,
) -> Result<SameSizeReport> {
    check_hall_pair(g, n, h)?;
    let ch_n = h.centralizing(n.generators());
    let inner = n.product(&ch_n);

    let mut h_indices = Vec::new();
    let mut n_indices = Vec::new();
    let mut centralizers_match = true;
    let mut abelian = true;
    for &x in h.members() {
        if ch_n.contains(x) {
            continue;
        }
        let ch_x = h.centralizing(&[x]);
        let cn_x = n.centralizing(&[x]);
        h_indices.push((h.order() / ch_x.order()) as u64);
        n_indices.push((n.order() / cn_x.order()) as u64);
        centralizers_match &= n.centralizing(ch_x.generators()) == cn_x;
        abelian &= cn_x.is_abelian();
    }
    let constant = |v: &[u64]| v.windows(2).all(|w| w[0] == w[1]);

    let outside = if inner.is_whole() {
        OutsideScan::Degenerate
    } else {
        let mut sizes = g
            .elements()
            .filter(|&x| !inner.contains(x))
            .map(|x| g.class_size_of(x));
        let first = sizes.next().expect("proper subgroup");
        if sizes.all(|s| s == first) {
            OutsideScan::Constant(first)
        } else {
            OutsideScan::Varying
        }
    };

    Ok(SameSizeReport {
        conditions_abcd: [
            constant(&h_indices),
            constant(&n_indices),
            centralizers_match,
            abelian,
        ],
        outside,
        h_index: h_indices.first().copied(),
        n_index: n_indices.first().copied(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vanishing::fixtures;
    use crate::constructors::{build_base, direct_product, extraspecial, sz8_borel, Family, Sign};
    use crate::group::DEFAULT_BOUND;
    use crate::structure::{hall_complement, normal_hall_subgroup, sylow_subgroup};

    fn pair(g: &FiniteGroup, pi: &[u64]) -> (Subgroup, Subgroup) {
        let n = normal_hall_subgroup(g, pi).unwrap();
        let h = hall_complement(g, &n, 1).unwrap();
        (n, h)
    }

    #[test]
    fn s3_all_conditions_and_constant_three() {
        let g = build_base(Family::Dihedral, &[6], DEFAULT_BOUND).unwrap();
        let (n, h) = pair(&g, &[3]);
        let r = check_same_size_conditions(&g, &n, &h).unwrap();
        assert_eq!(r.conditions_abcd, [true; 4]);
        assert_eq!(r.outside, OutsideScan::Constant(3));
    }

    #[test]
    fn sl23_quaternion_by_three() {
        let g = build_base(Family::SL23, &[], DEFAULT_BOUND).unwrap();
        let (n, h) = pair(&g, &[2]);
        assert_eq!((n.order(), h.order()), (8, 3));
        let r = check_same_size_conditions(&g, &n, &h).unwrap();
        assert_eq!(r.conditions_abcd, [true; 4]);
        assert_eq!(r.outside, OutsideScan::Constant(4));
    }

    #[test]
    fn central_complement_is_degenerate() {
        let d8 = extraspecial(2, Sign::Plus).unwrap();
        let c3 = build_base(Family::Cyclic, &[3], DEFAULT_BOUND).unwrap();
        let g = direct_product(&[d8, c3], DEFAULT_BOUND).unwrap();
        let (n, h) = pair(&g, &[2]);
        let r = check_same_size_conditions(&g, &n, &h).unwrap();
        assert_eq!(r.outside, OutsideScan::Degenerate);
        assert!(r.consistent());
    }

    #[test]
    fn sz8_borel_frobenius_pair() {
        let g = sz8_borel().unwrap();
        let (n, h) = pair(&g, &[2]);
        let r = check_same_size_conditions(&g, &n, &h).unwrap();
        assert_eq!(r.conditions_abcd, [true; 4]);
        assert_eq!(r.outside, OutsideScan::Constant(64));
    }

    #[test]
    fn rejects_non_hall_pairs() {
        let g = build_base(Family::Alt5, &[], DEFAULT_BOUND).unwrap();
        let p = sylow_subgroup(&g, 5);
        let q = sylow_subgroup(&g, 3);
        assert!(matches!(
            check_same_size_conditions(&g, &p, &q),
            Err(Error::NotHallPair(_))
        ));
    }

    /// Brute force over every element outside N C_H(N) of a small set of groups.
    #[test]
    fn conditions_match_scan_on_small_groups() {
        let groups = vec![
            build_base(Family::Dihedral, &[10], DEFAULT_BOUND).unwrap(),
            build_base(Family::Dihedral, &[12], DEFAULT_BOUND).unwrap(),
            build_base(Family::SL23, &[], DEFAULT_BOUND).unwrap(),
            fixtures::a4(),
            fixtures::sdp(&[(3, 1), (3, 1), (3, 1)], extraspecial(2, Sign::Minus).unwrap()),
        ];
        for g in &groups {
            for p in crate::arith::prime_divisors(g.order() as u64) {
                let Some(n) = normal_hall_subgroup(g, &[p]) else { continue };
                let Ok(h) = hall_complement(g, &n, 3) else { continue };
                let r = check_same_size_conditions(g, &n, &h).unwrap();
                assert!(r.consistent(), "order {} prime {p}: {r:?}", g.order());
            }
        }
    }
}
