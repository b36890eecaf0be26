use serde::Serialize;

use super::classify::{direct_case_checks, frobenius_case_checks, subgroup_class_sizes, Check};
use super::profile::VanishingProfile;
use crate::arith::{is_prime_power, is_square_free, p_part, prime_divisors};
use crate::group::{center, quotient, FiniteGroup, Subgroup};
use crate::structure::{
    fitting_subgroup, hall_complement, is_frobenius_with_kernel, normal_hall_subgroup, p_core,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    /// `G = N x H`, `N` a `p`-group with two class sizes.
    Direct,
    /// `G/Z(G)` Frobenius with kernel `NZ/Z`, `N` free of vanishing elements.
    FrobeniusModCenter,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Direction {
    NotApplicable,
    Pass { shape: Shape, s: u64 },
    Fail { detail: String },
}

impl Direction {
    pub fn failed(&self) -> bool {
        matches!(self, Direction::Fail { .. })
    }
}

/// Both directions of the characterization of a single vanishing class size
/// that is a prime power or square-free.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterizationReport {
    /// A single size `s` in scope forces one of the two shapes.
    pub forward: Direction,
    /// A detected shape forces `vcs(G) = {s}`.
    pub reverse: Direction,
}

impl CharacterizationReport {
    pub fn consistent(&self) -> bool {
        !self.forward.failed() && !self.reverse.failed()
    }
}

fn in_scope(s: u64) -> bool {
    is_prime_power(s) || is_square_free(s)
}

fn passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed || !c.required)
}

fn forward(g: &FiniteGroup, profile: &VanishingProfile, seed: u64) -> Direction {
    let Some(s) = profile.s.filter(|&s| in_scope(s)) else {
        return Direction::NotApplicable;
    };
    let fail = |detail: String| Direction::Fail { detail };
    let Some(n) = normal_hall_subgroup(g, &profile.pi) else {
        return fail(format!("no normal Hall {:?}-subgroup", profile.pi));
    };
    let Some(h) = hall_complement(g, &n, seed).ok().filter(Subgroup::is_abelian) else {
        return fail("no abelian complement".into());
    };
    let z = center(g);
    let pi_mod_center = prime_divisors((g.order() / z.order()) as u64);
    let whole = pi_mod_center == profile.pi;
    if passed(&direct_case_checks(s, &n, &h)) {
        return if whole {
            Direction::Pass { shape: Shape::Direct, s }
        } else {
            fail("direct shape with pi smaller than pi(G/Z(G))".into())
        };
    }
    let (checks, frob) = frobenius_case_checks(profile, s, &n, &h, &z, seed);
    if passed(&checks) && frob.is_some() {
        return if whole {
            fail("Frobenius shape with pi equal to pi(G/Z(G))".into())
        } else {
            Direction::Pass { shape: Shape::FrobeniusModCenter, s }
        };
    }
    let failed: Vec<String> = checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect();
    fail(format!("neither shape holds for s = {s}; failed {failed:?}"))
}

/// Looks for `G = P x H` with `P` a normal Sylow subgroup having class sizes `{1, t}`.
fn detect_direct(g: &FiniteGroup, seed: u64) -> Option<u64> {
    let order = g.order() as u64;
    for p in prime_divisors(order) {
        let sylow = p_core(g, p);
        if sylow.order() as u64 != p_part(order, p) {
            continue;
        }
        let Ok(h) = hall_complement(g, &sylow, seed) else { continue };
        let central = h
            .generators()
            .iter()
            .all(|&x| sylow.generators().iter().all(|&y| g.commutes(x, y)));
        if !(h.is_abelian() && central) {
            continue;
        }
        if let [1, t] = subgroup_class_sizes(&sylow)[..] {
            return Some(t);
        }
    }
    None
}

/// Looks for `G/Z(G)` Frobenius with kernel `F(G/Z(G)) = NZ/Z`, `N` the normal
/// Hall subgroup for the primes of the kernel, abelian complement, and no
/// vanishing element in `N`.
fn detect_frobenius(g: &FiniteGroup, profile: &VanishingProfile, seed: u64) -> Option<u64> {
    let z = center(g);
    let (q, image): (FiniteGroup, Box<dyn Fn(&Subgroup) -> Subgroup>) = if z.is_trivial() {
        (g.clone(), Box::new(|h: &Subgroup| h.clone()))
    } else {
        let (q, hom) = quotient(g, &z).ok()?;
        (q, Box::new(move |h: &Subgroup| hom.image(h)))
    };
    let kernel = fitting_subgroup(&q);
    is_frobenius_with_kernel(&q, &kernel, seed)?;
    let s = kernel.order() as u64;
    let n = normal_hall_subgroup(g, &prime_divisors(s))?;
    let h = hall_complement(g, &n, seed).ok()?;
    let fits = image(&n) == kernel && h.is_abelian() && profile.avoids_vanishing(&n);
    fits.then_some(s)
}

fn reverse(g: &FiniteGroup, profile: &VanishingProfile, seed: u64) -> Direction {
    let detected = detect_direct(g, seed)
        .map(|s| (Shape::Direct, s))
        .or_else(|| detect_frobenius(g, profile, seed).map(|s| (Shape::FrobeniusModCenter, s)));
    match detected {
        Some((shape, s)) if in_scope(s) => {
            if profile.vcs == [s] {
                Direction::Pass { shape, s }
            } else {
                Direction::Fail {
                    detail: format!("{shape:?} shape predicts vcs [{s}], found {:?}", profile.vcs),
                }
            }
        }
        _ => Direction::NotApplicable,
    }
}

/// Checks the characterization in both directions on `g`.
pub fn verify_single_size_characterization(
    g: &FiniteGroup,
    profile: &VanishingProfile,
    seed: u64,
) -> CharacterizationReport {
    CharacterizationReport {
        forward: forward(g, profile, seed),
        reverse: reverse(g, profile, seed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{build_base, extraspecial, sz8_borel, Family, Sign};
    use crate::group::DEFAULT_BOUND;
    use crate::vanishing::{fixtures, vanishing_profile};

    fn run(g: &FiniteGroup) -> CharacterizationReport {
        let p = vanishing_profile(g).unwrap();
        verify_single_size_characterization(g, &p, 5)
    }

    #[test]
    fn s3_passes_both_ways() {
        let g = build_base(Family::Dihedral, &[6], DEFAULT_BOUND).unwrap();
        let r = run(&g);
        let expected = Direction::Pass {
            shape: Shape::FrobeniusModCenter,
            s: 3,
        };
        assert_eq!(r.forward, expected);
        assert_eq!(r.reverse, expected);
    }

    #[test]
    fn sz8_borel_frobenius_both_ways() {
        let r = run(&sz8_borel().unwrap());
        assert!(matches!(r.forward, Direction::Pass { shape: Shape::FrobeniusModCenter, s: 64 }));
        assert!(matches!(r.reverse, Direction::Pass { s: 64, .. }));
    }

    #[test]
    fn sl23_is_vacuous() {
        let r = run(&build_base(Family::SL23, &[], DEFAULT_BOUND).unwrap());
        assert_eq!(r.forward, Direction::NotApplicable);
        assert!(r.consistent());
    }

    #[test]
    fn extraspecial_groups_are_direct() {
        for (p, sign) in [(2, Sign::Plus), (3, Sign::Plus), (3, Sign::Minus)] {
            let r = run(&extraspecial(p, sign).unwrap());
            assert_eq!(r.forward, Direction::Pass { shape: Shape::Direct, s: p });
            assert_eq!(r.reverse, Direction::Pass { shape: Shape::Direct, s: p });
        }
    }

    #[test]
    fn a4_and_dihedral10() {
        for g in [fixtures::a4(), build_base(Family::Dihedral, &[10], DEFAULT_BOUND).unwrap()] {
            let r = run(&g);
            assert!(matches!(r.forward, Direction::Pass { shape: Shape::FrobeniusModCenter, .. }));
            assert!(r.consistent());
        }
    }
}
