use serde::Serialize;

use super::profile::{vanishing_profile, VanishingProfile};
use crate::arith::{gcd, is_prime, is_square_free, prime_divisors};
use crate::group::{center, quotient, FiniteGroup, Subgroup};
use crate::structure::{
    fitting_subgroup, hall_complement, is_nilpotent_subgroup, is_solvable, is_supersolvable,
    minimal_normal_subgroups, normal_hall_subgroup, sylow_subgroup,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantCheck {
    pub name: &'static str,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl InvariantCheck {
    fn outcome(name: &'static str, ok: bool, detail: impl FnOnce() -> String) -> Self {
        InvariantCheck {
            name,
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: (!ok).then(detail),
        }
    }

    fn skipped(name: &'static str) -> Self {
        InvariantCheck {
            name,
            status: CheckStatus::NotApplicable,
            detail: None,
        }
    }

    pub fn failed(&self) -> bool {
        self.status == CheckStatus::Fail
    }
}

/// Nonvanishing elements of `g`, one per class.
fn nonvanishing_reps(g: &FiniteGroup, profile: &VanishingProfile) -> Vec<usize> {
    let reps = &g.classes().reps;
    profile
        .nonvanishing_class_indices
        .iter()
        .map(|&j| reps[j])
        .collect()
}

/// Smallest `k >= 1` with `x^k` in `n`.
fn order_modulo(g: &FiniteGroup, x: usize, n: &Subgroup) -> u64 {
    let mut y = x;
    let mut k = 1;
    while !n.contains(y) {
        y = g.mul(y, x);
        k += 1;
    }
    k
}

/// Quotients used to test that vanishing classes lift: by the center and by
/// the first minimal normal subgroup, when these are proper and nontrivial.
fn lift_targets(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut targets: Vec<Subgroup> = Vec::new();
    let z = center(g);
    if !z.is_trivial() && !z.is_whole() {
        targets.push(z);
    }
    if let Some(m) = minimal_normal_subgroups(g).into_iter().next() {
        if !m.is_whole() && !targets.contains(&m) {
            targets.push(m);
        }
    }
    targets
}

/// Every element of a vanishing class of `G/N` must be vanishing in `G`.
fn quotient_lift_failure(
    g: &FiniteGroup,
    profile: &VanishingProfile,
    n: &Subgroup,
) -> Option<String> {
    let (q, hom) = quotient(g, n).ok()?;
    let qp = match vanishing_profile(&q) {
        Ok(p) => p,
        Err(e) => return Some(format!("quotient table failed: {e}")),
    };
    g.elements()
        .find(|&x| qp.is_vanishing(&q, hom.image_of(x)) && !profile.is_vanishing(g, x))
        .map(|x| format!("element {x} is nonvanishing but its image mod |N| = {} vanishes", n.order()))
}

/// Runs every implication among vanishing sizes and group structure that
/// applies to `g`, reporting each with a witness on failure.
pub fn verify_vanishing_invariants(
    g: &FiniteGroup,
    profile: &VanishingProfile,
    seed: u64,
) -> Vec<InvariantCheck> {
    let mut out = Vec::new();
    let solvable = is_solvable(g);
    let supersolvable = solvable && is_supersolvable(g);
    let fit = fitting_subgroup(g);
    let single = profile.s.is_some();

    out.push(InvariantCheck::outcome(
        "vcs_within_cs",
        profile.vcs.iter().all(|s| *s != 1 && profile.cs.contains(s)),
        || format!("vcs {:?} not inside cs {:?} minus 1", profile.vcs, profile.cs),
    ));

    // Primes of all vanishing sizes give a normal Hall subgroup with abelian complement.
    let mut pi: Vec<u64> = profile.vcs.iter().flat_map(|&s| prime_divisors(s)).collect();
    pi.sort_unstable();
    pi.dedup();
    let hall = normal_hall_subgroup(g, &pi);
    let comp = hall.as_ref().and_then(|n| hall_complement(g, n, seed).ok());
    out.push(InvariantCheck::outcome(
        "hall_decomposition",
        comp.as_ref().is_some_and(Subgroup::is_abelian),
        || format!("pi = {pi:?}: normal Hall subgroup or abelian complement missing"),
    ));

    match (&hall, &comp) {
        (Some(n), Some(h)) if h.is_abelian() => {
            // Vanishing elements of N centralize some N-conjugate of H.
            let miss = g.classes().reps.iter().copied().find(|&x| {
                n.contains(x)
                    && profile.is_vanishing(g, x)
                    && !n.members().iter().any(|&y| {
                        h.generators().iter().all(|&k| g.commutes(x, g.conj(k, y)))
                    })
            });
            out.push(InvariantCheck::outcome("hall_conjugate_centralizes", miss.is_none(), || {
                format!("vanishing element {miss:?} centralizes no N-conjugate of H")
            }));

            let chn = h.centralizing(n.generators());
            let z = center(g);
            let mut ok = chn == z.intersection(h);
            let mut detail = String::from("C_H(N) differs from Z(G) meet H");
            if ok && !chn.is_trivial() {
                let (q, hom) = quotient(g, &chn).expect("central subgroup is normal");
                if let Some(x) = g
                    .elements()
                    .find(|&x| q.class_size_of(hom.image_of(x)) != g.class_size_of(x))
                {
                    ok = false;
                    detail = format!("class size of {x} changes modulo C_H(N)");
                } else if let Ok(qp) = vanishing_profile(&q) {
                    ok = qp.vcs.iter().all(|s| profile.vcs.contains(s));
                    detail = format!("vcs of quotient {:?} not inside {:?}", qp.vcs, profile.vcs);
                }
            }
            out.push(InvariantCheck::outcome("central_complement_part", ok, || detail));
        }
        _ => {
            out.push(InvariantCheck::skipped("hall_conjugate_centralizes"));
            out.push(InvariantCheck::skipped("central_complement_part"));
        }
    }

    if supersolvable {
        let zf = fit.center();
        let miss = nonvanishing_reps(g, profile).into_iter().find(|&x| !zf.contains(x));
        out.push(InvariantCheck::outcome("nonvanishing_in_fitting_center", miss.is_none(), || {
            format!("nonvanishing element {miss:?} outside Z(F(G))")
        }));
    } else {
        out.push(InvariantCheck::skipped("nonvanishing_in_fitting_center"));
    }

    if solvable {
        let miss = nonvanishing_reps(g, profile)
            .into_iter()
            .find(|&x| !order_modulo(g, x, &fit).is_power_of_two());
        out.push(InvariantCheck::outcome(
            "nonvanishing_two_power_mod_fitting",
            miss.is_none(),
            || format!("nonvanishing element {miss:?} has non-2-power order mod F(G)"),
        ));
    } else {
        out.push(InvariantCheck::skipped("nonvanishing_two_power_mod_fitting"));
    }

    if !profile.vcs.is_empty() && profile.vcs.iter().all(|&s| is_square_free(s)) {
        out.push(InvariantCheck::outcome(
            "square_free_sizes_supersolvable",
            supersolvable,
            || format!("vcs {:?} square-free but group not supersolvable", profile.vcs),
        ));
    } else {
        out.push(InvariantCheck::skipped("square_free_sizes_supersolvable"));
    }

    if single {
        let bad = minimal_normal_subgroups(g).into_iter().find(|m| !m.is_abelian());
        out.push(InvariantCheck::outcome("minimal_normal_abelian", bad.is_none(), || {
            format!("nonabelian minimal normal subgroup of order {}", bad.map_or(0, |m| m.order()))
        }));
    } else {
        out.push(InvariantCheck::skipped("minimal_normal_abelian"));
    }

    let z = center(g);
    let pi_mod_center = prime_divisors((g.order() / z.order()) as u64);
    let strictly_inside = single
        && profile.pi.iter().all(|p| pi_mod_center.contains(p))
        && profile.pi.len() < pi_mod_center.len();
    let normal_sylow2 = g.order() % 2 == 1 || sylow_subgroup(g, 2).is_normal();
    if strictly_inside && (supersolvable || normal_sylow2) {
        let n = normal_hall_subgroup(g, &profile.pi);
        out.push(InvariantCheck::outcome(
            "nilpotent_hall_subgroup",
            n.as_ref().is_some_and(is_nilpotent_subgroup),
            || format!("Hall {:?}-subgroup missing or not nilpotent", profile.pi),
        ));
    } else {
        out.push(InvariantCheck::skipped("nilpotent_hall_subgroup"));
    }

    match profile.s {
        Some(s) if supersolvable => {
            let zf = fit.center();
            let centers_inside = profile
                .pi
                .iter()
                .all(|&p| sylow_subgroup(g, p).center().is_subset_of(&zf));
            let (q, _) = quotient(g, &zf).expect("Z(F(G)) is characteristic");
            let order = q.order() as u64;
            let cyclic_coprime =
                gcd(order, s) == 1 && q.elements().any(|x| q.element_order(x) == order);
            let prime_orders = q.elements().skip(1).all(|x| is_prime(q.element_order(x)));
            out.push(InvariantCheck::outcome(
                "fitting_center_quotient_shape",
                centers_inside && (cyclic_coprime || prime_orders),
                || format!("G/Z(F(G)) of order {order} is neither cyclic coprime to s nor of prime exponent"),
            ));
        }
        _ => out.push(InvariantCheck::skipped("fitting_center_quotient_shape")),
    }

    let failure = lift_targets(g)
        .iter()
        .find_map(|n| quotient_lift_failure(g, profile, n));
    out.push(InvariantCheck::outcome("quotient_vanishing_lifts", failure.is_none(), || {
        failure.unwrap_or_default()
    }));

    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{build_base, extraspecial, sz8_borel, Family, Sign};
    use crate::group::DEFAULT_BOUND;
    use crate::vanishing::fixtures;

    fn run(g: &FiniteGroup) -> Vec<InvariantCheck> {
        let p = vanishing_profile(g).unwrap();
        verify_vanishing_invariants(g, &p, 11)
    }

    fn status(checks: &[InvariantCheck], name: &str) -> CheckStatus {
        checks.iter().find(|c| c.name == name).unwrap().status
    }

    #[test]
    fn small_groups_pass_everything_applicable() {
        let groups = [
            build_base(Family::Dihedral, &[6], DEFAULT_BOUND).unwrap(),
            build_base(Family::Dihedral, &[10], DEFAULT_BOUND).unwrap(),
            build_base(Family::SL23, &[], DEFAULT_BOUND).unwrap(),
            build_base(Family::Alt5, &[], DEFAULT_BOUND).unwrap(),
            build_base(Family::Cyclic, &[12], DEFAULT_BOUND).unwrap(),
            extraspecial(2, Sign::Minus).unwrap(),
            extraspecial(3, Sign::Plus).unwrap(),
            fixtures::a4(),
        ];
        for g in &groups {
            let checks = run(g);
            assert!(checks.iter().all(|c| !c.failed()), "order {}: {checks:?}", g.order());
        }
    }

    #[test]
    fn s3_exercises_the_supersolvable_checks() {
        let g = build_base(Family::Dihedral, &[6], DEFAULT_BOUND).unwrap();
        let checks = run(&g);
        for name in [
            "hall_decomposition",
            "nonvanishing_in_fitting_center",
            "nonvanishing_two_power_mod_fitting",
            "square_free_sizes_supersolvable",
            "minimal_normal_abelian",
            "nilpotent_hall_subgroup",
            "fitting_center_quotient_shape",
        ] {
            assert_eq!(status(&checks, name), CheckStatus::Pass, "{name}");
        }
    }

    #[test]
    fn sz8_borel_decomposes_as_64_by_7() {
        let g = sz8_borel().unwrap();
        let p = vanishing_profile(&g).unwrap();
        let n = normal_hall_subgroup(&g, &p.pi).unwrap();
        let h = hall_complement(&g, &n, 1).unwrap();
        assert_eq!((n.order(), h.order()), (64, 7));
        assert!(h.is_abelian());
        assert!(verify_vanishing_invariants(&g, &p, 1).iter().all(|c| !c.failed()));
    }

    #[test]
    fn quaternion_nonvanishing_is_center() {
        let g = extraspecial(2, Sign::Minus).unwrap();
        let p = vanishing_profile(&g).unwrap();
        let z = center(&g);
        let nonvanishing: Vec<usize> = g.elements().filter(|&x| !p.is_vanishing(&g, x)).collect();
        assert_eq!(nonvanishing, z.members());
    }

    #[test]
    fn alternating5_skips_solvable_checks() {
        let g = build_base(Family::Alt5, &[], DEFAULT_BOUND).unwrap();
        let checks = run(&g);
        assert_eq!(status(&checks, "nonvanishing_two_power_mod_fitting"), CheckStatus::NotApplicable);
        assert_eq!(status(&checks, "hall_decomposition"), CheckStatus::Pass);
    }
}
