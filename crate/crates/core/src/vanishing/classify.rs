use serde::Serialize;

use super::profile::{vanishing_profile, VanishingProfile};
use crate::arith::{is_prime_power, p_part, pi_part, prime_divisors};
use crate::error::Result;
use crate::group::{center, quotient, FiniteGroup, Subgroup};
use crate::structure::{
    fitting_subgroup, hall_complement, is_frobenius_with_kernel, is_nilpotent_subgroup,
    is_supersolvable, normal_hall_subgroup, p_core, sylow_subgroup, FrobeniusWitness,
};

/// Structural shape of a group with a single vanishing class size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseLabel {
    NotSingleVcs,
    /// `G = N x H` with `N` a `p`-group, `cs(N) = {1, s}`, `H` abelian.
    PGroupDirect,
    /// `G/Z(G)` is Frobenius with kernel `NZ/Z` of order `s`, and `N`
    /// holds no vanishing element.
    FrobeniusModCenter,
    /// `G = NP` up to a central abelian factor, `N` a nilpotent normal
    /// `p`-complement, with the centralizer conditions on `P` and `N`.
    SylowOverComplement,
    /// A non-supersolvable Hall `{p, q}`-subgroup whose quotient by its
    /// Fitting subgroup is Frobenius with kernel of index `q`.
    TwoPrimeFrobenius,
    Unclassified,
}

impl CaseLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::NotSingleVcs => "not_single_vcs",
            CaseLabel::PGroupDirect => "p_group_direct",
            CaseLabel::FrobeniusModCenter => "frobenius_mod_center",
            CaseLabel::SylowOverComplement => "sylow_over_complement",
            CaseLabel::TwoPrimeFrobenius => "two_prime_frobenius",
            CaseLabel::Unclassified => "unclassified",
        }
    }
}

/// One named sub-condition. Optional checks are reported but do not decide a case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub required: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool) -> Self {
        Check {
            name: name.into(),
            passed,
            required: true,
            detail: None,
        }
    }

    fn optional(mut self) -> Self {
        self.required = false;
        self
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        if !self.passed {
            self.detail = Some(detail.into());
        }
        self
    }
}

fn decided(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed || !c.required)
}

/// Frobenius structure of `G/Z(G)`; the witness lives in the quotient.
#[derive(Clone, Debug)]
pub struct QuotientFrobenius {
    pub center_order: usize,
    pub witness: FrobeniusWitness,
}

#[derive(Clone, Debug)]
pub struct ClassificationResult {
    pub case: CaseLabel,
    pub s: Option<u64>,
    pub pi: Vec<u64>,
    /// Primes dividing `|G/Z(G)|`.
    pub pi_mod_center: Vec<u64>,
    /// Normal Hall `pi`-subgroup.
    pub hall: Option<Subgroup>,
    /// Abelian `pi`-complement.
    pub complement: Option<Subgroup>,
    pub frobenius: Option<QuotientFrobenius>,
    pub prime: Option<u64>,
    pub second_prime: Option<u64>,
    pub sylow: Option<Subgroup>,
    pub normal_complement: Option<Subgroup>,
    pub checks: Vec<Check>,
}

/// Integer-only digest of a classification for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationSummary {
    pub case: CaseLabel,
    pub s: Option<u64>,
    pub pi: Vec<u64>,
    pub hall_order: Option<usize>,
    pub complement_order: Option<usize>,
    pub frobenius_kernel_order: Option<usize>,
    pub frobenius_complement_order: Option<usize>,
    pub prime: Option<u64>,
    pub second_prime: Option<u64>,
    pub checks: Vec<Check>,
}

impl ClassificationResult {
    fn new(s: Option<u64>, pi: Vec<u64>) -> Self {
        ClassificationResult {
            case: CaseLabel::Unclassified,
            s,
            pi,
            pi_mod_center: Vec::new(),
            hall: None,
            complement: None,
            frobenius: None,
            prime: None,
            second_prime: None,
            sylow: None,
            normal_complement: None,
            checks: Vec::new(),
        }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failed_checks(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    /// Whether `N` is nonabelian in a Sylow-over-complement outcome.
    pub fn has_nonabelian_complement(&self) -> bool {
        self.case == CaseLabel::SylowOverComplement
            && self.normal_complement.as_ref().is_some_and(|n| !n.is_abelian())
    }

    pub fn summary(&self) -> ClassificationSummary {
        ClassificationSummary {
            case: self.case,
            s: self.s,
            pi: self.pi.clone(),
            hall_order: self.hall.as_ref().map(Subgroup::order),
            complement_order: self.complement.as_ref().map(Subgroup::order),
            frobenius_kernel_order: self.frobenius.as_ref().map(|f| f.witness.kernel.order()),
            frobenius_complement_order: self
                .frobenius
                .as_ref()
                .map(|f| f.witness.complement.order()),
            prime: self.prime,
            second_prime: self.second_prime,
            checks: self.checks.clone(),
        }
    }
}

/// Class sizes of a subgroup computed inside it.
pub(crate) fn subgroup_class_sizes(h: &Subgroup) -> Vec<u64> {
    h.parent().subgroup_as_group(h).classes().size_set()
}

/// `G = N x H` with `N` a `p`-group whose class sizes are `{1, s}`.
pub(crate) fn direct_case_checks(s: u64, n: &Subgroup, h: &Subgroup) -> Vec<Check> {
    let mut checks = vec![
        Check::new("s_is_prime_power", is_prime_power(s)),
        Check::new(
            "complement_centralizes_hall",
            h.generators()
                .iter()
                .all(|&x| n.generators().iter().all(|&y| n.parent().commutes(x, y))),
        ),
    ];
    if decided(&checks) {
        let sizes = subgroup_class_sizes(n);
        checks.push(
            Check::new("hall_class_sizes", sizes == [1, s])
                .with_detail(format!("cs(N) = {sizes:?}")),
        );
    }
    checks
}

/// `G/Z(G)` Frobenius with kernel `NZ/Z` of order `s`, complement `HZ/Z`,
/// and no vanishing element of `G` inside `N`.
pub(crate) fn frobenius_case_checks(
    profile: &VanishingProfile,
    s: u64,
    n: &Subgroup,
    h: &Subgroup,
    z: &Subgroup,
    seed: u64,
) -> (Vec<Check>, Option<QuotientFrobenius>) {
    let g = n.parent();
    let (q, kernel, comp) = if z.is_trivial() {
        (g.clone(), n.clone(), h.clone())
    } else {
        let (q, hom) = quotient(g, z).expect("center is normal");
        let kernel = hom.image(n);
        let comp = hom.image(h);
        (q, kernel, comp)
    };
    let mut checks = vec![Check::new("kernel_order_is_s", kernel.order() as u64 == s)
        .with_detail(format!("|NZ/Z| = {}", kernel.order()))];
    let witness = is_frobenius_with_kernel(&q, &kernel, seed);
    checks.push(Check::new("quotient_is_frobenius", witness.is_some()));
    let fixed_point_free = comp.order() * kernel.order() == q.order()
        && comp.members()[1..]
            .iter()
            .all(|&x| kernel.members()[1..].iter().all(|&y| !q.commutes(x, y)));
    checks.push(Check::new("complement_image_fixed_point_free", fixed_point_free));
    let hit = profile.vanishing_in(n);
    checks.push(
        Check::new("hall_avoids_vanishing", hit.is_none())
            .with_detail(format!("vanishing element {hit:?} lies in N")),
    );
    let frob = witness.map(|witness| QuotientFrobenius {
        center_order: z.order(),
        witness,
    });
    (checks, frob)
}

struct SylowCase {
    checks: Vec<Check>,
    sylow: Subgroup,
    complement: Option<Subgroup>,
}

/// `G = NP` with `N` a nilpotent normal `p`-complement inside the Hall `pi`-part.
fn sylow_case_checks(
    g: &FiniteGroup,
    profile: &VanishingProfile,
    s: u64,
    pi: &[u64],
    p: u64,
    z: &Subgroup,
    supersolvable: bool,
) -> SylowCase {
    let others: Vec<u64> = pi.iter().copied().filter(|&q| q != p).collect();
    let sylow = sylow_subgroup(g, p);
    let nc = normal_hall_subgroup(g, &others).filter(|nc| !nc.is_trivial());
    let mut checks = vec![Check::new(
        "normal_p_complement",
        nc.as_ref().is_some_and(is_nilpotent_subgroup),
    )];
    let Some(nc) = nc.filter(|_| decided(&checks)) else {
        return SylowCase {
            checks,
            sylow,
            complement: None,
        };
    };
    let s_p = p_part(s, p);
    let s_rest = s / s_p;
    let sizes = subgroup_class_sizes(&sylow);
    checks.push(
        Check::new("sylow_class_sizes", sizes == [1, s_p])
            .with_detail(format!("cs(P) = {sizes:?}, expected [1, {s_p}]")),
    );
    let zp = sylow.center();
    let cpn = sylow.centralizing(nc.generators());
    checks.push(Check::new("sylow_center_centralizes_complement", zp == cpn));
    checks.push(Check::new(
        "sylow_centralizer_is_central",
        cpn == z.intersection(&sylow),
    ));
    let exponent_p = sylow.members().iter().all(|&x| zp.contains(g.pow(x, p)));
    checks.push(Check::new("sylow_mod_center_exponent_p", exponent_p));
    let gens = sylow.generators();
    let abelian_mod_center = gens
        .iter()
        .all(|&a| gens.iter().all(|&b| zp.contains(g.commutator(a, b))));
    let mut elementary =
        Check::new("sylow_mod_center_elementary_abelian", exponent_p && abelian_mod_center);
    let mut nc_abelian = Check::new("complement_abelian", nc.is_abelian());
    if !supersolvable {
        elementary = elementary.optional();
        nc_abelian = nc_abelian.optional();
    }
    checks.push(elementary);
    checks.push(nc_abelian);

    let (mut index_ok, mut match_ok, mut abelian_ok) = (true, true, true);
    for &x in sylow.members() {
        if zp.contains(x) {
            continue;
        }
        let cnx = nc.centralizing(&[x]);
        index_ok &= (nc.order() / cnx.order()) as u64 == s_rest;
        let cpx = sylow.centralizing(&[x]);
        match_ok &= nc.centralizing(cpx.generators()) == cnx;
        abelian_ok &= cnx.is_abelian();
    }
    checks.push(Check::new("complement_index_constant", index_ok));
    checks.push(Check::new("complement_centralizers_match", match_ok));
    checks.push(Check::new("complement_centralizers_abelian", abelian_ok));
    checks.push(Check::new(
        "complement_fixed_points_central",
        nc.centralizing(sylow.generators()) == nc.intersection(z),
    ));
    let hit = profile.vanishing_in(&nc);
    checks.push(
        Check::new("complement_avoids_vanishing", hit.is_none())
            .with_detail(format!("vanishing element {hit:?} lies in N")),
    );
    SylowCase {
        checks,
        sylow,
        complement: Some(nc),
    }
}

/// The two-prime case: `G = N H` with `H` a non-supersolvable Hall
/// `{p, q}`-subgroup and `H/F(H)` Frobenius with a `p`-kernel of index `q`.
fn two_prime_case_checks(
    g: &FiniteGroup,
    profile: &VanishingProfile,
    s: u64,
    pi: &[u64],
    (p, q): (u64, u64),
    z: &Subgroup,
    seed: u64,
) -> (Vec<Check>, Option<Subgroup>, Option<Subgroup>) {
    let mut checks = vec![Check::new("q_squared_divides_s", s % (q * q) == 0)];
    let pq = [p, q];
    let others: Vec<u64> = pi.iter().copied().filter(|r| !pq.contains(r)).collect();
    let nc = normal_hall_subgroup(g, &others);
    checks.push(Check::new(
        "two_prime_normal_complement",
        nc.as_ref().is_some_and(is_nilpotent_subgroup),
    ));
    let outside: Vec<u64> = prime_divisors(g.order() as u64)
        .into_iter()
        .filter(|r| !pq.contains(r))
        .collect();
    let hq = normal_hall_subgroup(g, &outside).and_then(|k| hall_complement(g, &k, seed).ok());
    checks.push(Check::new("two_prime_hall_exists", hq.is_some()));
    let (Some(nc), Some(hq)) = (nc, hq) else {
        return (checks, None, None);
    };
    if !decided(&checks) {
        return (checks, Some(nc), Some(hq));
    }
    let hg = g.subgroup_as_group(&hq);
    checks.push(Check::new("two_prime_hall_not_supersolvable", !is_supersolvable(&hg)));
    let s_pq = pi_part(s, &pq);
    let hall_vcs = vanishing_profile(&hg).map(|pr| pr.vcs);
    checks.push(
        Check::new(
            "two_prime_hall_single_size",
            hall_vcs.as_ref().is_ok_and(|v| v == &[s_pq]),
        )
        .with_detail(format!("vcs(H) = {hall_vcs:?}")),
    );

    let fit = fitting_subgroup(&hg);
    let (qg, _) = quotient(&hg, &fit).expect("Fitting subgroup is normal");
    let kernel = p_core(&qg, p);
    let frob = kernel.index() as u64 == q
        && kernel.members().iter().all(|&x| x == 0 || qg.element_order(x) == p)
        && is_frobenius_with_kernel(&qg, &kernel, seed).is_some();
    checks.push(Check::new("hall_mod_fitting_frobenius", frob));

    let to_parent = |h: &Subgroup| -> Subgroup {
        Subgroup::from_members(g, h.members().iter().map(|&x| hg.embedded_index(x)).collect())
    };
    let fit_g = to_parent(&fit);
    let centers_inside = [p, q]
        .iter()
        .all(|&r| sylow_subgroup(&hg, r).center().is_subset_of(&fit));
    checks.push(Check::new(
        "hall_fitting_matches",
        fit_g == fitting_subgroup(g).intersection(&hq) && centers_inside,
    ));

    let s_rest = s / s_pq;
    let (mut index_ok, mut match_ok, mut abelian_ok) = (true, true, true);
    for &x in hq.members() {
        if fit_g.contains(x) {
            continue;
        }
        let cnx = nc.centralizing(&[x]);
        index_ok &= (nc.order() / cnx.order()) as u64 == s_rest;
        match_ok &= nc.centralizing(hq.centralizing(&[x]).generators()) == cnx;
        abelian_ok &= cnx.is_abelian();
    }
    checks.push(Check::new("complement_index_constant", index_ok));
    checks.push(Check::new("complement_centralizers_match", match_ok));
    checks.push(Check::new("complement_centralizers_abelian", abelian_ok));
    checks.push(Check::new(
        "complement_fixed_points_central",
        nc.centralizing(hq.generators()) == nc.intersection(z),
    ));
    let region = nc.join(&p_core(g, p));
    let hit = profile.vanishing_in(&region);
    checks.push(
        Check::new("complement_times_p_core_avoids_vanishing", hit.is_none())
            .with_detail(format!("vanishing element {hit:?}")),
    );
    (checks, Some(nc), Some(hq))
}

fn tagged(checks: Vec<Check>, tag: &str) -> impl Iterator<Item = Check> + '_ {
    checks.into_iter().map(move |mut c| {
        c.name = format!("{tag}/{}", c.name);
        c
    })
}

/// Classifies a group by the shape forced on groups with a single vanishing
/// class size. Table errors are propagated.
pub fn classify_single_vcs(g: &FiniteGroup, seed: u64) -> Result<ClassificationResult> {
    let profile = vanishing_profile(g)?;
    Ok(classify_with_profile(g, &profile, seed))
}

pub fn classify_with_profile(
    g: &FiniteGroup,
    profile: &VanishingProfile,
    seed: u64,
) -> ClassificationResult {
    let mut r = ClassificationResult::new(profile.s, profile.pi.clone());
    let Some(s) = profile.s else {
        r.case = CaseLabel::NotSingleVcs;
        return r;
    };
    let pi = profile.pi.clone();
    let z = center(g);
    r.pi_mod_center = prime_divisors((g.order() / z.order()) as u64);

    let n = normal_hall_subgroup(g, &pi);
    r.checks.push(Check::new("normal_hall_subgroup", n.is_some()));
    let Some(n) = n else { return r };
    let h = hall_complement(g, &n, seed).ok();
    r.checks.push(Check::new(
        "abelian_complement",
        h.as_ref().is_some_and(Subgroup::is_abelian),
    ));
    r.hall = Some(n.clone());
    r.complement = h.clone();
    let Some(h) = h.filter(Subgroup::is_abelian) else { return r };

    let direct = direct_case_checks(s, &n, &h);
    if decided(&direct) {
        r.checks.extend(direct);
        r.case = CaseLabel::PGroupDirect;
        r.prime = pi.first().copied();
        return r;
    }
    let mut attempts: Vec<Check> = tagged(direct, "p_group_direct").collect();

    if r.pi_mod_center != pi {
        let (checks, frob) = frobenius_case_checks(profile, s, &n, &h, &z, seed);
        if decided(&checks) && frob.is_some() {
            r.checks.extend(checks);
            r.frobenius = frob;
            r.case = CaseLabel::FrobeniusModCenter;
            return r;
        }
        attempts.extend(tagged(checks, "frobenius_mod_center"));
        r.checks.extend(attempts);
        return r;
    }

    // Here G/Z(G) is a pi-group, so the complement is central and splits off.
    let central = h.is_subset_of(&z);
    r.checks.push(Check::new("complement_central", central));
    if !central {
        r.checks.extend(attempts);
        return r;
    }
    let supersolvable = is_supersolvable(g);
    for &p in &pi {
        let case = sylow_case_checks(g, profile, s, &pi, p, &z, supersolvable);
        if decided(&case.checks) {
            r.checks.extend(case.checks);
            r.case = CaseLabel::SylowOverComplement;
            r.prime = Some(p);
            r.sylow = Some(case.sylow);
            r.normal_complement = case.complement;
            return r;
        }
        attempts.extend(tagged(case.checks, &format!("sylow_over_complement[p={p}]")));
    }
    for &p in &pi {
        for &q in &pi {
            if p == q || s % (q * q) != 0 {
                continue;
            }
            let (checks, nc, hq) = two_prime_case_checks(g, profile, s, &pi, (p, q), &z, seed);
            if decided(&checks) {
                r.checks.extend(checks);
                r.case = CaseLabel::TwoPrimeFrobenius;
                r.prime = Some(p);
                r.second_prime = Some(q);
                r.normal_complement = nc;
                r.sylow = hq;
                return r;
            }
            attempts.extend(tagged(checks, &format!("two_prime_frobenius[p={p},q={q}]")));
        }
    }
    r.checks.extend(attempts);
    r
}
