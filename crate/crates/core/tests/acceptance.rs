//! Acceptance harness: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vcsize_core::arith::prime_divisors;
use vcsize_core::catalog::{run_search, FamilyGrid, SearchConfig};
use vcsize_core::chartab::{character_table, character_table_nth_prime, verify_orthogonality, CharacterTable};
use vcsize_core::dsl::parse_group_expr;
use vcsize_core::group::DEFAULT_BOUND;
use vcsize_core::structure::{hall_complement, normal_hall_subgroup};
use vcsize_core::vanishing::{
    check_same_size_conditions, classify_with_profile, verify_single_size_characterization,
    verify_vanishing_invariants, CaseLabel, ClassificationResult, Direction, VanishingProfile,
};
use vcsize_core::FiniteGroup;

const SEED: u64 = 2024;

struct Member {
    expr: String,
    group: FiniteGroup,
    table: CharacterTable,
    profile: VanishingProfile,
    elapsed: Duration,
}

impl Member {
    fn new(expr: &str) -> Member {
        let start = Instant::now();
        let group = parse_group_expr(expr)
            .and_then(|e| e.build(DEFAULT_BOUND))
            .unwrap_or_else(|e| panic!("{expr}: {e}"));
        let table = character_table(&group).unwrap_or_else(|e| panic!("{expr}: {e}"));
        let profile = VanishingProfile::from_table(&table);
        Member {
            expr: expr.to_string(),
            group,
            table,
            profile,
            elapsed: start.elapsed(),
        }
    }

    fn classify(&self) -> ClassificationResult {
        classify_with_profile(&self.group, &self.profile, SEED)
    }
}

/// Constructions from the family table with their expected single vanishing size.
const FAMILY: [(&str, u64); 12] = [
    ("sdp(3^3,ES(2,+),maxker)", 18),
    ("sdp(3^3,ES(2,-),maxker)", 18),
    ("sdp(5^3,ES(2,+),maxker)", 50),
    ("sdp(5^3,ES(2,-),maxker)", 50),
    ("sdp(7^3,ES(2,+),maxker)", 98),
    ("sdp(7^3,ES(2,-),maxker)", 98),
    ("sdp(11^3,ES(2,+),maxker)", 242),
    ("sdp(11^3,ES(2,-),maxker)", 242),
    ("sdp(9^3,ES(2,+),maxker)", 162),
    ("sdp(9^3,ES(2,-),maxker)", 162),
    ("sdp(7^4,ES(3,+),maxker)", 1029),
    ("sdp((2x2)^4,ES(3,+),maxker)", 192),
];

const SMALL: [&str; 18] = [
    "D(6)",
    "SL23",
    "Sz8Borel",
    "sdp((2x2),C(3),maxker)",
    "D(8)",
    "Q8",
    "D(10)",
    "D(12)",
    "A5",
    "C(12)",
    "ES(3,+)",
    "ES(3,-)",
    "D(8)*C(3)",
    "sdp(7,C(3),maxker)",
    "sdp(5,C(4),maxker)",
    "SL23*C(5)",
    "sdp(3^3,Q8,maxker)",
    "C(30)",
];

/// Ten random direct and semidirect products of order at most 2000, each
/// with at least one proper normal Hall subgroup.
fn random_products() -> Vec<String> {
    const ATOMS: [&str; 12] = [
        "C(2)", "C(3)", "C(4)", "C(5)", "D(6)", "D(8)", "D(10)", "Q8", "SL23",
        "sdp((2x2),C(3),maxker)", "sdp(7,C(3),maxker)", "ES(3,+)",
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut picked = BTreeSet::new();
    let mut out = Vec::new();
    while out.len() < 10 {
        let text = if rng.gen_bool(0.5) {
            let p = [3, 5, 7, 11, 13][rng.gen_range(0..5)];
            let m = [2, 3, 4, 5, 8, 9][rng.gen_range(0..6)];
            let k = rng.gen_range(1..=2);
            let tail = ATOMS[rng.gen_range(0..4)];
            format!("sdp({p}^{k},C({m}),maxker)*{tail}")
        } else {
            let n = rng.gen_range(2..=3);
            (0..n).map(|_| ATOMS[rng.gen_range(0..ATOMS.len())]).collect::<Vec<_>>().join("*")
        };
        let Ok(expr) = parse_group_expr(&text) else { continue };
        if expr.order().map_or(true, |o| o > 2000) {
            continue;
        }
        let Ok(g) = expr.build(DEFAULT_BOUND) else { continue };
        let key = expr.to_string();
        if !hall_pairs(&g).is_empty() && picked.insert(key.clone()) {
            out.push(key);
        }
    }
    out
}

/// Proper nontrivial normal Hall subgroups, one per prime set, with complements.
fn hall_pairs(g: &FiniteGroup) -> Vec<(Vec<u64>, vcsize_core::Subgroup, vcsize_core::Subgroup)> {
    let primes = prime_divisors(g.order() as u64);
    let mut pairs = Vec::new();
    for mask in 1..(1u32 << primes.len()).saturating_sub(1) {
        let pi: Vec<u64> = (0..primes.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| primes[i])
            .collect();
        if let Some(n) = normal_hall_subgroup(g, &pi) {
            let h = hall_complement(g, &n, SEED).expect("Schur-Zassenhaus complement");
            pairs.push((pi, n, h));
        }
    }
    pairs
}

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn find<'a>(corpus: &'a [Member], expr: &str) -> &'a Member {
    let key = parse_group_expr(expr).unwrap().to_string();
    corpus.iter().find(|m| m.expr == key).unwrap_or_else(|| panic!("{expr} not in corpus"))
}

fn sl23_sizes(corpus: &[Member]) -> Outcome {
    let m = find(corpus, "SL23");
    ensure(m.profile.vcs == [4, 6], || format!("vcs = {:?}", m.profile.vcs))?;
    ensure(m.elapsed < Duration::from_secs(1), || format!("took {:?}", m.elapsed))?;
    Ok(format!("vcs(SL(2,3)) = {{4, 6}} in {} ms", m.elapsed.as_millis()))
}

fn sz8_borel(corpus: &[Member]) -> Outcome {
    let m = find(corpus, "Sz8Borel");
    ensure(m.group.order() == 448, || format!("order {}", m.group.order()))?;
    ensure(m.profile.vcs == [64], || format!("vcs = {:?}", m.profile.vcs))?;
    let r = m.classify();
    let kernel = r.frobenius.as_ref().map(|f| f.witness.kernel.order());
    ensure(r.case == CaseLabel::FrobeniusModCenter && kernel == Some(64), || {
        format!("case {:?}, kernel {kernel:?}", r.case)
    })?;
    ensure(m.elapsed < Duration::from_secs(5), || format!("took {:?}", m.elapsed))?;
    Ok(format!("order 448, Frobenius kernel 64, vcs = {{64}} in {} ms", m.elapsed.as_millis()))
}

fn family_table(corpus: &[Member]) -> Outcome {
    let mut slowest = Duration::ZERO;
    for (expr, s) in FAMILY {
        let m = find(corpus, expr);
        ensure(m.profile.vcs == [s], || format!("{expr}: vcs = {:?}, expected [{s}]", m.profile.vcs))?;
        let limit = if m.group.order() == 64827 { 600 } else { 60 };
        ensure(m.elapsed < Duration::from_secs(limit), || format!("{expr}: took {:?}", m.elapsed))?;
        slowest = slowest.max(m.elapsed);
    }
    Ok(format!("{} constructions exact, slowest {} ms", FAMILY.len(), slowest.as_millis()))
}

fn classification(corpus: &[Member]) -> Outcome {
    let s3 = find(corpus, "D(6)").classify();
    let kernel = |r: &ClassificationResult| r.frobenius.as_ref().map(|f| f.witness.kernel.order());
    ensure(s3.case == CaseLabel::FrobeniusModCenter && kernel(&s3) == Some(3), || format!("S3: {:?}", s3.case))?;
    let a4 = find(corpus, "sdp((2x2),C(3),maxker)").classify();
    ensure(a4.case == CaseLabel::FrobeniusModCenter && kernel(&a4) == Some(4), || format!("A4: {:?}", a4.case))?;
    for expr in ["D(8)", "Q8"] {
        let m = find(corpus, expr);
        let r = m.classify();
        ensure(r.case == CaseLabel::PGroupDirect, || format!("{expr}: {:?}", r.case))?;
        let cs: Vec<u64> = m.profile.cs.clone();
        ensure(cs == [1, 2], || format!("{expr}: cs = {cs:?}"))?;
    }
    for (expr, _) in FAMILY {
        let r = find(corpus, expr).classify();
        ensure(r.case == CaseLabel::SylowOverComplement, || format!("{expr}: {:?}", r.case))?;
        let failed: Vec<&str> = r.failed_checks().iter().map(|c| c.name.as_str()).collect();
        ensure(failed.is_empty(), || format!("{expr}: failed {failed:?}"))?;
        for name in ["complement_avoids_vanishing", "sylow_mod_center_elementary_abelian"] {
            ensure(r.check(name).is_some_and(|c| c.passed), || format!("{expr}: {name} missing"))?;
        }
    }
    Ok(format!("S3, A4, D8, Q8 and {} constructions match, every side condition passing", FAMILY.len()))
}

fn table_properties(corpus: &[Member]) -> Outcome {
    for m in corpus {
        let t = &m.table;
        let order = m.group.order() as u64;
        ensure(verify_orthogonality(t), || format!("{}: orthogonality", m.expr))?;
        ensure(t.degrees.iter().map(|d| d * d).sum::<u64>() == order, || format!("{}: sum of squares", m.expr))?;
        ensure(t.degrees.iter().all(|d| order % d == 0), || format!("{}: degree divisibility", m.expr))?;
        let burnside = t
            .rows
            .iter()
            .zip(&t.degrees)
            .all(|(row, &d)| d == 1 || row.iter().any(|v| v.is_zero()));
        ensure(burnside, || format!("{}: nonlinear row without a zero", m.expr))?;
        let other = character_table_nth_prime(&m.group, 1).map_err(|e| format!("{}: {e}", m.expr))?;
        ensure(other.dixon_prime != t.dixon_prime, || format!("{}: same prime", m.expr))?;
        ensure(other.rows == t.rows && other.degrees == t.degrees, || {
            format!("{}: primes {} and {} disagree", m.expr, t.dixon_prime, other.dixon_prime)
        })?;
    }
    Ok(format!("{} tables: orthogonality, degrees, zeros, two-prime agreement", corpus.len()))
}

fn same_size_oracle(corpus: &[Member]) -> Outcome {
    let (mut groups, mut pairs) = (0, 0);
    for m in corpus {
        let found = hall_pairs(&m.group);
        if found.is_empty() {
            continue;
        }
        groups += 1;
        for (pi, n, h) in found {
            let r = check_same_size_conditions(&m.group, &n, &h).map_err(|e| format!("{}: {e}", m.expr))?;
            ensure(r.consistent(), || {
                format!("{} pi = {pi:?}: conditions {:?}, scan {:?}", m.expr, r.conditions_abcd, r.outside)
            })?;
            pairs += 1;
        }
    }
    ensure(groups >= 30, || format!("only {groups} groups with a normal Hall pair"))?;
    Ok(format!("{pairs} Hall pairs over {groups} groups, zero mismatches"))
}

fn invariant_suite(corpus: &[Member]) -> Outcome {
    let mut ran = 0;
    for m in corpus {
        let checks = verify_vanishing_invariants(&m.group, &m.profile, SEED);
        if let Some(bad) = checks.iter().find(|c| c.failed()) {
            return Err(format!("{}: {} ({:?})", m.expr, bad.name, bad.detail));
        }
        ran += checks.len();
    }
    Ok(format!("{ran} checks over {} groups, zero failures", corpus.len()))
}

fn characterization(corpus: &[Member]) -> Outcome {
    let mut applied = 0;
    for m in corpus {
        let r = verify_single_size_characterization(&m.group, &m.profile, SEED);
        ensure(r.consistent(), || format!("{}: {:?} / {:?}", m.expr, r.forward, r.reverse))?;
        applied += [&r.forward, &r.reverse].iter().filter(|d| matches!(d, Direction::Pass { .. })).count();
    }
    Ok(format!("{applied} applicable directions passed, none failed"))
}

fn search_resume() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let config = SearchConfig {
        order_cap: 70_000,
        seed: SEED,
        workers: 2,
        families: vec![
            FamilyGrid {
                actors: vec!["ES(2,+)".into(), "ES(2,-)".into()],
                modules: ["3^3", "5^3", "7^3", "11^3", "9^3"].map(String::from).to_vec(),
                action: "maxker".into(),
            },
            FamilyGrid {
                actors: vec!["ES(3,+)".into()],
                modules: vec!["7^4".into(), "(2x2)^4".into()],
                action: "maxker".into(),
            },
        ],
        exprs: vec!["SL23".into(), "Sz8Borel".into(), "sdp(13^4,ES(3,+),maxker)".into()],
    };
    let fresh = dir.path().join("fresh.jsonl");
    let first = run_search(&config, &fresh, DEFAULT_BOUND).map_err(|e| e.to_string())?;
    ensure(first.appended == 15 && first.findings.is_empty(), || format!("{first:?}"))?;
    let bytes = std::fs::read(&fresh).map_err(|e| e.to_string())?;
    let text = String::from_utf8(bytes.clone()).map_err(|e| e.to_string())?;
    ensure(text.lines().last().is_some_and(|l| l.contains("\"skipped\"")), || "over-cap point not skipped".into())?;

    let resumed = dir.path().join("resumed.jsonl");
    let lines: Vec<&[u8]> = bytes.split_inclusive(|&b| b == b'\n').collect();
    let mut cut = lines[..6].concat();
    cut.extend_from_slice(&lines[6][..lines[6].len() / 2]);
    std::fs::write(&resumed, cut).map_err(|e| e.to_string())?;
    let second = run_search(&config, &resumed, DEFAULT_BOUND).map_err(|e| e.to_string())?;
    ensure(second.already_present == 6 && second.appended == 9, || format!("{second:?}"))?;
    ensure(std::fs::read(&resumed).map_err(|e| e.to_string())? == bytes, || "resumed catalog differs".into())?;

    let again = run_search(&config, &resumed, DEFAULT_BOUND).map_err(|e| e.to_string())?;
    ensure(again.appended == 0, || format!("rerun appended {}", again.appended))?;
    ensure(std::fs::read(&resumed).map_err(|e| e.to_string())? == bytes, || "rerun changed catalog".into())?;
    Ok(format!("{} records, interrupted + resumed sweep byte-identical, rerun appends nothing", first.appended))
}

fn main() {
    let start = Instant::now();
    let mut exprs: Vec<String> = SMALL.iter().map(|s| s.to_string()).collect();
    exprs.extend(FAMILY.iter().map(|(e, _)| e.to_string()));
    exprs.extend(random_products());
    let corpus: Vec<Member> = exprs
        .iter()
        .map(|e| Member::new(&parse_group_expr(e).unwrap().to_string()))
        .collect();

    let criteria: [(&str, &dyn Fn() -> Outcome); 9] = [
        ("vanishing sizes of SL(2,3)", &|| sl23_sizes(&corpus)),
        ("Borel subgroup of Sz(8)", &|| sz8_borel(&corpus)),
        ("extraspecial family table", &|| family_table(&corpus)),
        ("single-size classification", &|| classification(&corpus)),
        ("character table properties", &|| table_properties(&corpus)),
        ("same-size conditions vs class scan", &|| same_size_oracle(&corpus)),
        ("vanishing invariant suite", &|| invariant_suite(&corpus)),
        ("single-size characterization", &|| characterization(&corpus)),
        ("search resume and determinism", &search_resume),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {}: FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of 9 criteria passed in {:.1} s", 9 - failures, start.elapsed().as_secs_f64());
    if failures > 0 {
        std::process::exit(1);
    }
}
