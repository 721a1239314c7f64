//! Acceptance report: one PASS/FAIL line per criterion, non-zero exit if any fail.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use monodromy_core::enumerate::{
    analyze, brute_force_oracle, collect_fixed_sigma, enumerate_fixed_sigma, enumerate_parallel,
    enumerate_parallel_with, enumerate_with_sigma, full_orbit_check, image_fingerprint, transposition_count,
};
use monodromy_core::groups::{centralizer_elements, SmallGroupName};
use monodromy_core::perm::{CycleType, LexPermutations};
use monodromy_core::{check_relations, invariants_for, Assignment, Permutation, SearchOptions, SolutionTuple};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

const SEED: u64 = 0x5eed_2b2c;

const BUDGET_SMALL: Duration = Duration::from_secs(10);
const BUDGET_SEVEN: Duration = Duration::from_secs(300);
const BUDGET_LONG: Duration = Duration::from_secs(3 * 3600);
const BUDGET_ORBITS: Duration = Duration::from_secs(30);
const BUDGET_ORACLE: Duration = Duration::from_secs(120);

const TABLE: &[(usize, u64)] = &[(2, 16), (3, 80), (4, 480), (5, 0), (6, 2880), (7, 0)];
const LONG_TABLE: &[(usize, u64, u64)] = &[(8, 172_800, 28 * 172_800), (9, 0, 0)];
const ORBITS: &[(usize, u64, u64)] = &[(2, 16, 1), (3, 40, 6), (4, 240, 12)];
const K2: &[(usize, i64)] = &[(2, 8), (3, 7), (4, 6)];

const GROUP_LAW_CASES: usize = 10_000;
const CONJUGATION_CASES: usize = 1_000;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

/// Counts, orbit numbers and invariants are compared exactly; the budgets
/// above are the only tolerances.
fn exact(what: &str, got: u64, want: u64) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn within(what: &str, elapsed: Duration, budget: Duration) -> Result<(), String> {
    if elapsed <= budget {
        Ok(())
    } else {
        Err(format!("{what} took {elapsed:.1?}, budget {budget:?}"))
    }
}

fn opts() -> SearchOptions {
    SearchOptions::default()
}

fn count_table() -> Outcome {
    let mut parts = Vec::new();
    let mut small = Duration::ZERO;
    for &(n, fixed) in TABLE {
        let r = enumerate_fixed_sigma(n, &opts()).map_err(|e| e.to_string())?;
        exact(&format!("n={n} fixed"), r.fixed_count, fixed)?;
        exact(&format!("n={n} total"), r.total_count, fixed * transposition_count(n))?;
        if n <= 6 {
            small += r.elapsed;
        } else {
            within("n=7", r.elapsed, BUDGET_SEVEN)?;
        }
        parts.push(format!("{n}:{}", r.total_count));
    }
    within("n<=6", small, BUDGET_SMALL)?;
    Ok(format!("totals {} (n<=6 in {small:.2?})", parts.join(" ")))
}

fn long_table() -> Outcome {
    let workers = std::thread::available_parallelism().map_or(1, |w| w.get());
    let mut parts = Vec::new();
    for &(n, fixed, total) in LONG_TABLE {
        let r = enumerate_parallel(n, workers, &opts()).map_err(|e| e.to_string())?;
        exact(&format!("n={n} fixed"), r.fixed_count, fixed)?;
        exact(&format!("n={n} total"), r.total_count, total)?;
        within(&format!("n={n}"), r.elapsed, BUDGET_LONG)?;
        parts.push(format!("n={n} total {} in {:.1?}", r.total_count, r.elapsed));
    }
    Ok(format!("{} ({workers} workers)", parts.join(", ")))
}

fn orbit_counts() -> Outcome {
    let started = Instant::now();
    let mut parts = Vec::new();
    for &(n, orbits, size) in ORBITS {
        let (mut r, found) = collect_fixed_sigma(n, &opts()).map_err(|e| e.to_string())?;
        analyze(&mut r, &found).map_err(|e| e.to_string())?;
        exact(&format!("n={n} orbits"), r.orbit_count.unwrap_or(0), orbits)?;
        let report = full_orbit_check(n).map_err(|e| e.to_string())?;
        if !report.passed {
            return Err(format!("full orbit check failed for n={n}: {report:?}"));
        }
        exact(&format!("n={n} S_n-orbits"), report.orbit_count, orbits)?;
        let sizes: Vec<u64> = report.orbit_sizes.keys().copied().collect();
        if sizes != [size] {
            return Err(format!("n={n} orbit sizes {sizes:?}, expected all {size}"));
        }
        parts.push(format!("n={n}: {orbits} of size {size}"));
    }
    within("orbits", started.elapsed(), BUDGET_ORBITS)?;
    Ok(parts.join(", "))
}

fn image_uniformity() -> Outcome {
    let (_, three) = collect_fixed_sigma(3, &opts()).map_err(|e| e.to_string())?;
    let bad3 = three.iter().filter(|t| image_fingerprint(t).name != SmallGroupName::S3).count();
    let (_, four) = collect_fixed_sigma(4, &opts()).map_err(|e| e.to_string())?;
    let bad4 = four
        .iter()
        .filter(|t| {
            let fp = image_fingerprint(t);
            (fp.order, fp.involutions(), fp.name) != (8, 5, SmallGroupName::D8)
        })
        .count();
    if bad3 + bad4 > 0 {
        return Err(format!("{bad3} n=3 and {bad4} n=4 solutions with the wrong image"));
    }
    Ok(format!("{} n=3 solutions S3, {} n=4 solutions D8", three.len(), four.len()))
}

fn oracle_equivalence() -> Outcome {
    let mut parts = Vec::new();
    for n in 2..=4 {
        let started = Instant::now();
        let (_, oracle) = brute_force_oracle(n).map_err(|e| e.to_string())?;
        let oracle_time = started.elapsed();
        let (_, pruned) = collect_fixed_sigma(n, &opts()).map_err(|e| e.to_string())?;
        let a: BTreeSet<SolutionTuple> = oracle.into_iter().collect();
        let b: BTreeSet<SolutionTuple> = pruned.into_iter().collect();
        if a != b {
            return Err(format!(
                "n={n}: {} only in oracle, {} only in pruned search",
                a.difference(&b).count(),
                b.difference(&a).count()
            ));
        }
        if n == 4 {
            within("n=4 oracle", oracle_time, BUDGET_ORACLE)?;
        }
        parts.push(format!("n={n}: {} = {}", a.len(), b.len()));
    }
    Ok(parts.join(", "))
}

fn surface_invariants() -> Outcome {
    for &(n, k2) in K2 {
        let inv = invariants_for(n).map_err(|e| e.to_string())?;
        if inv.k2 != k2 {
            return Err(format!("n={n}: K2 = {}, expected {k2}", inv.k2));
        }
    }
    for n in 2..=9usize {
        let inv = invariants_for(n).map_err(|e| e.to_string())?;
        if inv.chi != 1 || inv.c2 != n as i64 + 2 || inv.k2 + inv.c2 != 12 * inv.chi {
            return Err(format!("n={n}: chi {} c2 {} K2 {}", inv.chi, inv.c2, inv.k2));
        }
    }
    Ok("K2 = 8,7,6; chi = 1, c2 = n+2 and K2 + c2 = 12 for n = 2..9".into())
}

fn random_perm(rng: &mut StdRng, n: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Permutation::from_images(&images).expect("shuffled images form a bijection")
}

fn property_suites() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED);

    for _ in 0..GROUP_LAW_CASES {
        let n = rng.gen_range(1..=9);
        let (p, q, r) = (random_perm(&mut rng, n), random_perm(&mut rng, n), random_perm(&mut rng, n));
        let e = Permutation::identity(n).map_err(|e| e.to_string())?;
        if (p * q) * r != p * (q * r) || p * e != p || e * p != p || !(p * p.inverse()).is_identity() {
            return Err(format!("group law fails for {p}, {q}, {r}"));
        }
    }

    let mut types = 0;
    for n in 1..=6 {
        let all: Vec<Permutation> = LexPermutations::new(n).map_err(|e| e.to_string())?.collect();
        let mut reps: BTreeMap<CycleType, Permutation> = BTreeMap::new();
        for p in &all {
            reps.entry(p.cycle_type()).or_insert(*p);
        }
        for (ct, g) in reps {
            let brute = all.iter().filter(|x| x.commutes_with(&g)).count() as u64;
            let built = centralizer_elements(&g, n).map_err(|e| e.to_string())?.len() as u64;
            if ct.centralizer_order() != brute || built != brute {
                return Err(format!(
                    "centralizer of {g}: formula {}, built {built}, brute {brute}",
                    ct.centralizer_order()
                ));
            }
            types += 1;
        }
    }

    for _ in 0..CONJUGATION_CASES {
        let n = rng.gen_range(2..=6);
        let [s, a1, a2, b1, b2, q] = std::array::from_fn(|_| random_perm(&mut rng, n));
        let asg = Assignment::new(s, a1, a2, b1, b2).map_err(|e| e.to_string())?;
        if check_relations(&asg) != check_relations(&asg.conjugated_by(&q)) {
            return Err(format!("relator outcomes change under conjugation by {q}"));
        }
    }

    for (n, expected) in [(3, 80), (4, 480)] {
        let sigma = Permutation::transposition(n, 1, 3).map_err(|e| e.to_string())?;
        let count = enumerate_with_sigma(sigma, &opts(), &mut |_| {}).map_err(|e| e.to_string())?;
        exact(&format!("n={n} with sigma (1,3)"), count, expected)?;
    }

    let mut lists = Vec::new();
    for workers in [1, 2, 8] {
        let mut found = Vec::new();
        enumerate_parallel_with(6, workers, &opts(), &mut |t| found.push(*t)).map_err(|e| e.to_string())?;
        found.sort();
        lists.push(found);
    }
    if lists.windows(2).any(|w| w[0] != w[1]) || lists[0].len() != 2880 {
        return Err("n=6 solution lists differ across worker counts".into());
    }

    Ok(format!(
        "{GROUP_LAW_CASES} group-law cases, {types} cycle types, {CONJUGATION_CASES} conjugations, \
         sigma-independence, workers 1/2/8 agree"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("count table n=2..7", count_table),
        ("extended table n=8,9", long_table),
        ("orbit counts n=2..4", orbit_counts),
        ("image-group uniformity", image_uniformity),
        ("oracle equivalence n=2..4", oracle_equivalence),
        ("surface invariants", surface_invariants),
        ("property suites", property_suites),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS [{}] {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{}] {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
