//! Conjugacy orbits of solutions.
//!
//! Every `S_n`-class of solutions contains a tuple with sigma = `(1,2)`, and
//! two such tuples are `S_n`-conjugate exactly when they are conjugate under
//! `C((1,2))`, which is all that fixes sigma. So the orbits of `C((1,2))` on
//! the fixed-sigma solutions are in bijection with the `S_n`-orbits on all of
//! them, and an `S_n`-orbit is `n(n-1)/2` times larger than its trace.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use super::search::enumerate_with_sigma;
use super::{transposition_count, EnumError, EnumerationResult, SearchOptions, SolutionTuple};
use crate::groups::{centralizer_elements, fingerprint, GroupFingerprint};
use crate::perm::{LexPermutations, Permutation};

/// `S_n`-orbit sizes on all solutions for the degrees where they are known
/// to be uniform.
pub const EXPECTED_FULL_ORBIT_SIZE: &[(usize, u64)] = &[(2, 1), (3, 6), (4, 12)];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    /// Canonically least tuple of the orbit.
    pub representative: SolutionTuple,
    /// Number of sigma = `(1,2)` tuples in the orbit.
    pub fixed_size: u64,
    /// Size of the full `S_n`-orbit over all transpositions.
    pub full_size: u64,
}

fn orbits_under(solutions: &[SolutionTuple], group: &[Permutation]) -> Vec<(SolutionTuple, u64)> {
    let mut sorted = solutions.to_vec();
    sorted.sort_unstable();
    let mut visited: HashSet<SolutionTuple> = HashSet::with_capacity(sorted.len());
    let mut out = Vec::new();
    for t in sorted {
        if visited.contains(&t) {
            continue;
        }
        let orbit: HashSet<SolutionTuple> = group.iter().map(|q| t.conjugated_by(q)).collect();
        let rep = *orbit.iter().min().expect("orbit contains t");
        out.push((rep, orbit.len() as u64));
        visited.extend(orbit);
    }
    out.sort_unstable();
    out
}

/// Orbits of simultaneous conjugation by `C((1,2))` on fixed-sigma solutions,
/// sorted by representative.
pub fn orbit_decomposition(solutions: &[SolutionTuple], n: usize) -> Result<Vec<Orbit>, EnumError> {
    let base = Permutation::transposition(n, 1, 2)?;
    for t in solutions {
        if t.degree() != n {
            return Err(EnumError::DegreeMismatch { expected: n, got: t.degree() });
        }
        if t.sigma != base {
            return Err(EnumError::SigmaNotBase(t.sigma));
        }
    }
    let stabilizer = centralizer_elements(&base, n)?;
    let scale = transposition_count(n);
    Ok(orbits_under(solutions, stabilizer.as_slice())
        .into_iter()
        .map(|(representative, fixed_size)| Orbit { representative, fixed_size, full_size: fixed_size * scale })
        .collect())
}

pub fn image_fingerprint(t: &SolutionTuple) -> GroupFingerprint {
    fingerprint(&t.images(), t.degree()).expect("tuple degrees agree")
}

/// Fills the orbit and image fields of `result` from its collected solutions
/// and returns the orbits. Image groups are fingerprinted once per orbit;
/// conjugate tuples generate conjugate groups.
pub fn analyze(result: &mut EnumerationResult, solutions: &[SolutionTuple]) -> Result<Vec<Orbit>, EnumError> {
    let orbits = orbit_decomposition(solutions, result.n)?;
    let mut sizes = BTreeMap::new();
    let mut images = BTreeMap::new();
    for orbit in &orbits {
        *sizes.entry(orbit.full_size).or_insert(0) += 1;
        *images.entry(image_fingerprint(&orbit.representative).label()).or_insert(0) += orbit.fixed_size;
    }
    result.orbit_count = Some(orbits.len() as u64);
    result.orbit_size_histogram = Some(sizes);
    result.image_histogram = Some(images);
    Ok(orbits)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FullOrbitReport {
    pub n: usize,
    pub total_solutions: u64,
    /// Orbits of `S_n` on the solutions over every transposition.
    pub orbit_count: u64,
    /// Orbits found by [`orbit_decomposition`] on the fixed-sigma solutions.
    pub decomposition_orbit_count: u64,
    pub orbit_sizes: BTreeMap<u64, u64>,
    pub expected_orbit_size: Option<u64>,
    pub passed: bool,
}

/// Enumerates solutions for every transposition, decomposes them under the
/// whole of `S_n` directly, and checks the result against
/// [`orbit_decomposition`] and the known uniform orbit sizes.
pub fn full_orbit_check(n: usize) -> Result<FullOrbitReport, EnumError> {
    if !(2..=super::ORACLE_MAX_DEGREE).contains(&n) {
        return Err(EnumError::DegreeOutOfRange { n, min: 2, max: super::ORACLE_MAX_DEGREE });
    }
    let opts = SearchOptions::default();
    let mut all = Vec::new();
    let mut fixed = Vec::new();
    let base = Permutation::transposition(n, 1, 2)?;
    for i in 1..=n {
        for j in i + 1..=n {
            let sigma = Permutation::transposition(n, i, j)?;
            enumerate_with_sigma(sigma, &opts, &mut |t| {
                all.push(*t);
                if sigma == base {
                    fixed.push(*t);
                }
            })?;
        }
    }
    let everything: Vec<Permutation> = LexPermutations::new(n)?.collect();
    let full = orbits_under(&all, &everything);
    let decomposition = orbit_decomposition(&fixed, n)?;
    let mut orbit_sizes = BTreeMap::new();
    for (_, size) in &full {
        *orbit_sizes.entry(*size).or_insert(0) += 1;
    }
    let expected_orbit_size = EXPECTED_FULL_ORBIT_SIZE.iter().find(|(m, _)| *m == n).map(|&(_, s)| s);
    let sizes_ok = expected_orbit_size.is_none_or(|s| orbit_sizes.keys().all(|&k| k == s));
    let traces_ok = full.len() == decomposition.len()
        && decomposition.iter().map(|o| o.full_size).sum::<u64>() == all.len() as u64
        && all.len() as u64 == fixed.len() as u64 * transposition_count(n);
    Ok(FullOrbitReport {
        n,
        total_solutions: all.len() as u64,
        orbit_count: full.len() as u64,
        decomposition_orbit_count: decomposition.len() as u64,
        orbit_sizes,
        expected_orbit_size,
        passed: sizes_ok && traces_ok,
    })
}
