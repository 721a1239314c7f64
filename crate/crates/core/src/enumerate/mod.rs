//! Enumeration of generic monodromy representations: homomorphisms from the
//! braid group into `S_n` with transitive image that send `sigma` to a
//! transposition.

mod oracle;
mod orbits;
mod search;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groups::is_transitive;
use crate::perm::{factorial, PermError, Permutation, MAX_DEGREE};
use crate::words::{check_relations_with, Assignment, RelatorSet};

pub use oracle::{brute_force_oracle, ORACLE_MAX_DEGREE};
pub use orbits::{
    analyze, full_orbit_check, image_fingerprint, orbit_decomposition, FullOrbitReport, Orbit, EXPECTED_FULL_ORBIT_SIZE,
};
pub use search::{
    collect_fixed_sigma, enumerate_fixed_sigma, enumerate_fixed_sigma_with, enumerate_parallel,
    enumerate_parallel_with, enumerate_with_sigma,
};

/// Largest degree accepted without [`SearchOptions::allow_large`].
pub const DEGREE_CAP: usize = 12;
pub const MIN_DEGREE: usize = 2;

#[derive(Debug, Error)]
pub enum EnumError {
    #[error("degree {n} outside the supported range {min}..={max}")]
    DegreeOutOfRange { n: usize, min: usize, max: usize },
    #[error("sigma must be a transposition, got {0}")]
    NotATransposition(Permutation),
    #[error("tuple has sigma = {0}, expected (1,2)")]
    SigmaNotBase(Permutation),
    #[error("worker count must be at least 1")]
    ZeroWorkers,
    #[error("out of memory after collecting {collected} solutions")]
    OutOfMemory { collected: usize },
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
}

pub type ProgressFn = Arc<dyn Fn(usize, usize) + Send + Sync>;

#[derive(Clone, Default)]
pub struct SearchOptions {
    /// Lifts the degree cap of [`DEGREE_CAP`] up to the representation limit.
    pub allow_large: bool,
    /// Called with `(slices_done, slices_total)` as outer-loop slices finish.
    pub progress: Option<ProgressFn>,
}

impl fmt::Debug for SearchOptions {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SearchOptions")
            .field("allow_large", &self.allow_large)
            .field("progress", &self.progress.is_some())
            .finish()
    }
}

impl SearchOptions {
    pub fn check_degree(&self, n: usize) -> Result<(), EnumError> {
        let max = if self.allow_large { MAX_DEGREE } else { DEGREE_CAP };
        if (MIN_DEGREE..=max).contains(&n) {
            Ok(())
        } else {
            Err(EnumError::DegreeOutOfRange { n, min: MIN_DEGREE, max })
        }
    }
}

/// Images of `(sigma, a1, a2, b1, b2)` for one generic monodromy representation.
///
/// The derived ordering is lexicographic on the concatenated image tables in
/// that field order, which is the canonical encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SolutionTuple {
    pub sigma: Permutation,
    pub a1: Permutation,
    pub a2: Permutation,
    pub b1: Permutation,
    pub b2: Permutation,
}

impl SolutionTuple {
    pub fn degree(&self) -> usize {
        self.sigma.degree()
    }

    pub fn images(&self) -> [Permutation; 5] {
        [self.sigma, self.a1, self.a2, self.b1, self.b2]
    }

    pub fn from_images([sigma, a1, a2, b1, b2]: [Permutation; 5]) -> Self {
        Self { sigma, a1, a2, b1, b2 }
    }

    pub fn assignment(&self) -> Assignment {
        Assignment::new(self.sigma, self.a1, self.a2, self.b1, self.b2).expect("tuple degrees agree")
    }

    /// Simultaneous conjugation `q^-1 x q` of all five images.
    pub fn conjugated_by(&self, q: &Permutation) -> Self {
        Self::from_images(self.images().map(|p| p.conjugated_by(q)))
    }

    /// Re-checks every defining property from scratch: all eleven relators,
    /// transitivity, and sigma a transposition.
    pub fn verify(&self, relators: &RelatorSet) -> bool {
        self.sigma.is_transposition()
            && is_transitive(&self.images(), self.degree())
            && check_relations_with(relators, &self.assignment()).all_pass()
    }
}

pub fn transposition_count(n: usize) -> u64 {
    (n * (n - 1) / 2) as u64
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationResult {
    pub n: usize,
    /// Solutions with sigma fixed to `(1,2)`.
    pub fixed_count: u64,
    pub transpositions: u64,
    /// Solutions over every choice of transposition for sigma.
    pub total_count: u64,
    pub orbit_count: Option<u64>,
    /// Sizes of the `S_n`-conjugacy orbits on all solutions, size -> number of orbits.
    pub orbit_size_histogram: Option<BTreeMap<u64, u64>>,
    /// Image-group label -> number of fixed-sigma solutions with that image.
    pub image_histogram: Option<BTreeMap<String, u64>>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl EnumerationResult {
    pub fn from_fixed_count(n: usize, fixed_count: u64, elapsed: Duration) -> Self {
        let transpositions = transposition_count(n);
        Self {
            n,
            fixed_count,
            transpositions,
            total_count: fixed_count * transpositions,
            orbit_count: None,
            orbit_size_histogram: None,
            image_histogram: None,
            elapsed,
        }
    }

    /// Checks the bookkeeping identities: total = fixed * transpositions, and
    /// when orbits are present, their sizes sum to the total and divide `n!`.
    pub fn check_invariants(&self) -> Result<(), String> {
        if self.total_count != self.fixed_count * transposition_count(self.n) {
            return Err(format!("total {} != fixed {} * {}", self.total_count, self.fixed_count, self.transpositions));
        }
        if let Some(hist) = &self.orbit_size_histogram {
            let sum: u64 = hist.iter().map(|(size, count)| size * count).sum();
            if sum != self.total_count {
                return Err(format!("orbit sizes sum to {sum}, total is {}", self.total_count));
            }
            let order = factorial(self.n);
            if let Some(bad) = hist.keys().find(|&&s| !order.is_multiple_of(s)) {
                return Err(format!("orbit size {bad} does not divide {}!", self.n));
            }
            if self.orbit_count != Some(hist.values().sum()) {
                return Err("orbit count disagrees with histogram".into());
            }
        }
        Ok(())
    }
}
