//! The centralizer-pruned search.
//!
//! With `s` the image of sigma and `s^2 = 1`, the relators R3 and R4 are
//! commutation conditions with `s`-conjugates, since `s^-1 x s y = y s^-1 x s`
//! reads `(s x s) y = y (s x s)`:
//!
//! ```text
//! R4(a1,b1)  b1 in C(s a1 s)
//! R3(a1,a2)  a2 in C(s a1 s)      R3(b1,a2)  a2 in C(s b1 s)
//! R3(a1,b2)  b2 in C(s a1 s)      R3(b1,b2)  b2 in C(s b1 s)
//! R4(a2,b2)  b2 in C(s a2 s)
//! ```
//!
//! So the loops draw b1 from `C(s a1 s)`, a2 from `C(s a1 s) & C(s b1 s)` and
//! b2 from that set intersected with `C(s a2 s)`, and never evaluate R3 or R4.
//! R2 only involves sigma and one other generator, so it is applied as a
//! filter on the candidate pools before the loops.
//!
//! Transitivity and then TR are checked per complete tuple. The orbits of
//! `<sigma, a1, b1, a2>` and the part of a rotation of TR not involving b2 are
//! both computed once per a2. The oracle-equivalence tests hold all of this
//! against the unpruned search.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::{EnumError, EnumerationResult, SearchOptions, SolutionTuple};
use crate::groups::{centralizer_into, PointPartition};
use crate::perm::{factorial, LexPermutations, Permutation};
use crate::words::{
    completes_to_identity, evaluate, evaluates_to_identity, Assignment, Generator, RelationGroup, RelatorSet, Word,
};

pub(crate) struct PrunedSearch {
    n: usize,
    sigma: Permutation,
    base: Assignment,
    r2_a1: Word,
    /// R2 words for the b1, a2, b2 roles, deduplicated after renaming the
    /// role generator to a1. The standard presentation leaves exactly one.
    r2_pool: Vec<(Generator, Word)>,
    /// TR rotated so every b2 letter sits in `tr_tail`; `tr_head` is fully
    /// known once a2 is chosen.
    tr_head: Word,
    tr_tail: Word,
}

impl PrunedSearch {
    pub(crate) fn new(sigma: Permutation) -> Result<Self, EnumError> {
        if !sigma.is_transposition() {
            return Err(EnumError::NotATransposition(sigma));
        }
        let n = sigma.degree();
        let relators = RelatorSet::standard();
        let r2 = |g: Generator| relators.r2_for(g).expect("R2 relator for every non-sigma generator").word.clone();
        let mut r2_pool: Vec<(Generator, Word)> = Vec::new();
        for g in [Generator::B1, Generator::A2, Generator::B2] {
            let w = r2(g);
            if !r2_pool.iter().any(|(h, v)| v.renamed(*h, Generator::A1) == w.renamed(g, Generator::A1)) {
                r2_pool.push((g, w));
            }
        }
        let tr = &relators.group(RelationGroup::TR).next().expect("TR relator").word;
        let (tr_head, tr_tail) = tr.rotate_to_end(Generator::B2);
        let base = Assignment::trivial(n)?.with(Generator::Sigma, sigma);
        Ok(Self { n, sigma, base, r2_a1: r2(Generator::A1), r2_pool, tr_head, tr_tail })
    }

    fn r2_holds(&self, word: &Word, role: Generator, x: Permutation) -> bool {
        evaluates_to_identity(word, &self.base.with(role, x))
    }

    /// Runs the outer loop over a1 with lexicographic ranks in `start..end`,
    /// handing each solution to `visit` in a deterministic order.
    pub(crate) fn run_range(&self, start: u64, end: u64, visit: &mut dyn FnMut(&SolutionTuple)) -> u64 {
        let sigma = self.sigma;
        let mut count = 0u64;
        let mut centralizer = Vec::new();
        // candidates paired with their inverses
        let mut pool_b1: Vec<(Permutation, Permutation)> = Vec::new();
        let mut pool_a2: Vec<(Permutation, Permutation)> = Vec::new();
        let mut asg = self.base;
        let a1_iter = LexPermutations::range(self.n, start, end).expect("degree validated");
        for a1 in a1_iter {
            if !self.r2_holds(&self.r2_a1, Generator::A1, a1) {
                continue;
            }
            let x1 = a1.conjugated_by(&sigma);
            centralizer.clear();
            centralizer_into(&x1, &mut centralizer);
            pool_b1.clear();
            pool_b1.extend(
                centralizer
                    .iter()
                    .filter(|&&p| self.r2_pool.iter().all(|(g, w)| self.r2_holds(w, *g, p)))
                    .map(|p| (*p, p.inverse())),
            );
            asg.set(Generator::A1, a1);
            for &(b1, b1_inv) in &pool_b1 {
                let y1 = b1.conjugated_by(&sigma);
                pool_a2.clear();
                pool_a2.extend(pool_b1.iter().filter(|(p, _)| p.commutes_with(&y1)));
                asg.set_with_inverse(Generator::B1, b1, b1_inv);
                for &(a2, a2_inv) in &pool_a2 {
                    let x2 = a2.conjugated_by(&sigma);
                    asg.set_with_inverse(Generator::A2, a2, a2_inv);
                    let head = evaluate(&self.tr_head, &asg);
                    let partition = PointPartition::of(&[sigma, a1, b1, a2], self.n);
                    for &(b2, b2_inv) in pool_a2.iter().filter(|(p, _)| p.commutes_with(&x2)) {
                        if !partition.transitive_with(&b2) {
                            continue;
                        }
                        asg.set_with_inverse(Generator::B2, b2, b2_inv);
                        if !completes_to_identity(&head, &self.tr_tail, &asg) {
                            continue;
                        }
                        count += 1;
                        visit(&SolutionTuple::from_images([sigma, a1, a2, b1, b2]));
                    }
                }
            }
        }
        count
    }
}

fn base_sigma(n: usize) -> Result<Permutation, EnumError> {
    Ok(Permutation::transposition(n, 1, 2)?)
}

/// Counts solutions with sigma = `(1,2)`, single-threaded.
pub fn enumerate_fixed_sigma(n: usize, opts: &SearchOptions) -> Result<EnumerationResult, EnumError> {
    enumerate_fixed_sigma_with(n, opts, &mut |_| {})
}

/// Like [`enumerate_fixed_sigma`], streaming every solution to `sink` as it is found.
pub fn enumerate_fixed_sigma_with(
    n: usize,
    opts: &SearchOptions,
    sink: &mut dyn FnMut(&SolutionTuple),
) -> Result<EnumerationResult, EnumError> {
    opts.check_degree(n)?;
    let started = Instant::now();
    let count = enumerate_with_sigma(base_sigma(n)?, opts, sink)?;
    Ok(EnumerationResult::from_fixed_count(n, count, started.elapsed()))
}

/// Runs the pruned search for an arbitrary transposition `sigma`, returning
/// the number of solutions.
pub fn enumerate_with_sigma(
    sigma: Permutation,
    opts: &SearchOptions,
    sink: &mut dyn FnMut(&SolutionTuple),
) -> Result<u64, EnumError> {
    let n = sigma.degree();
    opts.check_degree(n)?;
    let search = PrunedSearch::new(sigma)?;
    let total = factorial(n);
    let slices = slice_bounds(total, slice_count(n, 1));
    let mut count = 0;
    for (i, &(start, end)) in slices.iter().enumerate() {
        count += search.run_range(start, end, sink);
        if let Some(progress) = &opts.progress {
            progress(i + 1, slices.len());
        }
    }
    Ok(count)
}

/// Collects every sigma = `(1,2)` solution in search order.
pub fn collect_fixed_sigma(
    n: usize,
    opts: &SearchOptions,
) -> Result<(EnumerationResult, Vec<SolutionTuple>), EnumError> {
    let mut out: Vec<SolutionTuple> = Vec::new();
    let mut oom = false;
    let result = enumerate_fixed_sigma_with(n, opts, &mut |t| {
        if oom || out.try_reserve(1).is_err() {
            oom = true;
            return;
        }
        out.push(*t);
    })?;
    if oom {
        return Err(EnumError::OutOfMemory { collected: out.len() });
    }
    Ok((result, out))
}

fn slice_count(n: usize, workers: usize) -> usize {
    if n <= 4 {
        1
    } else {
        (workers * 32).max(64)
    }
}

fn slice_bounds(total: u64, slices: usize) -> Vec<(u64, u64)> {
    let slices = (slices as u64).min(total).max(1);
    (0..slices).map(|i| (total * i / slices, total * (i + 1) / slices)).collect()
}

/// Counts sigma = `(1,2)` solutions with the outer loop split across `workers` threads.
pub fn enumerate_parallel(n: usize, workers: usize, opts: &SearchOptions) -> Result<EnumerationResult, EnumError> {
    run_parallel(n, workers, opts, None)
}

/// Parallel search that still delivers solutions to `sink` in exactly the
/// single-threaded order: slices are searched concurrently a window at a
/// time and their buffered solutions are released in slice order.
pub fn enumerate_parallel_with(
    n: usize,
    workers: usize,
    opts: &SearchOptions,
    sink: &mut dyn FnMut(&SolutionTuple),
) -> Result<EnumerationResult, EnumError> {
    run_parallel(n, workers, opts, Some(sink))
}

fn run_parallel(
    n: usize,
    workers: usize,
    opts: &SearchOptions,
    mut sink: Option<&mut dyn FnMut(&SolutionTuple)>,
) -> Result<EnumerationResult, EnumError> {
    if workers == 0 {
        return Err(EnumError::ZeroWorkers);
    }
    opts.check_degree(n)?;
    let started = Instant::now();
    let search = PrunedSearch::new(base_sigma(n)?)?;
    let slices = slice_bounds(factorial(n), slice_count(n, workers));
    let pool = rayon::ThreadPoolBuilder::new().num_threads(workers).build().expect("failed to start worker pool");
    let done = AtomicUsize::new(0);
    let report = || {
        let d = done.fetch_add(1, Ordering::Relaxed) + 1;
        if let Some(progress) = &opts.progress {
            progress(d, slices.len());
        }
    };
    let collect = sink.is_some();
    let window = if collect { workers * 4 } else { slices.len() };
    let mut count = 0u64;
    for chunk in slices.chunks(window.max(1)) {
        let results: Vec<(u64, Vec<SolutionTuple>)> = pool.install(|| {
            chunk
                .par_iter()
                .map(|&(start, end)| {
                    let mut found = Vec::new();
                    let c = if collect {
                        search.run_range(start, end, &mut |t| found.push(*t))
                    } else {
                        search.run_range(start, end, &mut |_| {})
                    };
                    report();
                    (c, found)
                })
                .collect()
        });
        for (c, found) in results {
            count += c;
            if let Some(sink) = sink.as_mut() {
                found.iter().for_each(&mut **sink);
            }
        }
    }
    Ok(EnumerationResult::from_fixed_count(n, count, started.elapsed()))
}
