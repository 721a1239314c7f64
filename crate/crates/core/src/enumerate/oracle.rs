//! Unpruned reference search: every `(a1, a2, b1, b2)` in `S_n^4` with
//! sigma = `(1,2)`, checked against all eleven relators and transitivity.

use std::time::Instant;

use super::{EnumError, EnumerationResult, SolutionTuple};
use crate::groups::is_transitive;
use crate::perm::{LexPermutations, Permutation};
use crate::words::{check_relations_with, Assignment, RelatorSet};

/// `(n!)^4` grows too fast past this.
pub const ORACLE_MAX_DEGREE: usize = 4;

/// Returns the counts and the sorted solution list.
pub fn brute_force_oracle(n: usize) -> Result<(EnumerationResult, Vec<SolutionTuple>), EnumError> {
    if !(2..=ORACLE_MAX_DEGREE).contains(&n) {
        return Err(EnumError::DegreeOutOfRange { n, min: 2, max: ORACLE_MAX_DEGREE });
    }
    let started = Instant::now();
    let relators = RelatorSet::standard();
    let sigma = Permutation::transposition(n, 1, 2)?;
    let all: Vec<Permutation> = LexPermutations::new(n)?.collect();
    let mut solutions = Vec::new();
    for &a1 in &all {
        for &a2 in &all {
            for &b1 in &all {
                for &b2 in &all {
                    let images = [sigma, a1, a2, b1, b2];
                    if !is_transitive(&images, n) {
                        continue;
                    }
                    let asg = Assignment::new(sigma, a1, a2, b1, b2)?;
                    if check_relations_with(&relators, &asg).all_pass() {
                        solutions.push(SolutionTuple::from_images(images));
                    }
                }
            }
        }
    }
    solutions.sort_unstable();
    let result = EnumerationResult::from_fixed_count(n, solutions.len() as u64, started.elapsed());
    Ok((result, solutions))
}
