//! Generic monodromy representations of the two-string braid group of a
//! genus-2 curve into symmetric groups.
//!
//! A representation sends the five generators `sigma, a1, a2, b1, b2` to
//! permutations satisfying the eleven defining relators, with `sigma` going
//! to a transposition and the image acting transitively. Such
//! representations, up to simultaneous conjugation, classify generic covers
//! of the symmetric square branched along the diagonal.
//!
//! - [`perm`]: permutations and cycle notation
//! - [`words`]: generators, relators and word evaluation
//! - [`groups`]: closures, centralizers, transitivity, fingerprints
//! - [`enumerate`]: pruned and brute-force searches, conjugacy orbits
//! - [`surface`]: numerical invariants of the covering surfaces

pub mod enumerate;
pub mod groups;
pub mod perm;
pub mod surface;
pub mod words;

pub use enumerate::{EnumError, EnumerationResult, SearchOptions, SolutionTuple};
pub use groups::{GroupFingerprint, SmallGroupName};
pub use perm::{PermError, Permutation};
pub use surface::{existence_verdict, invariants_for, SurfaceInvariants};
pub use words::{check_relations, Assignment, Generator, RelatorSet};
