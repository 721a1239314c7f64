//! Words in the five generators of the two-string braid group of a genus-2
//! curve, its eleven defining relators, and evaluation into `S_n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::perm::{PermError, Permutation, MAX_DEGREE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    Sigma,
    A1,
    A2,
    B1,
    B2,
}

impl Generator {
    pub const ALL: [Generator; 5] = [Generator::Sigma, Generator::A1, Generator::A2, Generator::B1, Generator::B2];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Generator::Sigma => "s",
            Generator::A1 => "a1",
            Generator::A2 => "a2",
            Generator::B1 => "b1",
            Generator::B2 => "b2",
        }
    }

    fn from_symbol(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|g| g.symbol() == s)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A formal product of generator powers, read left to right.
/// No normal form is imposed: adjacent letters may repeat a generator.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Word {
    letters: Vec<(Generator, i32)>,
}

impl Word {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Panics on a zero exponent.
    pub fn new(letters: Vec<(Generator, i32)>) -> Self {
        assert!(letters.iter().all(|&(_, e)| e != 0), "word exponents must be nonzero");
        Self { letters }
    }

    /// Parses whitespace-separated letters like `"s^-1 a1 s^-1 a1"`.
    fn parse(text: &str) -> Self {
        let letters = text
            .split_whitespace()
            .map(|tok| {
                let (sym, exp) = match tok.split_once('^') {
                    Some((sym, exp)) => (sym, exp.parse::<i32>().expect("bad exponent")),
                    None => (tok, 1),
                };
                (Generator::from_symbol(sym).expect("bad generator symbol"), exp)
            })
            .collect();
        Self::new(letters)
    }

    pub fn letters(&self) -> &[(Generator, i32)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Self { letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn concat(&self, other: &Word) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self { letters }
    }

    /// The same word with every occurrence of `from` replaced by `to`.
    pub fn renamed(&self, from: Generator, to: Generator) -> Self {
        Self { letters: self.letters.iter().map(|&(g, e)| (if g == from { to } else { g }, e)).collect() }
    }

    /// Splits a relator into `(head, tail)` such that `head * tail` is a
    /// cyclic rotation of `self` and `tail` is the shortest run of letters,
    /// without wrapping, that contains every occurrence of `g`. A rotation of
    /// a relator is trivial exactly when the relator is.
    pub fn rotate_to_end(&self, g: Generator) -> (Word, Word) {
        let hits: Vec<usize> = self.letters.iter().enumerate().filter(|(_, &(h, _))| h == g).map(|(i, _)| i).collect();
        let (Some(&first), Some(&last)) = (hits.first(), hits.last()) else {
            return (self.clone(), Word::empty());
        };
        let tail = self.letters[first..=last].to_vec();
        let mut head = self.letters[last + 1..].to_vec();
        head.extend_from_slice(&self.letters[..first]);
        (Word { letters: head }, Word { letters: tail })
    }

    pub fn involves(&self, g: Generator) -> bool {
        self.letters.iter().any(|&(h, _)| h == g)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (k, &(g, e)) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            match e {
                1 => write!(f, "{g}")?,
                e => write!(f, "{g}^{e}")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RelationGroup {
    R2,
    R3,
    R4,
    TR,
}

/// One relation `lhs = rhs`, stored as the single relator `lhs * rhs^-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relator {
    pub label: &'static str,
    pub group: RelationGroup,
    pub lhs: Word,
    pub rhs: Word,
    pub word: Word,
}

impl Relator {
    fn new(label: &'static str, group: RelationGroup, lhs: &str, rhs: &str) -> Self {
        let lhs = Word::parse(lhs);
        let rhs = Word::parse(rhs);
        let word = lhs.concat(&rhs.inverse());
        Self { label, group, lhs, rhs, word }
    }
}

/// The eleven relators presenting the group.
#[derive(Debug, Clone)]
pub struct RelatorSet {
    relators: Vec<Relator>,
}

impl RelatorSet {
    pub fn standard() -> Self {
        use RelationGroup::*;
        let relators = vec![
            Relator::new("R2(a1)", R2, "s^-1 a1 s^-1 a1", "a1 s^-1 a1 s^-1"),
            Relator::new("R2(a2)", R2, "s^-1 a2 s^-1 a2", "a2 s^-1 a2 s^-1"),
            Relator::new("R2(b1)", R2, "s^-1 b1 s^-1 b1", "b1 s^-1 b1 s^-1"),
            Relator::new("R2(b2)", R2, "s^-1 b2 s^-1 b2", "b2 s^-1 b2 s^-1"),
            Relator::new("R3(a1,a2)", R3, "s^-1 a1 s a2", "a2 s^-1 a1 s"),
            Relator::new("R3(b1,b2)", R3, "s^-1 b1 s b2", "b2 s^-1 b1 s"),
            Relator::new("R3(a1,b2)", R3, "s^-1 a1 s b2", "b2 s^-1 a1 s"),
            Relator::new("R3(b1,a2)", R3, "s^-1 b1 s a2", "a2 s^-1 b1 s"),
            Relator::new("R4(a1,b1)", R4, "s^-1 a1 s^-1 b1", "b1 s^-1 a1 s"),
            Relator::new("R4(a2,b2)", R4, "s^-1 a2 s^-1 b2", "b2 s^-1 a2 s"),
            // [x, y] = x y x^-1 y^-1
            Relator::new("TR", TR, "a1 b1^-1 a1^-1 b1 a2 b2^-1 a2^-1 b2", "s^2"),
        ];
        Self { relators }
    }

    pub fn len(&self) -> usize {
        self.relators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relators.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Relator> {
        self.relators.iter()
    }

    pub fn group(&self, group: RelationGroup) -> impl Iterator<Item = &Relator> {
        self.relators.iter().filter(move |r| r.group == group)
    }

    pub fn get(&self, label: &str) -> Option<&Relator> {
        self.relators.iter().find(|r| r.label == label)
    }

    /// The R2 relator involving `g` (one exists for each of a1, a2, b1, b2).
    pub fn r2_for(&self, g: Generator) -> Option<&Relator> {
        if g == Generator::Sigma {
            return None;
        }
        self.group(RelationGroup::R2).find(|r| r.word.involves(g))
    }
}

impl fmt::Display for RelatorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.relators {
            writeln!(f, "{:<10} {} = {}    [relator: {}]", r.label, r.lhs, r.rhs, r.word)?;
        }
        Ok(())
    }
}

/// Images of the five generators in `S_n`, with their inverses cached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Assignment {
    images: [Permutation; 5],
    inverses: [Permutation; 5],
}

impl Assignment {
    pub fn new(
        sigma: Permutation,
        a1: Permutation,
        a2: Permutation,
        b1: Permutation,
        b2: Permutation,
    ) -> Result<Self, PermError> {
        let images = [sigma, a1, a2, b1, b2];
        for p in &images[1..] {
            if p.degree() != sigma.degree() {
                return Err(PermError::DegreeMismatch { left: sigma.degree(), right: p.degree() });
            }
        }
        Ok(Self { images, inverses: images.map(|p| p.inverse()) })
    }

    /// Every generator sent to the identity of `S_n`.
    pub fn trivial(n: usize) -> Result<Self, PermError> {
        let id = Permutation::identity(n)?;
        Ok(Self { images: [id; 5], inverses: [id; 5] })
    }

    pub fn degree(&self) -> usize {
        self.images[0].degree()
    }

    pub fn get(&self, g: Generator) -> Permutation {
        self.images[g.index()]
    }

    pub fn images(&self) -> &[Permutation; 5] {
        &self.images
    }

    /// Replaces one image. Panics on a degree mismatch.
    pub fn set(&mut self, g: Generator, p: Permutation) {
        assert_eq!(p.degree(), self.degree(), "degree mismatch in assignment");
        self.images[g.index()] = p;
        self.inverses[g.index()] = p.inverse();
    }

    /// Replaces one image when its inverse is already known.
    pub(crate) fn set_with_inverse(&mut self, g: Generator, p: Permutation, inv: Permutation) {
        debug_assert!((p * inv).is_identity());
        self.images[g.index()] = p;
        self.inverses[g.index()] = inv;
    }

    pub fn with(mut self, g: Generator, p: Permutation) -> Self {
        self.set(g, p);
        self
    }

    pub fn conjugated_by(&self, q: &Permutation) -> Self {
        let images = self.images.map(|p| p.conjugated_by(q));
        Self { images, inverses: images.map(|p| p.inverse()) }
    }
}

/// Product of the assigned images raised to the word's exponents, left to right.
pub fn evaluate(word: &Word, asg: &Assignment) -> Permutation {
    let n = asg.degree();
    let mut table = [0u8; MAX_DEGREE];
    for (x, slot) in table.iter_mut().enumerate() {
        *slot = if x < n { trace(word, asg, x) as u8 } else { x as u8 };
    }
    Permutation::from_table(n, table)
}

/// Whether `word` evaluates to the identity, found by following each point
/// through the letters and stopping at the first point that moves.
pub fn evaluates_to_identity(word: &Word, asg: &Assignment) -> bool {
    (0..asg.degree()).all(|start| trace(word, asg, start) == start)
}

/// Whether `head * word` is the identity, for a precomputed `head`.
pub(crate) fn completes_to_identity(head: &Permutation, word: &Word, asg: &Assignment) -> bool {
    (0..asg.degree()).all(|start| trace(word, asg, head.image0(start)) == start)
}

#[inline]
fn trace(word: &Word, asg: &Assignment, mut x: usize) -> usize {
    for &(g, e) in word.letters() {
        let f = if e > 0 { &asg.images[g.index()] } else { &asg.inverses[g.index()] };
        for _ in 0..e.unsigned_abs() {
            x = f.image0(x);
        }
    }
    x
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    pub outcomes: Vec<(&'static str, bool)>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.outcomes.iter().all(|&(_, ok)| ok)
    }

    pub fn failing(&self) -> Vec<&'static str> {
        self.outcomes.iter().filter(|(_, ok)| !ok).map(|&(l, _)| l).collect()
    }
}

pub fn check_relations_with(relators: &RelatorSet, asg: &Assignment) -> RelationReport {
    let outcomes = relators.iter().map(|r| (r.label, evaluate(&r.word, asg).is_identity())).collect();
    RelationReport { outcomes }
}

pub fn check_relations(asg: &Assignment) -> RelationReport {
    check_relations_with(&RelatorSet::standard(), asg)
}
