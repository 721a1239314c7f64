//! Permutations of `{1, .., n}` for small `n`.
//!
//! Products are read left to right: `p * q` applies `p` first and then `q`,
//! so `(p * q)(x) = q(p(x))`. Every relator check, centralizer and conjugation
//! in this crate relies on that single convention.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest degree a [`Permutation`] can carry.
pub const MAX_DEGREE: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("degree {0} exceeds the supported maximum of {MAX_DEGREE}")]
    DegreeTooLarge(usize),
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("point {point} is outside 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("image table is not a bijection")]
    NotABijection,
    #[error("cannot parse cycle notation {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

fn check_degree(n: usize) -> Result<(), PermError> {
    match n {
        0 => Err(PermError::ZeroDegree),
        n if n > MAX_DEGREE => Err(PermError::DegreeTooLarge(n)),
        _ => Ok(()),
    }
}

/// A permutation of `{1, .., degree}`.
///
/// Stored as a fixed-width 0-indexed image table; slots past `degree` always
/// hold the identity so that products never need to look at the degree.
/// The derived ordering compares the image sequence in point order, which is
/// the canonical encoding used for sorting and hashing.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    degree: u8,
    images: [u8; MAX_DEGREE],
}

const IDENTITY_TABLE: [u8; MAX_DEGREE] = {
    let mut t = [0u8; MAX_DEGREE];
    let mut i = 0;
    while i < MAX_DEGREE {
        t[i] = i as u8;
        i += 1;
    }
    t
};

impl Permutation {
    pub fn identity(n: usize) -> Result<Self, PermError> {
        check_degree(n)?;
        Ok(Self { degree: n as u8, images: IDENTITY_TABLE })
    }

    /// Builds a permutation from its 1-indexed image sequence.
    pub fn from_images(images: &[usize]) -> Result<Self, PermError> {
        let n = images.len();
        check_degree(n)?;
        let mut table = IDENTITY_TABLE;
        let mut seen = [false; MAX_DEGREE];
        for (i, &img) in images.iter().enumerate() {
            if img == 0 || img > n {
                return Err(PermError::PointOutOfRange { point: img, degree: n });
            }
            if std::mem::replace(&mut seen[img - 1], true) {
                return Err(PermError::NotABijection);
            }
            table[i] = (img - 1) as u8;
        }
        Ok(Self { degree: n as u8, images: table })
    }

    pub(crate) fn from_table(degree: usize, table: [u8; MAX_DEGREE]) -> Self {
        debug_assert!(table[degree..].iter().enumerate().all(|(i, &x)| x as usize == degree + i));
        Self { degree: degree as u8, images: table }
    }

    /// The transposition exchanging the 1-indexed points `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self, PermError> {
        let mut p = Self::identity(n)?;
        for point in [i, j] {
            if point == 0 || point > n {
                return Err(PermError::PointOutOfRange { point, degree: n });
            }
        }
        if i == j {
            return Err(PermError::NotABijection);
        }
        p.images.swap(i - 1, j - 1);
        Ok(p)
    }

    /// Parses GAP-style cycle notation such as `"(1,2)(3,4,5)"`; `"()"` is
    /// the identity. Whitespace is ignored and may also separate points.
    pub fn parse_cycles(input: &str, degree: usize) -> Result<Self, PermError> {
        check_degree(degree)?;
        let err = |reason: &str| PermError::Parse { input: input.to_string(), reason: reason.to_string() };
        let mut table = IDENTITY_TABLE;
        let mut touched = [false; MAX_DEGREE];
        let mut rest = input.trim();
        if rest.is_empty() {
            return Err(err("empty input"));
        }
        while !rest.is_empty() {
            let body_start = rest.strip_prefix('(').ok_or_else(|| err("expected '('"))?;
            let close = body_start.find(')').ok_or_else(|| err("unbalanced parentheses"))?;
            let body = &body_start[..close];
            rest = body_start[close + 1..].trim_start();
            if body.contains('(') {
                return Err(err("nested '('"));
            }
            let points = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| err("non-numeric point")))
                .collect::<Result<Vec<_>, _>>()?;
            if points.is_empty() {
                continue;
            }
            if body.split(',').any(|s| s.trim().is_empty()) && body.contains(',') {
                return Err(err("empty entry between commas"));
            }
            for &p in &points {
                if p == 0 || p > degree {
                    return Err(PermError::PointOutOfRange { point: p, degree });
                }
                if std::mem::replace(&mut touched[p - 1], true) {
                    return Err(err("cycles are not disjoint"));
                }
            }
            for (k, &p) in points.iter().enumerate() {
                let next = points[(k + 1) % points.len()];
                table[p - 1] = (next - 1) as u8;
            }
        }
        Ok(Self { degree: degree as u8, images: table })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree as usize
    }

    /// Image of the 1-indexed `point`.
    pub fn image(&self, point: usize) -> usize {
        assert!(point >= 1 && point <= self.degree(), "point {point} out of range");
        self.images[point - 1] as usize + 1
    }

    #[inline]
    pub(crate) fn table(&self) -> [u8; MAX_DEGREE] {
        self.images
    }

    #[inline]
    pub(crate) fn image0(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// 1-indexed image sequence.
    pub fn images(&self) -> Vec<usize> {
        self.images[..self.degree()].iter().map(|&x| x as usize + 1).collect()
    }

    /// Canonical byte encoding: the 1-indexed image sequence in point order.
    pub fn encode(&self) -> Vec<u8> {
        self.images[..self.degree()].iter().map(|&x| x + 1).collect()
    }

    pub fn decode(bytes: &[u8]) -> Result<Self, PermError> {
        let images: Vec<usize> = bytes.iter().map(|&b| b as usize).collect();
        Self::from_images(&images)
    }

    pub fn is_identity(&self) -> bool {
        self.images == IDENTITY_TABLE
    }

    /// `self * other` under the left-to-right convention.
    pub fn compose(&self, other: &Self) -> Result<Self, PermError> {
        if self.degree != other.degree {
            return Err(PermError::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(self.then(other))
    }

    #[inline]
    fn then(&self, other: &Self) -> Self {
        let mut out = [0u8; MAX_DEGREE];
        for (o, &x) in out.iter_mut().zip(self.images.iter()) {
            *o = other.images[x as usize];
        }
        Self { degree: self.degree, images: out }
    }

    pub fn inverse(&self) -> Self {
        let mut out = [0u8; MAX_DEGREE];
        for (i, &x) in self.images.iter().enumerate() {
            out[x as usize] = i as u8;
        }
        Self { degree: self.degree, images: out }
    }

    /// `by^-1 * self * by`: relabels every point `x` of `self` as `by(x)`.
    pub fn conjugate(&self, by: &Self) -> Result<Self, PermError> {
        if self.degree != by.degree {
            return Err(PermError::DegreeMismatch { left: self.degree(), right: by.degree() });
        }
        Ok(self.conjugated_by(by))
    }

    #[inline]
    pub(crate) fn conjugated_by(&self, by: &Self) -> Self {
        let mut out = IDENTITY_TABLE;
        for i in 0..self.degree() {
            out[by.images[i] as usize] = by.images[self.images[i] as usize];
        }
        Self { degree: self.degree, images: out }
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, exp: i32) -> Self {
        let base = if exp < 0 { self.inverse() } else { *self };
        let mut acc = Self { degree: self.degree, images: IDENTITY_TABLE };
        for _ in 0..exp.unsigned_abs() {
            acc = acc.then(&base);
        }
        acc
    }

    #[inline]
    pub fn commutes_with(&self, other: &Self) -> bool {
        (0..self.degree()).all(|x| other.images[self.images[x] as usize] == self.images[other.images[x] as usize])
    }

    /// Disjoint cycles including fixed points, each rotated to start at its
    /// smallest point, ordered by that point. Points are 1-indexed.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = [false; MAX_DEGREE];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::new(self.cycles().iter().map(Vec::len).collect())
    }

    pub fn is_transposition(&self) -> bool {
        self.moved_points() == 2
    }

    pub fn moved_points(&self) -> usize {
        (0..self.degree()).filter(|&i| self.images[i] as usize != i).count()
    }

    /// Least `k >= 1` with `self^k` the identity.
    pub fn order(&self) -> u64 {
        self.cycle_type().lengths().iter().fold(1u64, |acc, &l| lcm(acc, l as u64))
    }
}

pub fn identity(n: usize) -> Result<Permutation, PermError> {
    Permutation::identity(n)
}

pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation, PermError> {
    p.compose(q)
}

pub fn inverse(p: &Permutation) -> Permutation {
    p.inverse()
}

pub fn conjugate(p: &Permutation, by: &Permutation) -> Result<Permutation, PermError> {
    p.conjugate(by)
}

pub fn cycle_type(p: &Permutation) -> CycleType {
    p.cycle_type()
}

pub fn is_transposition(p: &Permutation) -> bool {
    p.is_transposition()
}

pub fn order_of(p: &Permutation) -> u64 {
    p.order()
}

/// Left-to-right product. Panics on mismatched degrees; use
/// [`Permutation::compose`] for the checked form.
impl Mul for Permutation {
    type Output = Permutation;

    #[inline]
    fn mul(self, rhs: Permutation) -> Permutation {
        assert_eq!(self.degree, rhs.degree, "degree mismatch in permutation product");
        self.then(&rhs)
    }
}

impl<'a> Mul<&'a Permutation> for &'a Permutation {
    type Output = Permutation;

    #[inline]
    fn mul(self, rhs: &'a Permutation) -> Permutation {
        assert_eq!(self.degree, rhs.degree, "degree mismatch in permutation product");
        self.then(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cycle in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}[n={}]", self.degree)
    }
}

/// Multiset of cycle lengths, fixed points included, sorted descending.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CycleType(Vec<usize>);

impl CycleType {
    pub fn new(mut lengths: Vec<usize>) -> Self {
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Self(lengths)
    }

    pub fn lengths(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    /// `(length, count)` pairs in ascending order of length.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &l in self.0.iter().rev() {
            match out.last_mut() {
                Some((len, count)) if *len == l => *count += 1,
                _ => out.push((l, 1)),
            }
        }
        out
    }

    /// Order of the centralizer of any permutation of this type:
    /// the product over lengths `i` of `i^k * k!`, `k` the number of `i`-cycles.
    pub fn centralizer_order(&self) -> u64 {
        self.multiplicities().into_iter().map(|(len, k)| (len as u64).pow(k as u32) * factorial(k)).product()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// All of `S_n` in lexicographic order of image tables, generated lazily.
#[derive(Debug, Clone)]
pub struct LexPermutations {
    next: Option<Permutation>,
    remaining: Option<u64>,
}

impl LexPermutations {
    pub fn new(n: usize) -> Result<Self, PermError> {
        Ok(Self { next: Some(Permutation::identity(n)?), remaining: None })
    }

    /// The permutations with lexicographic ranks in `start..end`.
    pub fn range(n: usize, start: u64, end: u64) -> Result<Self, PermError> {
        check_degree(n)?;
        let total = factorial(n);
        let end = end.min(total);
        if start >= end {
            return Ok(Self { next: None, remaining: Some(0) });
        }
        Ok(Self { next: Some(unrank(n, start)?), remaining: Some(end - start) })
    }
}

impl Iterator for LexPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if let Some(r) = self.remaining.as_mut() {
            if *r == 0 {
                return None;
            }
            *r -= 1;
        }
        let current = self.next?;
        self.next = next_lex(&current);
        Some(current)
    }
}

fn next_lex(p: &Permutation) -> Option<Permutation> {
    let n = p.degree();
    let mut t = p.images;
    let a = &mut t[..n];
    let i = (0..n.saturating_sub(1)).rev().find(|&i| a[i] < a[i + 1])?;
    let j = (i + 1..n).rev().find(|&j| a[j] > a[i]).expect("successor exists");
    a.swap(i, j);
    a[i + 1..].reverse();
    Some(Permutation { degree: p.degree, images: t })
}

/// The permutation with the given lexicographic rank in `S_n`.
pub fn unrank(n: usize, mut rank: u64) -> Result<Permutation, PermError> {
    check_degree(n)?;
    let mut pool: Vec<u8> = (0..n as u8).collect();
    let mut table = IDENTITY_TABLE;
    for (i, slot) in table.iter_mut().take(n).enumerate() {
        let f = factorial(n - 1 - i);
        let k = (rank / f) as usize;
        rank %= f;
        *slot = pool.remove(k.min(pool.len() - 1));
    }
    Ok(Permutation { degree: n as u8, images: table })
}
