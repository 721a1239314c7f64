//! Subgroups of `S_n` held as explicit element lists.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::perm::{PermError, Permutation, MAX_DEGREE};

/// A deduplicated set of permutations of one degree, sorted by canonical
/// encoding so iteration order is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementSet {
    degree: usize,
    elements: Vec<Permutation>,
}

impl ElementSet {
    pub fn new(degree: usize, elements: impl IntoIterator<Item = Permutation>) -> Result<Self, PermError> {
        let mut elements: Vec<Permutation> = elements.into_iter().collect();
        if let Some(bad) = elements.iter().find(|p| p.degree() != degree) {
            return Err(PermError::DegreeMismatch { left: degree, right: bad.degree() });
        }
        elements.sort_unstable();
        elements.dedup();
        Ok(Self { degree, elements })
    }

    fn from_sorted(degree: usize, elements: Vec<Permutation>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Self { degree, elements }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.elements.iter()
    }

    pub fn as_slice(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn into_vec(self) -> Vec<Permutation> {
        self.elements
    }
}

impl<'a> IntoIterator for &'a ElementSet {
    type Item = &'a Permutation;
    type IntoIter = std::slice::Iter<'a, Permutation>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

/// The subgroup generated by `gens`. An empty list gives the trivial group.
pub fn closure(gens: &[Permutation], n: usize) -> Result<ElementSet, PermError> {
    let id = Permutation::identity(n)?;
    if let Some(bad) = gens.iter().find(|g| g.degree() != n) {
        return Err(PermError::DegreeMismatch { left: n, right: bad.degree() });
    }
    // Right multiplication by generators suffices: in a finite group every
    // inverse is a positive power.
    let mut seen: HashSet<Permutation> = HashSet::from([id]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x * *g;
            if seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    ElementSet::new(n, seen)
}

/// Orbits of the generated group on `{1..n}`, each sorted, ordered by least point.
pub fn orbits(gens: &[Permutation], n: usize) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in gens {
        for x in 0..n {
            let (a, b) = (find(&mut parent, x), find(&mut parent, g.image0(x)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 0..n {
        let root = find(&mut parent, x);
        groups.entry(root).or_default().push(x + 1);
    }
    groups.into_values().collect()
}

/// Whether the generated group moves point 1 to every point, found by orbit
/// expansion without building the group.
pub fn is_transitive(gens: &[Permutation], n: usize) -> bool {
    let mut reached = [false; MAX_DEGREE];
    let mut stack = [0usize; MAX_DEGREE];
    let mut top = 1;
    reached[0] = true;
    let mut count = 1;
    while top > 0 {
        top -= 1;
        let x = stack[top];
        for g in gens {
            let y = g.image0(x);
            if !reached[y] {
                reached[y] = true;
                count += 1;
                stack[top] = y;
                top += 1;
            }
        }
    }
    count == n
}

/// Orbits of a partial generating set, kept so that one more generator can
/// be tested for making the action transitive without redoing the rest.
#[derive(Debug, Clone, Copy)]
pub(crate) struct PointPartition {
    n: usize,
    label: [u8; MAX_DEGREE],
    parts: usize,
}

impl PointPartition {
    pub(crate) fn of(gens: &[Permutation], n: usize) -> Self {
        let mut label = [0u8; MAX_DEGREE];
        let mut assigned = [false; MAX_DEGREE];
        let mut parts = 0;
        let mut stack = [0usize; MAX_DEGREE];
        for start in 0..n {
            if assigned[start] {
                continue;
            }
            assigned[start] = true;
            label[start] = parts as u8;
            stack[0] = start;
            let mut top = 1;
            while top > 0 {
                top -= 1;
                let x = stack[top];
                for g in gens {
                    let y = g.image0(x);
                    if !assigned[y] {
                        assigned[y] = true;
                        label[y] = parts as u8;
                        stack[top] = y;
                        top += 1;
                    }
                }
            }
            parts += 1;
        }
        Self { n, label, parts }
    }

    /// Whether adding `g` to the generators gives a transitive group.
    #[inline]
    pub(crate) fn transitive_with(&self, g: &Permutation) -> bool {
        if self.parts == 1 {
            return true;
        }
        let mut parent = [0u8; MAX_DEGREE];
        for (i, p) in parent.iter_mut().enumerate().take(self.parts) {
            *p = i as u8;
        }
        let find = |parent: &[u8; MAX_DEGREE], mut x: u8| {
            while parent[x as usize] != x {
                x = parent[x as usize];
            }
            x
        };
        let mut merges = 0;
        for x in 0..self.n {
            let a = find(&parent, self.label[x]);
            let b = find(&parent, self.label[g.image0(x)]);
            if a != b {
                parent[a.max(b) as usize] = a.min(b);
                merges += 1;
                if merges + 1 == self.parts {
                    return true;
                }
            }
        }
        false
    }
}

/// The generators of `C(g)` read off its cycles: each nontrivial cycle of
/// `g` on its own, plus a swap of each adjacent pair of equal-length cycles.
pub fn centralizer_generators(g: &Permutation) -> Vec<Permutation> {
    let n = g.degree();
    let cycles = g.cycles();
    let mut gens = Vec::new();
    for c in cycles.iter().filter(|c| c.len() > 1) {
        let mut images: Vec<usize> = (1..=n).collect();
        for &x in c {
            images[x - 1] = g.image(x);
        }
        gens.push(Permutation::from_images(&images).expect("single cycle is a bijection"));
    }
    let mut by_len: BTreeMap<usize, Vec<&Vec<usize>>> = BTreeMap::new();
    for c in &cycles {
        by_len.entry(c.len()).or_default().push(c);
    }
    for same in by_len.values() {
        for pair in same.windows(2) {
            let mut images: Vec<usize> = (1..=n).collect();
            for (&x, &y) in pair[0].iter().zip(pair[1].iter()) {
                images[x - 1] = y;
                images[y - 1] = x;
            }
            gens.push(Permutation::from_images(&images).expect("swap of equal cycles is a bijection"));
        }
    }
    gens
}

/// Appends every element of `C(g)` to `out`, in a fixed but unsorted order.
///
/// An element of the centralizer sends each cycle of `g` onto a cycle of the
/// same length, choosing where the first point lands; any such choice
/// commutes with `g`, and there are `prod i^k_i k_i!` of them.
pub(crate) fn centralizer_into(g: &Permutation, out: &mut Vec<Permutation>) {
    let n = g.degree();
    let mut by_len: BTreeMap<usize, Vec<Vec<u8>>> = BTreeMap::new();
    for c in g.cycles() {
        by_len.entry(c.len()).or_default().push(c.iter().map(|&x| (x - 1) as u8).collect());
    }
    let start = out.len();
    out.push(Permutation::identity(n).expect("degree already validated"));
    let mut next: Vec<Permutation> = Vec::new();
    for (&len, cycles) in &by_len {
        let k = cycles.len();
        let rotations = (len as u64).pow(k as u32);
        let mut arrangement: Vec<usize> = (0..k).collect();
        next.clear();
        loop {
            for code in 0..rotations {
                let mut shifts = [0usize; MAX_DEGREE];
                let mut c = code;
                for s in shifts.iter_mut().take(k) {
                    *s = (c % len as u64) as usize;
                    c /= len as u64;
                }
                for base in &out[start..] {
                    let mut table = base.table();
                    for (i, src) in cycles.iter().enumerate() {
                        let dst = &cycles[arrangement[i]];
                        for (j, &x) in src.iter().enumerate() {
                            table[x as usize] = dst[(j + shifts[i]) % len];
                        }
                    }
                    next.push(Permutation::from_table(n, table));
                }
            }
            if !next_arrangement(&mut arrangement) {
                break;
            }
        }
        out.truncate(start);
        out.append(&mut next);
    }
}

fn next_arrangement(a: &mut [usize]) -> bool {
    let n = a.len();
    let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| a[i] < a[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| a[j] > a[i]).expect("successor exists");
    a.swap(i, j);
    a[i + 1..].reverse();
    true
}

/// All `h` in `S_n` with `h g = g h`, built from the cycle structure of `g`.
pub fn centralizer_elements(g: &Permutation, n: usize) -> Result<ElementSet, PermError> {
    if g.degree() != n {
        return Err(PermError::DegreeMismatch { left: n, right: g.degree() });
    }
    let mut out = Vec::new();
    centralizer_into(g, &mut out);
    out.sort_unstable();
    Ok(ElementSet::from_sorted(n, out))
}

pub fn intersect(a: &ElementSet, b: &ElementSet) -> Result<ElementSet, PermError> {
    if a.degree != b.degree {
        return Err(PermError::DegreeMismatch { left: a.degree, right: b.degree });
    }
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.elements.len() && j < b.elements.len() {
        match a.elements[i].cmp(&b.elements[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a.elements[i]);
                i += 1;
                j += 1;
            }
        }
    }
    Ok(ElementSet::from_sorted(a.degree, out))
}

/// Names for the small groups that show up as monodromy images.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SmallGroupName {
    #[serde(rename = "trivial")]
    Trivial,
    C2,
    C3,
    C4,
    #[serde(rename = "C2xC2")]
    C2xC2,
    S3,
    C6,
    C8,
    #[serde(rename = "C4xC2")]
    C4xC2,
    #[serde(rename = "C2xC2xC2")]
    C2xC2xC2,
    D8,
    Q8,
    A4,
    D12,
    S4,
    #[serde(rename = "other")]
    Other,
}

impl SmallGroupName {
    pub fn as_str(self) -> &'static str {
        match self {
            SmallGroupName::Trivial => "trivial",
            SmallGroupName::C2 => "C2",
            SmallGroupName::C3 => "C3",
            SmallGroupName::C4 => "C4",
            SmallGroupName::C2xC2 => "C2xC2",
            SmallGroupName::S3 => "S3",
            SmallGroupName::C6 => "C6",
            SmallGroupName::C8 => "C8",
            SmallGroupName::C4xC2 => "C4xC2",
            SmallGroupName::C2xC2xC2 => "C2xC2xC2",
            SmallGroupName::D8 => "D8",
            SmallGroupName::Q8 => "Q8",
            SmallGroupName::A4 => "A4",
            SmallGroupName::D12 => "D12",
            SmallGroupName::S4 => "S4",
            SmallGroupName::Other => "other",
        }
    }
}

impl fmt::Display for SmallGroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

// (name, abelian, element-order histogram as (order, count) pairs)
type NameEntry = (SmallGroupName, bool, &'static [(u64, u64)]);

const NAME_TABLE: &[NameEntry] = &[
    (SmallGroupName::Trivial, true, &[(1, 1)]),
    (SmallGroupName::C2, true, &[(1, 1), (2, 1)]),
    (SmallGroupName::C3, true, &[(1, 1), (3, 2)]),
    (SmallGroupName::C4, true, &[(1, 1), (2, 1), (4, 2)]),
    (SmallGroupName::C2xC2, true, &[(1, 1), (2, 3)]),
    (SmallGroupName::S3, false, &[(1, 1), (2, 3), (3, 2)]),
    (SmallGroupName::C6, true, &[(1, 1), (2, 1), (3, 2), (6, 2)]),
    (SmallGroupName::C8, true, &[(1, 1), (2, 1), (4, 2), (8, 4)]),
    (SmallGroupName::C4xC2, true, &[(1, 1), (2, 3), (4, 4)]),
    (SmallGroupName::C2xC2xC2, true, &[(1, 1), (2, 7)]),
    (SmallGroupName::D8, false, &[(1, 1), (2, 5), (4, 2)]),
    (SmallGroupName::Q8, false, &[(1, 1), (2, 1), (4, 6)]),
    (SmallGroupName::A4, false, &[(1, 1), (2, 3), (3, 8)]),
    (SmallGroupName::D12, false, &[(1, 1), (2, 7), (3, 2), (6, 2)]),
    (SmallGroupName::S4, false, &[(1, 1), (2, 9), (3, 8), (4, 6)]),
];

/// Looks up a name by abelian flag and element-order histogram. Within the
/// orders covered by the table these invariants pin down the group; anything
/// else is `Other`.
pub fn name_for(abelian: bool, histogram: &BTreeMap<u64, u64>) -> SmallGroupName {
    NAME_TABLE
        .iter()
        .find(|(_, ab, hist)| {
            *ab == abelian && hist.len() == histogram.len() && hist.iter().all(|(o, c)| histogram.get(o) == Some(c))
        })
        .map_or(SmallGroupName::Other, |(name, _, _)| *name)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFingerprint {
    pub order: u64,
    pub transitive: bool,
    pub abelian: bool,
    pub order_histogram: BTreeMap<u64, u64>,
    pub name: SmallGroupName,
}

impl GroupFingerprint {
    pub fn involutions(&self) -> u64 {
        self.order_histogram.get(&2).copied().unwrap_or(0)
    }

    /// The name, or `other(<order>)` when the table has no entry.
    pub fn label(&self) -> String {
        match self.name {
            SmallGroupName::Other => format!("other({})", self.order),
            name => name.to_string(),
        }
    }
}

pub fn fingerprint(gens: &[Permutation], n: usize) -> Result<GroupFingerprint, PermError> {
    let group = closure(gens, n)?;
    let abelian = gens.iter().enumerate().all(|(i, x)| gens[i + 1..].iter().all(|y| x.commutes_with(y)));
    let mut order_histogram = BTreeMap::new();
    for p in &group {
        *order_histogram.entry(p.order()).or_insert(0) += 1;
    }
    Ok(GroupFingerprint {
        order: group.len() as u64,
        transitive: is_transitive(gens, n),
        abelian,
        name: name_for(abelian, &order_histogram),
        order_histogram,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{factorial, LexPermutations};

    fn cyc(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    fn brute_centralizer(g: &Permutation) -> ElementSet {
        let n = g.degree();
        ElementSet::new(n, LexPermutations::new(n).unwrap().filter(|h| h.commutes_with(g))).unwrap()
    }

    #[test]
    fn closure_examples() {
        assert_eq!(closure(&[], 3).unwrap().len(), 1);
        let s3 = closure(&[cyc("(1,2)", 3), cyc("(1,2,3)", 3)], 3).unwrap();
        assert_eq!(s3.len(), 6);
        assert!(closure(&[cyc("(1,2)", 3)], 4).is_err());
    }

    #[test]
    fn transitivity_examples() {
        assert!(is_transitive(&[cyc("(1,2,3,4)", 4)], 4));
        assert!(!is_transitive(&[cyc("(1,2)", 3)], 3));
        assert!(is_transitive(&[], 1));
        assert!(!is_transitive(&[], 2));
        assert_eq!(orbits(&[cyc("(1,3)", 4), cyc("(2,4)", 4)], 4), vec![vec![1, 3], vec![2, 4]]);
    }

    #[test]
    fn partition_extension_matches_transitivity() {
        let gens = [cyc("(1,2)", 6), cyc("(3,4)", 6), cyc("(5,6)", 6)];
        let part = PointPartition::of(&gens[..2], 6);
        assert_eq!(part.parts, 4);
        for extra in ["(2,3,5)", "(1,3)(2,5)", "(1,4,6)", "()", "(2,3)(4,5)"] {
            let e = cyc(extra, 6);
            let mut all = gens[..2].to_vec();
            all.push(e);
            assert_eq!(part.transitive_with(&e), is_transitive(&all, 6), "{extra}");
        }
        assert!(PointPartition::of(&[cyc("(1,2,3)", 3)], 3).transitive_with(&cyc("()", 3)));
    }

    #[test]
    fn centralizer_of_transposition_in_s4() {
        let c = centralizer_elements(&cyc("(1,2)", 4), 4).unwrap();
        let expected = ElementSet::new(4, ["()", "(1,2)", "(3,4)", "(1,2)(3,4)"].iter().map(|s| cyc(s, 4))).unwrap();
        assert_eq!(c, expected);
        assert_eq!(c, brute_centralizer(&cyc("(1,2)", 4)));
    }

    #[test]
    fn centralizer_of_identity_is_everything() {
        for n in 1..=6 {
            let c = centralizer_elements(&Permutation::identity(n).unwrap(), n).unwrap();
            assert_eq!(c.len() as u64, factorial(n));
        }
    }

    #[test]
    fn centralizer_of_double_three_cycle() {
        let g = cyc("(1,2,3)(4,5,6)", 6);
        let c = centralizer_elements(&g, 6).unwrap();
        assert_eq!(c.len(), 18);
        assert_eq!(c, brute_centralizer(&g));
    }

    #[test]
    fn centralizer_matches_closure_of_its_generators() {
        for s in ["(1,2)(3,4)", "(1,2,3)(4,5,6)", "(1,2,3,4)(5,6)", "()", "(1,2)(3,4)(5,6)"] {
            let g = cyc(s, 6);
            assert_eq!(centralizer_elements(&g, 6).unwrap(), closure(&centralizer_generators(&g), 6).unwrap());
        }
    }

    #[test]
    fn centralizer_order_formula_all_cycle_types_up_to_six() {
        for n in 1..=6 {
            let mut reps: BTreeMap<crate::perm::CycleType, Permutation> = BTreeMap::new();
            for p in LexPermutations::new(n).unwrap() {
                reps.entry(p.cycle_type()).or_insert(p);
            }
            for (ct, g) in reps {
                let c = centralizer_elements(&g, n).unwrap();
                assert_eq!(c, brute_centralizer(&g), "cycle type {ct}");
                assert_eq!(c.len() as u64, ct.centralizer_order(), "cycle type {ct}");
                assert_eq!(factorial(n) % c.len() as u64, 0);
            }
        }
    }

    #[test]
    fn intersect_examples() {
        let a = centralizer_elements(&cyc("(1,2)", 4), 4).unwrap();
        let b = centralizer_elements(&cyc("(3,4)", 4), 4).unwrap();
        assert_eq!(intersect(&a, &a).unwrap(), a);
        let id = ElementSet::new(4, [Permutation::identity(4).unwrap()]).unwrap();
        assert_eq!(intersect(&a, &id).unwrap(), id);
        let both = intersect(&a, &b).unwrap();
        let brute = ElementSet::new(
            4,
            LexPermutations::new(4)
                .unwrap()
                .filter(|h| h.commutes_with(&cyc("(1,2)", 4)) && h.commutes_with(&cyc("(3,4)", 4))),
        )
        .unwrap();
        assert_eq!(both, brute);
        assert_eq!(both.len(), 4);
        let other = ElementSet::new(3, [Permutation::identity(3).unwrap()]).unwrap();
        assert!(intersect(&a, &other).is_err());
    }

    #[test]
    fn fingerprints_of_known_groups() {
        let c2 = fingerprint(&[cyc("(1,2)", 2)], 2).unwrap();
        assert_eq!((c2.order, c2.abelian, c2.name), (2, true, SmallGroupName::C2));
        let s3 = fingerprint(&[cyc("(1,2)", 3), cyc("(1,2,3)", 3)], 3).unwrap();
        assert_eq!((s3.order, s3.abelian, s3.name), (6, false, SmallGroupName::S3));
        let d8 = fingerprint(&[cyc("(1,2,3,4)", 4), cyc("(1,3)", 4)], 4).unwrap();
        assert_eq!((d8.order, d8.involutions(), d8.name), (8, 5, SmallGroupName::D8));
        assert!(d8.transitive);
        // Q8 as its regular representation on 8 points
        let i = cyc("(1,2,3,4)(5,6,7,8)", 8);
        let j = cyc("(1,5,3,7)(2,8,4,6)", 8);
        let q8 = fingerprint(&[i, j], 8).unwrap();
        assert_eq!((q8.order, q8.involutions(), q8.name), (8, 1, SmallGroupName::Q8));
        let s4 = fingerprint(&[cyc("(1,2)", 4), cyc("(1,2,3,4)", 4)], 4).unwrap();
        assert_eq!(s4.name, SmallGroupName::S4);
        let a4 = fingerprint(&[cyc("(1,2,3)", 4), cyc("(1,2)(3,4)", 4)], 4).unwrap();
        assert_eq!(a4.name, SmallGroupName::A4);
        let d12 = fingerprint(&[cyc("(1,2,3,4,5,6)", 6), cyc("(1,6)(2,5)(3,4)", 6)], 6).unwrap();
        assert_eq!(d12.name, SmallGroupName::D12);
        let s5 = fingerprint(&[cyc("(1,2)", 5), cyc("(1,2,3,4,5)", 5)], 5).unwrap();
        assert_eq!((s5.name, s5.label()), (SmallGroupName::Other, "other(120)".to_string()));
        let trivial = fingerprint(&[], 3).unwrap();
        assert_eq!(trivial.name, SmallGroupName::Trivial);
        assert!(!trivial.transitive);
    }

    #[test]
    fn fingerprint_json_shape() {
        let fp = fingerprint(&[cyc("(1,2)", 2)], 2).unwrap();
        let json = serde_json::to_value(&fp).unwrap();
        let obj = json.as_object().unwrap();
        let keys: Vec<&str> = obj.keys().map(String::as_str).collect();
        for k in ["order", "transitive", "abelian", "order_histogram", "name"] {
            assert!(keys.contains(&k), "missing {k}");
        }
        assert_eq!(obj["name"], "C2");
        assert_eq!(obj["order_histogram"]["2"], 1);
    }
}
