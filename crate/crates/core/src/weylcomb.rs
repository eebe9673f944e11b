//! Inversion sets and the partition condition on triples of Weyl group
//! elements.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight, WeylElement, WeylGroup};

/// A set of positive roots, as a bitset over the root system's index order.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct InvSet(pub u64);

impl InvSet {
    pub const EMPTY: InvSet = InvSet(0);

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        InvSet(indices.into_iter().fold(0, |acc, i| acc | (1u64 << i)))
    }

    pub fn full(num_roots: usize) -> Self {
        InvSet(if num_roots == 64 {
            u64::MAX
        } else {
            (1u64 << num_roots) - 1
        })
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: InvSet) -> InvSet {
        InvSet(self.0 | other.0)
    }

    pub fn intersection(self, other: InvSet) -> InvSet {
        InvSet(self.0 & other.0)
    }

    pub fn difference(self, other: InvSet) -> InvSet {
        InvSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: InvSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: InvSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }
}

/// An ordered triple `(w1, w2, w3)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple {
    pub w1: WeylElement,
    pub w2: WeylElement,
    pub w3: WeylElement,
}

impl Triple {
    pub fn new(w1: WeylElement, w2: WeylElement, w3: WeylElement) -> Self {
        Triple { w1, w2, w3 }
    }

    /// `Phi_{w3}` is the disjoint union of `Phi_{w1}` and `Phi_{w2}`.
    pub fn is_admissible(&self, g: &WeylGroup) -> bool {
        let (a, b, c) = (
            g.inversion_set(self.w1),
            g.inversion_set(self.w2),
            g.inversion_set(self.w3),
        );
        a.is_disjoint(b) && a.union(b) == c
    }

    pub fn lengths(&self, g: &WeylGroup) -> [usize; 3] {
        [g.length(self.w1), g.length(self.w2), g.length(self.w3)]
    }
}

/// One line of the JSON-lines triple export.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleRecord {
    pub w1: Vec<u8>,
    pub w2: Vec<u8>,
    pub w3: Vec<u8>,
    pub len: [usize; 3],
}

impl TripleRecord {
    pub fn new(g: &WeylGroup, t: &Triple) -> Self {
        TripleRecord {
            w1: g.word_one_based(t.w1),
            w2: g.word_one_based(t.w2),
            w3: g.word_one_based(t.w3),
            len: t.lengths(g),
        }
    }
}

/// Writes triples as JSON lines with 1-indexed reduced words.
pub fn triples_to_json_lines(rs: &RootSystem, triples: &[Triple]) -> String {
    let g = rs.weyl();
    let mut out = String::new();
    for t in triples {
        out.push_str(&serde_json::to_string(&TripleRecord::new(g, t)).expect("record serializes"));
        out.push('\n');
    }
    out
}

pub fn inversion_set(rs: &RootSystem, w: WeylElement) -> InvSet {
    rs.weyl().inversion_set(w)
}

/// The element with the given inversion set, or `None` when the set is not
/// an inversion set.
pub fn element_from_invset(rs: &RootSystem, s: InvSet) -> Option<WeylElement> {
    rs.weyl().from_inversion_set(s)
}

/// A set of positive roots is an inversion set iff it and its complement
/// are both closed under root addition.
pub fn is_closed_and_coclosed(rs: &RootSystem, s: InvSet) -> bool {
    let n = rs.num_positive_roots();
    let closed = |set: InvSet| {
        (0..n).filter(|&a| set.contains(a)).all(|a| {
            (0..n)
                .filter(|&b| set.contains(b))
                .all(|b| rs.root_sum_index(a, b).is_none_or(|c| set.contains(c)))
        })
    };
    closed(s) && closed(InvSet::full(n).difference(s))
}

/// All `w1` with `Phi_{w1}` contained in `Phi_{w}`, found by walking down
/// left descents.
pub fn lower_interval(g: &WeylGroup, w: WeylElement) -> Vec<WeylElement> {
    let mut seen = vec![false; g.order()];
    let mut stack = vec![w];
    seen[w.index()] = true;
    let mut out = Vec::new();
    while let Some(u) = stack.pop() {
        out.push(u);
        for i in 0..g.rank() {
            let v = g.left_mul(i, u);
            if g.length(v) < g.length(u) && !seen[v.index()] {
                seen[v.index()] = true;
                stack.push(v);
            }
        }
    }
    out
}

/// All ordered admissible triples, sorted by the reduced words of `w3` and
/// then `w1`.
pub fn enumerate_admissible_triples(rs: &RootSystem, require_nontrivial: bool) -> Vec<Triple> {
    let all = admissible_triples(rs);
    if require_nontrivial {
        let e = rs.weyl().identity();
        all.iter()
            .filter(|t| t.w1 != e && t.w2 != e)
            .copied()
            .collect()
    } else {
        all.to_vec()
    }
}

/// The memoized table of all ordered admissible triples.
pub fn admissible_triples(rs: &RootSystem) -> &[Triple] {
    let g = rs.weyl();
    g.admissible.get_or_init(|| {
        let mut w3s: Vec<WeylElement> = g.elements().collect();
        w3s.sort_by(|a, b| g.word(*a).cmp(g.word(*b)));
        w3s.par_iter()
            .map(|&w3| {
                let full = g.inversion_set(w3);
                let mut found: Vec<Triple> = lower_interval(g, w3)
                    .into_iter()
                    .filter_map(|w1| {
                        let rest = full.difference(g.inversion_set(w1));
                        g.from_inversion_set(rest).map(|w2| Triple::new(w1, w2, w3))
                    })
                    .collect();
                found.sort_by(|a, b| g.word(a.w1).cmp(g.word(b.w1)));
                found
            })
            .collect::<Vec<_>>()
            .concat()
    })
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn type_a(n: usize) -> Result<RootSystem> {
    RootSystem::new(crate::rootsys::RootType::A, n)
}

/// Number of ways to split the positive roots of `A_n` into `n` nonempty
/// inversion sets, counted as unordered set partitions.
pub fn catalan_count(n: usize) -> Result<u64> {
    let rs = type_a(n)?;
    let g = rs.weyl();
    let sets: Vec<InvSet> = g
        .elements()
        .map(|w| g.inversion_set(w))
        .filter(|s| !s.is_empty())
        .collect();
    let mut memo = HashMap::new();
    Ok(count_partitions(
        &sets,
        InvSet::full(rs.num_positive_roots()),
        n,
        &mut memo,
    ))
}

/// Number of ordered `n`-tuples of nontrivial elements whose inversion sets
/// partition the positive roots of `A_n`.
pub fn ordered_partition_count(n: usize) -> Result<u64> {
    Ok(catalan_count(n)? * factorial(n))
}

// Canonical form: the part containing the lowest remaining root comes first.
fn count_partitions(
    sets: &[InvSet],
    rest: InvSet,
    parts: usize,
    memo: &mut HashMap<(InvSet, usize), u64>,
) -> u64 {
    if rest.is_empty() {
        return u64::from(parts == 0);
    }
    if parts == 0 || rest.len() < parts {
        return 0;
    }
    if let Some(&v) = memo.get(&(rest, parts)) {
        return v;
    }
    let lowest = rest.0.trailing_zeros() as usize;
    let total = sets
        .iter()
        .filter(|s| s.contains(lowest) && s.is_subset(rest))
        .map(|s| count_partitions(sets, rest.difference(*s), parts - 1, memo))
        .sum();
    memo.insert((rest, parts), total);
    total
}

/// Comparison, meet and join in the weak order given by inversion-set
/// containment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WeakOrder {
    pub leq: bool,
    pub meet: WeylElement,
    pub join: WeylElement,
}

pub fn weak_order(rs: &RootSystem, u: WeylElement, v: WeylElement) -> WeakOrder {
    let g = rs.weyl();
    let (a, b) = (g.inversion_set(u), g.inversion_set(v));
    let both = a.intersection(b);
    let either = a.union(b);
    let meet = g
        .elements()
        .filter(|&w| g.inversion_set(w).is_subset(both))
        .max_by_key(|&w| g.length(w))
        .expect("identity is below everything");
    let join = g
        .elements()
        .filter(|&w| either.is_subset(g.inversion_set(w)))
        .min_by_key(|&w| g.length(w))
        .expect("the longest element is above everything");
    WeakOrder {
        leq: a.is_subset(b),
        meet,
        join,
    }
}

/// `s(S)`, the sum of the roots in `S`.
pub fn root_sum(rs: &RootSystem, s: InvSet) -> Weight {
    let mut acc = Weight::zero(rs.rank());
    for i in s.iter() {
        acc += &rs.positive_roots()[i].weight;
    }
    acc
}

/// `w` as a permutation of `{0, ..., n}` in type `A_n`: `perm[x] = w(x)`,
/// with `s_i` swapping `i-1` and `i`.
pub fn permutation(rs: &RootSystem, w: WeylElement) -> Result<Vec<usize>> {
    if !rs.is_type_a() {
        return Err(Error::NotTypeA);
    }
    let mut p: Vec<usize> = (0..=rs.rank()).collect();
    for &i in rs.weyl().word(w) {
        p.swap(i as usize, i as usize + 1);
    }
    Ok(p)
}

/// Inversion set of a permutation, with `e_a - e_b` (a < b) mapped to the
/// root `alpha_{a+1} + ... + alpha_b`.
pub fn permutation_inversions(rs: &RootSystem, perm: &[usize]) -> Result<InvSet> {
    if !rs.is_type_a() {
        return Err(Error::NotTypeA);
    }
    check_permutation(perm, rs.rank() + 1)?;
    let n = rs.rank();
    let mut bits = InvSet::EMPTY;
    for a in 0..=n {
        for b in a + 1..=n {
            if perm[a] > perm[b] {
                let coeffs: Vec<i64> = (0..n).map(|k| i64::from(k >= a && k < b)).collect();
                let idx = rs.root_index(&coeffs).expect("e_a - e_b is a root");
                bits = bits.union(InvSet::from_indices([idx]));
            }
        }
    }
    Ok(bits)
}

pub fn element_from_permutation(rs: &RootSystem, perm: &[usize]) -> Result<WeylElement> {
    let s = permutation_inversions(rs, perm)?;
    Ok(rs
        .weyl()
        .from_inversion_set(s)
        .expect("permutation inversion sets are inversion sets"))
}

pub(crate) fn check_permutation(perm: &[usize], len: usize) -> Result<()> {
    let mut seen = vec![false; len];
    if perm.len() != len {
        return Err(Error::InvalidPermutation(format!(
            "expected length {len}, got {}",
            perm.len()
        )));
    }
    for &x in perm {
        if x >= len || seen[x] {
            return Err(Error::InvalidPermutation(format!("{perm:?}")));
        }
        seen[x] = true;
    }
    Ok(())
}

/// Displacement `delta_w(i) = w(i) - i`, type `A` only.
pub fn displacement(rs: &RootSystem, w: WeylElement) -> Result<Vec<i64>> {
    let p = permutation(rs, w)?;
    Ok(p.iter()
        .enumerate()
        .map(|(i, &x)| x as i64 - i as i64)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{ActionMode, RootType};

    fn rs(t: RootType, n: usize) -> RootSystem {
        RootSystem::new(t, n).unwrap()
    }

    fn simple_ids(r: &RootSystem) -> Vec<InvSet> {
        (0..r.rank()).map(|i| InvSet::from_indices([i])).collect()
    }

    #[test]
    fn basic_inversion_sets() {
        let r = rs(RootType::B, 3);
        let g = r.weyl();
        assert_eq!(inversion_set(&r, g.identity()), InvSet::EMPTY);
        for (i, s) in simple_ids(&r).into_iter().enumerate() {
            assert_eq!(inversion_set(&r, g.simple_reflection(i)), s);
        }
        assert_eq!(
            inversion_set(&r, g.longest()),
            InvSet::full(r.num_positive_roots())
        );
    }

    #[test]
    fn a2_invset_lookup() {
        let r = rs(RootType::A, 2);
        let g = r.weyl();
        // roots: 0 = alpha1, 1 = alpha2, 2 = alpha1 + alpha2
        assert_eq!(element_from_invset(&r, InvSet::EMPTY), Some(g.identity()));
        assert_eq!(element_from_invset(&r, InvSet::from_indices([0, 1])), None);
        assert!(!is_closed_and_coclosed(&r, InvSet::from_indices([0, 1])));
        let w = element_from_invset(&r, InvSet::from_indices([1, 2])).unwrap();
        assert_eq!(g.length(w), 2);
        // s1 s2 sends alpha2 to alpha1 + alpha2 ... check directly.
        for (k, root) in r.positive_roots().iter().enumerate() {
            let image = g.apply(w, &root.weight);
            let negative = r.positive_roots().iter().any(|q| q.weight == -&image);
            assert_eq!(negative, k == 1 || k == 2);
        }
        assert_eq!(g.word_one_based(w), vec![1, 2]);
    }

    #[test]
    fn closedness_matches_lookup() {
        for (t, n) in [
            (RootType::A, 3),
            (RootType::B, 3),
            (RootType::C, 3),
            (RootType::G, 2),
            (RootType::D, 4),
            (RootType::B, 4),
        ] {
            let r = rs(t, n);
            let g = r.weyl();
            let m = r.num_positive_roots();
            let mut valid = 0;
            for bits in 0..(1u64 << m) {
                let s = InvSet(bits);
                let closed = is_closed_and_coclosed(&r, s);
                let found = element_from_invset(&r, s);
                assert_eq!(closed, found.is_some(), "{t}{n} {bits:b}");
                if let Some(w) = found {
                    assert_eq!(inversion_set(&r, w), s);
                    valid += 1;
                }
            }
            assert_eq!(valid, g.order());
        }
    }

    #[test]
    fn a1_triples() {
        let r = rs(RootType::A, 1);
        let g = r.weyl();
        let (e, s) = (g.identity(), g.simple_reflection(0));
        assert_eq!(
            enumerate_admissible_triples(&r, false),
            vec![
                Triple::new(e, e, e),
                Triple::new(e, s, s),
                Triple::new(s, e, s)
            ]
        );
        assert!(enumerate_admissible_triples(&r, true).is_empty());
    }

    #[test]
    fn a2_triples_are_ordered() {
        let r = rs(RootType::A, 2);
        let g = r.weyl();
        let nontrivial = enumerate_admissible_triples(&r, true);
        // two unordered splittings of the positive roots, each in both orders
        assert_eq!(nontrivial.len(), 4);
        assert!(nontrivial.iter().all(|t| t.w3 == g.longest()));
        let s1 = g.simple_reflection(0);
        let s2 = g.simple_reflection(1);
        let x = element_from_invset(&r, InvSet::from_indices([1, 2])).unwrap();
        let y = element_from_invset(&r, InvSet::from_indices([0, 2])).unwrap();
        for t in [
            Triple::new(s1, x, g.longest()),
            Triple::new(s2, y, g.longest()),
        ] {
            assert!(nontrivial.contains(&t));
            assert!(nontrivial.contains(&Triple::new(t.w2, t.w1, t.w3)));
        }
        assert_eq!(enumerate_admissible_triples(&r, false).len(), 15);
        let brute = g
            .elements()
            .flat_map(|a| {
                g.elements()
                    .flat_map(move |b| g.elements().map(move |c| Triple::new(a, b, c)))
            })
            .filter(|t| t.is_admissible(g))
            .count();
        assert_eq!(brute, 15);
    }

    #[test]
    fn catalan_numbers() {
        assert_eq!(catalan_count(1).unwrap(), 1);
        assert_eq!(catalan_count(2).unwrap(), 2);
        assert_eq!(catalan_count(3).unwrap(), 5);
        assert_eq!(ordered_partition_count(2).unwrap(), 4);
    }

    #[test]
    fn weak_order_basics() {
        let r = rs(RootType::A, 2);
        let g = r.weyl();
        let (e, s1, s2) = (g.identity(), g.simple_reflection(0), g.simple_reflection(1));
        let wo = weak_order(&r, s1, s2);
        assert_eq!((wo.leq, wo.meet, wo.join), (false, e, g.longest()));
        for w in g.elements() {
            let x = weak_order(&r, w, e);
            assert_eq!((x.meet, x.join), (e, w));
            let y = weak_order(&r, w, w);
            assert_eq!((y.leq, y.meet, y.join), (true, w, w));
        }
    }

    #[test]
    fn root_sums() {
        let r = rs(RootType::G, 2);
        let g = r.weyl();
        assert_eq!(root_sum(&r, InvSet::EMPTY), Weight::zero(2));
        assert_eq!(root_sum(&r, InvSet::full(6)), r.rho().scaled(2));
        for w in g.elements() {
            let expected = r.rho() - &g.apply(g.inverse(w), r.rho());
            assert_eq!(root_sum(&r, g.inversion_set(w)), expected);
            // w . 0 = w rho - rho = -s(Phi_{w^{-1}})
            let dot0 = r.act(w, &Weight::zero(2), ActionMode::Affine).unwrap();
            assert_eq!(dot0, -&root_sum(&r, g.inversion_set(g.inverse(w))));
        }
    }

    #[test]
    fn displacement_values() {
        let r = rs(RootType::A, 1);
        let g = r.weyl();
        assert_eq!(displacement(&r, g.identity()).unwrap(), vec![0, 0]);
        assert_eq!(
            displacement(&r, g.simple_reflection(0)).unwrap(),
            vec![1, -1]
        );
        assert_eq!(
            displacement(&rs(RootType::B, 2), g.identity()),
            Err(Error::NotTypeA)
        );
    }

    #[test]
    fn permutation_round_trip() {
        let r = rs(RootType::A, 3);
        let g = r.weyl();
        for w in g.elements() {
            let p = permutation(&r, w).unwrap();
            assert_eq!(element_from_permutation(&r, &p).unwrap(), w);
            let inv = (0..4)
                .flat_map(|a| (a + 1..4).map(move |b| (a, b)))
                .filter(|&(a, b)| p[a] > p[b])
                .count();
            assert_eq!(inv, g.length(w));
        }
        assert!(element_from_permutation(&r, &[0, 0, 1, 2]).is_err());
    }
}
