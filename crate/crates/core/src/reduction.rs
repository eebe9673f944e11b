//! Coordinate-removal reductions of `GL(n+1)` triples driven by cohomological
//! witnesses, and the weaker index-only patterns.
//!
//! Permutations act on tuples by `(w^{-1} x)_s = x_{w(s)}`, so a witness
//! `(w1, w2, w3)` for `(lam, mu, nu)` satisfies
//! `nu[w3(s)] = lam[w1(s)] + mu[w2(s)]` for every `s`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::repthy;
use crate::rootsys::{GlWeight, RootSystem, RootType};
use crate::weylcomb;

pub const DEFAULT_CHAIN_CAP: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GLTriple {
    pub lam: GlWeight,
    pub mu: GlWeight,
    pub nu: GlWeight,
}

impl GLTriple {
    pub fn new(lam: GlWeight, mu: GlWeight, nu: GlWeight) -> Result<Self> {
        if lam.len() != mu.len() || lam.len() != nu.len() || lam.is_empty() {
            return Err(Error::InvalidTuple(format!(
                "tuples must be nonempty and of equal length, got {}, {}, {}",
                lam.len(),
                mu.len(),
                nu.len()
            )));
        }
        for t in [&lam, &mu, &nu] {
            if !t.is_dominant() {
                return Err(Error::InvalidTuple(format!("{t} is not weakly decreasing")));
            }
        }
        Ok(GLTriple { lam, mu, nu })
    }

    pub fn len(&self) -> usize {
        self.lam.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lam.is_empty()
    }

    pub fn lr_coefficient(&self) -> u64 {
        repthy::gl_lr_coefficient(&self.lam, &self.mu, &self.nu)
    }

    /// Removes coordinate `i` of `lam`, `j` of `mu` and `k` of `nu`.
    pub fn remove(&self, i: usize, j: usize, k: usize) -> GLTriple {
        let drop = |t: &GlWeight, at: usize| {
            GlWeight(
                t.0.iter()
                    .enumerate()
                    .filter(|&(s, _)| s != at)
                    .map(|(_, &x)| x)
                    .collect(),
            )
        };
        GLTriple {
            lam: drop(&self.lam, i),
            mu: drop(&self.mu, j),
            nu: drop(&self.nu, k),
        }
    }

    /// Index choices `(i, j, k)` with `i + j = k + n` and `lam[i] + mu[j] = nu[k]`.
    pub fn admissible_indices(&self) -> Vec<(usize, usize, usize)> {
        let n = self.len() - 1;
        let mut out = Vec::new();
        for i in 0..=n {
            for j in n - i..=n {
                let k = i + j - n;
                if self.lam.0[i] + self.mu.0[j] == self.nu.0[k] {
                    out.push((i, j, k));
                }
            }
        }
        out
    }
}

/// A witness as three permutations of `{0, ..., n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PermTriple {
    pub w1: Vec<usize>,
    pub w2: Vec<usize>,
    pub w3: Vec<usize>,
}

fn perm_inversions(p: &[usize]) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for a in 0..p.len() {
        for b in a + 1..p.len() {
            if p[a] > p[b] {
                out.insert((a, b));
            }
        }
    }
    out
}

impl PermTriple {
    pub fn identity(len: usize) -> Self {
        let e: Vec<usize> = (0..len).collect();
        PermTriple {
            w1: e.clone(),
            w2: e.clone(),
            w3: e,
        }
    }

    /// `Inv(w3)` is the disjoint union of `Inv(w1)` and `Inv(w2)`.
    pub fn is_admissible(&self) -> bool {
        let (a, b, c) = (
            perm_inversions(&self.w1),
            perm_inversions(&self.w2),
            perm_inversions(&self.w3),
        );
        a.is_disjoint(&b) && a.len() + b.len() == c.len() && a.is_subset(&c) && b.is_subset(&c)
    }

    /// Checks that this is a cohomological witness for `t`, naming the first
    /// failed condition.
    pub fn validate(&self, t: &GLTriple) -> Result<()> {
        let len = t.len();
        for (name, p) in [("w1", &self.w1), ("w2", &self.w2), ("w3", &self.w3)] {
            weylcomb::check_permutation(p, len)
                .map_err(|e| Error::InvalidWitness(format!("{name}: {e}")))?;
        }
        if !self.is_admissible() {
            return Err(Error::InvalidWitness(
                "inversion set of w3 is not the disjoint union of those of w1 and w2".into(),
            ));
        }
        for s in 0..len {
            let (lhs, rhs) = (t.nu.0[self.w3[s]], t.lam.0[self.w1[s]] + t.mu.0[self.w2[s]]);
            if lhs != rhs {
                return Err(Error::InvalidWitness(format!(
                    "nu[w3({s})] = {lhs} but lam[w1({s})] + mu[w2({s})] = {rhs}"
                )));
            }
        }
        Ok(())
    }
}

/// One application of the reduction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    /// `n` for a step from `GL(n+1)` to `GL(n)`.
    pub level: usize,
    pub indices: (usize, usize, usize),
    pub before: GLTriple,
    pub witness: PermTriple,
    pub reduced: GLTriple,
    pub reduced_witness: PermTriple,
}

fn squeeze(p: &[usize], skip: usize, removed: usize) -> Vec<usize> {
    p.iter()
        .enumerate()
        .filter(|&(s, _)| s != skip)
        .map(|(_, &x)| if x > removed { x - 1 } else { x })
        .collect()
}

/// Removes the coordinates `i = w1(n)`, `j = w2(n)`, `k = w3(n)` and restricts
/// the witness to `{0, ..., n-1}`.
pub fn reduce_once(t: &GLTriple, witness: &PermTriple) -> Result<ReductionStep> {
    if t.len() < 2 {
        return Err(Error::InvalidTuple(
            "cannot reduce a triple of length 1".into(),
        ));
    }
    witness.validate(t)?;
    let n = t.len() - 1;
    let (i, j, k) = (witness.w1[n], witness.w2[n], witness.w3[n]);
    debug_assert!(i + j == k + n && t.lam.0[i] + t.mu.0[j] == t.nu.0[k]);
    let reduced = t.remove(i, j, k);
    let reduced_witness = PermTriple {
        w1: squeeze(&witness.w1, n, i),
        w2: squeeze(&witness.w2, n, j),
        w3: squeeze(&witness.w3, n, k),
    };
    Ok(ReductionStep {
        level: n,
        indices: (i, j, k),
        before: t.clone(),
        witness: witness.clone(),
        reduced,
        reduced_witness,
    })
}

fn type_a(len: usize) -> Result<&'static RootSystem> {
    RootSystem::shared(RootType::A, len - 1)
}

fn permutations(rs: &RootSystem) -> Result<Vec<Vec<usize>>> {
    let g = rs.weyl();
    let mut out = vec![Vec::new(); g.order()];
    for w in g.elements() {
        out[w.index()] = weylcomb::permutation(rs, w)?;
    }
    Ok(out)
}

/// All cohomological components of `V(lam) (x) V(mu)` for `GL(n+1)`, with
/// their witnesses, in admissible-triple order.
pub fn gl_cohomological(lam: &GlWeight, mu: &GlWeight) -> Result<Vec<(PermTriple, GlWeight)>> {
    if lam.len() != mu.len() || lam.is_empty() {
        return Err(Error::InvalidTuple(
            "tuples must be nonempty and of equal length".into(),
        ));
    }
    if !lam.is_dominant() || !mu.is_dominant() {
        return Err(Error::InvalidTuple(
            "tuples must be weakly decreasing".into(),
        ));
    }
    if lam.len() == 1 {
        return Ok(vec![(
            PermTriple::identity(1),
            GlWeight(vec![lam.0[0] + mu.0[0]]),
        )]);
    }
    let rs = type_a(lam.len())?;
    let perms = permutations(rs)?;
    let mut out = Vec::new();
    for t in weylcomb::admissible_triples(rs) {
        let (p1, p2, p3) = (
            &perms[t.w1.index()],
            &perms[t.w2.index()],
            &perms[t.w3.index()],
        );
        let mut nu = vec![0; lam.len()];
        for s in 0..lam.len() {
            nu[p3[s]] = lam.0[p1[s]] + mu.0[p2[s]];
        }
        let nu = GlWeight(nu);
        if nu.is_dominant() {
            out.push((
                PermTriple {
                    w1: p1.clone(),
                    w2: p2.clone(),
                    w3: p3.clone(),
                },
                nu,
            ));
        }
    }
    Ok(out)
}

/// Witnesses for the given triple.
pub fn gl_witnesses(t: &GLTriple) -> Result<Vec<PermTriple>> {
    Ok(gl_cohomological(&t.lam, &t.mu)?
        .into_iter()
        .filter(|(_, nu)| *nu == t.nu)
        .map(|(w, _)| w)
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReductionOutcome {
    /// Steps from the full length down to length 1.
    Pattern(Vec<ReductionStep>),
    NotCohomological,
}

impl ReductionOutcome {
    pub fn chain(&self) -> Option<&[ReductionStep]> {
        match self {
            ReductionOutcome::Pattern(c) => Some(c),
            ReductionOutcome::NotCohomological => None,
        }
    }
}

/// Reduces until length 1, trying every witness at every level.
pub fn reduction_pattern(t: &GLTriple) -> Result<ReductionOutcome> {
    let mut chain = Vec::new();
    Ok(if pattern_rec(t, &mut chain)? {
        ReductionOutcome::Pattern(chain)
    } else {
        ReductionOutcome::NotCohomological
    })
}

fn pattern_rec(t: &GLTriple, chain: &mut Vec<ReductionStep>) -> Result<bool> {
    if t.len() == 1 {
        return Ok(t.lam.0[0] + t.mu.0[0] == t.nu.0[0]);
    }
    for w in gl_witnesses(t)? {
        let step = reduce_once(t, &w)?;
        let reduced = step.reduced.clone();
        chain.push(step);
        if pattern_rec(&reduced, chain)? {
            return Ok(true);
        }
        chain.pop();
    }
    Ok(false)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeakPatterns {
    /// Each chain lists `(i, j, k)` from the full length down to length 2.
    pub chains: Vec<Vec<(usize, usize, usize)>>,
    pub truncated: bool,
}

/// All chains of index choices ending in a length-1 triple with
/// `lam + mu = nu`, stopping after `cap` chains.
pub fn weak_reduction_patterns(t: &GLTriple, cap: usize) -> WeakPatterns {
    let mut out = WeakPatterns {
        chains: Vec::new(),
        truncated: false,
    };
    let mut prefix = Vec::new();
    weak_rec(t, cap, &mut prefix, &mut out);
    out
}

fn weak_rec(
    t: &GLTriple,
    cap: usize,
    prefix: &mut Vec<(usize, usize, usize)>,
    out: &mut WeakPatterns,
) {
    if out.truncated {
        return;
    }
    if t.len() == 1 {
        if t.lam.0[0] + t.mu.0[0] == t.nu.0[0] {
            if out.chains.len() == cap {
                out.truncated = true;
            } else {
                out.chains.push(prefix.clone());
            }
        }
        return;
    }
    for (i, j, k) in t.admissible_indices() {
        prefix.push((i, j, k));
        weak_rec(&t.remove(i, j, k), cap, prefix, out);
        prefix.pop();
        if out.truncated {
            return;
        }
    }
}

pub fn has_weak_pattern(t: &GLTriple) -> bool {
    !weak_reduction_patterns(t, 1).chains.is_empty()
}

/// Serializable view of one step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainRecord {
    pub level: usize,
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub lam: GlWeight,
    pub mu: GlWeight,
    pub nu: GlWeight,
    pub words: PermTriple,
}

pub fn chain_records(chain: &[ReductionStep]) -> Vec<ChainRecord> {
    chain
        .iter()
        .map(|s| ChainRecord {
            level: s.level,
            i: s.indices.0,
            j: s.indices.1,
            k: s.indices.2,
            lam: s.before.lam.clone(),
            mu: s.before.mu.clone(),
            nu: s.before.nu.clone(),
            words: s.witness.clone(),
        })
        .collect()
}

/// Evidence on whether a weak pattern forces a cohomological component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Question5Report {
    pub length: usize,
    pub max_entry: i64,
    /// Triples with `c != 0` that were examined.
    pub triples_checked: usize,
    pub weak_and_cohomological: usize,
    /// Candidate counterexamples: a weak pattern but no witness.
    pub weak_not_cohomological: Vec<GLTriple>,
    /// Cohomological triples lacking a weak pattern; always empty when the
    /// reduction is sound.
    pub cohomological_without_weak: Vec<GLTriple>,
    pub weak_pattern_coefficient_not_one: Vec<GLTriple>,
    /// Weak chains that failed to extend to a full pattern although one of
    /// the tuples is strictly decreasing.
    pub strict_shortcut_failures: Vec<GLTriple>,
}

/// Runs over all `lam`, `mu` of the given length with entries in
/// `[0, max_entry]` and last entry 0, and every `nu` in the product.
pub fn question5_scan(length: usize, max_entry: i64) -> Result<Question5Report> {
    let mut report = Question5Report {
        length,
        max_entry,
        triples_checked: 0,
        weak_and_cohomological: 0,
        weak_not_cohomological: Vec::new(),
        cohomological_without_weak: Vec::new(),
        weak_pattern_coefficient_not_one: Vec::new(),
        strict_shortcut_failures: Vec::new(),
    };
    if length < 2 {
        return Err(Error::InvalidTuple("length must be at least 2".into()));
    }
    let rs = type_a(length)?;
    let parts = partitions_in_box(length, max_entry);
    for (a, lam) in parts.iter().enumerate() {
        for mu in &parts[a..] {
            let coh: BTreeSet<GlWeight> = gl_cohomological(lam, mu)?
                .into_iter()
                .map(|(_, nu)| nu)
                .collect();
            let d = repthy::tensor_decompose(rs, &lam.to_weight(), &mu.to_weight())?;
            for nu in d.entries.keys() {
                let nu = GlWeight::from_weight(nu, lam.total() + mu.total())?;
                let t = GLTriple::new(lam.clone(), mu.clone(), nu.clone())?;
                report.triples_checked += 1;
                let weak = has_weak_pattern(&t);
                let is_coh = coh.contains(&nu);
                match (weak, is_coh) {
                    (true, true) => report.weak_and_cohomological += 1,
                    (true, false) => report.weak_not_cohomological.push(t.clone()),
                    (false, true) => report.cohomological_without_weak.push(t.clone()),
                    (false, false) => {}
                }
                if weak && t.lr_coefficient() != 1 {
                    report.weak_pattern_coefficient_not_one.push(t.clone());
                }
                let strict = [&t.lam, &t.mu, &t.nu]
                    .iter()
                    .any(|x| x.is_strictly_dominant());
                if weak && strict && !is_coh {
                    report.strict_shortcut_failures.push(t);
                }
            }
        }
    }
    Ok(report)
}

/// Weakly decreasing tuples with entries in `[0, max]` and last entry 0.
pub fn partitions_in_box(length: usize, max: i64) -> Vec<GlWeight> {
    fn rec(len: usize, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<GlWeight>) {
        if cur.len() + 1 == len {
            cur.push(0);
            out.push(GlWeight(cur.clone()));
            cur.pop();
            return;
        }
        for x in (0..=cap).rev() {
            cur.push(x);
            rec(len, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if length > 0 {
        rec(length, max, &mut Vec::new(), &mut out);
    }
    out
}
