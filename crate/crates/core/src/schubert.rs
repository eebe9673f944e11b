//! Schubert polynomials and the structure constants `d_{w1,w2}^{w3}` for
//! flag varieties of type A.
//!
//! Permutations are one-line and 0-indexed: `w[s] = w(s)`. A descent at `i`
//! means `w(i) > w(i+1)`, and then `∂_i S_w = S_{w s_i}`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, RootType};
use crate::weylcomb::{self, check_permutation};

/// Largest number of variables a monomial can carry.
pub const MAX_VARS: usize = 12;

type Mono = [u8; MAX_VARS];

/// Polynomial with integer coefficients in `x_0, ..., x_{MAX_VARS-1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Mono, i64>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::monomial(&[], 1)
    }

    pub fn monomial(exponents: &[u8], coeff: i64) -> Self {
        let mut m = [0u8; MAX_VARS];
        m[..exponents.len()].copy_from_slice(exponents);
        let mut p = Polynomial::zero();
        p.add_term(m, coeff);
        p
    }

    fn add_term(&mut self, m: Mono, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(m).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms as `(exponents, coefficient)`, exponents trimmed to `MAX_VARS`.
    pub fn terms(&self) -> impl Iterator<Item = (&[u8], i64)> {
        self.terms.iter().map(|(m, &c)| (&m[..], c))
    }

    pub fn coefficient(&self, exponents: &[u8]) -> i64 {
        let mut m = [0u8; MAX_VARS];
        m[..exponents.len()].copy_from_slice(exponents);
        self.terms.get(&m).copied().unwrap_or(0)
    }

    pub fn constant_term(&self) -> i64 {
        self.terms.get(&[0u8; MAX_VARS]).copied().unwrap_or(0)
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let mut m = *a;
                for (x, y) in m.iter_mut().zip(b) {
                    *x += y;
                }
                out.add_term(m, ca * cb);
            }
        }
        out
    }

    pub fn add_scaled(&mut self, other: &Polynomial, c: i64) {
        for (m, &v) in &other.terms {
            self.add_term(*m, c * v);
        }
    }

    /// The divided difference `(f - s_i f) / (x_i - x_{i+1})`.
    pub fn divided_difference(&self, i: usize) -> Polynomial {
        assert!(i + 1 < MAX_VARS, "variable index out of range");
        let mut out = Polynomial::zero();
        for (m, &c) in &self.terms {
            let (a, b) = (m[i], m[i + 1]);
            if a == b {
                continue;
            }
            let (hi, lo, sign) = if a > b { (a, b, 1) } else { (b, a, -1) };
            for t in 0..hi - lo {
                let mut r = *m;
                r[i] = lo + t;
                r[i + 1] = hi - 1 - t;
                out.add_term(r, sign * c);
            }
        }
        out
    }

    /// Revlex-largest monomial: compares exponents from the last variable down.
    fn revlex_leading(&self) -> Option<(Mono, i64)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| a.iter().rev().cmp(b.iter().rev()))
            .map(|(m, &c)| (*m, c))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, &c) in self.terms.iter().rev() {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let vars: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|&(_, &e)| e > 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        format!("x{v}")
                    } else {
                        format!("x{v}^{e}")
                    }
                })
                .collect();
            match (c.abs(), vars.is_empty()) {
                (k, true) => write!(f, "{k}")?,
                (1, false) => write!(f, "{}", vars.join("*"))?,
                (k, false) => write!(f, "{k}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

fn length(w: &[usize]) -> usize {
    (0..w.len())
        .map(|a| (a + 1..w.len()).filter(|&b| w[a] > w[b]).count())
        .sum()
}

/// Lehmer code: `c_s = #{t > s : w(t) < w(s)}`.
pub fn lehmer_code(w: &[usize]) -> Vec<u8> {
    (0..w.len())
        .map(|s| (s + 1..w.len()).filter(|&t| w[t] < w[s]).count() as u8)
        .collect()
}

/// Inverse of [`lehmer_code`], trailing zeros trimmed from the result.
pub fn from_lehmer_code(code: &[u8]) -> Vec<usize> {
    let m = code
        .iter()
        .enumerate()
        .map(|(s, &c)| s + c as usize + 1)
        .max()
        .unwrap_or(1)
        .max(code.len());
    let mut unused: Vec<usize> = (0..m).collect();
    let mut w: Vec<usize> = (0..m)
        .map(|s| unused.remove(code.get(s).copied().unwrap_or(0) as usize))
        .collect();
    while w.len() > 1 && w[w.len() - 1] == w.len() - 1 {
        w.pop();
    }
    w
}

/// Schubert polynomial of an arbitrary permutation, built down from the
/// staircase monomial of its symmetric group.
pub fn schubert_polynomial(w: &[usize]) -> Result<Polynomial> {
    check_permutation(w, w.len()).map_err(|e| Error::InvalidPermutation(e.to_string()))?;
    if w.len() > MAX_VARS {
        return Err(Error::InvalidPermutation(format!(
            "permutations of more than {MAX_VARS} letters are not supported"
        )));
    }
    let m = w.len();
    // Walk up to w0 by right multiplication at ascents, then come back down.
    let mut u = w.to_vec();
    let mut path = Vec::new();
    while let Some(i) = (0..m.saturating_sub(1)).find(|&i| u[i] < u[i + 1]) {
        u.swap(i, i + 1);
        path.push(i);
    }
    let staircase: Vec<u8> = (0..m).map(|s| (m - 1 - s) as u8).collect();
    let mut p = Polynomial::monomial(&staircase, 1);
    for &i in path.iter().rev() {
        p = p.divided_difference(i);
    }
    Ok(p)
}

/// Schubert polynomials of every element of `S_{n+1}`, indexed by Weyl group
/// element index of `A_n`.
struct SchubertTable {
    perms: Vec<Vec<usize>>,
    polys: Vec<Polynomial>,
    index: BTreeMap<Vec<usize>, usize>,
}

fn table(n: usize) -> Result<&'static SchubertTable> {
    static TABLES: [OnceLock<SchubertTable>; 8] = [const { OnceLock::new() }; 8];
    let rs = type_a(n)?;
    if let Some(t) = TABLES[n].get() {
        return Ok(t);
    }
    let g = rs.weyl();
    let mut perms = vec![Vec::new(); g.order()];
    for w in g.elements() {
        perms[w.index()] = weylcomb::permutation(rs, w)?;
    }
    let index: BTreeMap<Vec<usize>, usize> = perms.iter().cloned().zip(0..).collect();
    let mut polys = vec![Polynomial::zero(); g.order()];
    polys[g.longest().index()] = schubert_polynomial(&perms[g.longest().index()])?;
    let mut order: Vec<_> = g.elements().collect();
    order.reverse();
    for w in order {
        let p = &perms[w.index()];
        if let Some(i) = (0..n).find(|&i| p[i] < p[i + 1]) {
            let mut up = p.clone();
            up.swap(i, i + 1);
            polys[w.index()] = polys[index[&up]].divided_difference(i);
        }
    }
    Ok(TABLES[n].get_or_init(|| SchubertTable {
        perms,
        polys,
        index,
    }))
}

fn type_a(n: usize) -> Result<&'static RootSystem> {
    RootSystem::shared(RootType::A, n)
}

fn check_same_group(ws: &[&[usize]]) -> Result<usize> {
    let len = ws[0].len();
    for w in ws {
        if w.len() != len {
            return Err(Error::InvalidPermutation(
                "permutations must have the same length".into(),
            ));
        }
        check_permutation(w, len).map_err(|e| Error::InvalidPermutation(e.to_string()))?;
    }
    if len < 2 {
        return Err(Error::InvalidPermutation(
            "need at least two letters".into(),
        ));
    }
    Ok(len - 1)
}

/// Applies `∂_{i_1} ... ∂_{i_l}` for a reduced word of `w`, rightmost first,
/// and evaluates at zero. This extracts the coefficient of `S_w`.
fn extract(f: &Polynomial, w: &[usize]) -> i64 {
    let mut u = w.to_vec();
    let mut f = f.clone();
    while let Some(i) = (0..u.len() - 1).find(|&i| u[i] > u[i + 1]) {
        f = f.divided_difference(i);
        if f.is_zero() {
            return 0;
        }
        u.swap(i, i + 1);
    }
    f.constant_term()
}

/// Coefficient of `S_{w3}` in `S_{w1} S_{w2}`.
pub fn d_coefficient(w1: &[usize], w2: &[usize], w3: &[usize]) -> Result<u64> {
    let n = check_same_group(&[w1, w2, w3])?;
    let (l1, l2, l3) = (length(w1), length(w2), length(w3));
    if l3 != l1 + l2 {
        return Err(Error::LengthMismatch { l3, sum: l1 + l2 });
    }
    let t = table(n)?;
    let prod = t.polys[t.index[w1]].mul(&t.polys[t.index[w2]]);
    let d = extract(&prod, w3);
    assert!(d >= 0, "negative structure constant {d}");
    Ok(d as u64)
}

/// Expansion of a polynomial in the Schubert basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchubertExpansion {
    pub terms: BTreeMap<Vec<usize>, i64>,
}

impl SchubertExpansion {
    pub fn coefficient(&self, w: &[usize]) -> i64 {
        let mut key = w.to_vec();
        while key.len() > 1 && key[key.len() - 1] == key.len() - 1 {
            key.pop();
        }
        self.terms.get(&key).copied().unwrap_or(0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }
}

/// Greedy expansion: the revlex-leading monomial of `S_u` is `x^{code(u)}`.
pub fn expand(f: &Polynomial) -> Result<SchubertExpansion> {
    let mut rest = f.clone();
    let mut terms = BTreeMap::new();
    while let Some((m, c)) = rest.revlex_leading() {
        let code_len = m.iter().rposition(|&e| e > 0).map_or(1, |p| p + 1);
        let u = from_lehmer_code(&m[..code_len]);
        let s = schubert_polynomial(&u)?;
        rest.add_scaled(&s, -c);
        terms.insert(u, c);
    }
    Ok(SchubertExpansion { terms })
}

pub fn expand_product(w1: &[usize], w2: &[usize]) -> Result<SchubertExpansion> {
    let p = schubert_polynomial(w1)?.mul(&schubert_polynomial(w2)?);
    expand(&p)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanCounts {
    pub triples_checked: usize,
    pub d_equal_one: usize,
    pub violations: Vec<[Vec<usize>; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimScanReport {
    /// Number of letters `n + 1`.
    pub letters: usize,
    pub scope: String,
    /// Every admissible triple has `d = 1`.
    pub claim0: ScanCounts,
    /// Triples with additive length, additive displacement and `d != 0`;
    /// each should be admissible.
    pub claim10: ScanCounts,
}

impl ClaimScanReport {
    pub fn passed(&self) -> bool {
        self.claim0.violations.is_empty() && self.claim10.violations.is_empty()
    }
}

/// Exhaustive scans over `S_{n+1}`.
pub fn claim_scans(n: usize) -> Result<ClaimScanReport> {
    let rs = type_a(n)?;
    let t = table(n)?;
    let g = rs.weyl();
    let perm = |w: crate::rootsys::WeylElement| &t.perms[w.index()];

    let triples = weylcomb::admissible_triples(rs);
    let claim0_results: Vec<(bool, [Vec<usize>; 3])> = triples
        .par_iter()
        .map(|tr| {
            let prod = t.polys[tr.w1.index()].mul(&t.polys[tr.w2.index()]);
            let d = extract(&prod, perm(tr.w3));
            (
                d == 1,
                [
                    perm(tr.w1).clone(),
                    perm(tr.w2).clone(),
                    perm(tr.w3).clone(),
                ],
            )
        })
        .collect();
    let mut claim0 = ScanCounts {
        triples_checked: claim0_results.len(),
        ..Default::default()
    };
    for (ok, ws) in claim0_results {
        if ok {
            claim0.d_equal_one += 1;
        } else {
            claim0.violations.push(ws);
        }
    }

    let elements: Vec<_> = g.elements().collect();
    let per_w1: Vec<ScanCounts> = elements
        .par_iter()
        .map(|&w1| {
            let mut counts = ScanCounts::default();
            let p1 = perm(w1);
            for &w2 in &elements {
                let p2 = perm(w2);
                // Additive displacement forces w3(s) = w1(s) + w2(s) - s.
                let cand: Option<Vec<usize>> = (0..=n)
                    .map(|s| (p1[s] + p2[s]).checked_sub(s).filter(|&x| x <= n))
                    .collect();
                let Some(p3) = cand else { continue };
                let Some(&i3) = t.index.get(&p3) else {
                    continue;
                };
                let w3 = crate::rootsys::WeylElement(i3 as u32);
                if g.length(w3) != g.length(w1) + g.length(w2) {
                    continue;
                }
                let d = extract(&t.polys[w1.index()].mul(&t.polys[w2.index()]), &p3);
                if d == 0 {
                    continue;
                }
                counts.triples_checked += 1;
                counts.d_equal_one += usize::from(d == 1);
                if !weylcomb::Triple::new(w1, w2, w3).is_admissible(g) {
                    counts.violations.push([p1.clone(), p2.clone(), p3]);
                }
            }
            counts
        })
        .collect();
    let mut claim10 = ScanCounts::default();
    for c in per_w1 {
        claim10.triples_checked += c.triples_checked;
        claim10.d_equal_one += c.d_equal_one;
        claim10.violations.extend(c.violations);
    }
    Ok(ClaimScanReport {
        letters: n + 1,
        scope: "type A only: structure constants for other types are not implemented".into(),
        claim0,
        claim10,
    })
}

/// The same scans requested for an arbitrary root system; anything but type A
/// is refused.
pub fn question0_scan(rs: &RootSystem) -> Result<ClaimScanReport> {
    if !rs.is_type_a() {
        return Err(Error::NotTypeA);
    }
    claim_scans(rs.rank())
}

/// Grassmannian permutation of `S_{n+1}` with its only descent at `k - 1`
/// (or none), for a partition inside the `k x (n+1-k)` box.
pub fn grassmannian_permutation(
    partition: &[usize],
    k: usize,
    letters: usize,
) -> Result<Vec<usize>> {
    if partition.len() > k
        || partition.iter().any(|&p| p > letters - k)
        || partition.windows(2).any(|x| x[0] < x[1])
    {
        return Err(Error::InvalidPermutation(format!(
            "{partition:?} does not fit a {k} x {} box",
            letters - k
        )));
    }
    let mut first: Vec<usize> = (0..k)
        .map(|s| s + partition.get(k - 1 - s).copied().unwrap_or(0))
        .collect();
    first.sort_unstable();
    let rest: Vec<usize> = (0..letters).filter(|x| !first.contains(x)).collect();
    first.extend(rest);
    Ok(first)
}

#[cfg(test)]
mod tests;
