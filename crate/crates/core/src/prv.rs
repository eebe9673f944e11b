//! Generalized PRV components and the cohomological components cut out by
//! the inversion-set partition criterion.
//!
//! For dominant `lambda'`, `mu'` a cohomological component `V(nu')` is
//! witnessed by an admissible triple `(w1, w2, w3)` with
//! `nu' = w3 (w1^{-1} lambda' + w2^{-1} mu')` dominant. The witness pulls back
//! to the characters `lambda = w1^{-1} . lambda'` and `mu = w2^{-1} . mu'`,
//! for which the restriction map is surjective.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::repthy::{self, Decomposition};
use crate::rootsys::{ActionMode, DominantData, RootSystem, Weight, WeylElement};
use crate::weylcomb::{self, Triple};

/// One generalized PRV component, indexed by `w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenPrvEntry {
    pub w: WeylElement,
    pub nu: Weight,
    pub mult: u64,
}

/// One entry per `w` in `W`: the dominant representative of
/// `lambda' + w mu'` and its multiplicity.
pub fn generalized_prv(rs: &RootSystem, lam: &Weight, mu: &Weight) -> Result<Vec<GenPrvEntry>> {
    let d = repthy::tensor_decompose(rs, lam, mu)?;
    Ok(generalized_prv_with(rs, lam, mu, &d))
}

fn generalized_prv_with(
    rs: &RootSystem,
    lam: &Weight,
    mu: &Weight,
    d: &Decomposition,
) -> Vec<GenPrvEntry> {
    let g = rs.weyl();
    g.elements()
        .map(|w| {
            let nu = rs.dominant_representative(&(lam + &g.apply(w, mu)));
            let mult = d.multiplicity(&nu);
            GenPrvEntry { w, nu, mult }
        })
        .collect()
}

/// The distinct generalized PRV highest weights.
pub fn generalized_prv_values(
    rs: &RootSystem,
    lam: &Weight,
    mu: &Weight,
) -> Result<BTreeSet<Weight>> {
    rs.check_dominant(lam)?;
    rs.check_dominant(mu)?;
    let g = rs.weyl();
    Ok(g.elements()
        .map(|w| rs.dominant_representative(&(lam + &g.apply(w, mu))))
        .collect())
}

/// Outcome of testing the surjectivity criterion for a pair of characters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub lambda_regular: bool,
    pub mu_regular: bool,
    pub sum_regular: bool,
    pub length_lambda: Option<usize>,
    pub length_mu: Option<usize>,
    pub length_sum: Option<usize>,
    /// `l(lambda + mu) = l(lambda) + l(mu)`
    pub lengths_add: bool,
    /// `Phi_{w_{lambda+mu}}` is the disjoint union of `Phi_{w_lambda}` and `Phi_{w_mu}`
    pub partition: bool,
    pub surjective: bool,
    pub triple: Option<Triple>,
    pub q: Option<usize>,
    pub lambda_prime: Option<Weight>,
    pub mu_prime: Option<Weight>,
    pub nu_prime: Option<Weight>,
}

/// Decides whether the restriction map for `(lambda, mu)` is a surjection of
/// nonzero modules.
pub fn theorem1_check(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<Verdict> {
    let dl = rs.dominant_data(lambda)?;
    let dm = rs.dominant_data(mu)?;
    let ds = rs.dominant_data(&(lambda + mu))?;
    let g = rs.weyl();
    let mut v = Verdict {
        lambda_regular: dl.is_regular(),
        mu_regular: dm.is_regular(),
        sum_regular: ds.is_regular(),
        length_lambda: dl.length(),
        length_mu: dm.length(),
        length_sum: ds.length(),
        lengths_add: false,
        partition: false,
        surjective: false,
        triple: None,
        q: None,
        lambda_prime: None,
        mu_prime: None,
        nu_prime: None,
    };
    if let (
        DominantData::Regular {
            w: w1,
            length: l1,
            dominant: lp,
        },
        DominantData::Regular {
            w: w2,
            length: l2,
            dominant: mp,
        },
        DominantData::Regular {
            w: w3,
            length: l3,
            dominant: np,
        },
    ) = (dl, dm, ds)
    {
        let t = Triple::new(w1, w2, w3);
        v.lengths_add = l3 == l1 + l2;
        v.partition = t.is_admissible(g);
        v.lambda_prime = Some(lp);
        v.mu_prime = Some(mp);
        v.nu_prime = Some(np);
        v.triple = Some(t);
        v.q = Some(l3);
        v.surjective = v.partition;
    }
    Ok(v)
}

/// A cohomological component together with the data that realizes it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologicalWitness {
    pub triple: Triple,
    /// `w1^{-1} . lambda'`
    pub lambda_raw: Weight,
    /// `w2^{-1} . mu'`
    pub mu_raw: Weight,
    pub nu_prime: Weight,
    /// `l(w3) = l(w1) + l(w2)`, the cohomological degree.
    pub q: usize,
}

/// All witnesses for `V(lambda') (x) V(mu')`, in the order of the admissible
/// triple table.
pub fn cohomological_components(
    rs: &RootSystem,
    lam: &Weight,
    mu: &Weight,
) -> Result<Vec<CohomologicalWitness>> {
    rs.check_dominant(lam)?;
    rs.check_dominant(mu)?;
    let g = rs.weyl();
    let mut lam_images: HashMap<WeylElement, Weight> = HashMap::new();
    let mut mu_images: HashMap<WeylElement, Weight> = HashMap::new();
    let mut out = Vec::new();
    for t in weylcomb::admissible_triples(rs) {
        let a = lam_images
            .entry(t.w1)
            .or_insert_with(|| g.apply(g.inverse(t.w1), lam))
            .clone();
        let b = mu_images
            .entry(t.w2)
            .or_insert_with(|| g.apply(g.inverse(t.w2), mu));
        let nu = g.apply(t.w3, &(&a + b));
        // nu' dominant forces nu' + rho strictly dominant, so w_{lambda+mu} = w3.
        if nu.is_dominant() {
            out.push(CohomologicalWitness {
                triple: *t,
                lambda_raw: rs.act(g.inverse(t.w1), lam, ActionMode::Affine)?,
                mu_raw: rs.act(g.inverse(t.w2), mu, ActionMode::Affine)?,
                nu_prime: nu,
                q: g.length(t.w3),
            });
        }
    }
    Ok(out)
}

pub fn distinct_components(witnesses: &[CohomologicalWitness]) -> BTreeSet<Weight> {
    witnesses.iter().map(|w| w.nu_prime.clone()).collect()
}

/// Longest element of the parabolic subgroup generated by `{s_i : i in subset}`.
pub fn parabolic_w0(rs: &RootSystem, subset: &[usize]) -> WeylElement {
    let g = rs.weyl();
    let mut seen = HashSet::from([g.identity()]);
    let mut stack = vec![g.identity()];
    let mut best = g.identity();
    while let Some(u) = stack.pop() {
        if g.length(u) > g.length(best) {
            best = u;
        }
        for &i in subset {
            let v = g.left_mul(i, u);
            if seen.insert(v) {
                stack.push(v);
            }
        }
    }
    best
}

/// All `2^rank` subsets of simple roots, as sorted index lists.
pub fn simple_subsets(rank: usize) -> Vec<Vec<usize>> {
    (0..1usize << rank)
        .map(|mask| (0..rank).filter(|i| mask >> i & 1 == 1).collect())
        .collect()
}

/// Counts of cohomological components under both conventions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomCount {
    /// Number of `w` in `W` whose generalized PRV component `dom(lambda' + w mu')`
    /// is realized by a witness with `w = w1 w2^{-1}`.
    pub by_w_triple: usize,
    /// Number of distinct highest weights.
    pub distinct: usize,
    /// Number of admissible triples giving a witness.
    pub witness_triples: usize,
    pub weyl_order: usize,
    pub lower_bound: usize,
}

pub fn count_cohomological(rs: &RootSystem, lam: &Weight, mu: &Weight) -> Result<CohomCount> {
    let ws = cohomological_components(rs, lam, mu)?;
    Ok(count_from(rs, &ws))
}

fn count_from(rs: &RootSystem, ws: &[CohomologicalWitness]) -> CohomCount {
    let g = rs.weyl();
    let by_w: HashSet<WeylElement> = ws
        .iter()
        .map(|x| g.mul(x.triple.w1, g.inverse(x.triple.w2)))
        .collect();
    CohomCount {
        by_w_triple: by_w.len(),
        distinct: distinct_components(ws).len(),
        witness_triples: ws.len(),
        weyl_order: g.order(),
        lower_bound: 1 << rs.rank(),
    }
}

/// Row of the stable multiplicity scan, one per `w`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureRow {
    pub w: Vec<u8>,
    pub nu: Weight,
    /// `c_{k lambda', k mu'}^{k nu'}` for `k = 1..=k_max`.
    pub mults: Vec<u64>,
    pub stable_mult_one: bool,
    pub cohomological: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub root_system: String,
    pub lambda: Weight,
    pub mu: Weight,
    /// Stability is only checked for `k <= k_max`.
    pub k_max: usize,
    pub rows: Vec<ConjectureRow>,
    pub cohomological: BTreeSet<Weight>,
    pub mult_one_generalized_prv: BTreeSet<Weight>,
    pub stable_mult_one_up_to_k: BTreeSet<Weight>,
    /// Cohomological components are generalized PRV of multiplicity one.
    /// This must always hold.
    pub theorem2_direction_holds: bool,
    /// Stable (up to `k_max`) multiplicity-one components that are not
    /// cohomological. Empty when the data is consistent with the converse.
    pub stable_not_cohomological: BTreeSet<Weight>,
    pub conjecture_consistent_up_to_k: bool,
}

pub fn conjecture_scan(
    rs: &RootSystem,
    lam: &Weight,
    mu: &Weight,
    k_max: usize,
) -> Result<ConjectureReport> {
    let k_max = k_max.max(1);
    let decomps: Vec<Decomposition> = (1..=k_max as i64)
        .map(|k| repthy::tensor_decompose(rs, &lam.scaled(k), &mu.scaled(k)))
        .collect::<Result<_>>()?;
    let witnesses = cohomological_components(rs, lam, mu)?;
    let cohomological = distinct_components(&witnesses);
    let g = rs.weyl();
    let entries = generalized_prv_with(rs, lam, mu, &decomps[0]);
    let mut cache: BTreeMap<Weight, Vec<u64>> = BTreeMap::new();
    let rows: Vec<ConjectureRow> = entries
        .iter()
        .map(|e| {
            let mults = cache
                .entry(e.nu.clone())
                .or_insert_with(|| {
                    decomps
                        .iter()
                        .zip(1i64..)
                        .map(|(d, k)| d.multiplicity(&e.nu.scaled(k)))
                        .collect()
                })
                .clone();
            ConjectureRow {
                w: g.word_one_based(e.w),
                stable_mult_one: mults.iter().all(|&m| m == 1),
                cohomological: cohomological.contains(&e.nu),
                nu: e.nu.clone(),
                mults,
            }
        })
        .collect();
    let mult_one_generalized_prv: BTreeSet<Weight> = rows
        .iter()
        .filter(|r| r.mults[0] == 1)
        .map(|r| r.nu.clone())
        .collect();
    let stable: BTreeSet<Weight> = rows
        .iter()
        .filter(|r| r.stable_mult_one)
        .map(|r| r.nu.clone())
        .collect();
    let stable_not_cohomological: BTreeSet<Weight> =
        stable.difference(&cohomological).cloned().collect();
    Ok(ConjectureReport {
        root_system: rs.label(),
        lambda: lam.clone(),
        mu: mu.clone(),
        k_max,
        theorem2_direction_holds: cohomological.is_subset(&mult_one_generalized_prv),
        conjecture_consistent_up_to_k: stable_not_cohomological.is_empty()
            && cohomological.is_subset(&stable),
        rows,
        cohomological,
        mult_one_generalized_prv,
        stable_mult_one_up_to_k: stable,
        stable_not_cohomological,
    })
}

/// One row of the component table: every component of the tensor product
/// with its multiplicity and classification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentRow {
    pub nu: Weight,
    pub mult: u64,
    pub generalized_prv: bool,
    pub cohomological: bool,
    /// Multiplicity one at every scale `k <= k_max`.
    pub stable: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentTable {
    pub root_system: String,
    pub lambda: Weight,
    pub mu: Weight,
    pub k_max: usize,
    pub rows: Vec<ComponentRow>,
    pub counts: CohomCount,
}

pub fn component_table(
    rs: &RootSystem,
    lam: &Weight,
    mu: &Weight,
    k_max: usize,
) -> Result<ComponentTable> {
    let report = conjecture_scan(rs, lam, mu, k_max)?;
    let decomp = repthy::tensor_decompose(rs, lam, mu)?;
    let gen: BTreeSet<Weight> = report.rows.iter().map(|r| r.nu.clone()).collect();
    let witnesses = cohomological_components(rs, lam, mu)?;
    let rows = decomp
        .sorted_entries(rs)
        .into_iter()
        .rev()
        .map(|(nu, mult)| ComponentRow {
            generalized_prv: gen.contains(&nu),
            cohomological: report.cohomological.contains(&nu),
            stable: report.stable_mult_one_up_to_k.contains(&nu),
            nu,
            mult,
        })
        .collect();
    Ok(ComponentTable {
        root_system: rs.label(),
        lambda: lam.clone(),
        mu: mu.clone(),
        k_max: report.k_max,
        rows,
        counts: count_from(rs, &witnesses),
    })
}

impl ComponentTable {
    /// Aligned text columns: `nu'  mult  gen-PRV?  cohomological?  stable?`.
    pub fn to_text(&self) -> String {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let header = ["nu'", "mult", "gen-PRV?", "cohomological?", "stable?"];
        let body: Vec<[String; 5]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.nu.to_string(),
                    r.mult.to_string(),
                    yn(r.generalized_prv).to_string(),
                    yn(r.cohomological).to_string(),
                    yn(r.stable).to_string(),
                ]
            })
            .collect();
        let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
        for row in &body {
            for (wd, cell) in widths.iter_mut().zip(row) {
                *wd = (*wd).max(cell.len());
            }
        }
        let mut out = format!(
            "# {} V{} (x) V{}, stability checked for k <= {}\n",
            self.root_system, self.lambda, self.mu, self.k_max
        );
        let line = |cells: &[&str]| -> String {
            let padded: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        out += &line(&header);
        for row in &body {
            out += &line(&row.iter().map(String::as_str).collect::<Vec<_>>());
        }
        out
    }
}

/// Findings of a search over pairs of characters with additive lengths.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Question22Report {
    pub root_system: String,
    pub bound: i64,
    /// Pairs with `lambda`, `mu`, `lambda + mu` regular and additive lengths.
    pub pairs_checked: usize,
    /// Pairs where surjectivity and `c_{lambda', mu'}^{nu'} != 0` agree.
    pub confirmations: usize,
    pub surjective: usize,
    pub nonzero_coefficient: usize,
    /// Pairs with nonzero coefficient but no surjection.
    pub counterexamples: Vec<(Weight, Weight)>,
}

/// Scans all `lambda`, `mu` with coordinates in `[-bound, bound]`.
pub fn question22_scan(rs: &RootSystem, bound: i64) -> Result<Question22Report> {
    let n = rs.rank();
    let side = (2 * bound + 1) as usize;
    let box_points: Vec<Weight> = (0..side.pow(n as u32))
        .map(|mut code| {
            Weight(
                (0..n)
                    .map(|_| {
                        let c = (code % side) as i64 - bound;
                        code /= side;
                        c
                    })
                    .collect(),
            )
        })
        .collect();
    let mut cache: HashMap<(Weight, Weight), Decomposition> = HashMap::new();
    let mut report = Question22Report {
        root_system: rs.label(),
        bound,
        pairs_checked: 0,
        confirmations: 0,
        surjective: 0,
        nonzero_coefficient: 0,
        counterexamples: Vec::new(),
    };
    for lam in &box_points {
        for mu in &box_points {
            let v = theorem1_check(rs, lam, mu)?;
            if !(v.lambda_regular && v.mu_regular && v.sum_regular && v.lengths_add) {
                continue;
            }
            let (lp, mp, np) = (
                v.lambda_prime.clone().expect("regular"),
                v.mu_prime.clone().expect("regular"),
                v.nu_prime.clone().expect("regular"),
            );
            let key = if lp <= mp { (lp, mp) } else { (mp, lp) };
            if !cache.contains_key(&key) {
                let d = repthy::tensor_decompose(rs, &key.0, &key.1)?;
                cache.insert(key.clone(), d);
            }
            let c = cache[&key].multiplicity(&np);
            report.pairs_checked += 1;
            report.surjective += usize::from(v.surjective);
            report.nonzero_coefficient += usize::from(c != 0);
            if v.surjective == (c != 0) {
                report.confirmations += 1;
            } else if c != 0 {
                report.counterexamples.push((lam.clone(), mu.clone()));
            }
        }
    }
    Ok(report)
}
