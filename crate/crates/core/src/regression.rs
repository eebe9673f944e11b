//! Fixed worked examples, run as a self-check.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::Result;
use crate::lrcone::{self, QPoint};
use crate::prv;
use crate::repthy;
use crate::rootsys::{GlWeight, RootSystem, RootType, Weight};
use crate::schubert;
use crate::weylcomb;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &str, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.to_string(),
        passed,
        detail: detail.into(),
    }
}

fn set(points: &[[i64; 2]]) -> BTreeSet<Weight> {
    points.iter().map(|p| Weight(p.to_vec())).collect()
}

fn show(s: &BTreeSet<Weight>) -> String {
    s.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// One panel of the slice figure.
pub struct Panel {
    pub name: &'static str,
    pub root_type: RootType,
    pub lambda: [i64; 2],
    pub mu: [i64; 2],
    pub support: &'static [[i64; 2]],
    pub circled: &'static [[i64; 2]],
    pub squared: &'static [[i64; 2]],
    /// Boundary path, counterclockwise, from any starting vertex.
    pub hull: &'static [[i64; 2]],
}

pub const PANELS: [Panel; 3] = [
    Panel {
        name: "a2-3-5-x-1-2",
        root_type: RootType::A,
        lambda: [3, 5],
        mu: [1, 2],
        support: &[
            [0, 6],
            [1, 4],
            [1, 7],
            [2, 5],
            [2, 8],
            [3, 3],
            [3, 6],
            [4, 4],
            [4, 7],
            [5, 2],
            [5, 5],
            [6, 3],
        ],
        circled: &[[4, 7], [6, 3], [2, 8], [5, 2], [0, 6], [1, 4]],
        squared: &[],
        hull: &[[1, 4], [5, 2], [6, 3], [4, 7], [2, 8], [0, 6]],
    },
    Panel {
        name: "b2-rho-x-rho",
        root_type: RootType::B,
        lambda: [1, 1],
        mu: [1, 1],
        support: &[
            [0, 0],
            [1, 0],
            [2, 0],
            [3, 0],
            [2, 2],
            [0, 4],
            [0, 2],
            [1, 2],
        ],
        circled: &[[0, 0], [3, 0], [2, 2], [0, 4]],
        squared: &[[1, 0], [0, 2], [1, 2]],
        hull: &[[0, 0], [3, 0], [2, 2], [0, 4]],
    },
    Panel {
        name: "a2-7-2-x-1-3",
        root_type: RootType::A,
        lambda: [7, 2],
        mu: [1, 3],
        support: &[
            [3, 3],
            [4, 1],
            [4, 4],
            [5, 2],
            [5, 5],
            [6, 0],
            [6, 3],
            [6, 6],
            [7, 1],
            [7, 4],
            [8, 2],
            [8, 5],
            [9, 0],
            [9, 3],
            [10, 1],
        ],
        circled: &[[8, 5], [10, 1], [6, 6], [3, 3], [4, 1]],
        squared: &[[8, 2]],
        hull: &[[4, 1], [6, 0], [9, 0], [10, 1], [8, 5], [6, 6], [3, 3]],
    },
];

/// Whether `got` is a rotation of `want`.
pub fn same_cycle(got: &[QPoint], want: &[[i64; 2]]) -> bool {
    let want: Vec<QPoint> = want
        .iter()
        .map(|p| QPoint::from(&Weight(p.to_vec())))
        .collect();
    got.len() == want.len()
        && (0..got.len().max(1)).any(|r| got.iter().cycle().skip(r).take(got.len()).eq(want.iter()))
}

fn panel_checks(p: &Panel) -> Result<Vec<Check>> {
    let rs = RootSystem::shared(p.root_type, 2)?;
    let (lam, mu) = (Weight(p.lambda.to_vec()), Weight(p.mu.to_vec()));
    let d = repthy::tensor_decompose(rs, &lam, &mu)?;
    let support: BTreeSet<Weight> = d.entries.keys().cloned().collect();
    let coh = prv::distinct_components(&prv::cohomological_components(rs, &lam, &mu)?);
    let gen = prv::generalized_prv_values(rs, &lam, &mu)?;
    let squares: BTreeSet<Weight> = gen.difference(&coh).cloned().collect();
    let slice = lrcone::lr_slice(rs, &lam, &mu, lrcone::DEFAULT_K_MAX)?;
    let hull: Vec<String> = slice
        .hull_vertices
        .iter()
        .map(ToString::to_string)
        .collect();
    Ok(vec![
        check(
            &format!("{}: support", p.name),
            support == set(p.support),
            show(&support),
        ),
        check(
            &format!("{}: cohomological", p.name),
            coh == set(p.circled),
            show(&coh),
        ),
        check(
            &format!("{}: generalized PRV, not cohomological", p.name),
            squares == set(p.squared),
            show(&squares),
        ),
        check(
            &format!("{}: hull vertices", p.name),
            same_cycle(&slice.hull_vertices, p.hull),
            hull.join(" "),
        ),
    ])
}

fn b2_checks() -> Result<Vec<Check>> {
    let rs = RootSystem::shared(RootType::B, 2)?;
    let rho = rs.rho().clone();
    let d = repthy::tensor_decompose(rs, &rho, &rho)?;
    let entries: Vec<String> = d
        .sorted_entries(rs)
        .iter()
        .map(|(w, m)| format!("{w}:{m}"))
        .collect();
    let expected: BTreeSet<Weight> = set(&[
        [0, 0],
        [1, 0],
        [2, 0],
        [3, 0],
        [0, 2],
        [1, 2],
        [2, 2],
        [0, 4],
    ]);
    let support: BTreeSet<Weight> = d.entries.keys().cloned().collect();
    let doubles: BTreeSet<Weight> = d
        .entries
        .iter()
        .filter(|(_, &m)| m == 2)
        .map(|(w, _)| w.clone())
        .collect();
    let ones = d.entries.values().filter(|&&m| m == 1).count();
    let gen = prv::generalized_prv_values(rs, &rho, &rho)?;
    let coh = prv::distinct_components(&prv::cohomological_components(rs, &rho, &rho)?);
    let c2 = repthy::stable_multiplicities(rs, &rho, &rho, &Weight(vec![1, 0]), 2)?;
    Ok(vec![
        check(
            "B2 rho x rho: decomposition",
            support == expected && doubles == set(&[[1, 2], [0, 2]]) && ones == 6,
            entries.join(" "),
        ),
        check(
            "B2 rho x rho: generalized PRV components",
            gen == set(&[[0, 0], [1, 0], [3, 0], [0, 2], [1, 2], [2, 2], [0, 4]]),
            show(&gen),
        ),
        check(
            "B2 rho x rho: cohomological components",
            coh == set(&[[0, 0], [3, 0], [2, 2], [0, 4]]),
            show(&coh),
        ),
        check(
            "B2 rho x rho: (1,0) doubles at k = 2",
            c2 == vec![1, 2],
            format!("{c2:?}"),
        ),
    ])
}

fn gl6_checks() -> Result<Vec<Check>> {
    let (a, b) = (3, 1);
    let rs = RootSystem::shared(RootType::A, 5)?;
    let lam = GlWeight(vec![a, b, 0, a + 2, a, a - 1]);
    let v = prv::theorem1_check(rs, &lam.to_weight(), &lam.to_weight())?;
    let lp = v.lambda_prime.clone().unwrap_or_else(|| Weight::zero(5));
    let nu = GlWeight(vec![2 * a + 1, 2 * a + 1, 2 * b + 2, 2 * b + 2, 3, 3]);
    let d = repthy::tensor_decompose(rs, &lp, &lp)?;
    let in_decomp = d.multiplicity(&nu.to_weight()) != 0;
    Ok(vec![
        check(
            "GL6 (a,b) = (3,1): lengths 3 and 6",
            v.length_lambda == Some(3) && v.length_sum == Some(6) && v.lengths_add,
            format!(
                "l(lambda) = {:?}, l(2 lambda) = {:?}",
                v.length_lambda, v.length_sum
            ),
        ),
        check(
            "GL6 (a,b) = (3,1): inversion sets overlap, not surjective",
            !v.partition && !v.surjective,
            format!("partition = {}, surjective = {}", v.partition, v.surjective),
        ),
        check(
            "GL6 (a,b) = (3,1): nu' absent from the tensor product",
            !in_decomp && nu.total() == 2 * GlWeight::from_weight(&lp, lam.total())?.total(),
            format!("nu' = {nu}"),
        ),
    ])
}

/// Runs every fixed example.
pub fn verify_paper() -> Result<Vec<Check>> {
    let mut out = b2_checks()?;
    out.extend(gl6_checks()?);
    for p in &PANELS {
        out.extend(panel_checks(p)?);
    }
    let cat: Vec<u64> = (1..=4)
        .map(weylcomb::catalan_count)
        .collect::<Result<_>>()?;
    out.push(check(
        "Catalan counts n = 1..4",
        cat == vec![1, 2, 5, 14],
        format!("{cat:?}"),
    ));
    for n in 1..=3 {
        let r = schubert::claim_scans(n)?;
        out.push(check(
            &format!("S{}: admissible triples have d = 1", n + 1),
            r.claim0.violations.is_empty(),
            format!("{} of {}", r.claim0.d_equal_one, r.claim0.triples_checked),
        ));
        out.push(check(
            &format!("S{}: additive triples with d != 0 are admissible", n + 1),
            r.claim10.violations.is_empty(),
            format!("{} checked", r.claim10.triples_checked),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    #[test]
    fn all_examples_pass() {
        let checks = super::verify_paper().unwrap();
        for c in &checks {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
        assert_eq!(checks.len(), 4 + 3 + 12 + 1 + 6);
    }
}
