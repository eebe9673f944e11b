//! The rational cone of pairs `(lambda', mu')` realized by a fixed admissible
//! triple.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, q, Inequality, Q};
use crate::rootsys::{RootSystem, Weight};
use crate::weylcomb::Triple;

/// Variables are `(lambda', mu')`; the cone is
/// `{(x, y) >= 0, M (x, y) >= 0}` where `M (x, y) = nu'`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleCone {
    pub triple: Triple,
    pub inequality_matrix: Vec<Vec<i64>>,
    pub dim: usize,
    /// Constraint rows that vanish on the whole cone, indexed over
    /// `lambda'`, `mu'`, then `nu'` coordinates.
    pub implicit_equalities: Vec<usize>,
    pub strictly_dominant_lambda: bool,
    pub strictly_dominant_mu: bool,
    pub strictly_dominant_nu: bool,
}

impl TripleCone {
    /// Some point has a strictly dominant entry, which forces `d = 1`.
    pub fn has_strictly_dominant_point(&self) -> bool {
        self.strictly_dominant_lambda || self.strictly_dominant_mu || self.strictly_dominant_nu
    }

    pub fn nu_of(&self, lam: &Weight, mu: &Weight) -> Weight {
        let x: Vec<i64> = lam.0.iter().chain(&mu.0).copied().collect();
        Weight(
            self.inequality_matrix
                .iter()
                .map(|row| row.iter().zip(&x).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }

    pub fn contains(&self, lam: &Weight, mu: &Weight) -> bool {
        lam.is_dominant() && mu.is_dominant() && self.nu_of(lam, mu).is_dominant()
    }
}

fn rows(rs: &RootSystem, t: &Triple) -> Vec<Vec<i64>> {
    let g = rs.weyl();
    let n = rs.rank();
    let a = g.mul(t.w3, g.inverse(t.w1));
    let b = g.mul(t.w3, g.inverse(t.w2));
    let (ma, mb) = (g.matrix(a), g.matrix(b));
    let mut m = Vec::with_capacity(3 * n);
    for i in 0..2 * n {
        let mut r = vec![0; 2 * n];
        r[i] = 1;
        m.push(r);
    }
    for i in 0..n {
        m.push(
            ma[i * n..(i + 1) * n]
                .iter()
                .chain(&mb[i * n..(i + 1) * n])
                .copied()
                .collect(),
        );
    }
    m
}

fn qrow(r: &[i64]) -> Vec<Q> {
    r.iter().map(|&v| q(v)).collect()
}

/// Largest rank accepted, keeping elimination within eight variables.
pub const MAX_CONE_RANK: usize = 4;

pub fn cone_dimension(rs: &RootSystem, t: &Triple) -> Result<TripleCone> {
    let g = rs.weyl();
    if !t.is_admissible(g) {
        return Err(Error::InadmissibleTriple);
    }
    let n = rs.rank();
    if n > MAX_CONE_RANK {
        return Err(Error::RankTooLarge(n));
    }
    let all = rows(rs, t);
    let base: Vec<Inequality> = all.iter().map(|r| Inequality::new(qrow(r), q(0))).collect();
    let implicit: Vec<usize> = (0..all.len())
        .filter(|&i| {
            let mut sys = base.clone();
            sys.push(Inequality::new(qrow(&all[i]), q(1)));
            !linalg::feasible(&sys)
        })
        .collect();
    let eq_rows: Vec<Vec<Q>> = implicit.iter().map(|&i| qrow(&all[i])).collect();
    let dim = 2 * n - linalg::rank(&eq_rows);
    let strict = |block: usize| {
        let mut sys = base.clone();
        for r in &all[block * n..(block + 1) * n] {
            sys.push(Inequality::new(qrow(r), q(1)));
        }
        linalg::feasible(&sys)
    };
    Ok(TripleCone {
        triple: *t,
        inequality_matrix: all[2 * n..].to_vec(),
        dim,
        implicit_equalities: implicit,
        strictly_dominant_lambda: strict(0),
        strictly_dominant_mu: strict(1),
        strictly_dominant_nu: strict(2),
    })
}
