//! Root systems, weights and the two Weyl group actions.
//!
//! Weights are stored in fundamental-weight coordinates. Simple roots follow
//! the Bourbaki numbering, so in `B2` the first simple root is long and in
//! `G2` the first simple root is short. Positive roots are indexed by height,
//! ties broken by their simple-root coefficients with `alpha_1` weighing most;
//! this index order fixes the bit layout of every inversion set.

mod cache;
mod weight;
mod weyl;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use cache::{RootSystemTables, CACHE_ENV_VAR, CACHE_FORMAT_VERSION};
pub use weight::{GlWeight, Weight};
pub use weyl::{WeylElement, WeylGroup};

use crate::error::{Error, Result};
use crate::linalg::{self, q, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootType {
    A,
    B,
    C,
    D,
    G,
}

impl RootType {
    pub fn supports(self, rank: usize) -> bool {
        match self {
            RootType::A => (1..=7).contains(&rank),
            RootType::B | RootType::C => (2..=5).contains(&rank),
            RootType::D => (3..=5).contains(&rank),
            RootType::G => rank == 2,
        }
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RootType::A => "A",
            RootType::B => "B",
            RootType::C => "C",
            RootType::D => "D",
            RootType::G => "G",
        };
        f.write_str(s)
    }
}

impl FromStr for RootType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(RootType::A),
            "B" => Ok(RootType::B),
            "C" => Ok(RootType::C),
            "D" => Ok(RootType::D),
            "G" => Ok(RootType::G),
            other => Err(Error::Parse(format!("unknown root system type {other:?}"))),
        }
    }
}

/// A positive root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    /// Coefficients in the basis of simple roots.
    pub coeffs: Vec<i64>,
    /// The root in fundamental-weight coordinates.
    pub weight: Weight,
    /// `<lambda, alpha^vee> = sum_i coroot[i] * lambda_i`.
    pub coroot: Vec<i64>,
    pub height: i64,
}

impl Root {
    /// The pairing `<lambda, alpha^vee>`.
    pub fn pair(&self, lambda: &Weight) -> i64 {
        self.coroot
            .iter()
            .zip(lambda.coords())
            .map(|(a, b)| a * b)
            .sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionMode {
    /// `w lambda`
    Homogeneous,
    /// `w . lambda = w(lambda + rho) - rho`
    Affine,
}

/// Result of moving a weight into the dominant chamber by the affine action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DominantData {
    Regular {
        /// The unique `w` with `w . lambda` dominant.
        w: WeylElement,
        length: usize,
        dominant: Weight,
    },
    Singular,
}

impl DominantData {
    pub fn is_regular(&self) -> bool {
        matches!(self, DominantData::Regular { .. })
    }

    pub fn length(&self) -> Option<usize> {
        match self {
            DominantData::Regular { length, .. } => Some(*length),
            DominantData::Singular => None,
        }
    }
}

/// Immutable tables for a simple root system of supported type and rank.
pub struct RootSystem {
    root_type: RootType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<Q>,
    positive_roots: Vec<Root>,
    root_lookup: HashMap<Vec<i64>, usize>,
    sums: Vec<Vec<Option<usize>>>,
    rho: Weight,
    form: Vec<Vec<Q>>,
    weyl: OnceLock<WeylGroup>,
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSystem({}{})", self.root_type, self.rank)
    }
}

fn cartan_matrix(t: RootType, n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    match t {
        RootType::D => {
            for i in 0..n - 2 {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
        }
        _ => {
            for i in 0..n - 1 {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        }
    }
    match t {
        RootType::B => a[n - 2][n - 1] = -2,
        RootType::C => a[n - 1][n - 2] = -2,
        RootType::G => a[1][0] = -3,
        _ => {}
    }
    a
}

// Half squared lengths of the simple roots, long roots normalized to 1.
fn symmetrizer(t: RootType, n: usize) -> Vec<Q> {
    let mut d = vec![Q::one(); n];
    match t {
        RootType::B => d[n - 1] = Q::new(1, 2),
        RootType::C => d[..n - 1].iter_mut().for_each(|x| *x = Q::new(1, 2)),
        RootType::G => d[0] = Q::new(1, 3),
        _ => {}
    }
    d
}

impl RootSystem {
    /// Builds the tables for `(type, rank)`.
    pub fn new(root_type: RootType, rank: usize) -> Result<Self> {
        if !root_type.supports(rank) {
            return Err(Error::UnsupportedRootSystem {
                label: root_type.to_string(),
                rank,
            });
        }
        let cartan = cartan_matrix(root_type, rank);
        let symmetrizer = symmetrizer(root_type, rank);
        let n = rank;

        // Gram matrix of the fundamental weights: A G = D.
        let a_q: Vec<Vec<Q>> = cartan
            .iter()
            .map(|r| r.iter().map(|&x| q(x)).collect())
            .collect();
        let a_inv = linalg::inverse(&a_q).expect("Cartan matrices are invertible");
        let form: Vec<Vec<Q>> = (0..n)
            .map(|i| (0..n).map(|j| a_inv[i][j] * symmetrizer[j]).collect())
            .collect();

        // Close the simple roots under simple reflections.
        let mut coeff_set: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        let mut seen: HashMap<Vec<i64>, ()> = coeff_set.iter().map(|c| (c.clone(), ())).collect();
        let mut frontier = coeff_set.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for beta in &frontier {
                for i in 0..n {
                    let pairing: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                    let mut image = beta.clone();
                    image[i] -= pairing;
                    if image.iter().all(|&c| c >= 0) && !seen.contains_key(&image) {
                        seen.insert(image.clone(), ());
                        next.push(image);
                    }
                }
            }
            coeff_set.extend(next.iter().cloned());
            frontier = next;
        }
        coeff_set.sort_by(|x, y| {
            let hx: i64 = x.iter().sum();
            let hy: i64 = y.iter().sum();
            hx.cmp(&hy).then_with(|| y.cmp(x))
        });

        let half_norm = |w: &Weight| -> Q {
            let mut s = Q::zero();
            for i in 0..n {
                for j in 0..n {
                    s += form[i][j] * q(w.0[i] * w.0[j]);
                }
            }
            s / q(2)
        };
        let positive_roots: Vec<Root> = coeff_set
            .into_iter()
            .map(|coeffs| {
                let weight = Weight(
                    (0..n)
                        .map(|j| (0..n).map(|i| coeffs[i] * cartan[i][j]).sum())
                        .collect(),
                );
                let d_alpha = half_norm(&weight);
                let coroot = (0..n)
                    .map(|i| {
                        let k = q(coeffs[i]) * symmetrizer[i] / d_alpha;
                        debug_assert!(k.is_integer());
                        k.to_integer()
                    })
                    .collect();
                let height = coeffs.iter().sum();
                Root {
                    coeffs,
                    weight,
                    coroot,
                    height,
                }
            })
            .collect();
        let root_lookup: HashMap<Vec<i64>, usize> = positive_roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coeffs.clone(), i))
            .collect();
        let sums = positive_roots
            .iter()
            .map(|a| {
                positive_roots
                    .iter()
                    .map(|b| {
                        let s: Vec<i64> =
                            a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
                        root_lookup.get(&s).copied()
                    })
                    .collect()
            })
            .collect();

        Ok(RootSystem {
            root_type,
            rank,
            cartan,
            symmetrizer,
            positive_roots,
            root_lookup,
            sums,
            rho: Weight(vec![1; n]),
            form,
            weyl: OnceLock::new(),
        })
    }

    /// A process-wide instance, built on first use. Lets repeated scans
    /// share the Weyl group and admissible triple tables.
    pub fn shared(root_type: RootType, rank: usize) -> Result<&'static RootSystem> {
        static SHARED: [OnceLock<RootSystem>; 40] = [const { OnceLock::new() }; 40];
        if !root_type.supports(rank) {
            return Err(Error::UnsupportedRootSystem {
                label: root_type.to_string(),
                rank,
            });
        }
        let slot = root_type as usize * 8 + rank;
        if let Some(rs) = SHARED[slot].get() {
            return Ok(rs);
        }
        let rs = RootSystem::new(root_type, rank)?;
        Ok(SHARED[slot].get_or_init(|| rs))
    }

    pub fn root_type(&self) -> RootType {
        self.root_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.root_type, self.rank)
    }

    pub fn is_type_a(&self) -> bool {
        self.root_type == RootType::A
    }

    /// `cartan()[i][j] = <alpha_i, alpha_j^vee>`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Simple root `alpha_i` (0-indexed) in fundamental-weight coordinates.
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight(self.cartan[i].clone())
    }

    pub fn simple_roots(&self) -> Vec<Weight> {
        (0..self.rank).map(|i| self.simple_root(i)).collect()
    }

    /// Index of the positive root with the given simple-root coefficients.
    pub fn root_index(&self, coeffs: &[i64]) -> Option<usize> {
        self.root_lookup.get(coeffs).copied()
    }

    /// Index of `alpha_a + alpha_b` when it is a root.
    pub fn root_sum_index(&self, a: usize, b: usize) -> Option<usize> {
        self.sums[a][b]
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut w = Weight::zero(self.rank);
        w.0[i] = 1;
        w
    }

    /// Gram matrix of the invariant form on fundamental weights.
    pub fn form_matrix(&self) -> &[Vec<Q>] {
        &self.form
    }

    pub fn symmetrizer(&self) -> &[Q] {
        &self.symmetrizer
    }

    /// The invariant form `(a, b)`, long roots of squared length 2.
    pub fn inner(&self, a: &Weight, b: &Weight) -> Q {
        let mut s = Q::zero();
        for (i, x) in a.coords().iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.coords().iter().enumerate() {
                s += self.form[i][j] * q(x * y);
            }
        }
        s
    }

    pub fn check_rank(&self, lambda: &Weight) -> Result<()> {
        if lambda.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: lambda.rank(),
            });
        }
        Ok(())
    }

    pub fn check_dominant(&self, lambda: &Weight) -> Result<()> {
        self.check_rank(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.clone()));
        }
        Ok(())
    }

    /// `s_i lambda` in place.
    pub fn reflect(&self, i: usize, lambda: &mut Weight) {
        let c = lambda.0[i];
        if c != 0 {
            for (x, a) in lambda.0.iter_mut().zip(&self.cartan[i]) {
                *x -= c * a;
            }
        }
    }

    /// The Weyl group, built on first use.
    pub fn weyl(&self) -> &WeylGroup {
        self.weyl.get_or_init(|| WeylGroup::build(self))
    }

    pub fn act(&self, w: WeylElement, lambda: &Weight, mode: ActionMode) -> Result<Weight> {
        self.check_rank(lambda)?;
        let g = self.weyl();
        Ok(match mode {
            ActionMode::Homogeneous => g.apply(w, lambda),
            ActionMode::Affine => &g.apply(w, &(lambda + &self.rho)) - &self.rho,
        })
    }

    /// Dominant representative of the homogeneous orbit of `lambda`.
    pub fn dominant_representative(&self, lambda: &Weight) -> Weight {
        let mut v = lambda.clone();
        while let Some(i) = v.0.iter().position(|&c| c < 0) {
            self.reflect(i, &mut v);
        }
        v
    }

    /// Dominant representative of `lambda + rho` under the homogeneous
    /// action, shifted back by `rho`, together with the sign `(-1)^l`.
    /// `None` when `lambda` is singular.
    pub fn affine_dominant_signed(&self, lambda: &Weight) -> Option<(Weight, i64)> {
        let mut v = lambda + &self.rho;
        let mut sign = 1;
        loop {
            if v.0.contains(&0) {
                return None;
            }
            match v.0.iter().position(|&c| c < 0) {
                Some(i) => {
                    self.reflect(i, &mut v);
                    sign = -sign;
                }
                None => break,
            }
        }
        v -= &self.rho;
        Some((v, sign))
    }

    /// The element `w_lambda`, the length `l(lambda)` and `w_lambda . lambda`,
    /// or `Singular`.
    pub fn dominant_data(&self, lambda: &Weight) -> Result<DominantData> {
        self.check_rank(lambda)?;
        let g = self.weyl();
        let mut v = lambda + &self.rho;
        let mut w = g.identity();
        let mut length = 0;
        loop {
            if v.0.contains(&0) {
                return Ok(DominantData::Singular);
            }
            match v.0.iter().position(|&c| c < 0) {
                Some(i) => {
                    self.reflect(i, &mut v);
                    w = g.left_mul(i, w);
                    length += 1;
                }
                None => break,
            }
        }
        debug_assert_eq!(g.length(w), length);
        Ok(DominantData::Regular {
            w,
            length,
            dominant: &v - &self.rho,
        })
    }

    /// Borel-Weil-Bott: `Some((q, nu))` when `H^q(X, L_lambda) = V(nu)^*` is
    /// the only nonzero cohomology, `None` when all cohomology vanishes.
    pub fn bwb_cohomology(&self, lambda: &Weight) -> Result<Option<(usize, Weight)>> {
        Ok(match self.dominant_data(lambda)? {
            DominantData::Regular {
                length, dominant, ..
            } => Some((length, dominant)),
            DominantData::Singular => None,
        })
    }

    /// Number of positive roots `alpha` with `(lambda + rho, alpha) < 0`.
    pub fn negative_root_count(&self, lambda: &Weight) -> usize {
        let v = lambda + &self.rho;
        self.positive_roots
            .iter()
            .filter(|r| r.pair(&v) < 0)
            .count()
    }

    /// Weyl dimension formula.
    pub fn weyl_dimension(&self, lambda: &Weight) -> Result<u128> {
        self.check_dominant(lambda)?;
        let v = lambda + &self.rho;
        let mut num: i128 = 1;
        let mut den: i128 = 1;
        for r in &self.positive_roots {
            num *= i128::from(r.pair(&v));
            den *= i128::from(r.pair(&self.rho));
            let g = num.gcd(&den);
            num /= g;
            den /= g;
        }
        let d = Ratio::new(num, den);
        debug_assert!(d.is_integer());
        Ok(d.to_integer() as u128)
    }

    /// A linear functional positive on positive roots, used to order weights.
    pub fn level(&self, lambda: &Weight) -> i64 {
        self.positive_roots.iter().map(|r| r.pair(lambda)).sum()
    }
}
