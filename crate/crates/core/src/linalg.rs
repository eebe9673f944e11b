//! Small exact linear algebra over the rationals.

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used throughout the crate.
pub type Q = Ratio<i64>;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

/// Inverse of a square rational matrix, or `None` when singular.
pub fn inverse(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col];
        for v in a[col].iter_mut() {
            *v /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in 0..2 * n {
                    let d = a[col][c] * f;
                    a[r][c] -= d;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Rank of a rational matrix given by rows.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let mut a = rows.to_vec();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let p = a[rank][col];
        for r in 0..a.len() {
            if r != rank && !a[r][col].is_zero() {
                let f = a[r][col] / p;
                for c in col..cols {
                    let d = a[rank][c] * f;
                    a[r][c] -= d;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Basis of `{x : row . x = 0 for every row}`.
pub fn nullspace(rows: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let mut a = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let lead = a[r][col];
        for v in a[r].iter_mut() {
            *v /= lead;
        }
        for i in 0..a.len() {
            if i != r && !a[i][col].is_zero() {
                let f = a[i][col];
                for c in 0..cols {
                    let d = a[r][c] * f;
                    a[i][c] -= d;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Q::zero(); cols];
            v[free] = Q::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[row][free];
            }
            v
        })
        .collect()
}

/// A linear inequality `coeffs . x >= rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Inequality {
    pub coeffs: Vec<Q>,
    pub rhs: Q,
}

impl Inequality {
    pub fn new(coeffs: Vec<Q>, rhs: Q) -> Self {
        Self { coeffs, rhs }.normalized()
    }

    pub fn holds_at(&self, x: &[Q]) -> bool {
        self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum::<Q>() >= self.rhs
    }

    // Scale so the first nonzero coefficient has absolute value one.
    fn normalized(mut self) -> Self {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            for c in self.coeffs.iter_mut() {
                *c /= lead;
            }
            self.rhs /= lead;
        }
        self
    }
}

/// Decides feasibility of a system of non-strict rational inequalities by
/// Fourier-Motzkin elimination.
pub fn feasible(system: &[Inequality]) -> bool {
    let Some(vars) = system.first().map(|i| i.coeffs.len()) else {
        return true;
    };
    let mut rows: Vec<Inequality> = system.to_vec();
    for var in 0..vars {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for row in rows {
            if row.coeffs[var].is_positive() {
                pos.push(row);
            } else if row.coeffs[var].is_negative() {
                neg.push(row);
            } else {
                rest.push(row);
            }
        }
        for p in &pos {
            for n in &neg {
                let (a, b) = (p.coeffs[var], -n.coeffs[var]);
                let coeffs = p
                    .coeffs
                    .iter()
                    .zip(&n.coeffs)
                    .map(|(x, y)| *x * b + *y * a)
                    .collect();
                rest.push(Inequality::new(coeffs, p.rhs * b + n.rhs * a));
            }
        }
        rest.sort_by(|a, b| a.coeffs.cmp(&b.coeffs).then(b.rhs.cmp(&a.rhs)));
        // Among rows with equal coefficients only the largest rhs matters.
        rest.dedup_by(|later, earlier| later.coeffs == earlier.coeffs);
        if rest
            .iter()
            .any(|r| r.coeffs.iter().all(Zero::is_zero) && r.rhs.is_positive())
        {
            return false;
        }
        rows = rest;
    }
    rows.iter().all(|r| !r.rhs.is_positive())
}
