//! Weight multiplicities, tensor product decompositions and
//! Littlewood-Richardson coefficients.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::linalg::{q, Q};
use crate::rootsys::{GlWeight, RootSystem, Weight};

/// Multiplicities of irreducible components, keyed by dominant highest
/// weight.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub entries: BTreeMap<Weight, u64>,
}

impl Decomposition {
    pub fn multiplicity(&self, nu: &Weight) -> u64 {
        self.entries.get(nu).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.entries.keys()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `sum mult * dim`.
    pub fn total_dimension(&self, rs: &RootSystem) -> u128 {
        self.entries
            .iter()
            .map(|(w, m)| u128::from(*m) * rs.weyl_dimension(w).expect("keys are dominant"))
            .sum()
    }

    /// Entries sorted by `(level, coordinates)`, a key compatible with the
    /// dominance order.
    pub fn sorted_entries(&self, rs: &RootSystem) -> Vec<(Weight, u64)> {
        let mut v: Vec<(Weight, u64)> = self.entries.iter().map(|(w, m)| (w.clone(), *m)).collect();
        v.sort_by(|a, b| {
            rs.level(&a.0)
                .cmp(&rs.level(&b.0))
                .then_with(|| a.0.cmp(&b.0))
        });
        v
    }
}

/// Dominant weights of `V(lambda)`.
pub fn dominant_weights(rs: &RootSystem, lambda: &Weight) -> Result<Vec<Weight>> {
    rs.check_dominant(lambda)?;
    let mut seen: HashSet<Weight> = HashSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    let mut out = Vec::new();
    while let Some(mu) = queue.pop_front() {
        for root in rs.positive_roots() {
            let next = &mu - &root.weight;
            if next.is_dominant() && seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
        out.push(mu);
    }
    Ok(out)
}

/// Multiplicities of the dominant weights of `V(lambda)` by Freudenthal's
/// recursion.
pub fn weight_multiplicities(rs: &RootSystem, lambda: &Weight) -> Result<BTreeMap<Weight, u64>> {
    let mut dominant = dominant_weights(rs, lambda)?;
    // Higher weights first: lambda - mu has larger level for lower mu.
    dominant.sort_by_key(|mu| std::cmp::Reverse(rs.level(mu)));
    let rho = rs.rho();
    let lr = lambda + rho;
    let norm_top = rs.inner(&lr, &lr);
    let mut mult: HashMap<Weight, u64> = HashMap::new();
    for mu in dominant {
        if &mu == lambda {
            mult.insert(mu, 1);
            continue;
        }
        let mr = &mu + rho;
        let denom = norm_top - rs.inner(&mr, &mr);
        let mut sum = Q::zero();
        for root in rs.positive_roots() {
            let mut shifted = &mu + &root.weight;
            loop {
                let rep = rs.dominant_representative(&shifted);
                let Some(&m) = mult.get(&rep) else { break };
                sum += q(m as i64) * rs.inner(&shifted, &root.weight);
                shifted += &root.weight;
            }
        }
        let value = sum * q(2) / denom;
        debug_assert!(value.is_integer() && value >= Q::zero());
        let m = value.to_integer();
        if m > 0 {
            mult.insert(mu, m as u64);
        }
    }
    Ok(mult.into_iter().collect())
}

/// The homogeneous orbit of `mu`.
pub fn orbit(rs: &RootSystem, mu: &Weight) -> Vec<Weight> {
    let mut seen: HashSet<Weight> = HashSet::from([mu.clone()]);
    let mut queue = VecDeque::from([mu.clone()]);
    let mut out = Vec::new();
    while let Some(v) = queue.pop_front() {
        for i in 0..rs.rank() {
            if v.0[i] != 0 {
                let mut r = v.clone();
                rs.reflect(i, &mut r);
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        out.push(v);
    }
    out
}

/// All weights of `V(mu)` with multiplicities.
pub fn character(rs: &RootSystem, mu: &Weight) -> Result<Vec<(Weight, u64)>> {
    let dominant = weight_multiplicities(rs, mu)?;
    Ok(dominant
        .iter()
        .flat_map(|(w, &m)| orbit(rs, w).into_iter().map(move |v| (v, m)))
        .collect())
}

/// Decomposes `V(lambda) (x) V(mu)` with the Brauer-Klimyk formula, summing
/// over the weights of the smaller factor.
pub fn tensor_decompose(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<Decomposition> {
    rs.check_dominant(lambda)?;
    rs.check_dominant(mu)?;
    let (big, small) = if rs.weyl_dimension(mu)? <= rs.weyl_dimension(lambda)? {
        (lambda, mu)
    } else {
        (mu, lambda)
    };
    let mut acc: HashMap<Weight, i64> = HashMap::new();
    for (nu, m) in character(rs, small)? {
        if let Some((rep, sign)) = rs.affine_dominant_signed(&(big + &nu)) {
            *acc.entry(rep).or_default() += sign * m as i64;
        }
    }
    let mut entries = BTreeMap::new();
    for (w, c) in acc {
        assert!(c >= 0, "negative Klimyk coefficient at {w}");
        if c > 0 {
            entries.insert(w, c as u64);
        }
    }
    Ok(Decomposition { entries })
}

/// `c_{lambda, mu}^{nu}`.
pub fn multiplicity(rs: &RootSystem, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<u64> {
    rs.check_dominant(nu)?;
    Ok(tensor_decompose(rs, lambda, mu)?.multiplicity(nu))
}

/// `c_{k lambda, k mu}^{k nu}` for `k = 1..=k_max`.
pub fn stable_multiplicities(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
    k_max: usize,
) -> Result<Vec<u64>> {
    (1..=k_max as i64)
        .map(|k| multiplicity(rs, &lambda.scaled(k), &mu.scaled(k), &nu.scaled(k)))
        .collect()
}

fn trim(p: &[i64]) -> Vec<usize> {
    p.iter()
        .take_while(|&&x| x > 0)
        .map(|&x| x as usize)
        .collect()
}

/// Littlewood-Richardson coefficient `c_{a, b}^{c}` for partitions, by
/// counting LR skew tableaux of shape `c / a` and content `b`.
pub fn lr_coefficient(a: &[i64], b: &[i64], c: &[i64]) -> u64 {
    let is_partition = |p: &[i64]| p.iter().all(|&x| x >= 0) && p.windows(2).all(|w| w[0] >= w[1]);
    if !is_partition(a) || !is_partition(b) || !is_partition(c) {
        return 0;
    }
    let (a, b, c) = (trim(a), trim(b), trim(c));
    if a.iter().sum::<usize>() + b.iter().sum::<usize>() != c.iter().sum::<usize>() {
        return 0;
    }
    if a.len() > c.len() || a.iter().zip(&c).any(|(x, y)| x > y) {
        return 0;
    }
    let rows = c.len();
    let inner: Vec<usize> = (0..rows).map(|r| a.get(r).copied().unwrap_or(0)).collect();
    let mut filler = LrFiller {
        inner,
        outer: c,
        content: b.clone(),
        used: vec![0; b.len()],
        grid: Vec::new(),
    };
    filler.grid = (0..rows)
        .map(|r| vec![0usize; filler.outer[r] - filler.inner[r]])
        .collect();
    filler.count(0, 0)
}

struct LrFiller {
    inner: Vec<usize>,
    outer: Vec<usize>,
    content: Vec<usize>,
    used: Vec<usize>,
    // grid[r][k] is the entry in column inner[r] + k, values 1-based.
    grid: Vec<Vec<usize>>,
}

impl LrFiller {
    // Cells are filled row by row, right to left: this is the reverse reading
    // order, so the lattice condition can be checked after every placement.
    fn count(&mut self, row: usize, pos: usize) -> u64 {
        if row == self.grid.len() {
            return u64::from(self.used == self.content);
        }
        let width = self.grid[row].len();
        if pos == width {
            return self.count(row + 1, 0);
        }
        let k = width - 1 - pos;
        let col = self.inner[row] + k;
        let mut total = 0;
        for v in 1..=self.content.len() {
            if self.used[v - 1] == self.content[v - 1] {
                continue;
            }
            if v > 1 && self.used[v - 1] + 1 > self.used[v - 2] {
                continue;
            }
            // row weakly increasing left to right
            if k + 1 < width && self.grid[row][k + 1] < v {
                continue;
            }
            // column strictly increasing downward
            if row > 0 && col >= self.inner[row - 1] && col < self.outer[row - 1] {
                let above = self.grid[row - 1][col - self.inner[row - 1]];
                if above >= v {
                    continue;
                }
            }
            self.grid[row][k] = v;
            self.used[v - 1] += 1;
            total += self.count(row, pos + 1);
            self.used[v - 1] -= 1;
            self.grid[row][k] = 0;
        }
        total
    }
}

/// Littlewood-Richardson coefficient for weakly decreasing `GL(n)` tuples of
/// equal length, which may have negative entries.
pub fn gl_lr_coefficient(lam: &GlWeight, mu: &GlWeight, nu: &GlWeight) -> u64 {
    let n = lam.len();
    if mu.len() != n || nu.len() != n || n == 0 {
        return 0;
    }
    if !lam.is_dominant() || !mu.is_dominant() || !nu.is_dominant() {
        return 0;
    }
    let (sl, sm) = (lam.0[n - 1], mu.0[n - 1]);
    let a: Vec<i64> = lam.0.iter().map(|x| x - sl).collect();
    let b: Vec<i64> = mu.0.iter().map(|x| x - sm).collect();
    let c: Vec<i64> = nu.0.iter().map(|x| x - sl - sm).collect();
    if c.iter().any(|&x| x < 0) {
        return 0;
    }
    lr_coefficient(&a, &b, &c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::RootType;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rs(t: RootType, n: usize) -> RootSystem {
        RootSystem::new(t, n).unwrap()
    }

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.to_vec())
    }

    #[test]
    fn multiplicity_examples() {
        let a1 = rs(RootType::A, 1);
        assert_eq!(
            weight_multiplicities(&a1, &w(&[0])).unwrap(),
            BTreeMap::from([(w(&[0]), 1)])
        );
        assert_eq!(
            weight_multiplicities(&a1, &w(&[2])).unwrap(),
            BTreeMap::from([(w(&[2]), 1), (w(&[0]), 1)])
        );
        let a2 = rs(RootType::A, 2);
        let adj = weight_multiplicities(&a2, &w(&[1, 1])).unwrap();
        assert_eq!(adj[&w(&[0, 0])], 2);
        assert!(weight_multiplicities(&a2, &w(&[-1, 1])).is_err());
        // B2 spin-vector: V(1,1) has dimension 16 with zero weight of multiplicity 2
        let b2 = rs(RootType::B, 2);
        let m = weight_multiplicities(&b2, &w(&[1, 1])).unwrap();
        assert_eq!(m[&w(&[0, 1])], 2);
    }

    #[test]
    fn characters_have_weyl_dimension() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (t, n) in [
            (RootType::A, 3),
            (RootType::B, 3),
            (RootType::C, 3),
            (RootType::D, 4),
            (RootType::G, 2),
            (RootType::B, 2),
        ] {
            let r = rs(t, n);
            for _ in 0..12 {
                let lam = Weight((0..n).map(|_| rng.gen_range(0..=3)).collect());
                let total: u64 = character(&r, &lam).unwrap().iter().map(|(_, m)| m).sum();
                assert_eq!(
                    u128::from(total),
                    r.weyl_dimension(&lam).unwrap(),
                    "{t}{n} {lam}"
                );
            }
        }
    }

    #[test]
    fn b2_rho_squared() {
        let b2 = rs(RootType::B, 2);
        let d = tensor_decompose(&b2, &w(&[1, 1]), &w(&[1, 1])).unwrap();
        let expected = [
            ((0, 0), 1),
            ((1, 0), 1),
            ((2, 0), 1),
            ((3, 0), 1),
            ((0, 2), 2),
            ((1, 2), 2),
            ((2, 2), 1),
            ((0, 4), 1),
        ];
        assert_eq!(d.len(), expected.len());
        for ((a, b), m) in expected {
            assert_eq!(d.multiplicity(&w(&[a, b])), m, "({a},{b})");
        }
        assert_eq!(d.total_dimension(&b2), 256);
    }

    #[test]
    fn a2_figure_support() {
        let a2 = rs(RootType::A, 2);
        let d = tensor_decompose(&a2, &w(&[3, 5]), &w(&[1, 2])).unwrap();
        let pts = [
            (0, 6),
            (1, 4),
            (1, 7),
            (2, 5),
            (2, 8),
            (3, 3),
            (3, 6),
            (4, 4),
            (4, 7),
            (5, 2),
            (5, 5),
            (6, 3),
        ];
        let support: Vec<Weight> = d.support().cloned().collect();
        let mut expected: Vec<Weight> = pts.iter().map(|&(a, b)| w(&[a, b])).collect();
        expected.sort();
        assert_eq!(support, expected);
        assert_eq!(
            tensor_decompose(&a2, &w(&[3, 5]), &w(&[0, 0]))
                .unwrap()
                .entries,
            BTreeMap::from([(w(&[3, 5]), 1)])
        );
    }

    #[test]
    fn decompositions_are_commutative_and_dimension_exact() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for (t, n) in [
            (RootType::A, 2),
            (RootType::A, 3),
            (RootType::B, 3),
            (RootType::C, 2),
            (RootType::G, 2),
            (RootType::D, 4),
        ] {
            let r = rs(t, n);
            for _ in 0..6 {
                let lam = Weight((0..n).map(|_| rng.gen_range(0..=3)).collect());
                let mu = Weight((0..n).map(|_| rng.gen_range(0..=2)).collect());
                let d = tensor_decompose(&r, &lam, &mu).unwrap();
                assert_eq!(d, tensor_decompose(&r, &mu, &lam).unwrap());
                assert_eq!(
                    d.total_dimension(&r),
                    r.weyl_dimension(&lam).unwrap() * r.weyl_dimension(&mu).unwrap()
                );
                assert_eq!(d.multiplicity(&(&lam + &mu)), 1);
                // PRV component has multiplicity one; every generalized PRV occurs.
                let g = r.weyl();
                let prv = r.dominant_representative(&(&lam + &g.apply(g.longest(), &mu)));
                assert_eq!(d.multiplicity(&prv), 1);
                for x in g.elements() {
                    let gp = r.dominant_representative(&(&lam + &g.apply(x, &mu)));
                    assert!(d.multiplicity(&gp) >= 1);
                }
            }
        }
    }

    #[test]
    fn type_a_duality() {
        let a3 = rs(RootType::A, 3);
        let rev = |x: &Weight| Weight(x.0.iter().rev().copied().collect());
        let lam = w(&[2, 0, 1]);
        let mu = w(&[1, 1, 0]);
        let d = tensor_decompose(&a3, &lam, &mu).unwrap();
        let dd = tensor_decompose(&a3, &rev(&lam), &rev(&mu)).unwrap();
        for (nu, m) in &d.entries {
            assert_eq!(dd.multiplicity(&rev(nu)), *m);
        }
        assert_eq!(d.len(), dd.len());
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&[1], &[1], &[2]), 1);
        assert_eq!(lr_coefficient(&[1], &[1], &[1, 1]), 1);
        assert_eq!(lr_coefficient(&[2, 1], &[2, 1], &[3, 2, 1]), 2);
        assert_eq!(lr_coefficient(&[2, 0], &[1, 0], &[3, 0]), 1);
        assert_eq!(lr_coefficient(&[2, 1], &[1], &[2, 1]), 0);
        assert_eq!(lr_coefficient(&[2], &[2], &[2, 1, 1]), 0);
        assert_eq!(lr_coefficient(&[], &[], &[]), 1);
        assert_eq!(
            gl_lr_coefficient(
                &GlWeight::new([2, 0]),
                &GlWeight::new([1, 0]),
                &GlWeight::new([3, 0])
            ),
            1
        );
        assert_eq!(
            gl_lr_coefficient(
                &GlWeight::new([1, -1]),
                &GlWeight::new([0, -2]),
                &GlWeight::new([1, -3])
            ),
            1
        );
    }

    #[test]
    fn lr_matches_klimyk_small() {
        let a2 = rs(RootType::A, 2);
        for l in [[3i64, 1, 0], [2, 2, 0], [4, 2, 1]] {
            for m in [[1i64, 0, 0], [2, 1, 0], [3, 3, 0]] {
                let (lg, mg) = (GlWeight::new(l), GlWeight::new(m));
                let d = tensor_decompose(&a2, &lg.to_weight(), &mg.to_weight()).unwrap();
                let total = lg.total() + mg.total();
                for (nu, c) in &d.entries {
                    let ng = GlWeight::from_weight(nu, total).unwrap();
                    assert_eq!(gl_lr_coefficient(&lg, &mg, &ng), *c);
                }
            }
        }
    }

    #[test]
    fn stable_multiplicity_examples() {
        let b2 = rs(RootType::B, 2);
        let rho = w(&[1, 1]);
        assert_eq!(
            stable_multiplicities(&b2, &rho, &rho, &w(&[1, 0]), 2).unwrap(),
            vec![1, 2]
        );
        assert_eq!(
            stable_multiplicities(&b2, &rho, &rho, &w(&[0, 4]), 3).unwrap(),
            vec![1, 1, 1]
        );
        assert_eq!(
            stable_multiplicities(&b2, &rho, &w(&[2, 0]), &w(&[3, 1]), 4).unwrap(),
            vec![1; 4]
        );
    }
}
