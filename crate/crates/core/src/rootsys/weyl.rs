//! The Weyl group as an explicit table.
//!
//! Elements are discovered breadth-first from the identity by left
//! multiplication with simple reflections and keyed by their image of `rho`,
//! which has trivial stabilizer. Each element is identified by a dense index;
//! equality of indices coincides with equality of inversion sets.

use std::collections::HashMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::{RootSystem, Weight};
use crate::weylcomb::{InvSet, Triple};

/// A Weyl group element, as an index into its [`WeylGroup`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeylElement(pub(crate) u32);

impl WeylElement {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

pub struct WeylGroup {
    rank: usize,
    matrices: Vec<i64>,
    rho_images: Vec<Weight>,
    lengths: Vec<usize>,
    words: Vec<Vec<u8>>,
    left: Vec<Vec<u32>>,
    inverse: Vec<u32>,
    inversions: Vec<InvSet>,
    by_invset: HashMap<InvSet, u32>,
    longest: u32,
    pub(crate) admissible: OnceLock<Vec<Triple>>,
}

impl WeylGroup {
    pub(crate) fn build(rs: &RootSystem) -> WeylGroup {
        let n = rs.rank();
        let mut identity = vec![0i64; n * n];
        for i in 0..n {
            identity[i * n + i] = 1;
        }
        let mut matrices = identity;
        let mut rho_images = vec![rs.rho().clone()];
        let mut lengths = vec![0usize];
        let mut by_rho: HashMap<Weight, u32> = HashMap::from([(rs.rho().clone(), 0)]);
        let mut left: Vec<Vec<u32>> = vec![Vec::new(); n];

        let mut cursor = 0usize;
        while cursor < rho_images.len() {
            for (i, table) in left.iter_mut().enumerate() {
                let mut image = rho_images[cursor].clone();
                rs.reflect(i, &mut image);
                let id = match by_rho.get(&image) {
                    Some(&id) => id,
                    None => {
                        let id = rho_images.len() as u32;
                        // Row j of s_i M is row j of M minus A[i][j] times row i.
                        let base = cursor * n * n;
                        let mut m = matrices[base..base + n * n].to_vec();
                        for j in 0..n {
                            let a = rs.cartan()[i][j];
                            if a != 0 {
                                for k in 0..n {
                                    m[j * n + k] -= a * matrices[base + i * n + k];
                                }
                            }
                        }
                        matrices.extend(m);
                        by_rho.insert(image.clone(), id);
                        rho_images.push(image);
                        lengths.push(lengths[cursor] + 1);
                        id
                    }
                };
                table.push(id);
            }
            cursor += 1;
        }

        let size = rho_images.len();
        let mut words: Vec<Vec<u8>> = vec![Vec::new(); size];
        for w in 1..size {
            let i = (0..n)
                .find(|&i| lengths[left[i][w] as usize] < lengths[w])
                .expect("non-identity elements have a left descent");
            let mut word = vec![i as u8];
            word.extend_from_slice(&words[left[i][w] as usize]);
            words[w] = word;
        }
        let inverse: Vec<u32> = words
            .iter()
            .map(|word| {
                word.iter()
                    .fold(0u32, |cur, &i| left[i as usize][cur as usize])
            })
            .collect();
        let inversions: Vec<InvSet> = (0..size)
            .map(|w| {
                let v = &rho_images[inverse[w] as usize];
                InvSet::from_indices(
                    rs.positive_roots()
                        .iter()
                        .enumerate()
                        .filter(|(_, r)| r.pair(v) < 0)
                        .map(|(k, _)| k),
                )
            })
            .collect();
        let by_invset = inversions
            .iter()
            .enumerate()
            .map(|(w, s)| (*s, w as u32))
            .collect();
        let longest = (0..size).max_by_key(|&w| lengths[w]).unwrap_or(0) as u32;

        WeylGroup {
            rank: n,
            matrices,
            rho_images,
            lengths,
            words,
            left,
            inverse,
            inversions,
            by_invset,
            longest,
            admissible: OnceLock::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.lengths.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement(0)
    }

    pub fn longest(&self) -> WeylElement {
        WeylElement(self.longest)
    }

    /// All elements, in nondecreasing length.
    pub fn elements(&self) -> impl ExactSizeIterator<Item = WeylElement> + '_ {
        (0..self.order() as u32).map(WeylElement)
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        WeylElement(self.left[i][0])
    }

    pub fn length(&self, w: WeylElement) -> usize {
        self.lengths[w.index()]
    }

    /// Lexicographically smallest reduced word, 0-indexed simple reflections.
    pub fn word(&self, w: WeylElement) -> &[u8] {
        &self.words[w.index()]
    }

    /// The reduced word with 1-indexed letters, as used in reports.
    pub fn word_one_based(&self, w: WeylElement) -> Vec<u8> {
        self.word(w).iter().map(|i| i + 1).collect()
    }

    /// Row-major action matrix on fundamental-weight coordinates.
    pub fn matrix(&self, w: WeylElement) -> &[i64] {
        let n = self.rank;
        &self.matrices[w.index() * n * n..(w.index() + 1) * n * n]
    }

    pub fn inversion_set(&self, w: WeylElement) -> InvSet {
        self.inversions[w.index()]
    }

    pub fn from_inversion_set(&self, s: InvSet) -> Option<WeylElement> {
        self.by_invset.get(&s).map(|&w| WeylElement(w))
    }

    pub fn rho_image(&self, w: WeylElement) -> &Weight {
        &self.rho_images[w.index()]
    }

    pub fn inverse(&self, w: WeylElement) -> WeylElement {
        WeylElement(self.inverse[w.index()])
    }

    /// `s_i w`.
    pub fn left_mul(&self, i: usize, w: WeylElement) -> WeylElement {
        WeylElement(self.left[i][w.index()])
    }

    /// `w s_i`.
    pub fn right_mul(&self, w: WeylElement, i: usize) -> WeylElement {
        self.inverse(self.left_mul(i, self.inverse(w)))
    }

    /// The product `u v`.
    pub fn mul(&self, u: WeylElement, v: WeylElement) -> WeylElement {
        self.word(u)
            .iter()
            .rev()
            .fold(v, |cur, &i| self.left_mul(i as usize, cur))
    }

    /// The element with the given word `s_{i1} ... s_{ik}` (0-indexed).
    pub fn from_word(&self, word: &[u8]) -> WeylElement {
        word.iter()
            .rev()
            .fold(self.identity(), |cur, &i| self.left_mul(i as usize, cur))
    }

    /// Homogeneous action `w lambda`.
    pub fn apply(&self, w: WeylElement, lambda: &Weight) -> Weight {
        let n = self.rank;
        let m = self.matrix(w);
        Weight(
            (0..n)
                .map(|r| (0..n).map(|c| m[r * n + c] * lambda.0[c]).sum())
                .collect(),
        )
    }
}
