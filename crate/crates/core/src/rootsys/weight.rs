use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weight in fundamental-weight coordinates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn new(coords: impl Into<Vec<i64>>) -> Self {
        Weight(coords.into())
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_strictly_dominant(&self) -> bool {
        self.0.iter().all(|&c| c > 0)
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Parses `1,2`, `(1,2)` or `1 2`.
impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_ints(s).map(Weight)
    }
}

pub(crate) fn parse_ints(s: &str) -> Result<Vec<i64>> {
    let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
    trimmed
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
        })
        .collect()
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&Weight> for Weight {
    fn sub_assign(&mut self, rhs: &Weight) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl Mul<i64> for &Weight {
    type Output = Weight;
    fn mul(self, k: i64) -> Weight {
        self.scaled(k)
    }
}

/// A `GL(n+1)` weight as a weakly ordered integer tuple `(t_0, ..., t_n)`.
///
/// The tuple corresponds to the `A_n` weight with coordinates
/// `t_{i-1} - t_i` together with the total `sum t_i`, which records the
/// central character.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GlWeight(pub Vec<i64>);

impl GlWeight {
    pub fn new(entries: impl Into<Vec<i64>>) -> Self {
        GlWeight(entries.into())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_strictly_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// Fundamental-weight coordinates of the `A_n` part.
    pub fn to_weight(&self) -> Weight {
        Weight(self.0.windows(2).map(|w| w[0] - w[1]).collect())
    }

    /// Inverse of [`GlWeight::to_weight`] given the total.
    pub fn from_weight(weight: &Weight, total: i64) -> Result<GlWeight> {
        let n = weight.rank();
        let weighted: i64 = weight
            .coords()
            .iter()
            .enumerate()
            .map(|(i, c)| (i as i64 + 1) * c)
            .sum();
        let len = n as i64 + 1;
        let rest = total - weighted;
        if rest % len != 0 {
            return Err(Error::InvalidTuple(format!(
                "total {total} is incompatible with {weight} in GL({len})"
            )));
        }
        let mut entries = vec![rest / len; n + 1];
        for i in (0..n).rev() {
            entries[i] = entries[i + 1] + weight.coords()[i];
        }
        Ok(GlWeight(entries))
    }
}

impl fmt::Display for GlWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Weight(self.0.clone()).fmt(f)
    }
}

impl FromStr for GlWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_ints(s).map(GlWeight)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_forms() {
        assert_eq!("1,2".parse::<Weight>().unwrap(), Weight::new([1, 2]));
        assert_eq!("(3, -5)".parse::<Weight>().unwrap(), Weight::new([3, -5]));
        assert!("1,x".parse::<Weight>().is_err());
    }

    #[test]
    fn gl_conversion() {
        let t = GlWeight::new([3, 3, 2, 2, 2, 2]);
        assert_eq!(t.to_weight(), Weight::new([0, 1, 0, 0, 0]));
        assert_eq!(GlWeight::from_weight(&t.to_weight(), t.total()).unwrap(), t);
        assert!(GlWeight::from_weight(&Weight::new([1]), 0).is_err());
    }

    proptest! {
        #[test]
        fn gl_round_trip(entries in proptest::collection::vec(-20i64..20, 1..7)) {
            let t = GlWeight(entries);
            prop_assert_eq!(GlWeight::from_weight(&t.to_weight(), t.total()).unwrap(), t);
        }
    }
}
