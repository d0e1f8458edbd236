use std::fmt;

use serde::{Serialize, Serializer};

use super::{EpsilonWeight, Group, HalfInt, LieType};
use crate::error::{Error, Result};

/// A positive root in the orthonormal basis. Indices are zero-based;
/// `Display` prints them one-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Root {
    /// e_i - e_j, i < j
    Diff(usize, usize),
    /// e_i + e_j, i < j
    Sum(usize, usize),
    /// e_i (type B)
    Short(usize),
    /// 2e_i (type C)
    Long(usize),
}

impl Root {
    /// Largest index the root touches.
    pub fn max_index(&self) -> usize {
        match *self {
            Root::Diff(_, j) | Root::Sum(_, j) => j,
            Root::Short(i) | Root::Long(i) => i,
        }
    }

    /// Dense coordinates in R^n.
    pub fn coords(&self, n: usize) -> Vec<HalfInt> {
        let mut v = vec![HalfInt::ZERO; n];
        match *self {
            Root::Diff(i, j) => {
                v[i] = HalfInt::ONE;
                v[j] = -HalfInt::ONE;
            }
            Root::Sum(i, j) => {
                v[i] = HalfInt::ONE;
                v[j] = HalfInt::ONE;
            }
            Root::Short(i) => v[i] = HalfInt::ONE,
            Root::Long(i) => v[i] = HalfInt::from_int(2),
        }
        v
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Root::Diff(i, j) => write!(f, "e{}-e{}", i + 1, j + 1),
            Root::Sum(i, j) => write!(f, "e{}+e{}", i + 1, j + 1),
            Root::Short(i) => write!(f, "e{}", i + 1),
            Root::Long(i) => write!(f, "2e{}", i + 1),
        }
    }
}

impl Serialize for Root {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl Group {
    /// Positive roots in canonical order: all e_i-e_j (lexicographic), then
    /// all e_i+e_j, then e_i (B) or 2e_i (C).
    pub fn positive_roots(&self) -> Vec<Root> {
        let n = self.rank();
        let pairs = || (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)));
        let mut roots: Vec<Root> = pairs().map(|(i, j)| Root::Diff(i, j)).collect();
        roots.extend(pairs().map(|(i, j)| Root::Sum(i, j)));
        match self.lie_type() {
            LieType::B => roots.extend((0..n).map(Root::Short)),
            LieType::C => roots.extend((0..n).map(Root::Long)),
            LieType::D => {}
        }
        roots
    }
}

/// Euclidean pairing of a weight with a root in the orthonormal basis.
///
/// This is a positive multiple of the Killing form on each simple type, so
/// signs and zeros agree with it.
pub fn pairing(mu: &EpsilonWeight, alpha: &Root) -> Result<HalfInt> {
    let c = mu.coords();
    if alpha.max_index() >= c.len() {
        return Err(Error::DimensionMismatch {
            expected: alpha.max_index() + 1,
            actual: c.len(),
        });
    }
    Ok(match *alpha {
        Root::Diff(i, j) => c[i] - c[j],
        Root::Sum(i, j) => c[i] + c[j],
        Root::Short(i) => c[i],
        Root::Long(i) => c[i] * 2,
    })
}
