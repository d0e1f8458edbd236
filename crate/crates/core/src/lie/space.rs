use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{HalfInt, WeightFW};
use crate::error::{Error, Result};

/// Cartan type of the ambient simple group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LieType {
    B,
    C,
    D,
}

impl LieType {
    pub const ALL: [LieType; 3] = [LieType::B, LieType::C, LieType::D];

    /// The constant `e` of the orthonormal model: 1/2 for B, 1 for C, 0 for D.
    /// It is the last coordinate of rho and the scale of the last
    /// fundamental weight in types B and C.
    pub fn e(self) -> HalfInt {
        match self {
            LieType::B => HalfInt::HALF,
            LieType::C => HalfInt::ONE,
            LieType::D => HalfInt::ZERO,
        }
    }

    /// `2e` as an integer.
    pub fn two_e(self) -> i64 {
        self.e().doubled()
    }

    pub fn min_rank(self) -> usize {
        match self {
            LieType::B | LieType::C => 2,
            LieType::D => 4,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LieType::B => "B",
            LieType::C => "C",
            LieType::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "B" | "b" => Ok(LieType::B),
            "C" | "c" => Ok(LieType::C),
            "D" | "d" => Ok(LieType::D),
            other => Err(Error::UnsupportedGroup(format!(
                "unsupported Lie type '{other}'; expected one of B, C, D"
            ))),
        }
    }
}

/// A simple group of type B_n, C_n or D_n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Group {
    lie_type: LieType,
    rank: usize,
}

impl Group {
    /// Low ranks where the type coincides with another series are rejected.
    pub fn new(lie_type: LieType, rank: usize) -> Result<Self> {
        if rank < lie_type.min_rank() {
            let iso = match (lie_type, rank) {
                (_, 0) => "rank must be positive".to_string(),
                (LieType::B, 1) => "B_1 ≅ A_1".to_string(),
                (LieType::C, 1) => "C_1 ≅ A_1".to_string(),
                (LieType::D, 1) => "D_1 is a torus, not semisimple".to_string(),
                (LieType::D, 2) => "D_2 ≅ A_1×A_1".to_string(),
                (LieType::D, 3) => "D_3 ≅ A_3".to_string(),
                _ => unreachable!(),
            };
            return Err(Error::UnsupportedGroup(format!(
                "{lie_type}_n with n<{} unsupported; {iso}",
                lie_type.min_rank()
            )));
        }
        Ok(Group { lie_type, rank })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn e(&self) -> HalfInt {
        self.lie_type.e()
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.lie_type, self.rank)
    }
}

/// The isotropic Grassmannian G/P(α_k).
///
/// For type D, node `n-1` is folded onto node `n` by the diagram
/// automorphism exchanging the two spin nodes. `k()` is the node the step
/// matrix formulas work with; `requested_k()` is what the caller asked for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlagSpace {
    group: Group,
    k: usize,
    requested_k: usize,
}

impl FlagSpace {
    pub fn new(lie_type: LieType, rank: usize, k: usize) -> Result<Self> {
        let group = Group::new(lie_type, rank)?;
        Self::in_group(group, k)
    }

    pub fn in_group(group: Group, k: usize) -> Result<Self> {
        let n = group.rank();
        if k == 0 || k > n {
            return Err(Error::MarkedNodeOutOfRange { k, n });
        }
        let effective = if group.lie_type() == LieType::D && k == n - 1 {
            n
        } else {
            k
        };
        Ok(FlagSpace {
            group,
            k: effective,
            requested_k: k,
        })
    }

    /// Every space of the given group, one per requested marked node.
    pub fn all_in(group: Group) -> Vec<FlagSpace> {
        (1..=group.rank())
            .map(|k| FlagSpace::in_group(group, k).expect("k in range"))
            .collect()
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn lie_type(&self) -> LieType {
        self.group.lie_type()
    }

    pub fn n(&self) -> usize {
        self.group.rank()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn requested_k(&self) -> usize {
        self.requested_k
    }

    pub fn is_remapped(&self) -> bool {
        self.k != self.requested_k
    }

    /// Translate a weight given for `requested_k` into the coordinates used
    /// with `k`. Swaps a_{n-1} and a_n on a remapped D space, identity
    /// otherwise. The map is an involution, so it also translates back.
    pub fn to_effective(&self, w: &WeightFW) -> WeightFW {
        let mut coeffs = w.coeffs().to_vec();
        if self.is_remapped() && coeffs.len() == self.n() {
            let n = self.n();
            coeffs.swap(n - 2, n - 1);
        }
        WeightFW::new(coeffs)
    }

    /// Complex dimension of G/P(α_k).
    pub fn dim_flag(&self) -> usize {
        let (n, k) = (self.n(), self.k);
        match self.lie_type() {
            LieType::B | LieType::C => k * (4 * n + 1 - 3 * k) / 2,
            LieType::D => k * (4 * n - 1 - 3 * k) / 2,
        }
    }

    /// Checks `w` has length n and a_u >= 0 for every u other than the
    /// requested marked node.
    pub fn check_dominant_off_node(&self, w: &WeightFW) -> Result<()> {
        w.check_len(self.n())?;
        for (idx, &a) in w.coeffs().iter().enumerate() {
            let u = idx + 1;
            if u != self.requested_k && a < 0 {
                return Err(Error::NotDominant {
                    weight: w.to_string(),
                    k: self.requested_k,
                    index: u,
                    value: a,
                });
            }
        }
        Ok(())
    }

    pub fn check_initialized(&self, w: &WeightFW) -> Result<()> {
        let value = w.coeffs()[self.requested_k - 1];
        if value != 0 {
            return Err(Error::NotInitialized {
                weight: w.to_string(),
                k: self.requested_k,
                value,
            });
        }
        Ok(())
    }
}

impl fmt::Display for FlagSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/P(α_{})", self.group, self.requested_k)
    }
}
