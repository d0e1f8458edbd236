use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Group, HalfInt, LieType};
use crate::error::{Error, Result};

/// A weight a_1 λ_1 + ... + a_n λ_n, stored by its coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightFW(Vec<i64>);

impl WeightFW {
    pub fn new(coeffs: Vec<i64>) -> Self {
        WeightFW(coeffs)
    }

    pub fn zero(n: usize) -> Self {
        WeightFW(vec![0; n])
    }

    /// The fundamental weight λ_i of a rank-n group, as a coefficient vector.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        WeightFW(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coeffs(self) -> Vec<i64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// One-based coefficient a_u.
    pub fn a(&self, u: usize) -> i64 {
        self.0[u - 1]
    }

    /// Σ_{u=lo}^{hi} a_u, one-based and inclusive; empty when lo > hi.
    pub fn sum_range(&self, lo: usize, hi: usize) -> i64 {
        if lo > hi {
            return 0;
        }
        self.0[lo - 1..hi].iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.0.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: self.0.len(),
            });
        }
        Ok(())
    }

    pub fn check_dominant(&self) -> Result<()> {
        match self.0.iter().position(|&a| a < 0) {
            Some(idx) => Err(Error::NotGroupDominant {
                weight: self.to_string(),
                index: idx + 1,
                value: self.0[idx],
            }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for WeightFW {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

/// A weight in the orthonormal e-basis.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EpsilonWeight(Vec<HalfInt>);

impl EpsilonWeight {
    pub fn new(coords: Vec<HalfInt>) -> Self {
        EpsilonWeight(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        EpsilonWeight(coords.iter().map(|&c| HalfInt::from_int(c)).collect())
    }

    pub fn zero(n: usize) -> Self {
        EpsilonWeight(vec![HalfInt::ZERO; n])
    }

    pub fn coords(&self) -> &[HalfInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, HalfInt::checked_add)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, HalfInt::checked_sub)
    }

    pub fn checked_scale(&self, factor: i64) -> Result<Self> {
        self.0
            .iter()
            .map(|c| c.checked_mul_int(factor))
            .collect::<Result<Vec<_>>>()
            .map(EpsilonWeight)
    }

    fn zip_with(&self, other: &Self, op: fn(HalfInt, HalfInt) -> Result<HalfInt>) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                actual: other.len(),
            });
        }
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&x, &y)| op(x, y))
            .collect::<Result<Vec<_>>>()
            .map(EpsilonWeight)
    }
}

impl fmt::Display for EpsilonWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl Group {
    /// The fundamental weight λ_i (one-based) in e-coordinates.
    pub fn fundamental_weight(&self, i: usize) -> Result<EpsilonWeight> {
        let n = self.rank();
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let half = HalfInt::HALF;
        let mut v = vec![HalfInt::ZERO; n];
        match (self.lie_type(), i) {
            (LieType::B, i) if i == n => v.fill(half),
            (LieType::D, i) if i == n - 1 => {
                v.fill(half);
                v[n - 1] = -half;
            }
            (LieType::D, i) if i == n => v.fill(half),
            // C_n: λ_n = e_1 + ... + e_n falls in the generic case.
            (_, i) => v[..i].fill(HalfInt::ONE),
        }
        Ok(EpsilonWeight(v))
    }

    /// Half the sum of the positive roots; coordinate i equals n + e - i.
    pub fn rho(&self) -> EpsilonWeight {
        let n = self.rank() as i64;
        let e = self.e();
        EpsilonWeight((1..=n).map(|i| HalfInt::from_int(n - i) + e).collect())
    }

    pub fn to_epsilon(&self, w: &WeightFW) -> Result<EpsilonWeight> {
        w.check_len(self.rank())?;
        let mut acc = EpsilonWeight::zero(self.rank());
        for (idx, &a) in w.coeffs().iter().enumerate() {
            if a != 0 {
                let term = self.fundamental_weight(idx + 1)?.checked_scale(a)?;
                acc = acc.checked_add(&term)?;
            }
        }
        Ok(acc)
    }

    /// Inverse change of basis. Fails when `mu` is not in the weight lattice.
    pub fn from_epsilon(&self, mu: &EpsilonWeight) -> Result<WeightFW> {
        let n = self.rank();
        if mu.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: mu.len(),
            });
        }
        let c = mu.coords();
        let not_lattice = || Error::NotLatticePoint(mu.to_string());
        let int = |x: HalfInt| x.to_integer().ok_or_else(not_lattice);

        let mut a = Vec::with_capacity(n);
        match self.lie_type() {
            LieType::B => {
                for i in 0..n - 1 {
                    a.push(int(c[i].checked_sub(c[i + 1])?)?);
                }
                a.push(c[n - 1].doubled());
            }
            LieType::C => {
                for i in 0..n - 1 {
                    a.push(int(c[i].checked_sub(c[i + 1])?)?);
                }
                a.push(int(c[n - 1])?);
            }
            LieType::D => {
                for i in 0..n - 2 {
                    a.push(int(c[i].checked_sub(c[i + 1])?)?);
                }
                a.push(int(c[n - 2].checked_sub(c[n - 1])?)?);
                a.push(int(c[n - 2].checked_add(c[n - 1])?)?);
            }
        }
        Ok(WeightFW(a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(doubled: &[i64]) -> EpsilonWeight {
        EpsilonWeight::new(doubled.iter().map(|&d| HalfInt::from_doubled(d)).collect())
    }

    fn g(t: LieType, n: usize) -> Group {
        Group::new(t, n).unwrap()
    }

    #[test]
    fn fundamental_weights() {
        assert_eq!(
            g(LieType::B, 5).fundamental_weight(5).unwrap(),
            h(&[1, 1, 1, 1, 1])
        );
        assert_eq!(
            g(LieType::C, 4).fundamental_weight(4).unwrap(),
            EpsilonWeight::from_ints(&[1, 1, 1, 1])
        );
        assert_eq!(
            g(LieType::D, 4).fundamental_weight(3).unwrap(),
            h(&[1, 1, 1, -1])
        );
        assert_eq!(
            g(LieType::D, 4).fundamental_weight(2).unwrap(),
            h(&[2, 2, 0, 0])
        );
        assert!(matches!(
            g(LieType::B, 3).fundamental_weight(4),
            Err(Error::IndexOutOfRange { index: 4, n: 3 })
        ));
        assert!(g(LieType::B, 3).fundamental_weight(0).is_err());
    }

    #[test]
    fn rho_values() {
        assert_eq!(g(LieType::B, 5).rho(), h(&[9, 7, 5, 3, 1]));
        assert_eq!(g(LieType::C, 3).rho(), EpsilonWeight::from_ints(&[3, 2, 1]));
        assert_eq!(
            g(LieType::D, 4).rho(),
            EpsilonWeight::from_ints(&[3, 2, 1, 0])
        );
    }

    #[test]
    fn to_epsilon_examples() {
        let b5 = g(LieType::B, 5);
        assert_eq!(
            b5.to_epsilon(&WeightFW::new(vec![4, 4, 0, 0, 0])).unwrap(),
            EpsilonWeight::from_ints(&[8, 4, 0, 0, 0])
        );
        assert_eq!(
            g(LieType::D, 4)
                .to_epsilon(&WeightFW::new(vec![0, 0, 0, 1]))
                .unwrap(),
            h(&[1, 1, 1, 1])
        );
        assert_eq!(
            g(LieType::C, 3)
                .to_epsilon(&WeightFW::new(vec![0, 1, 0]))
                .unwrap(),
            EpsilonWeight::from_ints(&[1, 1, 0])
        );
        assert!(b5.to_epsilon(&WeightFW::new(vec![1, 2])).is_err());
    }

    #[test]
    fn from_epsilon_examples() {
        assert_eq!(
            g(LieType::B, 5)
                .from_epsilon(&EpsilonWeight::from_ints(&[8, 4, 0, 0, 0]))
                .unwrap(),
            WeightFW::new(vec![4, 4, 0, 0, 0])
        );
        assert_eq!(
            g(LieType::D, 4).from_epsilon(&h(&[1, 1, 1, 1])).unwrap(),
            WeightFW::new(vec![0, 0, 0, 1])
        );
        let c3 = g(LieType::C, 3);
        assert_eq!(
            c3.from_epsilon(&c3.rho()).unwrap(),
            WeightFW::new(vec![1, 1, 1])
        );
    }

    #[test]
    fn from_epsilon_rejects_non_lattice() {
        assert!(matches!(
            g(LieType::C, 2).from_epsilon(&h(&[1, 1])),
            Err(Error::NotLatticePoint(_))
        ));
        assert!(g(LieType::B, 2).from_epsilon(&h(&[2, 1])).is_err());
        assert!(g(LieType::D, 4).from_epsilon(&h(&[1, 1, 1, 2])).is_err());
        assert!(g(LieType::B, 2).from_epsilon(&h(&[3, 1])).is_ok());
    }

    #[test]
    fn sum_range_is_inclusive_and_empty_when_reversed() {
        let w = WeightFW::new(vec![1, 2, 3, 4]);
        assert_eq!(w.sum_range(2, 3), 5);
        assert_eq!(w.sum_range(4, 3), 0);
        assert_eq!(w.sum_range(1, 4), 10);
    }
}
