//! Borel–Bott–Weil ground truth.
//!
//! Everything here works from roots, ρ and fundamental weights alone: the
//! twisted weight λ + ρ - tλ_k is classified against every positive root.
//! No step-matrix formula is consulted, so this module can be used to check
//! the step-matrix criterion independently.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::{pairing, EpsilonWeight, FlagSpace, Group, LieType, Root, WeightFW};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    /// Pairs to zero with this root (the first one in canonical order).
    Singular(Root),
    /// Not singular; this many positive roots pair negatively.
    Regular(usize),
}

impl Classification {
    pub fn is_singular(&self) -> bool {
        matches!(self, Classification::Singular(_))
    }

    pub fn index(&self) -> Option<usize> {
        match *self {
            Classification::Regular(p) => Some(p),
            Classification::Singular(_) => None,
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Singular(r) => write!(f, "singular ({r})"),
            Classification::Regular(p) => write!(f, "regular of index {p}"),
        }
    }
}

/// The cohomology of an irreducible homogeneous bundle: zero in every
/// degree, or a single irreducible G-module in one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CohomologyResult {
    Zero {
        witness: Root,
    },
    NonZero {
        degree: usize,
        /// Highest weight w(λ+ρ)-ρ of the G-module, fundamental basis.
        weight: WeightFW,
        #[serde(serialize_with = "serialize_biguint")]
        dimension: BigUint,
    },
}

fn serialize_biguint<S: serde::Serializer>(
    v: &BigUint,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    // JSON numbers when they fit, decimal strings beyond that
    match u64::try_from(v) {
        Ok(x) => s.serialize_u64(x),
        Err(_) => s.collect_str(v),
    }
}

impl fmt::Display for CohomologyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CohomologyResult::Zero { witness } => {
                write!(f, "H^i = 0 for all i (singular at {witness})")
            }
            CohomologyResult::NonZero {
                degree,
                weight,
                dimension,
            } => write!(f, "H^{degree} = V{weight} (dimension {dimension})"),
        }
    }
}

/// λ + ρ - tλ_k in e-coordinates, with k the requested marked node.
pub fn twisted_weight(space: &FlagSpace, lambda: &WeightFW, t: i64) -> Result<EpsilonWeight> {
    space.check_dominant_off_node(lambda)?;
    let g = space.group();
    let shift = g
        .fundamental_weight(space.requested_k())?
        .checked_scale(t)?;
    g.to_epsilon(lambda)?
        .checked_add(&g.rho())?
        .checked_sub(&shift)
}

pub fn classify(group: &Group, mu: &EpsilonWeight) -> Result<Classification> {
    if mu.len() != group.rank() {
        return Err(Error::DimensionMismatch {
            expected: group.rank(),
            actual: mu.len(),
        });
    }
    let mut negative = 0;
    for root in group.positive_roots() {
        let v = pairing(mu, &root)?;
        if v.is_zero() {
            return Ok(Classification::Singular(root));
        }
        if v.signum() < 0 {
            negative += 1;
        }
    }
    Ok(Classification::Regular(negative))
}

/// The Weyl-conjugate of a regular `mu` in the dominant chamber, with the
/// number of sign changes used.
///
/// For B and C the Weyl group is all signed permutations; for D only
/// those with an even number of sign changes.
pub fn dominant_representative(
    group: &Group,
    mu: &EpsilonWeight,
) -> Result<(EpsilonWeight, usize)> {
    if let Classification::Singular(root) = classify(group, mu)? {
        return Err(Error::Singular(root.to_string()));
    }
    let mut flips = mu.coords().iter().filter(|c| c.signum() < 0).count();
    let mut coords: Vec<_> = mu.coords().iter().map(|c| c.abs()).collect();
    coords.sort_unstable_by(|a, b| b.cmp(a));
    if group.lie_type() == LieType::D && flips % 2 == 1 {
        let last = coords.len() - 1;
        coords[last] = -coords[last];
        flips += 1;
    }
    Ok((EpsilonWeight::new(coords), flips))
}

/// Dimension of the irreducible G-module of highest weight `lambda`:
/// the product over positive roots of (λ+ρ, α)/(ρ, α).
pub fn weyl_dimension(group: &Group, lambda: &WeightFW) -> Result<BigUint> {
    lambda.check_dominant()?;
    let shifted = group.to_epsilon(lambda)?.checked_add(&group.rho())?;
    let rho = group.rho();
    let mut product = BigRational::one();
    for root in group.positive_roots() {
        let num = pairing(&shifted, &root)?.doubled();
        let den = pairing(&rho, &root)?.doubled();
        product *= BigRational::new(BigInt::from(num), BigInt::from(den));
    }
    assert!(
        product.is_integer() && product.is_positive(),
        "Weyl dimension of {lambda} on {group} is not a positive integer: {product}"
    );
    Ok(product.to_integer().to_biguint().expect("positive integer"))
}

/// H^*(G/P(α_k), E_λ(-t)) by Borel–Bott–Weil.
pub fn cohomology(space: &FlagSpace, lambda: &WeightFW, t: i64) -> Result<CohomologyResult> {
    let group = space.group();
    let mu = twisted_weight(space, lambda, t)?;
    match classify(&group, &mu)? {
        Classification::Singular(witness) => Ok(CohomologyResult::Zero { witness }),
        Classification::Regular(degree) => {
            let (dominant, _) = dominant_representative(&group, &mu)?;
            let shifted = group.from_epsilon(&dominant)?;
            let weight = WeightFW::new(shifted.coeffs().iter().map(|a| a - 1).collect());
            let dimension = weyl_dimension(&group, &weight)?;
            Ok(CohomologyResult::NonZero {
                degree,
                weight,
                dimension,
            })
        }
    }
}

/// Outcome of scanning every relevant twist.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleScan {
    /// Inclusive range of t scanned. Outside it every radical root pairs
    /// with a fixed sign, so the classification there matches the ends.
    pub t_min: i64,
    pub t_max: i64,
    /// Twists at which λ + ρ - tλ_k is singular.
    pub singular_twists: Vec<i64>,
    /// Twists with an intermediate index (0 < p < dim), with that index.
    pub intermediate: Vec<(i64, usize)>,
}

impl OracleScan {
    pub fn is_acm(&self) -> bool {
        self.intermediate.is_empty()
    }
}

/// Classifies λ + ρ - tλ_k for every integer t where the classification can
/// change.
///
/// Each pairing is affine in t with slope -(λ_k, α) <= 0, which is nonzero
/// exactly on the radical roots. The scan covers the floor of the smallest
/// zero crossing through the ceiling of the largest.
pub fn scan_twists(space: &FlagSpace, lambda: &WeightFW) -> Result<OracleScan> {
    let group = space.group();
    let base = twisted_weight(space, lambda, 0)?;
    let lk = group.fundamental_weight(space.requested_k())?;
    let mut t_min = i64::MAX;
    let mut t_max = i64::MIN;
    for root in group.positive_roots() {
        let slope = pairing(&lk, &root)?.doubled();
        if slope == 0 {
            continue;
        }
        // zero at t = (base, α) / (λ_k, α)
        let num = pairing(&base, &root)?.doubled();
        t_min = t_min.min(num.div_euclid(slope));
        t_max = t_max.max(-(-num).div_euclid(slope));
    }
    let dim = space.dim_flag();
    let mut singular_twists = Vec::new();
    let mut intermediate = Vec::new();
    for t in t_min..=t_max {
        let mu = twisted_weight(space, lambda, t)?;
        match classify(&group, &mu)? {
            Classification::Singular(_) => singular_twists.push(t),
            Classification::Regular(p) if p == 0 || p == dim => {}
            Classification::Regular(p) => intermediate.push((t, p)),
        }
    }
    Ok(OracleScan {
        t_min,
        t_max,
        singular_twists,
        intermediate,
    })
}

/// ACM by direct scan: every twist is singular or regular of index 0 or
/// dim G/P.
pub fn acm_by_oracle(space: &FlagSpace, lambda: &WeightFW) -> Result<bool> {
    space.check_dominant_off_node(lambda)?;
    space.check_initialized(lambda)?;
    Ok(scan_twists(space, lambda)?.is_acm())
}
