//! The step-matrix ACM criterion as a decision procedure with certificates.
//!
//! An initialized E_λ on G/P(α_k) is ACM exactly when every integer in
//! [1, M_{k,λ}] occurs among the entries of T_{k,λ}. Arbitrary a_k is
//! handled by untwisting first, since E is ACM iff E(t) is.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bbw;
use crate::enumerate::initialized_weights;
use crate::error::Result;
use crate::lie::{FlagSpace, HalfInt, WeightFW};
use crate::parallel::ordered_map;
use crate::step_matrix::{self, EntryPos, StepMatrix};

/// Zeroes the marked coefficient. Returns the initialized weight and the
/// twist a_k that was removed (E_λ = E_{λ'}(a_k)).
pub fn normalize_initialized(space: &FlagSpace, lambda: &WeightFW) -> Result<(WeightFW, i64)> {
    space.check_dominant_off_node(lambda)?;
    let mut coeffs = lambda.coeffs().to_vec();
    let twist = std::mem::take(&mut coeffs[space.requested_k() - 1]);
    Ok((WeightFW::new(coeffs), twist))
}

#[derive(Clone, Debug, Serialize)]
pub struct AcmVerdict {
    /// Initialized weight, in the caller's coordinates.
    pub lambda: WeightFW,
    pub twist_applied: i64,
    pub is_acm: bool,
    #[serde(rename = "M")]
    pub max: HalfInt,
    pub dim: usize,
    /// For each integer l in [1, M] that occurs, the first entry equal to l.
    pub witnesses: BTreeMap<i64, EntryPos>,
    /// Smallest integer in [1, M] with no entry; `None` iff ACM.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub missing: Option<i64>,
    /// Set when a D_n space with k = n-1 was folded onto k = n.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub remapped_to_k: Option<usize>,
    #[serde(skip)]
    pub step_matrix: StepMatrix,
}

impl AcmVerdict {
    /// Every integer in [1, M] that has no entry.
    pub fn gaps(&self) -> Vec<i64> {
        (1..=self.max.floor())
            .filter(|l| !self.witnesses.contains_key(l))
            .collect()
    }

    pub fn summary(&self) -> String {
        match self.missing {
            None => format!("ACM: yes (M={})", self.max),
            Some(l) => format!("ACM: no (missing l={l} in [1,{}])", self.max),
        }
    }
}

/// Decides ACM for E_λ with `lambda` dominant off the marked node.
pub fn is_acm(space: &FlagSpace, lambda: &WeightFW) -> Result<AcmVerdict> {
    let (initialized, twist) = normalize_initialized(space, lambda)?;
    let sm = step_matrix::build(space, &initialized)?;
    let max = sm.max();

    let mut witnesses = BTreeMap::new();
    for (pos, value) in sm.entries() {
        if let Some(l) = value.to_integer() {
            if l >= 1 && HalfInt::from_int(l) <= max {
                witnesses.entry(l).or_insert(pos);
            }
        }
    }
    let missing = (1..=max.floor()).find(|l| !witnesses.contains_key(l));

    Ok(AcmVerdict {
        lambda: initialized,
        twist_applied: twist,
        is_acm: missing.is_none(),
        max,
        dim: space.dim_flag(),
        witnesses,
        missing,
        remapped_to_k: space.is_remapped().then_some(space.k()),
        step_matrix: sm,
    })
}

/// One line of the theorem-versus-oracle report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceRecord {
    pub lambda: WeightFW,
    pub acm_theorem: bool,
    pub acm_oracle: bool,
    #[serde(rename = "M")]
    pub max: HalfInt,
    pub dim: usize,
}

impl EquivalenceRecord {
    pub fn agrees(&self) -> bool {
        self.acm_theorem == self.acm_oracle
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceReport {
    pub sum_bound: i64,
    pub records: Vec<EquivalenceRecord>,
}

impl EquivalenceReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &EquivalenceRecord> {
        self.records.iter().filter(|r| !r.agrees())
    }

    pub fn mismatch_count(&self) -> usize {
        self.mismatches().count()
    }

    pub fn acm_weights(&self) -> Vec<&WeightFW> {
        self.records
            .iter()
            .filter(|r| r.acm_theorem)
            .map(|r| &r.lambda)
            .collect()
    }

    /// One JSON object per line, in lexicographic order of λ.
    pub fn to_json_lines(&self) -> String {
        self.records
            .iter()
            .map(|r| serde_json::to_string(r).expect("serializable") + "\n")
            .collect()
    }
}

/// Runs the step-matrix criterion and the direct oracle on every
/// initialized dominant λ with Σ_{u≠k} a_u <= `sum_bound`.
pub fn verify_equivalence(
    space: &FlagSpace,
    sum_bound: i64,
    jobs: usize,
) -> Result<EquivalenceReport> {
    let candidates = initialized_weights(space, sum_bound);
    let records = ordered_map(&candidates, jobs, |lambda| -> Result<EquivalenceRecord> {
        let verdict = is_acm(space, lambda)?;
        Ok(EquivalenceRecord {
            lambda: lambda.clone(),
            acm_theorem: verdict.is_acm,
            acm_oracle: bbw::acm_by_oracle(space, lambda)?,
            max: verdict.max,
            dim: verdict.dim,
        })
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    Ok(EquivalenceReport { sum_bound, records })
}
