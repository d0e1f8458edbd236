//! Exhaustive listing of initialized irreducible ACM bundles.
//!
//! An ACM bundle has M_{k,λ} <= dim G/P(α_k), and M_{k,λ} is affine in the
//! a_u with positive coefficients, so the candidates are the lattice points
//! of a simplex-like polytope.

mod atlas;
mod corollaries;

use std::fmt::Write as _;

use serde::Serialize;

use crate::acm::is_acm;
use crate::error::Result;
use crate::lie::{FlagSpace, WeightFW};
use crate::parallel::ordered_map;
use crate::step_matrix::max_entry_closed_form;

pub use atlas::{atlas_rows, emit_atlas, write_rows, AtlasFormat, AtlasRow};
pub use corollaries::{validate_corollaries, Claim, CorollaryCheck, CorollaryReport, Violation};

/// All non-negative integer vectors of length `n` with coordinate `skip`
/// (one-based) fixed at zero and coordinate sum at most `bound`, in
/// lexicographic order.
pub fn bounded_vectors(n: usize, skip: usize, bound: i64) -> Vec<WeightFW> {
    fn go(u: usize, n: usize, skip: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<WeightFW>) {
        if u > n {
            out.push(WeightFW::new(cur.clone()));
            return;
        }
        let hi = if u == skip { 0 } else { left };
        for a in 0..=hi {
            cur.push(a);
            go(u + 1, n, skip, left - a, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if bound >= 0 {
        go(1, n, skip, bound, &mut Vec::with_capacity(n), &mut out);
    }
    out
}

/// Initialized weights dominant off the marked node with Σ a_u <= `bound`.
pub fn initialized_weights(space: &FlagSpace, bound: i64) -> Vec<WeightFW> {
    bounded_vectors(space.n(), space.requested_k(), bound)
}

/// The inequality M_{k,λ} <= dim as Σ c_u a_u <= budget, in doubled units.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearBound {
    /// 2·(coefficient of a_u in M), indexed by u-1; zero at the marked node.
    pub doubled_coeffs: Vec<i64>,
    /// 2·(dim - M at λ = 0).
    pub doubled_budget: i64,
}

impl LinearBound {
    pub fn for_space(space: &FlagSpace) -> Result<Self> {
        let n = space.n();
        let base = max_entry_closed_form(space, &WeightFW::zero(n))?.doubled();
        let mut doubled_coeffs = vec![0; n];
        for u in (1..=n).filter(|&u| u != space.requested_k()) {
            let m = max_entry_closed_form(space, &WeightFW::unit(n, u))?.doubled();
            doubled_coeffs[u - 1] = m - base;
        }
        let doubled_budget = 2 * space.dim_flag() as i64 - base;
        Ok(LinearBound {
            doubled_coeffs,
            doubled_budget,
        })
    }

    pub fn describe(&self, space: &FlagSpace) -> String {
        let mut s = String::new();
        let mut first = true;
        for (idx, &c) in self.doubled_coeffs.iter().enumerate() {
            if idx + 1 == space.requested_k() {
                continue;
            }
            if !first {
                s.push_str(" + ");
            }
            first = false;
            let coeff = crate::lie::HalfInt::from_doubled(c);
            let _ = write!(s, "{coeff}·a{}", idx + 1);
        }
        if first {
            s.push('0');
        }
        let budget = crate::lie::HalfInt::from_doubled(self.doubled_budget);
        let _ = write!(s, " <= {budget} (M_k,λ <= dim = {})", space.dim_flag());
        s
    }

    /// Lattice points of the polytope, depth-first, lexicographic.
    pub fn lattice_points(&self) -> Vec<WeightFW> {
        fn go(u: usize, b: &LinearBound, left: i64, cur: &mut Vec<i64>, out: &mut Vec<WeightFW>) {
            if u == b.doubled_coeffs.len() {
                out.push(WeightFW::new(cur.clone()));
                return;
            }
            let c = b.doubled_coeffs[u];
            let hi = if c == 0 { 0 } else { left / c };
            for a in 0..=hi {
                cur.push(a);
                go(u + 1, b, left - a * c, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if self.doubled_budget >= 0 {
            go(0, self, self.doubled_budget, &mut Vec::new(), &mut out);
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerationResult {
    #[serde(skip)]
    pub space: FlagSpace,
    pub acm_weights: Vec<WeightFW>,
    pub candidates_scanned: usize,
    pub bound_used: String,
}

pub fn enumerate_acm(space: &FlagSpace) -> Result<EnumerationResult> {
    enumerate_acm_with_jobs(space, 1)
}

/// All initialized ACM weights on `space`, lexicographically ordered.
pub fn enumerate_acm_with_jobs(space: &FlagSpace, jobs: usize) -> Result<EnumerationResult> {
    let bound = LinearBound::for_space(space)?;
    assert!(
        bound
            .doubled_coeffs
            .iter()
            .enumerate()
            .all(|(idx, &c)| idx + 1 == space.requested_k() || c > 0),
        "M_k,λ must have positive coefficients on {space}"
    );
    let candidates = bound.lattice_points();
    let dim = crate::lie::HalfInt::from_int(space.dim_flag() as i64);
    let flags = ordered_map(&candidates, jobs, |lambda| -> Result<bool> {
        let verdict = is_acm(space, lambda)?;
        debug_assert!(verdict.max <= dim);
        Ok(verdict.is_acm)
    });
    let mut acm_weights = Vec::new();
    for (lambda, flag) in candidates.iter().zip(flags) {
        if flag? {
            acm_weights.push(lambda.clone());
        }
    }
    Ok(EnumerationResult {
        space: *space,
        acm_weights,
        candidates_scanned: candidates.len(),
        bound_used: bound.describe(space),
    })
}
