//! Closed-form descriptions of ACM weights for special families, checked
//! against the decision procedure.

use serde::Serialize;

use crate::acm::is_acm;
use crate::error::Result;
use crate::lie::{FlagSpace, LieType, WeightFW};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    /// The predicate characterizes ACM within the family.
    Iff,
    /// The predicate implies ACM; nothing is claimed outside it.
    Sufficient,
}

type Predicate = Box<dyn Fn(&WeightFW) -> bool + Send + Sync>;

/// A family of initialized weights supported on `free` (one-based, in
/// effective coordinates), with per-coordinate sweep ceilings.
struct Family {
    name: &'static str,
    claim: Claim,
    free: Vec<usize>,
    ceiling: Vec<i64>,
    predicate: Predicate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub lambda: WeightFW,
    pub predicted: bool,
    pub actual: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorollaryCheck {
    pub name: &'static str,
    pub claim: Claim,
    pub swept: usize,
    /// Weights where the predicate holds.
    pub predicted_acm: usize,
    /// ACM weights where the predicate fails (informational for
    /// sufficient-only claims).
    pub acm_outside: usize,
    pub violations: Vec<Violation>,
}

impl CorollaryCheck {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CorollaryReport {
    pub margin: i64,
    pub checks: Vec<CorollaryCheck>,
}

impl CorollaryReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CorollaryCheck::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CorollaryCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn all_at_most(coords: Vec<usize>, bound: i64) -> Predicate {
    Box::new(move |w: &WeightFW| coords.iter().all(|&u| w.a(u) <= bound))
}

fn families(space: &FlagSpace) -> Vec<Family> {
    let n = space.n();
    let k = space.k();
    let (ni, ki) = (n as i64, k as i64);
    let mut out = Vec::new();
    let low: Vec<usize> = (1..k).collect();
    let high: Vec<usize> = (k + 1..=n).collect();

    if k == 1 {
        // quadrics and C_n/P(α_1): line bundles and spinor bundles only
        let (name, spinors): (&'static str, Vec<usize>) = match space.lie_type() {
            LieType::B => ("quadric B_m/P(α_1): O or spinor", vec![n]),
            LieType::D => ("quadric D_m/P(α_1): O or spinors", vec![n - 1, n]),
            LieType::C => ("C_n/P(α_1): line bundles only", vec![]),
        };
        let allowed: Vec<WeightFW> = std::iter::once(WeightFW::zero(n))
            .chain(spinors.iter().map(|&u| WeightFW::unit(n, u)))
            .collect();
        out.push(Family {
            name,
            claim: Claim::Iff,
            free: high.clone(),
            ceiling: vec![1; high.len()],
            predicate: Box::new(move |w| allowed.contains(w)),
        });
        return out;
    }

    match (space.lie_type(), k < n) {
        (LieType::B, true) => {
            out.push(Family {
                name: "B k<n, λ on nodes < k: a_u <= 2n-2k suffices",
                claim: Claim::Sufficient,
                free: low.clone(),
                ceiling: vec![2 * ni - 2 * ki; low.len()],
                predicate: all_at_most(low, 2 * ni - 2 * ki),
            });
            let mut ceiling = vec![ki - 1; high.len()];
            *ceiling.last_mut().unwrap() = 2 * ki - 1;
            let c = ceiling.clone();
            let free = high.clone();
            out.push(Family {
                name: "B k<n, λ on nodes > k: a_u <= k-1 (u<n), a_n <= 2k-1",
                claim: Claim::Iff,
                free: high,
                ceiling,
                predicate: Box::new(move |w| free.iter().zip(&c).all(|(&u, &b)| w.a(u) <= b)),
            });
        }
        (LieType::B, false) => {
            let mid: Vec<usize> = (2..=n.saturating_sub(2)).collect();
            out.push(Family {
                name: "B k=n, λ on nodes 2..n-2: a_u <= 1 suffices",
                claim: Claim::Sufficient,
                free: mid.clone(),
                ceiling: vec![1; mid.len()],
                predicate: all_at_most(mid, 1),
            });
        }
        (LieType::C, _) => {
            out.push(Family {
                name: "C, λ on nodes < k: a_u <= 2n-2k+1 suffices",
                claim: Claim::Sufficient,
                free: low.clone(),
                ceiling: vec![2 * ni - 2 * ki + 1; low.len()],
                predicate: all_at_most(low, 2 * ni - 2 * ki + 1),
            });
            out.push(Family {
                name: "C, λ on nodes > k: a_u <= k-1",
                claim: Claim::Iff,
                free: high.clone(),
                ceiling: vec![ki - 1; high.len()],
                predicate: all_at_most(high, ki - 1),
            });
        }
        (LieType::D, true) => {
            out.push(Family {
                name: "D k<n-1, λ on nodes < k: a_u <= 2n-2k-1 suffices",
                claim: Claim::Sufficient,
                free: low.clone(),
                ceiling: vec![2 * ni - 2 * ki - 1; low.len()],
                predicate: all_at_most(low, 2 * ni - 2 * ki - 1),
            });
            let mut ceiling = vec![ki - 1; high.len()];
            let last = ceiling.len();
            ceiling[last - 2] = 3 * ki - 2;
            ceiling[last - 1] = 3 * ki - 2;
            let middle: Vec<usize> = (k + 1..=n - 2).collect();
            out.push(Family {
                name: "D k<n-1, λ on nodes > k: a_u <= k-1 (u<=n-2) and (a) or (b)",
                claim: Claim::Iff,
                free: high,
                ceiling,
                predicate: Box::new(move |w| {
                    let spin = |x: i64, y: i64| x < ki && (0..2 * ki).contains(&(y - x));
                    middle.iter().all(|&u| w.a(u) < ki)
                        && (spin(w.a(n - 1), w.a(n)) || spin(w.a(n), w.a(n - 1)))
                }),
            });
        }
        (LieType::D, false) => {
            let mid: Vec<usize> = (3..=n.saturating_sub(3)).collect();
            out.push(Family {
                name: "D k=n, λ on nodes 3..n-3: a_u <= 1 suffices",
                claim: Claim::Sufficient,
                free: mid.clone(),
                ceiling: vec![1; mid.len()],
                predicate: all_at_most(mid, 1),
            });
            let ends = vec![1, n - 1];
            out.push(Family {
                name: "D k=n, λ on nodes 1 and n-1: a_u <= n-4 suffices",
                claim: Claim::Sufficient,
                free: ends.clone(),
                ceiling: vec![ni - 4; 2],
                predicate: all_at_most(ends, ni - 4),
            });
        }
    }
    out
}

fn sweep(n: usize, free: &[usize], ceiling: &[i64], margin: i64) -> Vec<WeightFW> {
    let mut out = vec![vec![0i64; n]];
    for (&u, &c) in free.iter().zip(ceiling) {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=c + margin).map(move |a| {
                    let mut v = v.clone();
                    v[u - 1] = a;
                    v
                })
            })
            .collect();
    }
    let mut out: Vec<WeightFW> = out.into_iter().map(WeightFW::new).collect();
    out.sort();
    out
}

/// Checks every closed-form family that applies to `space`. Each family is
/// swept over its own box widened by `margin` in every coordinate.
/// "Iff" families must agree with [`is_acm`] everywhere in the sweep;
/// sufficient-only families must only have no non-ACM weight satisfying
/// the predicate.
pub fn validate_corollaries(space: &FlagSpace, margin: i64) -> Result<CorollaryReport> {
    let mut checks = Vec::new();
    for fam in families(space) {
        let weights = sweep(space.n(), &fam.free, &fam.ceiling, margin);
        let mut check = CorollaryCheck {
            name: fam.name,
            claim: fam.claim,
            swept: weights.len(),
            predicted_acm: 0,
            acm_outside: 0,
            violations: Vec::new(),
        };
        for effective in weights {
            let predicted = (fam.predicate)(&effective);
            let lambda = space.to_effective(&effective);
            let actual = is_acm(space, &lambda)?.is_acm;
            check.predicted_acm += predicted as usize;
            check.acm_outside += (actual && !predicted) as usize;
            let violated = match fam.claim {
                Claim::Iff => predicted != actual,
                Claim::Sufficient => predicted && !actual,
            };
            if violated {
                check.violations.push(Violation {
                    lambda,
                    predicted,
                    actual,
                });
            }
        }
        checks.push(check);
    }
    Ok(CorollaryReport { margin, checks })
}
