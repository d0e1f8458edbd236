//! Homogeneous ACM vector bundles on isotropic Grassmannians G/P(α_k) of
//! types B, C and D.
//!
//! The crate decides whether an irreducible initialized bundle E_λ is
//! arithmetically Cohen-Macaulay through its step matrix, cross-checks the
//! answer against a direct Borel-Weil-Bott computation, and enumerates the
//! finitely many ACM bundles on each space.

pub mod acm;
pub mod bbw;
pub mod enumerate;
pub mod error;
pub mod lie;
mod parallel;
pub mod step_matrix;

pub use acm::{is_acm, verify_equivalence, AcmVerdict, EquivalenceRecord, EquivalenceReport};
pub use bbw::{acm_by_oracle, cohomology, CohomologyResult};
pub use enumerate::{enumerate_acm, enumerate_acm_with_jobs, EnumerationResult};
pub use error::{Error, Result};
pub use lie::{EpsilonWeight, FlagSpace, Group, HalfInt, LieType, WeightFW};
pub use step_matrix::{build as build_step_matrix, max_entry_closed_form, StepMatrix};
