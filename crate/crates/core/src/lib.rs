//! Exact arithmetic for the Picard modular groups `PU(2,1; O_d)` with
//! `d = 3, 7, 11`, and decomposition of their elements into the four
//! generators `T1`, `T2` (Heisenberg translations), `M` (rotation) and `R`
//! (involution).
//!
//! The pipeline is: [`ring`] arithmetic → [`group`] matrices and the
//! Hermitian form → [`heisenberg`] boundary translations → [`stabilizer`]
//! factorization inside `Γ∞` → [`reduction`] descent for everything else.

pub mod batch;
pub mod error;
pub mod group;
pub mod heisenberg;
mod intmat;
pub mod random;
pub mod reduction;
pub mod relations;
pub mod ring;
pub mod stabilizer;
pub mod word;

pub use error::{Error, Result};
pub use group::{herm, BoundaryPoint, Matrix3};
pub use heisenberg::{
    dilation_matrix, involution, rotation_matrix, translation_matrix, translation_to, HeisPoint,
};
pub use reduction::{
    contraction_bound, contraction_report, decompose, reduce_step, ReductionConfig, ReductionStep,
    ReductionTrace, StallReport,
};
pub use ring::{nearest_candidates, units, QuadInt, QuadRat, RingTag};
pub use stabilizer::{factor_stabilizer, langlands_decompose, params_valid, LanglandsParams};
pub use word::{evaluate_word, generator_matrix, GeneratorId, Word};
