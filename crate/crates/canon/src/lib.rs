//! Canonical bases `B(w)` of quantum Schubert cells.
//!
//! [`lusztig_solve`] produces the bar-invariant elements `b_a` of one degree
//! slice of a PBW frame. [`verify_upper_global`] certifies membership in the
//! upper global basis independently of the solver. The remaining operations
//! compare frames, test braid stability and embeddings, intersect cells and
//! build the closed forms for words with at most one repeated letter.

mod certify;
mod checks;
mod closed;
mod solve;

use qschubert_braid::BraidError;
use qschubert_freealg::FreeError;
use qschubert_pbw::PbwError;
use qschubert_rootdata::RootError;
use thiserror::Error;

pub use certify::{
    certify, string_cascade, string_name, verify_upper_global, verify_upper_global_seeded, Certificate, STRING_SIDE,
};
pub use checks::{bi_schubert, check_embedding, check_ti_stability, compare_frames, EmbeddingReport, StabilityReport};
pub use closed::{closed_form_basis, single_repetition, transition_check, y_element, SingleRepetition};
pub use solve::{check_bar_matrix, degrees_up_to, lusztig_solve, lusztig_solve_with, Basis, CanonicalElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("bar defect with a nonzero symmetric part: {0}")]
    Inconsistency(String),
    #[error("string cascade ends at {0}, not at +1 or -1")]
    NotSigned(String),
    #[error("element is not canonical: {0}")]
    NotCanonical(String),
    #[error("frames describe different Weyl group elements")]
    FrameMismatch,
    #[error("the product of the two words is not reduced")]
    LengthNotAdditive,
    #[error("unsupported frame: {0}")]
    Unsupported(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Pbw(#[from] PbwError),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Root(#[from] RootError),
}

impl From<FreeError> for CanonError {
    fn from(e: FreeError) -> Self {
        CanonError::Pbw(e.into())
    }
}
