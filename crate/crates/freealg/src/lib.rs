//! Elements of `U_q(n+)` as linear combinations of words, and the normalized
//! bilinear form `<<., .>>` that decides equality.
//!
//! The main engine is the dual vector `w -> <<x, E_w>>` over all words `w` of
//! a degree. It is injective, turns products into twisted shuffles, and makes
//! the skew derivations, bar and star cheap.

mod algebra;
mod element;
mod exec;
mod space;
mod text;

pub use algebra::{Algebra, FreeError, Limits};
pub use element::{NcElement, Side};
pub use exec::Exec;
pub use space::{DegreeSpace, Dual};

/// A word over the node set, 0-based.
pub type Word = Vec<u8>;
