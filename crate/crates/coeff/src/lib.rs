//! Exact coefficients for quantum group computations.
//!
//! Everything lives in `Z[v, v^-1]` with `v = q^{1/2}`, or in its fraction
//! field. Half-integer powers of `q` become integer powers of `v`.

mod error;
mod laurent;
mod member;
mod poly;
mod qcomb;
mod rat;
mod text;

pub use error::CoeffError;
pub use laurent::Laurent;
pub use member::{membership, Ring};
pub use qcomb::{angle_fact, angle_int, binom, gauss_binom, q_combinatorics, round_fact, round_int, QKind};
pub use rat::{arith, as_laurent, bar_conj, Op, Rat};
pub use text::parse_rat;

pub use num_bigint::BigInt;
