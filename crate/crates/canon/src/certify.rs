use qschubert_coeff::{membership, Rat, Ring};
use qschubert_freealg::{Algebra, Dual, NcElement, Side};
use qschubert_pbw::PbwFrame;
use qschubert_rootdata::Weight;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::solve::{norm_from_coords, CanonicalElement};
use crate::CanonError;

/// The derivation used by the string cascade.
pub const STRING_SIDE: Side = Side::Right;

const ALT_PATHS: usize = 3;

/// Evidence that an element lies in the upper global basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub degree: Weight,
    pub lattice: bool,
    pub bar_invariant: bool,
    /// `mu(deg b)^-1 <<b, b>>`.
    pub norm: Rat,
    pub norm_ok: bool,
    pub string: Vec<(usize, u32)>,
    /// Terminal scalar of the greedy cascade.
    pub scalar: Rat,
    /// Random alternative cascades end at the same scalar.
    pub paths_agree: bool,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.lattice && self.bar_invariant && self.norm_ok && self.paths_agree && self.scalar.is_one()
    }

    /// The first failed condition, if any.
    pub fn failure(&self) -> Option<String> {
        if !self.lattice {
            Some("not in the integral lattice".into())
        } else if !self.bar_invariant {
            Some("not bar-invariant".into())
        } else if !self.norm_ok {
            Some(format!("norm {} not in 1 + q^-1 Z[q^-1]", self.norm))
        } else if !self.paths_agree {
            Some("string cascades disagree".into())
        } else if !self.scalar.is_one() {
            Some(format!("string scalar {}", self.scalar))
        } else {
            None
        }
    }
}

/// Greedy cascade: repeatedly apply `d_i^(top)` for the smallest node `i`
/// with `l_i > 0`. Returns the string and the terminal scalar.
pub fn string_cascade(alg: &Algebra, d: &Dual) -> Result<(Vec<(usize, u32)>, Rat), CanonError> {
    cascade(alg, d, |c| c[0])
}

fn cascade(
    alg: &Algebra,
    d: &Dual,
    mut pick: impl FnMut(&[usize]) -> usize,
) -> Result<(Vec<(usize, u32)>, Rat), CanonError> {
    if d.is_zero() {
        return Err(CanonError::InvalidArgument("zero element has no string".into()));
    }
    let mut cur = d.clone();
    let mut string = Vec::new();
    while !cur.degree().is_zero() {
        let cands: Vec<usize> = (0..alg.rank()).filter(|&i| alg.ell_dual(&cur, i, STRING_SIDE) > 0).collect();
        if cands.is_empty() {
            return Err(CanonError::InvalidArgument("cascade stalled".into()));
        }
        let i = pick(&cands);
        let l = alg.ell_dual(&cur, i, STRING_SIDE);
        cur = alg.partial_dual(&cur, i, STRING_SIDE, l)?.expect("top derivation stays in Q+");
        string.push((i, l));
    }
    Ok((string, cur.vals()[0].clone()))
}

fn certify_parts(alg: &Algebra, d: &Dual, bb: &Rat, seed: u64) -> Result<Certificate, CanonError> {
    let g = d.degree().clone();
    let norm = bb.div_laurent(&alg.datum().mu(&g));
    let norm_ok = membership(&norm, Ring::OnePlusKminus);
    let (string, scalar) = string_cascade(alg, d)?;
    if !(scalar.is_one() || (-&scalar).is_one()) {
        return Err(CanonError::NotSigned(scalar.to_string()));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut paths_agree = true;
    for _ in 0..ALT_PATHS {
        let (_, s) = cascade(alg, d, |c| c[rng.gen_range(0..c.len())])?;
        paths_agree &= s == scalar;
    }
    Ok(Certificate {
        degree: g,
        lattice: alg.lattice_dual(d),
        bar_invariant: &d.bar() == d,
        norm,
        norm_ok,
        string,
        scalar,
        paths_agree,
    })
}

/// Certifies a homogeneous nonzero `b`: lattice membership, bar invariance,
/// the norm condition and the string scalar.
pub fn verify_upper_global(alg: &Algebra, b: &NcElement) -> Result<Certificate, CanonError> {
    verify_upper_global_seeded(alg, b, 0)
}

/// [`verify_upper_global`] with a seed for the alternative cascades.
pub fn verify_upper_global_seeded(alg: &Algebra, b: &NcElement, seed: u64) -> Result<Certificate, CanonError> {
    if b.degree().is_none() {
        return Err(CanonError::InvalidArgument("element is zero or not homogeneous".into()));
    }
    let d = alg.dual(b)?;
    if d.is_zero() {
        return Err(CanonError::InvalidArgument("element is zero".into()));
    }
    let bb = alg.pair_dual(&d, b);
    certify_parts(alg, &d, &bb, seed)
}

/// Certifies a solved element; the norm is taken from its PBW coordinates.
pub fn certify(frame: &PbwFrame, b: &CanonicalElement) -> Result<Certificate, CanonError> {
    let alg = frame.algebra();
    let norm = norm_from_coords(frame, &b.coords, &b.dual)?;
    let bb = norm.mul_laurent(&alg.datum().mu(&b.degree));
    certify_parts(alg, &b.dual, &bb, b.a.iter().fold(0u64, |h, &x| h.wrapping_mul(31).wrapping_add(x as u64)))
}

/// The string of an element of `B^up`.
pub fn string_name(alg: &Algebra, b: &NcElement) -> Result<Vec<(usize, u32)>, CanonError> {
    let cert = match verify_upper_global(alg, b) {
        Ok(c) => c,
        Err(CanonError::NotSigned(s)) => return Err(CanonError::NotCanonical(format!("string scalar {s}"))),
        Err(e) => return Err(e),
    };
    match cert.failure() {
        None => Ok(cert.string),
        Some(f) => Err(CanonError::NotCanonical(f)),
    }
}
