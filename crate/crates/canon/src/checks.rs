use qschubert_braid::{t, t_word, BraidError};
use qschubert_freealg::Side;
use qschubert_rootdata::{length_additive, Weight};

use crate::certify::verify_upper_global;
use crate::solve::{Basis, CanonicalElement};
use crate::CanonError;

/// Whether two frames for the same Weyl group element give the same basis of
/// the slice `g`.
pub fn compare_frames(b1: &Basis, b2: &Basis, g: &Weight) -> Result<bool, CanonError> {
    let (f1, f2) = (b1.frame(), b2.frame());
    if f1.word().root_set() != f2.word().root_set() || f1.algebra().datum() != f2.algebra().datum() {
        return Err(CanonError::FrameMismatch);
    }
    let s1 = b1.slice(g)?;
    let s2 = b2.slice(g)?;
    if s1.len() != s2.len() {
        return Ok(false);
    }
    for b in s2.iter() {
        if b1.find(&b.dual)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StabilityReport {
    pub checked: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
}

/// For every `b` of the slice with `d_i b = 0`: `T_i(b)` passes
/// [`verify_upper_global`] and `d_i^(top) T_i(b) = (d_i^op)^(top)(b)`.
pub fn check_ti_stability(basis: &Basis, g: &Weight, i: usize) -> Result<StabilityReport, CanonError> {
    let frame = basis.frame();
    let alg = frame.algebra();
    let mut rep = StabilityReport::default();
    for b in basis.slice(g)?.iter() {
        let x = b.expansion(frame)?;
        let y = match t(alg, i, &x) {
            Ok(y) => y,
            Err(BraidError::DomainViolation(_)) => {
                rep.skipped += 1;
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        rep.checked += 1;
        match verify_upper_global(alg, &y) {
            Ok(c) => {
                if let Some(f) = c.failure() {
                    rep.failures.push(format!("T_{}(b_{:?}): {f}", i + 1, b.a));
                }
            }
            Err(e) => rep.failures.push(format!("T_{}(b_{:?}): {e}", i + 1, b.a)),
        }
        let lhs = alg.partial_top(i, Side::Right, &y)?;
        let rhs = alg.partial_top(i, Side::Left, &x)?;
        if !alg.equal(&lhs, &rhs)? {
            rep.failures.push(format!("top derivations of T_{}(b_{:?}) disagree", i + 1, b.a));
        }
    }
    Ok(rep)
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EmbeddingReport {
    /// Elements of `B(w)` checked against `B(ww')`.
    pub direct: usize,
    /// Elements `T_w(b)`, `b` in `B(w')`, checked against `B(ww')`.
    pub twisted: usize,
    pub failures: Vec<String>,
}

/// `B(w) ⊂ B(ww')` and `T_w(B(w')) ⊂ B(ww')` on the slice `g` of the two
/// smaller cells. `bww` must be the basis of the concatenated word.
pub fn check_embedding(bw: &Basis, bw2: &Basis, bww: &Basis, g: &Weight) -> Result<EmbeddingReport, CanonError> {
    let alg = bww.frame().algebra();
    let (w, w2) = (bw.frame().word(), bw2.frame().word());
    if !length_additive(alg.datum(), w, w2) {
        return Err(CanonError::LengthNotAdditive);
    }
    let joined: Vec<usize> = w.letters().iter().chain(w2.letters()).copied().collect();
    if bww.frame().word().letters() != joined.as_slice() {
        return Err(CanonError::InvalidArgument(format!("frame {} is not {w}·{w2}", bww.frame().word())));
    }
    let mut rep = EmbeddingReport::default();
    for b in bw.slice(g)?.iter() {
        rep.direct += 1;
        if bww.find(&b.dual)?.is_none() {
            rep.failures.push(format!("b_{:?} of B({w}) not in B({})", b.a, bww.frame().word()));
        }
    }
    for b in bw2.slice(g)?.iter() {
        rep.twisted += 1;
        let y = t_word(alg, w.letters(), &b.expansion(bw2.frame())?)?;
        if bww.find(&alg.dual(&y)?)?.is_none() {
            rep.failures.push(format!("T_w(b_{:?}) of B({w2}) not in B({})", b.a, bww.frame().word()));
        }
    }
    Ok(rep)
}

/// `B(w) ∩ B(w')^*` on the slice `g`: the `b` of `B(w)` whose star lies in
/// `B(w')`.
pub fn bi_schubert(bw: &Basis, bw2: &Basis, g: &Weight) -> Result<Vec<CanonicalElement>, CanonError> {
    let mut out = Vec::new();
    for b in bw.slice(g)?.iter() {
        if bw2.find(&b.dual.star())?.is_some() {
            out.push(b.clone());
        }
    }
    Ok(out)
}
