use std::collections::BTreeMap;

use qschubert_coeff::{gauss_binom, Laurent, Rat};
use qschubert_freealg::{Dual, NcElement};
use qschubert_pbw::{Exponent, PbwFrame, PbwVector};
use qschubert_rootdata::Weight;

use crate::CanonError;

/// A frame in which exactly one node occurs twice, at positions `r < r2`
/// (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingleRepetition {
    pub r: usize,
    pub r2: usize,
    pub node: usize,
    /// `n = -sum_{r<k<r2} a_{i_k i} e_k`.
    pub n: Exponent,
}

/// Detects a single repetition; checks `alpha^(r) + alpha^(r2) = |n|`.
pub fn single_repetition(frame: &PbwFrame) -> Result<Option<SingleRepetition>, CanonError> {
    let l = frame.word().letters();
    let mut pairs = Vec::new();
    for r in 0..l.len() {
        for r2 in r + 1..l.len() {
            if l[r] == l[r2] {
                pairs.push((r, r2));
            }
        }
    }
    let [(r, r2)] = pairs[..] else {
        return Ok(None);
    };
    let i = l[r];
    let d = frame.algebra().datum();
    let mut n = vec![0u32; l.len()];
    for k in r + 1..r2 {
        n[k] = (-d.a(l[k], i)) as u32;
    }
    let lhs = &frame.roots()[r] + &frame.roots()[r2];
    if frame.weight_of(&n) != lhs {
        return Err(CanonError::Inconsistency(format!("degree identity fails for {}", frame.word())));
    }
    Ok(Some(SingleRepetition { r, r2, node: i, n }))
}

/// The closed-form basis of the slice `g` as `(label, coordinates)` pairs in
/// slice order: `{X^a}` for repetition-free words, and
/// `q^{l Lambda(c, e_r + e_r2)/2} X^c Y^l` labelled `c + l(e_r + e_r2)` for
/// a single repetition, where `Y = X^{e_r + e_r2} - q_i^-1 X^n`.
pub fn closed_form_basis(frame: &PbwFrame, g: &Weight) -> Result<Vec<(Exponent, PbwVector)>, CanonError> {
    let slice = frame.slice(g);
    if frame.word().is_repetition_free() {
        return Ok(slice.exps.iter().map(|a| (a.clone(), PbwVector::unit(a.clone()))).collect());
    }
    let Some(rep) = single_repetition(frame)? else {
        return Err(CanonError::Unsupported(format!("word {} repeats more than one letter", frame.word())));
    };
    let alg = frame.algebra();
    let pair = frame.e(rep.r + 1).iter().zip(frame.e(rep.r2 + 1)).map(|(x, y)| x + y).collect::<Exponent>();
    let mut y = PbwVector::unit(pair.clone());
    y.add_term(&rep.n, &-Rat::v(-alg.datum().qi_scale(rep.node)));
    let y = frame.dual_of(&y, &frame.weight_of(&pair))?;
    let mut powers: BTreeMap<u32, Dual> = BTreeMap::new();
    powers.insert(0, alg.dual_scalar(Rat::one()));
    let mut out = Vec::with_capacity(slice.len());
    for a in &slice.exps {
        let l = a[rep.r].min(a[rep.r2]);
        while powers.len() <= l as usize {
            let k = powers.len() as u32;
            let next = alg.shuffle(&powers[&(k - 1)], &y)?;
            powers.insert(k, next);
        }
        let c: Exponent = a.iter().zip(&pair).map(|(x, p)| x - l * p).collect();
        let lam = l as i64 * frame.lambda_form(&c, &pair);
        let d = alg.shuffle(&frame.pbw_dual(&c)?, &powers[&l])?.scale(&Rat::v(lam as i32));
        out.push((a.clone(), frame.expand_dual(&d)?));
    }
    Ok(out)
}

/// Checks the expansion of `X^a` in the closed-form basis:
/// `X^a = sum_{k+l=m} q_i^{-k(k+|a_r-a_r2|)} [m choose k]_{q_i^-2} b(a - m(e_r+e_r2) + k n, l)`
/// with `m = min(a_r, a_r2)`.
pub fn transition_check(frame: &PbwFrame, a: &[u32]) -> Result<bool, CanonError> {
    let Some(rep) = single_repetition(frame)? else {
        return Err(CanonError::Unsupported(format!("word {} is not single-repetition", frame.word())));
    };
    let g = frame.weight_of(a);
    let basis: BTreeMap<Exponent, PbwVector> = closed_form_basis(frame, &g)?.into_iter().collect();
    let s = frame.algebra().datum().qi_scale(rep.node);
    let (ar, ar2) = (a[rep.r], a[rep.r2]);
    let m = ar.min(ar2);
    let diff = ar.abs_diff(ar2) as i32;
    let mut sum = PbwVector::default();
    for k in 0..=m {
        let l = m - k;
        let mut label = a.to_vec();
        label[rep.r] -= m;
        label[rep.r2] -= m;
        for (x, nk) in label.iter_mut().zip(&rep.n) {
            *x += k * nk;
        }
        label[rep.r] += l;
        label[rep.r2] += l;
        let Some(b) = basis.get(&label) else {
            return Ok(false);
        };
        let coef = &Laurent::v(-s * k as i32 * (k as i32 + diff))
            * &gauss_binom(m as i64, k as i64, -2 * s).map_err(|e| CanonError::InvalidArgument(e.to_string()))?;
        let coef = Rat::from(coef);
        for (e, c) in &b.coords {
            sum.add_term(e, &(&coef * c));
        }
    }
    Ok(sum == PbwVector::unit(a.to_vec()))
}

/// `Y = q^{(alpha^(r), alpha^(r2))/2} X_r X_r2 - q_i^-1 X^n` for a
/// single-repetition frame.
pub fn y_element(frame: &PbwFrame) -> Result<NcElement, CanonError> {
    let Some(rep) = single_repetition(frame)? else {
        return Err(CanonError::Unsupported(format!("word {} is not single-repetition", frame.word())));
    };
    let d = frame.algebra().datum();
    let (xr, xr2) = (&frame.root_vectors()[rep.r], &frame.root_vectors()[rep.r2]);
    let p = d.pairing(&frame.roots()[rep.r], &frame.roots()[rep.r2]) as i32;
    let xn = frame.pbw_monomial(&rep.n, false)?;
    Ok(xr.mul(xr2).shift(p).sub(&xn.shift(-d.qi_scale(rep.node))))
}
