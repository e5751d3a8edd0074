//! The operators `E_i` and `E_i^op` built from divided powers, the
//! sl2-string decomposition of `ker d_i`, the symmetries `T_i`, `T_i^-1`,
//! root vectors, and Clebsch-Gordan coefficients.

use std::collections::BTreeMap;

use qschubert_coeff::{angle_fact, binom, round_fact, round_int, Laurent, Rat};
use qschubert_freealg::{Algebra, FreeError, NcElement, Side};
use qschubert_rootdata::ReducedWord;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("element is not in the kernel of the {0}")]
    NotInKernel(&'static str),
    #[error("argument outside the domain of {0}")]
    DomainViolation(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Free(#[from] FreeError),
}

/// `plus` is the operator itself, `op` its conjugate by `*`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Plus,
    Op,
}

/// `E_i^<n> = E_i^n / <n>_{q_i}!`.
pub fn divided_gen(alg: &Algebra, i: usize, n: u32) -> NcElement {
    let f = angle_fact(n as i64, alg.datum().qi_scale(i)).expect("valid factorial");
    alg.gen(i).pow(n).scale(&Rat::new(Laurent::one(), f).expect("nonzero"))
}

/// The divided power `E_i^(r)` of the operator, applied to `x` componentwise:
/// `sum_{r'+r''=r} (-1)^{r'} q_i^{(r+|x|-1)(r'-r'')/2} E_i^<r'> x E_i^<r''>`
/// with `|x| = (alpha_i^vee, deg x)`.
pub fn ul_e(alg: &Algebra, i: usize, variant: Variant, r: u32, x: &NcElement) -> NcElement {
    if variant == Variant::Op {
        return ul_e(alg, i, Variant::Plus, r, &x.star()).star();
    }
    let d = alg.datum();
    let di = d.d(i);
    let pows: Vec<NcElement> = (0..=r).map(|n| divided_gen(alg, i, n)).collect();
    let mut out = NcElement::zero(d);
    for (g, comp) in x.components() {
        let h = d.coroot_pairing(i, &g);
        for r1 in 0..=r {
            let r2 = r - r1;
            let e = (r as i64 + h - 1) * (r1 as i64 - r2 as i64) * di;
            let sign = if r1 % 2 == 0 { 1 } else { -1 };
            let c = Rat::v(e as i32) * Rat::from(sign);
            out = out.add(&pows[r1 as usize].mul(&comp).mul(&pows[r2 as usize]).scale(&c));
        }
    }
    out
}

/// `x = sum_r (E_i^op)^(r)(x_r)` with each `x_r` killed by `d_i` and `d_i^op`.
#[derive(Debug, Clone)]
pub struct Sl2Decomposition {
    pub i: usize,
    pub parts: BTreeMap<u32, NcElement>,
}

impl Sl2Decomposition {
    /// `sum_r (E_i^op)^(r)(x_r)`.
    pub fn reassemble(&self, alg: &Algebra) -> NcElement {
        self.parts
            .iter()
            .fold(NcElement::zero(alg.datum()), |acc, (&r, x)| acc.add(&ul_e(alg, self.i, Variant::Op, r, x)))
    }
}

fn require_kernel(alg: &Algebra, i: usize, side: Side, x: &NcElement) -> Result<bool, BraidError> {
    Ok(alg.is_zero(&x.partial(i, side))?)
}

/// Decomposes a homogeneous `x` in `ker d_i` into sl2 lowest-weight pieces.
pub fn sl2_decompose(alg: &Algebra, i: usize, x: &NcElement) -> Result<Sl2Decomposition, BraidError> {
    if !require_kernel(alg, i, Side::Right, x)? {
        return Err(BraidError::NotInKernel("right derivation"));
    }
    let mut parts = BTreeMap::new();
    let comps = x.components();
    if comps.len() > 1 {
        return Err(FreeError::NotHomogeneous.into());
    }
    let Some((g, _)) = comps.into_iter().next() else {
        return Ok(Sl2Decomposition { i, parts });
    };
    let h = alg.datum().coroot_pairing(i, &g);
    let scale = alg.datum().qi_scale(i);
    let mut cur = x.clone();
    while !alg.is_zero(&cur)? {
        let n = alg.ell(i, Side::Left, &cur)?;
        let b = binom(2 * n as i64 - h, n as i64, scale).map_err(|e| BraidError::Internal(e.to_string()))?;
        if b.is_zero() {
            return Err(BraidError::Internal("vanishing binomial in sl2 decomposition".into()));
        }
        let xn = cur.partial_divided(i, Side::Left, n).scale(&Rat::new(Laurent::one(), b).unwrap());
        cur = cur.sub(&ul_e(alg, i, Variant::Op, n, &xn));
        if parts.insert(n, xn).is_some() {
            return Err(BraidError::Internal("sl2 decomposition did not terminate".into()));
        }
    }
    Ok(Sl2Decomposition { i, parts })
}

/// `T_i(x) = sum_r E_i^(r - |x|)(x_r)` on `ker d_i`.
pub fn t(alg: &Algebra, i: usize, x: &NcElement) -> Result<NcElement, BraidError> {
    if !require_kernel(alg, i, Side::Right, x)? {
        return Err(BraidError::DomainViolation(format!("T_{} needs d_{} x = 0", i + 1, i + 1)));
    }
    let mut out = NcElement::zero(alg.datum());
    for (g, comp) in x.components() {
        let h = alg.datum().coroot_pairing(i, &g);
        let dec = sl2_decompose(alg, i, &comp)?;
        for (r, xr) in &dec.parts {
            let k = *r as i64 - h;
            if k < 0 {
                return Err(BraidError::Internal("negative string exponent".into()));
            }
            out = out.add(&ul_e(alg, i, Variant::Plus, k as u32, xr));
        }
    }
    Ok(out)
}

/// `T_i^-1(y) = T_i(y*)*` on `ker d_i^op`.
pub fn t_inv(alg: &Algebra, i: usize, y: &NcElement) -> Result<NcElement, BraidError> {
    if !require_kernel(alg, i, Side::Left, y)? {
        return Err(BraidError::DomainViolation(format!("T_{}^-1 needs d_{}^op y = 0", i + 1, i + 1)));
    }
    Ok(t(alg, i, &y.star())?.star())
}

/// `T_{i_1} ... T_{i_k}(x)`, innermost last.
pub fn t_word(alg: &Algebra, letters: &[usize], x: &NcElement) -> Result<NcElement, BraidError> {
    letters.iter().rev().try_fold(x.clone(), |acc, &i| t(alg, i, &acc))
}

/// `X_k = T_{i_1} ... T_{i_{k-1}}(E_{i_k})` for 1-based `k`.
pub fn root_vector(alg: &Algebra, word: &ReducedWord, k: usize) -> Result<NcElement, BraidError> {
    if k == 0 || k > word.len() {
        return Err(BraidError::InvalidArgument(format!("root index {k} out of range")));
    }
    let l = word.letters();
    t_word(alg, &l[..k - 1], &alg.gen(l[k - 1]))
}

/// `E_{j i^l} = binom(-a_ij, l)_{q_i}^-1 (E_i^op)^(l)(E_j)`.
pub fn e_ji_l(alg: &Algebra, i: usize, j: usize, l: u32) -> Result<NcElement, BraidError> {
    let d = alg.datum();
    if i == j || i >= d.rank() || j >= d.rank() {
        return Err(BraidError::InvalidArgument("need distinct nodes i, j".into()));
    }
    let top = -d.a(i, j);
    if l as i64 > top {
        return Err(BraidError::InvalidArgument(format!("l must lie in 0..={top}")));
    }
    let b = binom(top, l as i64, d.qi_scale(i)).unwrap();
    Ok(ul_e(alg, i, Variant::Op, l, &alg.gen(j)).scale(&Rat::new(Laurent::one(), b).unwrap()))
}

/// `C_{r;t',t''}` for the tensor product of strings of lengths `m` and `n`.
///
/// The formula involves half powers of its variable; the result is returned
/// as a Laurent polynomial in the square root of that variable, so the
/// variable itself is `v^2` and `v -> v^-1` is the usual bar.
pub fn cg_coefficient(r: i64, t1: i64, t2: i64, m: i64, n: i64) -> Result<Laurent, BraidError> {
    if [r, t1, t2, m, n].iter().any(|&x| x < 0) || r > m.min(n) || t1 > m || t2 > n {
        return Err(BraidError::InvalidArgument(format!(
            "need r <= min(m,n), t' <= m, t'' <= n; got r={r}, t'={t1}, t''={t2}, m={m}, n={n}"
        )));
    }
    let fact_ratio = |hi: i64, lo: i64| -> Laurent {
        // (hi)! / (lo)! for lo <= hi
        ((lo + 1)..=hi).fold(Laurent::one(), |acc, s| &acc * &round_int(s, 2))
    };
    let mut sum = Laurent::zero();
    for k in 0..=r {
        let l = r - k;
        let e = (m * t2 - n * t1) + 2 * (l * t1 - k * t2) + (k - l) * (1 + m + n - r);
        let c = &(&fact_ratio(n - l, n - r) * &fact_ratio(m - k, m - r))
            * &(&binom(t1, k, 2).unwrap() * &binom(t2, l, 2).unwrap());
        let c = if l % 2 == 0 { c } else { -c };
        sum.add_scaled(&c, e as i32);
    }
    Ok(sum)
}

/// The symmetric quantum integer `(n)` in the variable of [`cg_coefficient`].
pub fn cg_int(n: i64) -> Laurent {
    round_int(n, 2)
}

/// `(n)!` in the variable of [`cg_coefficient`].
pub fn cg_fact(n: i64) -> Laurent {
    round_fact(n, 2).expect("nonnegative")
}

#[cfg(test)]
mod tests {
    use super::*;
    use qschubert_rootdata::{make_reduced_word, RootDatum};

    fn alg(name: &str) -> Algebra {
        Algebra::new(RootDatum::preset(name).unwrap())
    }

    fn t12(alg: &Algebra) -> NcElement {
        // (q^{1/2} E2 E1 - q^{-1/2} E1 E2) / (q - q^-1)
        let d = alg.datum();
        let den = Rat::new(Laurent::one(), qschubert_coeff::angle_int(1, 2)).unwrap();
        NcElement::from_terms(d, [(vec![1, 0], Rat::v(1)), (vec![0, 1], -Rat::v(-1))]).scale(&den)
    }

    #[test]
    fn ul_e_example() {
        let a = alg("A2");
        let x = ul_e(&a, 0, Variant::Plus, 1, &a.gen(1));
        assert!(a.equal(&x, &t12(&a)).unwrap());
        let y = NcElement::word(a.datum(), &[0, 1]);
        assert_eq!(ul_e(&a, 0, Variant::Plus, 0, &y), y);
    }

    #[test]
    fn decomposition_examples() {
        let a = alg("A2");
        let dec = sl2_decompose(&a, 0, &a.gen(1)).unwrap();
        assert_eq!(dec.parts.len(), 1);
        assert_eq!(dec.parts[&0], a.gen(1));
        let x = ul_e(&a, 0, Variant::Op, 1, &a.gen(1));
        let dec = sl2_decompose(&a, 0, &x).unwrap();
        assert_eq!(dec.parts.keys().copied().collect::<Vec<_>>(), vec![1]);
        assert!(a.equal(&dec.parts[&1], &a.gen(1)).unwrap());
        let bad = NcElement::word(a.datum(), &[0, 1]);
        assert!(matches!(sl2_decompose(&a, 0, &bad), Err(BraidError::NotInKernel(_))));
    }

    #[test]
    fn t_examples() {
        let a = alg("A2");
        assert!(a.equal(&t(&a, 0, &a.gen(1)).unwrap(), &t12(&a)).unwrap());
        assert!(matches!(t(&a, 0, &a.gen(0)), Err(BraidError::DomainViolation(_))));
        let c = alg("C2");
        let x = t(&c, 0, &c.gen(1)).unwrap();
        assert_eq!(x.degree().unwrap().0, vec![2, 1]);
    }

    #[test]
    fn root_vector_examples() {
        let a = alg("A2");
        let w = make_reduced_word(a.datum(), &[0, 1, 0]).unwrap();
        assert!(a.equal(&root_vector(&a, &w, 3).unwrap(), &a.gen(1)).unwrap());
        assert_eq!(root_vector(&a, &w, 1).unwrap(), a.gen(0));
    }

    #[test]
    fn e_ji_l_examples() {
        let a = alg("A2");
        assert_eq!(e_ji_l(&a, 0, 1, 0).unwrap(), a.gen(1));
        let expect = t12(&a).star();
        assert!(a.equal(&e_ji_l(&a, 0, 1, 1).unwrap(), &expect).unwrap());
        assert!(e_ji_l(&a, 0, 1, 2).is_err());
        let c = alg("C2");
        for l in 0..=2 {
            assert!(e_ji_l(&c, 0, 1, l).is_ok());
        }
        assert!(e_ji_l(&c, 0, 1, 3).is_err());
    }

    #[test]
    fn cg_small_cases() {
        assert!(cg_coefficient(0, 0, 0, 0, 0).unwrap().is_one());
        assert!(cg_coefficient(0, 0, 0, 3, 2).unwrap().is_one());
        let lhs = cg_coefficient(1, 1, 1, 1, 1).unwrap();
        let rhs = -cg_coefficient(1, 0, 0, 1, 1).unwrap().bar();
        assert_eq!(lhs, rhs);
        assert!(cg_coefficient(2, 0, 0, 1, 3).is_err());
    }
}
