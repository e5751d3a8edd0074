//! Quantum integers, factorials and binomials.
//!
//! Every function takes a `scale` `s` and returns the usual expression in `v`
//! after the substitution `v -> v^s`. The value in the variable `q_i = v^{2 d_i}`
//! is obtained with `s = 2 d_i`.

use crate::{CoeffError, Laurent};

/// `<n> = v^n - v^-n`.
pub fn angle_int(n: i64, scale: i32) -> Laurent {
    let e = n as i32 * scale;
    &Laurent::v(e) - &Laurent::v(-e)
}

/// `(n) = <n>/<1> = v^{n-1} + v^{n-3} + ... + v^{1-n}`.
pub fn round_int(n: i64, scale: i32) -> Laurent {
    if n < 0 {
        return -round_int(-n, scale);
    }
    Laurent::from_terms((0..n).map(|k| ((n - 1 - 2 * k) as i32 * scale, 1)))
}

fn check_scale(scale: i32) -> Result<(), CoeffError> {
    if scale == 0 {
        Err(CoeffError::InvalidArgument("scale must be nonzero".into()))
    } else {
        Ok(())
    }
}

fn check_nonneg(n: i64, what: &str) -> Result<(), CoeffError> {
    if n < 0 {
        Err(CoeffError::InvalidArgument(format!("{what} must be nonnegative, got {n}")))
    } else {
        Ok(())
    }
}

/// `<n>! = <1><2>...<n>`.
pub fn angle_fact(n: i64, scale: i32) -> Result<Laurent, CoeffError> {
    check_scale(scale)?;
    check_nonneg(n, "factorial argument")?;
    Ok((1..=n).fold(Laurent::one(), |acc, t| &acc * &angle_int(t, scale)))
}

/// `(n)! = (1)(2)...(n)`.
pub fn round_fact(n: i64, scale: i32) -> Result<Laurent, CoeffError> {
    check_scale(scale)?;
    check_nonneg(n, "factorial argument")?;
    Ok((1..=n).fold(Laurent::one(), |acc, t| &acc * &round_int(t, scale)))
}

/// Symmetric binomial `prod_{t<k} (n-t) / (k)!`, for any integer `n`.
pub fn binom(n: i64, k: i64, scale: i32) -> Result<Laurent, CoeffError> {
    check_scale(scale)?;
    check_nonneg(k, "binomial lower argument")?;
    let top = (0..k).fold(Laurent::one(), |acc, t| &acc * &round_int(n - t, scale));
    top.div_exact(&round_fact(k, scale)?).ok_or_else(|| CoeffError::InvalidArgument("binomial is not integral".into()))
}

/// One-sided Gaussian binomial `prod_{t<n} [m-t]/[t+1]` with `[k] = 1 + v + ... + v^{k-1}`.
pub fn gauss_binom(m: i64, n: i64, scale: i32) -> Result<Laurent, CoeffError> {
    check_scale(scale)?;
    check_nonneg(m, "Gaussian binomial upper argument")?;
    check_nonneg(n, "Gaussian binomial lower argument")?;
    if n > m {
        return Ok(Laurent::zero());
    }
    let bracket = |k: i64| Laurent::from_terms((0..k).map(|l| (l as i32, 1)));
    let mut top = Laurent::one();
    let mut bot = Laurent::one();
    for t in 0..n {
        top = &top * &bracket(m - t);
        bot = &bot * &bracket(t + 1);
    }
    let r =
        top.div_exact(&bot).ok_or_else(|| CoeffError::InvalidArgument("Gaussian binomial is not integral".into()))?;
    Ok(r.subs(scale))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QKind {
    AngleInt,
    RoundInt,
    AngleFact,
    RoundFact,
    Binom,
    GaussBinom,
}

/// Dispatches on `kind`; `args` holds one integer for the unary kinds and two
/// for the binomials.
pub fn q_combinatorics(kind: QKind, args: &[i64], scale: i32) -> Result<Laurent, CoeffError> {
    check_scale(scale)?;
    let want = match kind {
        QKind::Binom | QKind::GaussBinom => 2,
        _ => 1,
    };
    if args.len() != want {
        return Err(CoeffError::InvalidArgument(format!("{kind:?} takes {want} argument(s), got {}", args.len())));
    }
    match kind {
        QKind::AngleInt => Ok(angle_int(args[0], scale)),
        QKind::RoundInt => Ok(round_int(args[0], scale)),
        QKind::AngleFact => angle_fact(args[0], scale),
        QKind::RoundFact => round_fact(args[0], scale),
        QKind::Binom => binom(args[0], args[1], scale),
        QKind::GaussBinom => gauss_binom(args[0], args[1], scale),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(round_int(2, 1), Laurent::from_terms([(1, 1), (-1, 1)]));
        assert_eq!(gauss_binom(2, 1, 1).unwrap(), Laurent::from_terms([(0, 1), (1, 1)]));
        assert_eq!(binom(-1, 1, 1).unwrap(), Laurent::from_int(-1));
        assert_eq!(round_int(0, 3), Laurent::zero());
    }

    #[test]
    fn factorial_identity() {
        for n in 0..=8 {
            let lhs = round_fact(n, 1).unwrap();
            let rhs = angle_fact(n, 1).unwrap().div_exact(&angle_int(1, 1).pow(n as u32)).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn gauss_binom_positive() {
        for m in 0..=10 {
            for n in 0..=m {
                let g = gauss_binom(m, n, 1).unwrap();
                assert!(g.coeff(0) == 1.into());
                assert!(g.low() == 0);
                assert!(g.terms().all(|(_, c)| *c > 0.into()));
            }
        }
    }

    #[test]
    fn binom_symmetry_and_negative_upper() {
        for n in 0..8 {
            for k in 0..=n {
                assert_eq!(binom(n, k, 2).unwrap(), binom(n, n - k, 2).unwrap());
            }
        }
        // binom(-n, k) = (-1)^k binom(n+k-1, k)
        for n in 1..5 {
            for k in 0..5 {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                assert_eq!(binom(-n, k, 1).unwrap(), binom(n + k - 1, k, 1).unwrap().scale(&sign.into()));
            }
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(angle_fact(-1, 1).is_err());
        assert!(q_combinatorics(QKind::Binom, &[3], 1).is_err());
        assert!(q_combinatorics(QKind::RoundInt, &[3], 0).is_err());
    }
}
