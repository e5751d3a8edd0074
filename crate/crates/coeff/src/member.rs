use crate::Rat;

/// Subrings and subsets of `Q(v)` used in integrality conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ring {
    /// `Z[q, q^-1]`: even powers of `v` only.
    A0,
    /// `Z[v, v^-1]`.
    A,
    /// `q^-1 Z[q^-1]`.
    Kminus,
    /// `1 + q^-1 Z[q^-1]`.
    OnePlusKminus,
}

pub fn membership(a: &Rat, set: Ring) -> bool {
    let Some(p) = a.as_laurent() else {
        return false;
    };
    match set {
        Ring::A => true,
        Ring::A0 => p.exponents_even(),
        Ring::Kminus => p.exponents_even() && (p.is_zero() || p.high() <= -2),
        Ring::OnePlusKminus => membership(&(a - &Rat::one()), Ring::Kminus),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Laurent;

    #[test]
    fn examples() {
        let a: Rat = Laurent::from_terms([(-2, 1), (-6, -1)]).into();
        assert!(membership(&a, Ring::Kminus));
        assert!(!membership(&Rat::v(1), Ring::A0));
        let b: Rat = Laurent::from_terms([(0, 1), (-2, -1)]).into();
        assert!(membership(&b, Ring::OnePlusKminus));
        assert!(!membership(&b, Ring::Kminus));
        assert!(membership(&Rat::zero(), Ring::Kminus));
        let half = Rat::new(Laurent::one(), Laurent::from_int(2)).unwrap();
        assert!(!membership(&half, Ring::A));
    }
}
