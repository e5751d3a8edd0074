use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::poly::primitive_gcd;
use crate::{CoeffError, Laurent};

/// An element of `Q(v)` as a reduced fraction of Laurent polynomials.
///
/// Canonical form: `den = c * p` where `p` has lowest exponent 0, positive
/// leading coefficient and content 1; `num` and `p` share no polynomial factor
/// and `c` is coprime to the content of `num`. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRat")]
pub struct Rat {
    num: Laurent,
    den: Laurent,
}

#[derive(Deserialize)]
struct RawRat {
    num: Laurent,
    den: Laurent,
}

impl TryFrom<RawRat> for Rat {
    type Error = CoeffError;
    fn try_from(r: RawRat) -> Result<Self, CoeffError> {
        Rat::new(r.num, r.den)
    }
}

impl Rat {
    pub fn zero() -> Self {
        Rat { num: Laurent::zero(), den: Laurent::one() }
    }

    pub fn one() -> Self {
        Rat { num: Laurent::one(), den: Laurent::one() }
    }

    pub fn from_int<T: Into<BigInt>>(c: T) -> Self {
        Laurent::from_int(c).into()
    }

    /// `v^e`.
    pub fn v(e: i32) -> Self {
        Laurent::v(e).into()
    }

    pub fn new(num: Laurent, den: Laurent) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn num(&self) -> &Laurent {
        &self.num
    }

    pub fn den(&self) -> &Laurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value lies in `Z[v, v^-1]`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&Laurent> {
        self.is_laurent().then_some(&self.num)
    }

    fn normalize(mut num: Laurent, mut den: Laurent) -> Rat {
        if num.is_zero() {
            return Rat::zero();
        }
        let e = den.low();
        if e != 0 {
            num.shift_in_place(-e);
            den.shift_in_place(-e);
        }
        if den.as_mono().is_none() {
            if let Some(q) = num.div_exact(&den) {
                return Rat { num: q, den: Laurent::one() };
            }
            let g = primitive_gcd(&num, &den);
            if !g.is_one() {
                num = num.div_exact(&g).expect("gcd divides numerator");
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        }
        let g = num.content().gcd(&den.content());
        if !g.is_one() {
            num = num.div_int_exact(&g);
            den = den.div_int_exact(&g);
        }
        if den.leading().is_some_and(|c| c.is_negative()) {
            num = -num;
            den = -den;
        }
        Rat { num, den }
    }

    pub fn bar(&self) -> Rat {
        if self.is_laurent() {
            return self.num.bar().into();
        }
        Self::normalize(self.num.bar(), self.den.bar())
    }

    /// Multiplication by `v^e`.
    pub fn shift(&self, e: i32) -> Rat {
        Rat { num: self.num.shift(e), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Rat, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &Rat) -> Result<Rat, CoeffError> {
        if o.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        if o.is_laurent() && self.is_laurent() {
            if let Some(q) = self.num.div_exact(&o.num) {
                return Ok(q.into());
            }
        }
        Ok(Self::normalize(&self.num * &o.den, &self.den * &o.num))
    }

    /// Division by a nonzero Laurent polynomial.
    pub fn div_laurent(&self, d: &Laurent) -> Rat {
        assert!(!d.is_zero(), "division by zero");
        if self.is_laurent() {
            if let Some(q) = self.num.div_exact(d) {
                return q.into();
            }
        }
        Self::normalize(self.num.clone(), &self.den * d)
    }

    pub fn mul_laurent(&self, m: &Laurent) -> Rat {
        if self.is_laurent() {
            return (&self.num * m).into();
        }
        Self::normalize(&self.num * m, self.den.clone())
    }

    fn add_signed(&self, o: &Rat, negate: bool) -> Rat {
        if self.den == o.den {
            let num = if negate { &self.num - &o.num } else { &self.num + &o.num };
            if self.is_laurent() {
                return num.into();
            }
            return Self::normalize(num, self.den.clone());
        }
        let a = &self.num * &o.den;
        let b = &o.num * &self.den;
        let num = if negate { a - b } else { a + b };
        Self::normalize(num, &self.den * &o.den)
    }

    /// `self += c * v^e` for a Laurent `c`, without renormalizing when integral.
    pub fn add_laurent_shifted(&mut self, c: &Laurent, e: i32) {
        if self.is_laurent() {
            self.num.add_scaled(c, e);
        } else {
            *self = &*self + &Rat::from(c.shift(e));
        }
    }
}

impl From<Laurent> for Rat {
    fn from(num: Laurent) -> Self {
        Rat { num, den: Laurent::one() }
    }
}

impl From<i64> for Rat {
    fn from(c: i64) -> Self {
        Rat::from_int(c)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rat({self})")
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat { num: -self.num, den: self.den }
    }
}

impl Add<&Rat> for &Rat {
    type Output = Rat;
    fn add(self, o: &Rat) -> Rat {
        self.add_signed(o, false)
    }
}

impl Sub<&Rat> for &Rat {
    type Output = Rat;
    fn sub(self, o: &Rat) -> Rat {
        self.add_signed(o, true)
    }
}

impl Mul<&Rat> for &Rat {
    type Output = Rat;
    fn mul(self, o: &Rat) -> Rat {
        if self.is_laurent() && o.is_laurent() {
            return (&self.num * &o.num).into();
        }
        if self.is_zero() || o.is_zero() {
            return Rat::zero();
        }
        Rat::normalize(&self.num * &o.num, &self.den * &o.den)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Rat> for Rat {
            type Output = Rat;
            fn $m(self, o: Rat) -> Rat {
                (&self).$m(&o)
            }
        }
        impl $tr<&Rat> for Rat {
            type Output = Rat;
            fn $m(self, o: &Rat) -> Rat {
                (&self).$m(o)
            }
        }
        impl $tr<Rat> for &Rat {
            type Output = Rat;
            fn $m(self, o: Rat) -> Rat {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, o: &Rat) {
        if self.is_laurent() && o.is_laurent() {
            self.num.add_scaled(&o.num, 0);
        } else {
            *self = &*self + o;
        }
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, o: &Rat) {
        *self = &*self - o;
    }
}

impl One for Rat {
    fn one() -> Self {
        Rat::one()
    }
}

impl num_traits::Zero for Rat {
    fn zero() -> Self {
        Rat::zero()
    }
    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
}

/// Binary (or, for `Neg`, unary in `a`) arithmetic in canonical form.
pub fn arith(a: &Rat, b: &Rat, op: Op) -> Result<Rat, CoeffError> {
    Ok(match op {
        Op::Add => a + b,
        Op::Sub => a - b,
        Op::Mul => a * b,
        Op::Div => a.checked_div(b)?,
        Op::Neg => -a,
    })
}

pub fn bar_conj(a: &Rat) -> Rat {
    a.bar()
}

pub fn as_laurent(a: &Rat) -> Result<Laurent, CoeffError> {
    a.as_laurent().cloned().ok_or(CoeffError::NotALaurentPolynomial)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(terms: &[(i32, i64)]) -> Laurent {
        Laurent::from_terms(terms.iter().copied())
    }

    #[test]
    fn examples() {
        let a: Rat = l(&[(1, 1), (0, 1)]).into();
        let b: Rat = l(&[(1, 1), (0, -1)]).into();
        assert_eq!(arith(&a, &b, Op::Mul).unwrap(), l(&[(2, 1), (0, -1)]).into());
        let n: Rat = l(&[(2, 1), (-2, -1)]).into();
        let d: Rat = l(&[(1, 1), (-1, -1)]).into();
        assert_eq!(arith(&n, &d, Op::Div).unwrap(), l(&[(1, 1), (-1, 1)]).into());
        assert_eq!(arith(&n, &Rat::zero(), Op::Div), Err(CoeffError::DivisionByZero));
    }

    #[test]
    fn reduces_common_factor() {
        let r = Rat::new(l(&[(2, 1), (0, -1)]), l(&[(1, 1), (0, -1)])).unwrap();
        assert_eq!(as_laurent(&r).unwrap(), l(&[(1, 1), (0, 1)]));
        let r = Rat::new(Laurent::one(), l(&[(1, 1), (0, 1)])).unwrap();
        assert_eq!(as_laurent(&r), Err(CoeffError::NotALaurentPolynomial));
        assert_eq!(as_laurent(&l(&[(-3, 7)]).into()).unwrap(), l(&[(-3, 7)]));
    }

    #[test]
    fn canonical_denominator() {
        let r = Rat::new(l(&[(0, 2)]), l(&[(3, -4), (5, -6)])).unwrap();
        assert_eq!(r.den(), &l(&[(0, 2), (2, 3)]));
        assert_eq!(r.num(), &l(&[(-3, -1)]));
        let half = Rat::new(Laurent::one(), Laurent::from_int(2)).unwrap();
        assert_eq!(&half + &half, Rat::one());
    }

    #[test]
    fn bar_examples() {
        let a: Rat = l(&[(3, 1), (0, 2)]).into();
        assert_eq!(bar_conj(&a), l(&[(-3, 1), (0, 2)]).into());
        assert_eq!(bar_conj(&Rat::from(5)), Rat::from(5));
        let r = Rat::new(l(&[(1, 1)]), l(&[(0, 1), (1, 2)])).unwrap();
        assert_eq!(r.bar().bar(), r);
    }

    #[test]
    fn json_round_trip() {
        let r = Rat::new(l(&[(1, 3)]), l(&[(0, 1), (2, 1)])).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"num":[[1,3]],"den":[[0,1],[2,1]]}"#);
        let back: Rat = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert!(serde_json::from_str::<Rat>(r#"{"num":[[0,1]],"den":[]}"#).is_err());
    }
}
