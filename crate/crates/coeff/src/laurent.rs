use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An element of `Z[v, v^-1]`.
///
/// Stored densely: `coeffs[k]` is the coefficient of `v^(low + k)`. The first
/// and last stored coefficients are nonzero, and zero is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    low: i32,
    coeffs: Vec<BigInt>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int<T: Into<BigInt>>(c: T) -> Self {
        Self::mono(c, 0)
    }

    /// `c * v^e`.
    pub fn mono<T: Into<BigInt>>(c: T, e: i32) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        Laurent { low: e, coeffs: vec![c] }
    }

    /// `v^e`.
    pub fn v(e: i32) -> Self {
        Self::mono(1, e)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I, T>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, T)>,
        T: Into<BigInt>,
    {
        let terms: Vec<(i32, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let low = terms.iter().map(|t| t.0).min().unwrap();
        let high = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_raw(low, coeffs)
    }

    /// Builds from a dense coefficient vector starting at `v^low`, trimming zeros.
    pub fn from_raw(low: i32, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        if lead > 0 {
            coeffs.drain(..lead);
        }
        Laurent { low: low + lead as i32, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low(&self) -> i32 {
        self.low
    }

    /// Highest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn high(&self) -> i32 {
        if self.is_zero() {
            0
        } else {
            self.low + self.coeffs.len() as i32 - 1
        }
    }

    pub fn dense(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        let k = e - self.low;
        if k < 0 || k as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(k, c)| (self.low + k as i32, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// `Some((c, e))` if this is `c * v^e` with `c != 0`.
    pub fn as_mono(&self) -> Option<(&BigInt, i32)> {
        if self.coeffs.len() == 1 {
            Some((&self.coeffs[0], self.low))
        } else {
            None
        }
    }

    pub fn as_int(&self) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        match self.as_mono() {
            Some((c, 0)) => Some(c.clone()),
            _ => None,
        }
    }

    /// Multiplication by `v^e`.
    pub fn shift(&self, e: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Laurent { low: self.low + e, coeffs: self.coeffs.clone() }
    }

    pub fn shift_in_place(&mut self, e: i32) {
        if !self.is_zero() {
            self.low += e;
        }
    }

    /// `v -> v^-1`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Laurent { low: -self.high(), coeffs }
    }

    /// `v -> v^k` for nonzero `k`.
    pub fn subs(&self, k: i32) -> Self {
        assert!(k != 0, "substitution v -> v^0 is not a ring map on Laurent polynomials");
        if k == 1 {
            return self.clone();
        }
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c.clone())))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// Divides every coefficient by `c`, which must divide all of them.
    pub fn div_int_exact(&self, c: &BigInt) -> Self {
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(|x| x / c).collect() }
    }

    /// Gcd of the coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// True if every exponent with nonzero coefficient is even.
    pub fn exponents_even(&self) -> bool {
        self.terms().all(|(e, _)| e % 2 == 0)
    }

    /// Exact quotient `self / other` if it lies in `Z[v, v^-1]`.
    pub fn div_exact(&self, other: &Laurent) -> Option<Laurent> {
        assert!(!other.is_zero(), "division by zero Laurent polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((c, e)) = other.as_mono() {
            if self.coeffs.iter().all(|x| x.is_multiple_of(c)) {
                return Some(Laurent { low: self.low - e, coeffs: self.coeffs.iter().map(|x| x / c).collect() });
            }
            return None;
        }
        let n = self.coeffs.len();
        let m = other.coeffs.len();
        if n < m {
            return None;
        }
        let mut rem: Vec<BigInt> = self.coeffs.clone();
        let lead = other.coeffs.last().unwrap();
        let mut quot = vec![BigInt::zero(); n - m + 1];
        for k in (0..=n - m).rev() {
            let top = &rem[k + m - 1];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                rem[k + j] -= &q * b;
            }
            quot[k] = q;
        }
        if rem.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(Self::from_raw(self.low - other.low, quot))
    }

    /// Value at `v = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    fn add_signed(&self, other: &Laurent, negate: bool) -> Laurent {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other } else { other.clone() };
        }
        let low = self.low.min(other.low);
        let high = self.high().max(other.high());
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + k] = c.clone();
        }
        let off = (other.low - low) as usize;
        for (k, c) in other.coeffs.iter().enumerate() {
            if negate {
                coeffs[off + k] -= c;
            } else {
                coeffs[off + k] += c;
            }
        }
        Self::from_raw(low, coeffs)
    }

    /// `self += c * v^e * other`.
    pub fn add_scaled(&mut self, other: &Laurent, e: i32) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = other.shift(e);
            return;
        }
        let olow = other.low + e;
        let ohigh = other.high() + e;
        let low = self.low.min(olow);
        let high = self.high().max(ohigh);
        if low < self.low {
            let pad = (self.low - low) as usize;
            let mut v = vec![BigInt::zero(); pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.low = low;
        }
        let len = (high - low + 1) as usize;
        if self.coeffs.len() < len {
            self.coeffs.resize(len, BigInt::zero());
        }
        let off = (olow - self.low) as usize;
        for (k, c) in other.coeffs.iter().enumerate() {
            self.coeffs[off + k] += c;
        }
        let norm = Self::from_raw(self.low, std::mem::take(&mut self.coeffs));
        *self = norm;
    }
}

impl fmt::Display for Laurent {
    /// Descending powers of `v`, e.g. `v^3 - 2 + v^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = a.is_one();
            match (e, unit) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "v")?,
                (1, false) => write!(f, "{a}v")?,
                (_, true) => write!(f, "v^{e}")?,
                (_, false) => write!(f, "{a}v^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(mut self) -> Laurent {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Add<&Laurent> for &Laurent {
    type Output = Laurent;
    fn add(self, o: &Laurent) -> Laurent {
        self.add_signed(o, false)
    }
}

impl Sub<&Laurent> for &Laurent {
    type Output = Laurent;
    fn sub(self, o: &Laurent) -> Laurent {
        self.add_signed(o, true)
    }
}

impl Mul<&Laurent> for &Laurent {
    type Output = Laurent;
    fn mul(self, o: &Laurent) -> Laurent {
        if self.is_zero() || o.is_zero() {
            return Laurent::zero();
        }
        if let Some((c, e)) = o.as_mono() {
            let mut r = self.scale(c);
            r.low += e;
            return r;
        }
        if let Some((c, e)) = self.as_mono() {
            let mut r = o.scale(c);
            r.low += e;
            return r;
        }
        if let Some(r) = mul_small(self, o) {
            return r;
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Laurent::from_raw(self.low + o.low, coeffs)
    }
}

/// Product with machine-word coefficients; `None` if an input coefficient
/// exceeds `i64` or an accumulator overflows `i128`.
fn mul_small(a: &Laurent, b: &Laurent) -> Option<Laurent> {
    let x: Vec<i64> = a.coeffs.iter().map(|c| c.to_i64()).collect::<Option<_>>()?;
    let y: Vec<i64> = b.coeffs.iter().map(|c| c.to_i64()).collect::<Option<_>>()?;
    let mut acc = vec![0i128; x.len() + y.len() - 1];
    for (i, &p) in x.iter().enumerate() {
        if p == 0 {
            continue;
        }
        for (j, &q) in y.iter().enumerate() {
            acc[i + j] = acc[i + j].checked_add(p as i128 * q as i128)?;
        }
    }
    Some(Laurent::from_raw(a.low + b.low, acc.into_iter().map(BigInt::from).collect()))
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Laurent> for Laurent {
            type Output = Laurent;
            fn $m(self, o: Laurent) -> Laurent {
                (&self).$m(&o)
            }
        }
        impl $tr<&Laurent> for Laurent {
            type Output = Laurent;
            fn $m(self, o: &Laurent) -> Laurent {
                (&self).$m(o)
            }
        }
        impl $tr<Laurent> for &Laurent {
            type Output = Laurent;
            fn $m(self, o: Laurent) -> Laurent {
                self.$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Laurent> for Laurent {
    fn add_assign(&mut self, o: &Laurent) {
        self.add_scaled(o, 0);
    }
}

impl SubAssign<&Laurent> for Laurent {
    fn sub_assign(&mut self, o: &Laurent) {
        self.add_scaled(&-o, 0);
    }
}

impl From<i64> for Laurent {
    fn from(c: i64) -> Self {
        Laurent::from_int(c)
    }
}

pub(crate) fn int_to_json(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(x) => serde_json::Value::from(x),
        None => serde_json::Value::from(c.to_string()),
    }
}

pub(crate) fn int_from_json(v: &serde_json::Value) -> Option<BigInt> {
    match v {
        serde_json::Value::Number(n) => n.as_i64().map(BigInt::from),
        serde_json::Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

impl Serialize for Laurent {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<serde_json::Value> =
            self.terms().map(|(e, c)| serde_json::Value::Array(vec![e.into(), int_to_json(c)])).collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Laurent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let pairs: Vec<(i32, serde_json::Value)> = Vec::deserialize(d)?;
        let mut terms = Vec::with_capacity(pairs.len());
        for (e, c) in pairs {
            let c = int_from_json(&c).ok_or_else(|| D::Error::custom("bad integer coefficient"))?;
            terms.push((e, c));
        }
        Ok(Laurent::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(terms: &[(i32, i64)]) -> Laurent {
        Laurent::from_terms(terms.iter().copied())
    }

    #[test]
    fn product_of_conjugates() {
        let a = l(&[(1, 1), (0, 1)]);
        let b = l(&[(1, 1), (0, -1)]);
        assert_eq!(&a * &b, l(&[(2, 1), (0, -1)]));
    }

    #[test]
    fn exact_division() {
        let a = l(&[(2, 1), (-2, -1)]);
        let b = l(&[(1, 1), (-1, -1)]);
        assert_eq!(a.div_exact(&b), Some(l(&[(1, 1), (-1, 1)])));
        assert_eq!(b.div_exact(&a), None);
        assert_eq!(l(&[(0, 1)]).div_exact(&l(&[(0, 1), (1, 1)])), None);
    }

    #[test]
    fn bar_reverses_exponents() {
        let a = l(&[(3, 1), (0, 2)]);
        assert_eq!(a.bar(), l(&[(-3, 1), (0, 2)]));
        assert_eq!(a.bar().bar(), a);
    }

    #[test]
    fn display_descending() {
        assert_eq!(l(&[(3, 1), (0, -2), (-1, 1)]).to_string(), "v^3 - 2 + v^-1");
        assert_eq!(Laurent::zero().to_string(), "0");
        assert_eq!(l(&[(1, -3)]).to_string(), "-3v");
    }

    #[test]
    fn add_scaled_cancels() {
        let mut a = l(&[(1, 1), (0, 1)]);
        a.add_scaled(&l(&[(0, -1), (-1, -1)]), 1);
        assert!(a.is_zero());
    }

    #[test]
    fn json_pairs() {
        let a = l(&[(-3, 7)]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, "[[-3,7]]");
        let b: Laurent = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
    }
}
