use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use qschubert_coeff::{Laurent, Rat};
use qschubert_rootdata::{RootDatum, Weight};

use crate::Word;

/// Which skew derivation: `Right` is `d_i`, `Left` is `d_i^op`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A linear combination of words: a representative of an element of `U_q(n+)`.
///
/// Representatives are not canonical. Equality in `U_q(n+)` is decided by the
/// oracles on [`crate::Algebra`].
#[derive(Clone, PartialEq, Eq)]
pub struct NcElement {
    datum: Arc<RootDatum>,
    terms: BTreeMap<Word, Rat>,
}

impl NcElement {
    pub fn zero(datum: &Arc<RootDatum>) -> Self {
        NcElement { datum: datum.clone(), terms: BTreeMap::new() }
    }

    pub fn scalar(datum: &Arc<RootDatum>, c: Rat) -> Self {
        Self::from_terms(datum, [(Word::new(), c)])
    }

    pub fn one(datum: &Arc<RootDatum>) -> Self {
        Self::scalar(datum, Rat::one())
    }

    /// The generator `E_i` (0-based `i`).
    pub fn gen(datum: &Arc<RootDatum>, i: usize) -> Self {
        assert!(i < datum.rank(), "node out of range");
        Self::from_terms(datum, [(vec![i as u8], Rat::one())])
    }

    /// The monomial `E_{w_1} ... E_{w_N}`.
    pub fn word(datum: &Arc<RootDatum>, w: &[u8]) -> Self {
        assert!(w.iter().all(|&l| (l as usize) < datum.rank()), "node out of range");
        Self::from_terms(datum, [(w.to_vec(), Rat::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Rat)>>(datum: &Arc<RootDatum>, terms: I) -> Self {
        let mut x = Self::zero(datum);
        for (w, c) in terms {
            x.add_term(w, &c);
        }
        x
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn terms(&self) -> &BTreeMap<Word, Rat> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True if no terms are stored. The element may still be zero in
    /// `U_q(n+)` when this is false.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[u8]) -> Rat {
        self.terms.get(w).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, w: Word, c: &Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check_datum(&self, o: &NcElement) {
        assert!(Arc::ptr_eq(&self.datum, &o.datum) || self.datum == o.datum, "elements over different root data");
    }

    pub fn add(&self, o: &NcElement) -> NcElement {
        self.check_datum(o);
        let mut r = self.clone();
        for (w, c) in &o.terms {
            r.add_term(w.clone(), c);
        }
        r
    }

    pub fn sub(&self, o: &NcElement) -> NcElement {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> NcElement {
        self.map_coeffs(|c| -c)
    }

    pub fn scale(&self, c: &Rat) -> NcElement {
        if c.is_zero() {
            return Self::zero(&self.datum);
        }
        self.map_coeffs(|x| x * c)
    }

    /// Multiplication by `v^e`.
    pub fn shift(&self, e: i32) -> NcElement {
        self.map_coeffs(|x| x.shift(e))
    }

    fn map_coeffs(&self, f: impl Fn(&Rat) -> Rat) -> NcElement {
        NcElement { datum: self.datum.clone(), terms: self.terms.iter().map(|(w, c)| (w.clone(), f(c))).collect() }
    }

    /// Concatenation product.
    pub fn mul(&self, o: &NcElement) -> NcElement {
        self.check_datum(o);
        let mut r = Self::zero(&self.datum);
        for (u, a) in &self.terms {
            for (w, b) in &o.terms {
                let mut uw = u.clone();
                uw.extend_from_slice(w);
                r.add_term(uw, &(a * b));
            }
        }
        r
    }

    pub fn pow(&self, n: u32) -> NcElement {
        (0..n).fold(Self::one(&self.datum), |acc, _| acc.mul(self))
    }

    /// Anti-linear anti-involution fixing the generators.
    pub fn bar(&self) -> NcElement {
        NcElement {
            datum: self.datum.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.iter().rev().copied().collect(), c.bar())).collect(),
        }
    }

    /// Linear anti-involution fixing the generators.
    pub fn star(&self) -> NcElement {
        NcElement {
            datum: self.datum.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.iter().rev().copied().collect(), c.clone())).collect(),
        }
    }

    /// `sgn(deg) * bar(x)^*`, taken componentwise.
    pub fn tilde(&self) -> NcElement {
        self.map_terms(|w, c| if w.len() % 2 == 1 { -c.bar() } else { c.bar() })
    }

    fn map_terms(&self, f: impl Fn(&Word, &Rat) -> Rat) -> NcElement {
        NcElement { datum: self.datum.clone(), terms: self.terms.iter().map(|(w, c)| (w.clone(), f(w, c))).collect() }
    }

    /// The skew derivation `d_i` (`Right`) or `d_i^op` (`Left`) on representatives.
    pub fn partial(&self, i: usize, side: Side) -> NcElement {
        let d = &self.datum;
        let pi: Vec<i64> = (0..d.rank()).map(|j| d.pairing_simple(i, j)).collect();
        let mut r = Self::zero(d);
        for (w, c) in &self.terms {
            let total: i64 = w.iter().map(|&l| pi[l as usize]).sum();
            let mut before = 0i64;
            for (p, &l) in w.iter().enumerate() {
                if l as usize == i {
                    let after = total - before - pi[i];
                    let e = match side {
                        Side::Right => after - before,
                        Side::Left => before - after,
                    };
                    let mut u = w.clone();
                    u.remove(p);
                    r.add_term(u, &c.shift(e as i32));
                }
                before += pi[l as usize];
            }
        }
        r
    }

    /// Iterated derivation `d^n`, not divided.
    pub fn partial_pow(&self, i: usize, side: Side, n: u32) -> NcElement {
        (0..n).fold(self.clone(), |x, _| x.partial(i, side))
    }

    /// Divided power `d^(n) = d^n / (n)_{q_i}!`.
    pub fn partial_divided(&self, i: usize, side: Side, n: u32) -> NcElement {
        let f = qschubert_coeff::round_fact(n as i64, self.datum.qi_scale(i)).expect("valid factorial");
        self.partial_pow(i, side, n).scale(&Rat::new(Laurent::one(), f).expect("nonzero factorial"))
    }

    /// Homogeneous components keyed by degree.
    pub fn components(&self) -> BTreeMap<Weight, NcElement> {
        let mut out: BTreeMap<Weight, NcElement> = BTreeMap::new();
        for (w, c) in &self.terms {
            let g = self.datum.word_degree(w);
            out.entry(g).or_insert_with(|| Self::zero(&self.datum)).terms.insert(w.clone(), c.clone());
        }
        out
    }

    /// The degree if all stored words share one; `None` for the empty element
    /// or mixed degrees.
    pub fn degree(&self) -> Option<Weight> {
        let mut it = self.terms.keys().map(|w| self.datum.word_degree(w));
        let g = it.next()?;
        it.all(|h| h == g).then_some(g)
    }
}

impl fmt::Display for NcElement {
    /// `(c1)*E_{1 2} + (c2)*E_{2 1}`; letters are 1-based, `0` is zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let letters: Vec<String> = w.iter().map(|l| (l + 1).to_string()).collect();
            write!(f, "({})*E_{{{}}}", c, letters.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for NcElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NcElement[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Arc<RootDatum> {
        Arc::new(RootDatum::preset("A2").unwrap())
    }

    #[test]
    fn multiply_examples() {
        let d = a2();
        let e1 = NcElement::gen(&d, 0);
        let e2 = NcElement::gen(&d, 1);
        assert_eq!(e1.mul(&e2), NcElement::word(&d, &[0, 1]));
        let lhs = e1.scale(&Rat::v(1)).mul(&e2.add(&e1));
        let rhs = NcElement::from_terms(&d, [(vec![0, 1], Rat::v(1)), (vec![0, 0], Rat::v(1))]);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.mul(&NcElement::one(&d)), lhs);
    }

    #[test]
    fn involutions() {
        let d = a2();
        let x = NcElement::from_terms(&d, [(vec![0, 1], Rat::v(1))]);
        assert_eq!(x.bar(), NcElement::from_terms(&d, [(vec![1, 0], Rat::v(-1))]));
        assert_eq!(x.star(), NcElement::from_terms(&d, [(vec![1, 0], Rat::v(1))]));
        assert_eq!(x.tilde(), NcElement::from_terms(&d, [(vec![0, 1], Rat::v(-1))]));
        assert_eq!(NcElement::gen(&d, 0).tilde(), NcElement::gen(&d, 0).neg());
        assert_eq!(x.bar().bar(), x);
        assert_eq!(NcElement::one(&d).tilde(), NcElement::one(&d));
    }

    #[test]
    fn derivations() {
        let d = a2();
        let x = NcElement::word(&d, &[0, 1]);
        assert_eq!(x.partial(0, Side::Right), NcElement::from_terms(&d, [(vec![1], Rat::v(-1))]));
        assert!(NcElement::gen(&d, 1).partial(0, Side::Right).is_empty());
        // d^(n) E^r = binom(r, n)_{q} E^{r-n}
        let e3 = NcElement::gen(&d, 0).pow(3);
        let b = qschubert_coeff::binom(3, 2, 2).unwrap();
        assert_eq!(e3.partial_divided(0, Side::Right, 2), NcElement::gen(&d, 0).scale(&b.into()));
        assert_eq!(e3.partial_divided(0, Side::Left, 3), NcElement::one(&d));
    }

    #[test]
    fn display() {
        let d = a2();
        let x = NcElement::from_terms(&d, [(vec![0, 1], Rat::v(1)), (vec![], Rat::from(2))]);
        assert_eq!(x.to_string(), "(2)*E_{} + (v)*E_{1 2}");
    }
}
