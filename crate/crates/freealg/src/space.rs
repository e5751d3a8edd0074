use std::sync::{Arc, OnceLock};

use qschubert_coeff::Rat;
use qschubert_rootdata::Weight;
use rustc_hash::FxHashMap;

use crate::Word;

/// All words of a fixed degree, in lexicographic order.
pub struct DegreeSpace {
    degree: Weight,
    words: Vec<Word>,
    index: FxHashMap<Word, u32>,
    reversal: OnceLock<Vec<u32>>,
    pub(crate) deletions: OnceLock<Vec<u32>>,
}

impl DegreeSpace {
    pub(crate) fn new(degree: Weight) -> Self {
        let mut words = Vec::new();
        let mut counts: Vec<i64> = degree.0.clone();
        let len = degree.height() as usize;
        let mut buf = Vec::with_capacity(len);
        enumerate(&mut counts, len, &mut buf, &mut words);
        let index = words.iter().enumerate().map(|(k, w)| (w.clone(), k as u32)).collect();
        DegreeSpace { degree, words, index, reversal: OnceLock::new(), deletions: OnceLock::new() }
    }

    /// Number of words of a degree, without enumerating them.
    pub fn count(degree: &Weight) -> u128 {
        let mut total: u128 = 1;
        let mut n: u128 = 0;
        for &c in &degree.0 {
            for k in 1..=c as u128 {
                n += 1;
                total = total * n / k;
            }
        }
        total
    }

    pub fn degree(&self) -> &Weight {
        &self.degree
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Word length (the height of the degree).
    pub fn word_len(&self) -> usize {
        self.degree.height() as usize
    }

    pub fn index_of(&self, w: &[u8]) -> Option<usize> {
        self.index.get(w).map(|&k| k as usize)
    }

    /// `perm[k]` is the index of the reversal of word `k`.
    pub fn reversal(&self) -> &[u32] {
        self.reversal.get_or_init(|| {
            self.words
                .iter()
                .map(|w| {
                    let r: Word = w.iter().rev().copied().collect();
                    self.index[&r]
                })
                .collect()
        })
    }
}

fn enumerate(counts: &mut [i64], left: usize, buf: &mut Word, out: &mut Vec<Word>) {
    if left == 0 {
        out.push(buf.clone());
        return;
    }
    for i in 0..counts.len() {
        if counts[i] > 0 {
            counts[i] -= 1;
            buf.push(i as u8);
            enumerate(counts, left - 1, buf, out);
            buf.pop();
            counts[i] += 1;
        }
    }
}

/// The functional `w -> <<x, E_w>>` of a homogeneous element `x`.
///
/// The map `x -> Dual` is injective on `U_q(n+)`, so two elements are equal
/// exactly when their duals are.
#[derive(Clone)]
pub struct Dual {
    pub(crate) space: Arc<DegreeSpace>,
    pub(crate) vals: Vec<Rat>,
}

impl Dual {
    pub fn zero(space: Arc<DegreeSpace>) -> Self {
        let vals = vec![Rat::zero(); space.len()];
        Dual { space, vals }
    }

    pub fn from_vals(space: Arc<DegreeSpace>, vals: Vec<Rat>) -> Self {
        assert_eq!(space.len(), vals.len());
        Dual { space, vals }
    }

    pub fn space(&self) -> &Arc<DegreeSpace> {
        &self.space
    }

    pub fn degree(&self) -> &Weight {
        self.space.degree()
    }

    pub fn vals(&self) -> &[Rat] {
        &self.vals
    }

    /// `<<x, E_w>>`, zero for words of another degree.
    pub fn at(&self, w: &[u8]) -> Rat {
        self.space.index_of(w).map(|k| self.vals[k].clone()).unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.vals.iter().all(|c| c.is_zero())
    }

    /// Nonzero entries as `(word, value)`.
    pub fn support(&self) -> impl Iterator<Item = (&Word, &Rat)> {
        self.space.words().iter().zip(&self.vals).filter(|(_, c)| !c.is_zero())
    }

    fn same_space(&self, o: &Dual) {
        assert!(
            Arc::ptr_eq(&self.space, &o.space) || self.space.degree() == o.space.degree(),
            "dual vectors of different degrees"
        );
    }

    pub fn add(&self, o: &Dual) -> Dual {
        self.same_space(o);
        let vals = self.vals.iter().zip(&o.vals).map(|(a, b)| a + b).collect();
        Dual { space: self.space.clone(), vals }
    }

    pub fn sub(&self, o: &Dual) -> Dual {
        self.same_space(o);
        let vals = self.vals.iter().zip(&o.vals).map(|(a, b)| a - b).collect();
        Dual { space: self.space.clone(), vals }
    }

    pub fn scale(&self, c: &Rat) -> Dual {
        let vals = self.vals.iter().map(|a| if a.is_zero() { Rat::zero() } else { a * c }).collect();
        Dual { space: self.space.clone(), vals }
    }

    pub fn neg(&self) -> Dual {
        let vals = self.vals.iter().map(|a| -a).collect();
        Dual { space: self.space.clone(), vals }
    }

    /// `self += c * o`.
    pub fn add_scaled(&mut self, o: &Dual, c: &Rat) {
        self.same_space(o);
        if c.is_zero() {
            return;
        }
        for (a, b) in self.vals.iter_mut().zip(&o.vals) {
            if !b.is_zero() {
                *a += &(b * c);
            }
        }
    }

    /// Dual of `bar(x)`: `sgn(deg) * bar` entrywise.
    pub fn bar(&self) -> Dual {
        let odd = self.degree().height() % 2 != 0;
        let vals = self.vals.iter().map(|a| if odd { -a.bar() } else { a.bar() }).collect();
        Dual { space: self.space.clone(), vals }
    }

    /// Dual of `x*`: entries permuted by word reversal.
    pub fn star(&self) -> Dual {
        let rev = self.space.reversal();
        let vals = rev.iter().map(|&k| self.vals[k as usize].clone()).collect();
        Dual { space: self.space.clone(), vals }
    }

    /// True if every entry is a Laurent polynomial.
    pub fn is_integral(&self) -> bool {
        self.vals.iter().all(|c| c.is_laurent())
    }
}

impl PartialEq for Dual {
    fn eq(&self, o: &Dual) -> bool {
        self.degree() == o.degree() && self.vals == o.vals
    }
}

impl Eq for Dual {}

impl std::fmt::Debug for Dual {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Dual[{}]{{", self.degree())?;
        for (k, (w, c)) in self.support().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            let s: Vec<String> = w.iter().map(|l| (l + 1).to_string()).collect();
            write!(f, "{}: {}", s.join(""), c)?;
        }
        write!(f, "}}")
    }
}
