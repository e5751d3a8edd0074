//! Symmetrizable generalized Cartan matrices, the invariant form on the root
//! lattice, and reduced words.
//!
//! Nodes are 0-based internally. Text input and output use 1-based labels.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use qschubert_coeff::Laurent;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("word is not reduced at position {0}")]
    NotReduced(usize),
    #[error("invalid Cartan datum: {0}")]
    InvalidCartan(String),
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
}

/// An element of the root lattice `Z^I`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i] = 1;
        w
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// True if every coordinate is nonnegative.
    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    /// True if `self - other` is nonnegative.
    pub fn dominates(&self, other: &Weight) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Weight {
    /// `a1+2a3`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "a{}", i + 1)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Serialize, Deserialize)]
struct CartanFile {
    rank: usize,
    cartan_matrix: Vec<Vec<i64>>,
    symmetrizers: Vec<i64>,
}

/// A symmetrizable generalized Cartan matrix with its symmetrizers.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RootDatum {
    rank: usize,
    gcm: Vec<Vec<i64>>,
    sym: Vec<i64>,
    name: Option<String>,
}

pub const PRESETS: [&str; 6] = ["A1", "A2", "A3", "B2", "C2", "G2"];

impl RootDatum {
    pub fn new(gcm: Vec<Vec<i64>>, sym: Vec<i64>) -> Result<Self, RootError> {
        let rank = gcm.len();
        let bad = |m: String| Err(RootError::InvalidCartan(m));
        if rank == 0 {
            return bad("rank must be positive".into());
        }
        if rank > 255 {
            return bad("rank above 255 is not supported".into());
        }
        if gcm.iter().any(|r| r.len() != rank) {
            return bad("Cartan matrix must be square".into());
        }
        if sym.len() != rank {
            return bad("one symmetrizer per node is required".into());
        }
        if sym.iter().any(|&d| d <= 0) {
            return bad("symmetrizers must be positive".into());
        }
        for i in 0..rank {
            if gcm[i][i] != 2 {
                return bad(format!("diagonal entry a_{0}{0} must be 2", i + 1));
            }
            for j in 0..rank {
                if i == j {
                    continue;
                }
                if gcm[i][j] > 0 {
                    return bad(format!("off-diagonal entry a_{}{} is positive", i + 1, j + 1));
                }
                if (gcm[i][j] == 0) != (gcm[j][i] == 0) {
                    return bad(format!("a_{0}{1} and a_{1}{0} must vanish together", i + 1, j + 1));
                }
                if sym[i] * gcm[i][j] != sym[j] * gcm[j][i] {
                    return bad(format!("d_i a_ij is not symmetric at ({}, {})", i + 1, j + 1));
                }
            }
        }
        Ok(RootDatum { rank, gcm, sym, name: None })
    }

    /// One of `A1, A2, A3, B2, C2, G2`.
    ///
    /// `B2` has `a12 = -1, a21 = -2, d = (2, 1)`; `C2` has `a12 = -2, a21 = -1,
    /// d = (1, 2)`; `G2` has `a12 = -1, a21 = -3, d = (3, 1)`.
    pub fn preset(name: &str) -> Result<Self, RootError> {
        let (gcm, sym): (Vec<Vec<i64>>, Vec<i64>) = match name {
            "A1" => (vec![vec![2]], vec![1]),
            "A2" => (vec![vec![2, -1], vec![-1, 2]], vec![1, 1]),
            "A3" => (vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]], vec![1, 1, 1]),
            "B2" => (vec![vec![2, -1], vec![-2, 2]], vec![2, 1]),
            "C2" => (vec![vec![2, -2], vec![-1, 2]], vec![1, 2]),
            "G2" => (vec![vec![2, -1], vec![-3, 2]], vec![3, 1]),
            _ => return Err(RootError::UnknownPreset(name.to_string())),
        };
        let mut d = Self::new(gcm, sym)?;
        d.name = Some(name.to_string());
        Ok(d)
    }

    pub fn from_json(s: &str) -> Result<Self, RootError> {
        let f: CartanFile = serde_json::from_str(s).map_err(|e| RootError::InvalidCartan(e.to_string()))?;
        if f.rank != f.cartan_matrix.len() {
            return Err(RootError::InvalidCartan("rank disagrees with matrix size".into()));
        }
        Self::new(f.cartan_matrix, f.symmetrizers)
    }

    pub fn to_json(&self) -> String {
        let f = CartanFile { rank: self.rank, cartan_matrix: self.gcm.clone(), symmetrizers: self.sym.clone() };
        serde_json::to_string(&f).expect("serializable")
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.gcm[i][j]
    }

    pub fn gcm(&self) -> &[Vec<i64>] {
        &self.gcm
    }

    pub fn d(&self, i: usize) -> i64 {
        self.sym[i]
    }

    /// Exponent `s` with `q_i = v^s`.
    pub fn qi_scale(&self, i: usize) -> i32 {
        2 * self.sym[i] as i32
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.sym
    }

    pub fn simple(&self, i: usize) -> Weight {
        Weight::simple(self.rank, i)
    }

    /// `(alpha_i, alpha_j) = d_i a_ij`.
    pub fn pairing_simple(&self, i: usize, j: usize) -> i64 {
        self.sym[i] * self.gcm[i][j]
    }

    /// `(alpha_i, gamma)`.
    pub fn pairing_with(&self, i: usize, g: &Weight) -> i64 {
        g.0.iter().enumerate().map(|(j, c)| c * self.pairing_simple(i, j)).sum()
    }

    pub fn pairing(&self, g: &Weight, h: &Weight) -> i64 {
        g.0.iter().enumerate().filter(|(_, c)| **c != 0).map(|(i, c)| c * self.pairing_with(i, h)).sum()
    }

    /// `(alpha_i^vee, gamma) = (alpha_i, gamma) / d_i`.
    pub fn coroot_pairing(&self, i: usize, g: &Weight) -> i64 {
        g.0.iter().enumerate().map(|(j, c)| c * self.gcm[i][j]).sum()
    }

    /// `eta(gamma) = sum gamma_i d_i`.
    pub fn eta(&self, g: &Weight) -> i64 {
        g.0.iter().zip(&self.sym).map(|(c, d)| c * d).sum()
    }

    /// The `v`-exponent of `mu(gamma)`: `(gamma, gamma)/2 + eta(gamma)`.
    pub fn mu_exp(&self, g: &Weight) -> i32 {
        let p = self.pairing(g, g);
        debug_assert!(p % 2 == 0);
        (p / 2 + self.eta(g)) as i32
    }

    pub fn mu(&self, g: &Weight) -> Laurent {
        Laurent::v(self.mu_exp(g))
    }

    /// `(-1)^height`.
    pub fn sgn(&self, g: &Weight) -> i64 {
        if g.height().rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    /// `s_i(gamma) = gamma - (alpha_i^vee, gamma) alpha_i`.
    pub fn reflect(&self, i: usize, g: &Weight) -> Weight {
        let mut r = g.clone();
        r.0[i] -= self.coroot_pairing(i, g);
        r
    }

    /// Degree of a word: the sum of its letters' simple roots.
    pub fn word_degree(&self, word: &[u8]) -> Weight {
        let mut w = Weight::zero(self.rank);
        for &l in word {
            w.0[l as usize] += 1;
        }
        w
    }

    pub fn check_node(&self, i: usize) -> Result<(), RootError> {
        if i < self.rank {
            Ok(())
        } else {
            Err(RootError::InvalidWord(format!("node {} out of range 1..={}", i + 1, self.rank)))
        }
    }
}

/// A reduced word with its cached roots `alpha^(k) = s_{i_1}...s_{i_{k-1}}(alpha_{i_k})`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ReducedWord {
    letters: Vec<usize>,
    roots: Vec<Weight>,
}

impl ReducedWord {
    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn roots(&self) -> &[Weight] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Roots sorted, as an invariant of the Weyl group element.
    pub fn root_set(&self) -> Vec<Weight> {
        let mut r = self.roots.clone();
        r.sort();
        r
    }

    /// True if `i` occurs at most once.
    pub fn is_repetition_free(&self) -> bool {
        let mut seen = self.letters.clone();
        seen.sort_unstable();
        seen.windows(2).all(|w| w[0] != w[1])
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_word(&self.letters))
    }
}

/// Accepts iff every `alpha^(k)` is a positive root. Errors carry the 1-based
/// position of the first failure.
pub fn make_reduced_word(datum: &RootDatum, letters: &[usize]) -> Result<ReducedWord, RootError> {
    for &i in letters {
        datum.check_node(i)?;
    }
    let mut roots = Vec::with_capacity(letters.len());
    for (k, &ik) in letters.iter().enumerate() {
        let mut g = datum.simple(ik);
        for &j in letters[..k].iter().rev() {
            g = datum.reflect(j, &g);
        }
        if !g.is_nonneg() {
            return Err(RootError::NotReduced(k + 1));
        }
        roots.push(g);
    }
    Ok(ReducedWord { letters: letters.to_vec(), roots })
}

/// True iff the concatenation `w w'` is reduced.
pub fn length_additive(datum: &RootDatum, w: &ReducedWord, w2: &ReducedWord) -> bool {
    let mut all = w.letters.clone();
    all.extend_from_slice(&w2.letters);
    make_reduced_word(datum, &all).is_ok()
}

/// Parses `1,2,1` into 0-based nodes. The empty string is the empty word.
pub fn parse_word(s: &str) -> Result<Vec<usize>, RootError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| match t.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n - 1),
            _ => Err(RootError::InvalidWord(format!("bad letter {t:?}"))),
        })
        .collect()
}

pub fn format_word(letters: &[usize]) -> String {
    letters.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",")
}
