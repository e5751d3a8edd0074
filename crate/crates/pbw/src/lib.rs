//! PBW frames for a reduced word: root vectors `X_k`, normalized monomials
//! `X^a`, expansion of elements in that basis, straightening relations, the
//! form `Lambda`, the order on exponent vectors and the bar-transition matrix.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use qschubert_braid::{root_vector, BraidError};
use qschubert_coeff::{membership, Laurent, Rat, Ring};
use qschubert_freealg::{Algebra, Dual, FreeError, NcElement};
use qschubert_rootdata::{ReducedWord, Weight};
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// An exponent vector `a`, one entry per root of the frame.
pub type Exponent = Vec<u32>;

type Straightening = BTreeMap<(usize, usize), PbwVector>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PbwError {
    #[error("element does not lie in the quantum Schubert cell: {0}")]
    NotInCell(String),
    #[error("degree too large: {0}")]
    DegreeTooLarge(String),
    #[error("coefficient outside Z[q, q^-1]: {0}")]
    IntegralityViolation(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Free(FreeError),
    #[error(transparent)]
    Braid(#[from] BraidError),
}

impl From<FreeError> for PbwError {
    fn from(e: FreeError) -> Self {
        match e {
            FreeError::DegreeTooLarge(s) => PbwError::DegreeTooLarge(s),
            e => PbwError::Free(e),
        }
    }
}

/// Coordinates in the basis `{X^a}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PbwVector {
    pub coords: BTreeMap<Exponent, Rat>,
}

impl PbwVector {
    pub fn unit(a: Exponent) -> Self {
        PbwVector { coords: BTreeMap::from([(a, Rat::one())]) }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coeff(&self, a: &[u32]) -> Rat {
        self.coords.get(a).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_term(&mut self, a: &[u32], c: &Rat) {
        if c.is_zero() {
            return;
        }
        let e = self.coords.entry(a.to_vec()).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.coords.remove(a);
        }
    }

    pub fn support(&self) -> impl Iterator<Item = &Exponent> {
        self.coords.keys()
    }
}

/// The exponent vectors of one degree, in lexicographic order, with the
/// order relation computed on demand.
pub struct Slice {
    pub degree: Weight,
    pub exps: Vec<Exponent>,
    index: FxHashMap<Exponent, usize>,
    below: OnceLock<Vec<Vec<bool>>>,
}

impl Slice {
    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn index_of(&self, a: &[u32]) -> Option<usize> {
        self.index.get(a).copied()
    }
}

/// `bar(X^a) = sum_a' rows[a][a'] X^a'` over one slice.
#[derive(Debug, Clone)]
pub struct BarMatrix {
    pub degree: Weight,
    pub exps: Vec<Exponent>,
    pub rows: Vec<Vec<Laurent>>,
}

pub struct PbwFrame {
    alg: Arc<Algebra>,
    word: ReducedWord,
    roots: Vec<Weight>,
    root_vectors: Vec<NcElement>,
    root_pair: Vec<Vec<i64>>,
    lambda: Vec<Vec<i64>>,
    straightening: OnceLock<Result<Straightening, PbwError>>,
    monomials: Mutex<FxHashMap<Exponent, Arc<Dual>>>,
    slices: Mutex<FxHashMap<Weight, Arc<Slice>>>,
}

impl PbwFrame {
    pub fn new(alg: Arc<Algebra>, word: ReducedWord) -> Result<Self, PbwError> {
        let m = word.len();
        let vecs = alg.exec().map(m, |k| root_vector(&alg, &word, k + 1));
        let root_vectors = vecs.into_iter().collect::<Result<Vec<_>, _>>()?;
        let roots = word.roots().to_vec();
        let d = alg.datum().clone();
        let root_pair: Vec<Vec<i64>> =
            (0..m).map(|k| (0..m).map(|l| d.pairing(&roots[k], &roots[l])).collect()).collect();
        let lambda =
            (0..m).map(|k| (0..m).map(|l| (l as i64 - k as i64).signum() * root_pair[k][l]).collect()).collect();
        Ok(PbwFrame {
            alg,
            word,
            roots,
            root_vectors,
            root_pair,
            lambda,
            straightening: OnceLock::new(),
            monomials: Mutex::new(FxHashMap::default()),
            slices: Mutex::new(FxHashMap::default()),
        })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn roots(&self) -> &[Weight] {
        &self.roots
    }

    pub fn root_vectors(&self) -> &[NcElement] {
        &self.root_vectors
    }

    /// `Lambda(e_k, e_l) = sign(l - k) (alpha^(k), alpha^(l))`.
    pub fn lambda(&self) -> &[Vec<i64>] {
        &self.lambda
    }

    pub fn lambda_form(&self, a: &[u32], b: &[u32]) -> i64 {
        let mut s = 0;
        for (k, &x) in a.iter().enumerate() {
            for (l, &y) in b.iter().enumerate() {
                s += x as i64 * y as i64 * self.lambda[k][l];
            }
        }
        s
    }

    /// `|a| = sum a_k alpha^(k)`.
    pub fn weight_of(&self, a: &[u32]) -> Weight {
        let mut g = Weight::zero(self.alg.rank());
        for (k, &x) in a.iter().enumerate() {
            g = &g + &self.roots[k].scale(x as i64);
        }
        g
    }

    fn check_exp(&self, a: &[u32]) -> Result<(), PbwError> {
        if a.len() != self.len() {
            return Err(PbwError::InvalidArgument(format!(
                "exponent vector of length {} for a frame of length {}",
                a.len(),
                self.len()
            )));
        }
        Ok(())
    }

    /// `v`-exponent of `q^{1/2 sum_{k<l} (alpha^(k), alpha^(l)) a_k a_l}`.
    pub fn q_prefactor_exp(&self, a: &[u32]) -> i32 {
        let mut s = 0i64;
        for k in 0..a.len() {
            for l in k + 1..a.len() {
                s += self.root_pair[k][l] * a[k] as i64 * a[l] as i64;
            }
        }
        s as i32
    }

    pub fn q_prefactor(&self, a: &[u32]) -> Laurent {
        Laurent::v(self.q_prefactor_exp(a))
    }

    /// `<<X^a, X^a>> = mu(|a|) prod_r prod_{t <= a_r} (1 - q_{i_r}^{-2t})`.
    pub fn norm(&self, a: &[u32]) -> Laurent {
        let d = self.alg.datum();
        let mut n = d.mu(&self.weight_of(a));
        for (k, &x) in a.iter().enumerate() {
            let s = d.qi_scale(self.word.letters()[k]);
            for t in 1..=x as i32 {
                n = &n * &(&Laurent::one() - &Laurent::v(-2 * s * t));
            }
        }
        n
    }

    /// `X^a` (`divided = false`) or `X_1^<a_1> ... X_m^<a_m>` (`divided = true`).
    pub fn pbw_monomial(&self, a: &[u32], divided: bool) -> Result<NcElement, PbwError> {
        self.check_exp(a)?;
        let d = self.alg.datum();
        let mut x = NcElement::one(d);
        for (k, &n) in a.iter().enumerate() {
            let mut p = self.root_vectors[k].pow(n);
            if divided {
                let f = qschubert_coeff::angle_fact(n as i64, d.qi_scale(self.word.letters()[k])).unwrap();
                p = p.scale(&Rat::new(Laurent::one(), f).unwrap());
            }
            x = x.mul(&p);
        }
        if !divided {
            x = x.shift(self.q_prefactor_exp(a));
        }
        Ok(x)
    }

    /// The dual basis element `X^a / <<X^a, X^a>>`, so that
    /// `<<X^a, dual_monomial(a')>> = delta_{a,a'}`. It differs from the divided
    /// monomial by `v^{sum_k a_k (eta(alpha^(k)) - d_{i_k})}`.
    pub fn dual_monomial(&self, a: &[u32]) -> Result<NcElement, PbwError> {
        let x = self.pbw_monomial(a, false)?;
        Ok(x.scale(&Rat::new(Laurent::one(), self.norm(a)).unwrap()))
    }

    /// `v`-exponent `e` with `divided monomial = v^e dual_monomial`.
    pub fn divided_shift(&self, a: &[u32]) -> i32 {
        let d = self.alg.datum();
        a.iter()
            .enumerate()
            .map(|(k, &n)| n as i64 * (d.eta(&self.roots[k]) - d.d(self.word.letters()[k])))
            .sum::<i64>() as i32
    }

    /// Dual of `X_1^{a_1} ... X_m^{a_m}` (no prefactor), memoized.
    pub fn monomial_dual(&self, a: &[u32]) -> Result<Arc<Dual>, PbwError> {
        self.check_exp(a)?;
        if let Some(d) = self.monomials.lock().unwrap().get(a) {
            return Ok(d.clone());
        }
        let d = match a.iter().rposition(|&x| x > 0) {
            None => self.alg.dual_scalar(Rat::one()),
            Some(last) => {
                let mut prev = a.to_vec();
                prev[last] -= 1;
                let p = self.monomial_dual(&prev)?;
                self.alg.mul_free(&p, &self.root_vectors[last])?
            }
        };
        let d = Arc::new(d);
        self.monomials.lock().unwrap().insert(a.to_vec(), d.clone());
        Ok(d)
    }

    /// Dual of `X^a`.
    pub fn pbw_dual(&self, a: &[u32]) -> Result<Dual, PbwError> {
        let p = self.monomial_dual(a)?;
        Ok(p.scale(&Rat::v(self.q_prefactor_exp(a))))
    }

    /// `{a : |a| = g}`, cached, in lexicographic order.
    pub fn slice(&self, g: &Weight) -> Arc<Slice> {
        if let Some(s) = self.slices.lock().unwrap().get(g) {
            return s.clone();
        }
        let mut exps = Vec::new();
        let mut cur = vec![0u32; self.len()];
        self.enumerate(0, g.clone(), &mut cur, &mut exps);
        exps.sort();
        let index = exps.iter().enumerate().map(|(k, a)| (a.clone(), k)).collect();
        let s = Arc::new(Slice { degree: g.clone(), exps, index, below: OnceLock::new() });
        self.slices.lock().unwrap().entry(g.clone()).or_insert(s).clone()
    }

    fn enumerate(&self, k: usize, rest: Weight, cur: &mut Exponent, out: &mut Vec<Exponent>) {
        if rest.is_zero() {
            out.push(cur.clone());
            return;
        }
        if k == self.len() {
            return;
        }
        let mut r = rest;
        let mut n = 0;
        loop {
            cur[k] = n;
            self.enumerate(k + 1, r.clone(), cur, out);
            r = &r - &self.roots[k];
            if !r.is_nonneg() {
                break;
            }
            n += 1;
        }
        cur[k] = 0;
    }

    /// Coordinates of the element with dual `d` in `{X^a}`; fails with
    /// `NotInCell` if it is not in their span.
    pub fn expand_dual(&self, d: &Dual) -> Result<PbwVector, PbwError> {
        let slice = self.slice(d.degree());
        let raw = self.monomial_pairings(d)?;
        let mut out = PbwVector::default();
        let mut residual = d.clone();
        for (k, a) in slice.exps.iter().enumerate() {
            let p = &raw[k];
            if p.is_zero() {
                continue;
            }
            let c = p.div_laurent(&self.norm(a));
            residual.add_scaled(&self.pbw_dual(a)?, &(-&c));
            out.coords.insert(a.clone(), c);
        }
        if !residual.is_zero() {
            return Err(PbwError::NotInCell(format!(
                "residual of degree {} with {} nonzero entries",
                residual.degree(),
                residual.support().count()
            )));
        }
        Ok(out)
    }

    /// `<<x, X^a>>` for every `a` of the slice of `deg x`, in slice order,
    /// where `d` is the dual of `x`.
    pub fn monomial_pairings(&self, d: &Dual) -> Result<Vec<Rat>, PbwError> {
        let slice = self.slice(d.degree());
        let mut raw: Vec<Option<Rat>> = vec![None; slice.len()];
        let idx: Vec<usize> = (0..slice.len()).collect();
        self.contract(d, self.len(), &slice, &idx, &mut raw)?;
        Ok(raw
            .into_iter()
            .zip(&slice.exps)
            .map(|(p, a)| p.map_or_else(Rat::zero, |p| p.shift(self.q_prefactor_exp(a))))
            .collect())
    }

    /// Fills `raw[k] = <<x, X_1^{a_1} ... X_m^{a_m}>>` for the exponents `idx`,
    /// all sharing their entries at positions `>= upto`.
    fn contract(
        &self,
        d: &Dual,
        upto: usize,
        slice: &Slice,
        idx: &[usize],
        raw: &mut [Option<Rat>],
    ) -> Result<(), PbwError> {
        if d.is_zero() {
            return Ok(());
        }
        if upto == 0 {
            debug_assert!(d.degree().is_zero());
            for &k in idx {
                raw[k] = Some(d.vals()[0].clone());
            }
            return Ok(());
        }
        let p = upto - 1;
        let mut groups: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for &k in idx {
            groups.entry(slice.exps[k][p]).or_default().push(k);
        }
        let mut cur = d.clone();
        let mut at = 0u32;
        for (n, grp) in groups {
            while at < n {
                match self.alg.contract_right(&cur, &self.root_vectors[p])? {
                    Some(next) => cur = next,
                    None => return Ok(()),
                }
                at += 1;
                if cur.is_zero() {
                    return Ok(());
                }
            }
            self.contract(&cur, p, slice, &grp, raw)?;
        }
        Ok(())
    }

    /// `pbw_expand`: coordinates of a homogeneous `x` in `{X^a}`.
    pub fn pbw_expand(&self, x: &NcElement) -> Result<PbwVector, PbwError> {
        if x.is_empty() {
            return Ok(PbwVector::default());
        }
        let d = self.alg.dual(x)?;
        self.expand_dual(&d)
    }

    /// Dual of `sum c_a X^a`, all of degree `g`.
    pub fn dual_of(&self, v: &PbwVector, g: &Weight) -> Result<Dual, PbwError> {
        let mut out = Dual::zero(self.alg.space(g)?);
        for (a, c) in &v.coords {
            if &self.weight_of(a) != g {
                return Err(PbwError::InvalidArgument("coordinates of mixed degree".into()));
            }
            out.add_scaled(&self.pbw_dual(a)?, c);
        }
        Ok(out)
    }

    /// `sum c_a X^a` as a word combination.
    pub fn element_of(&self, v: &PbwVector) -> Result<NcElement, PbwError> {
        let mut out = NcElement::zero(self.alg.datum());
        for (a, c) in &v.coords {
            out = out.add(&self.pbw_monomial(a, false)?.scale(c));
        }
        Ok(out)
    }

    fn unit_exp(&self, k: usize) -> Exponent {
        let mut e = vec![0; self.len()];
        e[k] = 1;
        e
    }

    fn compute_straighten(&self, k: usize, l: usize) -> Result<PbwVector, PbwError> {
        let p = self.root_pair[k][l] as i32;
        let xl = self.alg.dual(&self.root_vectors[l])?;
        let xk = self.alg.dual(&self.root_vectors[k])?;
        let lk = self.alg.mul_free(&xl, &self.root_vectors[k])?;
        let kl = self.alg.mul_free(&xk, &self.root_vectors[l])?;
        let mut d = lk.scale(&Rat::v(-p));
        d.add_scaled(&kl, &(-Rat::v(p)));
        let s = self.alg.datum().qi_scale(self.word.letters()[k]);
        let d = d.scale(&Rat::new(Laurent::one(), &Laurent::v(s) - &Laurent::v(-s)).unwrap());
        let v = self.expand_dual(&d)?;
        for (a, c) in &v.coords {
            let ok = c.as_laurent().is_some() && membership(c, Ring::A0);
            if !ok {
                return Err(PbwError::IntegralityViolation(format!(
                    "straightening ({}, {}) has coefficient {} at {:?}",
                    k + 1,
                    l + 1,
                    c,
                    a
                )));
            }
            let outside = a.iter().enumerate().any(|(t, &x)| x > 0 && (t <= k || t >= l));
            if outside {
                return Err(PbwError::IntegralityViolation(format!(
                    "straightening ({}, {}) supported outside the open interval at {:?}",
                    k + 1,
                    l + 1,
                    a
                )));
            }
        }
        Ok(v)
    }

    /// All straightening relations, keyed by 0-based `(k, l)` with `k < l`.
    pub fn straightening(&self) -> Result<&BTreeMap<(usize, usize), PbwVector>, PbwError> {
        self.straightening
            .get_or_init(|| {
                let m = self.len();
                let pairs: Vec<(usize, usize)> = (0..m).flat_map(|k| (k + 1..m).map(move |l| (k, l))).collect();
                let res = self.alg.exec().map_slice(&pairs, |&(k, l)| self.compute_straighten(k, l));
                pairs.into_iter().zip(res).map(|(kl, r)| r.map(|v| (kl, v))).collect()
            })
            .as_ref()
            .map_err(|e| e.clone())
    }

    /// The right-hand side of
    /// `(q^{-p/2} X_l X_k - q^{p/2} X_k X_l) / (q_{i_k} - q_{i_k}^-1)`,
    /// `p = (alpha^(k), alpha^(l))`, for 1-based `k < l`.
    pub fn straighten(&self, k: usize, l: usize) -> Result<PbwVector, PbwError> {
        if k == 0 || k >= l || l > self.len() {
            return Err(PbwError::InvalidArgument(format!("need 1 <= k < l <= {}", self.len())));
        }
        Ok(self.straightening()?[&(k - 1, l - 1)].clone())
    }

    /// Generators `e_k + e_l - s` of the order monoid.
    fn generators(&self) -> Result<Vec<Vec<i64>>, PbwError> {
        let mut gens = Vec::new();
        for (&(k, l), v) in self.straightening()? {
            for s in v.support() {
                let mut g: Vec<i64> = s.iter().map(|&x| -(x as i64)).collect();
                g[k] += 1;
                g[l] += 1;
                gens.push(g);
            }
        }
        Ok(gens)
    }

    fn below<'s>(&self, slice: &'s Slice) -> Result<&'s Vec<Vec<bool>>, PbwError> {
        if let Some(b) = slice.below.get() {
            return Ok(b);
        }
        let gens = self.generators()?;
        let n = slice.len();
        let children: Vec<Vec<usize>> = slice
            .exps
            .iter()
            .map(|a| {
                gens.iter()
                    .filter_map(|g| {
                        let b: Option<Exponent> =
                            a.iter().zip(g).map(|(&x, &y)| u32::try_from(x as i64 - y).ok()).collect();
                        b.and_then(|b| slice.index_of(&b))
                    })
                    .collect()
            })
            .collect();
        let mut below: Vec<Option<Vec<bool>>> = vec![None; n];
        fn visit(k: usize, children: &[Vec<usize>], below: &mut Vec<Option<Vec<bool>>>, n: usize) {
            if below[k].is_some() {
                return;
            }
            let mut set = vec![false; n];
            set[k] = true;
            for &c in &children[k] {
                visit(c, children, below, n);
                for (s, &t) in set.iter_mut().zip(below[c].as_ref().unwrap()) {
                    *s |= t;
                }
            }
            below[k] = Some(set);
        }
        for k in 0..n {
            visit(k, &children, &mut below, n);
        }
        let _ = slice.below.set(below.into_iter().map(Option::unwrap).collect());
        Ok(slice.below.get().unwrap())
    }

    /// `a <= a2` in the order generated by the straightening supports.
    pub fn order_leq(&self, a: &[u32], a2: &[u32]) -> Result<bool, PbwError> {
        self.check_exp(a)?;
        self.check_exp(a2)?;
        let g = self.weight_of(a);
        if g != self.weight_of(a2) {
            return Ok(false);
        }
        let slice = self.slice(&g);
        let below = self.below(&slice)?;
        Ok(below[slice.index_of(a2).unwrap()][slice.index_of(a).unwrap()])
    }

    /// Strict order `a < a2`.
    pub fn order_lt(&self, a: &[u32], a2: &[u32]) -> Result<bool, PbwError> {
        Ok(a != a2 && self.order_leq(a, a2)?)
    }

    /// A linear extension of the order on a slice: indices, smallest first.
    pub fn linear_extension(&self, g: &Weight) -> Result<Vec<usize>, PbwError> {
        let slice = self.slice(g);
        let below = self.below(&slice)?;
        let mut idx: Vec<usize> = (0..slice.len()).collect();
        idx.sort_by_key(|&k| (below[k].iter().filter(|&&b| b).count(), k));
        Ok(idx)
    }

    pub fn bar_matrix(&self, g: &Weight) -> Result<BarMatrix, PbwError> {
        let slice = self.slice(g);
        let n = slice.len();
        let rows = self.alg.exec().map(n, |k| -> Result<Vec<Laurent>, PbwError> {
            let a = &slice.exps[k];
            let v = self.expand_dual(&self.pbw_dual(a)?.bar())?;
            let mut row = vec![Laurent::zero(); n];
            for (b, c) in &v.coords {
                let ok = c.as_laurent().is_some() && membership(c, Ring::A0);
                if !ok {
                    return Err(PbwError::IntegralityViolation(format!("bar(X^{a:?}) has coefficient {c} at {b:?}")));
                }
                row[slice.index_of(b).unwrap()] = c.as_laurent().unwrap().clone();
            }
            Ok(row)
        });
        Ok(BarMatrix { degree: g.clone(), exps: slice.exps.clone(), rows: rows.into_iter().collect::<Result<_, _>>()? })
    }

    /// Both containments
    /// `X^a X^b - q^{-L/2} X^{a+b}` in `q^{-L/2} sum_{a' < a+b} A0 X^a'` and
    /// `X^b X^a - q^L X^a X^b` in `q^{L/2} sum_{a' < a+b} A0 X^a'`, `L = Lambda(a, b)`.
    pub fn lambda_commutator_check(&self, a: &[u32], b: &[u32]) -> Result<bool, PbwError> {
        self.check_exp(a)?;
        self.check_exp(b)?;
        let lam = self.lambda_form(a, b) as i32;
        let sum: Exponent = a.iter().zip(b).map(|(x, y)| x + y).collect();
        let xa = self.pbw_dual(a)?;
        let xb = self.pbw_dual(b)?;
        let ab = self.alg.shuffle(&xa, &xb)?;
        let ba = self.alg.shuffle(&xb, &xa)?;

        let mut first = ab.clone();
        first.add_scaled(&self.pbw_dual(&sum)?, &(-Rat::v(-lam)));
        let mut second = ba;
        second.add_scaled(&ab, &(-Rat::v(2 * lam)));
        Ok(self.lower_with_factor(&first, &sum, -lam)? && self.lower_with_factor(&second, &sum, lam)?)
    }

    /// Whether `d` expands as `q^{e/2} sum_{a' < top} A0 X^a'`.
    fn lower_with_factor(&self, d: &Dual, top: &[u32], e: i32) -> Result<bool, PbwError> {
        let v = self.expand_dual(d)?;
        for (a, c) in &v.coords {
            let c = c.shift(-e);
            if !(c.as_laurent().is_some() && membership(&c, Ring::A0)) || !self.order_lt(a, top)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Unit vector `e_k` for 1-based `k`.
    pub fn e(&self, k: usize) -> Exponent {
        self.unit_exp(k - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qschubert_rootdata::{make_reduced_word, RootDatum};

    fn frame(name: &str, w: &[usize]) -> PbwFrame {
        let alg = Arc::new(Algebra::new(RootDatum::preset(name).unwrap()));
        let word = make_reduced_word(alg.datum(), w).unwrap();
        PbwFrame::new(alg, word).unwrap()
    }

    #[test]
    fn prefactor_examples() {
        let f = frame("A2", &[0, 1, 0]);
        assert!(f.q_prefactor(&[1, 0, 0]).is_one());
        assert!(f.q_prefactor(&[0, 0, 0]).is_one());
        assert_eq!(f.q_prefactor(&[1, 0, 1]), Laurent::v(-1));
    }

    #[test]
    fn monomial_examples() {
        let f = frame("A2", &[0, 1, 0]);
        let a = f.algebra();
        let x = f.pbw_monomial(&[1, 0, 1], false).unwrap();
        assert!(a.equal(&x, &NcElement::word(a.datum(), &[0, 1]).shift(-1)).unwrap());
        assert_eq!(f.pbw_monomial(&f.e(2), false).unwrap(), f.root_vectors()[1]);
        let d = f.pbw_monomial(&[2, 0, 0], true).unwrap();
        assert_eq!(d, qschubert_braid::divided_gen(a, 0, 2));
    }

    #[test]
    fn expand_examples() {
        let f = frame("A2", &[0, 1, 0]);
        let a = f.algebra();
        let v = f.pbw_expand(&NcElement::word(a.datum(), &[0, 1])).unwrap();
        assert_eq!(v, PbwVector { coords: BTreeMap::from([(vec![1, 0, 1], Rat::v(1))]) });
        for k in 1..=3 {
            assert_eq!(f.pbw_expand(&f.root_vectors()[k - 1]).unwrap(), PbwVector::unit(f.e(k)));
        }
        let g = frame("A2", &[0]);
        assert!(matches!(g.pbw_expand(&g.algebra().gen(1)), Err(PbwError::NotInCell(_))));
    }

    #[test]
    fn straighten_examples() {
        let f = frame("A2", &[0, 1, 0]);
        assert_eq!(f.straighten(1, 3).unwrap(), PbwVector::unit(vec![0, 1, 0]));
        assert!(f.straighten(1, 2).unwrap().is_zero());
        assert!(f.straighten(2, 2).is_err());
        let g = frame("A3", &[0, 1, 2]);
        assert!(g.straightening().unwrap().values().all(|v| v.is_zero()));
    }

    #[test]
    fn order_examples() {
        let f = frame("A2", &[0, 1, 0]);
        assert!(f.order_leq(&[1, 0, 1], &[1, 0, 1]).unwrap());
        assert!(f.order_leq(&[0, 1, 0], &[1, 0, 1]).unwrap());
        assert!(!f.order_leq(&[1, 0, 1], &[0, 1, 0]).unwrap());
        assert!(!f.order_leq(&[1, 0, 0], &[0, 1, 0]).unwrap());
    }

    #[test]
    fn bar_matrix_examples() {
        let f = frame("A2", &[0, 1, 0]);
        let g = Weight(vec![1, 1]);
        let m = f.bar_matrix(&g).unwrap();
        assert_eq!(m.exps, vec![vec![0, 1, 0], vec![1, 0, 1]]);
        let qq = &Laurent::v(2) - &Laurent::v(-2);
        assert_eq!(m.rows[1], vec![qq, Laurent::one()]);
        assert_eq!(m.rows[0], vec![Laurent::one(), Laurent::zero()]);
        let m = f.bar_matrix(&Weight(vec![2, 0])).unwrap();
        assert_eq!(m.rows, vec![vec![Laurent::one()]]);
    }

    #[test]
    fn lambda_examples() {
        let f = frame("A2", &[0, 1, 0]);
        assert!(f.lambda_commutator_check(&f.e(1), &f.e(3)).unwrap());
        assert!(f.lambda_commutator_check(&f.e(1), &f.e(2)).unwrap());
        assert_eq!(f.lambda()[0][2], -1);
        assert_eq!(f.lambda()[2][0], 1);
    }
}
