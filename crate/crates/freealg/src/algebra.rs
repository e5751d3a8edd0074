use std::sync::{Arc, RwLock};

use qschubert_coeff::{angle_fact, angle_int, membership, Laurent, Rat, Ring};
use qschubert_rootdata::{RootDatum, Weight};
use rustc_hash::FxHashMap;
use thiserror::Error;

use crate::{DegreeSpace, Dual, Exec, NcElement, Side};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeError {
    #[error("degree too large: {0}")]
    DegreeTooLarge(String),
    #[error("operation undefined on the zero element")]
    ZeroElement,
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Bounds on the degree spaces that may be enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest admissible height of a degree.
    pub max_height: i64,
    /// Largest admissible number of words in one degree.
    pub max_words: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_height: 10, max_words: 2_000_000 }
    }
}

/// Shared context for one root datum: degree spaces, limits and the
/// dual-vector kernels.
pub struct Algebra {
    datum: Arc<RootDatum>,
    limits: Limits,
    exec: Exec,
    pair: Vec<Vec<i64>>,
    spaces: RwLock<FxHashMap<Weight, Arc<DegreeSpace>>>,
}

impl Algebra {
    pub fn new(datum: RootDatum) -> Self {
        Self::from_arc(Arc::new(datum))
    }

    pub fn from_arc(datum: Arc<RootDatum>) -> Self {
        let r = datum.rank();
        let pair = (0..r).map(|i| (0..r).map(|j| datum.pairing_simple(i, j)).collect()).collect();
        Algebra {
            datum,
            limits: Limits::default(),
            exec: Exec::default(),
            pair,
            spaces: RwLock::new(FxHashMap::default()),
        }
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn exec(&self) -> Exec {
        self.exec
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn gen(&self, i: usize) -> NcElement {
        NcElement::gen(&self.datum, i)
    }

    pub fn check_degree(&self, g: &Weight) -> Result<(), FreeError> {
        if g.height() > self.limits.max_height {
            return Err(FreeError::DegreeTooLarge(format!(
                "height {} of {} exceeds the bound {}",
                g.height(),
                g,
                self.limits.max_height
            )));
        }
        let n = DegreeSpace::count(g);
        if n > self.limits.max_words as u128 {
            return Err(FreeError::DegreeTooLarge(format!(
                "{} words in degree {} exceed the bound {}",
                n, g, self.limits.max_words
            )));
        }
        Ok(())
    }

    /// The space of words of degree `g`, cached.
    pub fn space(&self, g: &Weight) -> Result<Arc<DegreeSpace>, FreeError> {
        assert!(g.is_nonneg() && g.rank() == self.rank(), "degree must lie in Q+");
        if let Some(s) = self.spaces.read().unwrap().get(g) {
            return Ok(s.clone());
        }
        self.check_degree(g)?;
        let s = Arc::new(DegreeSpace::new(g.clone()));
        let mut map = self.spaces.write().unwrap();
        Ok(map.entry(g.clone()).or_insert(s).clone())
    }

    fn deletions<'a>(&self, s: &'a Arc<DegreeSpace>) -> Result<&'a [u32], FreeError> {
        if let Some(t) = s.deletions.get() {
            return Ok(t);
        }
        let n = s.word_len();
        let mut subs: Vec<Option<Arc<DegreeSpace>>> = vec![None; self.rank()];
        for (i, sub) in subs.iter_mut().enumerate() {
            if s.degree().0[i] > 0 {
                *sub = Some(self.space(&(s.degree() - &self.datum.simple(i)))?);
            }
        }
        let table: Vec<Vec<u32>> = self.exec.map(s.len(), |k| {
            let w = &s.words()[k];
            let mut out = Vec::with_capacity(n);
            let mut buf = Vec::with_capacity(n);
            for p in 0..n {
                buf.clear();
                buf.extend_from_slice(&w[..p]);
                buf.extend_from_slice(&w[p + 1..]);
                let sub = subs[w[p] as usize].as_ref().unwrap();
                out.push(sub.index_of(&buf).unwrap() as u32);
            }
            out
        });
        let _ = s.deletions.set(table.concat());
        Ok(s.deletions.get().unwrap())
    }

    /// Dual of the scalar `c` (degree zero).
    pub fn dual_scalar(&self, c: Rat) -> Dual {
        let s = self.space(&Weight::zero(self.rank())).expect("degree zero");
        Dual::from_vals(s, vec![c])
    }

    /// Dual of `E_i`: the single value `q_i - q_i^-1`.
    pub fn dual_gen(&self, i: usize) -> Dual {
        let s = self.space(&self.datum.simple(i)).expect("simple root degree");
        let e = self.datum.qi_scale(i);
        Dual::from_vals(s, vec![(&Laurent::v(e) - &Laurent::v(-e)).into()])
    }

    /// Combines per-letter parts into the dual of `sum_i part_i * E_i`
    /// (`Right`) or `sum_i E_i * part_i` (`Left`) in degree `g`.
    fn combine(&self, g: &Weight, parts: &[Option<Dual>], side: Side) -> Result<Dual, FreeError> {
        let s = self.space(g)?;
        let del = self.deletions(&s)?;
        let n = s.word_len();
        let r = self.rank();
        let gp: Vec<i64> = (0..r).map(|i| self.datum.pairing_with(i, g)).collect();
        let pair = &self.pair;
        let units: Vec<Laurent> = (0..r).map(|i| angle_int(1, self.datum.qi_scale(i))).collect();
        let vals = self.exec.map(s.len(), |k| {
            let w = &s.words()[k];
            let mut per_letter = vec![Rat::zero(); r];
            let mut before = vec![0i64; r];
            for p in 0..n {
                let i = w[p] as usize;
                if let Some(d) = &parts[i] {
                    let val = &d.vals[del[k * n + p] as usize];
                    if !val.is_zero() {
                        let tw = gp[i] - pair[i][i] - 2 * before[i];
                        let tw = if side == Side::Right { tw } else { -tw } as i32;
                        if val.is_laurent() {
                            per_letter[i].add_laurent_shifted(val.num(), tw);
                        } else {
                            per_letter[i] += &val.shift(tw);
                        }
                    }
                }
                for (j, b) in before.iter_mut().enumerate() {
                    *b += pair[j][i];
                }
            }
            let mut acc = Rat::zero();
            for (i, c) in per_letter.iter().enumerate() {
                if !c.is_zero() {
                    acc += &c.mul_laurent(&units[i]);
                }
            }
            acc
        });
        Ok(Dual::from_vals(s, vals))
    }

    /// Dual of `x * E_i`.
    pub fn right_mul_gen(&self, d: &Dual, i: usize) -> Result<Dual, FreeError> {
        let mut parts = vec![None; self.rank()];
        parts[i] = Some(d.clone());
        self.combine(&(d.degree() + &self.datum.simple(i)), &parts, Side::Right)
    }

    /// Dual of `E_i * x`.
    pub fn left_mul_gen(&self, d: &Dual, i: usize) -> Result<Dual, FreeError> {
        let mut parts = vec![None; self.rank()];
        parts[i] = Some(d.clone());
        self.combine(&(d.degree() + &self.datum.simple(i)), &parts, Side::Left)
    }

    /// Dual of `base * sum c_w E_w` where all words have degree `g - deg(base)`.
    fn horner(&self, base: Option<&Dual>, terms: &[(&[u8], &Rat)], g: &Weight) -> Result<Dual, FreeError> {
        let base_deg = base.map(|b| b.degree().clone()).unwrap_or_else(|| Weight::zero(self.rank()));
        if g == &base_deg {
            let c = terms.iter().fold(Rat::zero(), |acc, (_, c)| &acc + *c);
            return Ok(match base {
                Some(b) => b.scale(&c),
                None => self.dual_scalar(c),
            });
        }
        let mut groups: Vec<Vec<(&[u8], &Rat)>> = vec![Vec::new(); self.rank()];
        for (w, c) in terms {
            let (last, rest) = w.split_last().expect("degree bookkeeping");
            groups[*last as usize].push((rest, c));
        }
        let mut parts = vec![None; self.rank()];
        for (i, grp) in groups.iter().enumerate() {
            if !grp.is_empty() {
                let sub = g - &self.datum.simple(i);
                parts[i] = Some(self.horner(base, grp, &sub)?);
            }
        }
        self.combine(g, &parts, Side::Right)
    }

    /// Dual of the degree-`g` component of `x`.
    pub fn dual_component(&self, x: &NcElement, g: &Weight) -> Result<Dual, FreeError> {
        let terms: Vec<(&[u8], &Rat)> =
            x.terms().iter().filter(|(w, _)| &self.datum.word_degree(w) == g).map(|(w, c)| (w.as_slice(), c)).collect();
        if terms.is_empty() {
            return Ok(Dual::zero(self.space(g)?));
        }
        self.horner(None, &terms, g)
    }

    /// Dual of a homogeneous element.
    pub fn dual(&self, x: &NcElement) -> Result<Dual, FreeError> {
        let g = x.degree().ok_or(FreeError::NotHomogeneous)?;
        self.dual_component(x, &g)
    }

    /// Duals of all homogeneous components.
    pub fn duals(&self, x: &NcElement) -> Result<Vec<(Weight, Dual)>, FreeError> {
        x.components().into_iter().map(|(g, c)| Ok((g.clone(), self.dual_component(&c, &g)?))).collect()
    }

    /// Dual of `x * z` for homogeneous `z`.
    pub fn mul_free(&self, d: &Dual, z: &NcElement) -> Result<Dual, FreeError> {
        let zd = match z.degree() {
            Some(g) => g,
            None if z.is_empty() => return Ok(Dual::zero(d.space().clone())),
            None => return Err(FreeError::NotHomogeneous),
        };
        let terms: Vec<(&[u8], &Rat)> = z.terms().iter().map(|(w, c)| (w.as_slice(), c)).collect();
        self.horner(Some(d), &terms, &(d.degree() + &zd))
    }

    /// The functional `w -> <<x, E_w z>>` where `d` is the dual of `x`, i.e. the
    /// dual of the adjoint of right multiplication by homogeneous `z`. `None`
    /// when `deg x - deg z` leaves `Q+`.
    pub fn contract_right(&self, d: &Dual, z: &NcElement) -> Result<Option<Dual>, FreeError> {
        let zd = z.degree().ok_or(FreeError::NotHomogeneous)?;
        let g = d.degree() - &zd;
        if !g.is_nonneg() {
            return Ok(None);
        }
        let s = self.space(&g)?;
        let src = d.space();
        let terms: Vec<(&[u8], &Rat)> = z.terms().iter().map(|(w, c)| (w.as_slice(), c)).collect();
        let vals = self.exec.map(s.len(), |k| {
            let w = &s.words()[k];
            let mut buf = Vec::with_capacity(src.word_len());
            let mut acc = Rat::zero();
            for (v, c) in &terms {
                buf.clear();
                buf.extend_from_slice(w);
                buf.extend_from_slice(v);
                let x = &d.vals[src.index_of(&buf).unwrap()];
                if !x.is_zero() {
                    acc += &(x * *c);
                }
            }
            acc
        });
        Ok(Some(Dual::from_vals(s, vals)))
    }

    /// Dual of `z * x` for homogeneous `z`.
    pub fn free_mul(&self, z: &NcElement, d: &Dual) -> Result<Dual, FreeError> {
        Ok(self.mul_free(&d.star(), &z.star())?.star())
    }

    /// Dual of `x * y` from the duals of `x` and `y` (twisted shuffle product).
    pub fn shuffle(&self, a: &Dual, b: &Dual) -> Result<Dual, FreeError> {
        let g = a.degree() + b.degree();
        let s = self.space(&g)?;
        let sa = a.space().clone();
        let sb = b.space().clone();
        let n = s.word_len();
        let r = self.rank();
        let need: Vec<i64> = b.degree().0.clone();
        let pair = &self.pair;
        let vals = self.exec.map(s.len(), |k| {
            let w = &s.words()[k];
            let mut st = ShuffleState {
                w,
                pair,
                need: need.clone(),
                sbuf: Vec::with_capacity(n),
                tbuf: Vec::with_capacity(n),
                sp: vec![0; r],
                tp: vec![0; r],
                acc: Rat::zero(),
            };
            st.run(0, 0, &sa, &sb, a, b);
            st.acc
        });
        Ok(Dual::from_vals(s, vals))
    }

    /// Dual of `d_i^(n) x` (`Right`) or `(d_i^op)^(n) x` (`Left`); `None` when
    /// the degree would leave `Q+` (the result is zero).
    pub fn partial_dual(&self, d: &Dual, i: usize, side: Side, n: u32) -> Result<Option<Dual>, FreeError> {
        let g = d.degree() - &self.datum.simple(i).scale(n as i64);
        if !g.is_nonneg() {
            return Ok(None);
        }
        let s = self.space(&g)?;
        let f = angle_fact(n as i64, self.datum.qi_scale(i)).expect("valid factorial");
        let src = d.space();
        let vals = self.exec.map(s.len(), |k| {
            let w = &s.words()[k];
            let mut full = Vec::with_capacity(w.len() + n as usize);
            match side {
                Side::Right => {
                    full.extend_from_slice(w);
                    full.extend(std::iter::repeat_n(i as u8, n as usize));
                }
                Side::Left => {
                    full.extend(std::iter::repeat_n(i as u8, n as usize));
                    full.extend_from_slice(w);
                }
            }
            let v = &d.vals[src.index_of(&full).unwrap()];
            if v.is_zero() {
                Rat::zero()
            } else {
                v.div_laurent(&f)
            }
        });
        Ok(Some(Dual::from_vals(s, vals)))
    }

    /// Largest `k` with `d_i^k x != 0`, read off the dual as the longest
    /// terminal (`Right`) or initial (`Left`) run of `i` in its support.
    pub fn ell_dual(&self, d: &Dual, i: usize, side: Side) -> u32 {
        d.support()
            .map(|(w, _)| {
                let run = match side {
                    Side::Right => w.iter().rev().take_while(|&&l| l as usize == i).count(),
                    Side::Left => w.iter().take_while(|&&l| l as usize == i).count(),
                };
                run as u32
            })
            .max()
            .unwrap_or(0)
    }

    /// `<<x, y>>` where `d` is the dual of `x`.
    pub fn pair_dual(&self, d: &Dual, y: &NcElement) -> Rat {
        let mut acc = Rat::zero();
        for (w, c) in y.terms() {
            if let Some(k) = d.space().index_of(w) {
                let v = &d.vals[k];
                if !v.is_zero() {
                    acc += &(v * c);
                }
            }
        }
        acc
    }

    /// The normalized form `<<x, y>>`.
    pub fn pair(&self, x: &NcElement, y: &NcElement) -> Result<Rat, FreeError> {
        let (small, big) = if x.num_terms() <= y.num_terms() { (x, y) } else { (y, x) };
        let mut acc = Rat::zero();
        for (_, d) in self.duals(small)? {
            acc += &self.pair_dual(&d, big);
        }
        Ok(acc)
    }

    /// Whether `x` represents zero in `U_q(n+)`.
    pub fn is_zero(&self, x: &NcElement) -> Result<bool, FreeError> {
        for (g, c) in x.components() {
            if !self.dual_component(&c, &g)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equal(&self, x: &NcElement, y: &NcElement) -> Result<bool, FreeError> {
        self.is_zero(&x.sub(y))
    }

    /// Membership of the dual's element in the integral form: every pairing
    /// with a divided-power monomial lies in `Z[q, q^-1]`.
    pub fn lattice_dual(&self, d: &Dual) -> bool {
        let ok = self.exec.map(d.space().len(), |k| {
            let v = &d.vals[k];
            if v.is_zero() {
                return true;
            }
            let w = &d.space().words()[k];
            let mut den = Laurent::one();
            let mut p = 0;
            while p < w.len() {
                let mut q = p;
                while q < w.len() && w[q] == w[p] {
                    q += 1;
                }
                if q - p > 1 {
                    let f = angle_fact((q - p) as i64, self.datum.qi_scale(w[p] as usize)).unwrap();
                    den = &den * &f;
                } else {
                    let e = self.datum.qi_scale(w[p] as usize);
                    den = &den * &(&Laurent::v(e) - &Laurent::v(-e));
                }
                p = q;
            }
            membership(&v.div_laurent(&den), Ring::A0)
        });
        ok.into_iter().all(|b| b)
    }

    pub fn lattice_member(&self, x: &NcElement) -> Result<bool, FreeError> {
        for (_, d) in self.duals(x)? {
            if !self.lattice_dual(&d) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `l_i(x)`: the largest `k` with `d_i^k x != 0` (0 when `d_i x = 0`).
    pub fn ell(&self, i: usize, side: Side, x: &NcElement) -> Result<u32, FreeError> {
        let mut best = None;
        for (_, d) in self.duals(x)? {
            if !d.is_zero() {
                let e = self.ell_dual(&d, i, side);
                best = Some(best.map_or(e, |b: u32| b.max(e)));
            }
        }
        best.ok_or(FreeError::ZeroElement)
    }

    /// `d_i^(top) x = d_i^(l_i(x)) x`.
    pub fn partial_top(&self, i: usize, side: Side, x: &NcElement) -> Result<NcElement, FreeError> {
        let l = self.ell(i, side, x)?;
        Ok(x.partial_divided(i, side, l))
    }
}

struct ShuffleState<'a> {
    w: &'a [u8],
    pair: &'a [Vec<i64>],
    need: Vec<i64>,
    sbuf: Vec<u8>,
    tbuf: Vec<u8>,
    sp: Vec<i64>,
    tp: Vec<i64>,
    acc: Rat,
}

impl ShuffleState<'_> {
    fn run(&mut self, p: usize, tw: i64, sa: &DegreeSpace, sb: &DegreeSpace, a: &Dual, b: &Dual) {
        if p == self.w.len() {
            let (Some(i), Some(j)) = (sa.index_of(&self.sbuf), sb.index_of(&self.tbuf)) else {
                return;
            };
            let (x, y) = (&a.vals[i], &b.vals[j]);
            if x.is_zero() || y.is_zero() {
                return;
            }
            let prod = x * y;
            if prod.is_laurent() {
                self.acc.add_laurent_shifted(prod.num(), tw as i32);
            } else {
                self.acc += &prod.shift(tw as i32);
            }
            return;
        }
        let c = self.w[p] as usize;
        let left = self.w.len() - p;
        let need_total: i64 = self.need.iter().sum();
        // position p goes to the left factor
        if (left as i64) > need_total {
            self.sbuf.push(c as u8);
            let add = self.tp[c];
            for (j, x) in self.sp.iter_mut().enumerate() {
                *x += self.pair[j][c];
            }
            self.run(p + 1, tw + add, sa, sb, a, b);
            for (j, x) in self.sp.iter_mut().enumerate() {
                *x -= self.pair[j][c];
            }
            self.sbuf.pop();
        }
        // position p goes to the right factor
        if self.need[c] > 0 {
            self.need[c] -= 1;
            self.tbuf.push(c as u8);
            let sub = self.sp[c];
            for (j, x) in self.tp.iter_mut().enumerate() {
                *x += self.pair[j][c];
            }
            self.run(p + 1, tw - sub, sa, sb, a, b);
            for (j, x) in self.tp.iter_mut().enumerate() {
                *x -= self.pair[j][c];
            }
            self.tbuf.pop();
            self.need[c] += 1;
        }
    }
}
