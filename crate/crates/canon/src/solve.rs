use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use qschubert_coeff::{membership, Laurent, Rat, Ring};
use qschubert_freealg::{Dual, NcElement};
use qschubert_pbw::{BarMatrix, Exponent, PbwFrame, PbwVector};
use qschubert_rootdata::Weight;

use crate::certify::string_cascade;
use crate::CanonError;

/// One element `b_a` of the canonical basis of a frame.
#[derive(Debug, Clone)]
pub struct CanonicalElement {
    pub a: Exponent,
    pub degree: Weight,
    /// Coordinates in `{X^a}`: 1 at `a`, elements of `q^-1 Z[q^-1]` below.
    pub coords: PbwVector,
    pub dual: Dual,
    /// Greedy string `(node, exponent)`, 0-based nodes.
    pub string: Vec<(usize, u32)>,
    /// `mu(deg b)^-1 <<b, b>>`.
    pub norm: Rat,
}

impl CanonicalElement {
    /// A word representative of `b_a`.
    pub fn expansion(&self, frame: &PbwFrame) -> Result<NcElement, CanonError> {
        Ok(frame.element_of(&self.coords)?)
    }
}

/// A frame with its solved slices and their bar matrices cached.
pub struct Basis {
    frame: Arc<PbwFrame>,
    slices: Mutex<BTreeMap<Weight, Arc<Vec<CanonicalElement>>>>,
    bars: Mutex<BTreeMap<Weight, Arc<BarMatrix>>>,
}

impl Basis {
    pub fn new(frame: Arc<PbwFrame>) -> Self {
        Basis { frame, slices: Mutex::new(BTreeMap::new()), bars: Mutex::new(BTreeMap::new()) }
    }

    pub fn frame(&self) -> &Arc<PbwFrame> {
        &self.frame
    }

    /// The solved slice of degree `g`.
    pub fn slice(&self, g: &Weight) -> Result<Arc<Vec<CanonicalElement>>, CanonError> {
        if let Some(s) = self.slices.lock().unwrap().get(g) {
            return Ok(s.clone());
        }
        let order = self.frame.linear_extension(g)?;
        let (s, m) = solve_slice(&self.frame, g, &order)?;
        self.bars.lock().unwrap().entry(g.clone()).or_insert(Arc::new(m));
        Ok(self.slices.lock().unwrap().entry(g.clone()).or_insert(Arc::new(s)).clone())
    }

    /// Inserts a slice solved elsewhere, e.g. read from a cache.
    pub fn insert_slice(&self, g: &Weight, elements: Vec<CanonicalElement>) {
        self.slices.lock().unwrap().insert(g.clone(), Arc::new(elements));
    }

    /// The bar matrix of the slice `g`.
    pub fn bar_matrix(&self, g: &Weight) -> Result<Arc<BarMatrix>, CanonError> {
        if let Some(m) = self.bars.lock().unwrap().get(g) {
            return Ok(m.clone());
        }
        let m = Arc::new(self.frame.bar_matrix(g)?);
        Ok(self.bars.lock().unwrap().entry(g.clone()).or_insert(m).clone())
    }

    /// Solves the slices `gs`, possibly in parallel.
    pub fn solve_all(&self, gs: &[Weight]) -> Result<(), CanonError> {
        let r = self.frame.algebra().exec().map_slice(gs, |g| self.slice(g).map(|_| ()));
        r.into_iter().collect()
    }

    /// Degrees solved so far.
    pub fn solved_degrees(&self) -> Vec<Weight> {
        self.slices.lock().unwrap().keys().cloned().collect()
    }

    /// The element of the slice equal to the element with dual `d`, if any.
    pub fn find(&self, d: &Dual) -> Result<Option<CanonicalElement>, CanonError> {
        let basis = self.slice(d.degree())?;
        match self.frame.expand_dual(d) {
            Ok(v) => Ok(basis.iter().find(|b| b.coords == v).cloned()),
            Err(qschubert_pbw::PbwError::NotInCell(_)) => Ok(None),
            Err(e) => Err(e.into()),
        }
    }
}

/// Nonzero degrees `|a|` of height at most `h`, by height then entries.
pub fn degrees_up_to(frame: &PbwFrame, h: i64) -> Vec<Weight> {
    let zero = Weight::zero(frame.algebra().rank());
    let mut seen = vec![zero];
    let mut k = 0;
    while k < seen.len() {
        let g = seen[k].clone();
        for r in frame.roots() {
            let n = &g + r;
            if n.height() <= h && !seen.contains(&n) {
                seen.push(n);
            }
        }
        k += 1;
    }
    seen.remove(0);
    seen.sort_by(|a, b| (a.height(), &a.0).cmp(&(b.height(), &b.0)));
    seen
}

/// The canonical basis of the slice of degree `g`, in slice order.
pub fn lusztig_solve(frame: &PbwFrame, g: &Weight) -> Result<Vec<CanonicalElement>, CanonError> {
    let order = frame.linear_extension(g)?;
    lusztig_solve_with(frame, g, &order)
}

/// [`lusztig_solve`] along a given linear extension (slice indices, smallest
/// first).
pub fn lusztig_solve_with(frame: &PbwFrame, g: &Weight, order: &[usize]) -> Result<Vec<CanonicalElement>, CanonError> {
    Ok(solve_slice(frame, g, order)?.0)
}

fn solve_slice(
    frame: &PbwFrame,
    g: &Weight,
    order: &[usize],
) -> Result<(Vec<CanonicalElement>, BarMatrix), CanonError> {
    let slice = frame.slice(g);
    let n = slice.len();
    let mut pos = vec![usize::MAX; n];
    for (p, &k) in order.iter().enumerate() {
        if k >= n || pos[k] != usize::MAX {
            return Err(CanonError::InvalidArgument("order is not a permutation of the slice".into()));
        }
        pos[k] = p;
    }
    if order.len() != n {
        return Err(CanonError::InvalidArgument("order is not a permutation of the slice".into()));
    }
    let mut lt = vec![vec![false; n]; n];
    for (x, row) in lt.iter_mut().enumerate() {
        for (y, cell) in row.iter_mut().enumerate() {
            *cell = frame.order_lt(&slice.exps[x], &slice.exps[y])?;
            if *cell && pos[x] > pos[y] {
                return Err(CanonError::InvalidArgument("order is not a linear extension".into()));
            }
        }
    }
    let m = frame.bar_matrix(g)?;
    let exec = frame.algebra().exec();
    let solved = exec.map(n, |t| -> Result<CanonicalElement, CanonError> {
        let mut c = vec![Laurent::zero(); n];
        c[t] = Laurent::one();
        for &a1 in order.iter().rev() {
            if !lt[a1][t] {
                continue;
            }
            let defect = bar_defect(&m.rows, &c, a1);
            c[a1] = negative_part(&defect, &slice.exps[t], &slice.exps[a1])?;
        }
        for a1 in 0..n {
            let mut s = bar_defect(&m.rows, &c, a1);
            s += &c[a1].bar();
            if s != c[a1] {
                return Err(CanonError::Inconsistency(format!(
                    "b_{:?} is not bar-invariant at {:?}",
                    slice.exps[t], slice.exps[a1]
                )));
            }
        }
        let mut coords = PbwVector::default();
        for (k, x) in c.iter().enumerate() {
            coords.add_term(&slice.exps[k], &Rat::from(x.clone()));
        }
        let dual = frame.dual_of(&coords, g)?;
        let (string, _) = string_cascade(frame.algebra(), &dual)?;
        let norm = norm_from_coords(frame, &coords, &dual)?;
        Ok(CanonicalElement { a: slice.exps[t].clone(), degree: g.clone(), coords, dual, string, norm })
    });
    Ok((solved.into_iter().collect::<Result<_, _>>()?, m))
}

/// Failures of the bar-matrix structure on the slice `g`: unit diagonal,
/// support below the diagonal in the order, entries in `Z[q, q^-1]` and
/// `bar(M) M = I`.
pub fn check_bar_matrix(frame: &PbwFrame, m: &BarMatrix) -> Result<Vec<String>, CanonError> {
    let n = m.exps.len();
    let mut out = Vec::new();
    for (a, row) in m.rows.iter().enumerate() {
        for (a1, x) in row.iter().enumerate() {
            if a == a1 {
                if !x.is_one() {
                    out.push(format!("diagonal entry {x} at {:?}", m.exps[a]));
                }
            } else if !x.is_zero() && !frame.order_lt(&m.exps[a1], &m.exps[a])? {
                out.push(format!("entry at ({:?}, {:?}) outside the order", m.exps[a], m.exps[a1]));
            }
            if !membership(&Rat::from(x.clone()), Ring::A0) {
                out.push(format!("entry {x} at ({:?}, {:?}) not in Z[q, q^-1]", m.exps[a], m.exps[a1]));
            }
        }
    }
    for a in 0..n {
        for a1 in 0..n {
            let mut s = Laurent::zero();
            for k in 0..n {
                if !m.rows[a][k].is_zero() && !m.rows[k][a1].is_zero() {
                    s += &(&m.rows[a][k].bar() * &m.rows[k][a1]);
                }
            }
            if !(if a == a1 { s.is_one() } else { s.is_zero() }) {
                out.push(format!("bar(M) M is not the identity at ({:?}, {:?})", m.exps[a], m.exps[a1]));
            }
        }
    }
    Ok(out)
}

/// `sum_{a'' != a'} bar(c_a'') M[a''][a']`.
fn bar_defect(rows: &[Vec<Laurent>], c: &[Laurent], a1: usize) -> Laurent {
    let mut g = Laurent::zero();
    for (a2, x) in c.iter().enumerate() {
        if a2 != a1 && !x.is_zero() && !rows[a2][a1].is_zero() {
            g += &(&x.bar() * &rows[a2][a1]);
        }
    }
    g
}

/// The unique `c` in `q^-1 Z[q^-1]` with `c - bar(c) = g`.
fn negative_part(g: &Laurent, a: &[u32], a1: &[u32]) -> Result<Laurent, CanonError> {
    if g.coeff(0) != 0.into() || g.bar() != -g || !g.exponents_even() {
        return Err(CanonError::Inconsistency(format!("defect {g} for b_{a:?} at {a1:?}")));
    }
    let c = Laurent::from_terms(g.terms().filter(|(e, _)| *e < 0).map(|(e, x)| (e, x.clone())));
    debug_assert!(membership(&Rat::from(c.clone()), Ring::Kminus));
    Ok(c)
}

/// `mu^-1 sum_a c_a <<b, X^a>>`, the pairings taken by contraction.
pub(crate) fn norm_from_coords(frame: &PbwFrame, coords: &PbwVector, dual: &Dual) -> Result<Rat, CanonError> {
    let slice = frame.slice(dual.degree());
    let pairs = frame.monomial_pairings(dual)?;
    let mut bb = Rat::zero();
    for (a, c) in &coords.coords {
        bb += &(c * &pairs[slice.index_of(a).expect("coordinate in slice")]);
    }
    Ok(bb.div_laurent(&frame.algebra().datum().mu(dual.degree())))
}
