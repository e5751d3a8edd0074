//! Reference tables shipped in `data/` and the checks that compare them with
//! computed output.

use std::collections::BTreeMap;
use std::sync::Arc;

use qschubert_braid::{t_inv, BraidError};
use qschubert_canon::{bi_schubert, degrees_up_to, string_name, Basis, CanonicalElement};
use qschubert_coeff::{Laurent, Rat};
use qschubert_freealg::{Algebra, Dual, NcElement};
use qschubert_pbw::PbwFrame;
use qschubert_rootdata::{make_reduced_word, RootDatum, Weight};
use serde::Deserialize;

use crate::named::{NameDef, Named, Term};
use crate::CliError;

pub const A3: &str = include_str!("../data/a3.json");
pub const C2: &str = include_str!("../data/c2.json");

#[derive(Debug, Clone, Deserialize)]
pub struct Golden {
    #[serde(rename = "type")]
    pub datum: String,
    pub names: Vec<NameDef>,
    pub t_inverse: Option<TInverse>,
    pub relations: Vec<Relations>,
    pub descriptions: Vec<Description>,
    pub bi_schubert: Vec<Description>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct TInverse {
    pub columns: Vec<String>,
    pub rows: Vec<TRow>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct TRow {
    pub node: usize,
    /// `None` where `T_i^-1` leaves `U_q(n+)`.
    pub values: Vec<Option<String>>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Relations {
    pub word: Vec<usize>,
    pub root_vectors: Vec<String>,
    pub commutators: Vec<Commutator>,
}

/// `x y - v^t y x = sum rhs`.
#[derive(Debug, Clone, Deserialize)]
pub struct Commutator {
    pub x: String,
    pub y: String,
    pub t: i32,
    pub rhs: Vec<Term>,
}

/// `c * (sum l_k m_k) * (sum r_k m_k)`.
#[derive(Debug, Clone, Deserialize)]
pub struct Bilinear {
    pub c: i64,
    pub l: BTreeMap<String, i64>,
    pub r: BTreeMap<String, i64>,
}

/// A set of monomials `v^{scale f(m)} prod_k E_k^{m_k}` in a fixed order,
/// with `min(m_a, m_b) = 0` for the excluded pairs.
#[derive(Debug, Clone, Deserialize)]
pub struct Description {
    pub label: String,
    pub word: Vec<usize>,
    #[serde(default)]
    pub word2: Option<Vec<usize>>,
    pub order: Vec<String>,
    pub scale: i64,
    pub prefactor: Vec<Bilinear>,
    pub free: Vec<String>,
    /// Compatibility graph: non-free pairs without an edge are excluded.
    #[serde(default)]
    pub edges: Option<Vec<(String, String)>>,
    #[serde(default)]
    pub exclusive: Option<Vec<(String, String)>>,
}

impl Description {
    /// Pairs `(k, l)` of positions in `order` that may not both be positive.
    pub fn excluded(&self) -> Result<Vec<(usize, usize)>, CliError> {
        let pos = |n: &str| {
            self.order.iter().position(|x| x == n).ok_or_else(|| CliError::Data(format!("{n} not in the order")))
        };
        let mut out = Vec::new();
        if let Some(edges) = &self.edges {
            let mut adj = vec![vec![false; self.order.len()]; self.order.len()];
            for (a, b) in edges {
                let (a, b) = (pos(a)?, pos(b)?);
                adj[a][b] = true;
                adj[b][a] = true;
            }
            let free: Vec<usize> = self.free.iter().map(|n| pos(n)).collect::<Result<_, _>>()?;
            for (k, row) in adj.iter().enumerate() {
                for (l, &linked) in row.iter().enumerate().skip(k + 1) {
                    if !linked && !free.contains(&k) && !free.contains(&l) {
                        out.push((k, l));
                    }
                }
            }
        }
        for (a, b) in self.exclusive.iter().flatten() {
            let (a, b) = (pos(a)?, pos(b)?);
            out.push((a.min(b), a.max(b)));
        }
        Ok(out)
    }

    pub fn exponent(&self, m: &[u32]) -> Result<i64, CliError> {
        let idx = |n: &String| {
            self.order.iter().position(|x| x == n).ok_or_else(|| CliError::Data(format!("{n} not in the order")))
        };
        let mut f = 0;
        for b in &self.prefactor {
            let mut l = 0;
            for (n, c) in &b.l {
                l += c * m[idx(n)?] as i64;
            }
            let mut r = 0;
            for (n, c) in &b.r {
                r += c * m[idx(n)?] as i64;
            }
            f += b.c * l * r;
        }
        Ok(self.scale * f)
    }
}

pub fn load(src: &str) -> Result<Golden, CliError> {
    serde_json::from_str(src).map_err(|e| CliError::Data(e.to_string()))
}

/// Golden data for a preset name, if shipped.
pub fn for_preset(name: &str) -> Option<Golden> {
    match name {
        "A3" => Some(load(A3).expect("bundled data parses")),
        "C2" => Some(load(C2).expect("bundled data parses")),
        _ => None,
    }
}

/// Result of one comparison against a table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, failures: Vec<String>) -> Self {
        Check { name: name.into(), ok: failures.is_empty(), detail: failures.join("; ") }
    }
}

pub fn named(alg: &Arc<Algebra>, g: &Golden) -> Result<Named, CliError> {
    Named::new(alg.clone(), g.names.clone())
}

/// Alternative expressions agree, and every named element is in `B^up` with
/// the string its label encodes.
pub fn check_names(named: &Named) -> Result<Check, CliError> {
    let alg = &named.alg;
    let mut fails = Vec::new();
    for d in &named.defs {
        let x = named.get(&d.name)?;
        for (k, e) in d.also.iter().enumerate() {
            if !alg.equal(x, &named.eval(e)?)? {
                fails.push(format!("{}: expression {} differs", d.name, k + 2));
            }
        }
        let want: Vec<(usize, u32)> = d.string.iter().map(|&(i, l)| (i - 1, l)).collect();
        match string_name(alg, x) {
            Ok(s) if s == want => {}
            Ok(s) => fails.push(format!("{}: string {}", d.name, crate::render::string_label(&s))),
            Err(e) => fails.push(format!("{}: {e}", d.name)),
        }
    }
    Ok(Check::new("named elements", fails))
}

/// Every root vector of every reduced word of length `len` equals a named
/// element.
pub fn check_root_vectors(named: &Named, len: usize) -> Result<Check, CliError> {
    let alg = &named.alg;
    let n = alg.rank();
    let mut fails = Vec::new();
    let mut words = 0;
    let mut w = vec![0usize; len];
    'all: loop {
        if let Ok(word) = make_reduced_word(alg.datum(), &w) {
            words += 1;
            let frame = PbwFrame::new(alg.clone(), word)?;
            for (k, x) in frame.root_vectors().iter().enumerate() {
                let mut hit = false;
                for v in named.values.values() {
                    if v.degree() == x.degree() && alg.equal(v, x)? {
                        hit = true;
                        break;
                    }
                }
                if !hit {
                    fails.push(format!("root vector {} of {}", k + 1, frame.word()));
                }
            }
        }
        for k in (0..len).rev() {
            w[k] += 1;
            if w[k] < n {
                continue 'all;
            }
            w[k] = 0;
        }
        break;
    }
    if words == 0 {
        fails.push(format!("no reduced word of length {len}"));
    }
    Ok(Check::new(format!("root vectors of {words} reduced words"), fails))
}

/// The action of `T_i^-1` on the named elements.
pub fn check_t_inverse(named: &Named, table: &TInverse) -> Result<Check, CliError> {
    let alg = &named.alg;
    let mut fails = Vec::new();
    for row in &table.rows {
        for (col, want) in table.columns.iter().zip(&row.values) {
            let x = named.get(col)?;
            let got = t_inv(alg, row.node - 1, x);
            let cell = format!("T_{}^-1({col})", row.node);
            match (want, got) {
                (None, Err(BraidError::DomainViolation(_))) => {}
                (None, Ok(_)) => fails.push(format!("{cell} lies in U_q(n+)")),
                (Some(w), Ok(y)) => {
                    if !alg.equal(&y, named.get(w)?)? {
                        fails.push(format!("{cell} is not {w}"));
                    }
                }
                (Some(_), Err(BraidError::DomainViolation(_))) => fails.push(format!("{cell} leaves U_q(n+)")),
                (_, Err(e)) => return Err(e.into()),
            }
        }
    }
    Ok(Check::new("T_i^-1 table", fails))
}

/// One commutation relation of a frame read off its straightening:
/// `X_k X_l - v^t X_l X_k = rhs`, 0-based `k < l`.
pub struct FrameRelation {
    pub k: usize,
    pub l: usize,
    pub t: i32,
    pub rhs: NcElement,
    /// `rhs` in PBW coordinates.
    pub coords: qschubert_pbw::PbwVector,
    pub coeff: Laurent,
}

pub fn frame_relations(frame: &PbwFrame) -> Result<Vec<FrameRelation>, CliError> {
    let d = frame.algebra().datum();
    let mut out = Vec::new();
    for (&(k, l), v) in frame.straightening()? {
        let p = d.pairing(&frame.roots()[k], &frame.roots()[l]) as i32;
        let s = d.qi_scale(frame.word().letters()[k]);
        // -v^-p (q_i - q_i^-1)
        let coeff = (&Laurent::v(-s) - &Laurent::v(s)).shift(-p);
        let rhs = frame.element_of(v)?.scale(&Rat::from(coeff.clone()));
        out.push(FrameRelation { k, l, t: -2 * p, rhs, coords: v.clone(), coeff });
    }
    Ok(out)
}

/// Root vectors and commutation relations of a frame against the table.
pub fn check_relations(named: &Named, rel: &Relations) -> Result<Check, CliError> {
    let alg = &named.alg;
    let word = make_reduced_word(alg.datum(), &rel.word.iter().map(|i| i - 1).collect::<Vec<_>>())?;
    let frame = PbwFrame::new(alg.clone(), word)?;
    let mut fails = Vec::new();
    if rel.root_vectors.len() != frame.len() {
        return Err(CliError::Data("one root vector name per letter is required".into()));
    }
    for (k, n) in rel.root_vectors.iter().enumerate() {
        if !alg.equal(&frame.root_vectors()[k], named.get(n)?)? {
            fails.push(format!("X_{} is not {n}", k + 1));
        }
    }
    let pos = |n: &str| {
        rel.root_vectors.iter().position(|x| x == n).ok_or_else(|| CliError::Data(format!("{n} is not a root vector")))
    };
    let computed = frame_relations(&frame)?;
    for c in &rel.commutators {
        let (x, y) = (named.get(&c.x)?, named.get(&c.y)?);
        let mut rhs = NcElement::zero(alg.datum());
        for t in &c.rhs {
            rhs = rhs.add(&named.term(t)?);
        }
        let lhs = x.mul(y).sub(&y.mul(x).shift(c.t));
        if !alg.equal(&lhs, &rhs)? {
            fails.push(format!("[{}, {}]_(v^{}) fails", c.x, c.y, c.t));
        }
        let (k, l) = (pos(&c.x)?, pos(&c.y)?);
        match computed.iter().find(|r| (r.k, r.l) == (k, l)) {
            Some(r) if r.t == c.t && alg.equal(&r.rhs, &rhs)? => {}
            Some(_) => fails.push(format!("straightening of ({}, {}) differs", c.x, c.y)),
            None => fails.push(format!("({}, {}) is not an ordered pair of the frame", c.x, c.y)),
        }
    }
    if rel.commutators.len() != computed.len() {
        fails.push(format!("{} relations listed, frame has {}", rel.commutators.len(), computed.len()));
    }
    Ok(Check::new(format!("relations of {}", frame.word()), fails))
}

/// The described monomials of degree `g` as duals, labelled by exponent
/// vectors in the description's order.
pub fn described(named: &Named, desc: &Description, g: &Weight) -> Result<Vec<(Vec<u32>, Dual)>, CliError> {
    let alg = &named.alg;
    let mut degs = Vec::new();
    let mut duals = Vec::new();
    for n in &desc.order {
        let x = named.get(n)?;
        degs.push(x.degree().ok_or_else(|| CliError::Data(format!("{n} is not homogeneous")))?);
        duals.push(alg.dual(x)?);
    }
    let excl = desc.excluded()?;
    let mut out = Vec::new();
    let mut m = vec![0u32; degs.len()];
    enumerate(&degs, 0, g.clone(), &mut m, &mut |m| {
        if excl.iter().all(|&(a, b)| m[a] == 0 || m[b] == 0) {
            out.push(m.to_vec());
        }
    });
    let mut res = Vec::with_capacity(out.len());
    for m in out {
        let mut d = alg.dual_scalar(Rat::one());
        for (k, &e) in m.iter().enumerate() {
            for _ in 0..e {
                d = alg.shuffle(&d, &duals[k])?;
            }
        }
        let f = desc.exponent(&m)?;
        res.push((m, d.scale(&Rat::v(f as i32))));
    }
    Ok(res)
}

fn enumerate(degs: &[Weight], k: usize, rest: Weight, m: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if k == degs.len() {
        if rest.is_zero() {
            f(m);
        }
        return;
    }
    let mut r = rest;
    let mut e = 0;
    loop {
        m[k] = e;
        enumerate(degs, k + 1, r.clone(), m, f);
        r = &r - &degs[k];
        if !r.is_nonneg() || degs[k].is_zero() {
            break;
        }
        e += 1;
    }
    m[k] = 0;
}

/// Compares described monomials with a set of canonical elements.
fn match_sets(desc: &Description, got: &[(Vec<u32>, Dual)], want: &[CanonicalElement], g: &Weight) -> Vec<String> {
    let mut fails = Vec::new();
    let mut used = vec![false; want.len()];
    for (m, d) in got {
        match want.iter().position(|b| &b.dual == d) {
            Some(j) if !used[j] => used[j] = true,
            Some(_) => fails.push(format!("{}: {g:?} monomial {m:?} repeats an element", desc.label)),
            None => {
                let hint = want
                    .iter()
                    .find_map(|b| proportional(&b.dual, d))
                    .map(|c| format!(" (equals {c} times an element)"));
                fails.push(format!(
                    "{}: {g:?} monomial {m:?} is not canonical{}",
                    desc.label,
                    hint.unwrap_or_default()
                ));
            }
        }
    }
    let missing = used.iter().filter(|u| !**u).count();
    if missing > 0 {
        fails.push(format!("{}: {g:?} has {missing} elements outside the description", desc.label));
    }
    fails
}

/// `c` with `d = c b`, if any.
fn proportional(b: &Dual, d: &Dual) -> Option<Rat> {
    let k = b.vals().iter().position(|x| !x.is_zero())?;
    let c = d.vals()[k].checked_div(&b.vals()[k]).ok()?;
    (&b.scale(&c) == d).then_some(c)
}

/// A cell description against the solved basis on all degrees of height at
/// most `h`, or on the given degrees.
pub fn check_description(
    named: &Named,
    desc: &Description,
    basis: &Basis,
    degrees: &[Weight],
) -> Result<Check, CliError> {
    let mut fails = Vec::new();
    for g in degrees {
        let got = described(named, desc, g)?;
        let want = basis.slice(g)?;
        fails.extend(match_sets(desc, &got, &want, g));
    }
    Ok(Check::new(format!("{} on {} degrees", desc.label, degrees.len()), fails))
}

/// A bi-Schubert description against `B(w) ∩ B(w')^*`.
pub fn check_bi_schubert(
    named: &Named,
    desc: &Description,
    bw: &Basis,
    bw2: &Basis,
    degrees: &[Weight],
) -> Result<Check, CliError> {
    let mut fails = Vec::new();
    for g in degrees {
        let got = described(named, desc, g)?;
        let want = bi_schubert(bw, bw2, g)?;
        fails.extend(match_sets(desc, &got, &want, g));
    }
    Ok(Check::new(format!("{} on {} degrees", desc.label, degrees.len()), fails))
}

pub fn frame_of(alg: &Arc<Algebra>, word: &[usize]) -> Result<Arc<PbwFrame>, CliError> {
    let w = make_reduced_word(alg.datum(), &word.iter().map(|i| i - 1).collect::<Vec<_>>())?;
    Ok(Arc::new(PbwFrame::new(alg.clone(), w)?))
}

/// Degrees of height at most `h` of a frame.
pub fn degrees(frame: &PbwFrame, h: i64) -> Vec<Weight> {
    degrees_up_to(frame, h)
}

/// All golden checks for one datum, descriptions up to height `h`.
pub fn run_all(alg: &Arc<Algebra>, g: &Golden, h: i64) -> Result<Vec<Check>, CliError> {
    if alg.datum().as_ref() != &RootDatum::preset(&g.datum)? {
        return Err(CliError::Invalid(format!("golden data is for {}", g.datum)));
    }
    let named = named(alg, g)?;
    let mut out = vec![check_names(&named)?];
    if let Some(d) = g.descriptions.first() {
        out.push(check_root_vectors(&named, d.word.len())?);
    }
    if let Some(t) = &g.t_inverse {
        out.push(check_t_inverse(&named, t)?);
    }
    for r in &g.relations {
        out.push(check_relations(&named, r)?);
    }
    let mut bases: BTreeMap<Vec<usize>, Arc<Basis>> = BTreeMap::new();
    let mut basis = |w: &[usize]| -> Result<Arc<Basis>, CliError> {
        if let Some(b) = bases.get(w) {
            return Ok(b.clone());
        }
        let b = Arc::new(Basis::new(frame_of(alg, w)?));
        bases.insert(w.to_vec(), b.clone());
        Ok(b)
    };
    for d in &g.descriptions {
        let b = basis(&d.word)?;
        let gs = degrees(b.frame(), h);
        out.push(check_description(&named, d, &b, &gs)?);
    }
    for d in &g.bi_schubert {
        let b = basis(&d.word)?;
        let b2 = basis(d.word2.as_deref().unwrap_or(&d.word))?;
        let gs = degrees(b.frame(), h);
        out.push(check_bi_schubert(&named, d, &b, &b2, &gs)?);
    }
    Ok(out)
}
