//! Named elements such as `E_{213}`, defined by braid operators, stars,
//! linear combinations of products and the element `Y` of a frame.

use std::collections::BTreeMap;
use std::sync::Arc;

use qschubert_braid::{t_inv, t_word};
use qschubert_canon::y_element;
use qschubert_coeff::parse_rat;
use qschubert_freealg::{Algebra, NcElement};
use qschubert_pbw::PbwFrame;
use qschubert_rootdata::make_reduced_word;
use serde::Deserialize;

use crate::CliError;

/// `c * f_1 f_2 ...` with `c` in the text form of `parse_rat`.
#[derive(Debug, Clone, Deserialize)]
pub struct Term {
    pub coeff: String,
    pub factors: Vec<String>,
}

/// One way of writing a named element. Nodes are 1-based.
#[derive(Debug, Clone, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct Expr {
    /// The generator `E_i`.
    #[serde(default)]
    pub gen: Option<usize>,
    /// `T_{i_1} ... T_{i_k}(to)`.
    #[serde(default)]
    pub apply: Option<Vec<usize>>,
    /// `T_{i_1}^-1 ... T_{i_k}^-1(to)`.
    #[serde(default)]
    pub apply_inv: Option<Vec<usize>>,
    #[serde(default)]
    pub to: Option<String>,
    /// The anti-involution `*` of a named element.
    #[serde(default)]
    pub star: Option<String>,
    #[serde(default)]
    pub combo: Option<Vec<Term>>,
    /// `Y` of a single-repetition word.
    #[serde(default)]
    pub y_of: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct NameDef {
    pub name: String,
    /// Expected string datum, 1-based nodes.
    pub string: Vec<(usize, u32)>,
    pub def: Expr,
    /// Other expressions that must give the same element.
    #[serde(default)]
    pub also: Vec<Expr>,
}

/// Named elements evaluated in order of definition.
pub struct Named {
    pub alg: Arc<Algebra>,
    pub defs: Vec<NameDef>,
    pub values: BTreeMap<String, NcElement>,
}

impl Named {
    pub fn new(alg: Arc<Algebra>, defs: Vec<NameDef>) -> Result<Self, CliError> {
        let mut n = Named { alg, defs: Vec::new(), values: BTreeMap::new() };
        for d in defs {
            let x = n.eval(&d.def)?;
            n.values.insert(d.name.clone(), x);
            n.defs.push(d);
        }
        Ok(n)
    }

    pub fn get(&self, name: &str) -> Result<&NcElement, CliError> {
        self.values.get(name).ok_or_else(|| CliError::Data(format!("unknown element {name}")))
    }

    fn node(&self, i: usize) -> Result<usize, CliError> {
        if i == 0 || i > self.alg.rank() {
            return Err(CliError::Data(format!("node {i} out of range")));
        }
        Ok(i - 1)
    }

    pub fn eval(&self, e: &Expr) -> Result<NcElement, CliError> {
        if let Some(i) = e.gen {
            return Ok(self.alg.gen(self.node(i)?));
        }
        if let Some(w) = &e.apply {
            let x = self.get(e.to.as_deref().unwrap_or(""))?;
            let l: Vec<usize> = w.iter().map(|&i| self.node(i)).collect::<Result<_, _>>()?;
            return Ok(t_word(&self.alg, &l, x)?);
        }
        if let Some(w) = &e.apply_inv {
            let mut x = self.get(e.to.as_deref().unwrap_or(""))?.clone();
            for &i in w.iter().rev() {
                x = t_inv(&self.alg, self.node(i)?, &x)?;
            }
            return Ok(x);
        }
        if let Some(s) = &e.star {
            return Ok(self.get(s)?.star());
        }
        if let Some(terms) = &e.combo {
            let mut x = NcElement::zero(self.alg.datum());
            for t in terms {
                let c = parse_rat(&t.coeff).map_err(|e| CliError::Data(e.to_string()))?;
                let mut p = NcElement::one(self.alg.datum());
                for f in &t.factors {
                    p = p.mul(self.get(f)?);
                }
                x = x.add(&p.scale(&c));
            }
            return Ok(x);
        }
        if let Some(w) = &e.y_of {
            let l: Vec<usize> = w.iter().map(|&i| self.node(i)).collect::<Result<_, _>>()?;
            let word = make_reduced_word(self.alg.datum(), &l)?;
            let frame = PbwFrame::new(self.alg.clone(), word)?;
            return Ok(y_element(&frame)?);
        }
        Err(CliError::Data("empty expression".into()))
    }

    /// `prod f_k` over the factors of a term, scaled by its coefficient.
    pub fn term(&self, t: &Term) -> Result<NcElement, CliError> {
        self.eval(&Expr { combo: Some(vec![t.clone()]), ..Expr::default() })
    }
}
