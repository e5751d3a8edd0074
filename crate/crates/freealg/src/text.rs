//! JSON and text forms of `NcElement`. Letters are 1-based in both.

use std::sync::Arc;

use qschubert_coeff::{parse_rat, Rat};
use qschubert_rootdata::RootDatum;
use serde::{Deserialize, Serialize};

use crate::{FreeError, NcElement, Word};

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    word: Vec<usize>,
    coeff: Rat,
}

#[derive(Serialize, Deserialize)]
struct JsonElement {
    terms: Vec<JsonTerm>,
}

impl NcElement {
    pub fn to_json_value(&self) -> serde_json::Value {
        let terms = self
            .terms()
            .iter()
            .map(|(w, c)| JsonTerm { word: w.iter().map(|&l| l as usize + 1).collect(), coeff: c.clone() })
            .collect();
        serde_json::to_value(JsonElement { terms }).expect("serializable")
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    pub fn from_json_value(datum: &Arc<RootDatum>, v: serde_json::Value) -> Result<Self, FreeError> {
        let e: JsonElement = serde_json::from_value(v).map_err(|e| FreeError::Parse(e.to_string()))?;
        let mut terms = Vec::with_capacity(e.terms.len());
        for t in e.terms {
            terms.push((letters(datum, &t.word)?, t.coeff));
        }
        Ok(NcElement::from_terms(datum, terms))
    }

    pub fn from_json(datum: &Arc<RootDatum>, s: &str) -> Result<Self, FreeError> {
        let v: serde_json::Value = serde_json::from_str(s).map_err(|e| FreeError::Parse(e.to_string()))?;
        Self::from_json_value(datum, v)
    }

    /// Parses the text form, e.g. `(v)*E_{1 2} - E_{2 1} + 3*E_{}`.
    pub fn parse(datum: &Arc<RootDatum>, s: &str) -> Result<Self, FreeError> {
        let s = s.trim();
        if s == "0" {
            return Ok(NcElement::zero(datum));
        }
        let bytes = s.as_bytes();
        let mut x = NcElement::zero(datum);
        let mut pos = 0;
        let err = |m: &str, p: usize| FreeError::Parse(format!("{m} at byte {p}"));
        while pos < bytes.len() {
            while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            let mut sign = 1;
            if pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
                if bytes[pos] == b'-' {
                    sign = -1;
                }
                pos += 1;
            } else if !x.is_empty() || pos > 0 {
                return Err(err("expected '+' or '-'", pos));
            }
            let rest = &s[pos..];
            let e_at = rest.find("E_{").ok_or_else(|| err("expected E_{", pos))?;
            let coeff_txt = rest[..e_at].trim();
            let coeff = if coeff_txt.is_empty() {
                Rat::one()
            } else {
                let c = coeff_txt.strip_suffix('*').ok_or_else(|| err("expected '*'", pos))?.trim();
                let c = c.strip_prefix('(').and_then(|c| c.strip_suffix(')')).unwrap_or(c);
                parse_rat(c).map_err(|e| FreeError::Parse(e.to_string()))?
            };
            let body_start = pos + e_at + 3;
            let close = s[body_start..].find('}').ok_or_else(|| err("unclosed E_{", body_start))?;
            let body = &s[body_start..body_start + close];
            let nums: Result<Vec<usize>, _> = body.split_whitespace().map(|t| t.parse::<usize>()).collect();
            let nums = nums.map_err(|_| err("bad letter", body_start))?;
            let w = letters(datum, &nums)?;
            x.add_term(w, &(if sign < 0 { -coeff } else { coeff }));
            pos = body_start + close + 1;
        }
        Ok(x)
    }
}

fn letters(datum: &RootDatum, nums: &[usize]) -> Result<Word, FreeError> {
    nums.iter()
        .map(|&n| {
            if n >= 1 && n <= datum.rank() {
                Ok((n - 1) as u8)
            } else {
                Err(FreeError::Parse(format!("letter {n} out of range")))
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        let d = Arc::new(RootDatum::preset("A2").unwrap());
        let x = NcElement::parse(&d, "(v - v^-1)*E_{1 2} - E_{2 1} + 3*E_{}").unwrap();
        assert_eq!(x.num_terms(), 3);
        assert_eq!(NcElement::parse(&d, &x.to_string()).unwrap(), x);
        assert_eq!(NcElement::from_json(&d, &x.to_json()).unwrap(), x);
        assert!(NcElement::parse(&d, "E_{3}").is_err());
        assert!(NcElement::parse(&d, "E_{1} E_{2}").is_err());
        assert_eq!(
            x.to_json(),
            r#"{"terms":[{"coeff":{"den":[[0,1]],"num":[[0,3]]},"word":[]},{"coeff":{"den":[[0,1]],"num":[[-1,-1],[1,1]]},"word":[1,2]},{"coeff":{"den":[[0,1]],"num":[[0,-1]]},"word":[2,1]}]}"#
        );
    }
}
