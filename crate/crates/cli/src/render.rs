//! Text forms used in reports.

use qschubert_coeff::Rat;
use qschubert_pbw::PbwVector;
use serde_json::{json, Value};

/// `(1,0,2)`.
pub fn exponent(a: &[u32]) -> String {
    let parts: Vec<String> = a.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// The label `E_{1^{2}2}` of a string datum with 0-based nodes.
pub fn string_label(s: &[(usize, u32)]) -> String {
    let wide = s.iter().any(|&(i, _)| i >= 9);
    let parts: Vec<String> =
        s.iter().map(|&(i, l)| if l == 1 { format!("{}", i + 1) } else { format!("{}^{{{l}}}", i + 1) }).collect();
    format!("E_{{{}}}", parts.join(if wide { "," } else { "" }))
}

pub fn string_json(s: &[(usize, u32)]) -> Value {
    Value::Array(s.iter().map(|&(i, l)| json!([i + 1, l])).collect())
}

fn coeff(c: &Rat) -> String {
    let t = c.to_string();
    if t.contains(' ') || t.starts_with('-') {
        format!("({t})")
    } else {
        t
    }
}

/// `X^(1,0,1) + (-v^-2)*X^(0,1,0)`, terms in lexicographic order.
pub fn pbw(v: &PbwVector) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let terms: Vec<String> = v
        .coords
        .iter()
        .map(|(a, c)| if c.is_one() { format!("X^{}", exponent(a)) } else { format!("{}*X^{}", coeff(c), exponent(a)) })
        .collect();
    terms.join(" + ")
}

pub fn pbw_json(v: &PbwVector) -> Value {
    Value::Array(v.coords.iter().map(|(a, c)| json!({ "exponent": a, "coeff": c.to_string() })).collect())
}
