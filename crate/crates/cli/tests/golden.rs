use std::sync::Arc;

use qschubert_cli::golden;
use qschubert_freealg::{Algebra, Limits};
use qschubert_rootdata::RootDatum;

fn algebra(name: &str) -> Arc<Algebra> {
    let lim = Limits { max_height: 16, ..Limits::default() };
    Arc::new(Algebra::new(RootDatum::preset(name).unwrap()).with_limits(lim))
}

#[test]
fn a3_tables_and_cell_descriptions() {
    let g = golden::load(golden::A3).unwrap();
    for c in golden::run_all(&algebra("A3"), &g, 5).unwrap() {
        assert!(c.ok, "{}: {}", c.name, c.detail);
    }
}

#[test]
fn c2_tables() {
    let g = golden::load(golden::C2).unwrap();
    for c in golden::run_all(&algebra("C2"), &g, 5).unwrap() {
        assert!(c.ok, "{}: {}", c.name, c.detail);
    }
}

#[test]
fn wrong_prefactor_is_reported() {
    let mut g = golden::load(golden::C2).unwrap();
    g.descriptions[0].scale = 1;
    let alg = algebra("C2");
    let named = golden::named(&alg, &g).unwrap();
    let d = &g.descriptions[0];
    let b = qschubert_canon::Basis::new(golden::frame_of(&alg, &d.word).unwrap());
    let gs = golden::degrees(b.frame(), 3);
    let c = golden::check_description(&named, d, &b, &gs).unwrap();
    assert!(!c.ok);
    assert!(c.detail.contains("times an element"), "{}", c.detail);
}

#[test]
fn wrong_table_entry_is_reported() {
    let mut g = golden::load(golden::A3).unwrap();
    let named = golden::named(&algebra("A3"), &g).unwrap();
    let t = g.t_inverse.as_mut().unwrap();
    t.rows[0].values[0] = Some("E1".into());
    assert!(!golden::check_t_inverse(&named, t).unwrap().ok);
}

#[test]
fn sign_flip_in_s2w0_prefactor_is_reported() {
    let mut g = golden::load(golden::A3).unwrap();
    let alg = algebra("A3");
    let named = golden::named(&alg, &g).unwrap();
    let d = g.descriptions.iter_mut().find(|d| d.label == "B(s2 w0)").unwrap();
    let term = d.prefactor.iter_mut().find(|t| t.r.contains_key("E132")).unwrap();
    term.l.insert("E32".into(), 1);
    let b = qschubert_canon::Basis::new(golden::frame_of(&alg, &d.word).unwrap());
    let gs = golden::degrees(b.frame(), 5);
    let c = golden::check_description(&named, d, &b, &gs).unwrap();
    assert!(!c.ok);
    assert!(c.detail.contains("[0, 0, 0, 1, 1, 0, 0]"), "{}", c.detail);
}
