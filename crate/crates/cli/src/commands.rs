use std::fmt::Write as _;
use std::sync::Arc;

use qschubert_canon::{
    bi_schubert, certify, check_embedding, degrees_up_to, verify_upper_global, Basis, CanonError, CanonicalElement,
};
use qschubert_freealg::{Algebra, NcElement};
use qschubert_pbw::PbwFrame;
use qschubert_rootdata::{format_word, make_reduced_word, Weight};
use serde_json::{json, Value};

use crate::config::{CheckLevel, DatumSource, Format, RunConfig};
use crate::golden::{self, Check};
use crate::{cache, render, suite, CliError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Roots,
    Relations,
    Basis,
    Expand,
    Verify,
    Compare,
    Embed,
    Bischubert,
    Strings,
}

/// Output of one command: `ok` is false when a verification failed.
#[derive(Debug, Clone)]
pub struct Report {
    pub ok: bool,
    pub text: String,
    pub json: Value,
}

impl Report {
    pub fn render(&self, f: Format) -> String {
        match f {
            Format::Text => self.text.clone(),
            Format::Json => serde_json::to_string_pretty(&self.json).expect("serializable") + "\n",
        }
    }
}

pub fn run(cmd: Command, cfg: &RunConfig) -> Result<Report, CliError> {
    let alg = cfg.algebra()?;
    match cmd {
        Command::Roots => roots(&alg, cfg),
        Command::Relations => relations(&alg, cfg),
        Command::Basis => basis(&alg, cfg, false),
        Command::Strings => strings(&alg, cfg),
        Command::Expand => expand(&alg, cfg),
        Command::Verify => verify(&alg, cfg),
        Command::Compare => compare(&alg, cfg),
        Command::Embed => embed(&alg, cfg),
        Command::Bischubert => bischubert(&alg, cfg),
    }
}

fn frame(alg: &Arc<Algebra>, w: &[usize]) -> Result<Arc<PbwFrame>, CliError> {
    let word = make_reduced_word(alg.datum(), w)?;
    Ok(Arc::new(PbwFrame::new(alg.clone(), word)?))
}

fn datum_label(cfg: &RunConfig, alg: &Algebra) -> String {
    match &cfg.datum {
        DatumSource::Preset(p) => p.clone(),
        DatumSource::File(_) => alg.datum().to_json(),
    }
}

fn header(cfg: &RunConfig, alg: &Algebra, w: &[usize]) -> (String, Value) {
    let d = datum_label(cfg, alg);
    (format!("type {d}, word {}\n", format_word(w)), json!({ "type": d, "word": one_based(w) }))
}

fn one_based(w: &[usize]) -> Vec<usize> {
    w.iter().map(|i| i + 1).collect()
}

fn solved(cfg: &RunConfig, basis: &Basis) -> Result<Vec<Weight>, CliError> {
    let gs = degrees_up_to(basis.frame(), cfg.degree_bound);
    cache::solve(cfg.cache_dir.as_deref(), basis, &gs)?;
    Ok(gs)
}

fn roots(alg: &Arc<Algebra>, cfg: &RunConfig) -> Result<Report, CliError> {
    let w = cfg.word()?;
    let f = frame(alg, w)?;
    let (mut text, mut js) = header(cfg, alg, w);
    let mut items = Vec::new();
    for (k, x) in f.root_vectors().iter().enumerate() {
        let g = &f.roots()[k];
        let s = qschubert_canon::string_name(alg, x).ok();
        let label = s.as_deref().map(render::string_label).unwrap_or_else(|| "-".into());
        writeln!(text, "X_{}  letter {}  degree {g}  {label}", k + 1, w[k] + 1).unwrap();
        items.push(json!({
            "index": k + 1,
            "node": w[k] + 1,
            "degree": g.0,
            "string": s.as_deref().map(render::string_json),
            "element": x.to_json_value(),
        }));
    }
    js["root_vectors"] = Value::Array(items);
    Ok(Report { ok: true, text, json: js })
}

fn relations(alg: &Arc<Algebra>, cfg: &RunConfig) -> Result<Report, CliError> {
    let w = cfg.word()?;
    let f = frame(alg, w)?;
    let (mut text, mut js) = header(cfg, alg, w);
    let mut items = Vec::new();
    for r in golden::frame_relations(&f)? {
        let rhs =
            if r.coords.is_zero() { "0".to_string() } else { format!("({}) * ({})", r.coeff, render::pbw(&r.coords)) };
        writeln!(text, "X_{} X_{} - v^{} X_{} X_{} = {rhs}", r.k + 1, r.l + 1, r.t, r.l + 1, r.k + 1).unwrap();
        items.push(json!({
            "k": r.k + 1,
            "l": r.l + 1,
            "t": r.t,
            "coeff": r.coeff.to_string(),
            "rhs": render::pbw_json(&r.coords),
            "element": r.rhs.to_json_value(),
        }));
    }
    js["relations"] = Value::Array(items);
    Ok(Report { ok: true, text, json: js })
}

fn element_json(frame: &PbwFrame, b: &CanonicalElement) -> Result<(String, Value, bool), CliError> {
    let cert = certify(frame, b)?;
    let label = render::string_label(&b.string);
    let status = match cert.failure() {
        None => "certified".to_string(),
        Some(f) => format!("FAILED: {f}"),
    };
    let text = format!(
        "  b{} = {}\n    string {label}  norm {}  {status}\n",
        render::exponent(&b.a),
        render::pbw(&b.coords),
        b.norm
    );
    let js = json!({
        "exponent": b.a,
        "coords": render::pbw_json(&b.coords),
        "string": render::string_json(&b.string),
        "name": label,
        "norm": b.norm.to_string(),
        "certificate": { "passed": cert.passed(), "failure": cert.failure() },
        "element": b.expansion(frame)?.to_json_value(),
    });
    Ok((text, js, cert.passed()))
}

fn basis(alg: &Arc<Algebra>, cfg: &RunConfig, names_only: bool) -> Result<Report, CliError> {
    let w = cfg.word()?;
    let b = Basis::new(frame(alg, w)?);
    let gs = solved(cfg, &b)?;
    let (mut text, mut js) = header(cfg, alg, w);
    let mut ok = true;
    let mut slices = Vec::new();
    for g in &gs {
        writeln!(text, "degree {g}").unwrap();
        let mut items = Vec::new();
        for e in b.slice(g)?.iter() {
            if names_only {
                writeln!(text, "  b{}  {}", render::exponent(&e.a), render::string_label(&e.string)).unwrap();
                items.push(json!({ "exponent": e.a, "string": render::string_json(&e.string), "name": render::string_label(&e.string) }));
            } else {
                let (t, j, passed) = element_json(b.frame(), e)?;
                ok &= passed;
                text.push_str(&t);
                items.push(j);
            }
        }
        slices.push(json!({ "degree": g.0, "elements": items }));
    }
    js["degree_bound"] = json!(cfg.degree_bound);
    js["slices"] = Value::Array(slices);
    Ok(Report { ok, text, json: js })
}

fn input_element(alg: &Algebra, cfg: &RunConfig) -> Result<NcElement, CliError> {
    let s = cfg.element.as_deref().ok_or_else(|| CliError::Invalid("--element is required".into()))?;
    let x = if s.trim_start().starts_with('{') {
        NcElement::from_json(alg.datum(), s)
    } else {
        NcElement::parse(alg.datum(), s)
    };
    x.map_err(|e| CliError::Invalid(e.to_string()))
}

fn strings(alg: &Arc<Algebra>, cfg: &RunConfig) -> Result<Report, CliError> {
    if cfg.element.is_none() {
        return basis(alg, cfg, true);
    }
    let x = input_element(alg, cfg)?;
    let cert = match verify_upper_global(alg, &x) {
        Ok(c) => c,
        Err(CanonError::NotSigned(s)) => {
            let text = format!("not in the signed basis: string scalar {s}\n");
            return Ok(Report { ok: false, text, json: json!({ "signed": false, "scalar": s }) });
        }
        Err(e) => return Err(e.into()),
    };
    let label = render::string_label(&cert.string);
    let text = match cert.failure() {
        None => format!("{label}\n"),
        Some(f) => format!("{label} (not canonical: {f})\n"),
    };
    let js = json!({
        "string": render::string_json(&cert.string),
        "name": label,
        "scalar": cert.scalar.to_string(),
        "canonical": cert.passed(),
        "failure": cert.failure(),
    });
    Ok(Report { ok: cert.passed(), text, json: js })
}

fn expand(alg: &Arc<Algebra>, cfg: &RunConfig) -> Result<Report, CliError> {
    let w = cfg.word()?;
    let b = Basis::new(frame(alg, w)?);
    let x = input_element(alg, cfg)?;
    let (mut text, mut js) = header(cfg, alg, w);
    let mut ok = true;
    let mut parts = Vec::new();
    for (g, d) in alg.duals(&x)? {
        match b.frame().expand_dual(&d) {
            Ok(v) => {
                let hit = b.find(&d)?;
                let tag = hit.as_ref().map(|e| format!("  = b{}", render::exponent(&e.a))).unwrap_or_default();
                writeln!(text, "degree {g}: {}{tag}", render::pbw(&v)).unwrap();
                parts.push(json!({
                    "degree": g.0,
                    "coords": render::pbw_json(&v),
                    "canonical": hit.map(|e| e.a),
                }));
            }
            Err(qschubert_pbw::PbwError::NotInCell(m)) => {
                ok = false;
                writeln!(text, "degree {g}: not in the cell ({m})").unwrap();
                parts.push(json!({ "degree": g.0, "coords": Value::Null, "canonical": Value::Null }));
            }
            Err(e) => return Err(e.into()),
        }
    }
    js["components"] = Value::Array(parts);
    Ok(Report { ok, text, json: js })
}

fn report_checks(mut text: String, mut js: Value, checks: &[Check]) -> Report {
    let mut items = Vec::new();
    for c in checks {
        let mark = if c.ok { "PASS" } else { "FAIL" };
        if c.ok {
            writeln!(text, "{mark} {}", c.name).unwrap();
        } else {
            writeln!(text, "{mark} {}: {}", c.name, c.detail).unwrap();
        }
        items.push(json!({ "check": c.name, "passed": c.ok, "detail": c.detail }));
    }
    let ok = checks.iter().all(|c| c.ok);
    writeln!(text, "{}", if ok { "all checks passed" } else { "verification failed" }).unwrap();
    js["checks"] = Value::Array(items);
    js["passed"] = json!(ok);
    Report { ok, text, json: js }
}

fn verify(alg: &Arc<Algebra>, cfg: &RunConfig) -> Result<Report, CliError> {
    let w = cfg.word()?;
    let b = Basis::new(frame(alg, w)?);
    let gs = solved(cfg, &b)?;
    let (text, js) = header(cfg, alg, w);
    let mut checks = vec![suite::certificates(&b, &gs)?, suite::bar_matrices(&b, &gs)?];
    checks.extend(suite::closed_form(&b, &gs)?);
    if cfg.check_level == CheckLevel::Full {
        checks.push(suite::uniqueness(&b, &gs, cfg.seed)?);
        checks.push(suite::orthonormality(b.frame(), &gs, 50, cfg.seed)?);
        checks.push(suite::stability(&b, &gs)?);
        if let Some(w2) = &cfg.word2 {
            let b2 = Basis::new(frame(alg, w2)?);
            let gs2 = solved(cfg, &b2)?;
            let mut all = gs.clone();
            all.extend(gs2);
            all.sort();
            all.dedup();
            checks.push(suite::independence(&b, &b2, &all).map_err(mismatch)?);
        }
        if let DatumSource::Preset(p) = &cfg.datum {
            if let Some(g) = golden::for_preset(p) {
                checks.extend(golden::run_all(alg, &g, cfg.degree_bound)?);
            }
        }
    }
    Ok(report_checks(text, js, &checks))
}

fn mismatch(e: CliError) -> CliError {
    match e {
        CliError::Compute(m) if m.contains("different Weyl group elements") => CliError::Invalid(m),
        e => e,
    }
}

fn compare(alg: &Arc<Algebra>, cfg: &RunConfig) -> Result<Report, CliError> {
    let (w, w2) = (cfg.word()?, cfg.word2()?);
    let (b1, b2) = (Basis::new(frame(alg, w)?), Basis::new(frame(alg, w2)?));
    if b1.frame().word().root_set() != b2.frame().word().root_set() {
        return Err(CliError::Invalid(format!("{} and {} are different elements", format_word(w), format_word(w2))));
    }
    let gs = solved(cfg, &b1)?;
    solved(cfg, &b2)?;
    let (text, mut js) = header(cfg, alg, w);
    js["word2"] = json!(one_based(w2));
    Ok(report_checks(text, js, &[suite::independence(&b1, &b2, &gs)?]))
}

fn embed(alg: &Arc<Algebra>, cfg: &RunConfig) -> Result<Report, CliError> {
    let (w, w2) = (cfg.word()?, cfg.word2()?);
    let (f1, f2) = (frame(alg, w)?, frame(alg, w2)?);
    if !qschubert_rootdata::length_additive(alg.datum(), f1.word(), f2.word()) {
        return Err(CliError::Invalid(format!("{} {} is not reduced", format_word(w), format_word(w2))));
    }
    let joined: Vec<usize> = w.iter().chain(w2).copied().collect();
    let (bw, bw2, bww) = (Basis::new(f1), Basis::new(f2), Basis::new(frame(alg, &joined)?));
    let mut gs = solved(cfg, &bw)?;
    gs.extend(solved(cfg, &bw2)?);
    gs.sort_by(|a, b| (a.height(), &a.0).cmp(&(b.height(), &b.0)));
    gs.dedup();
    let mut fails = Vec::new();
    let (mut direct, mut twisted) = (0, 0);
    for g in &gs {
        let r = check_embedding(&bw, &bw2, &bww, g)?;
        direct += r.direct;
        twisted += r.twisted;
        fails.extend(r.failures);
    }
    let c = Check {
        name: format!("B(w) in B(ww') for {direct} elements, T_w(B(w')) in B(ww') for {twisted} elements"),
        ok: fails.is_empty(),
        detail: fails.join("; "),
    };
    let (text, mut js) = header(cfg, alg, w);
    js["word2"] = json!(one_based(w2));
    Ok(report_checks(text, js, &[c]))
}

fn bischubert(alg: &Arc<Algebra>, cfg: &RunConfig) -> Result<Report, CliError> {
    let (w, w2) = (cfg.word()?, cfg.word2()?);
    let (bw, bw2) = (Basis::new(frame(alg, w)?), Basis::new(frame(alg, w2)?));
    let gs = solved(cfg, &bw)?;
    let (mut text, mut js) = header(cfg, alg, w);
    writeln!(text, "B(w) ∩ B(w')^* with w' = {}", format_word(w2)).unwrap();
    let mut slices = Vec::new();
    let mut sizes = Vec::new();
    for g in &gs {
        let els = bi_schubert(&bw, &bw2, g)?;
        if els.is_empty() {
            continue;
        }
        writeln!(text, "degree {g}: {} elements", els.len()).unwrap();
        let mut items = Vec::new();
        for e in &els {
            writeln!(text, "  b{}  {}", render::exponent(&e.a), render::string_label(&e.string)).unwrap();
            items.push(json!({ "exponent": e.a, "string": render::string_json(&e.string) }));
        }
        sizes.push(json!({ "degree": g.0, "size": els.len(), "slice": bw.slice(g)?.len() }));
        slices.push(json!({ "degree": g.0, "elements": items }));
    }
    writeln!(text, "(experimental probe: sizes are reported, no structure is asserted)").unwrap();
    js["word2"] = json!(one_based(w2));
    js["slices"] = Value::Array(slices);
    js["probe"] = json!({ "sizes": sizes });
    Ok(Report { ok: true, text, json: js })
}
