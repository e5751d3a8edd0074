//! Acceptance criteria 1-12, one PASS/FAIL line each.

use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use qschubert_braid::{cg_coefficient, cg_fact};
use qschubert_canon::{certify, check_bar_matrix, check_embedding, degrees_up_to, Basis};
use qschubert_cli::golden::{self, Check};
use qschubert_cli::suite;
use qschubert_coeff::{binom, round_int, Laurent, Rat};
use qschubert_freealg::{Algebra, Limits, NcElement};
use qschubert_pbw::{PbwFrame, PbwVector};
use qschubert_rootdata::{make_reduced_word, RootDatum, Weight};

type Outcome = Result<String, String>;

/// Bases solved by the criteria, for the certification and bar-matrix sweeps.
static SOLVED: Mutex<Vec<(&'static str, Arc<Basis>)>> = Mutex::new(Vec::new());

fn algebra(name: &str) -> Arc<Algebra> {
    let lim = Limits { max_height: 16, ..Limits::default() };
    Arc::new(Algebra::new(RootDatum::preset(name).unwrap()).with_limits(lim))
}

fn frame(alg: &Arc<Algebra>, w: &[usize]) -> Result<Arc<PbwFrame>, String> {
    let word =
        make_reduced_word(alg.datum(), &w.iter().map(|i| i - 1).collect::<Vec<_>>()).map_err(|e| e.to_string())?;
    Ok(Arc::new(PbwFrame::new(alg.clone(), word).map_err(|e| e.to_string())?))
}

fn basis(tag: &'static str, alg: &Arc<Algebra>, w: &[usize]) -> Result<Arc<Basis>, String> {
    let b = Arc::new(Basis::new(frame(alg, w)?));
    SOLVED.lock().unwrap().push((tag, b.clone()));
    Ok(b)
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn checks(cs: Vec<Check>) -> Outcome {
    let bad: Vec<String> = cs.iter().filter(|c| !c.ok).map(|c| format!("{}: {}", c.name, c.detail)).collect();
    if bad.is_empty() {
        Ok(cs.iter().map(|c| c.name.clone()).collect::<Vec<_>>().join(", "))
    } else {
        Err(bad.join(" | "))
    }
}

fn within(t: Instant, budget: Duration, r: Outcome) -> Outcome {
    let el = t.elapsed();
    let r = r?;
    if el > budget {
        return Err(format!("{r}; took {el:.2?}, budget {budget:?}"));
    }
    Ok(r)
}

fn c1() -> Outcome {
    let t = Instant::now();
    let alg = algebra("A2");
    let b = basis("A2 (1,2,1)", &alg, &[1, 2, 1])?;
    let s = b.slice(&Weight(vec![1, 1])).map_err(err)?;
    let mut lower = PbwVector::unit(vec![1, 0, 1]);
    lower.add_term(&[0, 1, 0], &-Rat::v(-2));
    let want = [PbwVector::unit(vec![0, 1, 0]), lower];
    let got: Vec<PbwVector> = s.iter().map(|e| e.coords.clone()).collect();
    if got != want {
        return Err(format!("slice is {got:?}"));
    }
    // (q^{1/2} E1 E2 - q^{-1/2} E2 E1) / (q - q^-1), with v = q^{1/2}
    let e12 = NcElement::word(alg.datum(), &[0, 1]);
    let e21 = NcElement::word(alg.datum(), &[1, 0]);
    let den = Rat::new(Laurent::one(), &Laurent::v(2) - &Laurent::v(-2)).map_err(err)?;
    let hand = e12.shift(1).sub(&e21.shift(-1)).scale(&den);
    let x = s[1].expansion(b.frame()).map_err(err)?;
    if !alg.equal(&x, &hand).map_err(err)? {
        return Err(format!("b(1,0,1) = {x}"));
    }
    within(t, Duration::from_secs(1), Ok("slice {X^(0,1,0), X^(1,0,1) - v^-2 X^(0,1,0)} and its word form".into()))
}

fn c2() -> Outcome {
    let t = Instant::now();
    let mut cs = Vec::new();
    for (name, w1, w2) in [
        ("A2", vec![1, 2, 1], vec![2, 1, 2]),
        ("B2", vec![1, 2, 1, 2], vec![2, 1, 2, 1]),
        ("C2", vec![1, 2, 1, 2], vec![2, 1, 2, 1]),
    ] {
        let alg = algebra(name);
        let (b1, b2) = (basis("reduced words", &alg, &w1)?, basis("reduced words", &alg, &w2)?);
        let gs = degrees_up_to(b1.frame(), 6);
        b1.solve_all(&gs).map_err(err)?;
        b2.solve_all(&gs).map_err(err)?;
        let mut c = suite::independence(&b1, &b2, &gs).map_err(err)?;
        c.name = format!("{name} {}", c.name);
        cs.push(c);
    }
    within(t, Duration::from_secs(60), checks(cs))
}

fn c3() -> Outcome {
    let t = Instant::now();
    let alg = algebra("A3");
    let g = golden::load(golden::A3).map_err(err)?;
    let named = golden::named(&alg, &g).map_err(err)?;
    let cs = vec![
        golden::check_names(&named).map_err(err)?,
        golden::check_root_vectors(&named, 6).map_err(err)?,
        golden::check_t_inverse(&named, g.t_inverse.as_ref().ok_or("no table")?).map_err(err)?,
    ];
    within(t, Duration::from_secs(120), checks(cs))
}

fn c4() -> Outcome {
    let alg = algebra("A3");
    let g = golden::load(golden::A3).map_err(err)?;
    let named = golden::named(&alg, &g).map_err(err)?;
    let rel = g.relations.iter().find(|r| r.word == [2, 1, 3, 2]).ok_or("no relations for (2,1,3,2)")?;
    checks(vec![golden::check_relations(&named, rel).map_err(err)?])
}

fn c5() -> Outcome {
    let t = Instant::now();
    let alg = algebra("C2");
    let g = golden::load(golden::C2).map_err(err)?;
    let named = golden::named(&alg, &g).map_err(err)?;
    let desc = &g.descriptions[0];
    let b = basis("C2 (1,2,1,2)", &alg, &desc.word)?;
    let mut gs: Vec<Weight> = Vec::new();
    for a in 0..81u32 {
        let e = vec![a % 3, a / 3 % 3, a / 9 % 3, a / 27];
        let w = b.frame().weight_of(&e);
        if !w.is_zero() && !gs.contains(&w) {
            gs.push(w);
        }
    }
    gs.sort_by(|x, y| (x.height(), &x.0).cmp(&(y.height(), &y.0)));
    b.solve_all(&gs).map_err(err)?;
    let cs =
        vec![golden::check_names(&named).map_err(err)?, golden::check_description(&named, desc, &b, &gs).map_err(err)?];
    within(t, Duration::from_secs(600), checks(cs))
}

fn c6() -> Outcome {
    let mut cs = Vec::new();
    for (k, (name, w)) in
        [("A2", vec![1, 2, 1]), ("A3", vec![1, 2, 1, 3, 2, 1]), ("B2", vec![1, 2, 1, 2]), ("C2", vec![1, 2, 1, 2])]
            .into_iter()
            .enumerate()
    {
        let alg = algebra(name);
        let f = frame(&alg, &w)?;
        let gs = degrees_up_to(&f, 6);
        let mut c = suite::orthonormality(&f, &gs, 50, 17 + k as u64).map_err(err)?;
        c.name = format!("{name} {}", c.name);
        cs.push(c);
    }
    checks(cs)
}

fn c7() -> Outcome {
    let solved = SOLVED.lock().unwrap().clone();
    let mut n = 0;
    let mut fails = Vec::new();
    for (tag, b) in &solved {
        for g in b.solved_degrees() {
            for e in b.slice(&g).map_err(err)?.iter() {
                n += 1;
                let c = certify(b.frame(), e).map_err(err)?;
                if !c.passed() || !c.scalar.is_one() {
                    fails.push(format!("{tag} b{:?}: {:?}", e.a, c.failure()));
                }
            }
        }
    }
    if n == 0 {
        return Err("nothing solved".into());
    }
    if fails.is_empty() {
        Ok(format!("{n} elements certified"))
    } else {
        Err(fails.join("; "))
    }
}

fn c8() -> Outcome {
    let mut cs = Vec::new();
    for (name, w) in [("A2", vec![1, 2, 1]), ("B2", vec![1, 2, 1, 2])] {
        let alg = algebra(name);
        let b = basis("stability", &alg, &w)?;
        let gs = degrees_up_to(b.frame(), 5);
        let mut c = suite::stability(&b, &gs).map_err(err)?;
        c.name = format!("{name} {}", c.name);
        cs.push(c);
    }
    checks(cs)
}

fn c9() -> Outcome {
    let mut cs = Vec::new();
    for (name, w, w2) in [("A2", vec![1], vec![2, 1]), ("A3", vec![2], vec![1, 3, 2]), ("C2", vec![2], vec![1, 2, 1])] {
        let alg = algebra(name);
        let joined: Vec<usize> = w.iter().chain(&w2).copied().collect();
        let (bw, bw2, bww) =
            (basis("embedding", &alg, &w)?, basis("embedding", &alg, &w2)?, basis("embedding", &alg, &joined)?);
        let mut gs = degrees_up_to(bw.frame(), 5);
        gs.extend(degrees_up_to(bw2.frame(), 5));
        gs.sort();
        gs.dedup();
        let mut fails = Vec::new();
        let (mut d, mut t) = (0, 0);
        for g in &gs {
            let r = check_embedding(&bw, &bw2, &bww, g).map_err(err)?;
            d += r.direct;
            t += r.twisted;
            fails.extend(r.failures);
        }
        cs.push(Check {
            name: format!("{name} {w:?}+{w2:?}: {d} direct, {t} twisted"),
            ok: fails.is_empty() && d > 0 && t > 0,
            detail: fails.join("; "),
        });
    }
    checks(cs)
}

/// Reduced words of length at most `n` in which exactly `reps` letters occur
/// twice and no letter more often.
fn words(alg: &Algebra, n: usize, reps: usize) -> Vec<Vec<usize>> {
    let r = alg.rank();
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = vec![vec![]];
    while let Some(w) = stack.pop() {
        let mut count = vec![0; r];
        for &l in &w {
            count[l - 1] += 1;
        }
        let twice = count.iter().filter(|&&c| c == 2).count();
        if !w.is_empty() && twice == reps && count.iter().all(|&c| c <= 2) {
            out.push(w.clone());
        }
        if w.len() < n {
            for l in 1..=r {
                let mut x = w.clone();
                x.push(l);
                let z: Vec<usize> = x.iter().map(|i| i - 1).collect();
                if make_reduced_word(alg.datum(), &z).is_ok() {
                    stack.push(x);
                }
            }
        }
    }
    out.sort();
    out
}

fn c10() -> Outcome {
    let mut cs = Vec::new();
    let a3 = algebra("A3");
    let mut frames: Vec<(Arc<Algebra>, Vec<usize>)> = words(&a3, 3, 0).into_iter().map(|w| (a3.clone(), w)).collect();
    for name in ["A2", "B2", "A3"] {
        let alg = algebra(name);
        frames.extend(words(&alg, 6, 1).into_iter().map(|w| (alg.clone(), w)));
    }
    let count = frames.len();
    for (alg, w) in frames {
        let b = basis("closed form", &alg, &w)?;
        let gs = degrees_up_to(b.frame(), 6);
        match suite::closed_form(&b, &gs).map_err(err)? {
            Some(c) if c.ok => {}
            Some(c) => cs.push(Check { name: format!("{:?} {w:?}", alg.datum().name()), ..c }),
            None => return Err(format!("{w:?} is not covered by the closed form")),
        }
    }
    cs.push(Check { name: format!("{count} frames"), ok: true, detail: String::new() });
    checks(cs)
}

fn c11() -> Outcome {
    let t = Instant::now();
    let c = |r, t1, t2, m, n| cg_coefficient(r, t1, t2, m, n).map_err(err);
    let mut checked = 0;
    for m in 0..=6i64 {
        for n in 0..=6i64 {
            for r in 0..=m.min(n) {
                for t1 in 0..=m {
                    for t2 in 0..=n {
                        let x = c(r, t1, t2, m, n)?;
                        let sym = c(r, m - t1, n - t2, m, n)?;
                        let want = if r % 2 == 0 { x.bar() } else { -x.bar() };
                        if sym != want {
                            return Err(format!("symmetry at r={r} t'={t1} t''={t2} m={m} n={n}"));
                        }
                        let mut rhs = Laurent::zero();
                        if t1 < m {
                            rhs = &rhs + &(&round_int(m - t1, 2) * &c(r, t1 + 1, t2, m, n)?).shift((2 * t2 - n) as i32);
                        }
                        if t2 < n {
                            rhs = &rhs + &(&round_int(n - t2, 2) * &c(r, t1, t2 + 1, m, n)?).shift((m - 2 * t1) as i32);
                        }
                        if &round_int(m + n - r - t1 - t2, 2) * &x != rhs {
                            return Err(format!("first recurrence at r={r} t'={t1} t''={t2} m={m} n={n}"));
                        }
                        let mut rhs = Laurent::zero();
                        if t1 > 0 {
                            rhs = &rhs + &(&round_int(t1, 2) * &c(r, t1 - 1, t2, m, n)?).shift((2 * t2 - n) as i32);
                        }
                        if t2 > 0 {
                            rhs = &rhs + &(&round_int(t2, 2) * &c(r, t1, t2 - 1, m, n)?).shift((m - 2 * t1) as i32);
                        }
                        if &round_int(t1 + t2 - r, 2) * &x != rhs {
                            return Err(format!("second recurrence at r={r} t'={t1} t''={t2} m={m} n={n}"));
                        }
                        checked += 1;
                    }
                }
                for t1 in 0..=m {
                    let e = r * (1 + m + n - r) - n * t1;
                    let want =
                        (&cg_fact(n) * &binom(t1, r, 2).map_err(err)?).div_exact(&cg_fact(n - r)).ok_or("inexact")?;
                    if c(r, t1, 0, m, n)? != want.shift(e as i32) {
                        return Err(format!("boundary t''=0 at r={r} t'={t1} m={m} n={n}"));
                    }
                }
            }
        }
    }
    within(t, Duration::from_secs(10), Ok(format!("{checked} coefficients")))
}

fn c12() -> Outcome {
    let solved = SOLVED.lock().unwrap().clone();
    let mut n = 0;
    let mut fails = Vec::new();
    for (tag, b) in &solved {
        for g in b.solved_degrees() {
            n += 1;
            let m = b.bar_matrix(&g).map_err(err)?;
            for f in check_bar_matrix(b.frame(), &m).map_err(err)? {
                fails.push(format!("{tag} {g}: {f}"));
            }
        }
    }
    if n == 0 {
        return Err("nothing solved".into());
    }
    if fails.is_empty() {
        Ok(format!("{n} slices"))
    } else {
        Err(fails.join("; "))
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 12] = [
        ("A2 canonical slice", c1),
        ("reduced-word independence", c2),
        ("A3 golden tables", c3),
        ("A3 quantum-matrix relations", c4),
        ("C2 monomial description", c5),
        ("orthonormality of PBW monomials", c6),
        ("upper global certification", c7),
        ("T_i stability", c8),
        ("embeddings", c9),
        ("closed forms", c10),
        ("Clebsch-Gordan combinatorics", c11),
        ("bar-matrix structure", c12),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let r = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let el = t.elapsed();
        match r {
            Ok(m) => println!("PASS {:>2} {name}: {m} ({el:.1?})", k + 1),
            Err(m) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {m} ({el:.1?})", k + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
