//! Invariant checks over the solved slices of one frame.

use qschubert_canon::{
    certify, check_bar_matrix, check_ti_stability, closed_form_basis, compare_frames, lusztig_solve_with,
    single_repetition, Basis,
};
use qschubert_coeff::{Laurent, Rat};
use qschubert_pbw::PbwFrame;
use qschubert_rootdata::Weight;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::golden::Check;
use crate::CliError;

fn check(name: impl Into<String>, fails: Vec<String>) -> Check {
    Check { name: name.into(), ok: fails.is_empty(), detail: fails.join("; ") }
}

/// Every solved element passes the upper global certificate, and its label
/// has the slice degree.
pub fn certificates(basis: &Basis, gs: &[Weight]) -> Result<Check, CliError> {
    let frame = basis.frame();
    let mut fails = Vec::new();
    let mut n = 0;
    for g in gs {
        for b in basis.slice(g)?.iter() {
            n += 1;
            if &frame.weight_of(&b.a) != g {
                fails.push(format!("b{:?} has degree {}", b.a, frame.weight_of(&b.a)));
            }
            let c = certify(frame, b)?;
            if let Some(f) = c.failure() {
                fails.push(format!("b{:?}: {f}", b.a));
            }
        }
    }
    Ok(check(format!("certificates of {n} elements"), fails))
}

pub fn bar_matrices(basis: &Basis, gs: &[Weight]) -> Result<Check, CliError> {
    let mut fails = Vec::new();
    for g in gs {
        basis.slice(g)?;
        let m = basis.bar_matrix(g)?;
        fails.extend(check_bar_matrix(basis.frame(), &m)?.into_iter().map(|f| format!("{g}: {f}")));
    }
    Ok(check(format!("bar matrices of {} slices", gs.len()), fails))
}

/// The closed form agrees with the solver; `None` when the word repeats more
/// than one letter.
pub fn closed_form(basis: &Basis, gs: &[Weight]) -> Result<Option<Check>, CliError> {
    let frame = basis.frame();
    let rep = single_repetition(frame)?;
    if rep.is_none() && !frame.word().is_repetition_free() {
        return Ok(None);
    }
    let mut fails = Vec::new();
    for g in gs {
        let cf = closed_form_basis(frame, g)?;
        let sol = basis.slice(g)?;
        if cf.len() != sol.len() {
            fails.push(format!("{g}: {} closed-form elements, {} solved", cf.len(), sol.len()));
            continue;
        }
        for (b, (label, v)) in sol.iter().zip(&cf) {
            if &b.a != label || &b.coords != v {
                fails.push(format!("{g}: b{:?} differs from the closed form", b.a));
            }
            if rep.is_some() && !qschubert_canon::transition_check(frame, &b.a)? {
                fails.push(format!("{g}: transition coefficients fail at {:?}", b.a));
            }
        }
    }
    Ok(Some(check(format!("closed form on {} slices", gs.len()), fails)))
}

/// A random linear extension of the order on the slice `g`.
fn random_extension(frame: &PbwFrame, g: &Weight, rng: &mut StdRng) -> Result<Vec<usize>, CliError> {
    let slice = frame.slice(g);
    let mut left: Vec<usize> = (0..slice.len()).collect();
    let mut order = Vec::with_capacity(left.len());
    while !left.is_empty() {
        let mut minimal = Vec::new();
        for &x in &left {
            let mut min = true;
            for &y in &left {
                if frame.order_lt(&slice.exps[y], &slice.exps[x])? {
                    min = false;
                    break;
                }
            }
            if min {
                minimal.push(x);
            }
        }
        let pick = minimal[rng.gen_range(0..minimal.len())];
        left.retain(|&x| x != pick);
        order.push(pick);
    }
    Ok(order)
}

/// Re-solving along a random linear extension gives the same elements.
pub fn uniqueness(basis: &Basis, gs: &[Weight], seed: u64) -> Result<Check, CliError> {
    let frame = basis.frame();
    let mut rng = StdRng::seed_from_u64(seed);
    let mut fails = Vec::new();
    for g in gs {
        let order = random_extension(frame, g, &mut rng)?;
        let other = lusztig_solve_with(frame, g, &order)?;
        for (x, y) in basis.slice(g)?.iter().zip(&other) {
            if x.coords != y.coords {
                fails.push(format!("{g}: b{:?} depends on the order", x.a));
            }
        }
    }
    Ok(check(format!("uniqueness on {} slices", gs.len()), fails))
}

/// `mu^-1 <<X^a, X^a'>> = delta prod_r prod_{t <= a_r} (1 - q_{i_r}^{-2t})`
/// on `pairs` random pairs of equal degree.
pub fn orthonormality(frame: &PbwFrame, gs: &[Weight], pairs: usize, seed: u64) -> Result<Check, CliError> {
    let alg = frame.algebra();
    let d = alg.datum();
    let mut rng = StdRng::seed_from_u64(seed);
    let mut fails = Vec::new();
    if gs.is_empty() {
        return Ok(check("orthonormality: no degrees", vec!["no degrees to sample".into()]));
    }
    for _ in 0..pairs {
        let g = &gs[rng.gen_range(0..gs.len())];
        let slice = frame.slice(g);
        let a = &slice.exps[rng.gen_range(0..slice.len())];
        let a2 = if rng.gen_bool(0.5) { a } else { &slice.exps[rng.gen_range(0..slice.len())] };
        let x = frame.pbw_monomial(a, false)?;
        let y = frame.pbw_monomial(a2, false)?;
        let got = alg.pair(&x, &y)?.div_laurent(&d.mu(g));
        let want = if a == a2 {
            let mut p = Laurent::one();
            for (k, &n) in a.iter().enumerate() {
                let s = d.qi_scale(frame.word().letters()[k]);
                for t in 1..=n as i32 {
                    p = &p * &(&Laurent::one() - &Laurent::v(-2 * s * t));
                }
            }
            Rat::from(p)
        } else {
            Rat::zero()
        };
        if got != want {
            fails.push(format!("<<X^{a:?}, X^{a2:?}>> = {got}"));
        }
    }
    Ok(check(format!("orthonormality on {pairs} pairs"), fails))
}

/// Braid stability for every node.
pub fn stability(basis: &Basis, gs: &[Weight]) -> Result<Check, CliError> {
    let rank = basis.frame().algebra().rank();
    let mut fails = Vec::new();
    let mut checked = 0;
    for g in gs {
        for i in 0..rank {
            let r = check_ti_stability(basis, g, i)?;
            checked += r.checked;
            fails.extend(r.failures);
        }
    }
    Ok(check(format!("T_i stability of {checked} elements"), fails))
}

pub fn independence(b1: &Basis, b2: &Basis, gs: &[Weight]) -> Result<Check, CliError> {
    let mut fails = Vec::new();
    for g in gs {
        if !compare_frames(b1, b2, g)? {
            fails.push(format!("{g}: bases differ"));
        }
    }
    Ok(check(format!("{} and {} on {} slices", b1.frame().word(), b2.frame().word(), gs.len()), fails))
}
