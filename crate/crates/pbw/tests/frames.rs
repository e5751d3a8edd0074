use std::sync::Arc;

use qschubert_coeff::{Laurent, Rat};
use qschubert_freealg::Algebra;
use qschubert_pbw::*;
use qschubert_rootdata::{make_reduced_word, RootDatum, Weight};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn frame(name: &str, w: &[usize]) -> PbwFrame {
    let alg = Arc::new(Algebra::new(RootDatum::preset(name).unwrap()));
    let word = make_reduced_word(alg.datum(), w).unwrap();
    PbwFrame::new(alg, word).unwrap()
}

fn longest(name: &str) -> Vec<usize> {
    match name {
        "A2" => vec![0, 1, 0],
        "A3" => vec![0, 1, 0, 2, 1, 0],
        "B2" | "C2" => vec![0, 1, 0, 1],
        "G2" => vec![0, 1, 0, 1, 0, 1],
        _ => unreachable!(),
    }
}

/// All exponent vectors of total height at most `h`.
fn exps_up_to(f: &PbwFrame, h: i64) -> Vec<Exponent> {
    let mut out = vec![vec![0u32; f.len()]];
    let mut k = 0;
    while k < out.len() {
        let a = out[k].clone();
        for p in 0..f.len() {
            let mut b = a.clone();
            b[p] += 1;
            if f.weight_of(&b).height() <= h && !out.contains(&b) {
                out.push(b);
            }
        }
        k += 1;
    }
    out
}

#[test]
fn orthonormality_random_pairs() {
    let mut rng = StdRng::seed_from_u64(7);
    for name in ["A2", "A3", "B2", "C2"] {
        let f = frame(name, &longest(name));
        let a = f.algebra();
        let all = exps_up_to(&f, 6);
        for _ in 0..50 {
            let x = &all[rng.gen_range(0..all.len())];
            // half of the pairs share a degree so the off-diagonal zeros are exercised
            let y = if rng.gen_bool(0.5) {
                let s = f.slice(&f.weight_of(x));
                s.exps[rng.gen_range(0..s.len())].clone()
            } else {
                all[rng.gen_range(0..all.len())].clone()
            };
            let lhs = a.pair(&f.pbw_monomial(x, false).unwrap(), &f.pbw_monomial(&y, false).unwrap()).unwrap();
            let mu = a.datum().mu(&f.weight_of(x));
            let lhs = lhs.div_laurent(&mu);
            let want = if x == &y { Rat::from(f.norm(x).div_exact(&mu).unwrap()) } else { Rat::zero() };
            assert_eq!(lhs, want, "{name} {x:?} {y:?}");
            // the closed product
            let mut prod = Laurent::one();
            for (r, &n) in x.iter().enumerate() {
                let s = a.datum().qi_scale(f.word().letters()[r]);
                for t in 1..=n as i32 {
                    prod = &prod * &(&Laurent::one() - &Laurent::v(-2 * s * t));
                }
            }
            assert_eq!(f.norm(x), &mu * &prod);
        }
    }
}

#[test]
fn dual_pbw_pairing() {
    for name in ["A2", "B2", "C2"] {
        let f = frame(name, &longest(name));
        let a = f.algebra();
        for g in [Weight(vec![1, 1]), Weight(vec![2, 1]), Weight(vec![2, 2]), Weight(vec![1, 2])] {
            let s = f.slice(&g);
            for x in &s.exps {
                for y in &s.exps {
                    let p = a.pair(&f.pbw_monomial(x, false).unwrap(), &f.dual_monomial(y).unwrap()).unwrap();
                    let want = if x == y { Rat::one() } else { Rat::zero() };
                    assert_eq!(p, want, "{name} {x:?} {y:?}");
                    let p = a.pair(&f.pbw_monomial(x, false).unwrap(), &f.pbw_monomial(y, true).unwrap()).unwrap();
                    let want = if x == y { Rat::v(f.divided_shift(x)) } else { Rat::zero() };
                    assert_eq!(p, want, "{name} {x:?} {y:?}");
                }
            }
        }
    }
}

#[test]
fn monomials_lie_in_lattice_and_reconstruct() {
    for name in ["A2", "A3", "B2", "C2", "G2"] {
        let f = frame(name, &longest(name));
        let a = f.algebra();
        for x in exps_up_to(&f, 4) {
            let m = f.pbw_monomial(&x, false).unwrap();
            assert!(a.lattice_member(&m).unwrap(), "{name} {x:?}");
            assert_eq!(f.pbw_expand(&m).unwrap(), PbwVector::unit(x.clone()));
            assert!(a.equal(&f.element_of(&PbwVector::unit(x.clone())).unwrap(), &m).unwrap());
        }
    }
}

fn bar_laurent(x: &Laurent) -> Laurent {
    x.bar()
}

#[test]
fn bar_matrix_structure() {
    for name in ["A2", "A3", "B2", "C2"] {
        let f = frame(name, &longest(name));
        for x in exps_up_to(&f, 5) {
            let g = f.weight_of(&x);
            let m = f.bar_matrix(&g).unwrap();
            let n = m.exps.len();
            for i in 0..n {
                assert!(m.rows[i][i].is_one());
                for j in 0..n {
                    if i != j && !m.rows[i][j].is_zero() {
                        assert!(f.order_lt(&m.exps[j], &m.exps[i]).unwrap(), "{name} {:?} {:?}", m.exps[i], m.exps[j]);
                        assert!(m.rows[i][j].exponents_even());
                    }
                }
            }
            // bar(M) M = I
            for i in 0..n {
                for j in 0..n {
                    let mut s = Laurent::zero();
                    for k in 0..n {
                        s = &s + &(&bar_laurent(&m.rows[i][k]) * &m.rows[k][j]);
                    }
                    assert_eq!(s.is_one(), i == j);
                    assert_eq!(s.is_zero(), i != j);
                }
            }
        }
    }
}

#[test]
fn quantum_matrix_relations() {
    let f = frame("A3", &[1, 0, 2, 1]);
    // [E_2, E_213] = (q^-1 - q) E_21 E_23 in this frame reads X_4 X_1 straightened
    assert_eq!(f.straighten(1, 4).unwrap(), PbwVector::unit(vec![0, 1, 1, 0]));
    assert!(f.straighten(2, 3).unwrap().is_zero());
    assert!(f.straighten(1, 2).unwrap().is_zero());
    assert!(f.straighten(3, 4).unwrap().is_zero());
}

#[test]
fn lambda_pairing_and_commutators() {
    let mut rng = StdRng::seed_from_u64(11);
    for name in ["A2", "A3", "B2", "C2"] {
        let f = frame(name, &longest(name));
        let m = f.len();
        for k in 0..m {
            for l in 0..m {
                assert_eq!(f.lambda()[k][l], -f.lambda()[l][k]);
            }
        }
        let all = exps_up_to(&f, 3);
        for _ in 0..20 {
            let a = &all[rng.gen_range(0..all.len())];
            let b = &all[rng.gen_range(0..all.len())];
            assert!(f.lambda_commutator_check(a, b).unwrap(), "{name} {a:?} {b:?}");
            for k in 1..=m {
                let lt: Exponent = (0..m).map(|t| if t + 1 < k { a[t] } else { 0 }).collect();
                let gt: Exponent = (0..m).map(|t| if t + 1 > k { a[t] } else { 0 }).collect();
                let want = a_pair(&f, k, &f.weight_of(&gt)) - a_pair(&f, k, &f.weight_of(&lt));
                assert_eq!(f.lambda_form(&f.e(k), a), want);
            }
        }
    }
}

fn a_pair(f: &PbwFrame, k: usize, g: &Weight) -> i64 {
    f.algebra().datum().pairing(&f.roots()[k - 1], g)
}

#[test]
fn order_is_partial_order() {
    let f = frame("A3", &longest("A3"));
    let s = f.slice(&Weight(vec![2, 2, 2]));
    for x in &s.exps {
        assert!(f.order_leq(x, x).unwrap());
        for y in &s.exps {
            if x != y && f.order_leq(x, y).unwrap() {
                assert!(!f.order_leq(y, x).unwrap());
                for z in &s.exps {
                    if f.order_leq(y, z).unwrap() {
                        assert!(f.order_leq(x, z).unwrap());
                    }
                }
            }
        }
    }
}
