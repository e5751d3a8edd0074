//! Gcd in `Z[v]` by the primitive polynomial remainder sequence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::Laurent;

fn trim(mut a: Vec<BigInt>) -> Vec<BigInt> {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive(a: Vec<BigInt>) -> Vec<BigInt> {
    let c = content(&a);
    let sign = a.last().is_some_and(|x| x.is_negative());
    a.into_iter()
        .map(|x| {
            let y = x / &c;
            if sign {
                -y
            } else {
                y
            }
        })
        .collect()
}

/// Pseudo-remainder of `a` by `b` (both nonzero, dense ascending).
fn pseudo_rem(mut a: Vec<BigInt>, b: &[BigInt]) -> Vec<BigInt> {
    let m = b.len();
    let lb = b.last().unwrap();
    while a.len() >= m {
        let la = a.last().unwrap().clone();
        let k = a.len() - m;
        for x in a.iter_mut() {
            *x *= lb;
        }
        for (j, y) in b.iter().enumerate() {
            a[k + j] -= &la * y;
        }
        a = trim(a);
        if a.is_empty() {
            break;
        }
    }
    a
}

/// Primitive gcd (positive leading coefficient) of the polynomial parts of
/// two nonzero Laurent polynomials, ignoring powers of `v`.
pub(crate) fn primitive_gcd(a: &Laurent, b: &Laurent) -> Laurent {
    let mut x = primitive(a.dense().to_vec());
    let mut y = primitive(b.dense().to_vec());
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            return Laurent::one();
        }
        let r = trim(pseudo_rem(x, &y));
        x = y;
        y = if r.is_empty() { r } else { primitive(r) };
    }
    Laurent::from_raw(0, x)
}
