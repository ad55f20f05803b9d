//! Hankel minors by fraction-free elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rat::Rat;

/// Determinant of a square rational matrix. Denominators are cleared with
/// their lcm and the integer matrix is reduced by Bareiss elimination, so
/// every intermediate entry is itself an integer minor.
pub fn det_fraction_free(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    if n == 0 {
        return Rat::one();
    }
    let lcm = m
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            assert_eq!(row.len(), n, "matrix must be square");
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Rat::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = Rat::from_int(a[n - 1][n - 1].clone()) / Rat::from_int(num_traits::pow(lcm, n));
    if negate {
        -det
    } else {
        det
    }
}

fn hankel(moments: &[Rat], size: usize, shift: usize) -> Vec<Vec<Rat>> {
    (0..size)
        .map(|i| (0..size).map(|j| moments[i + j + shift].clone()).collect())
        .collect()
}

/// Leading principal minors of `[s_{i+j}]` and `[s_{i+j+1}]` for every size
/// fully determined by `s_0 ..= s_depth`: sizes `1 ..= depth/2 + 1` for the
/// first family and `1 ..= (depth+1)/2` for the shifted one.
pub fn hankel_determinants(moments: &[Rat], depth: usize) -> Result<(Vec<Rat>, Vec<Rat>)> {
    if moments.len() < depth + 1 {
        return Err(Error::TooFewMoments {
            needed: depth + 1,
            got: moments.len(),
        });
    }
    let unshifted = (1..=depth / 2 + 1)
        .map(|k| det_fraction_free(&hankel(moments, k, 0)))
        .collect();
    let shifted = (1..=depth.div_ceil(2))
        .map(|k| det_fraction_free(&hankel(moments, k, 1)))
        .collect();
    Ok((unshifted, shifted))
}
