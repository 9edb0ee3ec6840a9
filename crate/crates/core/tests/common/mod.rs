//! Test-only oracles, kept independent of the library's elimination and
//! chain-complex code.
#![allow(dead_code)]

use std::collections::BTreeMap;

use lieschur::LieAlgebra;
use num::{BigInt, BigRational, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Plain Gaussian elimination over fractions, pivoting on the first nonzero
/// entry found scanning rows then columns.
pub fn naive_rank(mut rows: Vec<Vec<Q>>) -> usize {
    let mut rank = 0;
    while let Some((r, c)) = rows
        .iter()
        .enumerate()
        .find_map(|(r, row)| row.iter().position(|x| !x.is_zero()).map(|c| (r, c)))
    {
        let pivot = rows.swap_remove(r);
        for row in rows.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot[c];
            for (x, p) in row.iter_mut().zip(&pivot) {
                *x -= &f * p;
            }
        }
        rank += 1;
    }
    rank
}

/// `e_a ∧ e_b` as (sign, sorted key), or `None` when `a == b`.
fn wedge(a: usize, b: usize) -> Option<(i64, (usize, usize))> {
    match a.cmp(&b) {
        std::cmp::Ordering::Less => Some((1, (a, b))),
        std::cmp::Ordering::Greater => Some((-1, (b, a))),
        std::cmp::Ordering::Equal => None,
    }
}

/// Explicit boundary matrices built from wedge arithmetic over keyed maps,
/// returned as lists of columns.
pub fn oracle_boundaries(l: &LieAlgebra) -> (Vec<Vec<Q>>, Vec<Vec<Q>>) {
    let n = l.dim();
    let mut pair_keys = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a < b {
                pair_keys.push((a, b));
            }
        }
    }
    let pos: BTreeMap<(usize, usize), usize> =
        pair_keys.iter().enumerate().map(|(i, k)| (*k, i)).collect();
    let br =
        |a: usize, b: usize| -> Vec<Q> { (0..n).map(|k| l.constant(a, b, k).clone()).collect() };

    let d2: Vec<Vec<Q>> = pair_keys.iter().map(|&(a, b)| br(a, b)).collect();

    let mut d3 = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                let mut col = vec![Q::zero(); pair_keys.len()];
                let terms = [((a, b), c, 1i64), ((a, c), b, -1), ((b, c), a, 1)];
                for ((x, y), z, s) in terms {
                    for (k, coeff) in br(x, y).into_iter().enumerate() {
                        if coeff.is_zero() {
                            continue;
                        }
                        if let Some((sign, key)) = wedge(k, z) {
                            col[pos[&key]] += coeff * q(s * sign);
                        }
                    }
                }
                d3.push(col);
            }
        }
    }
    (d2, d3)
}

/// `C(n,2) - rank d2 - rank d3` via the naive oracle.
pub fn oracle_multiplier(l: &LieAlgebra) -> usize {
    let n = l.dim();
    let (d2, d3) = oracle_boundaries(l);
    n * n.saturating_sub(1) / 2 - naive_rank(d2) - naive_rank(d3)
}
