//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use strictpoly::zlinalg::IntMatrix;

/// Determinant by cofactor expansion along the first row.
pub fn laplace_det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    let mut total = 0;
    for j in 0..n {
        if m[0][j] == 0 {
            continue;
        }
        let minor: Vec<Vec<i128>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect()).collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        total += sign * m[0][j] * laplace_det(&minor);
    }
    total
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// gcd of all `k×k` minors; 0 when every minor vanishes.
pub fn determinantal_divisor(a: &[Vec<i64>], k: usize) -> i128 {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut g: i128 = 0;
    for r in subsets(rows, k) {
        for c in subsets(cols, k) {
            let minor: Vec<Vec<i128>> = r.iter().map(|&i| c.iter().map(|&j| a[i][j] as i128).collect()).collect();
            g = g.gcd(&laplace_det(&minor));
        }
    }
    g
}

/// A random `rows × cols` matrix with entries in `[-bound, bound]`; about a third of
/// the samples are products of thinner factors, so rank deficiency is common.
pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut fill = |r: usize, c: usize, b: i64| -> Vec<Vec<i64>> {
        (0..r).map(|_| (0..c).map(|_| rng.gen_range(-b..=b)).collect()).collect()
    };
    if rows.min(cols) > 1 && fill(1, 1, 2)[0][0] == 0 {
        let inner = (rows.min(cols) - 1).max(1);
        let p = fill(rows, inner, 3);
        let q = fill(inner, cols, 3);
        (0..rows).map(|i| (0..cols).map(|j| (0..inner).map(|t| p[i][t] * q[t][j]).sum()).collect()).collect()
    } else {
        fill(rows, cols, bound)
    }
}

pub fn to_matrix(a: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_rows(a)
}

pub fn big(x: i128) -> BigInt {
    BigInt::from(x)
}
