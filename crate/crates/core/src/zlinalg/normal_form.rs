//! Hermite and Smith normal forms over the integers.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Unimodular diagonalization `U·A·V = D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub left: IntMatrix,
    /// Nonzero diagonal entries of `D`, positive, each dividing the next.
    pub diag: Vec<BigInt>,
    pub right: IntMatrix,
    pub rows: usize,
    pub cols: usize,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    pub fn diagonal_matrix(&self) -> IntMatrix {
        IntMatrix::diagonal(self.rows, self.cols, &self.diag)
    }
}

/// Smith normal form with both transforms.
pub fn snf(a: &IntMatrix) -> SmithDecomposition {
    let (diag, transforms) = smith_reduce(a.clone(), true);
    let (left, right) = transforms.expect("transforms requested");
    SmithDecomposition { left, diag, right, rows: a.rows(), cols: a.cols() }
}

/// Nonzero invariant factors of `a`, skipping the transforms.
pub fn invariant_factors(a: &IntMatrix) -> Vec<BigInt> {
    smith_reduce(a.clone(), false).0
}

fn min_abs_position(a: &IntMatrix, cells: impl Iterator<Item = (usize, usize)>) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), &BigUint)> = None;
    for (i, j) in cells {
        let x = &a[(i, j)];
        if x.is_zero() {
            continue;
        }
        let m = x.magnitude();
        if m.is_one() {
            return Some((i, j));
        }
        match best {
            Some((_, b)) if b <= m => {}
            _ => best = Some(((i, j), m)),
        }
    }
    best.map(|(pos, _)| pos)
}

fn smith_reduce(mut a: IntMatrix, with_transforms: bool) -> (Vec<BigInt>, Option<(IntMatrix, IntMatrix)>) {
    let (rows, cols) = (a.rows(), a.cols());
    let mut u = with_transforms.then(|| IntMatrix::identity(rows));
    let mut v = with_transforms.then(|| IntMatrix::identity(cols));
    let mut rank = 0;

    for k in 0..rows.min(cols) {
        let block = (k..rows).flat_map(|i| (k..cols).map(move |j| (i, j)));
        let Some((pi, pj)) = min_abs_position(&a, block) else {
            break;
        };
        a.swap_rows(k, pi);
        a.swap_cols(k, pj);
        if let Some(u) = u.as_mut() {
            u.swap_rows(k, pi);
        }
        if let Some(v) = v.as_mut() {
            v.swap_cols(k, pj);
        }

        loop {
            let mut clean = true;
            for i in k + 1..rows {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let q = a[(i, k)].div_floor(&a[(k, k)]);
                a.sub_row_multiple(i, k, &q);
                if let Some(u) = u.as_mut() {
                    u.sub_row_multiple(i, k, &q);
                }
                clean &= a[(i, k)].is_zero();
            }
            for j in k + 1..cols {
                if a[(k, j)].is_zero() {
                    continue;
                }
                let q = a[(k, j)].div_floor(&a[(k, k)]);
                a.sub_col_multiple(j, k, &q);
                if let Some(v) = v.as_mut() {
                    v.sub_col_multiple(j, k, &q);
                }
                clean &= a[(k, j)].is_zero();
            }
            if clean {
                break;
            }
            // Remainders are strictly smaller than the pivot; move the smallest in.
            let cross = (k + 1..rows).map(|i| (i, k)).chain((k + 1..cols).map(|j| (k, j)));
            let (pi, pj) = min_abs_position(&a, cross).expect("some remainder is nonzero");
            a.swap_rows(k, pi);
            a.swap_cols(k, pj);
            if let Some(u) = u.as_mut() {
                u.swap_rows(k, pi);
            }
            if let Some(v) = v.as_mut() {
                v.swap_cols(k, pj);
            }
        }

        if a[(k, k)].is_negative() {
            a.negate_row(k);
            if let Some(u) = u.as_mut() {
                u.negate_row(k);
            }
        }
        rank += 1;
    }

    let mut diag: Vec<BigInt> = (0..rank).map(|k| a[(k, k)].clone()).collect();
    divisibility_sweep(&mut diag, u.as_mut(), v.as_mut());
    (diag, u.zip(v))
}

/// Replace each pair `(dᵢ, dⱼ)`, `i < j`, by `(gcd, lcm)` so that the list becomes a
/// divisibility chain, applying the matching unimodular moves to the transforms.
fn divisibility_sweep(diag: &mut [BigInt], mut u: Option<&mut IntMatrix>, mut v: Option<&mut IntMatrix>) {
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            let (a, b) = (diag[i].clone(), diag[j].clone());
            if b.is_multiple_of(&a) {
                continue;
            }
            let eg = a.extended_gcd(&b);
            let (g, x, y) = (eg.gcd, eg.x, eg.y);
            let a_g = &a / &g;
            let b_g = &b / &g;
            if let Some(u) = u.as_deref_mut() {
                u.combine_rows(i, j, [&x, &y, &(-&b_g), &a_g]);
            }
            if let Some(v) = v.as_deref_mut() {
                v.combine_cols(i, j, [&BigInt::one(), &(-(&y * &b_g)), &BigInt::one(), &(&x * &a_g)]);
            }
            diag[j] = &a * &b_g;
            diag[i] = g;
        }
    }
}

/// Column-style Hermite normal form `H = A·V`.
pub fn hnf(a: &IntMatrix) -> IntMatrix {
    hnf_with_transform(a).0
}

/// Column-style Hermite normal form together with the unimodular `V` and the rank.
///
/// Pivots are positive; in each pivot row, entries in earlier pivot columns are
/// reduced into `[0, pivot)`. Columns `rank..` of `H` are zero.
pub fn hnf_with_transform(a: &IntMatrix) -> (IntMatrix, IntMatrix, usize) {
    let (rows, cols) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut v = IntMatrix::identity(cols);
    let mut c = 0;
    for i in 0..rows {
        if c == cols {
            break;
        }
        while let Some((_, j)) = min_abs_position(&h, (c..cols).map(|j| (i, j))) {
            h.swap_cols(c, j);
            v.swap_cols(c, j);
            let mut clean = true;
            for j in c + 1..cols {
                if h[(i, j)].is_zero() {
                    continue;
                }
                let q = h[(i, j)].div_floor(&h[(i, c)]);
                h.sub_col_multiple(j, c, &q);
                v.sub_col_multiple(j, c, &q);
                clean &= h[(i, j)].is_zero();
            }
            if clean {
                break;
            }
        }
        if h[(i, c)].is_zero() {
            continue;
        }
        if h[(i, c)].is_negative() {
            h.negate_col(c);
            v.negate_col(c);
        }
        for j in 0..c {
            let q = h[(i, j)].div_floor(&h[(i, c)]);
            h.sub_col_multiple(j, c, &q);
            v.sub_col_multiple(j, c, &q);
        }
        c += 1;
    }
    (h, v, c)
}

/// Basis of the integer kernel `{x : A·x = 0}` as columns.
pub fn integer_kernel(a: &IntMatrix) -> IntMatrix {
    let (_, v, rank) = hnf_with_transform(a);
    let cols: Vec<usize> = (rank..a.cols()).collect();
    let all_rows: Vec<usize> = (0..a.cols()).collect();
    v.submatrix(&all_rows, &cols)
}

/// Echelon basis of a sublattice of `ℤ^dim`, grown one generator at a time.
///
/// Each stored vector has a distinct pivot (first nonzero coordinate, positive).
#[derive(Debug, Clone, Default)]
pub struct ColumnLattice {
    dim: usize,
    basis: BTreeMap<usize, Vec<BigInt>>,
}

impl ColumnLattice {
    pub fn new(dim: usize) -> Self {
        ColumnLattice { dim, basis: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn insert_sparse(&mut self, entries: &[(usize, BigInt)]) {
        let mut v = vec![BigInt::zero(); self.dim];
        for (i, x) in entries {
            v[*i] += x;
        }
        self.insert(v);
    }

    pub fn insert(&mut self, mut v: Vec<BigInt>) {
        assert_eq!(v.len(), self.dim);
        let mut start = 0;
        loop {
            let Some(r) = (start..self.dim).find(|&i| !v[i].is_zero()) else {
                return;
            };
            match self.basis.get_mut(&r) {
                None => {
                    if v[r].is_negative() {
                        v.iter_mut().for_each(|x| *x = -std::mem::take(x));
                    }
                    self.basis.insert(r, v);
                    return;
                }
                Some(b) => {
                    if v[r].is_multiple_of(&b[r]) {
                        let q = &v[r] / &b[r];
                        for (x, y) in v.iter_mut().zip(b.iter()).skip(r) {
                            *x -= &q * y;
                        }
                    } else {
                        let eg = b[r].extended_gcd(&v[r]);
                        let b_g = &b[r] / &eg.gcd;
                        let v_g = &v[r] / &eg.gcd;
                        for k in r..self.dim {
                            let (x, y) = (b[k].clone(), v[k].clone());
                            b[k] = &eg.x * &x + &eg.y * &y;
                            v[k] = &b_g * &y - &v_g * &x;
                        }
                        if b[r].is_negative() {
                            b.iter_mut().for_each(|x| *x = -std::mem::take(x));
                        }
                    }
                    start = r + 1;
                }
            }
        }
    }

    /// The basis as the columns of a `dim × rank` matrix.
    pub fn to_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.dim, self.basis.len());
        for (j, b) in self.basis.values().enumerate() {
            for (i, x) in b.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }
}
