mod common;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use strictpoly::zlinalg::*;

fn matrix(max_rows: usize, max_cols: usize, bound: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_rows, 1..=max_cols)
        .prop_flat_map(move |(r, c)| prop::collection::vec(prop::collection::vec(-bound..=bound, c), r))
}

/// A unimodular matrix built from a random walk of elementary operations.
fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec((0..n, 0..n, -3i64..=3, any::<bool>()), 0..12).prop_map(move |ops| {
        let mut m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        for (a, b, k, swap) in ops {
            if a == b {
                continue;
            }
            if swap {
                m.swap(a, b);
            } else {
                let source = m[b].clone();
                for (x, y) in m[a].iter_mut().zip(source) {
                    *x += k * y;
                }
            }
        }
        IntMatrix::from_rows(&m)
    })
}

fn chain(diag: &[BigInt]) -> bool {
    diag.iter().all(|x| x.is_positive()) && diag.windows(2).all(|w| (&w[1] % &w[0]).is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn smith_decomposition(a in matrix(6, 6, 25)) {
        let m = IntMatrix::from_rows(&a);
        let dec = snf(&m);
        prop_assert_eq!(dec.left.mul(&m).unwrap().mul(&dec.right).unwrap(), dec.diagonal_matrix());
        prop_assert_eq!(dec.left.determinant().unwrap().abs(), BigInt::one());
        prop_assert_eq!(dec.right.determinant().unwrap().abs(), BigInt::one());
        prop_assert!(chain(&dec.diag));
        prop_assert_eq!(invariant_factors(&m), dec.diag.clone());
        let mut prefix = BigInt::one();
        for k in 1..=a.len().min(a[0].len()).min(4) {
            prefix = dec.diag.get(k - 1).map_or_else(BigInt::zero, |d| prefix * d);
            prop_assert_eq!(&prefix, &common::big(common::determinantal_divisor(&a, k)));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn invariant_under_unimodular_change(
        a in matrix(4, 4, 10).prop_flat_map(|a| {
            let (r, c) = (a.len(), a[0].len());
            (Just(a), unimodular(r), unimodular(c))
        })
    ) {
        let (a, p, q) = a;
        let m = IntMatrix::from_rows(&a);
        let moved = p.mul(&m).unwrap().mul(&q).unwrap();
        prop_assert_eq!(invariant_factors(&moved), invariant_factors(&m));
    }

    #[test]
    fn hermite_form(a in matrix(5, 6, 12)) {
        let m = IntMatrix::from_rows(&a);
        let (h, v, rank) = hnf_with_transform(&m);
        prop_assert_eq!(m.mul(&v).unwrap(), h.clone());
        prop_assert_eq!(v.determinant().unwrap().abs(), BigInt::one());
        prop_assert_eq!(rank, invariant_factors(&m).len());
        let mut last_pivot_row: Option<usize> = None;
        for k in 0..h.cols() {
            let col = h.column(k);
            let Some(r) = col.iter().position(|x| !x.is_zero()) else {
                prop_assert!(k >= rank);
                continue;
            };
            prop_assert!(k < rank);
            prop_assert!(last_pivot_row.is_none_or(|prev| r > prev));
            prop_assert!(col[r].is_positive());
            for j in 0..k {
                prop_assert!(!h[(r, j)].is_negative() && h[(r, j)] < col[r]);
            }
            last_pivot_row = Some(r);
        }
    }

    #[test]
    fn kernel_is_saturated(a in matrix(4, 6, 8)) {
        let m = IntMatrix::from_rows(&a);
        let k = integer_kernel(&m);
        let rank = invariant_factors(&m).len();
        prop_assert_eq!(k.cols(), m.cols() - rank);
        if k.cols() > 0 {
            prop_assert!(m.mul(&k).unwrap().is_zero());
            // A saturated lattice has trivial quotient torsion: all invariant factors are 1.
            let factors = invariant_factors(&k);
            prop_assert_eq!(factors.len(), k.cols());
            prop_assert!(factors.iter().all(|x| x.is_one()));
        }
    }

    #[test]
    fn structure_agrees_with_dense(a in matrix(6, 8, 6), perm_seed in any::<u64>()) {
        let m = IntMatrix::from_rows(&a);
        let g = FPGroup::from_dense(&m);
        let s = ab_structure(&g);
        prop_assert_eq!(&s, &ab_structure_dense(&g));
        let (orders, free) = {
            let d = invariant_factors(&m);
            (d.iter().map(|x| x.magnitude().clone()).collect::<Vec<BigUint>>(), m.rows() - d.len())
        };
        prop_assert_eq!(&s, &AbGroup::from_orders(free, orders));

        // Permuting, negating and duplicating relations leaves the group unchanged.
        let mut cols: Vec<usize> = (0..m.cols()).collect();
        let mut x = perm_seed;
        for i in (1..cols.len()).rev() {
            x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            cols.swap(i, (x >> 33) as usize % (i + 1));
        }
        let mut sparse = SparseMatrix::new(m.rows());
        for (t, &j) in cols.iter().enumerate() {
            let sign = if (x >> t) & 1 == 1 { -1 } else { 1 };
            let column: Vec<(usize, BigInt)> =
                m.column(j).into_iter().enumerate().map(|(i, v)| (i, v * sign)).collect();
            sparse.push_column(column.clone()).unwrap();
            if t % 3 == 0 {
                sparse.push_column(column).unwrap();
            }
        }
        prop_assert_eq!(ab_structure(&FPGroup::new(m.rows(), sparse).unwrap()), s);
    }

    #[test]
    fn sparse_roundtrip(a in matrix(5, 5, 3)) {
        let m = IntMatrix::from_rows(&a);
        let s = SparseMatrix::from_dense(&m);
        prop_assert_eq!(s.to_dense(), m.clone());
        prop_assert_eq!(s.nonzeros(), m.entries().iter().filter(|x| !x.is_zero()).count());
        let json = serde_json::to_string(&SparseTriplets::from(&s)).unwrap();
        let back: SparseTriplets = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(SparseMatrix::try_from(back).unwrap(), s);
    }

    #[test]
    fn group_json_roundtrip(free in 0usize..3, orders in prop::collection::vec(1u64..200, 0..5)) {
        let g = AbGroup::from_orders(free, orders.iter().map(|&x| BigUint::from(x)));
        let product: BigUint = orders.iter().map(|&x| BigUint::from(x)).product();
        prop_assert_eq!(g.torsion_order(), product);
        let back: AbGroup = serde_json::from_str(&serde_json::to_string(&g).unwrap()).unwrap();
        prop_assert_eq!(back, g);
    }
}

#[test]
fn determinant_oracle_agrees() {
    let a = vec![vec![2, -1, 0, 3], vec![1, 4, -2, 0], vec![0, 5, 1, -1], vec![3, 0, 2, 2]];
    let rows: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let m = IntMatrix::from_rows(&a);
    assert_eq!(m.determinant().unwrap(), BigInt::from(common::laplace_det(&rows)));
}

#[test]
fn known_smith_forms() {
    let m = IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]);
    assert_eq!(invariant_factors(&m), [2, 6, 12].map(BigInt::from));
    let m = IntMatrix::from_rows(&[[6, 0], [0, 4]]);
    assert_eq!(invariant_factors(&m), [2, 12].map(BigInt::from));
    assert!(invariant_factors(&IntMatrix::zeros(3, 2)).is_empty());
}
