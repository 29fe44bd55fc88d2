//! Independent brute-force oracles for the exact linear algebra and the
//! labeled-poset enumeration.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use order_complement::incidence::{
    complement_matrix, det_complement_direct, det_complement_via_theorem,
};
use order_complement::linalg::{IntMatrix, IntPolynomial};
use order_complement::poset::{all_labeled_posets, antichain};
use proptest::prelude::*;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn parity(perm: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

/// Leibniz sum over all permutations.
fn leibniz(m: &IntMatrix) -> BigInt {
    let n = m.rows();
    permutations(n)
        .iter()
        .map(|perm| {
            let term: BigInt = (0..n).map(|i| m.get(i, perm[i]).clone()).product();
            if parity(perm) {
                term
            } else {
                -term
            }
        })
        .sum()
}

fn shift(m: &IntMatrix, x: i64) -> IntMatrix {
    let n = m.rows();
    m.sub(&IntMatrix::identity(n).scalar_mul(&BigInt::from(x)))
        .unwrap()
}

fn matrix_strategy(max_n: usize, range: i64) -> impl Strategy<Value = IntMatrix> {
    (0..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(-range..=range, n * n)
            .prop_map(move |v| IntMatrix::from_fn(n, n, |i, j| v[i * n + j]))
    })
}

#[test]
fn permutation_helper_counts() {
    assert_eq!(permutations(4).len(), 24);
    assert_eq!(permutations(0).len(), 1);
}

#[test]
fn j_minus_i_three_by_three() {
    let m = IntMatrix::all_ones(3).sub(&IntMatrix::identity(3)).unwrap();
    assert_eq!(leibniz(&m), BigInt::from(2));
    assert_eq!(m.determinant().unwrap(), BigInt::from(2));
}

#[test]
fn antichain_closed_form_against_leibniz() {
    // det(J − I) = (−1)^{n+1}(n − 1): eigenvalues n − 1 once and −1 with
    // multiplicity n − 1
    for n in 1..=7usize {
        let expect = if n % 2 == 1 { 1 } else { -1 } * (n as i64 - 1);
        let a = antichain(n);
        assert_eq!(
            leibniz(&complement_matrix(&a)),
            BigInt::from(expect),
            "n={n}"
        );
        assert_eq!(det_complement_direct(&a), BigInt::from(expect));
        assert_eq!(det_complement_via_theorem(&a), BigInt::from(expect));
    }
    for n in 8..=12usize {
        let expect = if n % 2 == 1 { 1 } else { -1 } * (n as i64 - 1);
        assert_eq!(
            det_complement_direct(&antichain(n)),
            BigInt::from(expect),
            "n={n}"
        );
    }
}

#[test]
fn labeled_enumeration_matches_brute_force() {
    // filter every strict relation table on n points by the order axioms
    for n in 0..=4usize {
        let off: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect();
        let mut brute: HashSet<Vec<bool>> = HashSet::new();
        for mask in 0u32..(1 << off.len()) {
            let mut t = vec![false; n * n];
            for i in 0..n {
                t[i * n + i] = true;
            }
            for (b, &(i, j)) in off.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    t[i * n + j] = true;
                }
            }
            let antisym = (0..n).all(|i| (0..n).all(|j| i == j || !(t[i * n + j] && t[j * n + i])));
            let trans = (0..n).all(|i| {
                (0..n).all(|j| (0..n).all(|k| !(t[i * n + j] && t[j * n + k]) || t[i * n + k]))
            });
            if antisym && trans {
                brute.insert(t);
            }
        }

        let generated = all_labeled_posets(n).unwrap();
        let tables: Vec<Vec<bool>> = generated
            .iter()
            .map(|p| {
                (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .map(|(i, j)| p.leq(i, j))
                    .collect()
            })
            .collect();
        let unique: HashSet<Vec<bool>> = tables.iter().cloned().collect();
        assert_eq!(unique.len(), tables.len(), "duplicates at n={n}");
        assert_eq!(unique, brute, "n={n}");
    }
    assert_eq!(all_labeled_posets(3).unwrap().len(), 19);
    assert_eq!(all_labeled_posets(4).unwrap().len(), 219);
}

proptest! {
    #[test]
    fn bareiss_matches_leibniz(m in matrix_strategy(6, 4)) {
        prop_assert_eq!(m.determinant().unwrap(), leibniz(&m));
    }

    #[test]
    fn berkowitz_matches_pointwise_determinants(m in matrix_strategy(6, 5)) {
        let n = m.rows();
        let p = m.charpoly().unwrap();
        prop_assert_eq!(p.degree(), Some(n));
        let lead = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
        prop_assert_eq!(p.leading_coefficient(), lead);
        // n + 1 points pin down a degree-n polynomial
        for x in -3..=(n as i64) {
            prop_assert_eq!(p.eval(&BigInt::from(x)), leibniz(&shift(&m, x)));
        }
    }

    #[test]
    fn charpoly_at_zero_is_determinant(m in matrix_strategy(9, 3)) {
        prop_assert_eq!(m.charpoly().unwrap().eval(&BigInt::zero()), m.determinant().unwrap());
    }

    #[test]
    fn sparse_zero_one_matrices(m in (0..=8usize).prop_flat_map(|n| {
        prop::collection::vec(prop::bool::weighted(0.3), n * n)
            .prop_map(move |v| IntMatrix::from_fn(n, n, |i, j| u8::from(v[i * n + j])))
    })) {
        // the degenerate pivot path is the common case here
        prop_assert_eq!(m.determinant().unwrap(), m.charpoly().unwrap().eval(&BigInt::zero()));
        if m.rows() <= 6 {
            prop_assert_eq!(m.determinant().unwrap(), leibniz(&m));
        }
    }

    #[test]
    fn polynomial_product_evaluates_pointwise(
        a in prop::collection::vec(-20i64..20, 0..6),
        b in prop::collection::vec(-20i64..20, 0..6),
        x in -5i64..5,
    ) {
        let (pa, pb) = (IntPolynomial::from_i64s(&a), IntPolynomial::from_i64s(&b));
        let x = BigInt::from(x);
        prop_assert_eq!(pa.mul(&pb).eval(&x), pa.eval(&x) * pb.eval(&x));
        prop_assert_eq!(pa.add(&pb).eval(&x), pa.eval(&x) + pb.eval(&x));
    }
}

#[test]
fn exact_arithmetic_does_not_overflow() {
    // 30×30 matrix with entries near 2^62: determinant far beyond i128
    let big = BigInt::from(i64::MAX);
    let m = IntMatrix::from_fn(30, 30, |i, j| {
        if i == j {
            big.clone()
        } else if j == i + 1 {
            BigInt::one()
        } else {
            BigInt::zero()
        }
    });
    assert_eq!(m.determinant().unwrap(), big.pow(30));
    assert_eq!(m.charpoly().unwrap().eval(&BigInt::zero()), big.pow(30));
}
