mod common;

use common::{naive_rank, q};
use lieschur::bounds::{bosko_bound, nice_bound, salemkar_bound, theorem1_region};
use lieschur::constructions::{abelian, filiform, free_nilpotent, heisenberg, witt_dim};
use lieschur::io::{parse_algebra_file, write_algebra_file};
use lieschur::lie::direct_sum;
use lieschur::ratlin::{kernel_basis, rank};
use lieschur::{multiplier_dim, LieAlgebra, Matrix, Rational, Subspace};
use proptest::prelude::*;

fn small_rows(max_rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, cols), 0..=max_rows)
}

fn to_rat(rows: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| q(x)).collect())
        .collect()
}

fn matrix(cols: usize, rows: &[Vec<i64>]) -> Matrix {
    Matrix::from_rows(cols, to_rat(rows)).unwrap()
}

fn zoo() -> Vec<LieAlgebra> {
    vec![
        abelian(3),
        heisenberg(1).unwrap(),
        heisenberg(2).unwrap(),
        filiform(4).unwrap(),
        filiform(5).unwrap(),
        free_nilpotent(2, 3).unwrap(),
        direct_sum(&heisenberg(1).unwrap(), &abelian(1)),
    ]
}

/// Unit lower-triangular times unit upper-triangular: always invertible over Z.
fn unimodular(n: usize, lower: &[i64], upper: &[i64]) -> Matrix {
    let mut lo = Matrix::identity(n);
    let mut up = Matrix::identity(n);
    let mut it = 0;
    for i in 0..n {
        for j in 0..i {
            lo.set(i, j, q(lower[it]));
            up.set(j, i, q(upper[it]));
            it += 1;
        }
    }
    lo.mul(&up).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity(cols in 1usize..6, rows in small_rows(6, 5)) {
        let rows: Vec<Vec<i64>> = rows.into_iter().map(|r| r[..cols].to_vec()).collect();
        let m = matrix(cols, &rows);
        // kernel of the map x -> m x
        prop_assert_eq!(rank(&m) + kernel_basis(&m).dim(), cols);
    }

    #[test]
    fn rank_matches_naive_elimination(rows in small_rows(6, 5)) {
        let m = matrix(5, &rows);
        prop_assert_eq!(rank(&m), naive_rank(to_rat(&rows)));
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
    }

    #[test]
    fn rank_invariant_under_row_scaling_and_permutation(
        rows in small_rows(5, 4),
        scale in prop::collection::vec(1i64..=5, 5),
        rot in 0usize..5,
    ) {
        let base = rank(&matrix(4, &rows));
        let mut scaled: Vec<Vec<i64>> = rows
            .iter()
            .zip(&scale)
            .map(|(r, &s)| r.iter().map(|x| x * s).collect())
            .collect();
        if !scaled.is_empty() {
            let k = rot % scaled.len();
            scaled.rotate_left(k);
        }
        prop_assert_eq!(rank(&matrix(4, &scaled)), base);
    }

    #[test]
    fn grassmann(a in small_rows(4, 5), b in small_rows(4, 5)) {
        let u = Subspace::span(5, to_rat(&a)).unwrap();
        let v = Subspace::span(5, to_rat(&b)).unwrap();
        let s = u.sum(&v).unwrap();
        let i = u.intersection(&v).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
        prop_assert!(s.contains_subspace(&u).unwrap() && u.contains_subspace(&i).unwrap());
    }

    #[test]
    fn multiplier_is_basis_invariant(
        which in 0usize..7,
        lower in prop::collection::vec(-2i64..=2, 15),
        upper in prop::collection::vec(-2i64..=2, 15),
    ) {
        let l = &zoo()[which];
        let p = unimodular(l.dim(), &lower, &upper);
        let l2 = l.change_basis(&p).unwrap();
        prop_assert!(l2.validate().is_ok());
        prop_assert_eq!(multiplier_dim(&l2), multiplier_dim(l));
        prop_assert_eq!(l2.structural_profile().unwrap(), l.structural_profile().unwrap());
    }

    #[test]
    fn quotient_dimension(which in 0usize..7, pick in prop::collection::vec(any::<bool>(), 8)) {
        let l = &zoo()[which];
        let ideal = l.derived_subalgebra().sum(&central_part(l, &pick)).unwrap();
        let q = l.quotient(&ideal).unwrap();
        prop_assert_eq!(q.algebra.dim() + ideal.dim(), l.dim());
        prop_assert!(q.algebra.validate().is_ok());
    }

    #[test]
    fn direct_sum_profile_adds(a in 0usize..7, b in 0usize..7) {
        let (h, k) = (&zoo()[a], &zoo()[b]);
        let (ph, pk) = (h.structural_profile().unwrap(), k.structural_profile().unwrap());
        let ps = direct_sum(h, k).structural_profile().unwrap();
        prop_assert_eq!(ps.n, ph.n + pk.n);
        prop_assert_eq!(ps.m, ph.m + pk.m);
        prop_assert_eq!(ps.d, ph.d + pk.d);
        prop_assert_eq!(ps.gens, ph.gens + pk.gens);
        prop_assert_eq!(ps.c, ph.c.max(pk.c));
    }

    #[test]
    fn round_trip(which in 0usize..7, lower in prop::collection::vec(-2i64..=2, 15)) {
        let l = &zoo()[which];
        let p = unimodular(l.dim(), &lower, &[0; 15]);
        let l2 = l.change_basis(&p).unwrap();
        let text = write_algebra_file(&l2);
        prop_assert_eq!(parse_algebra_file(&text).unwrap(), l2);
    }

    #[test]
    fn necklace(n in 1u64..5, big_d in 1u64..10) {
        let total: u128 = (1..=big_d)
            .filter(|d| big_d % d == 0)
            .map(|d| d as u128 * witt_dim(n, d).unwrap())
            .sum();
        prop_assert_eq!(total, (n as u128).pow(big_d as u32));
    }

    #[test]
    fn bosko_monotone(gens in 1u64..5, c in 1u64..6) {
        prop_assert!(bosko_bound(gens, c).unwrap() <= bosko_bound(gens, c + 1).unwrap());
        prop_assert!(bosko_bound(gens, c).unwrap() <= bosko_bound(gens + 1, c).unwrap());
    }

    #[test]
    fn region_implies_dominance(n in 3u64..60, m in 1u64..60, d in 1u64..60) {
        prop_assume!(m < n && d < n);
        if theorem1_region(n, m, d) {
            prop_assert!(nice_bound(n, m).unwrap() <= salemkar_bound(n, m, d).unwrap());
        }
    }
}

fn central_part(l: &LieAlgebra, pick: &[bool]) -> Subspace {
    let vs: Vec<Vec<Rational>> = l
        .center()
        .basis_vectors()
        .into_iter()
        .zip(pick)
        .filter(|(_, &p)| p)
        .map(|(v, _)| v)
        .collect();
    Subspace::span(l.dim(), vs).unwrap()
}

#[test]
fn lower_central_terms_are_ideals() {
    for l in zoo() {
        for t in &l.lower_central_series().terms {
            assert!(l.is_ideal(t).unwrap());
        }
    }
}
