use num_traits::Zero;
use proptest::prelude::*;
use quadop::exactla::{
    annihilator, echelonize, rank, rref, FieldKind, PrimeField, Rationals, SparseMat, SparseVec,
};
use quadop::Rational;

fn matrix(max_rows: usize, ncols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, ncols), 0..=max_rows)
}

fn to_mat(rows: &[Vec<i64>], ncols: usize) -> SparseMat {
    let dense: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| Rational::from_integer(x.into()))
                .collect()
        })
        .collect();
    SparseMat::from_dense(&dense, ncols).unwrap()
}

proptest! {
    #[test]
    fn rref_is_idempotent(rows in matrix(8, 6)) {
        let b = rref(&to_mat(&rows, 6), &Rationals).unwrap();
        prop_assert!(b.is_reduced(&Rationals));
        let again = rref(&SparseMat::new(6, b.rows().to_vec()).unwrap(), &Rationals).unwrap();
        prop_assert_eq!(again, b);
    }

    #[test]
    fn rank_ignores_row_order(rows in matrix(8, 6), seed in any::<u64>()) {
        let mut shuffled = rows.clone();
        let n = shuffled.len();
        for i in (1..n).rev() {
            shuffled.swap(i, (seed as usize).wrapping_mul(i + 7) % (i + 1));
        }
        let a = rref(&to_mat(&rows, 6), &Rationals).unwrap();
        let b = rref(&to_mat(&shuffled, 6), &Rationals).unwrap();
        prop_assert_eq!(a.rank(), b.rank());
        prop_assert_eq!(&a, &b);
        prop_assert!(a.rank() <= n.min(6));
    }

    #[test]
    fn large_primes_agree_with_rationals(rows in matrix(10, 7)) {
        let m = to_mat(&rows, 7);
        let q = rank(&m, FieldKind::Rational).unwrap();
        for p in [1_000_003u64, 1_000_033, 1_000_037] {
            prop_assert_eq!(rank(&m, FieldKind::Prime(p)).unwrap(), q);
        }
    }

    #[test]
    fn annihilator_is_an_involution(rows in matrix(6, 6), signs in prop::collection::vec(prop::bool::ANY, 6)) {
        let form: Vec<Vec<Rational>> = (0..6)
            .map(|i| (0..6).map(|j| {
                if i != j { Rational::zero() }
                else if signs[i] { Rational::from_integer(1.into()) }
                else { Rational::from_integer((-1).into()) }
            }).collect())
            .collect();
        let s = rref(&to_mat(&rows, 6), &Rationals).unwrap();
        let perp = annihilator(&s, &form).unwrap();
        prop_assert_eq!(perp.rank() + s.rank(), 6);
        prop_assert_eq!(annihilator(&perp, &form).unwrap(), s);
    }
}

#[test]
fn prime_echelon_matches_rational_on_small_example() {
    let p = PrimeField::new(7).unwrap();
    let rows: Vec<SparseVec<u64>> = vec![
        SparseVec::from_entries(&p, 3, vec![(0, 1), (1, 2)]).unwrap(),
        SparseVec::from_entries(&p, 3, vec![(0, 3), (1, 6)]).unwrap(),
    ];
    assert_eq!(echelonize(&p, 3, rows).rank(), 1);
}
